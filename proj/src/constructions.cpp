/*
 * Copyright 2026 The hcvoronoi Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "hcv/constructions.hpp"

#include <string>

#include "hcv/conditions.hpp"
#include "hcv/error.hpp"
#include "hcv/game.hpp"

namespace hcv {

namespace {

Vertex v(std::string_view bits) { return parse_vertex(bits, static_cast<int>(bits.size())); }

Distribution by_layer(int d, const std::vector<Rational>& layer_weight) {
  std::vector<Rational> weights(cube_size(d));
  for (std::uint32_t x = 0; x < weights.size(); ++x) {
    weights[x] = layer_weight[static_cast<std::size_t>(layer(Vertex{x}))];
  }
  return Distribution::from_weights(d, std::move(weights));
}

void check_eps(const Rational& eps, const Rational& upper) {
  if (eps <= 0 || eps >= upper) {
    throw Error(ErrorCode::EpsOutOfRange, "eps = " + to_string(eps) + " not in (0, " + to_string(upper) + ")");
  }
}

}  // namespace

Distribution intro_example() {
  return make_distribution(3,
                           {{v("000"), make_rational(2, 5)},
                            {v("011"), make_rational(1, 5)},
                            {v("101"), make_rational(1, 5)},
                            {v("110"), make_rational(1, 5)}},
                           false);
}

Distribution coalition_example() {
  return make_distribution(3,
                           {{v("001"), make_rational(3, 10)},
                            {v("010"), make_rational(3, 10)},
                            {v("100"), make_rational(3, 10)},
                            {v("111"), make_rational(1, 10)}},
                           false);
}

Distribution no_equilibrium_odd(int d, const Rational& eps) {
  if (d < 3 || d % 2 == 0) throw Error(ErrorCode::BadDimensionParity, "need odd d >= 3");
  check_dimension(d);
  check_eps(eps, Rational(1, 2));
  const int top = (d + 1) / 2;
  std::vector<Rational> w(static_cast<std::size_t>(d) + 1);
  w[0] = Rational(1, 2) - eps;
  w[static_cast<std::size_t>(top)] = (Rational(1, 2) + eps) / Rational(binomial(d, top));
  return by_layer(d, w);
}

Distribution no_equilibrium_even(int d, const Rational& eps) {
  if (d < 4 || d % 2 == 1) throw Error(ErrorCode::BadDimensionParity, "need even d >= 4");
  check_dimension(d);
  check_eps(eps, Rational(1, 2));
  const Rational spread = (Rational(1, 2) + eps) / Rational(binomial(d - 1, d / 2));
  const std::uint32_t last = std::uint32_t{1} << (d - 1);
  std::vector<Rational> weights(cube_size(d));
  weights[0] = Rational(1, 2) - eps;
  for (std::uint32_t x = 0; x < weights.size(); ++x) {
    if ((x & last) == 0 && layer(Vertex{x}) == d / 2) weights[x] = spread;
  }
  return Distribution::from_weights(d, std::move(weights));
}

Distribution parity_example(int d) {
  if (d % 2 == 0) throw Error(ErrorCode::BadDimensionParity, "need odd d");
  check_dimension(d);
  // Half the vertices have even parity, so 2^(1-d) each normalizes.
  const Rational w(1, Integer(1) << (d - 1));
  std::vector<Rational> weights(cube_size(d));
  for (std::uint32_t x = 0; x < weights.size(); ++x) {
    if (layer(Vertex{x}) % 2 == 0) weights[x] = w;
  }
  return Distribution::from_weights(d, std::move(weights));
}

Distribution layered_d5(const Rational& eps) {
  check_eps(eps, Rational(3, 5));
  const Rational base = (1 - eps) / 16;
  std::vector<Rational> w(6);
  w[0] = base + Rational(3, 8) * eps;
  w[2] = base;
  w[4] = base + eps / 8;
  return by_layer(5, w);
}

std::string CatalogEntry::label() const {
  std::string out = name;
  if (d) out += " d=" + std::to_string(*d);
  if (eps) out += " eps=" + to_string(*eps);
  return out;
}

namespace {

Claim payoff_claim(Vertex a, Vertex b, int d, Rational expected) {
  std::string text = "payoff(" + to_bitstring(a, d) + ", " + to_bitstring(b, d) + ") = " + to_string(expected);
  return {std::move(text), [a, b, expected](const Distribution& dist) { return payoff(dist, a, b) == expected; }};
}

Claim no_equilibrium_claim() {
  return {"no equilibrium", [](const Distribution& dist) { return find_equilibria(dist).empty(); }};
}

Claim unique_equilibrium_claim(Vertex m, int d) {
  return {"equilibria = {(" + to_bitstring(m, d) + ", " + to_bitstring(m, d) + ")}",
          [m](const Distribution& dist) {
            EquilibriumSet expected;
            expected.pairs.emplace_back(m, m);
            return find_equilibria(dist) == expected;
          }};
}

Claim all_marginals_claim(Rational expected) {
  return {"w_i^0 = " + to_string(expected) + " for every i", [expected](const Distribution& dist) {
            for (int i = 1; i <= dist.dimension(); ++i) {
              if (marginal_zero(dist, i) != expected) return false;
            }
            return true;
          }};
}

CatalogEntry intro_entry() {
  CatalogEntry e{"intro_example", std::nullopt, std::nullopt, intro_example(), {}};
  e.claims.push_back(payoff_claim(v("111"), v("000"), 3, make_rational(3, 5)));
  e.claims.push_back(all_marginals_claim(make_rational(3, 5)));
  e.claims.push_back({"majority point 000", [](const Distribution& dist) {
                        auto r = majority_report(dist);
                        return r.majority_point == v("000");
                      }});
  e.claims.push_back(no_equilibrium_claim());
  e.claims.push_back({"(000, 000) is 2-local but not 3-local", [](const Distribution& dist) {
                        return is_k_local_equilibrium(dist, v("000"), v("000"), 2) &&
                               !is_k_local_equilibrium(dist, v("000"), v("000"), 3);
                      }});
  e.claims.push_back({"equals no_equilibrium_odd d=3 eps=1/10", [](const Distribution& dist) {
                        return dist == no_equilibrium_odd(3, make_rational(1, 10));
                      }});
  return e;
}

CatalogEntry coalition_entry() {
  CatalogEntry e{"coalition_example", std::nullopt, std::nullopt, coalition_example(), {}};
  e.claims.push_back(all_marginals_claim(make_rational(3, 5)));
  e.claims.push_back({"w_I^1 = 9/10 for every pair I", [](const Distribution& dist) {
                        for (std::uint32_t mask : subsets_of_size(3, 2)) {
                          if (coalition_weight(dist, CoordinateSet(mask), 1) != make_rational(9, 10)) return false;
                        }
                        return true;
                      }});
  e.claims.push_back({"global marginal condition fails", [](const Distribution& dist) {
                        return !check_global_sufficient(dist).holds;
                      }});
  e.claims.push_back({"pair coalition rule certifies (000, 000)", [](const Distribution& dist) {
                        const ExclusionRule rules[] = {{2, 1}};
                        return certify_equilibrium(dist, rules).certified();
                      }});
  e.claims.push_back(unique_equilibrium_claim(v("000"), 3));
  return e;
}

CatalogEntry uniform_entry(int d) {
  CatalogEntry e{"uniform", d, std::nullopt, uniform(d), {}};
  e.claims.push_back({"every ordered pair is an equilibrium", [](const Distribution& dist) {
                        const auto eq = find_equilibria(dist);
                        return eq.size() == std::size_t{dist.size()} * dist.size();
                      }});
  e.claims.push_back({"every payoff is 1/2", [](const Distribution& dist) {
                        for (std::uint32_t a = 0; a < dist.size(); ++a) {
                          for (std::uint32_t b = 0; b < dist.size(); ++b) {
                            if (payoff(dist, Vertex{a}, Vertex{b}) != Rational(1, 2)) return false;
                          }
                        }
                        return true;
                      }});
  return e;
}

CatalogEntry odd_entry(int d, const Rational& eps) {
  CatalogEntry e{"no_equilibrium_odd", d, eps, no_equilibrium_odd(d, eps), {}};
  e.claims.push_back(payoff_claim(complement(Vertex{0}, d), Vertex{0}, d, Rational(1, 2) + eps));
  const Rational closed = Rational(3, 4) - make_rational(1, 4L * d) - eps * (Rational(1, 2) + make_rational(1, 2L * d));
  e.claims.push_back(all_marginals_claim(closed));
  e.claims.push_back(no_equilibrium_claim());
  return e;
}

CatalogEntry even_entry(int d, const Rational& eps) {
  CatalogEntry e{"no_equilibrium_even", d, eps, no_equilibrium_even(d, eps), {}};
  e.claims.push_back({"payoff([d-1], 0...0) > 1/2", [d](const Distribution& dist) {
                        return payoff(dist, first_k(d - 1), Vertex{0}) > Rational(1, 2);
                      }});
  e.claims.push_back({"w_d^0 = 1", [d](const Distribution& dist) { return marginal_zero(dist, d) == 1; }});
  e.claims.push_back(no_equilibrium_claim());
  return e;
}

CatalogEntry parity_entry(int d) {
  CatalogEntry e{"parity_example", d, std::nullopt, parity_example(d), {}};
  e.claims.push_back({"payoff 1/2 for every non-antipodal pair", [d](const Distribution& dist) {
                        for (std::uint32_t a = 0; a < dist.size(); ++a) {
                          for (std::uint32_t b = 0; b < dist.size(); ++b) {
                            if (Vertex{b} == complement(Vertex{a}, d)) continue;
                            if (payoff(dist, Vertex{a}, Vertex{b}) != Rational(1, 2)) return false;
                          }
                        }
                        return true;
                      }});
  // Against an even point the antipode collects the even vertices beyond
  // distance d/2: more than half the weight iff d = 3 (mod 4). For d = 1 (mod 4)
  // the roles of the parity classes swap.
  const int winners = d % 4 == 3 ? 1 : 0;
  e.claims.push_back({winners ? "equilibria = odd-parity x odd-parity pairs" : "equilibria = even-parity x even-parity pairs",
                      [winners](const Distribution& dist) {
                        EquilibriumSet expected;
                        for (std::uint32_t a = 0; a < dist.size(); ++a) {
                          for (std::uint32_t b = 0; b < dist.size(); ++b) {
                            if (layer(Vertex{a}) % 2 == winners && layer(Vertex{b}) % 2 == winners) {
                              expected.pairs.emplace_back(Vertex{a}, Vertex{b});
                            }
                          }
                        }
                        return find_equilibria(dist) == expected;
                      }});
  if (d == 3) e.claims.push_back(payoff_claim(v("111"), v("000"), 3, make_rational(3, 4)));
  if (d == 5) e.claims.push_back(payoff_claim(v("11111"), v("00000"), 5, make_rational(5, 16)));
  return e;
}

CatalogEntry layered_entry(const Rational& eps) {
  CatalogEntry e{"layered_d5", 5, eps, layered_d5(eps), {}};
  e.claims.push_back(payoff_claim(v("00000"), v("11110"), 5, Rational(1, 2) - eps / 8));
  // X itself counts on the winning side too, so a layer-2 point collects w(0) + 7 w(2).
  e.claims.push_back(payoff_claim(v("11000"), v("11111"), 5, Rational(1, 2) - eps / 8));
  e.claims.push_back(payoff_claim(v("01111"), v("11100"), 5, Rational(1, 2) - eps / 8));
  e.claims.push_back({"odd layers lose to their antipode", [](const Distribution& dist) {
                        for (std::uint32_t x = 0; x < dist.size(); ++x) {
                          if (layer(Vertex{x}) % 2 == 0) continue;
                          if (payoff(dist, Vertex{x}, complement(Vertex{x}, 5)) >= Rational(1, 2)) return false;
                        }
                        return true;
                      }});
  e.claims.push_back(no_equilibrium_claim());
  return e;
}

CatalogEntry mixed_entry() {
  const Rational alpha(2, 3);
  const Rational p1(1, 5);
  const Rational p2(3, 5);
  CatalogEntry e{"mixed_product", 3, std::nullopt, mixed_product(3, alpha, p1, p2), {}};
  e.claims.push_back(all_marginals_claim(make_rational(8, 15)));
  e.claims.push_back(unique_equilibrium_claim(v("000"), 3));
  return e;
}

}  // namespace

std::vector<CatalogEntry> catalog() {
  std::vector<CatalogEntry> out;
  out.push_back(intro_entry());
  out.push_back(coalition_entry());
  out.push_back(uniform_entry(2));
  out.push_back(uniform_entry(3));
  for (int d : {3, 5}) {
    for (const auto& eps : {make_rational(1, 100), make_rational(1, 10)}) out.push_back(odd_entry(d, eps));
  }
  for (const auto& eps : {make_rational(1, 100), make_rational(1, 10)}) out.push_back(even_entry(4, eps));
  out.push_back(parity_entry(3));
  out.push_back(parity_entry(5));
  for (const auto& eps : {make_rational(1, 100), make_rational(1, 10), make_rational(1, 4), make_rational(1, 2)}) {
    out.push_back(layered_entry(eps));
  }
  out.push_back(mixed_entry());
  return out;
}

std::vector<std::string> construction_names() {
  return {"intro_example", "coalition_example", "uniform", "no_equilibrium_odd", "no_equilibrium_even",
          "parity_example", "layered_d5"};
}

Distribution construct_by_name(const std::string& name, std::optional<int> d, std::optional<Rational> eps) {
  const Rational default_eps(1, 10);
  if (name == "intro_example") return intro_example();
  if (name == "coalition_example" || name == "thm2_example") return coalition_example();
  if (name == "uniform") return uniform(d.value_or(3));
  if (name == "no_equilibrium_odd") return no_equilibrium_odd(d.value_or(3), eps.value_or(default_eps));
  if (name == "no_equilibrium_even") return no_equilibrium_even(d.value_or(4), eps.value_or(default_eps));
  if (name == "parity_example") return parity_example(d.value_or(3));
  if (name == "layered_d5") return layered_d5(eps.value_or(Rational(1, 4)));
  throw Error(ErrorCode::UnknownName, "no construction named '" + name + "'");
}

}  // namespace hcv
