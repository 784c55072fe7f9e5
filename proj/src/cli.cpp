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

#include "hcv/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "hcv/conditions.hpp"
#include "hcv/constructions.hpp"
#include "hcv/dynamics.hpp"
#include "hcv/error.hpp"
#include "hcv/game.hpp"
#include "hcv/io.hpp"
#include "hcv/mixprod.hpp"

namespace hcv::cli {

using nlohmann::json;

namespace {

struct LoadedDistribution {
  Distribution dist;
  std::string digest;
};

LoadedDistribution load(const std::string& path, std::istream& in) {
  std::string text;
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Error(ErrorCode::ParseError, "cannot read " + path);
    std::ostringstream buf;
    buf << file.rdbuf();
    text = buf.str();
  }
  try {
    return {io::parse_distribution_json(text), io::digest(text)};
  } catch (const Error& e) {
    throw Error(e.code(), (path.empty() || path == "-" ? std::string("<stdin>") : path) + ": " + e.message());
  }
}

std::string joined(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) {
    if (!s.empty()) s += ' ';
    s += a;
  }
  return s;
}

json bits(Vertex v, int d) { return to_bitstring(v, d); }

std::string majority_name(Majority m) {
  switch (m) {
    case Majority::Zero: return "zero";
    case Majority::One: return "one";
    case Majority::Balanced: return "balanced";
  }
  return "?";
}

json verdict_json(const ConditionVerdict& v, int d) {
  json slack = json::array();
  for (const auto& s : v.per_coordinate_slack) slack.push_back(io::exact_value(s));
  return {{"holds", v.holds},
          {"threshold", io::exact_value(v.threshold)},
          {"majority_point", bits(v.majority_point, d)},
          {"per_coordinate_slack", std::move(slack)}};
}

json certificate_json(const EquilibriumCertificate& c, int d) {
  json layers = json::array();
  for (const auto& [k, why] : c.excluded_layers) {
    json item = {{"k", k}};
    if (why.kind == LayerJustification::Kind::Rule) {
      item["by"] = "rule";
      item["t"] = why.rule.t;
      item["m"] = why.rule.m;
    } else {
      item["by"] = "brute_force";
    }
    layers.push_back(std::move(item));
  }
  json out = {{"majority_point", bits(c.majority_point, d)},
              {"verdict", c.certified() ? "certified" : "not_certified"},
              {"excluded_layers", std::move(layers)}};
  out["first_failing_layer"] = c.first_failing_layer ? json(*c.first_failing_layer) : json(nullptr);
  return out;
}

json trajectory_json(const Distribution& dist, const Trajectory& t) {
  const int d = dist.dimension();
  json states = json::array();
  for (std::size_t i = 0; i < t.states.size(); ++i) {
    const auto& s = t.states[i];
    states.push_back({{"step", i},
                      {"pos1", bits(s.pos1, d)},
                      {"pos2", bits(s.pos2, d)},
                      {"mover", s.mover == Player::One ? 1 : 2},
                      {"p1", io::exact_value(payoff(dist, s.pos1, s.pos2))},
                      {"p2", io::exact_value(payoff(dist, s.pos2, s.pos1))}});
  }
  json outcome = std::visit(
      [](const auto& o) -> json {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, ReachedEquilibrium>) {
          return {{"kind", "equilibrium"}};
        } else if constexpr (std::is_same_v<T, Cycle>) {
          return {{"kind", "cycle"}, {"entry_index", o.entry_index}, {"period", o.period}};
        } else {
          return {{"kind", "truncated"}, {"max_steps", o.max_steps}};
        }
      },
      t.outcome);
  return {{"outcome", std::move(outcome)}, {"states", std::move(states)}};
}

std::string trajectory_csv(const Distribution& dist, const Trajectory& t) {
  const int d = dist.dimension();
  std::ostringstream csv;
  csv << "step,pos1,pos2,mover,p1,p2\n";
  for (std::size_t i = 0; i < t.states.size(); ++i) {
    const auto& s = t.states[i];
    csv << i << ',' << to_bitstring(s.pos1, d) << ',' << to_bitstring(s.pos2, d) << ','
        << (s.mover == Player::One ? 1 : 2) << ',' << to_string(payoff(dist, s.pos1, s.pos2)) << ','
        << to_string(payoff(dist, s.pos2, s.pos1)) << '\n';
  }
  return csv.str();
}

std::pair<Vertex, Vertex> parse_pair(const std::string& text, int d) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw Error(ErrorCode::ParseError, "expected V1,V2 but got '" + text + "'");
  return {parse_vertex(text.substr(0, comma), d), parse_vertex(text.substr(comma + 1), d)};
}

ExclusionRule parse_rule(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument("missing comma");
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "expected --rule t,m but got '" + text + "'");
  }
}

void emit_error(std::ostream& err, ErrorCode code, const std::string& message, int exit_code) {
  json report = {{"error", {{"code", std::string(to_string(code))}, {"message", message}}}, {"exit_code", exit_code}};
  err << report.dump(2) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Voronoi game on the weighted hypercube: exact payoffs, equilibria and dynamics", "hcv"};
  app.require_subcommand(1);

  std::string dist_path;
  std::string a_text;
  std::string b_text;

  auto* payoff_cmd = app.add_subcommand("payoff", "Voronoi partition and payoffs for a position pair");
  payoff_cmd->add_option("--dist", dist_path, "distribution file (stdin when absent or -)");
  payoff_cmd->add_option("--a", a_text, "position of player 1")->required();
  payoff_cmd->add_option("--b", b_text, "position of player 2")->required();

  auto* br_cmd = app.add_subcommand("best-response", "all best responses to a fixed opponent");
  br_cmd->add_option("--dist", dist_path, "distribution file");
  br_cmd->add_option("--b", b_text, "opponent position")->required();

  std::optional<int> k_local;
  bool exhaustive = false;
  auto* eq_cmd = app.add_subcommand("equilibria", "equilibrium set, or k-local status of (M, M)");
  eq_cmd->add_option("--dist", dist_path, "distribution file");
  eq_cmd->add_option("--k-local", k_local, "report whether (M, M) is a k-local equilibrium");
  eq_cmd->add_flag("--exhaustive", exhaustive, "scan all ordered pairs");

  auto* maj_cmd = app.add_subcommand("majority", "marginals, majority point or majority subcube");
  maj_cmd->add_option("--dist", dist_path, "distribution file");

  bool check_global = false;
  std::optional<int> check_local;
  std::vector<std::string> rule_texts;
  bool certify = false;
  auto* check_cmd = app.add_subcommand("check", "sufficient conditions for an equilibrium at M");
  check_cmd->add_option("--dist", dist_path, "distribution file");
  check_cmd->add_flag("--global,--thm1", check_global, "global marginal threshold");
  check_cmd->add_option("--local", check_local, "k-local marginal threshold");
  check_cmd->add_option("--rule", rule_texts, "coalition rule t,m (repeatable)");
  check_cmd->add_flag("--certify", certify, "layer-by-layer certificate using the given rules");

  std::string name;
  std::optional<int> construct_d;
  std::string eps_text;
  std::string out_path;
  auto* construct_cmd = app.add_subcommand("construct", "write a named distribution");
  construct_cmd->add_option("--name", name, "construction name")->required();
  construct_cmd->add_option("--d", construct_d, "dimension");
  construct_cmd->add_option("--eps", eps_text, "epsilon");
  construct_cmd->add_option("--out", out_path, "output file (stdout when absent)");

  std::string alpha_text;
  std::string p1_text;
  std::string p2_text;
  std::optional<int> classify_d;
  std::optional<int> sweep_d;
  std::optional<int> aseq_d;
  auto* mix_cmd = app.add_subcommand("mixprod", "two-bloc mixed product measures");
  mix_cmd->add_option("--alpha", alpha_text, "weight of the 1-leaning bloc")->required();
  mix_cmd->add_option("--p1", p1_text, "per-issue probability of 1 in the 0-leaning bloc")->required();
  mix_cmd->add_option("--p2", p2_text, "per-issue probability of 1 in the 1-leaning bloc")->required();
  auto* classify_opt = mix_cmd->add_option("--classify", classify_d, "classify at dimension D");
  auto* sweep_opt = mix_cmd->add_option("--sweep", sweep_d, "CSV of a_d and verdict for d = 1..dmax");
  auto* aseq_opt = mix_cmd->add_option("--a-seq", aseq_d, "a_0..a_D");
  classify_opt->excludes(sweep_opt)->excludes(aseq_opt);
  sweep_opt->excludes(aseq_opt);

  std::string init_text;
  std::string rule_name = "global";
  std::size_t max_steps = 1000;
  std::string format = "json";
  int first = 1;
  auto* dyn_cmd = app.add_subcommand("dynamics", "alternating best-response dynamics");
  dyn_cmd->add_option("--dist", dist_path, "distribution file");
  dyn_cmd->add_option("--init", init_text, "initial positions V1,V2")->required();
  dyn_cmd->add_option("--rule", rule_name, "global | nearest")->check(CLI::IsMember({"global", "nearest"}));
  dyn_cmd->add_option("--max-steps", max_steps, "step limit");
  dyn_cmd->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  dyn_cmd->add_option("--first", first, "player to move first (1 or 2)")->check(CLI::IsMember({1, 2}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    emit_error(err, ErrorCode::ParseError, e.what(), kInputError);
    return kInputError;
  }

  const auto started = std::chrono::steady_clock::now();
  json report;
  report["command"] = joined(args);
  report["input_digest"] = io::digest(joined(args));
  report["kernel"] = std::string(kernels::to_string(kernels::selected_isa()));
  report["approx_note"] = "approx fields are 12-significant-digit decimals and not authoritative";

  auto finish = [&](json results) {
    report["results"] = std::move(results);
    const auto elapsed = std::chrono::steady_clock::now() - started;
    report["timing_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
    out << report.dump(2) << '\n';
    return kOk;
  };

  try {
    if (payoff_cmd->parsed()) {
      auto [dist, digest] = load(dist_path, in);
      report["input_digest"] = digest;
      const int d = dist.dimension();
      const Vertex a = parse_vertex(a_text, d);
      const Vertex b = parse_vertex(b_text, d);
      const auto m = voronoi_measures(dist, a, b);
      return finish({{"a", bits(a, d)},
                     {"b", bits(b, d)},
                     {"v_ab", io::exact_value(m.v_ab)},
                     {"tie", io::exact_value(m.tie)},
                     {"v_ba", io::exact_value(m.v_ba)},
                     {"p1", io::exact_value(m.p1())},
                     {"p2", io::exact_value(m.p2())}});
    }

    if (br_cmd->parsed()) {
      auto [dist, digest] = load(dist_path, in);
      report["input_digest"] = digest;
      const int d = dist.dimension();
      const Vertex b = parse_vertex(b_text, d);
      const auto best = best_responses(dist, b);
      json argmax = json::array();
      for (Vertex v : best.argmax) argmax.push_back(bits(v, d));
      return finish({{"b", bits(b, d)}, {"value", io::exact_value(best.value)}, {"argmax", std::move(argmax)}});
    }

    if (eq_cmd->parsed()) {
      auto [dist, digest] = load(dist_path, in);
      report["input_digest"] = digest;
      const int d = dist.dimension();
      if (k_local) {
        const auto canon = canonicalize_zero_majority(dist);
        const Vertex m = canon.flip_mask;
        return finish({{"k", *k_local},
                       {"majority_point", bits(m, d)},
                       {"is_k_local_equilibrium", is_k_local_equilibrium(dist, m, m, *k_local)}});
      }
      const auto eq = exhaustive ? find_equilibria_exhaustive(dist) : find_equilibria(dist);
      json pairs = json::array();
      for (const auto& [a, b] : eq.pairs) pairs.push_back({bits(a, d), bits(b, d)});
      return finish({{"count", eq.size()}, {"pairs", std::move(pairs)}});
    }

    if (maj_cmd->parsed()) {
      auto [dist, digest] = load(dist_path, in);
      report["input_digest"] = digest;
      const int d = dist.dimension();
      const auto r = majority_report(dist);
      json marginals = json::array();
      json classes = json::array();
      for (std::size_t i = 0; i < r.marginals.size(); ++i) {
        marginals.push_back(io::exact_value(r.marginals[i]));
        classes.push_back(majority_name(r.classification[i]));
      }
      return finish({{"marginals", std::move(marginals)},
                     {"classification", std::move(classes)},
                     {"majority_point", r.majority_point ? bits(*r.majority_point, d) : json(nullptr)},
                     {"free_coords", r.free_coords.members()}});
    }

    if (check_cmd->parsed()) {
      auto [dist, digest] = load(dist_path, in);
      report["input_digest"] = digest;
      const int d = dist.dimension();
      std::vector<ExclusionRule> rules;
      for (const auto& t : rule_texts) rules.push_back(parse_rule(t));
      json results = json::object();
      const bool nothing_requested = !check_global && !check_local && rules.empty() && !certify;
      if (check_global || nothing_requested) results["global"] = verdict_json(check_global_sufficient(dist), d);
      if (check_local) results["local"] = verdict_json(check_local_sufficient(dist, *check_local), d);
      if (!rules.empty()) {
        json by_rule = json::array();
        for (const auto& r : rules) {
          by_rule.push_back({{"t", r.t}, {"m", r.m}, {"excluded_layers", excluded_layers(dist, r.t, r.m)}});
        }
        results["rules"] = std::move(by_rule);
      }
      if (certify) results["certificate"] = certificate_json(certify_equilibrium(dist, rules), d);
      return finish(std::move(results));
    }

    if (construct_cmd->parsed()) {
      std::optional<Rational> eps;
      if (!eps_text.empty()) eps = parse_rational(eps_text);
      const auto dist = construct_by_name(name, construct_d, eps);
      const std::string text = io::export_distribution(dist);
      if (out_path.empty()) {
        out << text;
        return kOk;
      }
      std::ofstream file(out_path, std::ios::binary);
      if (!file) throw Error(ErrorCode::ParseError, "cannot write " + out_path);
      file << text;
      return finish({{"written", out_path}, {"digest", io::digest(text)}});
    }

    if (mix_cmd->parsed()) {
      const MixParams params{parse_rational(alpha_text), parse_rational(p1_text), parse_rational(p2_text)};
      params.validate();
      if (classify_d) {
        const auto c = classify(params, *classify_d);
        json seq = json::array();
        for (const auto& a : c.a_sequence) seq.push_back(io::exact_value(a));
        return finish({{"d", *classify_d},
                       {"marginal_zero", io::exact_value(params.marginal_zero())},
                       {"verdict", c.verdict == MixVerdict::AntipodalBestResponse ? "antipodal_best_response"
                                                                                   : "equilibrium_at_majority"},
                       {"argmax_k", c.argmax_k},
                       {"tie", c.tie},
                       {"shape", c.shape == SequenceShape::Decreasing ? "decreasing" : "decreasing_then_increasing"},
                       {"a_sequence", std::move(seq)},
                       {"asymptotic_antipodal", asymptotic_antipodal(params)}});
      }
      if (sweep_d) {
        if (*sweep_d < 1) throw Error(ErrorCode::InvalidDimension, "--sweep needs dmax >= 1");
        if (params.marginal_zero() <= Rational(1, 2)) {
          throw Error(ErrorCode::MajorityNotAtZero, "w_i^0 = " + to_string(params.marginal_zero()) + " is not above 1/2");
        }
        const auto seq = a_sequence(params, *sweep_d);
        out << "d,a_d,a_d_approx,verdict\n";
        for (int d = 1; d <= *sweep_d; ++d) {
          const auto& a = seq[static_cast<std::size_t>(d)];
          out << d << ',' << to_string(a) << ',' << to_decimal(a, 12) << ','
              << (a > Rational(1, 2) ? "antipodal_best_response" : "equilibrium_at_majority") << '\n';
        }
        return kOk;
      }
      if (aseq_d) {
        const auto seq = a_sequence(params, *aseq_d);
        json items = json::array();
        for (std::size_t k = 0; k < seq.size(); ++k) {
          json item = io::exact_value(seq[k]);
          item["k"] = k;
          items.push_back(std::move(item));
        }
        return finish({{"a_sequence", std::move(items)}});
      }
      throw Error(ErrorCode::ParseError, "mixprod needs one of --classify, --sweep, --a-seq");
    }

    if (dyn_cmd->parsed()) {
      auto [dist, digest] = load(dist_path, in);
      report["input_digest"] = digest;
      const auto [p1, p2] = parse_pair(init_text, dist.dimension());
      const GameState start{p1, p2, first == 1 ? Player::One : Player::Two};
      const MoveRule rule = rule_name == "nearest" ? MoveRule::NearestImproving : MoveRule::GlobalBest;
      const auto t = run(dist, start, rule, max_steps);
      if (format == "csv") {
        out << trajectory_csv(dist, t);
        return kOk;
      }
      return finish(trajectory_json(dist, t));
    }
  } catch (const Error& e) {
    const int code = e.is_gated() ? kGated : kInputError;
    emit_error(err, e.code(), e.message(), code);
    return code;
  }
  return kInputError;
}

}  // namespace hcv::cli
