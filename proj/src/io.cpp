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

#include "hcv/io.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <sstream>

#include "hcv/error.hpp"

namespace hcv::io {

using nlohmann::json;

namespace {

std::string weight_text(const json& w) {
  if (w.is_string()) return w.get<std::string>();
  // Bare JSON integers are exact; bare floats are not and are rejected.
  if (w.is_number_integer()) return w.dump();
  throw Error(ErrorCode::ParseError, "weight must be a string such as \"3/10\" or \"0.3\"");
}

}  // namespace

Distribution parse_distribution_json(std::string_view text, const Limits& limits) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("d") || !doc.contains("weights")) {
    throw Error(ErrorCode::ParseError, "expected an object with \"d\" and \"weights\"");
  }
  if (!doc["d"].is_number_integer()) throw Error(ErrorCode::ParseError, "\"d\" must be an integer");
  const int d = doc["d"].get<int>();
  check_dimension(d, limits);
  if (!doc["weights"].is_array()) throw Error(ErrorCode::ParseError, "\"weights\" must be an array");
  bool normalize = false;
  if (doc.contains("normalize")) {
    if (!doc["normalize"].is_boolean()) throw Error(ErrorCode::ParseError, "\"normalize\" must be a boolean");
    normalize = doc["normalize"].get<bool>();
  }

  std::vector<std::pair<Vertex, Rational>> entries;
  const auto& weights = doc["weights"];
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const auto& item = weights[i];
    const std::string where = "weights[" + std::to_string(i) + "]";
    try {
      if (!item.is_object() || !item.contains("vertex") || !item.contains("weight") || !item["vertex"].is_string()) {
        throw Error(ErrorCode::ParseError, "expected {\"vertex\": \"...\", \"weight\": \"...\"}");
      }
      const std::string vertex = item["vertex"].get<std::string>();
      entries.emplace_back(parse_vertex(vertex, d), parse_rational(weight_text(item["weight"])));
    } catch (const Error& e) {
      throw Error(e.code(), where + ": " + e.message());
    }
  }
  return make_distribution(d, entries, normalize, limits);
}

Distribution parse_distribution(const std::filesystem::path& path, const Limits& limits) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_distribution_json(buf.str(), limits);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.message());
  }
}

json distribution_to_json(const Distribution& dist) {
  json weights = json::array();
  for (std::uint32_t x = 0; x < dist.size(); ++x) {
    const auto& w = dist.weights()[x];
    if (w == 0) continue;
    weights.push_back({{"vertex", to_bitstring(Vertex{x}, dist.dimension())}, {"weight", to_string(w)}});
  }
  return {{"d", dist.dimension()}, {"weights", std::move(weights)}};
}

std::string export_distribution(const Distribution& dist) { return distribution_to_json(dist).dump(2) + "\n"; }

json exact_value(const Rational& q) { return {{"exact", to_string(q)}, {"approx", to_decimal(q, 12)}}; }

Rational read_exact(const json& value) { return parse_rational(value.at("exact").get<std::string>()); }

std::string digest(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  static constexpr char hex[] = "0123456789abcdef";
  std::string out = "sha256:";
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 0xf];
  }
  return out;
}

}  // namespace hcv::io
