/*
 * Copyright 2026 The hyperpf Authors
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

#include "hyperpf/spec_file.hpp"

#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hyperpf/error.hpp"

namespace hyperpf {

namespace {

using nlohmann::json;

int require_int(const json& doc, const char* field) {
  if (!doc.contains(field)) throw ParseError(std::string("missing field '") + field + "'");
  const json& v = doc.at(field);
  if (!v.is_number_integer()) throw ParseError(std::string("field '") + field + "' must be an integer");
  return v.get<int>();
}

std::string tuple_text(const json& r) { return "r=" + r.dump(); }

}  // namespace

SkewSpec parse_spec_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("spec document must be a JSON object");

  const int n = require_int(doc, "n");
  const int k = require_int(doc, "k");
  std::optional<int> degree;
  if (doc.contains("degree")) degree = require_int(doc, "degree");

  std::optional<SkewSpec> parsed;
  try {
    parsed = degree ? SkewSpec(n, k, *degree) : SkewSpec(n, k);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
  SkewSpec& spec = *parsed;

  if (!doc.contains("terms") || !doc.at("terms").is_array()) {
    throw ParseError("field 'terms' must be an array");
  }
  std::set<Composition> seen;
  for (const json& term : doc.at("terms")) {
    if (!term.is_object() || !term.contains("r") || !term.contains("a")) {
      throw ParseError("each term needs fields 'r' and 'a'");
    }
    const json& r = term.at("r");
    if (!r.is_array()) throw ParseError("term " + tuple_text(r) + ": 'r' must be an array");
    std::vector<int> parts;
    for (const json& part : r) {
      if (!part.is_number_integer() || part.get<long long>() < 0) {
        throw ParseError("term " + tuple_text(r) + ": parts must be nonnegative integers");
      }
      parts.push_back(part.get<int>());
    }
    Composition key(std::move(parts));
    if (static_cast<int>(key.parts().size()) != k) {
      throw ParseError("term " + tuple_text(r) + " does not have k=" + std::to_string(k) + " parts");
    }
    if (!key.is_strictly_increasing()) {
      throw ParseError("term " + tuple_text(r) + " is not strictly increasing");
    }
    if (key.sum() != spec.degree()) {
      throw ParseError("term " + tuple_text(r) + " sums to " + std::to_string(key.sum()) +
                       ", expected degree " + std::to_string(spec.degree()));
    }
    if (!seen.insert(key).second) throw ParseError("duplicate term " + tuple_text(r));

    const json& a = term.at("a");
    Rational value;
    if (a.is_string()) {
      value = parse_rational(a.get<std::string>());
    } else if (a.is_number_integer()) {
      value = parse_rational(a.dump());
    } else {
      throw ParseError("term " + tuple_text(r) + ": 'a' must be a rational string");
    }
    if (is_zero(value)) throw ParseError("term " + tuple_text(r) + " has zero coefficient");
    spec.set(key, value);
  }
  return spec;
}

SkewSpec read_spec_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open spec file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_spec_json(buffer.str());
}

std::string write_spec_json(const SkewSpec& spec) {
  json doc;
  doc["n"] = spec.n();
  doc["k"] = spec.k();
  doc["degree"] = spec.degree();
  doc["terms"] = json::array();
  for (const auto& [r, a] : spec.terms()) {
    doc["terms"].push_back({{"r", r.parts()}, {"a", to_string(a)}});
  }
  return doc.dump();
}

}  // namespace hyperpf
