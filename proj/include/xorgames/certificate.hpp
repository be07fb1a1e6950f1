// Copyright 2026 The xorgames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// JSON forms of certificates and strategies:
//   {"type":"pref","z":[...]}
//   {"type":"merp","theta":[["p/q", ...], ...]}      one inner array per player
//   {"type":"refutation","game":"...","indices":[...],"annotations":[...]}
//   {"type":"observables","entries":[{"player":1,"question":2,"op":"X"}, ...]}
// Integers that do not fit in 64 bits are written as decimal strings.

#include <limits>
#include <string>
#include <vector>

#include "json.hpp"

#include "xorgames/error.hpp"
#include "xorgames/integer.hpp"
#include "xorgames/pref_merp.hpp"
#include "xorgames/quantum.hpp"
#include "xorgames/refutation.hpp"

namespace xorgames {

using Json = nlohmann::json;

namespace detail {

inline Json bigint_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
    return v.convert_to<long long>();
  }
  return v.str();
}

inline BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const BigRational q = parse_rational(s);
    if (boost::multiprecision::denominator(q) != 1) throw ParseError(1, "expected integer, got " + s);
    return boost::multiprecision::numerator(q);
  }
  throw ParseError(1, "expected integer, got " + j.dump());
}

inline void expect_type(const Json& j, const std::string& type) {
  if (!j.is_object() || !j.contains("type") || j.at("type") != type) {
    throw ParseError(1, "expected a JSON object with \"type\":\"" + type + "\"");
  }
}

}  // namespace detail

inline std::string certificate_type(const Json& j) {
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) {
    throw ParseError(1, "certificate lacks a \"type\" string");
  }
  return j.at("type").get<std::string>();
}

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(1, std::string("invalid JSON: ") + e.what());
  }
}

inline Json pref_to_json(const PrefSpecification& p) {
  Json z = Json::array();
  for (const BigInt& v : p.z) z.push_back(detail::bigint_to_json(v));
  return {{"type", "pref"}, {"z", z}};
}

inline PrefSpecification pref_from_json(const Json& j) {
  detail::expect_type(j, "pref");
  PrefSpecification p;
  for (const Json& v : j.at("z")) p.z.push_back(detail::bigint_from_json(v));
  return p;
}

inline Json merp_to_json(const MerpStrategy& s, int k, int n) {
  if (s.theta.size() != static_cast<std::size_t>(k) * n) {
    throw DimensionMismatch("MERP vector length differs from k*n");
  }
  Json theta = Json::array();
  for (int a = 0; a < k; ++a) {
    Json row = Json::array();
    for (int j = 0; j < n; ++j) row.push_back(to_string(s.theta[static_cast<std::size_t>(a) * n + j]));
    theta.push_back(row);
  }
  return {{"type", "merp"}, {"theta", theta}};
}

/// Accepts the nested per-player layout or a flat list.
inline MerpStrategy merp_from_json(const Json& j) {
  detail::expect_type(j, "merp");
  MerpStrategy s;
  auto read = [&](const Json& v) {
    if (v.is_string()) {
      s.theta.push_back(parse_rational(v.get<std::string>()));
    } else if (v.is_number_integer()) {
      s.theta.emplace_back(v.get<long long>());
    } else {
      throw ParseError(1, "MERP angle must be a \"p/q\" string or integer");
    }
  };
  for (const Json& row : j.at("theta")) {
    if (row.is_array()) {
      for (const Json& v : row) read(v);
    } else {
      read(row);
    }
  }
  return s;
}

inline Json annotation_to_json(const GadgetAnnotation& a) {
  return {{"type", a.type},
          {"source_wire", a.source_wire},
          {"target_wire", a.target_wire},
          {"pair", {a.first_letter, a.second_letter}},
          {"stage", a.stage},
          {"offset", a.offset}};
}

inline Json refutation_to_json(const RefutationCertificate& c) {
  Json notes = Json::array();
  for (const GadgetAnnotation& a : c.annotations) notes.push_back(annotation_to_json(a));
  return {{"type", "refutation"}, {"game", c.game}, {"indices", c.indices}, {"annotations", notes}};
}

inline RefutationCertificate refutation_from_json(const Json& j) {
  detail::expect_type(j, "refutation");
  RefutationCertificate c;
  try {
    if (j.contains("game")) c.game = j.at("game").get<std::string>();
    for (const Json& v : j.at("indices")) {
      const long long idx = v.get<long long>();
      if (idx < 1) throw ParseError(1, "clause indices are 1-based");
      c.indices.push_back(static_cast<std::size_t>(idx));
    }
    if (j.contains("annotations")) {
      for (const Json& a : j.at("annotations")) {
        GadgetAnnotation g;
        g.type = a.at("type").get<std::string>();
        g.source_wire = a.at("source_wire").get<int>();
        g.target_wire = a.at("target_wire").get<int>();
        g.first_letter = a.at("pair").at(0).get<int>();
        g.second_letter = a.at("pair").at(1).get<int>();
        g.stage = a.at("stage").get<std::size_t>();
        g.offset = a.value("offset", std::size_t{0});
        c.annotations.push_back(g);
      }
    }
  } catch (const Json::exception& e) {
    throw ParseError(1, std::string("malformed refutation certificate: ") + e.what());
  }
  return c;
}

inline Json observables_to_json(const ObservableAssignment& assignment) {
  Json entries = Json::array();
  for (const auto& [key, o] : assignment.entries()) {
    Json op;
    switch (o.kind) {
      case Observable::Kind::kX: op = "X"; break;
      case Observable::Kind::kY: op = "Y"; break;
      case Observable::Kind::kZ: op = "Z"; break;
      case Observable::Kind::kRotation: op = {{"rot", to_string(o.turns)}}; break;
    }
    entries.push_back({{"player", key.first}, {"question", key.second}, {"op", op}});
  }
  return {{"type", "observables"}, {"entries", entries}};
}

inline ObservableAssignment observables_from_json(const Json& j) {
  detail::expect_type(j, "observables");
  ObservableAssignment out;
  try {
    for (const Json& e : j.at("entries")) {
      const Json& op = e.at("op");
      Observable o;
      if (op.is_string()) {
        const std::string name = op.get<std::string>();
        if (name == "X") {
          o = Observable::x();
        } else if (name == "Y") {
          o = Observable::y();
        } else if (name == "Z") {
          o = Observable::z();
        } else {
          throw ParseError(1, "unknown observable '" + name + "'");
        }
      } else {
        o = Observable::rotation(parse_rational(op.at("rot").get<std::string>()));
      }
      out.set(e.at("player").get<int>(), e.at("question").get<int>(), o);
    }
  } catch (const Json::exception& e) {
    throw ParseError(1, std::string("malformed observables: ") + e.what());
  }
  return out;
}

}  // namespace xorgames
