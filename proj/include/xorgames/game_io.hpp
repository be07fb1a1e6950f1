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

// Game file formats.
//
// Text (UTF-8, LF):
//   xorgame v1
//   k=<int> n=<int> m=<int>
//   <q_1> ... <q_k> <+|->        (m lines)
//
// JSON: {"k":3,"n":2,"clauses":[{"q":[1,1,1],"s":1}, ...]}

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "xorgames/error.hpp"
#include "xorgames/game.hpp"

namespace xorgames {

inline std::string serialize_game(const Game& game) {
  std::string out = "xorgame v1\n";
  out += "k=" + std::to_string(game.k()) + " n=" + std::to_string(game.n()) +
         " m=" + std::to_string(game.m()) + "\n";
  for (const Clause& c : game.clauses()) {
    for (int q : c.query) out += std::to_string(q) + " ";
    out += c.sign == 1 ? "+\n" : "-\n";
  }
  return out;
}

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string t;
  while (in >> t) tokens.push_back(t);
  return tokens;
}

inline bool parse_positive(const std::string& s, long long& out) {
  if (s.empty() || s.size() > 12) return false;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return false;
  }
  out = std::stoll(s);
  return true;
}

inline long long parse_header_field(const std::string& token, const std::string& key,
                                    std::size_t line) {
  if (token.rfind(key + "=", 0) != 0) {
    throw ParseError(line, "expected '" + key + "=<int>', found '" + token + "'");
  }
  long long v = 0;
  if (!parse_positive(token.substr(key.size() + 1), v) || v < 1) {
    throw ParseError(line, "bad value in '" + token + "'");
  }
  return v;
}

}  // namespace detail

inline Game parse_game(const std::string& text) {
  std::vector<std::string> lines;
  {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines.push_back(line);
    }
  }
  // Trailing blank lines are whitespace, not clauses.
  while (!lines.empty() && detail::split_ws(lines.back()).empty()) lines.pop_back();

  if (lines.empty() || detail::split_ws(lines[0]) != std::vector<std::string>{"xorgame", "v1"}) {
    throw ParseError(1, "expected header 'xorgame v1'");
  }
  if (lines.size() < 2) throw ParseError(2, "missing 'k=<int> n=<int> m=<int>' line");
  const auto header = detail::split_ws(lines[1]);
  if (header.size() != 3) throw ParseError(2, "expected 'k=<int> n=<int> m=<int>'");
  const long long k = detail::parse_header_field(header[0], "k", 2);
  const long long n = detail::parse_header_field(header[1], "n", 2);
  const long long m = detail::parse_header_field(header[2], "m", 2);
  if (static_cast<long long>(lines.size()) - 2 != m) {
    throw ParseError(lines.size() < static_cast<std::size_t>(m) + 2 ? lines.size() + 1 : m + 3,
                     "header declares m=" + std::to_string(m) + " but found " +
                         std::to_string(lines.size() - 2) + " clause lines");
  }

  std::vector<Clause> clauses;
  clauses.reserve(static_cast<std::size_t>(m));
  for (std::size_t li = 2; li < lines.size(); ++li) {
    const std::size_t line_no = li + 1;
    const auto tokens = detail::split_ws(lines[li]);
    if (static_cast<long long>(tokens.size()) != k + 1) {
      throw ParseError(line_no, "expected " + std::to_string(k) + " questions and a sign");
    }
    Clause c;
    for (long long a = 0; a < k; ++a) {
      long long q = 0;
      if (!detail::parse_positive(tokens[a], q)) {
        throw ParseError(line_no, "bad question token '" + tokens[a] + "'");
      }
      if (q < 1 || q > n) {
        throw ParseError(line_no, "question " + tokens[a] + " outside [1, " + std::to_string(n) +
                                      "]");
      }
      c.query.push_back(static_cast<int>(q));
    }
    const std::string& sign = tokens.back();
    if (sign == "+") {
      c.sign = 1;
    } else if (sign == "-") {
      c.sign = -1;
    } else {
      throw ParseError(line_no, "bad sign token '" + sign + "' (expected + or -)");
    }
    clauses.push_back(std::move(c));
  }
  return Game(static_cast<int>(k), static_cast<int>(n), std::move(clauses));
}

inline nlohmann::json game_to_json(const Game& game) {
  nlohmann::json clauses = nlohmann::json::array();
  for (const Clause& c : game.clauses()) clauses.push_back({{"q", c.query}, {"s", c.sign}});
  return {{"k", game.k()}, {"n", game.n()}, {"clauses", clauses}};
}

inline Game game_from_json(const nlohmann::json& j) {
  try {
    const int k = j.at("k").get<int>();
    const int n = j.at("n").get<int>();
    std::vector<Clause> clauses;
    for (const auto& c : j.at("clauses")) {
      clauses.push_back({c.at("q").get<std::vector<int>>(), c.at("s").get<int>()});
    }
    return Game(k, n, std::move(clauses));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, std::string("malformed game JSON: ") + e.what());
  } catch (const InvalidParameter& e) {
    throw ParseError(1, e.what());
  }
}

inline std::string serialize_game_json(const Game& game) { return game_to_json(game).dump() + "\n"; }

inline Game parse_game_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(1, std::string("invalid JSON: ") + e.what());
  }
  return game_from_json(j);
}

/// Accepts either format, dispatching on the first non-space character.
inline Game parse_game_any(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_game_json(text);
  return parse_game(text);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidParameter("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Game load_game(const std::string& path) { return parse_game_any(read_file(path)); }

/// Content hash of the canonical text form, "fnv1a:<16 hex digits>".
inline std::string game_hash(const Game& game) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : serialize_game(game)) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace xorgames
