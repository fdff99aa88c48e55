// Copyright 2026 The ctxkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CTXKIT_IO_HPP
#define CTXKIT_IO_HPP

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ctxkit/scenario.hpp"
#include "ctxkit/states.hpp"

namespace ctxkit {

// Scenario files are line oriented UTF-8 text:
//   scenario <name>
//   atoms <n> <label0> ... <label(n-1)>
//   clique <i> <j> ...          (0-based atom indices, one line per context)
// Model files:
//   model <scenario-name>
//   values <v0> <v1> ...        (decimals or rationals p/q)
// or
//   model <scenario-name>
//   bits <b0> <b1> ...          (raw possibilistic vector)

namespace detail {

inline std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

[[noreturn]] inline void parse_fail(std::size_t line, const std::string& why) {
  raise(Errc::parse_error, "line " + std::to_string(line) + ": " + why);
}

}  // namespace detail

inline std::string emit_scenario(const AtomGraph& g) {
  std::ostringstream out;
  out << "scenario " << g.name << "\n";
  out << "atoms " << g.atoms.size();
  for (const auto& a : g.atoms) out << ' ' << a;
  out << "\n";
  for (std::size_t k = 0; k < g.cliques.size(); ++k) {
    out << "clique";
    for (auto v : g.clique_members(k)) out << ' ' << v;
    out << "\n";
  }
  return out.str();
}

inline AtomGraph parse_scenario(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::string name;
  std::vector<std::string> labels;
  std::vector<std::vector<std::uint32_t>> cliques;
  bool have_header = false, have_atoms = false;

  while (std::getline(in, line)) {
    ++lineno;
    auto t = detail::tokens(line);
    if (t.empty()) continue;
    if (t[0] == "scenario") {
      if (have_header) detail::parse_fail(lineno, "duplicate scenario header");
      if (t.size() != 2) detail::parse_fail(lineno, "scenario <name>");
      name = t[1];
      have_header = true;
    } else if (t[0] == "atoms") {
      if (!have_header) detail::parse_fail(lineno, "atoms before header");
      if (have_atoms) detail::parse_fail(lineno, "duplicate atoms line");
      if (t.size() < 2) detail::parse_fail(lineno, "atoms <n> <labels...>");
      std::size_t n = 0;
      try {
        n = std::stoul(t[1]);
      } catch (const std::exception&) {
        detail::parse_fail(lineno, "bad atom count");
      }
      if (t.size() != n + 2)
        detail::parse_fail(lineno, "expected " + std::to_string(n) +
                                       " labels, got " +
                                       std::to_string(t.size() - 2));
      labels.assign(t.begin() + 2, t.end());
      have_atoms = true;
    } else if (t[0] == "clique") {
      if (!have_atoms) detail::parse_fail(lineno, "clique before atoms");
      std::vector<std::uint32_t> c;
      for (std::size_t i = 1; i < t.size(); ++i) {
        try {
          c.push_back(static_cast<std::uint32_t>(std::stoul(t[i])));
        } catch (const std::exception&) {
          detail::parse_fail(lineno, "bad clique index '" + t[i] + "'");
        }
      }
      if (c.empty()) detail::parse_fail(lineno, "empty clique");
      cliques.push_back(std::move(c));
    } else {
      detail::parse_fail(lineno, "unexpected '" + t[0] + "'");
    }
  }
  if (!have_header) raise(Errc::parse_error, "missing scenario header");
  if (!have_atoms) raise(Errc::parse_error, "missing atoms line");
  return build_from_spec(name, labels, cliques);
}

// ---------------------------------------------------------------------------

struct Model {
  enum class Kind { reals, exacts, bits };
  std::string scenario_name;
  Kind kind = Kind::bits;
  std::vector<double> reals;
  std::vector<Rat64> exacts;
  Bitvec bits;

  std::size_t length() const {
    switch (kind) {
      case Kind::reals: return reals.size();
      case Kind::exacts: return exacts.size();
      case Kind::bits: return bits.size;
    }
    return 0;
  }
};

inline Model parse_model(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  Model m;
  bool have_header = false, have_body = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto t = detail::tokens(line);
    if (t.empty()) continue;
    if (t[0] == "model") {
      if (have_header) detail::parse_fail(lineno, "duplicate model header");
      if (t.size() != 2) detail::parse_fail(lineno, "model <scenario-name>");
      m.scenario_name = t[1];
      have_header = true;
    } else if (t[0] == "values") {
      if (!have_header) detail::parse_fail(lineno, "values before header");
      if (have_body) detail::parse_fail(lineno, "duplicate body");
      bool exact = true;
      for (std::size_t i = 1; i < t.size(); ++i)
        if (t[i].find('.') != std::string::npos) exact = false;
      if (exact) {
        m.kind = Model::Kind::exacts;
        for (std::size_t i = 1; i < t.size(); ++i)
          m.exacts.push_back(Rat64::parse(t[i]));
      } else {
        m.kind = Model::Kind::reals;
        for (std::size_t i = 1; i < t.size(); ++i) {
          try {
            m.reals.push_back(std::stod(t[i]));
          } catch (const std::exception&) {
            detail::parse_fail(lineno, "bad value '" + t[i] + "'");
          }
        }
      }
      have_body = true;
    } else if (t[0] == "bits") {
      if (!have_header) detail::parse_fail(lineno, "bits before header");
      if (have_body) detail::parse_fail(lineno, "duplicate body");
      m.kind = Model::Kind::bits;
      std::string s;
      for (std::size_t i = 1; i < t.size(); ++i) {
        if (t[i] != "0" && t[i] != "1")
          detail::parse_fail(lineno, "bits must be 0 or 1");
        s += t[i];
      }
      m.bits = Bitvec::from_string(s);
      have_body = true;
    } else {
      detail::parse_fail(lineno, "unexpected '" + t[0] + "'");
    }
  }
  if (!have_header) raise(Errc::parse_error, "missing model header");
  if (!have_body) raise(Errc::parse_error, "missing values or bits line");
  return m;
}

inline std::string emit_model_bits(const std::string& scenario_name,
                                   const Bitvec& b) {
  std::ostringstream out;
  out << "model " << scenario_name << "\nbits";
  for (std::uint32_t i = 0; i < b.size; ++i) out << ' ' << (b.test(i) ? 1 : 0);
  out << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Built-in scenarios.

inline bool is_builtin_scenario(const std::string& name) {
  return name == "kcbs" || name == "chsh" || name == "mansfield233";
}

inline AtomGraph builtin_scenario(const std::string& name) {
  if (name == "kcbs") return build_kcbs();
  if (name == "chsh") return build_bell(BellSpec{{{2, 2}, {2, 2}}}, "chsh").graph;
  if (name == "mansfield233")
    return build_bell(BellSpec{{{2, 2, 2}, {2, 3}}}, "mansfield233").graph;
  raise(Errc::unknown_name, "no built-in scenario '" + name + "'");
}

/// Canonical scenario file for a built-in, bit-exact across runs.
inline std::string emit_builtin(const std::string& name) {
  return emit_scenario(builtin_scenario(name));
}

}  // namespace ctxkit

#endif  // CTXKIT_IO_HPP
