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

#ifndef CTXKIT_STATES_HPP
#define CTXKIT_STATES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "ctxkit/bits.hpp"
#include "ctxkit/scenario.hpp"

namespace ctxkit {

// ---------------------------------------------------------------------------
// Exact rationals. The possibilistic collapse is discontinuous at zero, so
// hand-entered models default to exact arithmetic; quantum-derived values go
// through the double-precision path with an explicit tolerance instead.

struct Rat64 {
  long long num = 0;
  long long den = 1;

  Rat64() = default;
  Rat64(long long n) : num(n), den(1) {}
  Rat64(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) raise(Errc::out_of_range, "zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool is_zero() const { return num == 0; }
  double to_double() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }

  Rat64 operator+(const Rat64& o) const {
    __int128 n = static_cast<__int128>(num) * o.den +
                 static_cast<__int128>(o.num) * den;
    __int128 d = static_cast<__int128>(den) * o.den;
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
      raise(Errc::out_of_range, "rational overflow");
    Rat64 r;
    r.num = static_cast<long long>(n);
    r.den = static_cast<long long>(d);
    return r;
  }

  bool operator==(const Rat64& o) const {
    return num == o.num && den == o.den;
  }
  bool operator!=(const Rat64& o) const { return !(*this == o); }
  bool operator<(const Rat64& o) const {
    return static_cast<__int128>(num) * o.den <
           static_cast<__int128>(o.num) * den;
  }
  bool operator>(const Rat64& o) const { return o < *this; }

  std::string to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  /// Accepts "p/q", integers, and plain decimals ("0.25" -> 1/4).
  static Rat64 parse(const std::string& s) {
    auto bad = [&]() { raise(Errc::parse_error, "bad rational '" + s + "'"); };
    if (s.empty()) bad();
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      try {
        long long n = std::stoll(s.substr(0, slash));
        long long d = std::stoll(s.substr(slash + 1));
        return Rat64(n, d);
      } catch (const std::exception&) {
        bad();
      }
    }
    auto dot = s.find('.');
    try {
      if (dot == std::string::npos) return Rat64(std::stoll(s));
      long long whole = dot == 0 ? 0 : std::stoll(s.substr(0, dot));
      std::string frac = s.substr(dot + 1);
      if (frac.empty() || frac.size() > 18) bad();
      long long den = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
      long long fnum = std::stoll(frac);
      bool neg = !s.empty() && s[0] == '-';
      long long n = (neg ? -1 : 1) * ((whole < 0 ? -whole : whole) * den + fnum);
      return Rat64(n, den);
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      bad();
    }
    return Rat64();  // unreachable
  }

 private:
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
};

// ---------------------------------------------------------------------------
// States on an atom graph: probability per atom, each context summing to 1.

struct State {
  std::vector<double> values;
};

struct ExactState {
  std::vector<Rat64> values;
};

/// Checks lengths, ranges, and the per-context normalization within `tol`.
inline State validate_state(const AtomGraph& g,
                            const std::vector<double>& values, double tol) {
  if (values.size() != g.atoms.size())
    raise(Errc::bad_length, "value count does not match atom count");
  for (std::size_t i = 0; i < values.size(); ++i)
    if (!(values[i] >= -tol && values[i] <= 1 + tol))
      raise(Errc::out_of_range, "p(" + g.atoms[i] + ") outside [0,1]");
  for (std::size_t k = 0; k < g.cliques.size(); ++k) {
    double sum = 0;
    for (auto v : g.clique_members(k)) sum += values[v];
    if (std::abs(sum - 1.0) > tol)
      raise(Errc::clique_sum_violation,
            "context " + std::to_string(k) + " sums to " +
                std::to_string(sum));
  }
  return State{values};
}

inline ExactState validate_state_exact(const AtomGraph& g,
                                       const std::vector<Rat64>& values) {
  if (values.size() != g.atoms.size())
    raise(Errc::bad_length, "value count does not match atom count");
  const Rat64 zero(0), one(1);
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] < zero || one < values[i])
      raise(Errc::out_of_range, "p(" + g.atoms[i] + ") outside [0,1]");
  for (std::size_t k = 0; k < g.cliques.size(); ++k) {
    Rat64 sum(0);
    for (auto v : g.clique_members(k)) sum = sum + values[v];
    if (sum != one)
      raise(Errc::clique_sum_violation,
            "context " + std::to_string(k) + " sums to " + sum.to_string());
  }
  return ExactState{values};
}

/// bit i = 0 iff p(v_i) <= epsilon.
inline Bitvec possibilistic_collapse(const State& s, double epsilon) {
  Bitvec b(0, static_cast<std::uint32_t>(s.values.size()));
  for (std::size_t i = 0; i < s.values.size(); ++i)
    if (s.values[i] > epsilon) b.set(i);
  return b;
}

inline Bitvec possibilistic_collapse(const ExactState& s) {
  Bitvec b(0, static_cast<std::uint32_t>(s.values.size()));
  for (std::size_t i = 0; i < s.values.size(); ++i)
    if (!s.values[i].is_zero()) b.set(i);
  return b;
}

// ---------------------------------------------------------------------------
// Deterministic states and the incidence matrix.

namespace detail {

struct DetEnum {
  const AtomGraph& g;
  std::vector<Bitvec> out;
  // 0 = unknown, 1 = forced zero, 2 = one
  std::vector<std::uint8_t> mark;

  explicit DetEnum(const AtomGraph& graph)
      : g(graph), mark(graph.atoms.size(), 0) {}

  // Sets atom v to 1, zeroes its neighbors, and completes any context left
  // with a single live candidate. Returns false on contradiction.
  bool assign_one(std::size_t v, std::vector<std::size_t>& trail) {
    std::vector<std::size_t> queue{v};
    while (!queue.empty()) {
      std::size_t u = queue.back();
      queue.pop_back();
      if (mark[u] == 2) continue;
      if (mark[u] == 1) return false;
      mark[u] = 2;
      trail.push_back(u);
      AtomMask nb = g.adjacency[u];
      while (nb) {
        std::size_t w = static_cast<std::size_t>(std::countr_zero(nb));
        nb &= nb - 1;
        if (mark[w] == 2) return false;
        if (mark[w] == 0) {
          mark[w] = 1;
          trail.push_back(w);
        }
      }
      // forced completions
      for (std::size_t k = 0; k < g.cliques.size(); ++k) {
        AtomMask m = g.cliques[k];
        bool has_one = false;
        int live = -1, live_count = 0;
        AtomMask scan = m;
        while (scan) {
          std::size_t a = static_cast<std::size_t>(std::countr_zero(scan));
          scan &= scan - 1;
          if (mark[a] == 2) has_one = true;
          if (mark[a] == 0) {
            ++live_count;
            live = static_cast<int>(a);
          }
        }
        if (has_one) continue;
        if (live_count == 0) return false;
        if (live_count == 1) queue.push_back(static_cast<std::size_t>(live));
      }
    }
    return true;
  }

  void undo(std::vector<std::size_t>& trail, std::size_t from) {
    while (trail.size() > from) {
      mark[trail.back()] = 0;
      trail.pop_back();
    }
  }

  void search(std::vector<std::size_t>& trail) {
    // first context without a chosen atom
    int open = -1;
    for (std::size_t k = 0; k < g.cliques.size(); ++k) {
      bool has_one = false;
      AtomMask scan = g.cliques[k];
      while (scan) {
        std::size_t a = static_cast<std::size_t>(std::countr_zero(scan));
        scan &= scan - 1;
        if (mark[a] == 2) {
          has_one = true;
          break;
        }
      }
      if (!has_one) {
        open = static_cast<int>(k);
        break;
      }
    }
    if (open < 0) {
      Bitvec b(0, g.atom_count());
      for (std::size_t i = 0; i < mark.size(); ++i)
        if (mark[i] == 2) b.set(i);
      out.push_back(b);
      return;
    }
    AtomMask scan = g.cliques[static_cast<std::size_t>(open)];
    while (scan) {
      std::size_t cand = static_cast<std::size_t>(std::countr_zero(scan));
      scan &= scan - 1;
      if (mark[cand] != 0) continue;
      std::size_t base = trail.size();
      if (assign_one(cand, trail)) search(trail);
      undo(trail, base);
      // cand stays open for sibling branches; exclusivity of the branches is
      // guaranteed because each one puts the 1 of this context elsewhere
    }
  }
};

}  // namespace detail

/// All 0/1 assignments with exactly one 1 per context, in lexicographic
/// order. The empty list is a legitimate outcome (Kochen-Specker-type
/// scenarios have no deterministic states at all).
inline std::vector<Bitvec> enumerate_deterministic(const AtomGraph& g) {
  detail::DetEnum e(g);
  std::vector<std::size_t> trail;
  e.search(trail);
  std::sort(e.out.begin(), e.out.end(), BitvecLess{});
  e.out.erase(std::unique(e.out.begin(), e.out.end()), e.out.end());
  return e.out;
}

/// Boolean matrix with atom rows and deterministic-state columns; column j is
/// the j-th enumerated deterministic state. Also the plain Boolean-matrix
/// carrier for the OR-system solver, which accepts arbitrary column sets.
struct IncidenceMatrix {
  std::uint32_t atom_count = 0;
  std::vector<AtomMask> columns;

  std::size_t column_count() const { return columns.size(); }
  bool at(std::size_t row, std::size_t col) const {
    return (columns[col] >> row) & 1;
  }
  StateSet row_support(std::size_t row) const {
    StateSet s(columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
      if (at(row, j)) s.set(j);
    return s;
  }
};

inline IncidenceMatrix incidence_matrix(const AtomGraph& g) {
  IncidenceMatrix m;
  m.atom_count = g.atom_count();
  for (const auto& s : enumerate_deterministic(g)) m.columns.push_back(s.bits);
  return m;
}

}  // namespace ctxkit

#endif  // CTXKIT_STATES_HPP
