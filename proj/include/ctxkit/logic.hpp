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

#ifndef CTXKIT_LOGIC_HPP
#define CTXKIT_LOGIC_HPP

#include <cstdint>
#include <vector>

#include "ctxkit/bits.hpp"
#include "ctxkit/states.hpp"

namespace ctxkit {

struct SolveResult {
  bool solvable = false;
  /// Maximal solution when solvable: x_j per matrix column.
  std::vector<std::uint8_t> witness;
};

/// Decides M x = b over the two-element Boolean algebra, where row i reads
/// OR_{j : M[i][j]=1} x_j = b_i. The system is monotone, so the maximal
/// candidate decides it: drop every column that touches a zero row; the rest,
/// all set to 1, solve the system iff anything does.
inline SolveResult solve_or_system(const IncidenceMatrix& m, const Bitvec& b) {
  if (b.size != m.atom_count)
    raise(Errc::dimension_mismatch, "vector length != row count");
  const AtomMask zero_rows = ~b.bits & full_mask(b.size);
  SolveResult r;
  r.witness.assign(m.columns.size(), 0);
  AtomMask covered = 0;
  for (std::size_t j = 0; j < m.columns.size(); ++j) {
    if (m.columns[j] & zero_rows) continue;
    r.witness[j] = 1;
    covered |= m.columns[j];
  }
  r.solvable = (covered == b.bits);
  if (!r.solvable) r.witness.clear();
  return r;
}

/// Exhaustive oracle over all 2^m Boolean vectors; same contract as
/// solve_or_system. Refuses more than 20 columns.
inline SolveResult brute_force_solve(const IncidenceMatrix& m,
                                     const Bitvec& b) {
  if (b.size != m.atom_count)
    raise(Errc::dimension_mismatch, "vector length != row count");
  if (m.columns.size() > 20)
    raise(Errc::too_many_columns, "brute force capped at 20 columns");
  const std::size_t cols = m.columns.size();
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << cols); ++x) {
    AtomMask orsum = 0;
    for (std::size_t j = 0; j < cols; ++j)
      if ((x >> j) & 1) orsum |= m.columns[j];
    if (orsum == b.bits) {
      SolveResult r;
      r.solvable = true;
      r.witness.resize(cols);
      for (std::size_t j = 0; j < cols; ++j) r.witness[j] = (x >> j) & 1;
      return r;
    }
  }
  return SolveResult{};
}

/// A possibilistic vector is logically contextual iff no Boolean combination
/// of deterministic states reproduces it.
inline bool is_logically_contextual(const IncidenceMatrix& m,
                                    const Bitvec& b) {
  return !solve_or_system(m, b).solvable;
}

/// Strong contextuality at the atom level: every deterministic state puts a 1
/// on some atom the model rules out. (A zero-probability disjunction forces a
/// zero-probability atom, so atom-level contradiction loses no generality.)
inline bool is_strongly_contextual(const IncidenceMatrix& m, const Bitvec& b) {
  if (b.size != m.atom_count)
    raise(Errc::dimension_mismatch, "vector length != row count");
  const AtomMask zero_rows = ~b.bits & full_mask(b.size);
  for (auto col : m.columns)
    if ((col & zero_rows) == 0) return false;
  return true;
}

}  // namespace ctxkit

#endif  // CTXKIT_LOGIC_HPP
