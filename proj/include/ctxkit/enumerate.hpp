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

#ifndef CTXKIT_ENUMERATE_HPP
#define CTXKIT_ENUMERATE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <thread>
#include <vector>

#include "ctxkit/automorphism.hpp"
#include "ctxkit/logic.hpp"
#include "ctxkit/scenario.hpp"
#include "ctxkit/states.hpp"

namespace ctxkit {

/// Necessary conditions for a 0/1 vector to be the possibilistic collapse of
/// any state on the graph:
///  1. every context holds at least one 1;
///  2. if the 1s of context C all lie inside another context C', the rest of
///     C' must be 0 (those atoms complete a certain event to probability 1).
inline bool satisfies_lemma_constraints(const Bitvec& b, const AtomGraph& g) {
  if (b.size != g.atom_count())
    raise(Errc::dimension_mismatch, "vector length != atom count");
  for (auto c : g.cliques)
    if ((b.bits & c) == 0) return false;
  for (auto c : g.cliques) {
    const AtomMask ones = b.bits & c;
    for (auto c2 : g.cliques) {
      if (c2 == c) continue;
      if ((ones & ~c2) == 0 && (b.bits & c2) != ones) return false;
    }
  }
  return true;
}

struct SymmetryClass {
  Bitvec representative;          // lexicographically least orbit member
  std::vector<Bitvec> members;    // full orbit, sorted
  std::uint32_t orbit_size() const {
    return static_cast<std::uint32_t>(members.size());
  }
};

struct CandidateReport {
  std::vector<Bitvec> vectors;         // sorted lexicographically
  std::vector<SymmetryClass> classes;  // filled by symmetry_classes
  std::uint64_t total_candidates_scanned = 0;
};

enum class GenerationMode { raw, cliquewise };

namespace detail {

inline bool survives(const AtomGraph& g, const IncidenceMatrix& m,
                     AtomMask bits) {
  Bitvec b(bits, g.atom_count());
  if (!satisfies_lemma_constraints(b, g)) return false;
  return !solve_or_system(m, b).solvable;
}

inline void scan_range(const AtomGraph& g, const IncidenceMatrix& m,
                       AtomMask lo, AtomMask hi, std::vector<Bitvec>& out) {
  for (AtomMask bits = lo; bits < hi; ++bits)
    if (survives(g, m, bits)) out.emplace_back(bits, g.atom_count());
}

// Joins per-context patterns: contexts are processed in order; each step
// assigns the atoms of the current context that no earlier context touched.
// Condition 1 is context-local, so branches whose context ends up all-zero
// are cut immediately; condition 2 and the solver run on the leaves.
inline void cliquewise_scan(const AtomGraph& g, const IncidenceMatrix& m,
                            std::size_t k, AtomMask assigned, AtomMask bits,
                            std::uint64_t& scanned, std::vector<Bitvec>& out) {
  if (k == g.cliques.size()) {
    ++scanned;
    if (survives(g, m, bits)) out.emplace_back(bits, g.atom_count());
    return;
  }
  const AtomMask clique = g.cliques[k];
  const AtomMask fresh = clique & ~assigned;
  // spread the fresh submask over all of its subsets
  AtomMask sub = fresh;
  for (;;) {
    AtomMask candidate = bits | sub;
    if (candidate & clique)  // condition 1 for this context
      cliquewise_scan(g, m, k + 1, assigned | clique, candidate, scanned, out);
    if (sub == 0) break;
    sub = (sub - 1) & fresh;
  }
}

}  // namespace detail

/// All 0/1 vectors that satisfy the collapse constraints and make the
/// OR-system unsolvable (the possibilistic fingerprints of logically
/// contextual states). Raw mode scans the whole cube and is capped; the
/// clique-wise mode assembles candidates context by context and must produce
/// the identical set wherever both run.
inline CandidateReport enumerate_contextual_vectors(
    const AtomGraph& g, const IncidenceMatrix& m,
    GenerationMode mode = GenerationMode::raw, std::size_t raw_cap = 24) {
  if (m.atom_count != g.atom_count())
    raise(Errc::dimension_mismatch, "matrix does not belong to this scenario");
  const std::uint32_t n = g.atom_count();
  CandidateReport report;

  if (mode == GenerationMode::raw) {
    if (n > raw_cap)
      raise(Errc::too_large,
            "raw scan capped at " + std::to_string(raw_cap) +
                " atoms; use clique-wise generation");
    const AtomMask total = AtomMask{1} << n;
    report.total_candidates_scanned = total;
    unsigned workers =
        n >= 18 ? std::max(1u, std::thread::hardware_concurrency()) : 1;
    if (workers <= 1) {
      detail::scan_range(g, m, 0, total, report.vectors);
    } else {
      // disjoint prefix blocks, merged afterwards for a deterministic result
      std::vector<std::vector<Bitvec>> parts(workers);
      std::vector<std::thread> pool;
      const AtomMask step = total / workers + 1;
      for (unsigned w = 0; w < workers; ++w) {
        AtomMask lo = std::min<AtomMask>(total, w * step);
        AtomMask hi = std::min<AtomMask>(total, lo + step);
        pool.emplace_back([&, lo, hi, w] {
          detail::scan_range(g, m, lo, hi, parts[w]);
        });
      }
      for (auto& t : pool) t.join();
      for (auto& p : parts)
        report.vectors.insert(report.vectors.end(), p.begin(), p.end());
    }
  } else {
    detail::cliquewise_scan(g, m, 0, 0, 0, report.total_candidates_scanned,
                            report.vectors);
  }

  std::sort(report.vectors.begin(), report.vectors.end(), BitvecLess{});
  return report;
}

/// Orbit partition of a vector set under a permutation group acting by
/// coordinate permutation. Representatives are the lexicographically least
/// members; classes are sorted by representative. Input vectors outside a
/// closed orbit still partition correctly: each class holds exactly the
/// input vectors of one orbit.
inline std::vector<SymmetryClass> symmetry_classes(
    const std::vector<Bitvec>& vectors, const AutomorphismGroup& group) {
  std::set<Bitvec, BitvecLess> pending(vectors.begin(), vectors.end());
  std::vector<SymmetryClass> classes;
  while (!pending.empty()) {
    Bitvec seed = *pending.begin();
    std::set<Bitvec, BitvecLess> orbit;
    std::vector<Bitvec> frontier{seed};
    orbit.insert(seed);
    while (!frontier.empty()) {
      Bitvec v = frontier.back();
      frontier.pop_back();
      for (const auto& p : group.elements) {
        Bitvec img = apply_permutation(p, v);
        if (orbit.insert(img).second) frontier.push_back(img);
      }
    }
    SymmetryClass cls;
    for (const auto& v : orbit)
      if (pending.erase(v)) cls.members.push_back(v);
    cls.representative = cls.members.front();
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(),
            [](const SymmetryClass& a, const SymmetryClass& b) {
              return lex_less(a.representative, b.representative);
            });
  return classes;
}

inline std::vector<Bitvec> filter_by_zero_count(
    const std::vector<Bitvec>& vectors, std::uint32_t k) {
  std::vector<Bitvec> out;
  for (const auto& v : vectors)
    if (v.count_zeros() == k) out.push_back(v);
  return out;
}

}  // namespace ctxkit

#endif  // CTXKIT_ENUMERATE_HPP
