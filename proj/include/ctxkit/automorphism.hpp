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

#ifndef CTXKIT_AUTOMORPHISM_HPP
#define CTXKIT_AUTOMORPHISM_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "ctxkit/scenario.hpp"

namespace ctxkit {

/// perm[i] = image of atom i.
using Permutation = std::vector<std::uint32_t>;

inline Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::uint32_t>(i);
  return p;
}

inline Permutation compose(const Permutation& f, const Permutation& g) {
  Permutation h(f.size());  // h = f after g
  for (std::size_t i = 0; i < g.size(); ++i) h[i] = f[g[i]];
  return h;
}

inline Permutation inverse(const Permutation& p) {
  Permutation q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<std::uint32_t>(i);
  return q;
}

inline Bitvec apply_permutation(const Permutation& p, const Bitvec& b) {
  Bitvec out(0, b.size);
  for (std::uint32_t i = 0; i < b.size; ++i)
    if (b.test(i)) out.set(p[i]);
  return out;
}

inline AtomMask apply_permutation(const Permutation& p, AtomMask m) {
  AtomMask out = 0;
  while (m) {
    int i = std::countr_zero(m);
    m &= m - 1;
    out |= mask_bit(p[static_cast<std::size_t>(i)]);
  }
  return out;
}

inline bool is_automorphism(const AtomGraph& g, const Permutation& p) {
  const std::size_t n = g.atoms.size();
  if (p.size() != n) return false;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (g.adjacent(u, v) != g.adjacent(p[u], p[v])) return false;
  return true;
}

/// Explicit element list; fine at desk scale. Always contains the identity
/// and is closed under composition and inverse when produced by this module.
struct AutomorphismGroup {
  std::vector<Permutation> elements;

  std::size_t order() const { return elements.size(); }
};

namespace detail {

// Iterated degree refinement: color vertices by degree, then repeatedly by
// the multiset of neighbor colors, until stable. Any isomorphism must
// preserve the resulting colors.
inline std::vector<int> refine_colors(const std::vector<AtomMask>& adj) {
  const std::size_t n = adj.size();
  std::vector<int> color(n);
  for (std::size_t i = 0; i < n; ++i) color[i] = std::popcount(adj[i]);
  for (;;) {
    std::map<std::pair<int, std::vector<int>>, std::vector<std::size_t>> split;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<int> sig;
      AtomMask m = adj[i];
      while (m) {
        int v = std::countr_zero(m);
        m &= m - 1;
        sig.push_back(color[static_cast<std::size_t>(v)]);
      }
      std::sort(sig.begin(), sig.end());
      split[{color[i], std::move(sig)}].push_back(i);
    }
    std::vector<int> next(n);
    int c = 0;
    for (const auto& [key, members] : split) {
      for (auto i : members) next[i] = c;
      ++c;
    }
    if (next == color) return color;
    color = std::move(next);
  }
}

// Backtracking over vertex maps g1 -> g2 consistent with colors and with
// adjacency on all previously assigned pairs. With g1 == g2 this enumerates
// the full automorphism group.
inline void map_search(const std::vector<AtomMask>& a1,
                       const std::vector<AtomMask>& a2,
                       const std::vector<int>& c1, const std::vector<int>& c2,
                       std::vector<std::uint32_t>& perm,
                       std::vector<bool>& used, std::size_t k,
                       std::vector<Permutation>& out, bool first_only) {
  const std::size_t n = a1.size();
  if (k == n) {
    out.push_back(perm);
    return;
  }
  for (std::size_t cand = 0; cand < n; ++cand) {
    if (used[cand] || c1[k] != c2[cand]) continue;
    bool ok = true;
    for (std::size_t p = 0; p < k && ok; ++p)
      ok = (((a1[k] >> p) & 1) == ((a2[cand] >> perm[p]) & 1));
    if (!ok) continue;
    perm[k] = static_cast<std::uint32_t>(cand);
    used[cand] = true;
    map_search(a1, a2, c1, c2, perm, used, k + 1, out, first_only);
    used[cand] = false;
    if (first_only && !out.empty()) return;
  }
}

}  // namespace detail

/// The full automorphism group of the atom graph, by degree-refined
/// backtracking. Intended for desk-scale graphs; refuses above `cap` atoms.
inline AutomorphismGroup automorphisms(const AtomGraph& g,
                                       std::size_t cap = 32) {
  const std::size_t n = g.atoms.size();
  if (n > cap) raise(Errc::too_large, "automorphism search capped");
  auto colors = detail::refine_colors(g.adjacency);
  std::vector<std::uint32_t> perm(n);
  std::vector<bool> used(n, false);
  AutomorphismGroup grp;
  detail::map_search(g.adjacency, g.adjacency, colors, colors, perm, used, 0,
                     grp.elements, false);
  return grp;
}

/// Some adjacency-preserving bijection g1 -> g2, or nullopt.
inline std::optional<Permutation> find_isomorphism(const AtomGraph& g1,
                                                   const AtomGraph& g2,
                                                   std::size_t cap = 32) {
  if (g1.atoms.size() != g2.atoms.size()) return std::nullopt;
  const std::size_t n = g1.atoms.size();
  if (n > cap) raise(Errc::too_large, "isomorphism search capped");
  auto c1 = detail::refine_colors(g1.adjacency);
  auto c2 = detail::refine_colors(g2.adjacency);
  {
    auto s1 = c1, s2 = c2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
  }
  std::vector<std::uint32_t> perm(n);
  std::vector<bool> used(n, false);
  std::vector<Permutation> out;
  detail::map_search(g1.adjacency, g2.adjacency, c1, c2, perm, used, 0, out,
                     true);
  if (out.empty()) return std::nullopt;
  return out.front();
}

/// Closure of a generating set under composition.
inline AutomorphismGroup close_group(std::vector<Permutation> generators,
                                     std::size_t n) {
  std::set<Permutation> seen;
  seen.insert(identity_permutation(n));
  std::vector<Permutation> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& g : frontier)
      for (const auto& h : generators) {
        auto c = compose(h, g);
        if (seen.insert(c).second) next.push_back(c);
      }
    frontier = std::move(next);
  }
  AutomorphismGroup grp;
  grp.elements.assign(seen.begin(), seen.end());
  return grp;
}

/// The relabeling symmetries of a Bell scenario: swapping interchangeable
/// parties and permuting settings of equal arity within a party. Outcome
/// relabelings are deliberately excluded; this is the subgroup under which
/// the published classifications of possibilistic vectors are quoted.
inline AutomorphismGroup bell_relabeling_group(const BellScenario& s) {
  const std::size_t n = s.graph.atoms.size();
  const std::size_t np = s.spec.parties.size();
  std::vector<Permutation> gens;

  auto perm_of = [&](auto&& map_atom) {
    Permutation p(n);
    for (std::size_t i = 0; i < n; ++i) {
      BellAtom img = map_atom(s.atom_meanings[i]);
      int j = s.find_atom(img);
      if (j < 0) raise(Errc::scenario_mismatch, "relabeling left the scenario");
      p[i] = static_cast<std::uint32_t>(j);
    }
    return p;
  };

  // adjacent-party swaps (only between parties with identical arity lists)
  for (std::size_t p = 0; p + 1 < np; ++p) {
    if (s.spec.parties[p] != s.spec.parties[p + 1]) continue;
    gens.push_back(perm_of([&](BellAtom a) {
      std::swap(a.settings[p], a.settings[p + 1]);
      std::swap(a.outcomes[p], a.outcomes[p + 1]);
      return a;
    }));
  }
  // adjacent setting swaps within a party (equal arity only)
  for (std::size_t p = 0; p < np; ++p) {
    const auto& obs = s.spec.parties[p];
    for (std::size_t q = 0; q + 1 < obs.size(); ++q) {
      if (obs[q] != obs[q + 1]) continue;
      gens.push_back(perm_of([&](BellAtom a) {
        if (a.settings[p] == static_cast<int>(q))
          a.settings[p] = static_cast<int>(q) + 1;
        else if (a.settings[p] == static_cast<int>(q) + 1)
          a.settings[p] = static_cast<int>(q);
        return a;
      }));
    }
  }

  for (const auto& g : gens)
    if (!is_automorphism(s.graph, g))
      raise(Errc::scenario_mismatch, "relabeling is not an automorphism");
  return close_group(std::move(gens), n);
}

}  // namespace ctxkit

#endif  // CTXKIT_AUTOMORPHISM_HPP
