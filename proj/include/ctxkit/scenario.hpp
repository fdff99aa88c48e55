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

#ifndef CTXKIT_SCENARIO_HPP
#define CTXKIT_SCENARIO_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "ctxkit/bits.hpp"
#include "ctxkit/errors.hpp"

namespace ctxkit {

/// A finite measurement scenario as an atom graph: vertices are the minimal
/// events (atoms), edges join compatible atoms, and the maximal cliques are
/// the measurement contexts. The clique list is always the complete list of
/// maximal cliques of `adjacency`, held in canonical order (sorted by least
/// member, then lexicographically by member list).
struct AtomGraph {
  std::string name;
  std::vector<std::string> atoms;     // labels, index = atom id
  std::vector<AtomMask> adjacency;    // neighbor mask per atom
  std::vector<AtomMask> cliques;      // maximal cliques as atom masks

  std::uint32_t atom_count() const {
    return static_cast<std::uint32_t>(atoms.size());
  }
  bool adjacent(std::size_t u, std::size_t v) const {
    return (adjacency[u] >> v) & 1;
  }
  std::vector<std::uint32_t> clique_members(std::size_t k) const {
    std::vector<std::uint32_t> out;
    AtomMask m = cliques[k];
    while (m) {
      out.push_back(static_cast<std::uint32_t>(std::countr_zero(m)));
      m &= m - 1;
    }
    return out;
  }
  int atom_index(const std::string& label) const {
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (atoms[i] == label) return static_cast<int>(i);
    return -1;
  }
};

namespace detail {

inline void bron_kerbosch(const std::vector<AtomMask>& adj, AtomMask R,
                          AtomMask P, AtomMask X,
                          std::vector<AtomMask>& out) {
  if (P == 0 && X == 0) {
    out.push_back(R);
    return;
  }
  // pivot = vertex of P|X maximizing |P & N(pivot)|
  AtomMask px = P | X;
  int pivot = -1, best = -1;
  AtomMask scan = px;
  while (scan) {
    int u = std::countr_zero(scan);
    scan &= scan - 1;
    int deg = std::popcount(P & adj[u]);
    if (deg > best) {
      best = deg;
      pivot = u;
    }
  }
  AtomMask cand = P & ~adj[pivot];
  while (cand) {
    int v = std::countr_zero(cand);
    AtomMask vb = mask_bit(static_cast<std::size_t>(v));
    cand &= cand - 1;
    bron_kerbosch(adj, R | vb, P & adj[v], X & adj[v], out);
    P &= ~vb;
    X |= vb;
  }
}

inline std::vector<std::uint32_t> mask_to_list(AtomMask m) {
  std::vector<std::uint32_t> out;
  while (m) {
    out.push_back(static_cast<std::uint32_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

inline bool clique_order_less(AtomMask a, AtomMask b) {
  if (a == b) return false;
  int ma = std::countr_zero(a), mb = std::countr_zero(b);
  if (ma != mb) return ma < mb;
  return mask_to_list(a) < mask_to_list(b);
}

}  // namespace detail

/// All maximal cliques of a symmetric irreflexive adjacency relation, each
/// exactly once, sorted by least member then lexicographically.
inline std::vector<AtomMask> maximal_cliques(
    const std::vector<AtomMask>& adjacency) {
  const std::size_t n = adjacency.size();
  if (n > kMaxAtoms) raise(Errc::too_large, "more than 64 atoms");
  if (n == 0) return {};
  std::vector<AtomMask> out;
  detail::bron_kerbosch(adjacency, 0, full_mask(n), 0, out);
  std::sort(out.begin(), out.end(), detail::clique_order_less);
  return out;
}

/// Builds a scenario from labels and an explicit context list. The adjacency
/// is induced by the cliques; the provided cliques are then re-verified to be
/// exactly the maximal cliques of that adjacency. Maximality is never trusted
/// from input (deterministic-state semantics silently break otherwise).
inline AtomGraph build_from_spec(
    const std::string& name, const std::vector<std::string>& labels,
    const std::vector<std::vector<std::uint32_t>>& cliques) {
  const std::size_t n = labels.size();
  if (n == 0) raise(Errc::bad_length, "scenario needs at least one atom");
  if (n > kMaxAtoms) raise(Errc::too_large, "more than 64 atoms");

  {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels)
      if (!seen.insert(l).second)
        raise(Errc::duplicate_label, "atom label '" + l + "'");
  }

  std::vector<AtomMask> clique_masks;
  for (const auto& c : cliques) {
    AtomMask m = 0;
    for (auto idx : c) {
      if (idx >= n) raise(Errc::out_of_range, "clique index out of range");
      m |= mask_bit(idx);
    }
    if (m == 0) raise(Errc::bad_length, "empty clique");
    clique_masks.push_back(m);
  }

  AtomMask covered = 0;
  for (auto m : clique_masks) covered |= m;
  for (std::size_t i = 0; i < n; ++i)
    if (!((covered >> i) & 1))
      raise(Errc::isolated_atom, "atom '" + labels[i] + "' is in no clique");

  {
    auto sorted = clique_masks;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      raise(Errc::non_maximal_clique, "duplicate clique in input");
  }

  std::vector<AtomMask> adj(n, 0);
  for (auto m : clique_masks) {
    auto members = detail::mask_to_list(m);
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        adj[members[a]] |= mask_bit(members[b]);
        adj[members[b]] |= mask_bit(members[a]);
      }
  }

  auto maximal = maximal_cliques(adj);
  std::set<AtomMask> maximal_set(maximal.begin(), maximal.end());
  for (auto m : clique_masks)
    if (!maximal_set.count(m))
      raise(Errc::non_maximal_clique,
            "a listed clique is contained in a larger context");
  if (maximal.size() != clique_masks.size()) {
    std::set<AtomMask> provided(clique_masks.begin(), clique_masks.end());
    for (auto m : maximal)
      if (!provided.count(m)) {
        auto members = detail::mask_to_list(m);
        std::string what = "induced adjacency has an unlisted context {";
        for (std::size_t i = 0; i < members.size(); ++i)
          what += (i ? "," : "") + labels[members[i]];
        raise(Errc::missing_clique, what + "}");
      }
  }

  AtomGraph g;
  g.name = name;
  g.atoms = labels;
  g.adjacency = std::move(adj);
  g.cliques = std::move(maximal);
  return g;
}

// ---------------------------------------------------------------------------
// Bell scenarios

/// Per-party list of observables, each given by its outcome arity.
struct BellSpec {
  std::vector<std::vector<int>> parties;

  void validate() const {
    if (parties.empty()) raise(Errc::bad_length, "need at least one party");
    for (const auto& p : parties) {
      if (p.empty()) raise(Errc::bad_length, "party with no observables");
      for (int a : p)
        if (a < 2) raise(Errc::out_of_range, "outcome arity must be >= 2");
    }
  }
};

/// One atom of a Bell scenario: a chosen setting and outcome for each party.
struct BellAtom {
  std::vector<int> settings;
  std::vector<int> outcomes;

  bool operator==(const BellAtom& o) const {
    return settings == o.settings && outcomes == o.outcomes;
  }
};

inline std::string bell_atom_label(const BellAtom& a) {
  std::string s;
  for (std::size_t p = 0; p < a.settings.size(); ++p) {
    if (p) s += ',';
    s += static_cast<char>('A' + p);
    s += std::to_string(a.settings[p]);
    s += '=';
    s += std::to_string(a.outcomes[p]);
  }
  return s;
}

/// A built Bell scenario: the atom graph plus the meaning of each atom.
struct BellScenario {
  BellSpec spec;
  AtomGraph graph;
  std::vector<BellAtom> atom_meanings;  // parallel to graph.atoms

  int find_atom(const BellAtom& a) const {
    for (std::size_t i = 0; i < atom_meanings.size(); ++i)
      if (atom_meanings[i] == a) return static_cast<int>(i);
    return -1;
  }
};

/// Two distinct atoms are compatible iff some party uses the same setting
/// with a different outcome. This reproduces same-context exclusivity and
/// the exclusivity-induced cross-context compatibilities.
inline bool bell_atoms_compatible(const BellAtom& u, const BellAtom& v) {
  for (std::size_t p = 0; p < u.settings.size(); ++p)
    if (u.settings[p] == v.settings[p] && u.outcomes[p] != v.outcomes[p])
      return true;
  return false;
}

/// Builds the atom graph of a Bell scenario. Atoms are ordered
/// lexicographically by (setting tuple, outcome tuple); contexts and the
/// exclusivity-induced cliques both come out of plain maximal-clique
/// enumeration over the compatibility relation.
inline BellScenario build_bell(const BellSpec& spec,
                               const std::string& name = "bell") {
  spec.validate();
  const std::size_t np = spec.parties.size();

  std::vector<BellAtom> atoms;
  std::vector<int> setting(np, 0);
  // enumerate setting tuples lexicographically
  auto next_tuple = [](std::vector<int>& t, const std::vector<int>& limits) {
    for (std::size_t i = t.size(); i-- > 0;) {
      if (++t[i] < limits[i]) return true;
      t[i] = 0;
    }
    return false;
  };
  std::vector<int> setting_limits(np);
  for (std::size_t p = 0; p < np; ++p)
    setting_limits[p] = static_cast<int>(spec.parties[p].size());

  do {
    std::vector<int> outcome_limits(np);
    for (std::size_t p = 0; p < np; ++p)
      outcome_limits[p] = spec.parties[p][setting[p]];
    std::vector<int> outcome(np, 0);
    do {
      atoms.push_back(BellAtom{setting, outcome});
    } while (next_tuple(outcome, outcome_limits));
  } while (next_tuple(setting, setting_limits));

  const std::size_t n = atoms.size();
  if (n > kMaxAtoms) raise(Errc::too_large, "Bell scenario exceeds 64 atoms");

  std::vector<AtomMask> adj(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (bell_atoms_compatible(atoms[a], atoms[b])) {
        adj[a] |= mask_bit(b);
        adj[b] |= mask_bit(a);
      }

  BellScenario s;
  s.spec = spec;
  s.graph.name = name;
  s.graph.adjacency = adj;
  s.graph.cliques = maximal_cliques(adj);
  for (const auto& a : atoms) s.graph.atoms.push_back(bell_atom_label(a));
  s.atom_meanings = std::move(atoms);
  return s;
}

/// The 10-vertex, 5-context odd-cycle scenario with the conventional fixed
/// atom ordering v1..v10: contexts {v1,v2,v3}, {v3,v4,v5}, {v5,v6,v7},
/// {v7,v8,v9}, {v9,v10,v2}.
inline AtomGraph build_kcbs() {
  std::vector<std::string> labels;
  for (int i = 1; i <= 10; ++i) labels.push_back("v" + std::to_string(i));
  std::vector<std::vector<std::uint32_t>> cliques = {
      {0, 1, 2}, {2, 3, 4}, {4, 5, 6}, {6, 7, 8}, {8, 9, 1}};
  return build_from_spec("kcbs", labels, cliques);
}

}  // namespace ctxkit

#endif  // CTXKIT_SCENARIO_HPP
