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

#ifndef CTXKIT_HARDY_HPP
#define CTXKIT_HARDY_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ctxkit/bits.hpp"
#include "ctxkit/logic.hpp"
#include "ctxkit/scenario.hpp"
#include "ctxkit/states.hpp"

namespace ctxkit {

/// An observable event, given as a disjunction of atoms inside one context,
/// optionally negated. Within its context the negation is again a disjunction
/// of atoms (the complement), so every event here reduces to a set of atoms;
/// the flag is kept for faithful printing. subset == 0 with negated == false
/// is the impossible event, subset == full context is the certain event.
struct Event {
  std::uint32_t clique = 0;
  AtomMask subset = 0;
  bool negated = false;

  bool operator==(const Event& o) const {
    return clique == o.clique && subset == o.subset && negated == o.negated;
  }
};

inline void check_event(const Event& e, const AtomGraph& g) {
  if (e.clique >= g.cliques.size())
    raise(Errc::bad_event, "context index out of range");
  if (e.subset & ~g.cliques[e.clique])
    raise(Errc::bad_event, "event atoms leave the context");
}

/// The atoms whose disjunction equals the event inside its context.
inline AtomMask event_support(const Event& e, const AtomGraph& g) {
  check_event(e, g);
  return e.negated ? (g.cliques[e.clique] & ~e.subset) : e.subset;
}

inline Event atom_event(const AtomGraph& g, std::uint32_t atom,
                        bool negated = false) {
  for (std::uint32_t k = 0; k < g.cliques.size(); ++k)
    if ((g.cliques[k] >> atom) & 1) return Event{k, mask_bit(atom), negated};
  raise(Errc::bad_event, "atom belongs to no context");
}

inline std::string event_to_string(const Event& e, const AtomGraph& g) {
  const AtomMask cl = g.cliques[e.clique];
  std::string body;
  int count = 0;
  AtomMask m = e.subset;
  while (m) {
    int v = std::countr_zero(m);
    m &= m - 1;
    if (count++) body += "|";
    body += g.atoms[static_cast<std::size_t>(v)];
  }
  if (e.subset == 0) body = "false";
  if (e.subset == cl) body = "true";
  if (!e.negated) return count > 1 ? "(" + body + ")" : body;
  return "!" + (count > 1 ? "(" + body + ")" : body);
}

/// Classical image of an event: the deterministic states that make it true.
inline StateSet event_image(const Event& e, const IncidenceMatrix& m,
                            const AtomGraph& g) {
  check_event(e, g);
  const AtomMask support = e.subset;
  StateSet img(m.column_count());
  for (std::size_t j = 0; j < m.column_count(); ++j)
    if (m.columns[j] & support) img.set(j);
  return e.negated ? img.complement() : img;
}

/// States contradicted by the model: some atom is real for the state but
/// impossible for the model.
inline StateSet contradicted_states(const IncidenceMatrix& m,
                                    const Bitvec& b) {
  if (b.size != m.atom_count)
    raise(Errc::dimension_mismatch, "vector length != row count");
  const AtomMask zeros = ~b.bits & full_mask(b.size);
  StateSet out(m.column_count());
  for (std::size_t j = 0; j < m.column_count(); ++j)
    if (m.columns[j] & zeros) out.set(j);
  return out;
}

/// A Hardy-type paradox: events whose classical images have empty
/// intersection, all but one certain under the model and the remaining one
/// possible. The certificate stores each event's image and the running
/// intersection so the emptiness claim can be replayed.
struct HardyParadox {
  std::vector<Event> events;
  std::size_t success_index = 0;
  std::vector<StateSet> images;             // one per event
  std::vector<StateSet> intersection_trace; // running intersections

  const Event& success_event() const { return events[success_index]; }
};

inline std::string paradox_to_string(const HardyParadox& p,
                                     const AtomGraph& g) {
  std::string s = "{";
  for (std::size_t i = 0; i < p.events.size(); ++i) {
    if (i) s += ", ";
    s += event_to_string(p.events[i], g);
  }
  return s + "}";
}

/// Success-event candidates: events that are possible under the model and
/// whose classical image contains no uncontradicted state. Enumerates the
/// nonempty subsets of every context, deduplicated by classical image, atoms
/// first. Requires the model to be logically contextual.
inline std::vector<Event> find_success_events(const AtomGraph& g,
                                              const IncidenceMatrix& m,
                                              const Bitvec& b) {
  if (!is_logically_contextual(m, b))
    raise(Errc::not_contextual, "model admits a classical explanation");
  const StateSet contradicted = contradicted_states(m, b);
  const StateSet safe = contradicted.complement();

  std::vector<Event> out;
  std::map<StateSet, bool> seen;
  std::vector<Event> all;
  for (std::uint32_t k = 0; k < g.cliques.size(); ++k) {
    const AtomMask cl = g.cliques[k];
    for (AtomMask sub = cl; sub; sub = (sub - 1) & cl)
      all.push_back(Event{k, sub, false});
  }
  std::sort(all.begin(), all.end(), [](const Event& a, const Event& b2) {
    const int pa = std::popcount(a.subset), pb = std::popcount(b2.subset);
    if (pa != pb) return pa < pb;
    if (a.clique != b2.clique) return a.clique < b2.clique;
    return a.subset < b2.subset;
  });
  for (const auto& e : all) {
    if ((e.subset & b.bits) == 0) continue;  // impossible under the model
    StateSet img = event_image(e, m, g);
    if (img.intersects(safe)) continue;
    if (!seen.emplace(std::move(img), true).second) continue;
    out.push_back(e);
  }
  return out;
}

namespace detail {

// Exact minimum set cover by depth-first search with a greedy upper bound,
// branching on an uncovered element. Universe sizes here are state counts of
// desk-scale scenarios; `exact_cap` guards the worst case, greedy beyond.
struct CoverSearch {
  const std::vector<StateSet>& sets;  // candidate covers, per atom
  std::vector<std::uint32_t> atoms;   // atom id per set
  StateSet universe;

  std::vector<std::uint32_t> best;

  std::vector<std::uint32_t> greedy() const {
    std::vector<std::uint32_t> picked;
    StateSet left = universe;
    while (left.any()) {
      std::size_t bi = 0, bc = 0;
      for (std::size_t i = 0; i < sets.size(); ++i) {
        std::size_t c = (sets[i] & left).count();
        if (c > bc) {
          bc = c;
          bi = i;
        }
      }
      if (bc == 0) break;  // uncoverable; caller checks beforehand
      picked.push_back(static_cast<std::uint32_t>(bi));
      left &= sets[bi].complement();
    }
    return picked;
  }

  void dfs(StateSet left, std::vector<std::uint32_t>& chosen) {
    if (left.none()) {
      if (chosen.size() < best.size()) best = chosen;
      return;
    }
    if (chosen.size() + 1 >= best.size()) return;  // can't beat best
    std::size_t pivot = left.indices().front();
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (!sets[i].test(pivot)) continue;
      chosen.push_back(static_cast<std::uint32_t>(i));
      dfs(left & sets[i].complement(), chosen);
      chosen.pop_back();
    }
  }
};

}  // namespace detail

/// Builds the paradox anchored at success event `e`: one negated-atom event
/// per killing atom, where the killing atoms form a minimum set of
/// impossible atoms contradicting every state in e's image. Exact cover up
/// to `exact_cap` universe elements, greedy beyond (verification validity is
/// unaffected, only the event count). If `e` is the certain event, only the
/// negated kills are emitted and the first doubles as the success slot (its
/// probability is 1, the strong-contextuality shape).
inline HardyParadox extract_paradox(const AtomGraph& g,
                                    const IncidenceMatrix& m, const Bitvec& b,
                                    const Event& e,
                                    std::size_t exact_cap = 64) {
  check_event(e, g);
  const StateSet img = event_image(e, m, g);
  const AtomMask zeros = ~b.bits & full_mask(b.size);

  std::vector<std::uint32_t> killer_atoms;
  std::vector<StateSet> killer_sets;
  AtomMask zscan = zeros;
  while (zscan) {
    std::uint32_t a = static_cast<std::uint32_t>(std::countr_zero(zscan));
    zscan &= zscan - 1;
    StateSet kills = m.row_support(a) & img;
    if (kills.any()) {
      killer_atoms.push_back(a);
      killer_sets.push_back(std::move(kills));
    }
  }
  {
    StateSet covered(m.column_count());
    for (const auto& s : killer_sets) covered |= s;
    if (!img.subset_of(covered)) {
      // some state in the image admits no impossible atom
      auto missing = (img & covered.complement()).indices();
      raise(Errc::not_admissible,
            "state " + std::to_string(missing.front()) +
                " in the success image cannot be contradicted");
    }
  }

  detail::CoverSearch search{killer_sets, killer_atoms, img, {}};
  std::vector<std::uint32_t> cover_idx = search.greedy();
  if (img.count() <= exact_cap) {
    search.best = cover_idx;
    std::vector<std::uint32_t> chosen;
    search.dfs(img, chosen);
    cover_idx = search.best;
  }
  std::vector<std::uint32_t> cover;
  for (auto i : cover_idx) cover.push_back(killer_atoms[i]);
  std::sort(cover.begin(), cover.end());

  HardyParadox p;
  const bool success_is_certain = (e.subset == g.cliques[e.clique]);
  if (!success_is_certain) p.events.push_back(e);
  for (auto a : cover) p.events.push_back(atom_event(g, a, true));
  p.success_index = 0;
  for (const auto& ev : p.events)
    p.images.push_back(event_image(ev, m, g));
  StateSet run(m.column_count(), true);
  for (const auto& im : p.images) {
    run &= im;
    p.intersection_trace.push_back(run);
  }
  return p;
}

/// Replays the stored certificate: re-intersects the images and checks the
/// trace; true iff the final intersection is empty and the trace matches.
inline bool replay_certificate(const HardyParadox& p, std::size_t columns) {
  StateSet run(columns, true);
  for (std::size_t i = 0; i < p.images.size(); ++i) {
    run &= p.images[i];
    if (i < p.intersection_trace.size() && run != p.intersection_trace[i])
      return false;
  }
  return run.none();
}

struct VerificationReport {
  bool logical_ok = false;        // empty classical intersection
  bool probabilistic_ok = false;  // certainty + positivity pattern
  double sp = 0;                  // probability of the success event
  bool sp_possible = false;       // possibilistic mode: success has a 1
  bool sp_certain = false;        // possibilistic mode: success forced certain
  std::vector<std::string> violations;

  bool verified() const { return logical_ok && probabilistic_ok; }
};

namespace detail {

inline bool check_logical(const HardyParadox& p, const AtomGraph& g,
                          const IncidenceMatrix& m,
                          VerificationReport& report) {
  StateSet run(m.column_count(), true);
  for (const auto& e : p.events) run &= event_image(e, m, g);
  if (!run.none()) {
    report.violations.push_back("classical images intersect");
    return false;
  }
  return true;
}

inline void check_paradox_shape(const HardyParadox& p, const AtomGraph& g) {
  if (p.events.empty()) raise(Errc::bad_event, "empty paradox");
  if (p.success_index >= p.events.size())
    raise(Errc::bad_event, "success index out of range");
  for (const auto& e : p.events) check_event(e, g);
}

}  // namespace detail

/// Verifies a paradox against a probabilistic state: non-success events must
/// be certain within `tol`, the success event strictly possible.
inline VerificationReport verify_paradox(const HardyParadox& p,
                                         const AtomGraph& g,
                                         const IncidenceMatrix& m,
                                         const State& model,
                                         double tol = 1e-9) {
  detail::check_paradox_shape(p, g);
  if (model.values.size() != g.atoms.size())
    raise(Errc::scenario_mismatch, "model length != atom count");
  VerificationReport r;
  r.logical_ok = detail::check_logical(p, g, m, r);
  r.probabilistic_ok = true;
  for (std::size_t i = 0; i < p.events.size(); ++i) {
    double v = 0;
    AtomMask s = event_support(p.events[i], g);
    while (s) {
      int a = std::countr_zero(s);
      s &= s - 1;
      v += model.values[static_cast<std::size_t>(a)];
    }
    if (i == p.success_index) {
      r.sp = v;
      r.sp_possible = v > tol;
      r.sp_certain = std::abs(v - 1.0) <= tol;
      if (!(v > tol)) {
        r.probabilistic_ok = false;
        r.violations.push_back("success event has zero probability");
      }
    } else if (std::abs(v - 1.0) > tol) {
      r.probabilistic_ok = false;
      r.violations.push_back("event " + std::to_string(i) +
                             " is not certain (p=" + std::to_string(v) + ")");
    }
  }
  return r;
}

/// Possibilistic verification: certainty of an event means every atom of its
/// complement (inside its context) carries bit 0; possibility means some
/// support atom carries bit 1. sp reports the possibility bit; sp_certain
/// additionally reports forced certainty (the SP = 1 regime).
inline VerificationReport verify_paradox(const HardyParadox& p,
                                         const AtomGraph& g,
                                         const IncidenceMatrix& m,
                                         const Bitvec& bits) {
  detail::check_paradox_shape(p, g);
  if (bits.size != g.atom_count())
    raise(Errc::scenario_mismatch, "bit length != atom count");
  VerificationReport r;
  r.logical_ok = detail::check_logical(p, g, m, r);
  r.probabilistic_ok = true;
  for (std::size_t i = 0; i < p.events.size(); ++i) {
    const AtomMask support = event_support(p.events[i], g);
    const AtomMask rest = g.cliques[p.events[i].clique] & ~support;
    const bool possible = (support & bits.bits) != 0;
    const bool certain = (rest & bits.bits) == 0;
    if (i == p.success_index) {
      r.sp_possible = possible;
      r.sp_certain = certain;
      r.sp = possible ? 1.0 : 0.0;
      if (!possible) {
        r.probabilistic_ok = false;
        r.violations.push_back("success event impossible");
      }
    } else if (!certain) {
      r.probabilistic_ok = false;
      r.violations.push_back("event " + std::to_string(i) + " not certain");
    }
  }
  return r;
}

/// (E implies not-F) iff (E and F never co-occur): a set-level identity of
/// the classical embedding, exposed for property testing.
inline bool exclusivity_property_check(const StateSet& E, const StateSet& F) {
  const bool implies = E.subset_of(F.complement());
  const bool disjoint = !E.intersects(F);
  return implies == disjoint;
}

}  // namespace ctxkit

#endif  // CTXKIT_HARDY_HPP
