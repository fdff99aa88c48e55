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

#include <catch2/catch.hpp>

#include <algorithm>
#include <set>

#include "ctxkit/enumerate.hpp"
#include "ctxkit/io.hpp"
#include "golden_data.hpp"

using namespace ctxkit;

namespace {

Bitvec zeros_at(std::uint32_t n, std::initializer_list<int> zeros) {
  Bitvec b = Bitvec::all_ones(n);
  for (int z : zeros) b.set(z, false);
  return b;
}

}  // namespace

TEST_CASE("lemma constraints on the odd-cycle scenario") {
  AtomGraph g = build_kcbs();
  SECTION("all ones passes") {
    REQUIRE(satisfies_lemma_constraints(Bitvec::all_ones(10), g));
  }
  SECTION("all zeros fails the nonempty-context condition") {
    REQUIRE(!satisfies_lemma_constraints(Bitvec(0, 10), g));
  }
  SECTION("contained ones force the completion to zero") {
    // Ones of {v1,v2,v3} reduced to {v3} lie inside {v3,v4,v5}; the rest of
    // that context must then be 0. A vector keeping v4 or v5 alive fails.
    Bitvec bad = zeros_at(10, {0, 1});  // v1=v2=0, v3..v10=1
    REQUIRE(!satisfies_lemma_constraints(bad, g));
    Bitvec good = zeros_at(10, {0, 1, 3, 4});  // also v4=v5=0
    REQUIRE(satisfies_lemma_constraints(good, g));
  }
}

TEST_CASE("enumeration on a single context finds nothing") {
  AtomGraph tri = build_from_spec("tri", {"a", "b", "c"}, {{0, 1, 2}});
  auto report = enumerate_contextual_vectors(tri, incidence_matrix(tri));
  REQUIRE(report.vectors.empty());
  REQUIRE(report.total_candidates_scanned == 8);
}

TEST_CASE("odd-cycle scenario: 21 vectors in 5 classes") {
  AtomGraph g = build_kcbs();
  IncidenceMatrix m = incidence_matrix(g);
  auto report = enumerate_contextual_vectors(g, m);
  REQUIRE(report.total_candidates_scanned == 1024);
  REQUIRE(report.vectors.size() == 21);

  SECTION("every emitted vector re-checks as logically contextual") {
    for (const auto& b : report.vectors) {
      REQUIRE(satisfies_lemma_constraints(b, g));
      REQUIRE(is_logically_contextual(m, b));
    }
  }

  SECTION("the zero patterns sit on the one-context atoms") {
    // derived by hand from the context structure: zeros only ever fall on
    // the completion atoms v1,v4,v6,v8,v10
    const AtomMask completions =
        mask_bit(0) | mask_bit(3) | mask_bit(5) | mask_bit(7) | mask_bit(9);
    for (const auto& b : report.vectors)
      REQUIRE((~b.bits & full_mask(10) & ~completions) == 0);
  }

  SECTION("classes under the full symmetry group") {
    auto grp = automorphisms(g);
    auto classes = symmetry_classes(report.vectors, grp);
    REQUIRE(classes.size() == 5);

    std::size_t total = 0;
    for (const auto& c : classes) total += c.orbit_size();
    REQUIRE(total == 21);

    // frozen representatives (lexicographically least per class)
    std::vector<Bitvec> expect = {
        zeros_at(10, {0, 3, 5, 7, 9}),  // all completions impossible
        zeros_at(10, {0, 3, 5, 7}),     // four impossible
        zeros_at(10, {0, 3, 5}),        // three consecutive contexts
        zeros_at(10, {0, 3, 7}),        // three with a gap
        zeros_at(10, {0, 5}),           // the quantum-realizable pattern
    };
    std::vector<std::uint32_t> expect_sizes = {1, 5, 5, 5, 5};
    for (std::size_t i = 0; i < 5; ++i) {
      REQUIRE(classes[i].representative == expect[i]);
      REQUIRE(classes[i].orbit_size() == expect_sizes[i]);
    }
  }

  SECTION("closure under the symmetry group") {
    auto grp = automorphisms(g);
    std::set<Bitvec, BitvecLess> all(report.vectors.begin(),
                                     report.vectors.end());
    for (const auto& b : report.vectors)
      for (const auto& p : grp.elements)
        REQUIRE(all.count(apply_permutation(p, b)) == 1);
  }

  SECTION("two-zero filter finds the realizable orbit") {
    auto two = filter_by_zero_count(report.vectors, 2);
    REQUIRE(two.size() == 5);
    std::set<AtomMask> zero_sets;
    for (const auto& b : two) zero_sets.insert(~b.bits & full_mask(10));
    REQUIRE(zero_sets.count(mask_bit(0) | mask_bit(5)) == 1);  // v1,v6
  }

  SECTION("modes agree") {
    auto cw = enumerate_contextual_vectors(g, m, GenerationMode::cliquewise);
    REQUIRE(cw.vectors == report.vectors);
    REQUIRE(cw.total_candidates_scanned < report.total_candidates_scanned);
  }
}

TEST_CASE("two-party scenario: 1240 vectors, 64 with three zeros") {
  AtomGraph g = golden::chsh_reference_graph();
  IncidenceMatrix m = incidence_matrix(g);
  auto report = enumerate_contextual_vectors(g, m);
  REQUIRE(report.total_candidates_scanned == 65536);
  REQUIRE(report.vectors.size() == 1240);

  std::uint32_t min_zeros = 16;
  for (const auto& b : report.vectors)
    min_zeros = std::min(min_zeros, b.count_zeros());
  REQUIRE(min_zeros == 3);

  auto three = filter_by_zero_count(report.vectors, 3);
  REQUIRE(three.size() == 64);

  SECTION("relabeling subgroup gives the ten published classes") {
    BellScenario s = build_bell(BellSpec{{{2, 2}, {2, 2}}}, "chsh");
    auto sub = bell_relabeling_group(s);
    // transport the subgroup onto the reference-ordered graph
    auto iso = golden::chsh_reference_to_built(s);
    auto iso_inv = inverse(iso);
    AutomorphismGroup ref_sub;
    for (const auto& p : sub.elements)
      ref_sub.elements.push_back(compose(iso_inv, compose(p, iso)));
    for (const auto& p : ref_sub.elements)
      REQUIRE(is_automorphism(g, p));

    auto classes = symmetry_classes(three, ref_sub);
    REQUIRE(classes.size() == 10);

    // each published representative falls in its own class
    std::set<std::size_t> hit;
    for (const auto& row : golden::kChshThreeZeroReps) {
      Bitvec rep = golden::to_bitvec(row);
      std::size_t where = classes.size();
      for (std::size_t k = 0; k < classes.size(); ++k)
        for (const auto& mbr : classes[k].members)
          if (mbr == rep) where = k;
      REQUIRE(where < classes.size());
      hit.insert(where);
    }
    REQUIRE(hit.size() == 10);
  }

  SECTION("the full automorphism group merges all three-zero vectors") {
    auto grp = automorphisms(g);
    REQUIRE(grp.order() == 128);
    auto classes = symmetry_classes(three, grp);
    REQUIRE(classes.size() == 1);
  }

  SECTION("modes agree") {
    auto cw = enumerate_contextual_vectors(g, m, GenerationMode::cliquewise);
    REQUIRE(cw.vectors == report.vectors);
  }
}

TEST_CASE("nine-cycle scenario: parallel raw scan agrees with cliquewise") {
  // 18 atoms: cycle atoms P0..P8 and one completion per context; large
  // enough to exercise the threaded block scan
  std::vector<std::string> labels;
  for (int i = 0; i < 9; ++i) labels.push_back("p" + std::to_string(i));
  for (int i = 0; i < 9; ++i) labels.push_back("c" + std::to_string(i));
  std::vector<std::vector<std::uint32_t>> cliques;
  for (std::uint32_t i = 0; i < 9; ++i)
    cliques.push_back({i, (i + 1) % 9, 9 + i});
  AtomGraph g = build_from_spec("nine", labels, cliques);
  IncidenceMatrix m = incidence_matrix(g);

  auto raw = enumerate_contextual_vectors(g, m, GenerationMode::raw);
  auto cw = enumerate_contextual_vectors(g, m, GenerationMode::cliquewise);
  REQUIRE(raw.total_candidates_scanned == (1u << 18));
  REQUIRE(raw.vectors == cw.vectors);
  REQUIRE(!raw.vectors.empty());
  for (const auto& b : raw.vectors) REQUIRE(is_logically_contextual(m, b));
}

TEST_CASE("zero-count filter corner cases") {
  std::vector<Bitvec> vs = {Bitvec::all_ones(4), Bitvec(0b0111, 4),
                            Bitvec(0b0011, 4)};
  REQUIRE(filter_by_zero_count(vs, 0) ==
          std::vector<Bitvec>{Bitvec::all_ones(4)});
  REQUIRE(filter_by_zero_count(vs, 1) == std::vector<Bitvec>{Bitvec(0b0111, 4)});
  REQUIRE(filter_by_zero_count(vs, 3).empty());
}

TEST_CASE("singleton classes under the trivial group") {
  std::vector<Bitvec> vs = {Bitvec(0b01, 2), Bitvec(0b10, 2)};
  AutomorphismGroup trivial;
  trivial.elements.push_back(identity_permutation(2));
  auto classes = symmetry_classes(vs, trivial);
  REQUIRE(classes.size() == 2);
  REQUIRE(classes[0].orbit_size() == 1);
}

TEST_CASE("raw cap falls back to cliquewise guidance") {
  BellScenario s = build_bell(BellSpec{{{2, 2, 2}, {2, 3}}}, "m");
  IncidenceMatrix m = incidence_matrix(s.graph);
  REQUIRE_THROWS_AS(
      enumerate_contextual_vectors(s.graph, m, GenerationMode::raw), Error);
}
