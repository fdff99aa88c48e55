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
//
// End-to-end walk through the odd-cycle scenario: build the graph, find
// every possibilistic fingerprint of logical contextuality, pick the one the
// built-in quantum construction realizes, and extract its paradox.

#include <iomanip>
#include <iostream>

#include "ctxkit/ctxkit.hpp"

int main() {
  using namespace ctxkit;

  AtomGraph g = build_kcbs();
  IncidenceMatrix m = incidence_matrix(g);
  std::cout << g.name << ": " << g.atoms.size() << " atoms, "
            << g.cliques.size() << " contexts, " << m.column_count()
            << " deterministic states\n";

  CandidateReport report = enumerate_contextual_vectors(g, m);
  auto classes = symmetry_classes(report.vectors, automorphisms(g));
  std::cout << report.vectors.size() << " logically contextual vectors in "
            << classes.size() << " symmetry classes\n";

  KcbsRealization kc = kcbs_realization();
  State born = born_values(kc.realization, kc.psi);
  Bitvec b = possibilistic_collapse(born, 1e-9);
  std::cout << "collapse of the designated state: " << b.to_string() << "\n";

  Event success = find_success_events(g, m, b).front();
  HardyParadox p = extract_paradox(g, m, b, success);
  auto verdict = verify_paradox(p, g, m, born);
  std::cout << "paradox " << paradox_to_string(p, g) << "  sp = "
            << std::setprecision(6) << verdict.sp
            << (verdict.verified() ? "  (verified)" : "  (FAILED)") << "\n";
  return verdict.verified() ? 0 : 1;
}
