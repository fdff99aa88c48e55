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
// Command-line front end. Exit codes: 0 = success, 1 = well-formed negative
// verdict where the query expects existence (no paradox, not realizable),
// 2 = bad input. Diagnostics go to stderr, results to stdout.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ctxkit/ctxkit.hpp"

namespace {

using namespace ctxkit;

struct Options {
  std::string format = "text";
  double tolerance = 1e-9;

  bool machine() const { return format == "machine"; }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

bool file_exists(const std::string& path) {
  std::ifstream in(path);
  return in.good();
}

/// A scenario argument is a path to a scenario file, or the name of a
/// built-in (kcbs, chsh, mansfield233) when no such file exists.
AtomGraph load_scenario(const std::string& arg) {
  if (file_exists(arg)) return parse_scenario(read_file(arg));
  if (is_builtin_scenario(arg)) return builtin_scenario(arg);
  raise(Errc::parse_error, "no scenario file or built-in named '" + arg + "'");
}

Model load_model(const std::string& arg, const AtomGraph& g) {
  Model m = parse_model(read_file(arg));
  if (m.scenario_name != g.name)
    raise(Errc::parse_error, "model is for scenario '" + m.scenario_name +
                                 "', not '" + g.name + "'");
  if (m.length() != g.atoms.size())
    raise(Errc::parse_error, "model length does not match atom count");
  return m;
}

/// Collapses any model kind to a possibilistic vector. Exact models collapse
/// at zero; real-valued ones at the configured tolerance, after validation.
Bitvec model_bits(const Model& m, const AtomGraph& g, const Options& opt) {
  switch (m.kind) {
    case Model::Kind::bits:
      return m.bits;
    case Model::Kind::exacts:
      return possibilistic_collapse(validate_state_exact(g, m.exacts));
    case Model::Kind::reals:
      return possibilistic_collapse(validate_state(g, m.reals, opt.tolerance),
                                    opt.tolerance);
  }
  raise(Errc::parse_error, "empty model");
}

std::string verdict_string(const IncidenceMatrix& m, const Bitvec& b) {
  if (is_strongly_contextual(m, b)) return "strongly-contextual";
  if (is_logically_contextual(m, b)) return "logically-contextual";
  return "noncontextual";
}

int cmd_check(const std::string& scenario_arg, const std::string& model_arg,
              const Options& opt) {
  AtomGraph g = load_scenario(scenario_arg);
  IncidenceMatrix m = incidence_matrix(g);
  Bitvec b = model_bits(load_model(model_arg, g), g, opt);
  if (!satisfies_lemma_constraints(b, g))
    std::cerr << "note: bits violate the collapse constraints; no state has "
                 "this possibilistic pattern\n";

  std::string verdict = verdict_string(m, b);
  auto sol = solve_or_system(m, b);
  if (opt.machine()) {
    std::cout << "verdict " << verdict << "\n";
    if (sol.solvable) {
      std::cout << "witness";
      for (auto x : sol.witness) std::cout << ' ' << int(x);
      std::cout << "\n";
    } else {
      const AtomMask zero_rows = ~b.bits & full_mask(b.size);
      AtomMask covered = 0;
      for (std::size_t j = 0; j < m.columns.size(); ++j)
        if (!(m.columns[j] & zero_rows)) covered |= m.columns[j];
      std::cout << "uncovered";
      AtomMask un = b.bits & ~covered;
      while (un) {
        int v = std::countr_zero(un);
        un &= un - 1;
        std::cout << ' ' << g.atoms[static_cast<std::size_t>(v)];
      }
      std::cout << "\n";
    }
  } else {
    std::cout << verdict << "\n";
    if (sol.solvable) {
      std::cout << "witness x = ";
      for (auto x : sol.witness) std::cout << int(x);
      std::cout << "  (deterministic states with weight 1)\n";
    } else {
      const AtomMask zero_rows = ~b.bits & full_mask(b.size);
      AtomMask covered = 0;
      for (std::size_t j = 0; j < m.columns.size(); ++j)
        if (!(m.columns[j] & zero_rows)) covered |= m.columns[j];
      AtomMask un = b.bits & ~covered;
      std::cout << "certificate: possible atoms not reachable by any "
                   "unconstrained deterministic state:";
      while (un) {
        int v = std::countr_zero(un);
        un &= un - 1;
        std::cout << ' ' << g.atoms[static_cast<std::size_t>(v)];
      }
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_states(const std::string& scenario_arg, const Options& opt) {
  AtomGraph g = load_scenario(scenario_arg);
  auto states = enumerate_deterministic(g);
  if (opt.machine()) {
    std::cout << "count " << states.size() << "\n";
    for (const auto& s : states) std::cout << "state " << s.to_string() << "\n";
  } else {
    std::cout << states.size() << " deterministic states on " << g.name
              << "\n";
    for (const auto& s : states) std::cout << s.to_string() << "\n";
  }
  return 0;
}

int cmd_matrix(const std::string& scenario_arg, const Options& opt) {
  AtomGraph g = load_scenario(scenario_arg);
  IncidenceMatrix m = incidence_matrix(g);
  if (!opt.machine())
    std::cout << m.atom_count << " x " << m.column_count()
              << " incidence matrix (rows = atoms, columns = deterministic "
                 "states)\n";
  for (std::size_t i = 0; i < m.atom_count; ++i) {
    for (std::size_t j = 0; j < m.column_count(); ++j)
      std::cout << (j ? " " : "") << (m.at(i, j) ? 1 : 0);
    std::cout << "\n";
  }
  return 0;
}

int cmd_enumerate(const std::string& scenario_arg, int zeros, bool classes,
                  const std::string& mode, const std::string& group_choice,
                  bool print_all, const Options& opt) {
  AtomGraph g = load_scenario(scenario_arg);
  IncidenceMatrix m = incidence_matrix(g);
  GenerationMode gm =
      mode == "cliquewise" ? GenerationMode::cliquewise : GenerationMode::raw;
  CandidateReport report = enumerate_contextual_vectors(g, m, gm);

  std::vector<Bitvec> vectors = report.vectors;
  if (zeros >= 0)
    vectors = filter_by_zero_count(vectors, static_cast<std::uint32_t>(zeros));

  if (opt.machine()) {
    std::cout << "scanned " << report.total_candidates_scanned << "\n";
    std::cout << "count " << vectors.size() << "\n";
  } else {
    std::cout << vectors.size() << " vectors (from "
              << report.total_candidates_scanned << " candidates scanned)\n";
  }

  if (classes) {
    // `auto` uses the relabeling subgroup for the built-in Bell scenarios,
    // where the published classifications are quoted under party/setting
    // relabelings; the full graph automorphism group otherwise.
    AutomorphismGroup grp;
    bool relabel = group_choice == "relabel" ||
                   (group_choice == "auto" &&
                    (g.name == "chsh" || g.name == "mansfield233"));
    if (relabel) {
      BellSpec spec = g.name == "chsh" ? BellSpec{{{2, 2}, {2, 2}}}
                                       : BellSpec{{{2, 2, 2}, {2, 3}}};
      grp = bell_relabeling_group(build_bell(spec, g.name));
    } else {
      grp = automorphisms(g);
    }
    auto cls = symmetry_classes(vectors, grp);
    if (opt.machine()) {
      std::cout << "classes " << cls.size() << "\n";
      for (const auto& c : cls)
        std::cout << "class " << c.representative.to_string() << " "
                  << c.orbit_size() << "\n";
    } else {
      std::cout << cls.size() << " classes under a symmetry group of order "
                << grp.order() << "\n";
      for (const auto& c : cls)
        std::cout << "  " << c.representative.to_string() << "  (orbit "
                  << c.orbit_size() << ")\n";
    }
  }
  if (print_all)
    for (const auto& v : vectors)
      std::cout << (opt.machine() ? "bits " : "") << v.to_string() << "\n";
  return 0;
}

int cmd_paradox(const std::string& scenario_arg, const std::string& model_arg,
                bool all_success, int max_events, const Options& opt) {
  AtomGraph g = load_scenario(scenario_arg);
  IncidenceMatrix m = incidence_matrix(g);
  Model model = load_model(model_arg, g);
  Bitvec b = model_bits(model, g, opt);

  if (!is_logically_contextual(m, b)) {
    std::cout << (opt.machine() ? "verdict noncontextual\n"
                                : "noncontextual: no paradox exists\n");
    return 1;
  }

  auto successes = find_success_events(g, m, b);
  if (all_success) {
    std::size_t shown = 0;
    for (const auto& e : successes) {
      if (max_events >= 0 && shown++ >= static_cast<std::size_t>(max_events))
        break;
      std::cout << (opt.machine() ? "success-event " : "admissible: ")
                << event_to_string(e, g) << "\n";
    }
  }

  // strongly contextual models get the all-negated paradox whose success
  // event is certain; otherwise the least admissible atom anchors it
  Event chosen = is_strongly_contextual(m, b)
                     ? Event{0, g.cliques[0], false}
                     : successes.front();
  HardyParadox p = extract_paradox(g, m, b, chosen);
  if (max_events >= 0 &&
      p.events.size() > static_cast<std::size_t>(max_events)) {
    std::cerr << "note: paradox has " << p.events.size()
              << " events, above --max-events\n";
  }

  VerificationReport report;
  if (model.kind == Model::Kind::reals) {
    State st = validate_state(g, model.reals, opt.tolerance);
    report = verify_paradox(p, g, m, st, opt.tolerance);
  } else {
    report = verify_paradox(p, g, m, b);
  }

  if (opt.machine()) {
    std::cout << "paradox " << g.name << "\n";
    for (const auto& e : p.events)
      std::cout << "event " << event_to_string(e, g) << "\n";
    std::cout << "success " << event_to_string(p.success_event(), g) << "\n";
    std::cout << "sp " << std::setprecision(12) << report.sp << "\n";
    std::cout << "sp-certain " << (report.sp_certain ? 1 : 0) << "\n";
    std::cout << "verified " << (report.verified() ? 1 : 0) << "\n";
  } else {
    std::cout << "paradox: " << paradox_to_string(p, g) << "\n";
    std::cout << "success event: " << event_to_string(p.success_event(), g)
              << "\n";
    if (model.kind == Model::Kind::reals)
      std::cout << "sp: " << std::setprecision(12) << report.sp << "\n";
    else
      std::cout << "sp: " << (report.sp_certain
                                  ? "certain (SP = 1)"
                                  : (report.sp_possible ? "possible"
                                                        : "impossible"))
                << "\n";
    std::cout << "certificate (classical images, intersection must be "
                 "empty):\n";
    for (std::size_t i = 0; i < p.events.size(); ++i) {
      std::cout << "  " << event_to_string(p.events[i], g) << " -> {";
      bool first = true;
      p.images[i].for_each_set([&](std::size_t j) {
        std::cout << (first ? "" : ",") << j;
        first = false;
      });
      std::cout << "}\n";
    }
    std::cout << "  verified: " << (report.verified() ? "yes" : "NO") << "\n";
  }
  return report.verified() ? 0 : 1;
}

int cmd_quantum_kcbs_sp(const Options& opt) {
  auto kc = kcbs_realization();
  auto issues = check_realization(kc.realization);
  for (const auto& s : issues) std::cerr << "invariant violated: " << s << "\n";
  State born = born_values(kc.realization, kc.psi);
  int v9 = kc.realization.graph.atom_index("v9");
  std::cout << std::setprecision(12);
  if (opt.machine()) {
    std::cout << "sp " << born.values[v9] << "\n";
    std::cout << "state";
    for (const auto& c : kc.psi.v)
      std::cout << ' ' << std::real(c) << ' ' << std::imag(c);
    std::cout << "\n";
    std::cout << "born";
    for (double v : born.values) std::cout << ' ' << v;
    std::cout << "\n";
  } else {
    std::cout << "success probability p(v9) = " << born.values[v9] << "\n";
    std::cout << "designated state: (";
    for (std::size_t i = 0; i < kc.psi.dim(); ++i)
      std::cout << (i ? ", " : "") << std::real(kc.psi[i]);
    std::cout << ")\n";
    std::cout << "born values:";
    for (double v : born.values) std::cout << ' ' << v;
    std::cout << "\n";
  }
  return issues.empty() ? 0 : 1;
}

int cmd_quantum_hardy_sp(std::size_t grid, const Options& opt) {
  auto best = maximize_hardy_sp(grid);
  std::cout << std::setprecision(12);
  if (opt.machine())
    std::cout << "amplitude " << best.amplitude << "\nsp " << best.sp << "\n";
  else
    std::cout << "max success probability " << best.sp << " at amplitude "
              << best.amplitude << "\n";
  return 0;
}

int cmd_quantum_realize(const std::string& name, const std::string& bitstring,
                        double amplitude, double eps,
                        const SampleOptions& sopts, const Options& opt) {
  Realization r;
  if (name == "kcbs")
    r = kcbs_realization().realization;
  else if (name == "chsh")
    r = hardy_realization(amplitude).realization;
  else
    raise(Errc::unknown_name, "no built-in realization for '" + name + "'");

  Bitvec b = Bitvec::from_string(bitstring);
  auto res = realize_possibilistic(r, b, eps, sopts);
  const char* verdict = res.verdict == Realizability::realizable
                            ? "realizable"
                            : res.verdict == Realizability::not_realizable
                                  ? "not-realizable"
                                  : "inconclusive";
  std::cout << std::setprecision(12);
  if (opt.machine()) {
    std::cout << "verdict " << verdict << "\n";
    std::cout << "kernel-dim " << res.kernel_dim << "\n";
    if (res.witness) {
      std::cout << "witness";
      for (const auto& c : res.witness->v)
        std::cout << ' ' << std::real(c) << ' ' << std::imag(c);
      std::cout << "\n";
    }
  } else {
    std::cout << verdict << " (" << res.reason << ")\n";
    if (res.witness) {
      std::cout << "witness: (";
      for (std::size_t i = 0; i < res.witness->dim(); ++i) {
        const auto& c = (*res.witness)[i];
        std::cout << (i ? ", " : "") << std::real(c);
        if (std::abs(std::imag(c)) > 1e-12) std::cout << "+" << std::imag(c) << "i";
      }
      std::cout << ")\n";
    }
  }
  return res.verdict == Realizability::realizable ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  if (const char* env = std::getenv("CTXKIT_TOLERANCE"))
    opt.tolerance = std::atof(env);

  CLI::App app{"ctxkit: contextuality and Hardy-type paradoxes on finite "
               "measurement scenarios"};
  app.require_subcommand(1);
  app.add_option("--tolerance", opt.tolerance,
                 "zero threshold for real-valued models");
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "machine"}));

  // scenario emit <name>
  auto* sc = app.add_subcommand("scenario", "scenario file utilities");
  sc->require_subcommand(1);
  std::string emit_name;
  auto* sc_emit = sc->add_subcommand("emit", "print a built-in scenario file");
  sc_emit->add_option("name", emit_name, "kcbs | chsh | mansfield233")
      ->required();

  std::string states_arg;
  auto* st = app.add_subcommand("states", "enumerate deterministic states");
  st->add_option("scenario", states_arg)->required();

  std::string matrix_arg;
  auto* mx = app.add_subcommand("matrix", "print the incidence matrix");
  mx->add_option("scenario", matrix_arg)->required();

  std::string check_scenario, check_model;
  auto* ck = app.add_subcommand("check", "classify a model");
  ck->add_option("scenario", check_scenario)->required();
  ck->add_option("model", check_model)->required();

  std::string en_arg, en_mode = "raw", en_group = "auto";
  int en_zeros = -1;
  bool en_classes = false, en_all = false;
  auto* en = app.add_subcommand("enumerate",
                                "enumerate possibilistic vectors of logically "
                                "contextual states");
  en->add_option("scenario", en_arg)->required();
  en->add_option("--zeros", en_zeros, "keep vectors with exactly K zeros");
  en->add_flag("--classes", en_classes, "partition into symmetry classes");
  en->add_option("--mode", en_mode)->check(CLI::IsMember({"raw", "cliquewise"}));
  en->add_option("--group", en_group, "symmetry group for --classes")
      ->check(CLI::IsMember({"auto", "full", "relabel"}));
  en->add_flag("--all", en_all, "print every vector");

  std::string px_scenario, px_model;
  bool px_all = false;
  int px_max = -1;
  auto* px = app.add_subcommand("paradox", "extract and verify a paradox");
  px->add_option("scenario", px_scenario)->required();
  px->add_option("model", px_model)->required();
  px->add_flag("--all-success-events", px_all);
  px->add_option("--max-events", px_max);

  auto* qu = app.add_subcommand("quantum", "quantum realizations");
  qu->require_subcommand(1);
  auto* qk = qu->add_subcommand("kcbs-sp", "success probability of the "
                                           "built-in odd-cycle realization");
  std::size_t hs_grid = 1000;
  auto* qh = qu->add_subcommand("hardy-sp", "maximize the two-party success "
                                            "probability");
  qh->add_option("--grid", hs_grid);
  std::string qr_name, qr_bits;
  double qr_amp = 0.70710678118654752; // 1/sqrt(2)
  double qr_eps = 1e-9;
  SampleOptions qr_sopts;
  auto* qr = qu->add_subcommand("realize", "pure-state realizability of a "
                                           "possibilistic vector");
  qr->add_option("name", qr_name, "kcbs | chsh")->required();
  qr->add_option("bits", qr_bits)->required();
  qr->add_option("--seed", qr_sopts.seed);
  qr->add_option("--samples", qr_sopts.samples);
  qr->add_option("--amplitude", qr_amp, "free amplitude for chsh");
  qr->add_option("--epsilon", qr_eps);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (sc_emit->parsed()) {
      std::cout << emit_builtin(emit_name);
      return 0;
    }
    if (st->parsed()) return cmd_states(states_arg, opt);
    if (mx->parsed()) return cmd_matrix(matrix_arg, opt);
    if (ck->parsed()) return cmd_check(check_scenario, check_model, opt);
    if (en->parsed())
      return cmd_enumerate(en_arg, en_zeros, en_classes, en_mode, en_group,
                           en_all, opt);
    if (px->parsed())
      return cmd_paradox(px_scenario, px_model, px_all, px_max, opt);
    if (qk->parsed()) return cmd_quantum_kcbs_sp(opt);
    if (qh->parsed()) return cmd_quantum_hardy_sp(hs_grid, opt);
    if (qr->parsed())
      return cmd_quantum_realize(qr_name, qr_bits, qr_amp, qr_eps, qr_sopts,
                                 opt);
  } catch (const ctxkit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
