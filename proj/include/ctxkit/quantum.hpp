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

#ifndef CTXKIT_QUANTUM_HPP
#define CTXKIT_QUANTUM_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ctxkit/scenario.hpp"
#include "ctxkit/states.hpp"

namespace ctxkit {

using cplx = std::complex<double>;

// Small dense complex vectors/matrices. Everything here lives in dimension
// <= 4, so no external linear algebra is pulled in.

struct CVec {
  std::vector<cplx> v;

  CVec() = default;
  explicit CVec(std::size_t d) : v(d) {}
  CVec(std::initializer_list<cplx> init) : v(init) {}

  std::size_t dim() const { return v.size(); }
  cplx& operator[](std::size_t i) { return v[i]; }
  const cplx& operator[](std::size_t i) const { return v[i]; }
};

inline cplx inner(const CVec& a, const CVec& b) {  // conjugate-linear in a
  cplx s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

inline double norm(const CVec& a) { return std::sqrt(std::real(inner(a, a))); }

inline CVec scaled(const CVec& a, cplx c) {
  CVec r = a;
  for (auto& x : r.v) x *= c;
  return r;
}

inline CVec unit(const CVec& a) {
  double n = norm(a);
  if (n == 0) raise(Errc::not_normalized, "cannot normalize the zero vector");
  return scaled(a, 1.0 / n);
}

inline CVec sub(const CVec& a, const CVec& b) {
  CVec r = a;
  for (std::size_t i = 0; i < r.dim(); ++i) r[i] -= b[i];
  return r;
}

/// Formal cross product (no conjugation); all built-in constructions use
/// real vectors, where this is the usual orthogonal complement of a pair.
inline CVec cross(const CVec& a, const CVec& b) {
  return CVec{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
              a[0] * b[1] - a[1] * b[0]};
}

inline CVec kron(const CVec& a, const CVec& b) {
  CVec r(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) r[i * b.dim() + j] = a[i] * b[j];
  return r;
}

struct CMat {
  std::size_t n = 0;
  std::vector<cplx> a;

  CMat() = default;
  explicit CMat(std::size_t dim) : n(dim), a(dim * dim) {}

  cplx& at(std::size_t r, std::size_t c) { return a[r * n + c]; }
  const cplx& at(std::size_t r, std::size_t c) const { return a[r * n + c]; }

  static CMat identity(std::size_t dim) {
    CMat m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
  }
};

inline CMat outer(const CVec& u) {  // |u><u|
  CMat m(u.dim());
  for (std::size_t r = 0; r < u.dim(); ++r)
    for (std::size_t c = 0; c < u.dim(); ++c)
      m.at(r, c) = u[r] * std::conj(u[c]);
  return m;
}

inline CMat mul(const CMat& x, const CMat& y) {
  CMat m(x.n);
  for (std::size_t r = 0; r < x.n; ++r)
    for (std::size_t k = 0; k < x.n; ++k) {
      cplx v = x.at(r, k);
      if (v == cplx{}) continue;
      for (std::size_t c = 0; c < x.n; ++c) m.at(r, c) += v * y.at(k, c);
    }
  return m;
}

inline CMat add(const CMat& x, const CMat& y) {
  CMat m = x;
  for (std::size_t i = 0; i < m.a.size(); ++i) m.a[i] += y.a[i];
  return m;
}

inline CMat adjoint(const CMat& x) {
  CMat m(x.n);
  for (std::size_t r = 0; r < x.n; ++r)
    for (std::size_t c = 0; c < x.n; ++c) m.at(r, c) = std::conj(x.at(c, r));
  return m;
}

inline double max_abs_diff(const CMat& x, const CMat& y) {
  double d = 0;
  for (std::size_t i = 0; i < x.a.size(); ++i)
    d = std::max(d, std::abs(x.a[i] - y.a[i]));
  return d;
}

inline CVec apply(const CMat& m, const CVec& x) {
  CVec r(m.n);
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = 0; j < m.n; ++j) r[i] += m.at(i, j) * x[j];
  return r;
}

inline CMat kron(const CMat& x, const CMat& y) {
  CMat m(x.n * y.n);
  for (std::size_t r1 = 0; r1 < x.n; ++r1)
    for (std::size_t c1 = 0; c1 < x.n; ++c1)
      for (std::size_t r2 = 0; r2 < y.n; ++r2)
        for (std::size_t c2 = 0; c2 < y.n; ++c2)
          m.at(r1 * y.n + r2, c1 * y.n + c2) = x.at(r1, c1) * y.at(r2, c2);
  return m;
}

/// Expectation <psi|M|psi>, real part (imaginary part is noise for Hermitian M).
inline double expectation(const CMat& m, const CVec& psi) {
  return std::real(inner(psi, apply(m, psi)));
}

// ---------------------------------------------------------------------------

/// A projector per atom, realizing the scenario on a finite-dimensional
/// Hilbert space: each projector Hermitian idempotent, adjacent atoms
/// commuting, each context an orthogonal resolution of the identity.
struct Realization {
  AtomGraph graph;
  std::size_t dim = 0;
  std::vector<CMat> projectors;
};

/// Returns human-readable violations; empty means all invariants hold at tol.
inline std::vector<std::string> check_realization(const Realization& r,
                                                  double tol = 1e-9) {
  std::vector<std::string> bad;
  const std::size_t n = r.graph.atoms.size();
  for (std::size_t i = 0; i < n; ++i) {
    const CMat& p = r.projectors[i];
    if (max_abs_diff(p, adjoint(p)) > tol)
      bad.push_back(r.graph.atoms[i] + ": not Hermitian");
    if (max_abs_diff(mul(p, p), p) > tol)
      bad.push_back(r.graph.atoms[i] + ": not idempotent");
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (r.graph.adjacent(u, v)) {
        const CMat pq = mul(r.projectors[u], r.projectors[v]);
        if (max_abs_diff(pq, mul(r.projectors[v], r.projectors[u])) > tol)
          bad.push_back(r.graph.atoms[u] + "," + r.graph.atoms[v] +
                        ": compatible but not commuting");
      }
  for (std::size_t k = 0; k < r.graph.cliques.size(); ++k) {
    auto members = r.graph.clique_members(k);
    CMat sum(r.dim);
    for (auto v : members) sum = add(sum, r.projectors[v]);
    if (max_abs_diff(sum, CMat::identity(r.dim)) > tol)
      bad.push_back("context " + std::to_string(k) +
                    ": does not resolve the identity");
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        CMat prod = mul(r.projectors[members[a]], r.projectors[members[b]]);
        if (max_abs_diff(prod, CMat(r.dim)) > tol)
          bad.push_back("context " + std::to_string(k) +
                        ": members not mutually orthogonal");
      }
  }
  return bad;
}

/// Born values of a unit vector across all atoms; the result is a valid
/// state on the graph (checked at 1e-9).
inline State born_values(const Realization& r, const CVec& psi) {
  if (psi.dim() != r.dim)
    raise(Errc::dimension_mismatch, "state dimension != realization");
  if (std::abs(norm(psi) - 1.0) > 1e-9)
    raise(Errc::not_normalized, "state vector is not unit length");
  std::vector<double> values;
  values.reserve(r.projectors.size());
  for (const auto& p : r.projectors) {
    double v = expectation(p, psi);
    values.push_back(std::min(1.0, std::max(0.0, v)));
  }
  return validate_state(r.graph, values, 1e-9);
}

// ---------------------------------------------------------------------------
// Built-in realizations.

/// The odd-cycle scenario realized by five unit vectors on a cone in R^3 with
/// cyclic orthogonality; each one-context atom is the rank-1 completion of
/// its context (cross product of the two cycle vectors), and the designated
/// state is the completion of contexts 1 and 3, which kills v1 and v6.
struct KcbsRealization {
  Realization realization;
  CVec psi;
};

inline KcbsRealization kcbs_realization() {
  const double pi = std::acos(-1.0);
  const double c = std::sqrt(std::cos(pi / 5));
  auto vec = [](double x, double y, double z) {
    return CVec{cplx(x), cplx(y), cplx(z)};
  };
  CVec v2 = vec(1, 0, c);
  CVec v3 = vec(std::cos(4 * pi / 5), -std::sin(4 * pi / 5), c);
  CVec v5 = vec(std::cos(2 * pi / 5), std::sin(2 * pi / 5), c);
  CVec v7 = vec(std::cos(2 * pi / 5), -std::sin(2 * pi / 5), c);
  CVec v9 = vec(std::cos(4 * pi / 5), std::sin(4 * pi / 5), c);
  CVec v1 = cross(v2, v3);
  CVec v4 = cross(v3, v5);
  CVec v6 = cross(v5, v7);
  CVec v8 = cross(v7, v9);
  CVec v10 = cross(v9, v2);

  KcbsRealization out;
  out.realization.graph = build_kcbs();
  out.realization.dim = 3;
  for (const CVec* u :
       {&v1, &v2, &v3, &v4, &v5, &v6, &v7, &v8, &v9, &v10})
    out.realization.projectors.push_back(outer(unit(*u)));
  out.psi = unit(cross(unit(v1), unit(v6)));
  return out;
}

/// The two-party, two-setting, two-outcome scenario realized on C^2 x C^2
/// with one free amplitude 0 < a < 1. Setting-0 bases are computational;
/// setting-1 bases are the real rotation with columns (a, b) and (b, -a),
/// b = sqrt(1-a^2), on each side. The designated state has no (a0,b0)
/// component and collapses to the familiar three-zero pattern.
struct HardyRealization {
  Realization realization;
  BellScenario scenario;
  CVec psi;
  double amplitude = 0;
};

inline HardyRealization hardy_realization(double a) {
  if (!(a > 0.0 && a < 1.0))
    raise(Errc::out_of_range, "amplitude must lie strictly between 0 and 1");
  const double b = std::sqrt(1.0 - a * a);

  // local outcome vectors per (setting, outcome); outcome 1 is the event
  // itself, outcome 0 its negation
  auto local = [&](int setting, int outcome) {
    CVec e1{cplx(1), cplx(0)};
    CVec e0{cplx(0), cplx(1)};
    if (setting == 0) return outcome == 1 ? e1 : e0;
    if (outcome == 1) return CVec{cplx(a), cplx(b)};
    return CVec{cplx(-b), cplx(a)};
  };

  HardyRealization out;
  out.amplitude = a;
  out.scenario = build_bell(BellSpec{{{2, 2}, {2, 2}}}, "chsh");
  out.realization.graph = out.scenario.graph;
  out.realization.dim = 4;
  for (const auto& atom : out.scenario.atom_meanings) {
    CVec va = local(atom.settings[0], atom.outcomes[0]);
    CVec vb = local(atom.settings[1], atom.outcomes[1]);
    out.realization.projectors.push_back(kron(outer(va), outer(vb)));
  }

  const double nrm = 1.0 / std::sqrt(2 * a * a * b * b + b * b * b * b);
  CVec yes = local(0, 1), no = local(0, 0);  // setting-0 outcome vectors
  CVec psi(4);
  auto acc = [&](const CVec& x, const CVec& y, double w) {
    CVec t = kron(x, y);
    for (std::size_t i = 0; i < 4; ++i) psi[i] += w * t[i];
  };
  acc(yes, no, nrm * a * b);
  acc(no, yes, nrm * a * b);
  acc(no, no, nrm * b * b);
  out.psi = psi;
  return out;
}

/// Closed-form success probability of the designated state at amplitude a.
inline double hardy_success_probability(double a) {
  const double a2 = a * a, b2 = 1.0 - a2;
  return a2 * a2 * b2 * b2 / (2 * a2 * b2 + b2 * b2);
}

// ---------------------------------------------------------------------------
// Quantum realizability of possibilistic vectors (pure-state search).

enum class Realizability { realizable, not_realizable, inconclusive };

struct RealizabilityResult {
  Realizability verdict = Realizability::inconclusive;
  std::optional<CVec> witness;
  std::size_t kernel_dim = 0;
  std::string reason;
};

struct SampleOptions {
  std::size_t samples = 10000;
  std::uint64_t seed = 12345;
};

namespace detail {

// Orthonormal basis of the joint range of the given projectors, by modified
// Gram-Schmidt over their columns.
inline std::vector<CVec> range_span(const std::vector<const CMat*>& ps,
                                    std::size_t dim, double tol = 1e-9) {
  std::vector<CVec> basis;
  auto feed = [&](CVec w) {
    for (const auto& q : basis) w = sub(w, scaled(q, inner(q, w)));
    for (const auto& q : basis) w = sub(w, scaled(q, inner(q, w)));
    if (norm(w) > tol) basis.push_back(unit(w));
  };
  for (const CMat* p : ps)
    for (std::size_t c = 0; c < dim; ++c) {
      CVec col(dim);
      for (std::size_t r = 0; r < dim; ++r) col[r] = p->at(r, c);
      feed(col);
    }
  return basis;
}

inline std::vector<CVec> orthogonal_complement(const std::vector<CVec>& span,
                                               std::size_t dim,
                                               double tol = 1e-7) {
  std::vector<CVec> all = span, complement;
  for (std::size_t i = 0; i < dim; ++i) {
    CVec e(dim);
    e[i] = 1;
    for (const auto& q : all) e = sub(e, scaled(q, inner(q, e)));
    for (const auto& q : all) e = sub(e, scaled(q, inner(q, e)));
    if (norm(e) > tol) {
      CVec u = unit(e);
      all.push_back(u);
      complement.push_back(u);
    }
  }
  return complement;
}

}  // namespace detail

/// Pure-state search for a quantum state whose possibilistic collapse is b.
/// K = intersection of the null spaces of all zero-bit projectors. dim K = 0
/// rules the vector out; dim K = 1 leaves a unique ray to test; dim K >= 2
/// falls back to sampling rays in K, which can only certify success
/// (inconclusive otherwise -- mixed states are out of scope here).
inline RealizabilityResult realize_possibilistic(
    const Realization& r, const Bitvec& b, double eps = 1e-9,
    const SampleOptions& opts = {}) {
  if (b.size != r.graph.atom_count())
    raise(Errc::dimension_mismatch, "vector length != atom count");

  std::vector<const CMat*> zero_projs;
  for (std::uint32_t i = 0; i < b.size; ++i)
    if (!b.test(i)) zero_projs.push_back(&r.projectors[i]);
  auto span = detail::range_span(zero_projs, r.dim);
  auto kernel = detail::orthogonal_complement(span, r.dim);

  RealizabilityResult out;
  out.kernel_dim = kernel.size();

  auto collapse_matches = [&](const CVec& psi) {
    for (std::uint32_t i = 0; i < b.size; ++i) {
      double v = expectation(r.projectors[i], psi);
      if (b.test(i) ? (v <= eps) : (v > eps)) return false;
    }
    return true;
  };

  if (kernel.empty()) {
    out.verdict = Realizability::not_realizable;
    out.reason = "no state is supported on all positive bits: the impossible "
                 "atoms span the whole space";
    return out;
  }
  if (kernel.size() == 1) {
    if (collapse_matches(kernel[0])) {
      out.verdict = Realizability::realizable;
      out.witness = kernel[0];
      out.reason = "unique supporting ray matches the collapse";
    } else {
      out.verdict = Realizability::not_realizable;
      out.reason = "unique supporting ray violates a positive bit";
    }
    return out;
  }

  // dim K >= 2: sample rays of K (random, plus a coarse grid when dim K = 2)
  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto combine = [&](const std::vector<cplx>& coeff) {
    CVec psi(r.dim);
    for (std::size_t k = 0; k < kernel.size(); ++k)
      for (std::size_t i = 0; i < r.dim; ++i)
        psi[i] += coeff[k] * kernel[k][i];
    return unit(psi);
  };
  if (kernel.size() == 2) {
    const double pi = std::acos(-1.0);
    const int nt = 64, np2 = 64;
    for (int t = 1; t < nt; ++t)
      for (int f = 0; f < np2; ++f) {
        double theta = pi * t / (2.0 * nt), phi = 2 * pi * f / np2;
        CVec psi = combine({cplx(std::cos(theta)),
                            std::polar(std::sin(theta), phi)});
        if (collapse_matches(psi)) {
          out.verdict = Realizability::realizable;
          out.witness = psi;
          out.reason = "grid sample in the supporting subspace";
          return out;
        }
      }
  }
  for (std::size_t s = 0; s < opts.samples; ++s) {
    std::vector<cplx> coeff(kernel.size());
    for (auto& c : coeff) c = cplx(gauss(rng), gauss(rng));
    CVec psi = combine(coeff);
    if (collapse_matches(psi)) {
      out.verdict = Realizability::realizable;
      out.witness = psi;
      out.reason = "random sample in the supporting subspace";
      return out;
    }
  }
  out.verdict = Realizability::inconclusive;
  out.reason = "no pure-state witness found in " +
               std::to_string(opts.samples) + " samples (dim K = " +
               std::to_string(kernel.size()) + ")";
  return out;
}

// ---------------------------------------------------------------------------

struct SpMaxResult {
  double amplitude = 0;  // argmax a
  double sp = 0;         // max success probability
};

/// Maximizes the closed-form success probability over the amplitude by grid
/// scan plus golden-section refinement.
inline SpMaxResult maximize_hardy_sp(std::size_t grid_points = 1000) {
  if (grid_points < 3) raise(Errc::out_of_range, "need at least 3 grid points");
  double best_a = 0.5, best = 0;
  for (std::size_t i = 1; i < grid_points; ++i) {
    double a = static_cast<double>(i) / grid_points;
    double v = hardy_success_probability(a);
    if (v > best) {
      best = v;
      best_a = a;
    }
  }
  double lo = std::max(1e-12, best_a - 2.0 / grid_points);
  double hi = std::min(1.0 - 1e-12, best_a + 2.0 / grid_points);
  const double gr = (std::sqrt(5.0) - 1) / 2;
  double c = hi - gr * (hi - lo), d = lo + gr * (hi - lo);
  for (int it = 0; it < 200; ++it) {
    if (hardy_success_probability(c) < hardy_success_probability(d))
      lo = c;
    else
      hi = d;
    c = hi - gr * (hi - lo);
    d = lo + gr * (hi - lo);
  }
  SpMaxResult out;
  out.amplitude = (lo + hi) / 2;
  out.sp = hardy_success_probability(out.amplitude);
  return out;
}

}  // namespace ctxkit

#endif  // CTXKIT_QUANTUM_HPP
