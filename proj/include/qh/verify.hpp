#pragma once

// Structured verification suites shared by the command-line verify-all run
// and the acceptance harness.  Every check returns a CheckReport with a
// PASS/FAIL verdict, the maximal observed deviation and the probe count.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "qh/error.hpp"
#include "qh/group.hpp"
#include "qh/hardy.hpp"
#include "qh/invariants.hpp"
#include "qh/oracles.hpp"
#include "qh/polynomial.hpp"
#include "qh/report.hpp"
#include "qh/toeplitz.hpp"

namespace qh {

// Deterministic random source: the raw mt19937_64 stream is pinned by the
// standard, and all scaling below is explicit.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  double uniform() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }
  int uniform_int(int a, int b) {  // inclusive
    return a + static_cast<int>(eng() % static_cast<std::uint64_t>(b - a + 1));
  }
  Complex coeff() { return Complex(uniform(-1, 1), uniform(-1, 1)); }
};

inline Polynomial random_poly(Rng& rng, int d, int max_degree, int terms) {
  Polynomial p(d);
  for (int t = 0; t < terms; ++t) {
    int deg = rng.uniform_int(0, max_degree);
    Monomial m(d);
    int rem = deg;
    for (int i = 0; i + 1 < d; ++i) {
      m.holo[i] = rng.uniform_int(0, rem);
      rem -= m.holo[i];
    }
    m.holo[d - 1] = rem;
    p.add_term(std::move(m), rng.coeff());
  }
  return p;
}

// Random element of the quotient polynomial ring: exponents alpha weighted by
// the degrees of the basic invariants, so lifts stay within max_degree.
inline Polynomial random_quotient_poly(Rng& rng, const GroupContext& ctx, int max_degree,
                                       int terms) {
  const auto& degs = ctx.basic.map.degrees;
  const int d = static_cast<int>(degs.size());
  Polynomial p(d);
  for (int t = 0; t < terms; ++t) {
    Monomial m(d);
    int rem = max_degree;
    for (int i = 0; i < d; ++i) {
      int cap = rem / degs[i];
      m.holo[i] = rng.uniform_int(0, cap);
      rem -= m.holo[i] * degs[i];
    }
    p.add_term(std::move(m), rng.coeff());
  }
  return p;
}

struct VerifyConfig {
  int samples = 50;
  int proj_degree = 8;
  int gram_degree = 10;
  int kernel_degree = 40;
  int kernel_pairs = 10;
  int schur_degree = 8;
  int reducing_degree = 6;
  int toeplitz_cutoff = 8;
  int bh_cutoff = 12;
  double tol = 1e-9;
  double op_tol = 1e-8;
  double kernel_tol = 1e-6;
  double measure_tol = 1e-12;
  std::uint64_t seed = 12345;
};

inline int character_index(const GroupContext& ctx, const std::string& name) {
  for (int i = 0; i < ctx.character_count(); ++i)
    if (ctx.characters[i].name == name) return i;
  return -1;
}

// ---- structural suite -----------------------------------------------------

inline CheckReport verify_group_structure(const GroupContext& ctx) {
  CheckReport r;
  r.name = "group-structure";
  const FiniteGroup& G = ctx.group;
  bool ok = true;

  int refl = static_cast<int>(G.pseudoreflections().size());
  int sum_orders = 0;
  for (int m : ctx.planes.orders) sum_orders += m - 1;
  if (refl != sum_orders) {
    ok = false;
    r.notes.push_back("pseudoreflection count " + std::to_string(refl) +
                      " != sum(m_i - 1) = " + std::to_string(sum_orders));
  }
  if (G.abelianization_order() != ctx.character_count()) {
    ok = false;
    r.notes.push_back("|G^| = " + std::to_string(ctx.character_count()) +
                      " but |G/[G,G]| = " + std::to_string(G.abelianization_order()));
  }
  long long degprod = 1;
  for (int d : ctx.basic.map.degrees) degprod *= d;
  if (degprod != G.size()) {
    ok = false;
    r.notes.push_back("prod deg(theta) = " + std::to_string(degprod));
  }
  // conjugation closure of the reflection set
  std::vector<int> refl_idx = G.pseudoreflections();
  std::vector<char> is_refl(G.size(), 0);
  for (int i : refl_idx) is_refl[i] = 1;
  for (int g = 0; g < G.size() && ok; ++g)
    for (int s : refl_idx)
      if (!is_refl[G.mult(G.mult(g, s), G.inverse(g))]) {
        ok = false;
        r.notes.push_back("reflections not closed under conjugation");
        break;
      }
  r.exact_region_size = G.size();
  r.verdict = ok ? "PASS" : "FAIL";
  return r;
}

inline CheckReport verify_jacobian_factorization(const GroupContext& ctx, double tol = 1e-9) {
  CheckReport r;
  r.name = "jacobian-factorization";
  Polynomial J = jacobian_det(ctx.basic.map);
  const int d = ctx.group.dim();
  Polynomial P = Polynomial::constant(d, Complex(1, 0));
  for (size_t i = 0; i < ctx.planes.size(); ++i)
    for (int e = 0; e + 1 < ctx.planes.orders[i]; ++e) P = P * ctx.planes.forms[i];
  double dev = max_coeff_diff(J, ctx.jacobian_constant * P) / (1.0 + J.max_abs_coeff());
  // the jacobian realizes the sign character sgn = det^{-1}
  bool rel = is_relative_invariant(ctx.group, J, ctx.group.sign_character());
  r.max_deviation = dev;
  r.exact_region_size = static_cast<long long>(ctx.planes.size());
  if (!rel) r.notes.push_back("jacobian is not a sign-character relative invariant");
  r.verdict = (dev < tol && rel) ? "PASS" : "FAIL";
  return r;
}

// ---- projections ----------------------------------------------------------

inline CheckReport verify_projection_algebra(const GroupContext& ctx, const HardyModel& M,
                                             const VerifyConfig& cfg) {
  CheckReport r;
  r.name = "projection-algebra/" + M.name();
  Rng rng(cfg.seed);
  const FiniteGroup& G = ctx.group;
  const bool abelian = G.is_abelian();
  double dev = 0.0;
  Polynomial prev(G.dim());
  bool have_prev = false;
  for (int s = 0; s < cfg.samples; ++s) {
    Polynomial f = random_poly(rng, G.dim(), cfg.proj_degree, 10);
    std::vector<Polynomial> proj;
    proj.reserve(ctx.character_count());
    for (int c = 0; c < ctx.character_count(); ++c)
      proj.push_back(isotypic_project(G, ctx.character(c), f));
    Polynomial sum(G.dim());
    for (int c = 0; c < ctx.character_count(); ++c) {
      dev = std::max(dev, max_coeff_diff(isotypic_project(G, ctx.character(c), proj[c]), proj[c]));
      for (int c2 = 0; c2 < ctx.character_count(); ++c2) {
        if (c2 == c) continue;
        Polynomial cross = isotypic_project(G, ctx.character(c2), proj[c]);
        dev = std::max(dev, cross.max_abs_coeff());
      }
      sum += proj[c];
    }
    if (abelian) dev = std::max(dev, max_coeff_diff(sum, f));
    if (have_prev) {
      for (int c = 0; c < ctx.character_count(); ++c) {
        Complex a = inner_product(M, proj[c], prev);
        Complex b = inner_product(M, f, isotypic_project(G, ctx.character(c), prev));
        dev = std::max(dev, std::abs(a - b));
      }
    }
    prev = f;
    have_prev = true;
  }
  r.max_deviation = dev;
  r.exact_region_size = cfg.samples;
  r.verdict = dev < cfg.tol ? "PASS" : "FAIL";
  if (!abelian) r.notes.push_back("sum-to-identity skipped (group not abelian)");
  return r;
}

inline CheckReport verify_stanley_divisibility(const GroupContext& ctx, const VerifyConfig& cfg) {
  CheckReport r;
  r.name = "stanley-divisibility";
  Rng rng(cfg.seed + 1);
  double dev = 0.0;
  long long count = 0;
  for (int c = 0; c < ctx.character_count(); ++c) {
    const Polynomial& ell = ctx.ell(c);
    for (int s = 0; s < cfg.samples; ++s) {
      Polynomial f = random_poly(rng, ctx.group.dim(), cfg.proj_degree, 10);
      Polynomial v = isotypic_project(ctx.group, ctx.character(c), f);
      Polynomial q;
      try {
        q = exact_divide(v, ell);
      } catch (const Error& e) {
        r.verdict = "FAIL";
        r.notes.push_back(ctx.character(c).name + ": " + e.what());
        return r;
      }
      dev = std::max(dev, max_coeff_diff(v, q * ell));
      if (!is_invariant(ctx.group, q)) {
        r.verdict = "FAIL";
        r.notes.push_back(ctx.character(c).name + ": quotient not invariant");
        return r;
      }
      ++count;
    }
  }
  r.max_deviation = dev;
  r.exact_region_size = count;
  r.verdict = dev < cfg.tol ? "PASS" : "FAIL";
  return r;
}

// ---- quotient space primitives ---------------------------------------------

inline CheckReport verify_gamma_gram(const GroupContext& ctx, const HardyModel& M,
                                     const VerifyConfig& cfg) {
  CheckReport r;
  r.name = "gamma-isometry-gram/" + M.name();
  Rng rng(cfg.seed + 2);
  double dev = 0.0;
  long long count = 0;
  for (int c = 0; c < ctx.character_count(); ++c) {
    QuotientBasis basis = quotient_onb(ctx, c, M, cfg.gram_degree, /*with_quotient_forms=*/true);
    const int n = static_cast<int>(basis.entries.size());
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Complex g = inner_product(M, basis.entries[j].lift, basis.entries[k].lift);
        dev = std::max(dev, std::abs(g - (j == k ? Complex(1, 0) : Complex(0, 0))));
      }
    // Gamma of the quotient form reproduces the lift, and the pullback
    // pairing of the quotient forms is again the identity matrix.
    for (int j = 0; j < n; ++j) {
      Polynomial lifted = gamma(ctx.group, ctx.ell(c), ctx.basic, basis.entries[j].quotient_form);
      dev = std::max(dev, max_coeff_diff(lifted, basis.entries[j].lift));
      Complex qp = quotient_inner_pullback(ctx, c, M, basis.entries[j].quotient_form,
                                           basis.entries[j].quotient_form);
      dev = std::max(dev, std::abs(qp - Complex(1, 0)));
    }
    if (n > 1) {
      Complex qp01 = quotient_inner_pullback(ctx, c, M, basis.entries[0].quotient_form,
                                             basis.entries[1].quotient_form);
      dev = std::max(dev, std::abs(qp01));
    }
    count += static_cast<long long>(n) * n;
    // random isometry pairs
    for (int s = 0; s < std::min(cfg.samples, 10); ++s) {
      Polynomial f = random_quotient_poly(rng, ctx, cfg.gram_degree, 6);
      Polynomial g = random_quotient_poly(rng, ctx, cfg.gram_degree, 6);
      Complex a = quotient_inner(ctx, c, M, f, g);
      Complex b = quotient_inner_pullback(ctx, c, M, f, g);
      dev = std::max(dev, std::abs(a - b));
      ++count;
    }
  }
  r.max_deviation = dev;
  r.exact_region_size = count;
  r.verdict = dev < cfg.tol ? "PASS" : "FAIL";
  return r;
}

namespace detail {

inline CVector random_point(Rng& rng, const HardyModel& M, double radius) {
  CVector z(M.dim);
  if (M.domain == Domain::polydisc) {
    for (int i = 0; i < M.dim; ++i) {
      double rr = radius * std::sqrt(rng.uniform());
      double ph = rng.uniform(0.0, 2.0 * std::numbers::pi);
      z[i] = std::polar(rr, ph);
    }
  } else {
    double per = radius / std::sqrt(static_cast<double>(M.dim));
    for (int i = 0; i < M.dim; ++i) {
      double rr = per * std::sqrt(rng.uniform());
      double ph = rng.uniform(0.0, 2.0 * std::numbers::pi);
      z[i] = std::polar(rr, ph);
    }
  }
  return z;
}

}  // namespace detail

inline CheckReport verify_kernel_agreement(const GroupContext& ctx, const HardyModel& M,
                                           const VerifyConfig& cfg) {
  CheckReport r;
  r.name = "kernel-agreement/" + M.name();
  Rng rng(cfg.seed + 3);
  double dev_series = 0.0, dev_fiber = 0.0;
  long long count = 0;
  for (int c = 0; c < ctx.character_count(); ++c) {
    QuotientBasis basis = quotient_onb(ctx, c, M, cfg.kernel_degree, /*with_quotient_forms=*/false);
    const Polynomial& ell = ctx.ell(c);
    for (int p = 0; p < cfg.kernel_pairs; ++p) {
      CVector z, w;
      int attempts = 0;
      do {
        z = detail::random_point(rng, M, 0.5);
        w = detail::random_point(rng, M, 0.5);
        if (++attempts > 1000) fail(Errc::PointOnZeroSet, "could not sample off the zero set");
      } while (std::abs(ell.evaluate(z)) < 1e-2 || std::abs(ell.evaluate(w)) < 1e-2);

      Complex series(0, 0);
      for (const auto& e : basis.entries)
        series += e.lift.evaluate(z) * std::conj(e.lift.evaluate(w));
      Complex closed = subspace_kernel(ctx, c, M, z, w);
      dev_series = std::max(dev_series, std::abs(series - closed));

      Complex lz = ell.evaluate(z), lw = ell.evaluate(w);
      Complex quotient_series =
          static_cast<double>(ctx.group.size()) * series / (lz * std::conj(lw));
      Complex quotient_closed = quotient_kernel(ctx, c, M, z, w);
      dev_series = std::max(dev_series, std::abs(quotient_series - quotient_closed));

      for (int t = 0; t < ctx.group.size(); ++t) {
        CVector zt = ctx.group.element(t).matrix * z;
        dev_fiber =
            std::max(dev_fiber, std::abs(quotient_kernel(ctx, c, M, zt, w) - quotient_closed));
      }
      ++count;
    }
  }
  r.max_deviation = std::max(dev_series, dev_fiber);
  r.exact_region_size = count;
  r.verdict = (dev_series < cfg.kernel_tol && dev_fiber < cfg.tol) ? "PASS" : "FAIL";
  r.notes.push_back("series deviation " + std::to_string(dev_series) + ", fiber deviation " +
                    std::to_string(dev_fiber));
  return r;
}

// Sign-character basis of a symmetric group against the Jacobi-Trudi
// determinant: composing each quotient basis element with theta recovers the
// Schur polynomial of the staircase-shifted representative.
inline CheckReport verify_schur_oracle(const GroupContext& ctx, const VerifyConfig& cfg) {
  CheckReport r;
  r.name = "schur-oracle";
  if (ctx.group.family_tag() != "symmetric") {
    r.verdict = "PASS";
    r.notes.push_back("skipped (not a symmetric group)");
    return r;
  }
  HardyModel M = HardyModel::polydisc(ctx.group.dim());
  int sgn = character_index(ctx, "sign");
  if (sgn < 0) {
    r.verdict = "FAIL";
    r.notes.push_back("sign character not found");
    return r;
  }
  QuotientBasis basis = quotient_onb(ctx, sgn, M, cfg.schur_degree, /*with_quotient_forms=*/true);
  double dev = 0.0;
  for (const auto& e : basis.entries) {
    std::vector<int> lambda = oracles::partition_from_rep(e.rep);
    Polynomial expected = oracles::schur_jacobi_trudi(ctx.group.dim(), lambda);
    Polynomial actual = e.quotient_form.compose(ctx.basic.map.components);
    dev = std::max(dev, max_coeff_diff(actual, expected));
  }
  r.max_deviation = dev;
  r.exact_region_size = static_cast<long long>(basis.entries.size());
  r.verdict = dev < cfg.tol ? "PASS" : "FAIL";
  return r;
}

// ---- Toeplitz suites --------------------------------------------------------

// All quotient monomial symbols w^alpha conj(w)^beta with |alpha| <= p and
// |beta| <= q.  The checked identities are linear in the symbol, so this set
// covers every symbol of the given bidegree.
inline std::vector<Polynomial> monomial_symbols(int d, int p, int q) {
  std::vector<Polynomial> out;
  std::vector<std::vector<int>> alphas, betas;
  for (int k = 0; k <= p; ++k)
    for (const auto& a : detail::monomials_of_degree(d, k)) alphas.push_back(a);
  for (int k = 0; k <= q; ++k)
    for (const auto& b : detail::monomials_of_degree(d, k)) betas.push_back(b);
  for (const auto& a : alphas)
    for (const auto& b : betas) {
      Monomial m(d);
      m.holo = a;
      m.anti = b;
      out.push_back(Polynomial::monomial(std::move(m), Complex(1, 0)));
    }
  return out;
}

inline CheckReport verify_reducing(const GroupContext& ctx, const HardyModel& M,
                                   const VerifyConfig& cfg) {
  CheckReport r;
  r.name = "reducing/" + M.name();
  double dev = 0.0;
  long long count = 0;
  for (const auto& u : monomial_symbols(ctx.group.dim(), 2, 2)) {
    SymbolPair sym = lift_symbol(ctx, u);
    for (int c = 0; c < ctx.character_count(); ++c) {
      CheckReport one = check_reducing(ctx, c, M, sym.lifted, cfg.reducing_degree, cfg.op_tol);
      dev = std::max(dev, one.max_deviation);
      count += one.exact_region_size;
      if (!one.passed()) {
        r.verdict = "FAIL";
        r.notes.push_back("symbol " + u.str() + ", character " + ctx.character(c).name);
        r.max_deviation = std::max(dev, one.max_deviation);
        return r;
      }
    }
  }
  r.max_deviation = dev;
  r.exact_region_size = count;
  r.verdict = dev < cfg.op_tol ? "PASS" : "FAIL";
  return r;
}

inline CheckReport verify_module_invariance(const GroupContext& ctx, const HardyModel& M,
                                            const VerifyConfig& cfg) {
  CheckReport r;
  r.name = "module-invariance/" + M.name();
  double dev = 0.0;
  long long count = 0;
  for (const auto& u : monomial_symbols(ctx.group.dim(), 2, 2)) {
    SymbolPair sym = lift_symbol(ctx, u);
    for (int c = 0; c < ctx.character_count(); ++c) {
      CheckReport one =
          check_module_invariance(ctx, c, M, sym.lifted, cfg.reducing_degree, cfg.op_tol);
      dev = std::max(dev, one.max_deviation);
      count += one.exact_region_size;
      if (!one.passed()) {
        r.verdict = "FAIL";
        r.notes.push_back("symbol " + u.str() + ", character " + ctx.character(c).name);
        for (const auto& n : one.notes) r.notes.push_back(n);
        r.max_deviation = std::max(dev, one.max_deviation);
        return r;
      }
    }
  }
  r.max_deviation = dev;
  r.exact_region_size = count;
  r.verdict = dev < cfg.op_tol ? "PASS" : "FAIL";
  return r;
}

// Gamma intertwines the ambient and quotient Toeplitz actions: the ambient
// operator keeps each isotypic range, and Gamma^{-1} round-trips on it.
inline CheckReport verify_intertwining(const GroupContext& ctx, const HardyModel& M,
                                       const VerifyConfig& cfg) {
  CheckReport r;
  r.name = "intertwining/" + M.name();
  Rng rng(cfg.seed + 4);
  double dev = 0.0;
  long long count = 0;
  for (const auto& u : monomial_symbols(ctx.group.dim(), 2, 2)) {
    SymbolPair sym = lift_symbol(ctx, u);
    for (int c = 0; c < ctx.character_count(); ++c) {
      for (int s = 0; s < 3; ++s) {
        Polynomial f = random_quotient_poly(rng, ctx, cfg.toeplitz_cutoff, 5);
        Polynomial lifted = gamma(ctx.group, ctx.ell(c), ctx.basic, f);
        Polynomial amb = apply_toeplitz_ambient(M, sym.lifted, lifted);
        if (!is_relative_invariant(ctx.group, amb, ctx.character(c))) {
          r.verdict = "FAIL";
          r.notes.push_back("ambient operator left the isotypic range at " + u.str());
          return r;
        }
        Polynomial back = gamma_inverse(ctx.group, ctx.character(c), ctx.ell(c), ctx.basic, amb);
        Polynomial again = gamma(ctx.group, ctx.ell(c), ctx.basic, back);
        dev = std::max(dev, max_coeff_diff(again, amb));
        ++count;
      }
    }
  }
  r.max_deviation = dev;
  r.exact_region_size = count;
  r.verdict = dev < cfg.op_tol ? "PASS" : "FAIL";
  return r;
}

struct SymbolTriple {
  Polynomial u, v, q;
  int expected;  // 1 identity holds, 0 identity fails, -1 unpinned
};

inline std::vector<SymbolTriple> designed_product_triples(int d) {
  auto W = [&](int i) { return Polynomial::variable(d, i); };
  auto Wc = [&](int i) { return Polynomial::conj_variable(d, i); };
  auto one = Polynomial::constant(d, Complex(1, 0));
  std::vector<SymbolTriple> t;
  if (d >= 2) {
    t.push_back({W(0), W(1), W(0) * W(1), 1});
    t.push_back({W(0), W(0), W(0) * W(0), 1});
    t.push_back({Wc(0), W(0), Wc(0) * W(0), 1});
    t.push_back({W(0), Wc(0), W(0) * Wc(0), 0});
    t.push_back({Wc(0), Wc(1), Wc(0) * Wc(1), 1});
    t.push_back({W(0) + Wc(0), W(0), W(0) * W(0) + Wc(0) * W(0), 1});
    t.push_back({W(0), W(0) + Wc(0), W(0) * W(0) + W(0) * Wc(0), 0});
    t.push_back({Wc(0), W(1) * W(1), Wc(0) * W(1) * W(1), 1});
    t.push_back({W(1), Wc(1), W(1) * Wc(1), 0});
    t.push_back({W(0) * Wc(1), one, W(0) * Wc(1), 1});
  } else {
    t.push_back({W(0), W(0), W(0) * W(0), 1});
    t.push_back({W(0) * W(0), W(0), W(0) * W(0) * W(0), 1});
    t.push_back({Wc(0), W(0), Wc(0) * W(0), 1});
    t.push_back({W(0), Wc(0), W(0) * Wc(0), 0});
    t.push_back({Wc(0), Wc(0) * Wc(0), Wc(0) * Wc(0) * Wc(0), 1});
    t.push_back({W(0) + Wc(0), W(0), W(0) * W(0) + Wc(0) * W(0), 1});
    t.push_back({W(0), W(0) + Wc(0), W(0) * W(0) + W(0) * Wc(0), 0});
    t.push_back({Wc(0), W(0) * W(0), Wc(0) * W(0) * W(0), 1});
    t.push_back({W(0) * Wc(0), one, W(0) * Wc(0), 1});
    t.push_back({W(0) * W(0), Wc(0), W(0) * W(0) * Wc(0), 0});
  }
  return t;
}

inline std::vector<SymbolTriple> designed_commuting_pairs(int d) {
  auto W = [&](int i) { return Polynomial::variable(d, i); };
  auto Wc = [&](int i) { return Polynomial::conj_variable(d, i); };
  std::vector<SymbolTriple> t;  // q unused
  if (d >= 2) {
    t.push_back({W(0), W(1), Polynomial(d), 1});
    t.push_back({Wc(0), Wc(1), Polynomial(d), 1});
    t.push_back({W(0), Wc(0), Polynomial(d), 0});
    t.push_back({W(0) + Wc(0), W(0) + Wc(0), Polynomial(d), 1});
  } else {
    t.push_back({W(0), W(0) * W(0), Polynomial(d), 1});
    t.push_back({Wc(0), Wc(0) * Wc(0), Polynomial(d), 1});
    t.push_back({W(0), Wc(0), Polynomial(d), 0});
    t.push_back({W(0) + Wc(0), W(0) + Wc(0), Polynomial(d), 1});
  }
  return t;
}

// Product and commutator identities must hold or fail uniformly across the
// ambient space and every quotient; pinned triples must land on the expected
// side.
inline CheckReport verify_transfer_logic(const GroupContext& ctx, const HardyModel& M,
                                         const VerifyConfig& cfg) {
  CheckReport r;
  r.name = "transfer-logic/" + M.name();
  bool ok = true;
  double pass_dev = 0.0;
  long long combos = 0;
  for (const auto& t : designed_product_triples(ctx.group.dim())) {
    TransferReport rep =
        check_product_transfer(ctx, M, t.u, t.v, t.q, cfg.toeplitz_cutoff, cfg.op_tol);
    combos += static_cast<long long>(rep.spaces.size());
    if (!rep.uniform) {
      ok = false;
      r.notes.push_back("non-uniform product verdicts for u=" + t.u.str());
    }
    if (t.expected >= 0 && rep.identity_holds[0] != (t.expected == 1)) {
      ok = false;
      r.notes.push_back("unexpected product verdict for u=" + t.u.str());
    }
    if (t.expected == 1)
      pass_dev = std::max(pass_dev,
                          *std::max_element(rep.deviations.begin(), rep.deviations.end()));
  }
  for (const auto& t : designed_commuting_pairs(ctx.group.dim())) {
    TransferReport rep = check_commuting_transfer(ctx, M, t.u, t.v, cfg.toeplitz_cutoff,
                                                  cfg.op_tol);
    combos += static_cast<long long>(rep.spaces.size());
    if (!rep.uniform) {
      ok = false;
      r.notes.push_back("non-uniform commutator verdicts for u=" + t.u.str());
    }
    if (t.expected >= 0 && rep.identity_holds[0] != (t.expected == 1)) {
      ok = false;
      r.notes.push_back("unexpected commutator verdict for u=" + t.u.str());
    }
    if (t.expected == 1)
      pass_dev = std::max(pass_dev,
                          *std::max_element(rep.deviations.begin(), rep.deviations.end()));
  }
  r.max_deviation = pass_dev;
  r.exact_region_size = combos;
  r.verdict = ok ? "PASS" : "FAIL";
  return r;
}

inline CheckReport verify_brown_halmos(const GroupContext& ctx, const VerifyConfig& cfg) {
  CheckReport r;
  r.name = "brown-halmos";
  const int d = ctx.group.dim();
  std::vector<Polynomial> symbols;
  {
    auto W = [&](int i) { return Polynomial::variable(d, i); };
    auto Wc = [&](int i) { return Polynomial::conj_variable(d, i); };
    symbols.push_back(W(d - 1) * Wc(d - 1));
    symbols.push_back(W(0) + Wc(0));
    if (d >= 2) symbols.push_back(W(0) * Wc(1));
  }
  bool ok = true;
  double dev = 0.0;
  long long region = 0;
  int inner_count = 0;
  for (const auto& u : symbols)
    for (int c = 0; c < ctx.character_count(); ++c) {
      BrownHalmosReport rep = check_brown_halmos(ctx, c, u, cfg.bh_cutoff, cfg.op_tol);
      if (!rep.pass) ok = false;
      for (size_t i = 0; i < rep.deviation.size(); ++i) {
        if (rep.inner[i]) {
          dev = std::max(dev, rep.deviation[i]);
          region += rep.region_size[i];
          ++inner_count;
        }
      }
    }
  if (inner_count == 0) {
    ok = false;
    r.notes.push_back("no inner coordinates found");
  }
  r.max_deviation = dev;
  r.exact_region_size = region;
  r.verdict = ok ? "PASS" : "FAIL";
  return r;
}

// Normalization of the pullback measure: the sign-character constant has unit
// norm for the two-variable symmetric group, and ball monomial norms agree
// with the integer-exact sphere moments.
inline CheckReport verify_boundary_measure(const GroupContext& ctx, const VerifyConfig& cfg) {
  CheckReport r;
  r.name = "boundary-measure";
  double dev = 0.0;
  long long count = 0;
  const int d = ctx.group.dim();
  if (ctx.group.family_tag() == "symmetric" && d == 2) {
    int sgn = character_index(ctx, "sign");
    HardyModel M = HardyModel::polydisc(2);
    Polynomial one = Polynomial::constant(2, Complex(1, 0));
    Complex n2 = quotient_inner_pullback(ctx, sgn, M, one, one);
    dev = std::max(dev, std::abs(n2 - Complex(1, 0)));
    ++count;
  }
  HardyModel ball = HardyModel::ball(d);
  for (int deg = 0; deg <= 6; ++deg) {
    double completeness = 0.0;
    for (const auto& m : detail::monomials_of_degree(d, deg)) {
      double w = ball.monomial_weight(m);
      dev = std::max(dev, std::abs(w - oracles::ball_moment_exact(m)));
      double multinom = 1.0;
      int used = 0;
      for (int e : m) {
        for (int j = 1; j <= e; ++j) multinom *= static_cast<double>(used + j) / j;
        used += e;
      }
      completeness += multinom * w;
      ++count;
    }
    // sum over |m| = deg of (deg choose m) ||z^m||^2 = ||  |z|^(2 deg) || = 1 on the sphere
    dev = std::max(dev, std::abs(completeness - 1.0));
  }
  r.max_deviation = dev;
  r.exact_region_size = count;
  r.verdict = dev < cfg.measure_tol ? "PASS" : "FAIL";
  return r;
}

inline std::vector<CheckReport> run_verify_all(const GroupContext& ctx, const HardyModel& M,
                                               const VerifyConfig& cfg) {
  std::vector<CheckReport> out;
  out.push_back(verify_group_structure(ctx));
  out.push_back(verify_jacobian_factorization(ctx, cfg.tol));
  out.push_back(verify_projection_algebra(ctx, M, cfg));
  out.push_back(verify_stanley_divisibility(ctx, cfg));
  out.push_back(verify_gamma_gram(ctx, M, cfg));
  out.push_back(verify_kernel_agreement(ctx, M, cfg));
  if (ctx.group.family_tag() == "symmetric" && ctx.group.dim() <= 3)
    out.push_back(verify_schur_oracle(ctx, cfg));
  out.push_back(verify_reducing(ctx, M, cfg));
  out.push_back(verify_module_invariance(ctx, M, cfg));
  out.push_back(verify_intertwining(ctx, M, cfg));
  out.push_back(verify_transfer_logic(ctx, M, cfg));
  if (M.domain == Domain::polydisc) out.push_back(verify_brown_halmos(ctx, cfg));
  out.push_back(verify_boundary_measure(ctx, cfg));
  return out;
}

}  // namespace qh
