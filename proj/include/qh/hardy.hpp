#pragma once

// Hardy spaces of the polydisc and the unit ball, their Szego and isotypic
// projections, the unitary Gamma_chi onto the chi-isotypic subspace, and
// orthonormal bases / reproducing kernels of the quotient Hardy spaces.

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "qh/error.hpp"
#include "qh/group.hpp"
#include "qh/invariants.hpp"
#include "qh/polynomial.hpp"

namespace qh {

enum class Domain { polydisc, ball };

struct HardyModel {
  Domain domain = Domain::polydisc;
  int dim = 0;
  double tol = kEps;

  static HardyModel polydisc(int d) { return HardyModel{Domain::polydisc, d, kEps}; }
  static HardyModel ball(int d) { return HardyModel{Domain::ball, d, kEps}; }

  // ||z^m||^2 under the normalized boundary measure.
  double monomial_weight(const std::vector<int>& m) const {
    if (static_cast<int>(m.size()) != dim) fail(Errc::DimensionMismatch, "weight exponent size");
    if (domain == Domain::polydisc) return 1.0;
    // sphere moment: m! (d-1)! / (|m| + d - 1)!
    double w = 1.0;
    int total = 0;
    for (int e : m)
      for (int j = 1; j <= e; ++j) w *= j;
    for (int e : m) total += e;
    for (int j = 1; j <= dim - 1; ++j) w *= j;
    double den = 1.0;
    for (int j = 1; j <= total + dim - 1; ++j) den *= j;
    return w / den;
  }

  std::string name() const { return domain == Domain::polydisc ? "polydisc" : "ball"; }

  bool inside(const CVector& z) const {
    if (domain == Domain::polydisc) {
      for (Eigen::Index i = 0; i < z.size(); ++i)
        if (std::abs(z[i]) >= 1.0) return false;
      return true;
    }
    return z.squaredNorm() < 1.0;
  }
};

// Integral of a mixed polynomial over the distinguished boundary (polydisc)
// or the sphere (ball); exact on polynomials via the moment formulas.
inline Complex boundary_integral(const HardyModel& M, const Polynomial& f) {
  if (f.dim() != M.dim) fail(Errc::DimensionMismatch, "boundary integral dimension");
  Complex s(0, 0);
  for (const auto& [m, c] : f.terms())
    if (m.holo == m.anti) s += c * M.monomial_weight(m.holo);
  return s;
}

inline Complex inner_product(const HardyModel& M, const Polynomial& f, const Polynomial& g) {
  if (!f.is_holomorphic() || !g.is_holomorphic())
    fail(Errc::NotHolomorphic, "Hardy inner product of non-holomorphic polynomials");
  if (f.dim() != M.dim || g.dim() != M.dim)
    fail(Errc::DimensionMismatch, "inner product dimension");
  Complex s(0, 0);
  for (const auto& [m, c] : f.terms()) {
    Complex cg = g.coeff(m);
    if (cg != Complex(0, 0)) s += c * std::conj(cg) * M.monomial_weight(m.holo);
  }
  return s;
}

inline double norm(const HardyModel& M, const Polynomial& f) {
  return std::sqrt(std::max(0.0, inner_product(M, f, f).real()));
}

// Orthogonal projection L^2(boundary) -> H^2, exact on mixed polynomials.
inline Polynomial szego_project(const HardyModel& M, const Polynomial& f) {
  if (f.dim() != M.dim) fail(Errc::DimensionMismatch, "projection dimension");
  Polynomial out(M.dim);
  for (const auto& [m, c] : f.terms()) {
    Monomial h(M.dim);
    bool ok = true;
    for (int i = 0; i < M.dim; ++i) {
      int e = m.holo[i] - m.anti[i];
      if (e < 0) {
        ok = false;
        break;
      }
      h.holo[i] = e;
    }
    if (!ok) continue;
    double scale = M.monomial_weight(m.holo) / M.monomial_weight(h.holo);
    out.add_term(std::move(h), c * scale);
  }
  return out;
}

// P_chi f = (1/|G|) sum_sigma chi(sigma^{-1}) act(sigma^{-1}, f).
inline Polynomial isotypic_project(const FiniteGroup& G, const Character& chi,
                                   const Polynomial& f) {
  if (f.dim() != G.dim()) fail(Errc::DimensionMismatch, "isotypic projection dimension");
  Polynomial out(f.dim());
  for (int i = 0; i < G.size(); ++i) {
    Polynomial t = f.substitute_linear(G.element(i).matrix);  // act(sigma^{-1}, f) for sigma = i
    t *= chi.values[G.inverse(i)] / static_cast<double>(G.size());
    out += t;
  }
  return out;
}

// Residual component outside all one-dimensional isotypic pieces.
inline Polynomial complement_project(const FiniteGroup& G, const std::vector<Character>& chars,
                                     const Polynomial& f) {
  Polynomial out = f;
  for (const auto& chi : chars) out -= isotypic_project(G, chi, f);
  return out;
}

// Gamma_chi f = (1/sqrt|G|) l_chi (f o theta).
inline Polynomial gamma(const FiniteGroup& G, const Polynomial& ell, const BasicMap& B,
                        const Polynomial& f) {
  Polynomial comp = f.compose(B.map.components);
  return (Complex(1, 0) / std::sqrt(static_cast<double>(G.size()))) * (ell * comp);
}

inline Polynomial gamma_inverse(const FiniteGroup& G, const Character& chi, const Polynomial& ell,
                                const BasicMap& B, const Polynomial& g) {
  if (!g.is_holomorphic()) fail(Errc::NotHolomorphic, "gamma_inverse input");
  if (!is_relative_invariant(G, g, chi))
    fail(Errc::NotRelativeInvariant, "input is not in the chi-isotypic subspace");
  Polynomial q = exact_divide(g, ell);
  Polynomial r = rewrite_in_theta(G, q, B);
  return std::sqrt(static_cast<double>(G.size())) * r;
}

struct QuotientBasisEntry {
  std::vector<int> rep;      // exponent of the orbit representative z^m
  Polynomial lift;           // unit vector in the chi-isotypic subspace of H^2(Omega)
  Polynomial quotient_form;  // e_m in the quotient variables; empty if not requested
};

struct QuotientBasis {
  int chi = 0;
  int max_degree = 0;
  std::string method;  // "monomial-orbit" or "gram-schmidt"
  std::vector<QuotientBasisEntry> entries;
};

namespace detail {

inline void monomials_of_degree(int d, int deg, std::vector<int>& cur, size_t i,
                                std::vector<std::vector<int>>& out) {
  if (i + 1 == cur.size()) {
    cur[i] = deg;
    out.push_back(cur);
    return;
  }
  for (int e = deg; e >= 0; --e) {  // lex descending
    cur[i] = e;
    monomials_of_degree(d, deg - e, cur, i + 1, out);
  }
}

// Monomials of the given total degree, lexicographically descending.
inline std::vector<std::vector<int>> monomials_of_degree(int d, int deg) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(d, 0);
  monomials_of_degree(d, deg, cur, 0, out);
  return out;
}

inline void fix_phase(Polynomial& v) {
  if (v.is_zero()) return;
  Complex lead = v.leading_coeff();
  v *= std::conj(lead) / std::abs(lead);
}

}  // namespace detail

// Orthonormal basis of the chi-component up to the given lift degree.  Set
// with_quotient_forms = false to skip the Gamma-inverse rewrites when only
// the lifted vectors are needed.
inline QuotientBasis quotient_onb(const GroupContext& ctx, int chi, const HardyModel& M,
                                  int max_degree, bool with_quotient_forms = true) {
  const FiniteGroup& G = ctx.group;
  if (M.dim != G.dim()) fail(Errc::DimensionMismatch, "model dimension");
  QuotientBasis basis;
  basis.chi = chi;
  basis.max_degree = max_degree;
  const Character& character = ctx.character(chi);

  if (G.is_monomial()) {
    basis.method = "monomial-orbit";
    std::map<std::vector<int>, char> claimed;
    for (int deg = 0; deg <= max_degree; ++deg) {
      for (const auto& m : detail::monomials_of_degree(G.dim(), deg)) {
        if (claimed.count(m)) continue;
        Monomial mono(G.dim());
        mono.holo = m;
        Polynomial zm = Polynomial::monomial(mono, Complex(1, 0));
        for (int i = 0; i < G.size(); ++i) {
          Polynomial img = zm.substitute_linear(G.element(i).matrix);
          claimed[img.leading_monomial().holo] = 1;
        }
        Polynomial v = isotypic_project(G, character, zm);
        double n = norm(M, v);
        if (n < 1e-12) continue;
        v *= Complex(1.0 / n, 0);
        detail::fix_phase(v);
        QuotientBasisEntry e;
        e.rep = m;
        e.lift = std::move(v);
        if (with_quotient_forms)
          e.quotient_form = gamma_inverse(G, character, ctx.ell(chi), ctx.basic, e.lift);
        else
          e.quotient_form = Polynomial(G.dim());
        basis.entries.push_back(std::move(e));
      }
    }
    return basis;
  }

  // Fallback for non-monomial actions: Gram-Schmidt over the projected
  // monomials in graded order.
  basis.method = "gram-schmidt";
  for (int deg = 0; deg <= max_degree; ++deg) {
    for (const auto& m : detail::monomials_of_degree(G.dim(), deg)) {
      Monomial mono(G.dim());
      mono.holo = m;
      Polynomial v = isotypic_project(G, character, Polynomial::monomial(mono, Complex(1, 0)));
      double n0 = norm(M, v);
      if (n0 < 1e-12) continue;
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& e : basis.entries) v -= inner_product(M, v, e.lift) * e.lift;
      double n = norm(M, v);
      if (n <= 1e-9 * std::max(1.0, n0)) continue;
      v *= Complex(1.0 / n, 0);
      detail::fix_phase(v);
      QuotientBasisEntry e;
      e.rep = m;
      e.lift = std::move(v);
      if (with_quotient_forms)
        e.quotient_form = gamma_inverse(G, character, ctx.ell(chi), ctx.basic, e.lift);
      else
        e.quotient_form = Polynomial(G.dim());
      basis.entries.push_back(std::move(e));
    }
  }
  return basis;
}

// <f, g> in the quotient space, computed through the unitary lift.
inline Complex quotient_inner(const GroupContext& ctx, int chi, const HardyModel& M,
                              const Polynomial& f, const Polynomial& g) {
  const Polynomial& ell = ctx.ell(chi);
  return inner_product(M, gamma(ctx.group, ell, ctx.basic, f), gamma(ctx.group, ell, ctx.basic, g));
}

// Same pairing through the pullback measure: (1/|G|) Int (f o theta) conj(g o theta) |l|^2.
inline Complex quotient_inner_pullback(const GroupContext& ctx, int chi, const HardyModel& M,
                                       const Polynomial& f, const Polynomial& g) {
  const Polynomial& ell = ctx.ell(chi);
  Polynomial fo = f.compose(ctx.basic.map.components);
  Polynomial go = g.compose(ctx.basic.map.components);
  Polynomial integrand = fo * go.conjugate() * ell * ell.conjugate();
  return boundary_integral(M, integrand) / static_cast<double>(ctx.group.size());
}

inline Complex szego_kernel(const HardyModel& M, const CVector& z, const CVector& w) {
  if (z.size() != M.dim || w.size() != M.dim)
    fail(Errc::DimensionMismatch, "kernel point dimension");
  if (!M.inside(z) || !M.inside(w)) fail(Errc::BadConfig, "kernel point outside the domain");
  if (M.domain == Domain::polydisc) {
    Complex s(1, 0);
    for (int i = 0; i < M.dim; ++i) s /= Complex(1, 0) - z[i] * std::conj(w[i]);
    return s;
  }
  Complex ip(0, 0);
  for (int i = 0; i < M.dim; ++i) ip += z[i] * std::conj(w[i]);
  Complex base = Complex(1, 0) - ip;
  Complex r(1, 0);
  for (int i = 0; i < M.dim; ++i) r /= base;
  return r;
}

// Kernel of the chi-isotypic subspace: the isotypic projection applied to the
// holomorphic argument of the Szego kernel.
inline Complex subspace_kernel(const GroupContext& ctx, int chi, const HardyModel& M,
                               const CVector& z, const CVector& w) {
  const FiniteGroup& G = ctx.group;
  const Character& character = ctx.character(chi);
  Complex s(0, 0);
  for (int i = 0; i < G.size(); ++i) {
    CVector zi = G.element(i).matrix * z;
    s += character.values[G.inverse(i)] * szego_kernel(M, zi, w);
  }
  return s / static_cast<double>(G.size());
}

// Display variant carrying the 1/(l(z) conj(l(w))) prefactor.
inline Complex subspace_kernel_display(const GroupContext& ctx, int chi, const HardyModel& M,
                                       const CVector& z, const CVector& w) {
  Complex lz = ctx.ell(chi).evaluate(z);
  Complex lw = ctx.ell(chi).evaluate(w);
  if (std::abs(lz) < 1e-12 || std::abs(lw) < 1e-12)
    fail(Errc::PointOnZeroSet, "generating polynomial vanishes at a kernel argument");
  return subspace_kernel(ctx, chi, M, z, w) / (lz * std::conj(lw));
}

// S_{chi,theta}(theta(z), theta(w)) evaluated through fiber representatives.
inline Complex quotient_kernel(const GroupContext& ctx, int chi, const HardyModel& M,
                               const CVector& z, const CVector& w) {
  return static_cast<double>(ctx.group.size()) * subspace_kernel_display(ctx, chi, M, z, w);
}

}  // namespace qh
