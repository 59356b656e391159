#pragma once

// Toeplitz operators on the quotient Hardy spaces through the unitary lift:
// symbol transport, finite matrix truncations, and the transfer checks
// relating identities on H^2(Omega) to the quotient spaces.

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "qh/error.hpp"
#include "qh/hardy.hpp"
#include "qh/invariants.hpp"
#include "qh/report.hpp"

namespace qh {

struct SymbolPair {
  Polynomial quotient;  // u in the quotient variables and their conjugates
  Polynomial lifted;    // u o (theta, conj theta), G-invariant on Omega
};

inline SymbolPair lift_symbol(const GroupContext& ctx, const Polynomial& u) {
  if (u.dim() != ctx.group.dim()) fail(Errc::DimensionMismatch, "symbol dimension");
  Polynomial lifted = u.compose_mixed(ctx.basic.map.components);
  if (!is_invariant(ctx.group, lifted))
    fail(Errc::NotInvariant, "lifted symbol failed the invariance check");
  return SymbolPair{u, std::move(lifted)};
}

// T_u f = P(u f) on H^2(Omega).
inline Polynomial apply_toeplitz_ambient(const HardyModel& M, const Polynomial& symbol,
                                         const Polynomial& f) {
  if (!f.is_holomorphic()) fail(Errc::NotHolomorphic, "Toeplitz argument");
  return szego_project(M, symbol * f);
}

// T_u on the quotient space, computed as Gamma^{-1} T_{lifted} Gamma.
inline Polynomial apply_toeplitz_quotient(const GroupContext& ctx, int chi, const HardyModel& M,
                                          const Polynomial& u, const Polynomial& f) {
  SymbolPair sym = lift_symbol(ctx, u);
  const Polynomial& ell = ctx.ell(chi);
  Polynomial lifted_f = gamma(ctx.group, ell, ctx.basic, f);
  Polynomial amb = apply_toeplitz_ambient(M, sym.lifted, lifted_f);
  return gamma_inverse(ctx.group, ctx.character(chi), ell, ctx.basic, amb);
}

namespace detail {

// Largest possible degree increase of P(symbol * f) over deg f.
inline int symbol_reach(const Polynomial& symbol) {
  int reach = 0;
  for (const auto& [m, c] : symbol.terms())
    reach = std::max(reach, m.holo_degree() - m.anti_degree());
  return reach;
}

inline Matrix pairing_matrix(const HardyModel& M, const Polynomial& symbol,
                             const QuotientBasis& basis) {
  const int n = static_cast<int>(basis.entries.size());
  Matrix A(n, n);
  std::vector<Polynomial> conj_lifts;
  conj_lifts.reserve(n);
  for (const auto& e : basis.entries) conj_lifts.push_back(e.lift.conjugate());
  for (int k = 0; k < n; ++k) {
    Polynomial uf = symbol * basis.entries[k].lift;
    for (int j = 0; j < n; ++j) A(j, k) = boundary_integral(M, uf * conj_lifts[j]);
  }
  return A;
}

}  // namespace detail

struct ToeplitzTruncation {
  Matrix matrix;  // <T_u e_k, e_j> on the lifted orthonormal basis
  QuotientBasis basis;
  int degree_cutoff = 0;
  std::vector<char> exact_column;  // column k fully captured inside the truncation
  SymbolPair symbol;
};

inline ToeplitzTruncation toeplitz_matrix(const GroupContext& ctx, int chi, const HardyModel& M,
                                          const Polynomial& u, int cutoff) {
  ToeplitzTruncation T;
  T.degree_cutoff = cutoff;
  T.symbol = lift_symbol(ctx, u);
  T.basis = quotient_onb(ctx, chi, M, cutoff, /*with_quotient_forms=*/false);
  T.matrix = detail::pairing_matrix(M, T.symbol.lifted, T.basis);
  const int reach = std::max(0, detail::symbol_reach(T.symbol.lifted));
  T.exact_column.reserve(T.basis.entries.size());
  for (const auto& e : T.basis.entries)
    T.exact_column.push_back(e.lift.degree() + reach <= cutoff ? 1 : 0);
  return T;
}

inline std::vector<double> finite_section_singular_values(const ToeplitzTruncation& T,
                                                          int count = -1) {
  Eigen::JacobiSVD<Matrix> svd(T.matrix);
  const auto& sv = svd.singularValues();
  int n = static_cast<int>(sv.size());
  if (count >= 0) n = std::min(n, count);
  std::vector<double> out(sv.data(), sv.data() + n);
  return out;
}

// ---- transfer checks ----------------------------------------------------

struct TransferReport {
  std::string name;
  std::vector<std::string> spaces;   // "ambient", then one per character
  std::vector<bool> identity_holds;  // per space, deviation < tol on the probe set
  std::vector<double> deviations;
  bool uniform = false;  // same verdict on the ambient space and every quotient
  double tol = 0.0;

  CheckReport to_check_report() const {
    CheckReport r;
    r.name = name;
    r.verdict = uniform ? "PASS" : "FAIL";
    r.max_deviation = deviations.empty()
                          ? 0.0
                          : *std::max_element(deviations.begin(), deviations.end());
    r.exact_region_size = static_cast<long long>(spaces.size());
    for (size_t i = 0; i < spaces.size(); ++i)
      r.notes.push_back(spaces[i] + ": " + (identity_holds[i] ? "HOLDS" : "FAILS") +
                        " (deviation " + std::to_string(deviations[i]) + ")");
    return r;
  }
};

namespace detail {

// Max Hardy-norm deviation of op over the ambient monomial basis.
template <typename Op>
double ambient_deviation(const HardyModel& M, int cutoff, Op&& op) {
  double dev = 0.0;
  for (int deg = 0; deg <= cutoff; ++deg)
    for (const auto& m : monomials_of_degree(M.dim, deg)) {
      Monomial mono(M.dim);
      mono.holo = m;
      Polynomial f =
          Polynomial::monomial(mono, Complex(1.0 / std::sqrt(M.monomial_weight(m)), 0));
      dev = std::max(dev, norm(M, op(f)));
    }
  return dev;
}

// Max Hardy-norm deviation of op over the lifted quotient basis.
template <typename Op>
double quotient_deviation(const GroupContext& ctx, int chi, const HardyModel& M, int cutoff,
                          Op&& op) {
  QuotientBasis basis = quotient_onb(ctx, chi, M, cutoff, /*with_quotient_forms=*/false);
  double dev = 0.0;
  for (const auto& e : basis.entries) dev = std::max(dev, norm(M, op(e.lift)));
  return dev;
}

}  // namespace detail

// Does T_u T_v = T_q transfer between the ambient space and every quotient?
// The product is probed exactly on basis vectors through the lifted symbols;
// by unitarity of Gamma the quotient-side deviations equal the lifted ones.
inline TransferReport check_product_transfer(const GroupContext& ctx, const HardyModel& M,
                                             const Polynomial& u, const Polynomial& v,
                                             const Polynomial& q, int cutoff,
                                             double tol = 1e-8) {
  SymbolPair su = lift_symbol(ctx, u), sv = lift_symbol(ctx, v), sq = lift_symbol(ctx, q);
  auto op = [&](const Polynomial& f) {
    return apply_toeplitz_ambient(M, su.lifted, apply_toeplitz_ambient(M, sv.lifted, f)) -
           apply_toeplitz_ambient(M, sq.lifted, f);
  };
  TransferReport r;
  r.name = "product-transfer";
  r.tol = tol;
  r.spaces.push_back("ambient");
  r.deviations.push_back(detail::ambient_deviation(M, cutoff, op));
  for (int chi = 0; chi < ctx.character_count(); ++chi) {
    r.spaces.push_back(ctx.character(chi).name);
    r.deviations.push_back(detail::quotient_deviation(ctx, chi, M, cutoff, op));
  }
  for (double d : r.deviations) r.identity_holds.push_back(d < tol);
  r.uniform = std::all_of(r.identity_holds.begin(), r.identity_holds.end(),
                          [&](bool b) { return b == r.identity_holds[0]; });
  return r;
}

inline TransferReport check_commuting_transfer(const GroupContext& ctx, const HardyModel& M,
                                               const Polynomial& u, const Polynomial& v,
                                               int cutoff, double tol = 1e-8) {
  SymbolPair su = lift_symbol(ctx, u), sv = lift_symbol(ctx, v);
  auto op = [&](const Polynomial& f) {
    return apply_toeplitz_ambient(M, su.lifted, apply_toeplitz_ambient(M, sv.lifted, f)) -
           apply_toeplitz_ambient(M, sv.lifted, apply_toeplitz_ambient(M, su.lifted, f));
  };
  TransferReport r;
  r.name = "commute-transfer";
  r.tol = tol;
  r.spaces.push_back("ambient");
  r.deviations.push_back(detail::ambient_deviation(M, cutoff, op));
  for (int chi = 0; chi < ctx.character_count(); ++chi) {
    r.spaces.push_back(ctx.character(chi).name);
    r.deviations.push_back(detail::quotient_deviation(ctx, chi, M, cutoff, op));
  }
  for (double d : r.deviations) r.identity_holds.push_back(d < tol);
  r.uniform = std::all_of(r.identity_holds.begin(), r.identity_holds.end(),
                          [&](bool b) { return b == r.identity_holds[0]; });
  return r;
}

// T_u P_chi = P_chi T_u on monomials, for a G-invariant ambient symbol.
inline CheckReport check_reducing(const GroupContext& ctx, int chi, const HardyModel& M,
                                  const Polynomial& ambient_symbol, int degree,
                                  double tol = 1e-8) {
  CheckReport r;
  r.name = "reducing";
  if (!is_invariant(ctx.group, ambient_symbol)) {
    r.verdict = "PRECONDITION";
    r.notes.push_back("symbol is not G-invariant");
    return r;
  }
  const Character& character = ctx.character(chi);
  double dev = 0.0;
  long long count = 0;
  for (int deg = 0; deg <= degree; ++deg)
    for (const auto& m : detail::monomials_of_degree(M.dim, deg)) {
      Monomial mono(M.dim);
      mono.holo = m;
      Polynomial f = Polynomial::monomial(mono, Complex(1, 0));
      Polynomial lhs =
          apply_toeplitz_ambient(M, ambient_symbol, isotypic_project(ctx.group, character, f));
      Polynomial rhs =
          isotypic_project(ctx.group, character, apply_toeplitz_ambient(M, ambient_symbol, f));
      dev = std::max(dev, norm(M, lhs - rhs));
      ++count;
    }
  r.verdict = dev < tol ? "PASS" : "FAIL";
  r.max_deviation = dev;
  r.exact_region_size = count;
  return r;
}

// T_u(l_chi h) = l_chi P_tr(u h) for invariant h: the chi-component is a
// module over the invariant Toeplitz algebra.
inline CheckReport check_module_invariance(const GroupContext& ctx, int chi, const HardyModel& M,
                                           const Polynomial& ambient_symbol, int degree,
                                           double tol = 1e-8) {
  CheckReport r;
  r.name = "module-invariance";
  if (!is_invariant(ctx.group, ambient_symbol)) {
    r.verdict = "PRECONDITION";
    r.notes.push_back("symbol is not G-invariant");
    return r;
  }
  const Character& trivial = ctx.character(0);
  const Polynomial& ell = ctx.ell(chi);
  double dev = 0.0;
  long long count = 0;
  std::map<std::vector<int>, char> claimed;
  for (int deg = 0; deg <= degree; ++deg)
    for (const auto& m : detail::monomials_of_degree(M.dim, deg)) {
      if (claimed.count(m)) continue;
      Monomial mono(M.dim);
      mono.holo = m;
      Polynomial zm = Polynomial::monomial(mono, Complex(1, 0));
      for (int i = 0; i < ctx.group.size(); ++i) {
        Polynomial img = zm.substitute_linear(ctx.group.element(i).matrix);
        claimed[img.leading_monomial().holo] = 1;
      }
      Polynomial h = isotypic_project(ctx.group, trivial, zm);
      if (h.is_zero()) continue;
      Polynomial lhs = apply_toeplitz_ambient(M, ambient_symbol, ell * h);
      Polynomial q;
      try {
        q = exact_divide(lhs, ell);
      } catch (const Error&) {
        r.verdict = "FAIL";
        r.notes.push_back("T_u(l h) not divisible by l at h from " + zm.str());
        return r;
      }
      if (!is_invariant(ctx.group, q)) {
        r.verdict = "FAIL";
        r.notes.push_back("quotient not invariant at rep degree " + std::to_string(deg));
        return r;
      }
      Polynomial rhs = isotypic_project(ctx.group, trivial,
                                        szego_project(M, ambient_symbol * h));
      dev = std::max(dev, norm(M, lhs - ell * rhs));
      ++count;
    }
  r.verdict = dev < tol ? "PASS" : "FAIL";
  r.max_deviation = dev;
  r.exact_region_size = count;
  return r;
}

// ---- Brown-Halmos sections ----------------------------------------------

// Is the lifted coordinate theta_i unimodular on the torus?  Reduce
// theta_i conj(theta_i) as a function on the distinguished boundary.
inline bool coordinate_is_inner(const GroupContext& ctx, int i) {
  const Polynomial& th = ctx.basic.map.components[i];
  Polynomial prod = th * th.conjugate();
  std::map<std::vector<int>, Complex> classes;  // frequency a - b -> coefficient sum
  for (const auto& [m, c] : prod.terms()) {
    std::vector<int> freq(m.holo.size());
    for (size_t j = 0; j < freq.size(); ++j) freq[j] = m.holo[j] - m.anti[j];
    classes[freq] += c;
  }
  for (const auto& [freq, c] : classes) {
    bool zero_freq = std::all_of(freq.begin(), freq.end(), [](int e) { return e == 0; });
    Complex want = zero_freq ? Complex(1, 0) : Complex(0, 0);
    if (std::abs(c - want) > kEps) return false;
  }
  return classes.count(std::vector<int>(ctx.group.dim(), 0)) > 0;
}

struct BrownHalmosReport {
  std::vector<double> deviation;      // per coordinate, over the joint exactness region
  std::vector<bool> inner;            // torus-unimodularity of each lifted coordinate
  std::vector<long long> region_size;
  bool pass = false;  // deviation < tol for every inner coordinate
  double tol = 0.0;

  CheckReport to_check_report() const {
    CheckReport r;
    r.name = "brown-halmos";
    r.verdict = pass ? "PASS" : "FAIL";
    for (size_t i = 0; i < deviation.size(); ++i) {
      r.max_deviation = std::max(r.max_deviation, inner[i] ? deviation[i] : 0.0);
      r.exact_region_size += region_size[i];
      r.notes.push_back("coordinate " + std::to_string(i + 1) +
                        (inner[i] ? " (inner): " : " (not inner): ") +
                        std::to_string(deviation[i]));
    }
    return r;
  }
};

// M_{w_i}^* T_u M_{w_i} = T_u on finite sections, compared on the index pairs
// whose multiplication columns are complete inside the truncation.  The
// identity characterizes Toeplitz operators only for coordinates that lift to
// inner functions; deviations are reported for every coordinate and the PASS
// verdict quantifies over the inner ones.
inline BrownHalmosReport check_brown_halmos(const GroupContext& ctx, int chi, const Polynomial& u,
                                            int cutoff, double tol = 1e-8) {
  HardyModel M = HardyModel::polydisc(ctx.group.dim());
  BrownHalmosReport rep;
  rep.tol = tol;
  ToeplitzTruncation T = toeplitz_matrix(ctx, chi, M, u, cutoff);
  const int n = static_cast<int>(T.basis.entries.size());
  const int d = ctx.group.dim();
  rep.pass = true;
  for (int i = 0; i < d; ++i) {
    const Polynomial& th = ctx.basic.map.components[i];
    const int dtheta = th.degree();
    Matrix Mi(n, n);
    std::vector<Polynomial> mult;
    mult.reserve(n);
    for (const auto& e : T.basis.entries) mult.push_back(th * e.lift);
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j)
        Mi(j, k) = inner_product(M, mult[k], T.basis.entries[j].lift);
    Matrix D = Mi.adjoint() * T.matrix * Mi - T.matrix;
    double dev = 0.0;
    long long region = 0;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        int dj = T.basis.entries[j].lift.degree();
        int dk = T.basis.entries[k].lift.degree();
        if (dj + dtheta > cutoff || dk + dtheta > cutoff) continue;
        ++region;
        dev = std::max(dev, std::abs(D(j, k)));
      }
    bool inner = coordinate_is_inner(ctx, i);
    rep.deviation.push_back(dev);
    rep.inner.push_back(inner);
    rep.region_size.push_back(region);
    if (inner && !(dev < tol)) rep.pass = false;
  }
  return rep;
}

}  // namespace qh
