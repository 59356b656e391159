#pragma once

// Reflecting hyperplane arrangements, character exponents, Stanley generating
// polynomials, homogeneous systems of parameters and rewriting of invariants
// as polynomials in the basic invariants.

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "qh/error.hpp"
#include "qh/group.hpp"
#include "qh/polynomial.hpp"

namespace qh {

struct HyperplaneData {
  std::vector<Polynomial> forms;              // canonical linear forms, one per hyperplane
  std::vector<int> orders;                    // m_i = |G_i|
  std::vector<int> generators;                // a_i: element index with det = e^{2 pi i / m_i}
  std::vector<std::vector<int>> reflections;  // all pseudoreflections fixing each hyperplane

  size_t size() const { return forms.size(); }
};

namespace detail {

inline std::vector<Complex> hyperplane_normal_coeffs(const Matrix& sigma) {
  const int d = static_cast<int>(sigma.rows());
  Matrix A = Matrix::Identity(d, d) - sigma;
  Eigen::JacobiSVD<Matrix> svd(A, Eigen::ComputeFullV);
  CVector n = svd.matrixV().col(0);  // spans the orthogonal complement of the fixed hyperplane
  std::vector<Complex> coeffs(d);
  for (int i = 0; i < d; ++i) coeffs[i] = std::conj(n[i]);
  int lead = -1;
  for (int i = 0; i < d; ++i)
    if (std::abs(coeffs[i]) > 1e-9) {
      lead = i;
      break;
    }
  if (lead < 0) fail(Errc::NotReflectionGroup, "degenerate reflection normal");
  Complex s = coeffs[lead];
  for (auto& c : coeffs) c /= s;
  for (auto& c : coeffs)
    if (std::abs(c) < 1e-12) c = Complex(0, 0);
  return coeffs;
}

inline Polynomial linear_form(const std::vector<Complex>& coeffs) {
  const int d = static_cast<int>(coeffs.size());
  Polynomial f(d);
  for (int i = 0; i < d; ++i)
    if (std::abs(coeffs[i]) > 0) {
      Monomial m(d);
      m.holo[i] = 1;
      f.add_term(std::move(m), coeffs[i]);
    }
  return f;
}

}  // namespace detail

inline HyperplaneData hyperplanes(const FiniteGroup& G) {
  if (!G.is_pseudoreflection_group())
    fail(Errc::NotReflectionGroup, "group is not generated by its pseudoreflections");
  HyperplaneData H;
  std::vector<std::vector<Complex>> normals;
  for (int r : G.pseudoreflections()) {
    auto coeffs = detail::hyperplane_normal_coeffs(G.element(r).matrix);
    int found = -1;
    for (size_t i = 0; i < normals.size(); ++i) {
      double diff = 0.0;
      for (int j = 0; j < G.dim(); ++j) diff = std::max(diff, std::abs(normals[i][j] - coeffs[j]));
      if (diff < 1e-7) {
        found = static_cast<int>(i);
        break;
      }
    }
    if (found < 0) {
      normals.push_back(coeffs);
      H.forms.push_back(detail::linear_form(coeffs));
      H.reflections.push_back({r});
    } else {
      H.reflections[found].push_back(r);
    }
  }
  for (size_t i = 0; i < H.forms.size(); ++i) {
    int m = 1 + static_cast<int>(H.reflections[i].size());
    H.orders.push_back(m);
    Complex want = std::polar(1.0, 2.0 * std::numbers::pi / m);
    int gen = -1;
    for (int r : H.reflections[i])
      if (std::abs(G.element(r).matrix.determinant() - want) < 1e-6) {
        gen = r;
        break;
      }
    if (gen < 0)
      fail(Errc::NotReflectionGroup, "no cyclic generator with determinant e^{2 pi i/m} found");
    H.generators.push_back(gen);
  }
  return H;
}

// c_i: least non-negative exponent with chi(a_i) = det(a_i)^{c_i}.
inline std::vector<int> character_exponents(const HyperplaneData& H, const Character& chi) {
  std::vector<int> exps;
  exps.reserve(H.size());
  for (size_t i = 0; i < H.size(); ++i) {
    const int m = H.orders[i];
    const Complex v = chi.values[H.generators[i]];
    int found = -1;
    for (int c = 0; c < m; ++c) {
      Complex dc = std::polar(1.0, 2.0 * std::numbers::pi * c / m);
      if (std::abs(dc - v) < 1e-6) {
        found = c;
        break;
      }
    }
    if (found < 0)
      fail(Errc::NoExponent, "character value is not a power of det on hyperplane " +
                                 std::to_string(i));
    exps.push_back(found);
  }
  return exps;
}

// l_chi = prod_i l_i^{c_i}.
inline Polynomial generating_polynomial(const HyperplaneData& H, const Character& chi) {
  std::vector<int> exps = chi.exponents.empty() ? character_exponents(H, chi) : chi.exponents;
  if (exps.size() != H.size()) fail(Errc::DimensionMismatch, "exponent tuple length");
  const int d = H.forms.empty() ? 0 : H.forms[0].dim();
  Polynomial p = Polynomial::constant(d, Complex(1, 0));
  for (size_t i = 0; i < H.size(); ++i)
    for (int e = 0; e < exps[i]; ++e) p = p * H.forms[i];
  return p;
}

// f o sigma = chi(sigma) f, i.e. act(sigma, f) = chi(sigma^{-1}) f.  This is
// the convention under which l_chi generates the chi-relative invariants and
// the jacobian realizes the det^{-1} character with exponents m_i - 1.
inline bool is_relative_invariant(const FiniteGroup& G, const Polynomial& f,
                                  const Character& chi) {
  const double tol = kEps * (1.0 + f.max_abs_coeff());
  for (int i = 0; i < G.size(); ++i)
    if (max_coeff_diff(act(G, i, f), chi.values[G.inverse(i)] * f) > tol) return false;
  return true;
}

inline bool is_invariant(const FiniteGroup& G, const Polynomial& f) {
  const double tol = kEps * (1.0 + f.max_abs_coeff());
  for (int i = 0; i < G.size(); ++i)
    if (max_coeff_diff(act(G, i, f), f) > tol) return false;
  return true;
}

struct BasicMap {
  PolynomialMap map;
  std::string source;  // "builtin" or "user"
};

namespace detail {

inline Polynomial elementary_symmetric(int d, int k, int power = 1) {
  // e_k(z_1^power, ..., z_d^power)
  Polynomial p(d);
  std::vector<int> idx(k);
  auto emit = [&]() {
    Monomial m(d);
    for (int i : idx) m.holo[i] = power;
    p.add_term(std::move(m), Complex(1, 0));
  };
  // iterate over all k-subsets of {0..d-1}
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k == 0) {
    return Polynomial::constant(d, Complex(1, 0));
  }
  while (true) {
    emit();
    int i = k - 1;
    while (i >= 0 && idx[i] == d - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return p;
}

inline void verify_hsop(const FiniteGroup& G, const PolynomialMap& map) {
  if (static_cast<int>(map.size()) != G.dim())
    fail(Errc::InvalidHsop, "need exactly d basic invariants");
  long long degprod = 1;
  for (size_t j = 0; j < map.size(); ++j) {
    const Polynomial& t = map.components[j];
    if (t.dim() != G.dim()) fail(Errc::InvalidHsop, "component dimension mismatch");
    if (!t.is_holomorphic()) fail(Errc::InvalidHsop, "component is not holomorphic");
    if (!t.is_homogeneous() || t.is_zero())
      fail(Errc::InvalidHsop, "component " + std::to_string(j) + " is not homogeneous");
    if (!is_invariant(G, t))
      fail(Errc::InvalidHsop, "component " + std::to_string(j) + " is not invariant");
    degprod *= t.degree();
  }
  if (degprod != G.size())
    fail(Errc::InvalidHsop, "degree product " + std::to_string(degprod) +
                                " differs from group order " + std::to_string(G.size()));
  if (jacobian_det(map).is_zero()) fail(Errc::InvalidHsop, "jacobian vanishes identically");
}

}  // namespace detail

inline BasicMap basic_map(const FiniteGroup& G,
                          const std::optional<PolynomialMap>& user_map = std::nullopt) {
  if (user_map) {
    detail::verify_hsop(G, *user_map);
    return BasicMap{*user_map, "user"};
  }
  const int d = G.dim();
  std::vector<Polynomial> comps;
  if (G.family_tag() == "symmetric") {
    for (int k = 1; k <= d; ++k) comps.push_back(detail::elementary_symmetric(d, k));
  } else if (G.family_tag() == "cyclic") {
    const auto& orders = G.family_params();
    for (int i = 0; i < d; ++i) {
      Monomial m(d);
      m.holo[i] = orders[i];
      comps.push_back(Polynomial::monomial(std::move(m), Complex(1, 0)));
    }
  } else if (G.family_tag() == "wreath") {
    const int m = G.family_params()[0];
    for (int k = 1; k <= d; ++k) comps.push_back(detail::elementary_symmetric(d, k, m));
  } else {
    fail(Errc::InvalidHsop, "no builtin basic invariants for family '" + G.family_tag() +
                                "'; supply a user map");
  }
  PolynomialMap map(std::move(comps));
  detail::verify_hsop(G, map);
  return BasicMap{std::move(map), "builtin"};
}

// J_theta = c * prod_i l_i^{m_i - 1}; returns c or throws FactorizationFails.
inline Complex verify_jacobian_factorization(const BasicMap& B, const HyperplaneData& H) {
  Polynomial J = jacobian_det(B.map);
  const int d = B.map.dim();
  Polynomial P = Polynomial::constant(d, Complex(1, 0));
  for (size_t i = 0; i < H.size(); ++i)
    for (int e = 0; e + 1 < H.orders[i]; ++e) P = P * H.forms[i];
  if (J.is_zero() || P.is_zero()) fail(Errc::FactorizationFails, "vanishing jacobian or product");
  Complex c = J.coeff(P.leading_monomial()) / P.leading_coeff();
  if (std::abs(c) < kEps) fail(Errc::FactorizationFails, "leading coefficient mismatch");
  double residual = max_coeff_diff(J, c * P);
  if (residual > kEps * (1.0 + J.max_abs_coeff()))
    fail(Errc::FactorizationFails, "residual " + std::to_string(residual));
  return c;
}

// Rewrites an invariant polynomial as a polynomial in the basic invariants,
// solving one least-squares system per homogeneous degree.
inline Polynomial rewrite_in_theta(const FiniteGroup& G, const Polynomial& p, const BasicMap& B) {
  if (!p.is_holomorphic()) fail(Errc::NotHolomorphic, "rewrite requires a holomorphic polynomial");
  if (!is_invariant(G, p)) fail(Errc::NotInvariant, "polynomial is not G-invariant");
  const int d = static_cast<int>(B.map.size());
  Polynomial out(d);
  if (p.is_zero()) return out;

  std::map<int, Polynomial> blocks;
  for (const auto& [m, c] : p.terms()) {
    auto [it, inserted] = blocks.try_emplace(m.holo_degree(), Polynomial(p.dim()));
    it->second.add_term(m, c);
  }

  std::vector<std::vector<Polynomial>> pows(B.map.size());
  auto theta_pow = [&](int i, int e) -> const Polynomial& {
    auto& v = pows[i];
    if (v.empty()) v.push_back(Polynomial::constant(p.dim(), Complex(1, 0)));
    while (static_cast<int>(v.size()) <= e) v.push_back(v.back() * B.map.components[i]);
    return v[e];
  };

  const double tol = kEpsDiv * (1.0 + p.max_abs_coeff());
  for (const auto& [deg, block] : blocks) {
    // all alpha with sum alpha_i deg(theta_i) = deg, lexicographic
    std::vector<std::vector<int>> alphas;
    std::vector<int> cur(d, 0);
    std::function<void(int, int)> rec = [&](int i, int rem) {
      if (i == d) {
        if (rem == 0) alphas.push_back(cur);
        return;
      }
      for (int e = 0; e * B.map.degrees[i] <= rem; ++e) {
        cur[i] = e;
        rec(i + 1, rem - e * B.map.degrees[i]);
      }
      cur[i] = 0;
    };
    rec(0, deg);
    if (alphas.empty()) fail(Errc::SolveFailed, "no invariant monomials in degree " +
                                                    std::to_string(deg));
    std::vector<Polynomial> cols;
    cols.reserve(alphas.size());
    std::map<Monomial, int, GrlexLess> row_of;
    auto index_rows = [&](const Polynomial& q) {
      for (const auto& [m, c] : q.terms()) row_of.try_emplace(m, 0);
    };
    for (const auto& a : alphas) {
      Polynomial col = Polynomial::constant(p.dim(), Complex(1, 0));
      for (int i = 0; i < d; ++i)
        if (a[i] > 0) col = col * theta_pow(i, a[i]);
      index_rows(col);
      cols.push_back(std::move(col));
    }
    index_rows(block);
    int nr = 0;
    for (auto& [m, idx] : row_of) idx = nr++;
    Matrix A = Matrix::Zero(nr, static_cast<int>(cols.size()));
    CVector b = CVector::Zero(nr);
    for (size_t j = 0; j < cols.size(); ++j)
      for (const auto& [m, c] : cols[j].terms()) A(row_of[m], static_cast<int>(j)) = c;
    for (const auto& [m, c] : block.terms()) b[row_of[m]] = c;
    CVector x = A.colPivHouseholderQr().solve(b);
    double residual = (A * x - b).cwiseAbs().maxCoeff();
    if (residual > tol)
      fail(Errc::SolveFailed, "residual " + std::to_string(residual) + " in degree " +
                                  std::to_string(deg));
    for (size_t j = 0; j < alphas.size(); ++j) {
      if (std::abs(x[static_cast<Eigen::Index>(j)]) < kEpsDrop) continue;
      Monomial m(d);
      m.holo = alphas[j];
      out.add_term(std::move(m), x[static_cast<Eigen::Index>(j)]);
    }
  }
  return out;
}

// Bundles everything derived from a pseudoreflection group that the Hardy and
// Toeplitz layers consume.
struct GroupContext {
  FiniteGroup group;
  HyperplaneData planes;
  std::vector<Character> characters;  // exponents filled, trivial character first
  BasicMap basic;
  Complex jacobian_constant;
  std::vector<Polynomial> ells;  // generating polynomial per character

  const Character& character(int i) const {
    if (i < 0 || i >= static_cast<int>(characters.size()))
      fail(Errc::BadConfig, "character index out of range");
    return characters[i];
  }
  const Polynomial& ell(int i) const {
    if (i < 0 || i >= static_cast<int>(ells.size()))
      fail(Errc::BadConfig, "character index out of range");
    return ells[i];
  }
  int character_count() const { return static_cast<int>(characters.size()); }
};

inline GroupContext analyze_group(FiniteGroup G,
                                  const std::optional<PolynomialMap>& user_map = std::nullopt) {
  GroupContext ctx{std::move(G), {}, {}, {}, Complex(0, 0), {}};
  ctx.planes = hyperplanes(ctx.group);
  ctx.characters = ctx.group.one_dim_characters();
  for (auto& chi : ctx.characters) chi.exponents = character_exponents(ctx.planes, chi);
  ctx.basic = basic_map(ctx.group, user_map);
  ctx.jacobian_constant = verify_jacobian_factorization(ctx.basic, ctx.planes);
  ctx.ells.reserve(ctx.characters.size());
  for (const auto& chi : ctx.characters)
    ctx.ells.push_back(generating_polynomial(ctx.planes, chi));
  return ctx;
}

}  // namespace qh
