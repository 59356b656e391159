#pragma once

// Mixed polynomials in z_1..z_d and their conjugates, with complex
// coefficients.  Terms are kept in graded lexicographic order so leading
// terms, division and orbit representatives are deterministic.

#include <cmath>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qh/error.hpp"

namespace qh {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr double kEpsDrop = 1e-12;  // coefficients below this are dropped
inline constexpr double kEpsDiv = 1e-9;    // division / least-squares residual tolerance
inline constexpr double kEps = 1e-9;       // generic comparison tolerance

struct Monomial {
  std::vector<int> holo;  // exponents of z
  std::vector<int> anti;  // exponents of conj(z)

  Monomial() = default;
  explicit Monomial(int dim) : holo(dim, 0), anti(dim, 0) {}
  Monomial(std::vector<int> a, std::vector<int> b) : holo(std::move(a)), anti(std::move(b)) {}

  int dim() const { return static_cast<int>(holo.size()); }
  int holo_degree() const {
    int s = 0;
    for (int e : holo) s += e;
    return s;
  }
  int anti_degree() const {
    int s = 0;
    for (int e : anti) s += e;
    return s;
  }
  int total_degree() const { return holo_degree() + anti_degree(); }
  bool holomorphic() const {
    for (int e : anti)
      if (e != 0) return false;
    return true;
  }
  bool operator==(const Monomial& o) const { return holo == o.holo && anti == o.anti; }
};

// Graded lexicographic order: first by total degree, then lexicographically on
// the holomorphic exponents, then on the antiholomorphic ones.
struct GrlexLess {
  bool operator()(const Monomial& x, const Monomial& y) const {
    int dx = x.total_degree(), dy = y.total_degree();
    if (dx != dy) return dx < dy;
    for (size_t i = 0; i < x.holo.size(); ++i)
      if (x.holo[i] != y.holo[i]) return x.holo[i] < y.holo[i];
    for (size_t i = 0; i < x.anti.size(); ++i)
      if (x.anti[i] != y.anti[i]) return x.anti[i] < y.anti[i];
    return false;
  }
};

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Complex, GrlexLess>;

  Polynomial() : dim_(0) {}
  explicit Polynomial(int dim) : dim_(dim) {}

  static Polynomial constant(int dim, Complex c) {
    Polynomial p(dim);
    p.add_term(Monomial(dim), c);
    return p;
  }
  static Polynomial monomial(Monomial m, Complex c) {
    Polynomial p(m.dim());
    p.add_term(std::move(m), c);
    return p;
  }
  static Polynomial variable(int dim, int i) {
    Monomial m(dim);
    m.holo[i] = 1;
    return monomial(std::move(m), Complex(1.0, 0.0));
  }
  static Polynomial conj_variable(int dim, int i) {
    Monomial m(dim);
    m.anti[i] = 1;
    return monomial(std::move(m), Complex(1.0, 0.0));
  }

  int dim() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  bool is_holomorphic() const {
    for (const auto& [m, c] : terms_)
      if (!m.holomorphic()) return false;
    return true;
  }

  // Total degree; zero polynomial reports 0.
  int degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
  }
  int holo_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.holo_degree());
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.total_degree();
    for (const auto& [m, c] : terms_)
      if (m.total_degree() != d) return false;
    return true;
  }

  double max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [mono, c] : terms_) m = std::max(m, std::abs(c));
    return m;
  }

  Complex coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Complex(0.0, 0.0) : it->second;
  }

  const Monomial& leading_monomial() const {
    if (terms_.empty()) fail(Errc::Singular, "leading monomial of zero polynomial");
    return terms_.rbegin()->first;
  }
  Complex leading_coeff() const { return terms_.rbegin()->second; }

  void add_term(Monomial m, Complex c) {
    if (static_cast<int>(m.holo.size()) != dim_) fail(Errc::DimensionMismatch, "term dimension");
    auto [it, inserted] = terms_.emplace(std::move(m), c);
    if (!inserted) it->second += c;
    if (std::abs(it->second) < kEpsDrop) terms_.erase(it);
  }
  void erase_term(const Monomial& m) { terms_.erase(m); }

  Polynomial& operator+=(const Polynomial& o) {
    require_same_dim(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    require_same_dim(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(Complex s) {
    if (std::abs(s) < kEpsDrop) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    prune();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, Complex s) { return a *= s; }
  friend Polynomial operator*(Complex s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_same_dim(b);
    Polynomial r(a.dim_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m = ma;
        for (int i = 0; i < a.dim_; ++i) {
          m.holo[i] += mb.holo[i];
          m.anti[i] += mb.anti[i];
        }
        r.add_term(std::move(m), ca * cb);
      }
    return r;
  }

  Polynomial conjugate() const {
    Polynomial r(dim_);
    for (const auto& [m, c] : terms_) r.add_term(Monomial(m.anti, m.holo), std::conj(c));
    return r;
  }

  // Partial derivative in z_i; conjugated variables are treated as constants.
  Polynomial derivative(int i) const {
    Polynomial r(dim_);
    for (const auto& [m, c] : terms_) {
      if (m.holo[i] == 0) continue;
      Monomial n = m;
      n.holo[i] -= 1;
      r.add_term(std::move(n), c * static_cast<double>(m.holo[i]));
    }
    return r;
  }

  Complex evaluate(const CVector& z) const {
    if (z.size() != dim_) fail(Errc::DimensionMismatch, "evaluation point dimension");
    Complex s(0.0, 0.0);
    for (const auto& [m, c] : terms_) {
      Complex t = c;
      for (int i = 0; i < dim_; ++i) {
        t *= ipow(z[i], m.holo[i]);
        t *= ipow(std::conj(z[i]), m.anti[i]);
      }
      s += t;
    }
    return s;
  }
  Complex evaluate(const std::vector<Complex>& z) const {
    CVector v(static_cast<Eigen::Index>(z.size()));
    for (size_t i = 0; i < z.size(); ++i) v[static_cast<Eigen::Index>(i)] = z[i];
    return evaluate(v);
  }

  // f(Mz): the holomorphic part composes with M, the antiholomorphic part
  // with conj(M).  Monomial matrices take a direct exponent-relabeling path.
  Polynomial substitute_linear(const Matrix& M) const {
    if (M.rows() != dim_ || M.cols() != dim_) fail(Errc::DimensionMismatch, "substitution matrix");
    if (terms_.empty()) return Polynomial(dim_);

    std::vector<int> col_of(dim_, -1);
    std::vector<Complex> scale_of(dim_);
    if (monomial_structure(M, col_of, scale_of)) {
      Polynomial r(dim_);
      for (const auto& [m, c] : terms_) {
        Monomial n(dim_);
        Complex s = c;
        for (int i = 0; i < dim_; ++i) {
          if (m.holo[i] > 0) {
            n.holo[col_of[i]] += m.holo[i];
            s *= ipow(scale_of[i], m.holo[i]);
          }
          if (m.anti[i] > 0) {
            n.anti[col_of[i]] += m.anti[i];
            s *= ipow(std::conj(scale_of[i]), m.anti[i]);
          }
        }
        r.add_term(std::move(n), s);
      }
      return r;
    }

    std::vector<Polynomial> rows, crows;
    rows.reserve(dim_);
    crows.reserve(dim_);
    for (int i = 0; i < dim_; ++i) {
      Polynomial li(dim_), ci(dim_);
      for (int j = 0; j < dim_; ++j) {
        Complex v = M(i, j);
        if (std::abs(v) >= kEpsDrop) {
          Monomial mh(dim_);
          mh.holo[j] = 1;
          li.add_term(std::move(mh), v);
          Monomial ma(dim_);
          ma.anti[j] = 1;
          ci.add_term(std::move(ma), std::conj(v));
        }
      }
      rows.push_back(std::move(li));
      crows.push_back(std::move(ci));
    }
    PowerCache hp(rows), ap(crows);
    Polynomial r(dim_);
    for (const auto& [m, c] : terms_) {
      Polynomial t = Polynomial::constant(dim_, c);
      for (int i = 0; i < dim_; ++i) {
        if (m.holo[i] > 0) t = t * hp.get(i, m.holo[i]);
        if (m.anti[i] > 0) t = t * ap.get(i, m.anti[i]);
      }
      r += t;
    }
    return r;
  }

  // Holomorphic composition f(theta_1, ..., theta_k); f must be holomorphic.
  Polynomial compose(const std::vector<Polynomial>& comps) const {
    if (!is_holomorphic()) fail(Errc::NotHolomorphic, "compose requires a holomorphic polynomial");
    return compose_mixed(comps);
  }

  // Composition that also maps conj(w_i) -> conj(comps[i]).
  Polynomial compose_mixed(const std::vector<Polynomial>& comps) const {
    if (static_cast<int>(comps.size()) != dim_)
      fail(Errc::DimensionMismatch, "composition component count");
    int target = comps.empty() ? 0 : comps[0].dim();
    for (const auto& c : comps)
      if (c.dim() != target) fail(Errc::DimensionMismatch, "composition component dimensions");
    std::vector<Polynomial> conj_comps;
    conj_comps.reserve(comps.size());
    for (const auto& c : comps) conj_comps.push_back(c.conjugate());
    PowerCache hp(comps), ap(conj_comps);
    Polynomial r(target);
    for (const auto& [m, c] : terms_) {
      Polynomial t = Polynomial::constant(target, c);
      for (int i = 0; i < dim_; ++i) {
        if (m.holo[i] > 0) t = t * hp.get(i, m.holo[i]);
        if (m.anti[i] > 0) t = t * ap.get(i, m.anti[i]);
      }
      r += t;
    }
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!s.empty()) s += " + ";
      s += "(" + std::to_string(it->second.real()) + (it->second.imag() < 0 ? "" : "+") +
           std::to_string(it->second.imag()) + "i)";
      for (int i = 0; i < dim_; ++i) {
        if (it->first.holo[i] > 0)
          s += " z" + std::to_string(i + 1) +
               (it->first.holo[i] > 1 ? "^" + std::to_string(it->first.holo[i]) : "");
        if (it->first.anti[i] > 0)
          s += " ~z" + std::to_string(i + 1) +
               (it->first.anti[i] > 1 ? "^" + std::to_string(it->first.anti[i]) : "");
      }
    }
    return s;
  }

  static Complex ipow(Complex base, int e) {
    Complex r(1.0, 0.0);
    while (e-- > 0) r *= base;
    return r;
  }

 private:
  struct PowerCache {
    explicit PowerCache(const std::vector<Polynomial>& base) : base_(&base), pows_(base.size()) {}
    const Polynomial& get(size_t i, int e) {
      auto& v = pows_[i];
      if (v.empty()) v.push_back((*base_)[i]);
      while (static_cast<int>(v.size()) < e) v.push_back(v.back() * (*base_)[i]);
      return v[e - 1];
    }
    const std::vector<Polynomial>* base_;
    std::vector<std::vector<Polynomial>> pows_;
  };

  static bool monomial_structure(const Matrix& M, std::vector<int>& col_of,
                                 std::vector<Complex>& scale_of) {
    int d = static_cast<int>(M.rows());
    std::vector<int> col_used(d, 0);
    for (int i = 0; i < d; ++i) {
      int nz = -1;
      for (int j = 0; j < d; ++j) {
        if (std::abs(M(i, j)) > 1e-14) {
          if (nz >= 0) return false;
          nz = j;
        }
      }
      if (nz < 0 || col_used[nz]) return false;
      col_used[nz] = 1;
      col_of[i] = nz;
      scale_of[i] = M(i, nz);
    }
    return true;
  }

  void require_same_dim(const Polynomial& o) const {
    if (o.dim_ != dim_) fail(Errc::DimensionMismatch, "polynomial dimensions differ");
  }
  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (std::abs(it->second) < kEpsDrop)
        it = terms_.erase(it);
      else
        ++it;
    }
  }

  int dim_;
  TermMap terms_;
};

inline double max_coeff_diff(const Polynomial& a, const Polynomial& b) {
  double m = 0.0;
  for (const auto& [mono, c] : a.terms()) m = std::max(m, std::abs(c - b.coeff(mono)));
  for (const auto& [mono, c] : b.terms()) m = std::max(m, std::abs(c - a.coeff(mono)));
  return m;
}

inline bool close_to(const Polynomial& a, const Polynomial& b, double tol) {
  return max_coeff_diff(a, b) <= tol;
}

// Exact division of holomorphic polynomials in graded lex order.  Throws
// NotDivisible when a remainder coefficient exceeds eps_div * (1 + max|coeff f|).
inline Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  if (f.dim() != g.dim()) fail(Errc::DimensionMismatch, "divide dimensions");
  if (!f.is_holomorphic() || !g.is_holomorphic())
    fail(Errc::NotHolomorphic, "exact_divide requires holomorphic polynomials");
  if (g.is_zero()) fail(Errc::NotDivisible, "division by zero polynomial");
  const double tol = kEpsDiv * (1.0 + f.max_abs_coeff());
  const Monomial& lg = g.leading_monomial();
  const Complex cg = g.leading_coeff();
  Polynomial q(f.dim());
  Polynomial r = f;
  while (!r.is_zero()) {
    Monomial lr = r.leading_monomial();
    Complex cr = r.leading_coeff();
    bool divisible = true;
    Monomial m(f.dim());
    for (int i = 0; i < f.dim(); ++i) {
      int e = lr.holo[i] - lg.holo[i];
      if (e < 0) {
        divisible = false;
        break;
      }
      m.holo[i] = e;
    }
    if (!divisible) {
      if (std::abs(cr) > tol) fail(Errc::NotDivisible, "remainder term " + r.str());
      r.erase_term(lr);
      continue;
    }
    Complex t = cr / cg;
    q.add_term(m, t);
    r -= Polynomial::monomial(std::move(m), t) * g;
    r.erase_term(lr);
  }
  return q;
}

struct PolynomialMap {
  std::vector<Polynomial> components;
  std::vector<int> degrees;

  PolynomialMap() = default;
  explicit PolynomialMap(std::vector<Polynomial> comps) : components(std::move(comps)) {
    degrees.reserve(components.size());
    for (const auto& c : components) degrees.push_back(c.degree());
  }
  int dim() const { return components.empty() ? 0 : components[0].dim(); }
  size_t size() const { return components.size(); }
};

inline Polynomial determinant(const std::vector<std::vector<Polynomial>>& m) {
  size_t n = m.size();
  if (n == 0) fail(Errc::DimensionMismatch, "empty determinant");
  int dim = m[0][0].dim();
  if (n == 1) return m[0][0];
  // Laplace expansion along the first row; fine at the dimensions used here.
  Polynomial det(dim);
  std::vector<std::vector<Polynomial>> minor(n - 1, std::vector<Polynomial>(n - 1));
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    for (size_t r = 1; r < n; ++r) {
      size_t cc = 0;
      for (size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor[r - 1][cc++] = m[r][c];
      }
    }
    Polynomial cof = m[0][j] * determinant(minor);
    if (j % 2 == 1) cof *= Complex(-1.0, 0.0);
    det += cof;
  }
  return det;
}

inline Polynomial jacobian_det(const PolynomialMap& map) {
  int d = map.dim();
  if (static_cast<int>(map.size()) != d)
    fail(Errc::DimensionMismatch, "jacobian needs a square map");
  for (const auto& c : map.components)
    if (!c.is_holomorphic()) fail(Errc::NotHolomorphic, "jacobian of a non-holomorphic map");
  std::vector<std::vector<Polynomial>> J(d, std::vector<Polynomial>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) J[i][j] = map.components[i].derivative(j);
  return determinant(J);
}

}  // namespace qh
