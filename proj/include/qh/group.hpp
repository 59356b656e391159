#pragma once

// Finite matrix groups generated by explicit complex matrices, with the
// pseudoreflection predicates and one-dimensional character enumeration used
// by the invariant-theory layer.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "qh/error.hpp"
#include "qh/polynomial.hpp"

namespace qh {

struct GroupElement {
  Matrix matrix;
  int order = 0;
};

struct Character {
  std::vector<Complex> values;  // indexed by element
  std::vector<int> exponents;   // one per hyperplane orbit; empty until computed
  std::string name;

  Complex operator()(int element_index) const { return values[element_index]; }
};

class FiniteGroup {
 public:
  static constexpr int kDefaultCap = 20000;
  static constexpr int kOrderCap = 1000;

  static FiniteGroup generate(const std::vector<Matrix>& generators, int cap = kDefaultCap,
                              std::string family_tag = "custom", std::vector<int> params = {}) {
    if (generators.empty()) fail(Errc::BadConfig, "no generators");
    const int d = static_cast<int>(generators[0].rows());
    for (const auto& g : generators) {
      if (g.rows() != d || g.cols() != d) fail(Errc::DimensionMismatch, "generator shapes differ");
      if (std::abs(g.determinant()) < 1e-12) fail(Errc::Singular, "generator is singular");
    }

    FiniteGroup G;
    G.dim_ = d;
    G.family_tag_ = std::move(family_tag);
    G.family_params_ = std::move(params);
    G.push_element(Matrix::Identity(d, d));
    for (const auto& g : generators)
      if (G.find_index(g) < 0) G.push_element(g);
    const size_t ngen = G.elements_.size();  // identity + distinct generators

    for (size_t qi = 0; qi < G.elements_.size(); ++qi) {
      for (size_t gj = 1; gj < ngen; ++gj) {
        Matrix prod = G.elements_[qi].matrix * G.elements_[gj].matrix;
        if (G.find_index(prod) < 0) {
          if (static_cast<int>(G.elements_.size()) >= cap)
            fail(Errc::NotFinite, "closure exceeded cap " + std::to_string(cap));
          G.push_element(std::move(prod));
        }
      }
    }
    G.finalize();
    return G;
  }

  // Symmetric group S_d acting by coordinate permutation.
  static FiniteGroup symmetric(int d) {
    if (d < 1) fail(Errc::UnsupportedFamily, "symmetric(d) needs d >= 1");
    std::vector<Matrix> gens;
    if (d == 1) {
      gens.push_back(Matrix::Identity(1, 1));
    } else {
      for (int i = 0; i + 1 < d; ++i) {
        Matrix m = Matrix::Identity(d, d);
        m(i, i) = m(i + 1, i + 1) = Complex(0, 0);
        m(i, i + 1) = m(i + 1, i) = Complex(1, 0);
        gens.push_back(std::move(m));
      }
    }
    return generate(gens, kDefaultCap, "symmetric", {d});
  }

  // Product of cyclic groups: diag(zeta_{n_1}^{k_1}, ..., zeta_{n_d}^{k_d}).
  static FiniteGroup cyclic(const std::vector<int>& orders) {
    if (orders.empty()) fail(Errc::UnsupportedFamily, "cyclic needs at least one order");
    const int d = static_cast<int>(orders.size());
    std::vector<Matrix> gens;
    for (int i = 0; i < d; ++i) {
      if (orders[i] < 1) fail(Errc::UnsupportedFamily, "cyclic orders must be positive");
      Matrix m = Matrix::Identity(d, d);
      m(i, i) = root_of_unity(orders[i]);
      gens.push_back(std::move(m));
    }
    return generate(gens, kDefaultCap, "cyclic", orders);
  }

  // G(m,1,d): permutations composed with diagonal m-th roots of unity.
  static FiniteGroup wreath(int m, int d) {
    if (m < 1 || d < 1) fail(Errc::UnsupportedFamily, "wreath(m,d) needs m,d >= 1");
    std::vector<Matrix> gens;
    for (int i = 0; i + 1 < d; ++i) {
      Matrix p = Matrix::Identity(d, d);
      p(i, i) = p(i + 1, i + 1) = Complex(0, 0);
      p(i, i + 1) = p(i + 1, i) = Complex(1, 0);
      gens.push_back(std::move(p));
    }
    Matrix z = Matrix::Identity(d, d);
    z(0, 0) = root_of_unity(m);
    gens.push_back(std::move(z));
    return generate(gens, kDefaultCap, "wreath", {m, d});
  }

  int size() const { return static_cast<int>(elements_.size()); }
  int dim() const { return dim_; }
  const GroupElement& element(int i) const { return elements_[i]; }
  const std::vector<GroupElement>& elements() const { return elements_; }
  const std::string& family_tag() const { return family_tag_; }
  const std::vector<int>& family_params() const { return family_params_; }

  int mult(int i, int j) const {
    if (!mult_table_.empty()) return mult_table_[static_cast<size_t>(i) * elements_.size() + j];
    int k = find_index(elements_[i].matrix * elements_[j].matrix);
    if (k < 0) fail(Errc::NotFinite, "product escaped the generated set");
    return k;
  }
  int inverse(int i) const { return inverse_[i]; }
  int identity() const { return 0; }

  int element_index(const Matrix& m) const { return find_index(m); }

  bool is_abelian() const {
    for (int i = 0; i < size(); ++i)
      for (int j = i + 1; j < size(); ++j)
        if (mult(i, j) != mult(j, i)) return false;
    return true;
  }

  bool is_monomial() const {
    for (const auto& e : elements_) {
      for (int i = 0; i < dim_; ++i) {
        int row_nz = 0, col_nz = 0;
        for (int j = 0; j < dim_; ++j) {
          if (std::abs(e.matrix(i, j)) > kEps) ++row_nz;
          if (std::abs(e.matrix(j, i)) > kEps) ++col_nz;
        }
        if (row_nz != 1 || col_nz != 1) return false;
      }
    }
    return true;
  }

  // Indices of elements with rank(I - sigma) == 1.
  std::vector<int> pseudoreflections() const {
    std::vector<int> out;
    const Matrix id = Matrix::Identity(dim_, dim_);
    for (int i = 1; i < size(); ++i) {
      Eigen::JacobiSVD<Matrix> svd(id - elements_[i].matrix);
      const auto& sv = svd.singularValues();
      int rank = 0;
      for (Eigen::Index k = 0; k < sv.size(); ++k)
        if (sv[k] > kEps * dim_) ++rank;
      if (rank == 1) out.push_back(i);
    }
    return out;
  }

  bool is_pseudoreflection_group() const {
    std::vector<int> gens = pseudoreflections();
    if (gens.empty()) return size() == 1;
    return subgroup_closure(gens).size() == elements_.size();
  }

  // Closure of a set of element indices under multiplication.
  std::vector<int> subgroup_closure(const std::vector<int>& gens) const {
    std::vector<char> in(elements_.size(), 0);
    std::vector<int> members = {0};
    in[0] = 1;
    for (int g : gens)
      if (!in[g]) {
        in[g] = 1;
        members.push_back(g);
      }
    for (size_t qi = 0; qi < members.size(); ++qi)
      for (int g : gens) {
        int p = mult(members[qi], g);
        if (!in[p]) {
          in[p] = 1;
          members.push_back(p);
        }
      }
    std::sort(members.begin(), members.end());
    return members;
  }

  std::vector<int> commutator_subgroup() const {
    std::vector<int> gens;
    for (int i = 0; i < size(); ++i)
      for (int j = 0; j < size(); ++j) {
        int c = mult(mult(mult(i, j), inverse(i)), inverse(j));
        if (c != 0) gens.push_back(c);
      }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return subgroup_closure(gens);
  }

  int abelianization_order() const {
    return size() / static_cast<int>(commutator_subgroup().size());
  }

  // All one-dimensional characters, ordered deterministically with the
  // trivial character first.  Exponent tuples are left empty; the invariants
  // layer fills them against a hyperplane arrangement.
  std::vector<Character> one_dim_characters() const {
    const int n = size();
    std::vector<int> K = commutator_subgroup();
    std::vector<char> inK(n, 0);
    for (int k : K) inK[k] = 1;

    // Cosets of K, labeled in order of their smallest member.
    std::vector<int> coset_of(n, -1), reps;
    for (int i = 0; i < n; ++i) {
      if (coset_of[i] >= 0) continue;
      int id = static_cast<int>(reps.size());
      reps.push_back(i);
      for (int k : K) coset_of[mult(i, k)] = id;
    }
    const int nq = static_cast<int>(reps.size());
    auto qmult = [&](int a, int b) { return coset_of[mult(reps[a], reps[b])]; };

    // Characters of the abelian quotient, built by extending along a chain of
    // subgroups: adjoin one generator at a time and branch over root choices.
    std::vector<char> inH(nq, 0);
    inH[0] = 1;
    std::vector<int> members = {0};
    std::vector<std::vector<Complex>> chars(1, std::vector<Complex>(nq, Complex(0, 0)));
    chars[0][0] = Complex(1, 0);
    while (static_cast<int>(members.size()) < nq) {
      int y = -1;
      for (int i = 0; i < nq; ++i)
        if (!inH[i]) {
          y = i;
          break;
        }
      int r = 1, p = y;
      while (!inH[p]) {
        p = qmult(p, y);
        ++r;
      }
      std::vector<int> ypow(r);  // y^1 .. y^r-1 then y^r in H
      ypow[0] = 0;
      for (int j = 1; j < r; ++j) ypow[j] = qmult(ypow[j - 1], y);
      std::vector<std::vector<Complex>> next;
      next.reserve(chars.size() * static_cast<size_t>(r));
      for (const auto& chi : chars) {
        double base_arg = std::arg(chi[p]);
        for (int k = 0; k < r; ++k) {
          double ang = (base_arg + 2.0 * std::numbers::pi * k) / r;
          auto ext = chi;
          for (int j = 1; j < r; ++j) {
            Complex wj = std::polar(1.0, ang * j);
            for (int h : members) ext[qmult(h, ypow[j])] = chi[h] * wj;
          }
          next.push_back(std::move(ext));
        }
      }
      chars = std::move(next);
      size_t old = members.size();
      for (int j = 1; j < r; ++j)
        for (size_t t = 0; t < old; ++t) {
          int m = qmult(members[t], ypow[j]);
          inH[m] = 1;
          members.push_back(m);
        }
    }

    std::vector<Character> out;
    out.reserve(chars.size());
    for (const auto& qchi : chars) {
      Character c;
      c.values.resize(n);
      for (int i = 0; i < n; ++i) c.values[i] = qchi[coset_of[i]];
      out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const Character& a, const Character& b) {
      for (size_t i = 0; i < a.values.size(); ++i) {
        if (std::abs(a.values[i].real() - b.values[i].real()) > 1e-9)
          return a.values[i].real() > b.values[i].real();
        if (std::abs(a.values[i].imag() - b.values[i].imag()) > 1e-9)
          return a.values[i].imag() > b.values[i].imag();
      }
      return false;
    });

    Character sgn = sign_character();
    for (size_t i = 0; i < out.size(); ++i) {
      bool trivial = true, is_sign = true;
      for (int g = 0; g < n; ++g) {
        if (std::abs(out[i].values[g] - Complex(1, 0)) > 1e-9) trivial = false;
        if (std::abs(out[i].values[g] - sgn.values[g]) > 1e-9) is_sign = false;
      }
      if (trivial)
        out[i].name = "trivial";
      else if (is_sign)
        out[i].name = "sign";
      else
        out[i].name = "chi" + std::to_string(i);
    }
    return out;
  }

  // sigma -> det(sigma)^{-1}.
  Character sign_character() const {
    Character c;
    c.name = "sign";
    c.values.reserve(elements_.size());
    for (const auto& e : elements_) c.values.push_back(Complex(1, 0) / e.matrix.determinant());
    return c;
  }

 private:
  static Complex root_of_unity(int n) {
    return n == 1 ? Complex(1, 0) : std::polar(1.0, 2.0 * std::numbers::pi / n);
  }

  // Elements are deduplicated through keys quantized at 1e-6; coordinates
  // sitting close to a rounding boundary probe both neighboring buckets so
  // that matrices within 1e-9 of each other always collide.
  using Key = std::vector<long long>;
  struct KeyHash {
    size_t operator()(const Key& k) const {
      size_t h = 1469598103934665603ull;
      for (long long v : k) {
        h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      }
      return h;
    }
  };

  Key primary_key(const Matrix& m) const {
    Key k;
    k.reserve(static_cast<size_t>(2 * dim_ * dim_));
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) {
        k.push_back(std::llround(m(i, j).real() * 1e6));
        k.push_back(std::llround(m(i, j).imag() * 1e6));
      }
    return k;
  }

  bool candidate_keys(const Matrix& m, std::vector<Key>& out) const {
    std::vector<std::pair<long long, long long>> opts;  // per coordinate: one or two buckets
    opts.reserve(static_cast<size_t>(2 * dim_ * dim_));
    size_t combos = 1;
    auto classify = [&](double x) {
      double t = x * 1e6;
      double fl = std::floor(t);
      double frac = t - fl;
      if (std::abs(frac - 0.5) < 1e-3) {
        opts.emplace_back(static_cast<long long>(fl), static_cast<long long>(fl) + 1);
        combos *= 2;
      } else {
        long long q = std::llround(t);
        opts.emplace_back(q, q);
      }
    };
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) {
        classify(m(i, j).real());
        classify(m(i, j).imag());
      }
    if (combos > 1024) return false;
    Key cur(opts.size());
    out.clear();
    build_keys(opts, 0, cur, out);
    return true;
  }

  static void build_keys(const std::vector<std::pair<long long, long long>>& opts, size_t idx,
                         Key& cur, std::vector<Key>& out) {
    if (idx == opts.size()) {
      out.push_back(cur);
      return;
    }
    cur[idx] = opts[idx].first;
    build_keys(opts, idx + 1, cur, out);
    if (opts[idx].second != opts[idx].first) {
      cur[idx] = opts[idx].second;
      build_keys(opts, idx + 1, cur, out);
    }
  }

  static bool matrices_equal(const Matrix& a, const Matrix& b) {
    return (a - b).cwiseAbs().maxCoeff() < kEps;
  }

  int find_index(const Matrix& m) const {
    std::vector<Key> keys;
    if (candidate_keys(m, keys)) {
      for (const auto& k : keys) {
        auto it = buckets_.find(k);
        if (it == buckets_.end()) continue;
        for (int idx : it->second)
          if (matrices_equal(elements_[idx].matrix, m)) return idx;
      }
      return -1;
    }
    for (size_t i = 0; i < elements_.size(); ++i)
      if (matrices_equal(elements_[i].matrix, m)) return static_cast<int>(i);
    return -1;
  }

  void push_element(Matrix m) {
    buckets_[primary_key(m)].push_back(static_cast<int>(elements_.size()));
    elements_.push_back(GroupElement{std::move(m), 0});
  }

  void finalize() {
    const int n = size();
    if (n <= kTableCap) {
      mult_table_.assign(static_cast<size_t>(n) * n, -1);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          int k = find_index(elements_[i].matrix * elements_[j].matrix);
          if (k < 0) fail(Errc::NotFinite, "product escaped the generated set");
          mult_table_[static_cast<size_t>(i) * n + j] = k;
        }
    }
    inverse_.assign(n, -1);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (mult(i, j) == 0) {
          inverse_[i] = j;
          break;
        }
    for (int i = 0; i < n; ++i) {
      int ord = 1, k = i;
      while (k != 0) {
        k = mult(k, i);
        if (++ord > kOrderCap) fail(Errc::NotFinite, "element order exceeds cap");
      }
      elements_[i].order = ord;
    }
  }

  static constexpr int kTableCap = 1024;

  int dim_ = 0;
  std::vector<GroupElement> elements_;
  std::vector<int> inverse_;
  std::vector<int> mult_table_;  // filled when size() <= kTableCap
  std::string family_tag_;
  std::vector<int> family_params_;
  std::unordered_map<Key, std::vector<int>, KeyHash> buckets_;
};

// Action (sigma f)(z) = f(sigma^{-1} z), using the exact group inverse.
inline Polynomial act(const FiniteGroup& G, int sigma, const Polynomial& f) {
  if (f.dim() != G.dim()) fail(Errc::DimensionMismatch, "act dimension");
  return f.substitute_linear(G.element(G.inverse(sigma)).matrix);
}

}  // namespace qh
