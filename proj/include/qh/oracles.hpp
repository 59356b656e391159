#pragma once

// Independent combinatorial references used by the test suites: Schur
// polynomials through the Jacobi-Trudi determinant, Pieri single-box
// transitions, and integer-exact sphere moments.

#include <functional>
#include <vector>

#include "qh/error.hpp"
#include "qh/polynomial.hpp"

namespace qh {
namespace oracles {

// Complete homogeneous symmetric polynomial h_k(z_1..z_d): the sum of all
// monomials of total degree k with unit coefficients.
inline Polynomial complete_homogeneous(int d, int k) {
  if (k < 0) return Polynomial(d);
  Polynomial p(d);
  std::vector<int> cur(d, 0);
  std::function<void(int, int)> rec = [&](int i, int rem) {
    if (i == d - 1) {
      cur[i] = rem;
      Monomial m(d);
      m.holo = cur;
      p.add_term(std::move(m), Complex(1, 0));
      return;
    }
    for (int e = 0; e <= rem; ++e) {
      cur[i] = e;
      rec(i + 1, rem - e);
    }
  };
  rec(0, k);
  return p;
}

// s_lambda = det(h_{lambda_i - i + j})_{1<=i,j<=r} via polynomial arithmetic.
inline Polynomial schur_jacobi_trudi(int d, const std::vector<int>& lambda) {
  int r = static_cast<int>(lambda.size());
  while (r > 0 && lambda[r - 1] == 0) --r;
  if (r == 0) return Polynomial::constant(d, Complex(1, 0));
  std::vector<std::vector<Polynomial>> H(r, std::vector<Polynomial>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) H[i][j] = complete_homogeneous(d, lambda[i] - i + j);
  return determinant(H);
}

// Partition attached to a strictly decreasing exponent tuple: lambda_j =
// m_j - (d - j) for the staircase of length d.
inline std::vector<int> partition_from_rep(const std::vector<int>& rep) {
  const int d = static_cast<int>(rep.size());
  std::vector<int> lambda(d);
  for (int j = 0; j < d; ++j) {
    lambda[j] = rep[j] - (d - 1 - j);
    if (lambda[j] < 0) fail(Errc::BadConfig, "representative is not strictly decreasing");
    if (j > 0 && lambda[j] > lambda[j - 1]) fail(Errc::BadConfig, "not a partition");
  }
  return lambda;
}

// Multiplication by e_1 in the Schur basis: s_1 s_lambda = sum of s_mu over
// partitions mu obtained by adding one box.
inline bool pieri_adds_one_box(const std::vector<int>& lambda, const std::vector<int>& mu) {
  if (lambda.size() != mu.size()) return false;
  int added = 0;
  for (size_t i = 0; i < lambda.size(); ++i) {
    int diff = mu[i] - lambda[i];
    if (diff < 0 || diff > 1) return false;
    added += diff;
  }
  return added == 1;
}

// m! (d-1)! / (|m| + d - 1)! with 64-bit integer factorials; valid while
// the numerator and denominator stay below 2^63.
inline double ball_moment_exact(const std::vector<int>& m) {
  const int d = static_cast<int>(m.size());
  long long total = 0;
  for (int e : m) total += e;
  auto fact = [](long long n) {
    long long f = 1;
    for (long long j = 2; j <= n; ++j) f *= j;
    return f;
  };
  long long num = fact(d - 1);
  for (int e : m) num *= fact(e);
  long long den = fact(total + d - 1);
  return static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace oracles
}  // namespace qh
