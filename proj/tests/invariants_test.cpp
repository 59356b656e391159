#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qh/invariants.hpp"

using namespace qh;

namespace {
Polynomial z(int d, int i) { return Polynomial::variable(d, i); }
}  // namespace

TEST(Hyperplanes, SymmetricTwo) {
  FiniteGroup G = FiniteGroup::symmetric(2);
  HyperplaneData H = hyperplanes(G);
  ASSERT_EQ(H.size(), 1u);
  EXPECT_EQ(H.orders[0], 2);
  EXPECT_LT(max_coeff_diff(H.forms[0], z(2, 0) - z(2, 1)), 1e-9);
}

TEST(Hyperplanes, WreathTwoTwo) {
  FiniteGroup G = FiniteGroup::wreath(2, 2);
  HyperplaneData H = hyperplanes(G);
  ASSERT_EQ(H.size(), 4u);
  std::vector<Polynomial> expected = {z(2, 0), z(2, 1), z(2, 0) - z(2, 1), z(2, 0) + z(2, 1)};
  for (const auto& e : expected) {
    bool found = false;
    for (const auto& f : H.forms)
      if (max_coeff_diff(e, f) < 1e-9) found = true;
    EXPECT_TRUE(found) << "missing form " << e.str();
  }
  for (int m : H.orders) EXPECT_EQ(m, 2);
}

TEST(Hyperplanes, CyclicThree) {
  FiniteGroup G = FiniteGroup::cyclic({3});
  HyperplaneData H = hyperplanes(G);
  ASSERT_EQ(H.size(), 1u);
  EXPECT_EQ(H.orders[0], 3);
  // distinguished generator has determinant e^{2 pi i / 3}
  Complex det = G.element(H.generators[0]).matrix.determinant();
  EXPECT_NEAR(std::abs(det - std::polar(1.0, 2.0 * std::numbers::pi / 3)), 0.0, 1e-9);
}

TEST(Hyperplanes, NonReflectionGroupRejected) {
  // the cyclic rotation group generated by -I in dimension 2 has no reflections
  Matrix m = -Matrix::Identity(2, 2);
  FiniteGroup G = FiniteGroup::generate({m});
  try {
    hyperplanes(G);
    FAIL() << "expected rejection";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotReflectionGroup);
  }
}

TEST(CharacterExponents, SymmetricAndCyclic) {
  {
    FiniteGroup G = FiniteGroup::symmetric(3);
    HyperplaneData H = hyperplanes(G);
    for (const Character& chi : G.one_dim_characters()) {
      std::vector<int> e = character_exponents(H, chi);
      int expect = (chi.name == "sign") ? 1 : 0;
      for (int c : e) EXPECT_EQ(c, expect);
    }
  }
  {
    FiniteGroup G = FiniteGroup::cyclic({3});
    HyperplaneData H = hyperplanes(G);
    std::vector<int> seen;
    for (const Character& chi : G.one_dim_characters()) {
      std::vector<int> e = character_exponents(H, chi);
      ASSERT_EQ(e.size(), 1u);
      seen.push_back(e[0]);
    }
    std::sort(seen.begin(), seen.end());
    EXPECT_EQ(seen, (std::vector<int>{0, 1, 2}));
  }
}

TEST(GeneratingPolynomial, StanleyForm) {
  FiniteGroup G = FiniteGroup::symmetric(2);
  HyperplaneData H = hyperplanes(G);
  Character sgn = G.sign_character();
  Polynomial ell = generating_polynomial(H, sgn);
  EXPECT_LT(max_coeff_diff(ell, z(2, 0) - z(2, 1)), 1e-9);
  EXPECT_TRUE(is_relative_invariant(G, ell, sgn));

  Character trivial = G.one_dim_characters()[0];
  Polynomial one = generating_polynomial(H, trivial);
  EXPECT_LT(max_coeff_diff(one, Polynomial::constant(2, Complex(1, 0))), 1e-12);
}

TEST(RelativeInvariance, Semantics) {
  FiniteGroup G = FiniteGroup::symmetric(2);
  Character sgn = G.sign_character();
  EXPECT_TRUE(is_invariant(G, z(2, 0) + z(2, 1)));
  EXPECT_FALSE(is_invariant(G, z(2, 0)));
  EXPECT_TRUE(is_relative_invariant(G, z(2, 0) - z(2, 1), sgn));
  EXPECT_FALSE(is_relative_invariant(G, z(2, 0) + z(2, 1), sgn));
}

TEST(BasicMap, BuiltinDegrees) {
  EXPECT_EQ(basic_map(FiniteGroup::symmetric(3)).map.degrees, (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(basic_map(FiniteGroup::cyclic({2, 2})).map.degrees, (std::vector<int>{2, 2}));
  EXPECT_EQ(basic_map(FiniteGroup::wreath(2, 2)).map.degrees, (std::vector<int>{2, 4}));
  EXPECT_EQ(basic_map(FiniteGroup::symmetric(2)).source, "builtin");
}

TEST(BasicMap, CustomFamilyNeedsUserMap) {
  Matrix swap = Matrix::Zero(2, 2);
  swap(0, 1) = swap(1, 0) = Complex(1, 0);
  FiniteGroup G = FiniteGroup::generate({swap});
  try {
    basic_map(G);
    FAIL() << "expected InvalidHsop";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidHsop);
  }
  PolynomialMap user({z(2, 0) + z(2, 1), z(2, 0) * z(2, 1)});
  BasicMap B = basic_map(G, user);
  EXPECT_EQ(B.source, "user");
}

TEST(BasicMap, RejectsBadUserMaps) {
  FiniteGroup G = FiniteGroup::symmetric(2);
  // not invariant
  EXPECT_THROW(basic_map(G, PolynomialMap({z(2, 0), z(2, 1)})), Error);
  // degree product mismatch
  EXPECT_THROW(
      basic_map(G, PolynomialMap({z(2, 0) * z(2, 0) + z(2, 1) * z(2, 1), z(2, 0) * z(2, 1)})),
      Error);
  // algebraically dependent (vanishing jacobian)
  Polynomial e1 = z(2, 0) + z(2, 1);
  EXPECT_THROW(basic_map(G, PolynomialMap({e1, e1 * e1})), Error);
}

TEST(JacobianFactorization, Constants) {
  {
    GroupContext ctx = analyze_group(FiniteGroup::symmetric(2));
    EXPECT_NEAR(std::abs(ctx.jacobian_constant - Complex(1, 0)), 0.0, 1e-9);
  }
  {
    GroupContext ctx = analyze_group(FiniteGroup::cyclic({3}));
    EXPECT_NEAR(std::abs(ctx.jacobian_constant - Complex(3, 0)), 0.0, 1e-9);
  }
  {
    GroupContext ctx = analyze_group(FiniteGroup::wreath(2, 2));
    EXPECT_NEAR(std::abs(ctx.jacobian_constant) - 4.0, 0.0, 1e-9);
  }
  {
    GroupContext ctx = analyze_group(FiniteGroup::symmetric(3));
    EXPECT_NEAR(std::abs(ctx.jacobian_constant) - 1.0, 0.0, 1e-9);
  }
  {
    // power sums as a user hsop scale the constant
    PolynomialMap p({z(2, 0) + z(2, 1), z(2, 0) * z(2, 0) + z(2, 1) * z(2, 1)});
    GroupContext ctx = analyze_group(FiniteGroup::symmetric(2), p);
    EXPECT_NEAR(std::abs(ctx.jacobian_constant - Complex(-2, 0)), 0.0, 1e-9);
  }
}

TEST(JacobianFactorization, RealizesSignCharacter) {
  for (FiniteGroup G : {FiniteGroup::symmetric(3), FiniteGroup::wreath(2, 2)}) {
    BasicMap B = basic_map(G);
    Polynomial J = jacobian_det(B.map);
    EXPECT_TRUE(is_relative_invariant(G, J, G.sign_character()));
  }
}

TEST(RewriteInTheta, PowerSums) {
  GroupContext ctx = analyze_group(FiniteGroup::symmetric(2));
  Polynomial p2 = z(2, 0) * z(2, 0) + z(2, 1) * z(2, 1);
  Polynomial w = rewrite_in_theta(ctx.group, p2, ctx.basic);
  // p_2 = e_1^2 - 2 e_2
  Polynomial expected = z(2, 0) * z(2, 0) - Complex(2, 0) * z(2, 1);
  EXPECT_LT(max_coeff_diff(w, expected), 1e-9);
  // round trip through composition
  EXPECT_LT(max_coeff_diff(w.compose(ctx.basic.map.components), p2), 1e-9);
}

TEST(RewriteInTheta, RejectsNonInvariant) {
  GroupContext ctx = analyze_group(FiniteGroup::symmetric(2));
  try {
    rewrite_in_theta(ctx.group, z(2, 0), ctx.basic);
    FAIL() << "expected NotInvariant";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotInvariant);
  }
}

TEST(GroupContext, AccessorsAndBounds) {
  GroupContext ctx = analyze_group(FiniteGroup::cyclic({3}));
  EXPECT_EQ(ctx.character_count(), 3);
  for (int c = 0; c < ctx.character_count(); ++c)
    EXPECT_FALSE(ctx.character(c).exponents.empty());
  EXPECT_THROW(ctx.character(99), Error);
  EXPECT_THROW(ctx.ell(-1), Error);
}

TEST(GroupContext, StanleySmallCases) {
  GroupContext ctx = analyze_group(FiniteGroup::cyclic({3}));
  // chi with exponent c: the relative invariants are z^c * C[z^3]
  for (int c = 0; c < ctx.character_count(); ++c) {
    const Polynomial& ell = ctx.ell(c);
    EXPECT_EQ(ell.degree(), ctx.character(c).exponents[0]);
    EXPECT_TRUE(is_relative_invariant(ctx.group, ell, ctx.character(c)));
  }
}
