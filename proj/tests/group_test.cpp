#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qh/group.hpp"

using namespace qh;

TEST(FiniteGroup, SymmetricOrders) {
  EXPECT_EQ(FiniteGroup::symmetric(2).size(), 2);
  EXPECT_EQ(FiniteGroup::symmetric(3).size(), 6);
  EXPECT_EQ(FiniteGroup::symmetric(4).size(), 24);
}

TEST(FiniteGroup, CyclicAndWreathOrders) {
  EXPECT_EQ(FiniteGroup::cyclic({3}).size(), 3);
  EXPECT_EQ(FiniteGroup::cyclic({2, 2}).size(), 4);
  EXPECT_EQ(FiniteGroup::wreath(2, 2).size(), 8);
  EXPECT_EQ(FiniteGroup::wreath(3, 2).size(), 18);
}

TEST(FiniteGroup, MultiplicationTableConsistency) {
  FiniteGroup G = FiniteGroup::wreath(2, 2);
  for (int i = 0; i < G.size(); ++i) {
    EXPECT_EQ(G.mult(i, G.inverse(i)), G.identity());
    EXPECT_EQ(G.mult(G.identity(), i), i);
    for (int j = 0; j < G.size(); ++j) {
      Matrix prod = G.element(i).matrix * G.element(j).matrix;
      EXPECT_EQ(G.element_index(prod), G.mult(i, j));
    }
  }
}

TEST(FiniteGroup, Flags) {
  EXPECT_TRUE(FiniteGroup::cyclic({2, 2}).is_abelian());
  EXPECT_FALSE(FiniteGroup::symmetric(3).is_abelian());
  EXPECT_TRUE(FiniteGroup::symmetric(3).is_monomial());
  EXPECT_TRUE(FiniteGroup::wreath(2, 2).is_monomial());
}

TEST(FiniteGroup, PseudoreflectionCounts) {
  EXPECT_EQ(FiniteGroup::symmetric(2).pseudoreflections().size(), 1u);
  EXPECT_EQ(FiniteGroup::symmetric(3).pseudoreflections().size(), 3u);
  EXPECT_EQ(FiniteGroup::cyclic({3}).pseudoreflections().size(), 2u);
  EXPECT_EQ(FiniteGroup::cyclic({2, 2}).pseudoreflections().size(), 2u);
  EXPECT_EQ(FiniteGroup::wreath(2, 2).pseudoreflections().size(), 4u);
  EXPECT_TRUE(FiniteGroup::wreath(2, 2).is_pseudoreflection_group());
}

TEST(FiniteGroup, NotFiniteDetected) {
  Matrix m(1, 1);
  m(0, 0) = std::polar(1.0, 1.0);  // irrational rotation
  try {
    FiniteGroup::generate({m}, 100);
    FAIL() << "generation should not terminate";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotFinite);
  }
}

TEST(FiniteGroup, SingularGeneratorRejected) {
  Matrix m = Matrix::Zero(2, 2);
  try {
    FiniteGroup::generate({m});
    FAIL() << "singular generator accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::Singular);
  }
}

TEST(Characters, CountsMatchAbelianization) {
  for (const FiniteGroup& G : {FiniteGroup::symmetric(3), FiniteGroup::cyclic({3}),
                               FiniteGroup::cyclic({2, 2}), FiniteGroup::wreath(2, 2)}) {
    auto chars = G.one_dim_characters();
    EXPECT_EQ(static_cast<int>(chars.size()), G.abelianization_order());
  }
  EXPECT_EQ(FiniteGroup::symmetric(3).one_dim_characters().size(), 2u);
  EXPECT_EQ(FiniteGroup::cyclic({3}).one_dim_characters().size(), 3u);
  EXPECT_EQ(FiniteGroup::wreath(2, 2).one_dim_characters().size(), 4u);
}

TEST(Characters, HomomorphismProperty) {
  for (const FiniteGroup& G : {FiniteGroup::symmetric(3), FiniteGroup::wreath(2, 2)}) {
    for (const Character& chi : G.one_dim_characters()) {
      for (int i = 0; i < G.size(); ++i)
        for (int j = 0; j < G.size(); ++j)
          EXPECT_NEAR(std::abs(chi(G.mult(i, j)) - chi(i) * chi(j)), 0.0, 1e-9);
      EXPECT_NEAR(std::abs(chi(G.identity()) - Complex(1, 0)), 0.0, 1e-12);
    }
  }
}

TEST(Characters, TrivialFirstAndSignMatchesDeterminant) {
  FiniteGroup G = FiniteGroup::symmetric(3);
  auto chars = G.one_dim_characters();
  EXPECT_EQ(chars[0].name, "trivial");
  for (int i = 0; i < G.size(); ++i)
    EXPECT_NEAR(std::abs(chars[0](i) - Complex(1, 0)), 0.0, 1e-12);

  Character sgn = G.sign_character();
  for (int i = 0; i < G.size(); ++i) {
    Complex det = G.element(i).matrix.determinant();
    EXPECT_NEAR(std::abs(sgn(i) - Complex(1, 0) / det), 0.0, 1e-10);
  }
}

TEST(Characters, CyclicThreeValues) {
  FiniteGroup G = FiniteGroup::cyclic({3});
  auto chars = G.one_dim_characters();
  ASSERT_EQ(chars.size(), 3u);
  // the three characters evaluate to the three cube roots on a generator
  int gen = -1;
  for (int i = 0; i < G.size(); ++i)
    if (std::abs(G.element(i).matrix(0, 0) - std::polar(1.0, 2.0 * std::numbers::pi / 3)) < 1e-9)
      gen = i;
  ASSERT_GE(gen, 0);
  std::vector<Complex> seen;
  for (const auto& chi : chars) seen.push_back(chi(gen));
  for (int k = 0; k < 3; ++k) {
    Complex root = std::polar(1.0, 2.0 * std::numbers::pi * k / 3);
    bool found = false;
    for (Complex s : seen)
      if (std::abs(s - root) < 1e-9) found = true;
    EXPECT_TRUE(found);
  }
}

TEST(GroupAction, Contravariant) {
  // act(sigma, f)(z) = f(sigma^{-1} z) gives act(s t, f) = act(s, act(t, f))
  FiniteGroup G = FiniteGroup::wreath(2, 2);
  Polynomial f = Polynomial::variable(2, 0) * Polynomial::variable(2, 0) +
                 Complex(2, 1) * Polynomial::variable(2, 1);
  for (int s = 0; s < G.size(); ++s)
    for (int t = 0; t < G.size(); ++t) {
      Polynomial lhs = act(G, G.mult(s, t), f);
      Polynomial rhs = act(G, s, act(G, t, f));
      EXPECT_LT(max_coeff_diff(lhs, rhs), 1e-12);
    }
}

TEST(GroupAction, OneDimExample) {
  // 1D rotation by a primitive cube root: z^2 picks up the conjugate factor
  FiniteGroup G = FiniteGroup::cyclic({3});
  int gen = -1;
  Complex zeta = std::polar(1.0, 2.0 * std::numbers::pi / 3);
  for (int i = 0; i < G.size(); ++i)
    if (std::abs(G.element(i).matrix(0, 0) - zeta) < 1e-9) gen = i;
  ASSERT_GE(gen, 0);
  Polynomial f = Polynomial::variable(1, 0) * Polynomial::variable(1, 0);
  Polynomial moved = act(G, gen, f);
  Monomial m(1);
  m.holo = {2};
  EXPECT_NEAR(std::abs(moved.coeff(m) - std::conj(zeta) * std::conj(zeta)), 0.0, 1e-12);
}

TEST(FiniteGroup, SubgroupClosureAndCommutator) {
  FiniteGroup G = FiniteGroup::symmetric(3);
  // commutator subgroup of S_3 is A_3
  EXPECT_EQ(G.commutator_subgroup().size(), 3u);
  EXPECT_EQ(G.abelianization_order(), 2);
  std::vector<int> all = G.subgroup_closure(G.pseudoreflections());
  EXPECT_EQ(static_cast<int>(all.size()), G.size());
}
