#include <gtest/gtest.h>

#include <set>

#include "iwahori/errors.hpp"
#include "iwahori/coxeter.hpp"
#include "support/oracles.hpp"

using namespace iwahori;
using iwahori::testing::flatten;

namespace {

std::vector<std::size_t> sizes(const Ball& ball) { return ball.layer_sizes(); }

std::vector<CoxeterSystem> all_systems() {
  return {CoxeterSystem::affine_c(1), CoxeterSystem::affine_c(2), CoxeterSystem::affine_c(3),
          CoxeterSystem::affine_b(1), CoxeterSystem::affine_b(2), CoxeterSystem::affine_b(3),
          CoxeterSystem::affine_b(4), CoxeterSystem::finite_c(2),  CoxeterSystem::finite_c(3),
          CoxeterSystem::infinite_dihedral(), CoxeterSystem::primed_c(2), CoxeterSystem::primed_c(3)};
}

}  // namespace

// Layer counts frozen from a separate brute-force enumeration over words.
TEST(Coxeter, LayerCountsMatchBruteForce) {
  using V = std::vector<std::size_t>;
  EXPECT_EQ(sizes(enumerate_ball(CoxeterSystem::affine_c(2), 5)), (V{1, 3, 5, 8, 11, 13}));
  EXPECT_EQ(sizes(enumerate_ball(CoxeterSystem::affine_c(3), 5)), (V{1, 4, 9, 17, 28, 42}));
  EXPECT_EQ(sizes(enumerate_ball(CoxeterSystem::affine_c(4), 4)), (V{1, 5, 14, 31, 59}));
  EXPECT_EQ(sizes(enumerate_ball(CoxeterSystem::affine_b(2), 5)), (V{1, 3, 5, 8, 11, 13}));
  EXPECT_EQ(sizes(enumerate_ball(CoxeterSystem::affine_b(3), 5)), (V{1, 4, 9, 17, 28, 42}));
}

TEST(Coxeter, LayerCountsMatchMatrixWordEnumeration) {
  for (int n : {2, 3}) {
    const auto expected = iwahori::testing::word_enumeration_counts(iwahori::testing::affine_c_matrices(n), 5);
    EXPECT_EQ(sizes(enumerate_ball(CoxeterSystem::affine_c(n), 5)), expected) << "n = " << n;
  }
}

TEST(Coxeter, InfiniteDihedralHasTwoElementsPerLength) {
  const Ball ball = enumerate_ball(CoxeterSystem::infinite_dihedral(), 12);
  EXPECT_EQ(ball.layers[0].size(), 1u);
  for (int k = 1; k <= 12; ++k) EXPECT_EQ(ball.layers[static_cast<std::size_t>(k)].size(), 2u);
}

TEST(Coxeter, FiniteC2IsDihedralOfOrderEight) {
  const Ball ball = enumerate_ball(CoxeterSystem::finite_c(2), 6);
  EXPECT_EQ(sizes(ball), (std::vector<std::size_t>{1, 2, 2, 2, 1, 0, 0}));
  EXPECT_EQ(ball.size(), 8u);
}

TEST(Coxeter, LengthExamples) {
  const auto c2 = CoxeterSystem::affine_c(2);
  const auto c3 = CoxeterSystem::affine_c(3);
  EXPECT_EQ(c2.length(c2.identity()), 0);
  EXPECT_EQ(c2.length(c2.from_word({1, 0, 1})), 3);
  EXPECT_EQ(c3.length(c3.from_word({2, 1, 0, 1})), 4);
  EXPECT_EQ(c2.length(c2.from_word({1, 1})), 0);
  EXPECT_EQ(c2.length(c2.from_word({0, 1, 0, 1})), 4);
  EXPECT_EQ(c2.length(c2.from_word({0, 1, 0, 1, 0, 1, 0, 1})), 0);
}

TEST(Coxeter, GeneratorsAreInvolutionsWithTheRightOrders) {
  for (const auto& system : all_systems()) {
    for (int a : system.labels()) {
      EXPECT_TRUE(compose(system.generator(a), system.generator(a)).is_identity());
      for (int b : system.labels()) {
        if (a == b) continue;
        const int m = system.coxeter_entry(a, b);
        const AffineElt ab = compose(system.generator(a), system.generator(b));
        AffineElt power = system.identity();
        const int limit = m == kInfiniteOrder ? 12 : m;
        for (int k = 1; k <= limit; ++k) {
          power = compose(power, ab);
          if (k < limit || m == kInfiniteOrder) {
            EXPECT_FALSE(power.is_identity()) << system.name() << " " << a << "," << b << " k=" << k;
          }
        }
        if (m != kInfiniteOrder) {
          EXPECT_TRUE(power.is_identity()) << system.name() << " " << a << "," << b;
        }
      }
    }
  }
}

TEST(Coxeter, ReducedWordsAreReducedAndRecoverTheElement) {
  for (const auto& system : all_systems()) {
    for (const AffineElt& w : flatten(enumerate_ball(system, 5))) {
      for (auto tie : {CoxeterSystem::TieBreak::Smallest, CoxeterSystem::TieBreak::Largest}) {
        const Word word = system.reduced_word(w, tie);
        EXPECT_EQ(static_cast<int>(word.size()), system.length(w));
        EXPECT_EQ(system.from_word(word), w);
      }
    }
  }
}

TEST(Coxeter, BallLayersAgreeWithLength) {
  for (const auto& system : all_systems()) {
    const Ball ball = enumerate_ball(system, 6);
    for (std::size_t k = 0; k < ball.layers.size(); ++k) {
      for (const AffineElt& w : ball.layers[k]) EXPECT_EQ(system.length(w), static_cast<int>(k));
    }
  }
}

TEST(Coxeter, DescentsMatchLengthDifferences) {
  const auto system = CoxeterSystem::affine_c(3);
  for (const AffineElt& w : flatten(enumerate_ball(system, 5))) {
    const int l = system.length(w);
    for (int s : system.labels()) {
      EXPECT_EQ(system.is_left_descent(w, s), system.length(compose(system.generator(s), w)) < l);
      EXPECT_EQ(system.is_right_descent(w, s), system.length(compose(w, system.generator(s))) < l);
    }
  }
}

TEST(Coxeter, InverseAndLength) {
  const auto system = CoxeterSystem::affine_b(3);
  for (const AffineElt& w : flatten(enumerate_ball(system, 5))) {
    EXPECT_TRUE(compose(w, w.inverse()).is_identity());
    EXPECT_EQ(system.length(w.inverse()), system.length(w));
  }
}

TEST(Coxeter, DiagramAutomorphismAgreesWithConjugation) {
  for (int n : {2, 3, 4}) {
    const auto system = CoxeterSystem::affine_b(n);
    for (const AffineElt& w : flatten(enumerate_ball(system, 5))) {
      EXPECT_EQ(system.diagram_automorphism(w), system.sigma_conjugate(w));
    }
    EXPECT_EQ(system.sigma_conjugate(system.generator(0)), system.generator(1));
    EXPECT_EQ(system.sigma_label(0), 1);
    EXPECT_EQ(system.sigma_label(2), 2);
  }
  EXPECT_THROW(CoxeterSystem::affine_c(2).sigma_conjugate(AffineElt(2)), InvalidArgument);
}

TEST(Coxeter, SigmaElementIsTheAffineCReflection) {
  for (int n : {2, 3}) {
    EXPECT_EQ(CoxeterSystem::affine_b(n).sigma_element(), CoxeterSystem::affine_c(n).generator(0));
  }
}

TEST(Coxeter, AffineBSitsInsideAffineC) {
  const auto b = CoxeterSystem::affine_b(3);
  const auto c = CoxeterSystem::affine_c(3);
  for (const AffineElt& w : flatten(enumerate_ball(b, 4))) EXPECT_TRUE(c.contains(w));
  EXPECT_FALSE(b.contains(c.generator(0)));
}

TEST(Coxeter, PrimedGeneratorsAreConjugates) {
  for (int n : {2, 3, 4}) {
    const auto primed = CoxeterSystem::primed_c(n);
    const auto c = CoxeterSystem::affine_c(n);
    EXPECT_EQ(primed.generator(1), c.from_word({1, 0, 1}));
    for (int i = 2; i <= n; ++i) EXPECT_EQ(primed.generator(i), c.generator(i));
  }
}

TEST(Coxeter, ParabolicAndRelabel) {
  const auto c3 = CoxeterSystem::affine_c(3);
  const std::vector<int> labels{1, 2, 3};
  const auto finite = c3.parabolic(labels);
  EXPECT_EQ(finite.labels(), labels);
  EXPECT_EQ(enumerate_ball(finite, 12).size(), 48u);
  const auto relabeled = CoxeterSystem::affine_c(2).relabeled({1, 2, 3});
  EXPECT_EQ(relabeled.generator(1), CoxeterSystem::affine_c(2).generator(0));
  EXPECT_EQ(relabeled.coxeter_entry(1, 2), 4);
  EXPECT_THROW(relabeled.generator(0), InvalidArgument);
  EXPECT_THROW(CoxeterSystem::affine_c(2).relabeled({1, 1, 2}), InvalidArgument);
}

TEST(Coxeter, WeightedBallMatchesWeightSums) {
  const auto system = CoxeterSystem::affine_c(2);
  const std::vector<int> weights{3, 1, 1};
  const Ball ball = enumerate_weighted_ball(system, weights, 8);
  std::set<AffineElt> seen;
  for (std::size_t k = 0; k < ball.layers.size(); ++k) {
    for (const AffineElt& w : ball.layers[k]) {
      int total = 0;
      for (int s : system.reduced_word(w)) total += weights[system.position(s)];
      EXPECT_EQ(total, static_cast<int>(k));
      EXPECT_TRUE(seen.insert(w).second);
    }
  }
  const std::vector<int> unit{1, 1, 1};
  EXPECT_EQ(enumerate_weighted_ball(system, unit, 5).layer_sizes(), enumerate_ball(system, 5).layer_sizes());
}

TEST(Coxeter, CapIsEnforced) {
  EXPECT_THROW(enumerate_ball(CoxeterSystem::affine_c(2), kDefaultBallCap + 1), CapExceeded);
  EXPECT_NO_THROW(enumerate_ball(CoxeterSystem::infinite_dihedral(), 20, 20));
}

TEST(Coxeter, WordParsing) {
  EXPECT_EQ(parse_word("1,0, 1"), (Word{1, 0, 1}));
  EXPECT_EQ(parse_word(""), Word{});
  EXPECT_EQ(parse_word("sigma,2"), (Word{kSigma, 2}));
  EXPECT_EQ(format_word({kSigma, 1, 2}), "sigma,1,2");
  EXPECT_THROW(parse_word("1,,2"), InvalidArgument);
  EXPECT_THROW(parse_word("x"), InvalidArgument);
  EXPECT_THROW(CoxeterSystem::affine_c(2).from_word({7}), InvalidArgument);
}

TEST(Coxeter, ElementValidation) {
  EXPECT_THROW(AffineElt({1, 1}, {0, 0}), InvalidArgument);
  EXPECT_THROW(AffineElt({1}, {0, 0}), InvalidArgument);
  EXPECT_THROW(compose(AffineElt(2), AffineElt(3)), InvalidArgument);
  const AffineElt w({-2, 1}, {1, 0});
  EXPECT_EQ(w.apply(std::vector<long long>{3, 5}), (std::vector<long long>{-4, 3}));
}

TEST(Coxeter, ActOnRootIsCompatibleWithComposition) {
  const auto system = CoxeterSystem::affine_c(3);
  const auto elements = flatten(enumerate_ball(system, 3));
  const AffineRoot r{{1, -1, 0}, 2};
  for (const AffineElt& u : elements) {
    for (const AffineElt& v : {system.generator(0), system.generator(2), system.generator(3)}) {
      EXPECT_EQ(act_on_root(compose(u, v), r), act_on_root(u, act_on_root(v, r)));
    }
  }
}
