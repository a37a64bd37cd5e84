#include <gtest/gtest.h>

#include "dyngroup/duality_oracle.hpp"
#include "dyngroup/poincare.hpp"
#include "dyngroup/random.hpp"
#include "test_support.hpp"

using namespace dyngroup;
using dyngroup::testing::max_abs;
using dyngroup::testing::scaled_diff;

namespace {

Eigen::VectorXd flat(const Momentum& j) { return charged_coordinates({{}, j.M, j.P}); }

Eigen::VectorXd flat(const LieElement& d) {
  Eigen::VectorXd v(20);
  v.head<16>() = Eigen::Map<const Eigen::Matrix<double, 16, 1>>(d.omega.data());
  v.tail<4>() = d.gamma;
  return v;
}

const LorentzMatrix kTimeReversal = omega_factor(1, -1);

}  // namespace

TEST(Compose, IdentityAndInverse) {
  Sampler s(20);
  for (int i = 0; i < 100; ++i) {
    const PoincareElement g = s.poincare();
    const PoincareElement gi = compose(g, PoincareElement::identity());
    EXPECT_EQ(gi.L.matrix(), g.L.matrix());
    EXPECT_EQ(gi.C, g.C);
    const PoincareElement e = compose(g, inverse(g));
    EXPECT_LE(max_abs(e.L.matrix() - Mat4::Identity()), 1e-12 * (1 + max_abs(g.L.matrix())));
    EXPECT_LE(max_abs(e.C), 1e-12 * (1 + max_abs(g.L.matrix())) * (1 + max_abs(g.C)));
  }
}

TEST(Compose, MatchesEmbeddedMatrixProduct) {
  Sampler s(21);
  for (int i = 0; i < 200; ++i) {
    const PoincareElement a = s.poincare();
    const PoincareElement b = s.poincare();
    EXPECT_LE(scaled_diff(embed(compose(a, b)), embed(a) * embed(b)), 1e-13);
  }
}

TEST(Compose, IsAssociative) {
  Sampler s(22);
  for (int i = 0; i < 100; ++i) {
    const PoincareElement a = s.poincare();
    const PoincareElement b = s.poincare();
    const PoincareElement c = s.poincare();
    EXPECT_LE(scaled_diff(embed(compose(compose(a, b), c)), embed(compose(a, compose(b, c)))), 1e-12);
  }
}

TEST(Inverse, Examples) {
  const PoincareElement e = inverse(PoincareElement::identity());
  EXPECT_EQ(e.L.matrix(), Mat4::Identity());
  EXPECT_EQ(e.C, Vec4::Zero());
  const Vec4 c(1.0, -2.0, 0.5, 3.0);
  const PoincareElement t = inverse(PoincareElement::translation(c));
  EXPECT_EQ(t.L.matrix(), Mat4::Identity());
  EXPECT_EQ(t.C, -c);
}

TEST(Inverse, BlockFormulaMatchesNumericInverse) {
  Sampler s(23);
  for (int i = 0; i < 200; ++i) {
    const PoincareElement g = s.poincare();
    EXPECT_LE(scaled_diff(embed(inverse(g)), embed(g).inverse()), 1e-12);
  }
}

TEST(ActOnPoint, Examples) {
  const Vec4 x(0.3, -1.2, 2.0, 5.0);
  EXPECT_EQ(act_on_point(PoincareElement::identity(), x), x);
  const Vec4 c(1, 2, 3, 4);
  EXPECT_EQ(act_on_point(PoincareElement::translation(c), Vec4::Zero()), c);
  EXPECT_EQ(act_on_point({kTimeReversal, Vec4::Zero()}, x), Vec4(0.3, -1.2, 2.0, -5.0));
}

TEST(Adjoint, IdentityAndPureTranslation) {
  Sampler s(24);
  const LieElement d = s.lie();
  const LieElement same = adjoint(PoincareElement::identity(), d);
  EXPECT_LE(max_abs(flat(same) - flat(d)), 1e-15);

  const LieElement pure_gamma{Mat4::Zero(), Vec4(0.4, -0.1, 0.7, 1.0)};
  const LieElement moved = adjoint(PoincareElement::translation(Vec4(3, 1, -2, 5)), pure_gamma);
  EXPECT_EQ(moved.omega, Mat4::Zero());
  EXPECT_LE(max_abs(moved.gamma - pure_gamma.gamma), 1e-15);
}

TEST(Adjoint, ClosedFormMatchesConjugation) {
  Sampler s(25);
  for (int i = 0; i < 300; ++i) {
    const PoincareElement g = s.poincare();
    const LieElement d = s.lie();
    // conjugation oracle with a general numeric inverse
    const Mat5 conj = embed(g) * embed(d) * embed(g).inverse();
    const LieElement oracle{gram() * conj.topLeftCorner<4, 4>(), conj.topRightCorner<4, 1>()};
    EXPECT_LE(scaled_diff(flat(adjoint_closed_form(g, d)), flat(oracle)), 1e-11);
    EXPECT_LE(scaled_diff(flat(adjoint(g, d)), flat(oracle)), 1e-11);
    // γ' = −G ω' C + L γ
    const LieElement a = adjoint(g, d);
    EXPECT_LE(scaled_diff(a.gamma, -gram() * a.omega * g.C + g.L.matrix() * d.gamma), 1e-11);
  }
}

TEST(Coadjoint, IdentityLeavesMomentumUnchanged) {
  Sampler s(26);
  const Momentum j = s.momentum();
  const Momentum out = coadjoint(PoincareElement::identity(), j);
  EXPECT_EQ(out.M, j.M);
  EXPECT_EQ(out.P, j.P);
}

TEST(Coadjoint, TimeReversalFlipsEnergyOnly) {
  const Momentum j{spin_passage_recompose(Vec3(0.1, 0.2, 0.3), Vec3(-0.4, 0.5, 0.6)),
                   Vec4(0.5, -0.25, 1.0, 3.0)};
  const Momentum out = coadjoint({kTimeReversal, Vec4::Zero()}, j);
  EXPECT_EQ(out.P, Vec4(0.5, -0.25, 1.0, -3.0));
}

TEST(Coadjoint, MatchesDualityOracle) {
  Sampler s(27);
  for (int i = 0; i < 100; ++i) {
    const PoincareElement g = s.poincare();
    const Momentum j = s.momentum();
    EXPECT_LE(max_abs(flat(coadjoint(g, j)) - flat(reconstruct_coadjoint(g, j))), 1e-9);
  }
}

TEST(CoadjointMatrix, AgreesWithComponentFormula) {
  Sampler s(28);
  for (int i = 0; i < 100; ++i) {
    const PoincareElement g = s.poincare();
    const Momentum j = s.momentum();
    const Mat5 jm = coadjoint_matrix(g, momentum_matrix(j));
    EXPECT_LE(max_abs(jm + jm.transpose()), 1e-11 * (1 + max_abs(jm)));
    EXPECT_LE(scaled_diff(flat(from_momentum_matrix(jm)), flat(coadjoint(g, j))), 1e-12);
  }
  const Momentum j{spin_passage_recompose(Vec3(1, 2, 3), Vec3(4, 5, 6)), Vec4::Zero()};
  EXPECT_EQ(coadjoint_matrix(PoincareElement::identity(), momentum_matrix(j)), momentum_matrix(j));
  const Mat5 moved = coadjoint_matrix(PoincareElement::translation(Vec4(1, -1, 2, 3)), momentum_matrix(j));
  EXPECT_EQ(Mat4(moved.topLeftCorner<4, 4>()), j.M);
}

TEST(InvariantScalar, Examples) {
  const double e = 2.5;
  EXPECT_EQ(invariant_scalar({Mat4::Zero(), Vec4(0, 0, 0, e)}, {Mat4::Zero(), Vec4(0, 0, 0, 1)}), e);
  Sampler s(29);
  EXPECT_EQ(invariant_scalar({Mat4::Zero(), s.four_vector()}, {s.antisymmetric(), Vec4::Zero()}), 0.0);
}

TEST(InvariantScalar, BilinearAndDualityInvariant) {
  Sampler s(30);
  for (int i = 0; i < 300; ++i) {
    const PoincareElement g = s.poincare();
    const Momentum j = s.momentum();
    const Momentum k = s.momentum();
    const LieElement d = s.lie();
    const double a = s.uniform(-2, 2);
    const Momentum lin{j.M + a * k.M, j.P + a * k.P};
    EXPECT_NEAR(invariant_scalar(lin, d), invariant_scalar(j, d) + a * invariant_scalar(k, d), 1e-12);
    const double before = invariant_scalar(j, d);
    const double after = invariant_scalar(coadjoint(g, j), adjoint(g, d));
    EXPECT_LE(std::abs(after - before), 1e-10 * (1 + std::abs(before)));
  }
}

TEST(Coadjoint, IsAGroupAction) {
  Sampler s(31);
  for (int i = 0; i < 200; ++i) {
    const PoincareElement a = s.poincare();
    const PoincareElement b = s.poincare();
    const Momentum j = s.momentum();
    EXPECT_LE(scaled_diff(flat(coadjoint(compose(a, b), j)), flat(coadjoint(a, coadjoint(b, j)))), 1e-10);
  }
}

TEST(Coadjoint, EnergySignFollowsTimeOrientation) {
  Sampler s(32);
  for (int i = 0; i < 300; ++i) {
    const PoincareElement g = s.poincare();
    const Momentum j = s.massive_momentum();
    const double e = coadjoint(g, j).energy();
    EXPECT_EQ(e > 0, (g.L.mu() * j.energy()) > 0);
  }
}

TEST(MassSquared, ExamplesAndInvariance) {
  EXPECT_EQ(mass_squared(Vec4(0, 0, 0, 3)), 9.0);
  EXPECT_EQ(mass_squared(Vec4(0, 0, 2, 2)), 0.0);
  Sampler s(33);
  for (int i = 0; i < 300; ++i) {
    const Momentum j = s.momentum();
    const double before = mass_squared(j.P);
    const double after = mass_squared(coadjoint(s.poincare(), j).P);
    EXPECT_LE(std::abs(after - before), 1e-10 * (1 + std::abs(before)));
  }
}

TEST(SpinPassage, DecomposeExamples) {
  const SpinPassage zero = spin_passage_decompose(Mat4::Zero());
  EXPECT_EQ(zero.spin, Vec3::Zero());
  EXPECT_EQ(zero.passage, Vec3::Zero());
  const SpinPassage sz = spin_passage_decompose(spin_passage_recompose(Vec3(0, 0, 1.25), Vec3::Zero()));
  EXPECT_EQ(sz.spin, Vec3(0, 0, 1.25));
  EXPECT_EQ(sz.passage, Vec3::Zero());
  // layout: M(0,1) = −l_z, M(0,3) = f_x
  const Mat4 m = spin_passage_recompose(Vec3(1, 2, 3), Vec3(4, 5, 6));
  EXPECT_EQ(m(0, 1), -3.0);
  EXPECT_EQ(m(0, 2), 2.0);
  EXPECT_EQ(m(1, 2), -1.0);
  EXPECT_EQ(m(0, 3), 4.0);
  EXPECT_EQ(m(3, 2), -6.0);
}

TEST(SpinPassage, RoundTripAndRejection) {
  Sampler s(34);
  for (int i = 0; i < 100; ++i) {
    const Mat4 m = s.antisymmetric();
    const SpinPassage d = spin_passage_decompose(m);
    EXPECT_EQ(spin_passage_recompose(d.spin, d.passage), m);
  }
  EXPECT_THROW(spin_passage_decompose(Mat4::Identity()), ValidationError);
}

TEST(MomentumCoordinates, SerializedOrder) {
  const Momentum j{spin_passage_recompose(Vec3(7, 8, 9), Vec3(4, 5, 6)), Vec4(1, 2, 3, 0.5)};
  const auto c = momentum_coordinates(j);
  const std::array<double, 10> expected{0.5, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  EXPECT_EQ(c, expected);
  const Momentum back = momentum_from_coordinates(c);
  EXPECT_EQ(back.M, j.M);
  EXPECT_EQ(back.P, j.P);
}
