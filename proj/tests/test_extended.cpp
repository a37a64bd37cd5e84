#include <gtest/gtest.h>

#include "dyngroup/duality_oracle.hpp"
#include "dyngroup/extended.hpp"
#include "dyngroup/random.hpp"
#include "test_support.hpp"

using namespace dyngroup;
using dyngroup::testing::max_abs;
using dyngroup::testing::scaled_diff;

namespace {

Eigen::VectorXd flat(const ExtendedLieElement& d) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(d.dphi.size()) + 20);
  for (std::size_t i = 0; i < d.dphi.size(); ++i) v[static_cast<Eigen::Index>(i)] = d.dphi[i];
  v.segment<16>(static_cast<Eigen::Index>(d.dphi.size())) =
      Eigen::Map<const Eigen::Matrix<double, 16, 1>>(d.omega.data());
  v.tail<4>() = d.gamma;
  return v;
}

Eigen::VectorXd vec(const Scalars& s) {
  return Eigen::Map<const Eigen::VectorXd>(s.data(), static_cast<Eigen::Index>(s.size()));
}

}  // namespace

TEST(ExtendedCompose, MatchesEmbeddedProduct) {
  Sampler s(40);
  for (std::size_t n : {1u, 2u, 3u}) {
    for (int i = 0; i < 100; ++i) {
      const ExtendedElement a = s.extended(n);
      const ExtendedElement b = s.extended(n);
      EXPECT_LE(scaled_diff(embed(compose_ext(a, b)), embed(a) * embed(b)), 1e-13);
    }
  }
}

TEST(ExtendedCompose, ChargeParameterLaw) {
  const ExtendedElement a{-1, {0.5, 2.0}, {}, Vec4::Zero()};
  const ExtendedElement b{-1, {1.0, -3.0}, {}, Vec4::Zero()};
  const ExtendedElement ab = compose_ext(a, b);
  EXPECT_EQ(ab.nu, 1);
  EXPECT_EQ(ab.phi, (Scalars{1.0 - 0.5, -3.0 - 2.0}));
}

TEST(ExtendedInverse, Examples) {
  const ExtendedElement g{-1, {0.25}, {}, Vec4(1, 2, 3, 4)};
  const ExtendedElement gi = inverse_ext(g);
  EXPECT_EQ(gi.nu, -1);
  EXPECT_EQ(gi.phi, Scalars{0.25});
  EXPECT_EQ(gi.C, -Vec4(1, 2, 3, 4));
  Sampler s(41);
  for (int i = 0; i < 100; ++i) {
    const ExtendedElement h = s.extended(2);
    EXPECT_LE(scaled_diff(embed(inverse_ext(h)), embed(h).inverse()), 1e-12);
  }
}

TEST(ExtendedInverse, SizeMismatchThrows) {
  EXPECT_THROW(compose_ext(ExtendedElement::identity(1), ExtendedElement::identity(2)),
               DimensionMismatch);
  EXPECT_THROW(coadjoint_ext(ExtendedElement::identity(1), ChargedMomentum{{1.0, 2.0}, {}, {}}),
               DimensionMismatch);
}

TEST(ExtendedPoint, ChargeCoordinateShifts) {
  const ExtendedElement g{-1, {0.5}, {}, Vec4(0, 0, 0, 1)};
  const ExtendedPoint p = act_on_point_ext(g, {{2.0}, Vec4::Zero()});
  EXPECT_EQ(p.zeta, Scalars{-(2.0 + 0.5)});
  EXPECT_EQ(p.x, Vec4(0, 0, 0, 1));
}

TEST(ExtendedAdjoint, ClosedFormMatchesConjugation) {
  Sampler s(42);
  for (std::size_t n : {1u, 3u}) {
    for (int i = 0; i < 100; ++i) {
      const ExtendedElement g = s.extended(n);
      const ExtendedLieElement d = s.extended_lie(n);
      EXPECT_LE(scaled_diff(flat(adjoint_ext_closed_form(g, d)), flat(adjoint_ext(g, d))), 1e-11);
      EXPECT_LE(max_abs(vec(adjoint_ext(g, d).dphi) - g.nu * vec(d.dphi)), 1e-12);
    }
  }
}

TEST(ExtendedCoadjoint, ChargesScaleByNu) {
  Sampler s(43);
  for (int i = 0; i < 200; ++i) {
    const ExtendedElement g = s.extended(3);
    const ChargedMomentum j = s.charged(3);
    const ChargedMomentum out = coadjoint_ext(g, j);
    for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(out.q[k], g.nu * j.q[k]);
  }
}

TEST(ExtendedCoadjoint, RestrictsToPoincare) {
  Sampler s(44);
  for (int i = 0; i < 100; ++i) {
    const ExtendedElement g = s.extended(2, false);
    const ChargedMomentum j = s.charged(2);
    const ChargedMomentum out = coadjoint_ext(g, j);
    const Momentum pm = coadjoint({g.L, g.C}, j.poincare_part());
    EXPECT_EQ(out.M, pm.M);
    EXPECT_EQ(out.P, pm.P);
    EXPECT_EQ(out.q, j.q);
  }
}

TEST(ExtendedCoadjoint, MatchesDualityOracle) {
  Sampler s(45);
  for (std::size_t n : {1u, 2u, 4u}) {
    for (int i = 0; i < 50; ++i) {
      const ExtendedElement g = s.extended(n);
      const ChargedMomentum j = s.charged(n);
      EXPECT_LE(max_abs(charged_coordinates(coadjoint_ext(g, j)) -
                        charged_coordinates(reconstruct_coadjoint(g, j))),
                1e-9);
    }
  }
}

TEST(ExtendedCoadjoint, GroupActionAndInvariance) {
  Sampler s(46);
  for (int i = 0; i < 100; ++i) {
    const ExtendedElement a = s.extended(2);
    const ExtendedElement b = s.extended(2);
    const ChargedMomentum j = s.charged(2);
    const ExtendedLieElement d = s.extended_lie(2);
    EXPECT_LE(scaled_diff(charged_coordinates(coadjoint_ext(compose_ext(a, b), j)),
                          charged_coordinates(coadjoint_ext(a, coadjoint_ext(b, j)))),
              1e-10);
    const double before = invariant_scalar_ext(j, d);
    const double after = invariant_scalar_ext(coadjoint_ext(a, j), adjoint_ext(a, d));
    EXPECT_LE(std::abs(after - before), 1e-10 * (1 + std::abs(before)));
  }
}

TEST(CSymmetry, FlipsChargesOnly) {
  Sampler s(47);
  for (int i = 0; i < 50; ++i) {
    const ChargedMomentum j = s.charged(3);
    const ChargedMomentum c = c_symmetry(j);
    EXPECT_EQ(c.M, j.M);
    EXPECT_EQ(c.P, j.P);
    for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(c.q[k], -j.q[k]);
    EXPECT_EQ(c_symmetry(c).q, j.q);
  }
}
