#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "dyngroup/minkowski.hpp"
#include "dyngroup/random.hpp"

using namespace dyngroup;

namespace {

Mat4 diag(double a, double b, double c, double d) { return Vec4(a, b, c, d).asDiagonal(); }

}  // namespace

TEST(Minkowski, GramMatrixIsInvolutionAndSymmetric) {
  const Mat4 g = gram();
  EXPECT_EQ(g * g, Mat4::Identity());
  EXPECT_EQ(g.transpose(), g);
}

TEST(Minkowski, InnerProductExamples) {
  EXPECT_EQ(minkowski_inner(Vec4(0, 0, 0, 1), Vec4(0, 0, 0, 1)), 1.0);
  EXPECT_EQ(minkowski_inner(Vec4(1, 0, 0, 0), Vec4(1, 0, 0, 0)), -1.0);
  EXPECT_EQ(minkowski_inner(Vec4(1, 0, 0, 1), Vec4(1, 0, 0, 1)), 0.0);
}

TEST(Minkowski, InnerProductIsSymmetricAndMatchesGram) {
  Sampler s(11);
  for (int i = 0; i < 100; ++i) {
    const Vec4 a = s.four_vector(3.0);
    const Vec4 b = s.four_vector(3.0);
    EXPECT_EQ(minkowski_inner(a, b), minkowski_inner(b, a));
    EXPECT_NEAR(minkowski_inner(a, b), a.dot(gram() * b), 1e-14);
  }
}

TEST(Boost, ZeroRapidityIsIdentity) {
  EXPECT_EQ(boost(Vec3::UnitZ(), 0.0).matrix(), Mat4::Identity());
}

TEST(Boost, MapsRestMassAlongAxis) {
  const double m = 1.7;
  const double chi = 0.8;
  const Vec4 out = boost(Vec3::UnitZ(), chi) * Vec4(0, 0, 0, m);
  EXPECT_NEAR(out[0], 0.0, 1e-15);
  EXPECT_NEAR(out[1], 0.0, 1e-15);
  EXPECT_NEAR(out[2], m * std::sinh(chi), 1e-14);
  EXPECT_NEAR(out[3], m * std::cosh(chi), 1e-14);
  EXPECT_NEAR(minkowski_inner(out, out), m * m, 1e-13);
}

TEST(Boost, RandomBoostsAreNeutralLorentz) {
  Sampler s(1);
  for (int i = 0; i < 1000; ++i) {
    const LorentzMatrix b = s.random_boost();
    EXPECT_LE(lorentz_residual(b.matrix()), 1e-12);
    EXPECT_EQ(b.component(), ConnectedComponent::Neutral);
  }
}

TEST(Boost, RejectsNonUnitAxis) {
  EXPECT_THROW(boost(Vec3(1, 1, 0), 0.3), ValidationError);
  EXPECT_THROW(boost(Vec3::UnitX(), NAN), ValidationError);
}

TEST(Rotation, QuarterTurnAboutZ) {
  EXPECT_EQ(rotation(Vec3::UnitZ(), 0.0).matrix(), Mat4::Identity());
  const Vec4 out = rotation(Vec3::UnitZ(), std::numbers::pi / 2) * Vec4(1, 0, 0, 0);
  EXPECT_NEAR(out[0], 0.0, 1e-15);
  EXPECT_NEAR(out[1], 1.0, 1e-15);
  EXPECT_NEAR(out[2], 0.0, 1e-15);
  EXPECT_EQ(out[3], 0.0);
}

TEST(Rotation, RandomRotationsAreNeutralAndLeaveTimeAlone) {
  Sampler s(2);
  for (int i = 0; i < 1000; ++i) {
    const LorentzMatrix r = s.random_rotation();
    EXPECT_EQ(r.component(), ConnectedComponent::Neutral);
    EXPECT_EQ(r.matrix()(3, 3), 1.0);
    EXPECT_EQ(r.matrix().row(3).head<3>().norm(), 0.0);
    EXPECT_LE(lorentz_residual(r.matrix()), 1e-12);
  }
  EXPECT_THROW(rotation(Vec3(0, 0, 2), 1.0), ValidationError);
}

TEST(IsLorentz, Examples) {
  EXPECT_TRUE(is_lorentz(Mat4::Identity()));
  EXPECT_TRUE(is_lorentz(diag(-1, -1, -1, 1)));
  EXPECT_FALSE(is_lorentz(2.0 * Mat4::Identity()));
  Mat4 bad = Mat4::Identity();
  bad(0, 0) = NAN;
  EXPECT_FALSE(is_lorentz(bad));
}

TEST(ClassifyComponent, CanonicalRepresentatives) {
  EXPECT_EQ(classify_component(Mat4::Identity()), ConnectedComponent::Neutral);
  EXPECT_EQ(classify_component(diag(-1, -1, -1, 1)), ConnectedComponent::SpaceReversing);
  EXPECT_EQ(classify_component(diag(1, 1, 1, -1)), ConnectedComponent::TimeReversing);
  EXPECT_EQ(classify_component(diag(-1, -1, -1, -1)), ConnectedComponent::SpaceTimeReversing);
  EXPECT_TRUE(is_orthochron(ConnectedComponent::SpaceReversing));
  EXPECT_TRUE(is_antichron(ConnectedComponent::TimeReversing));
}

TEST(ClassifyComponent, RejectsNonLorentz) {
  EXPECT_THROW(classify_component(2.0 * Mat4::Identity()), NotLorentzError);
  EXPECT_THROW(LorentzMatrix(Mat4::Zero()), NotLorentzError);
}

TEST(OmegaFactor, Examples) {
  EXPECT_EQ(omega_factor(1, 1).matrix(), Mat4::Identity());
  EXPECT_THROW(omega_factor(0, 1), ValidationError);
  EXPECT_THROW(omega_factor(1, 2), ValidationError);
  Sampler s(3);
  for (int i = 0; i < 200; ++i) {
    const LorentzMatrix ln = s.neutral();
    EXPECT_EQ((omega_factor(-1, 1) * ln).component(), ConnectedComponent::SpaceReversing);
    EXPECT_EQ((omega_factor(1, -1) * ln).component(), ConnectedComponent::TimeReversing);
    const LorentzMatrix lst = omega_factor(-1, -1) * ln;
    EXPECT_EQ(lst.component(), ConnectedComponent::SpaceTimeReversing);
    EXPECT_EQ(lst.matrix(), -ln.matrix());
  }
}

TEST(ComponentTable, ProductsFollowSignAlgebra) {
  constexpr ConnectedComponent all[] = {
      ConnectedComponent::Neutral, ConnectedComponent::SpaceReversing,
      ConnectedComponent::TimeReversing, ConnectedComponent::SpaceTimeReversing};
  Sampler s(4);
  for (ConnectedComponent a : all) {
    for (ConnectedComponent b : all) {
      for (int i = 0; i < 50; ++i) {
        const LorentzMatrix ab = s.lorentz_in(a) * s.lorentz_in(b);
        if (a == ConnectedComponent::Neutral && b == ConnectedComponent::Neutral) {
          EXPECT_EQ(ab.component(), ConnectedComponent::Neutral);
        }
        // orthochron is a subgroup; antichron·antichron lands in it; mixed products are antichron
        EXPECT_EQ(ab.orthochron(), is_orthochron(a) == is_orthochron(b));
      }
    }
  }
}

TEST(SignDecomposition, EveryMatrixIsMuTimesOrthochron) {
  Sampler s(5);
  for (int i = 0; i < 500; ++i) {
    const LorentzMatrix l = s.lorentz();
    const SignDecomposition d = sign_decompose(l);
    EXPECT_EQ(d.mu, l.matrix()(3, 3) > 0 ? 1 : -1);
    EXPECT_TRUE(d.orthochron_part.orthochron());
    EXPECT_EQ(d.mu * d.orthochron_part.matrix(), l.matrix());
  }
}

TEST(LorentzMatrix, InverseUsesMetricTranspose) {
  Sampler s(6);
  for (int i = 0; i < 100; ++i) {
    const LorentzMatrix l = s.lorentz();
    EXPECT_LE((l.inverse().matrix() - l.matrix().inverse()).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(LorentzMatrix, LongProductsStayLorentz) {
  Sampler s(7);
  for (int i = 0; i < 200; ++i) {
    LorentzMatrix l;
    for (int k = 0; k < 10; ++k) l = l * s.lorentz_product(1);
    const double scale = l.matrix().cwiseAbs().maxCoeff();
    EXPECT_LE(lorentz_residual(l.matrix()) / (scale * scale), 1e-12);
  }
}
