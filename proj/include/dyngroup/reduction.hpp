#ifndef DYNGROUP_REDUCTION_HPP
#define DYNGROUP_REDUCTION_HPP

// Reduction of a massive momentum to the sparse normal form
//
//   [  0  -s   0   0   0 ]
//   [  s   0   0   0   0 ]
//   [  0   0   0   0  -p ]
//   [  0   0   0   0  -E ]
//   [  0   0   p   E   0 ]
//
// realized as a product of Poincaré elements: rest-frame boost, a
// translation that cancels the passage vector, a rotation that aligns the
// spin with +z, and an optional boost back along z.

#include <Eigen/Geometry>

#include <cmath>
#include <optional>

#include "dyngroup/errors.hpp"
#include "dyngroup/minkowski.hpp"
#include "dyngroup/poincare.hpp"

namespace dyngroup {

struct CanonicalMomentum {
  double s = 0.0;  // spin scalar, >= 0
  double p = 0.0;  // momentum along z
  double E = 0.0;  // energy, sign preserved from the input
  PoincareElement g_reducing;

  /// The normal-form momentum with exactly the sparsity shown above.
  Momentum momentum() const {
    return {spin_passage_recompose(Vec3(0.0, 0.0, s), Vec3::Zero()), Vec4(0.0, 0.0, p, E)};
  }
};

/// Neutral boost B with B·P = (0, 0, 0, sign(E)·m).
inline LorentzMatrix rest_frame_boost(const Vec4& P, double tol = kDefaultTol) {
  const double m2 = mass_squared(P);
  if (!P.allFinite() || !(m2 > tol)) {
    throw DegenerateMomentum("momentum is not timelike (m^2 = " + std::to_string(m2) + ")");
  }
  const double sigma = P[kTime] > 0.0 ? 1.0 : -1.0;
  const Vec3 u = sigma * P.head<3>();
  const double pn = u.norm();
  if (pn == 0.0) return LorentzMatrix::identity();
  return boost(u / pn, -std::asinh(pn / std::sqrt(m2)));
}

/// With `boost_to_p` set, the final form carries that momentum along z
/// instead of sitting in the rest frame.
inline CanonicalMomentum canonical_reduce(const Momentum& j, double tol = kDefaultTol,
                                          std::optional<double> boost_to_p = std::nullopt) {
  const LorentzMatrix b = rest_frame_boost(j.P, tol);
  const double m = std::sqrt(mass_squared(j.P));
  const double sigma = j.P[kTime] > 0.0 ? 1.0 : -1.0;

  const PoincareElement to_rest{b, Vec4::Zero()};
  const Momentum rest = coadjoint(to_rest, j);

  // With P = (0,0,0,σm) the translation adds σm·Cᵢ to passage entry i.
  Vec4 c = Vec4::Zero();
  for (int i = 0; i < 3; ++i) c[i] = -rest.M(i, kTime) / (sigma * m);
  const PoincareElement cancel = PoincareElement::translation(c);
  const Momentum centered = coadjoint(cancel, rest);

  const Vec3 l(centered.M(2, 1), centered.M(0, 2), centered.M(1, 0));
  const double s = l.norm();
  PoincareElement align;
  if (s > 0.0) {
    const Mat3 r = Eigen::Quaterniond::FromTwoVectors(l, Vec3::UnitZ()).toRotationMatrix();
    align = {rotation(r), Vec4::Zero()};
  }

  PoincareElement g = compose(align, compose(cancel, to_rest));
  CanonicalMomentum out{s, 0.0, sigma * m, {}};
  if (boost_to_p && *boost_to_p != 0.0) {
    const double p = *boost_to_p;
    g = compose({boost(Vec3::UnitZ(), std::asinh(sigma * p / m)), Vec4::Zero()}, g);
    out.p = p;
    out.E = sigma * std::sqrt(m * m + p * p);
  }
  out.g_reducing = g;
  return out;
}

inline double spin_scalar(const Momentum& j, double tol = kDefaultTol) {
  return canonical_reduce(j, tol).s;
}

}  // namespace dyngroup

#endif  // DYNGROUP_REDUCTION_HPP
