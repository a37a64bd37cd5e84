#ifndef DYNGROUP_POINCARE_HPP
#define DYNGROUP_POINCARE_HPP

// The Poincaré group acting on space-time as x -> L x + C, its Lie algebra
// {omega, gamma} with dL = G omega, and the coadjoint action on the
// 10-component momentum {M, P}.

#include <Eigen/Dense>

#include <array>
#include <utility>

#include "dyngroup/errors.hpp"
#include "dyngroup/minkowski.hpp"
#include "dyngroup/mutation.hpp"

namespace dyngroup {

using Mat5 = Eigen::Matrix<double, 5, 5>;

struct PoincareElement {
  LorentzMatrix L;
  Vec4 C = Vec4::Zero();

  static PoincareElement identity() { return {}; }
  static PoincareElement translation(const Vec4& c) { return {LorentzMatrix{}, c}; }
};

/// Tangent vector at the identity: dL = G·omega, dC = gamma.
struct LieElement {
  Mat4 omega = Mat4::Zero();
  Vec4 gamma = Vec4::Zero();
};

/// Momentum {M, P}; M antisymmetric, P = (p_x, p_y, p_z, E).
struct Momentum {
  Mat4 M = Mat4::Zero();
  Vec4 P = Vec4::Zero();

  double energy() const { return P[kTime]; }
  Vec3 linear() const { return P.head<3>(); }
};

inline double antisymmetry_residual(const Mat4& m) {
  return (m + m.transpose()).cwiseAbs().maxCoeff();
}

inline bool is_antisymmetric(const Mat4& m, double tol = kDefaultTol) {
  return m.allFinite() && antisymmetry_residual(m) <= tol;
}

inline PoincareElement compose(const PoincareElement& a, const PoincareElement& b) {
  return {a.L * b.L, a.L * b.C + a.C};
}

inline PoincareElement inverse(const PoincareElement& g) {
  const LorentzMatrix inv = g.L.inverse();
  return {inv, -(inv * g.C)};
}

inline Vec4 act_on_point(const PoincareElement& g, const Vec4& x) {
  return g.L * x + g.C;
}

/// [[L, C], [0, 1]].
inline Mat5 embed(const PoincareElement& g) {
  Mat5 m = Mat5::Zero();
  m.topLeftCorner<4, 4>() = g.L.matrix();
  m.topRightCorner<4, 1>() = g.C;
  m(4, 4) = 1.0;
  return m;
}

/// [[G omega, gamma], [0, 0]].
inline Mat5 embed(const LieElement& d) {
  Mat5 m = Mat5::Zero();
  m.topLeftCorner<4, 4>() = gram() * d.omega;
  m.topRightCorner<4, 1>() = d.gamma;
  return m;
}

inline LieElement extract_lie(const Mat5& m) {
  return {gram() * m.topLeftCorner<4, 4>(), m.topRightCorner<4, 1>()};
}

/// g·d·g⁻¹ on the embedded 5×5 matrices.
inline LieElement adjoint(const PoincareElement& g, const LieElement& d) {
  return extract_lie(embed(g) * embed(d) * embed(inverse(g)));
}

/// ω' = ᵗL⁻¹ ω L⁻¹, γ' = −L G ω L⁻¹ C + L γ.
inline LieElement adjoint_closed_form(const PoincareElement& g, const LieElement& d) {
  const Mat4 l = g.L.matrix();
  const Mat4 linv = g.L.inverse().matrix();
  return {linv.transpose() * d.omega * linv,
          -l * gram() * d.omega * linv * g.C + l * d.gamma};
}

/// P' = L P,  M' = L M ᵗL + C ᵗP' − P' ᵗC.
inline Momentum coadjoint(const PoincareElement& g, const Momentum& j) {
  using namespace detail;
  const Mat4& l = g.L.matrix();
  const Vec4 p = l * j.P;
  Momentum out;
  out.M = l * j.M * l.transpose() +
          transcribed_sign<kPoincareTranslationLeft>() * g.C * p.transpose() -
          transcribed_sign<kPoincareTranslationRight>() * p * g.C.transpose();
  out.P = transcribed_sign<kPoincareEnergyMomentum>() * p;
  return out;
}

/// [[M, −P], [ᵗP, 0]].
inline Mat5 momentum_matrix(const Momentum& j) {
  Mat5 m = Mat5::Zero();
  m.topLeftCorner<4, 4>() = j.M;
  m.topRightCorner<4, 1>() = -j.P;
  m.bottomLeftCorner<1, 4>() = j.P.transpose();
  return m;
}

/// Reads {M, P} back out of the block layout. The P column and row are averaged.
inline Momentum from_momentum_matrix(const Mat5& m) {
  Momentum j;
  j.M = m.topLeftCorner<4, 4>();
  j.P = 0.5 * (m.bottomLeftCorner<1, 4>().transpose() - m.topRightCorner<4, 1>());
  return j;
}

/// J' = g J ᵗg.
inline Mat5 coadjoint_matrix(const PoincareElement& g, const Mat5& jm) {
  const Mat5 e = embed(g);
  return e * jm * e.transpose();
}

/// S = ½ Tr(M ω) + ᵗP G γ.
inline double invariant_scalar(const Momentum& j, const LieElement& d) {
  return 0.5 * (j.M * d.omega).trace() + minkowski_inner(j.P, d.gamma);
}

/// ᵗP G P = E² − |p|².
inline double mass_squared(const Vec4& p) { return minkowski_inner(p, p); }

/// Spin vector l and passage vector read from the fixed M layout
///   [ 0   -lz   ly   fx ]
///   [ lz   0   -lx   fy ]
///   [-ly   lx   0    fz ]
///   [-fx  -fy  -fz   0  ]
struct SpinPassage {
  Vec3 spin;
  Vec3 passage;
};

inline SpinPassage spin_passage_decompose(const Mat4& m, double tol = kDefaultTol) {
  if (!is_antisymmetric(m, tol)) throw ValidationError("M must be antisymmetric");
  return {Vec3(m(2, 1), m(0, 2), m(1, 0)), Vec3(m(0, 3), m(1, 3), m(2, 3))};
}

inline Mat4 spin_passage_recompose(const Vec3& l, const Vec3& f) {
  Mat4 m;
  // clang-format off
  m <<    0.0, -l.z(),  l.y(),  f.x(),
        l.z(),    0.0, -l.x(),  f.y(),
       -l.y(),  l.x(),    0.0,  f.z(),
       -f.x(), -f.y(), -f.z(),    0.0;
  // clang-format on
  return m;
}

/// Serialized order (E, p_x, p_y, p_z, j_x, j_y, j_z, l_x, l_y, l_z); j is the passage.
inline std::array<double, 10> momentum_coordinates(const Momentum& j) {
  const Vec3 l(j.M(2, 1), j.M(0, 2), j.M(1, 0));
  const Vec3 f(j.M(0, 3), j.M(1, 3), j.M(2, 3));
  return {j.P[3], j.P[0], j.P[1], j.P[2], f.x(), f.y(), f.z(), l.x(), l.y(), l.z()};
}

inline Momentum momentum_from_coordinates(const std::array<double, 10>& c) {
  Momentum j;
  j.P = Vec4(c[1], c[2], c[3], c[0]);
  j.M = spin_passage_recompose(Vec3(c[7], c[8], c[9]), Vec3(c[4], c[5], c[6]));
  return j;
}

}  // namespace dyngroup

#endif  // DYNGROUP_POINCARE_HPP
