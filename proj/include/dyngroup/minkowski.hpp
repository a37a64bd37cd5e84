#ifndef DYNGROUP_MINKOWSKI_HPP
#define DYNGROUP_MINKOWSKI_HPP

// Minkowski space in (x, y, z, t) order with signature (-, -, -, +), c = 1.
// Lorentz matrices, their four connected components, and the diagonal
// sign matrices Omega(alpha, beta) that move between components.

#include <Eigen/Dense>

#include <cmath>
#include <string>
#include <string_view>

#include "dyngroup/errors.hpp"

namespace dyngroup {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;

inline constexpr double kDefaultTol = 1e-9;

/// Index of the time component in a four-vector.
inline constexpr int kTime = 3;

/// Gram matrix diag(-1, -1, -1, +1).
inline Mat4 gram() {
  return Vec4(-1.0, -1.0, -1.0, 1.0).asDiagonal();
}

/// ᵗa·G·b.
inline double minkowski_inner(const Vec4& a, const Vec4& b) {
  return a[3] * b[3] - a[0] * b[0] - a[1] * b[1] - a[2] * b[2];
}

enum class ConnectedComponent {
  Neutral,             // det +1, time-time > 0
  SpaceReversing,      // det -1, time-time > 0
  TimeReversing,       // det -1, time-time < 0
  SpaceTimeReversing,  // det +1, time-time < 0
};

inline constexpr bool is_orthochron(ConnectedComponent c) {
  return c == ConnectedComponent::Neutral ||
         c == ConnectedComponent::SpaceReversing;
}

inline constexpr bool is_antichron(ConnectedComponent c) {
  return !is_orthochron(c);
}

inline constexpr std::string_view to_string(ConnectedComponent c) {
  switch (c) {
    case ConnectedComponent::Neutral:
      return "Neutral";
    case ConnectedComponent::SpaceReversing:
      return "SpaceReversing";
    case ConnectedComponent::TimeReversing:
      return "TimeReversing";
    case ConnectedComponent::SpaceTimeReversing:
      return "SpaceTimeReversing";
  }
  return "?";
}

/// ‖ᵗm·G·m − G‖∞ (max-abs entry).
inline double lorentz_residual(const Mat4& m) {
  const Mat4 g = gram();
  return (m.transpose() * g * m - g).cwiseAbs().maxCoeff();
}

inline bool is_lorentz(const Mat4& m, double tol = kDefaultTol) {
  if (!m.allFinite()) return false;
  return lorentz_residual(m) <= tol;
}

namespace detail {

inline ConnectedComponent component_from_signs(double det, double time_time) {
  if (time_time > 0.0) {
    return det > 0.0 ? ConnectedComponent::Neutral
                     : ConnectedComponent::SpaceReversing;
  }
  return det > 0.0 ? ConnectedComponent::SpaceTimeReversing
                   : ConnectedComponent::TimeReversing;
}

}  // namespace detail

/// A validated Lorentz matrix together with its component.
class LorentzMatrix {
 public:
  LorentzMatrix() : m_(Mat4::Identity()), component_(ConnectedComponent::Neutral) {}

  /// Throws NotLorentzError if ᵗmGm differs from G by more than tol.
  explicit LorentzMatrix(const Mat4& m, double tol = kDefaultTol) : m_(m) {
    if (!is_lorentz(m, tol)) {
      throw NotLorentzError("matrix is not Lorentz: residual " +
                            std::to_string(m.allFinite() ? lorentz_residual(m)
                                                         : INFINITY));
    }
    component_ = detail::component_from_signs(m.determinant(), m(kTime, kTime));
  }

  static LorentzMatrix identity() { return {}; }

  const Mat4& matrix() const { return m_; }
  ConnectedComponent component() const { return component_; }
  bool orthochron() const { return is_orthochron(component_); }
  bool antichron() const { return is_antichron(component_); }

  /// Global time sign: +1 for orthochron, -1 for antichron.
  int mu() const { return orthochron() ? 1 : -1; }

  /// Uses L⁻¹ = G·ᵗL·G, exact for any Lorentz matrix.
  LorentzMatrix inverse() const {
    const Mat4 g = gram();
    return unchecked(g * m_.transpose() * g);
  }

  LorentzMatrix operator*(const LorentzMatrix& other) const {
    return unchecked(m_ * other.m_);
  }

  Vec4 operator*(const Vec4& x) const { return m_ * x; }

  LorentzMatrix operator-() const { return unchecked(-m_); }

  /// Skips validation; for products and inverses of already-valid factors.
  static LorentzMatrix unchecked(const Mat4& m) {
    LorentzMatrix out;
    out.m_ = m;
    out.component_ = detail::component_from_signs(m.determinant(), m(kTime, kTime));
    return out;
  }

 private:
  Mat4 m_;
  ConnectedComponent component_;
};

inline ConnectedComponent classify_component(const Mat4& m, double tol = kDefaultTol) {
  return LorentzMatrix(m, tol).component();
}

inline ConnectedComponent classify_component(const LorentzMatrix& l) {
  return l.component();
}

namespace detail {

inline Vec3 checked_axis(const Vec3& axis, double tol) {
  if (!axis.allFinite() || std::abs(axis.norm() - 1.0) > tol) {
    throw ValidationError("axis must be a unit 3-vector");
  }
  return axis;
}

}  // namespace detail

/// Pure boost along a unit axis. Maps (0,0,0,m) to (m sinh χ n, m cosh χ).
inline LorentzMatrix boost(const Vec3& axis, double rapidity, double tol = kDefaultTol) {
  const Vec3 n = detail::checked_axis(axis, tol);
  if (!std::isfinite(rapidity)) throw ValidationError("rapidity must be finite");
  const double ch = std::cosh(rapidity);
  const double sh = std::sinh(rapidity);
  Mat4 m = Mat4::Identity();
  m.topLeftCorner<3, 3>() += (ch - 1.0) * n * n.transpose();
  m.topRightCorner<3, 1>() = sh * n;
  m.bottomLeftCorner<1, 3>() = sh * n.transpose();
  m(kTime, kTime) = ch;
  return LorentzMatrix::unchecked(m);
}

/// Right-handed spatial rotation; time row and column untouched.
inline LorentzMatrix rotation(const Vec3& axis, double angle, double tol = kDefaultTol) {
  const Vec3 n = detail::checked_axis(axis, tol);
  if (!std::isfinite(angle)) throw ValidationError("angle must be finite");
  Mat4 m = Mat4::Identity();
  m.topLeftCorner<3, 3>() = Eigen::AngleAxisd(angle, n).toRotationMatrix();
  return LorentzMatrix::unchecked(m);
}

/// Embeds a 3×3 rotation.
inline LorentzMatrix rotation(const Mat3& r) {
  Mat4 m = Mat4::Identity();
  m.topLeftCorner<3, 3>() = r;
  return LorentzMatrix::unchecked(m);
}

/// diag(α, α, α, β) with α, β ∈ {−1, +1}.
inline LorentzMatrix omega_factor(int alpha, int beta) {
  if ((alpha != 1 && alpha != -1) || (beta != 1 && beta != -1)) {
    throw ValidationError("omega_factor signs must be +1 or -1");
  }
  const double a = alpha;
  return LorentzMatrix::unchecked(Vec4(a, a, a, beta).asDiagonal());
}

/// The four sign representatives: 1, A_s, A_t, A_st.
inline LorentzMatrix representative(ConnectedComponent c) {
  switch (c) {
    case ConnectedComponent::Neutral:
      return omega_factor(1, 1);
    case ConnectedComponent::SpaceReversing:
      return omega_factor(-1, 1);
    case ConnectedComponent::TimeReversing:
      return omega_factor(1, -1);
    case ConnectedComponent::SpaceTimeReversing:
      return omega_factor(-1, -1);
  }
  return omega_factor(1, 1);
}

/// Splits L = μ·L_o with L_o orthochron.
struct SignDecomposition {
  int mu;
  LorentzMatrix orthochron_part;
};

inline SignDecomposition sign_decompose(const LorentzMatrix& l) {
  const int mu = l.mu();
  return {mu, mu > 0 ? l : -l};
}

}  // namespace dyngroup

#endif  // DYNGROUP_MINKOWSKI_HPP
