#ifndef DYNGROUP_TEST_SUPPORT_HPP
#define DYNGROUP_TEST_SUPPORT_HPP

// Independent oracles for the unit tests. Nothing here calls the closed-form
// actions under test.

#include <Eigen/Dense>

#include <cmath>

#include "dyngroup/dyngroup.hpp"

namespace dyngroup::testing {

inline double max_abs(const Eigen::MatrixXd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

inline double scaled_diff(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return max_abs(a - b) / (1.0 + max_abs(b));
}

/// Levi-Civita symbol by counting inversions.
inline int levi_civita(int a, int b, int c, int d) {
  const int p[4] = {a, b, c, d};
  int sign = 1;
  for (int i = 0; i < 4; ++i) {
    for (int k = i + 1; k < 4; ++k) {
      if (p[i] == p[k]) return 0;
      if (p[i] > p[k]) sign = -sign;
    }
  }
  return sign;
}

/// Spin from the Pauli-Lubanski vector W_a = ½ ε_abcd M^bc P^d:
/// s² = −(ᵗW G W) / m². Translation- and Lorentz-invariant by construction.
inline double pauli_lubanski_spin(const Mat4& m, const Vec4& p) {
  Vec4 w = Vec4::Zero();
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      for (int c = 0; c < 4; ++c) {
        for (int d = 0; d < 4; ++d) w[a] += 0.5 * levi_civita(a, b, c, d) * m(b, c) * p[d];
      }
    }
  }
  const double m2 = p[3] * p[3] - p.head<3>().squaredNorm();
  const double w2 = w[3] * w[3] - w.head<3>().squaredNorm();
  return std::sqrt(std::max(0.0, -w2 / m2));
}

}  // namespace dyngroup::testing

#endif  // DYNGROUP_TEST_SUPPORT_HPP
