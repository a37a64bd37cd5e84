#ifndef DYNGROUP_EXTENDED_HPP
#define DYNGROUP_EXTENDED_HPP

// Charged extensions of the Poincaré group. Each of the n extra closed
// dimensions zeta_i carries a translation phi_i and a charge q_i. The sign
// nu reverses every extra dimension at once; nu = +1 throughout gives the
// trivial-sign (connected in nu) extension, nu = ±1 the eight-component group.
//
// Embedded as the (n+5)×(n+5) matrix
//   [ nu·1_n   0   nu·phi ]
//   [   0      L     C    ]
//   [   0      0     1    ]

#include <Eigen/Dense>

#include <cstddef>
#include <string>
#include <vector>

#include "dyngroup/errors.hpp"
#include "dyngroup/minkowski.hpp"
#include "dyngroup/mutation.hpp"
#include "dyngroup/poincare.hpp"

namespace dyngroup {

using Scalars = std::vector<double>;

struct ExtendedElement {
  int nu = 1;
  Scalars phi;
  LorentzMatrix L;
  Vec4 C = Vec4::Zero();

  std::size_t charge_count() const { return phi.size(); }

  static ExtendedElement identity(std::size_t n) { return {1, Scalars(n, 0.0), {}, Vec4::Zero()}; }
};

struct ExtendedLieElement {
  Scalars dphi;
  Mat4 omega = Mat4::Zero();
  Vec4 gamma = Vec4::Zero();
};

struct ChargedMomentum {
  Scalars q;
  Mat4 M = Mat4::Zero();
  Vec4 P = Vec4::Zero();

  Momentum poincare_part() const { return {M, P}; }
};

struct ExtendedPoint {
  Scalars zeta;
  Vec4 x = Vec4::Zero();
};

namespace detail {

inline void check_sign(int s, const char* name) {
  if (s != 1 && s != -1) throw ValidationError(std::string(name) + " must be +1 or -1");
}

inline void check_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": " + std::to_string(a) +
                            " vs " + std::to_string(b));
  }
}

}  // namespace detail

inline ExtendedElement compose_ext(const ExtendedElement& a, const ExtendedElement& b) {
  detail::check_sign(a.nu, "nu");
  detail::check_sign(b.nu, "nu");
  detail::check_same_size(a.phi.size(), b.phi.size(), "compose_ext");
  ExtendedElement out;
  out.nu = a.nu * b.nu;
  out.phi.resize(a.phi.size());
  // slot: nu_a·nu_b·phi_b + nu_a·phi_a = nu·(phi_b + nu_b·phi_a)
  for (std::size_t i = 0; i < a.phi.size(); ++i) out.phi[i] = b.phi[i] + b.nu * a.phi[i];
  out.L = a.L * b.L;
  out.C = a.L * b.C + a.C;
  return out;
}

inline ExtendedElement inverse_ext(const ExtendedElement& g) {
  detail::check_sign(g.nu, "nu");
  ExtendedElement out;
  out.nu = g.nu;
  out.phi.resize(g.phi.size());
  for (std::size_t i = 0; i < g.phi.size(); ++i) out.phi[i] = -g.nu * g.phi[i];
  out.L = g.L.inverse();
  out.C = -(out.L * g.C);
  return out;
}

inline ExtendedPoint act_on_point_ext(const ExtendedElement& g, const ExtendedPoint& p) {
  detail::check_same_size(g.phi.size(), p.zeta.size(), "act_on_point_ext");
  ExtendedPoint out;
  out.zeta.resize(p.zeta.size());
  for (std::size_t i = 0; i < p.zeta.size(); ++i) out.zeta[i] = g.nu * p.zeta[i] + g.nu * g.phi[i];
  out.x = g.L * p.x + g.C;
  return out;
}

inline Eigen::MatrixXd embed(const ExtendedElement& g) {
  const auto n = static_cast<Eigen::Index>(g.phi.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n + 5, n + 5);
  for (Eigen::Index i = 0; i < n; ++i) {
    m(i, i) = g.nu;
    m(i, n + 4) = g.nu * g.phi[static_cast<std::size_t>(i)];
  }
  m.block<4, 4>(n, n) = g.L.matrix();
  m.block<4, 1>(n, n + 4) = g.C;
  m(n + 4, n + 4) = 1.0;
  return m;
}

inline Eigen::MatrixXd embed(const ExtendedLieElement& d) {
  const auto n = static_cast<Eigen::Index>(d.dphi.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n + 5, n + 5);
  for (Eigen::Index i = 0; i < n; ++i) m(i, n + 4) = d.dphi[static_cast<std::size_t>(i)];
  m.block<4, 4>(n, n) = gram() * d.omega;
  m.block<4, 1>(n, n + 4) = d.gamma;
  return m;
}

inline ExtendedLieElement extract_extended_lie(const Eigen::MatrixXd& m, std::size_t n) {
  const auto k = static_cast<Eigen::Index>(n);
  ExtendedLieElement d;
  d.dphi.resize(n);
  for (Eigen::Index i = 0; i < k; ++i) d.dphi[static_cast<std::size_t>(i)] = m(i, k + 4);
  d.omega = gram() * m.block<4, 4>(k, k);
  d.gamma = m.block<4, 1>(k, k + 4);
  return d;
}

/// g·d·g⁻¹ on embedded matrices.
inline ExtendedLieElement adjoint_ext(const ExtendedElement& g, const ExtendedLieElement& d) {
  detail::check_same_size(g.phi.size(), d.dphi.size(), "adjoint_ext");
  return extract_extended_lie(embed(g) * embed(d) * embed(inverse_ext(g)), d.dphi.size());
}

/// δφ' = ν δφ; (ω, γ) as for the Poincaré group.
inline ExtendedLieElement adjoint_ext_closed_form(const ExtendedElement& g,
                                                  const ExtendedLieElement& d) {
  detail::check_same_size(g.phi.size(), d.dphi.size(), "adjoint_ext");
  const LieElement pd = adjoint_closed_form({g.L, g.C}, {d.omega, d.gamma});
  ExtendedLieElement out{d.dphi, pd.omega, pd.gamma};
  for (double& x : out.dphi) x *= g.nu;
  return out;
}

/// q' = ν q; (M, P) exactly as the Poincaré coadjoint action.
inline ChargedMomentum coadjoint_ext(const ExtendedElement& g, const ChargedMomentum& j) {
  detail::check_same_size(g.phi.size(), j.q.size(), "coadjoint_ext");
  const Momentum pj = coadjoint({g.L, g.C}, j.poincare_part());
  ChargedMomentum out{j.q, pj.M, pj.P};
  const double s = detail::transcribed_sign<detail::kExtendedCharge>() * g.nu;
  for (double& q : out.q) q *= s;
  return out;
}

/// S = Σ qᵢ δφᵢ + ½ Tr(M ω) + ᵗP G γ.
inline double invariant_scalar_ext(const ChargedMomentum& j, const ExtendedLieElement& d) {
  detail::check_same_size(j.q.size(), d.dphi.size(), "invariant_scalar_ext");
  double s = invariant_scalar(j.poincare_part(), {d.omega, d.gamma});
  for (std::size_t i = 0; i < j.q.size(); ++i) s += j.q[i] * d.dphi[i];
  return s;
}

/// The ν = −1, φ = 0, L = 1, C = 0 element.
inline ExtendedElement c_symmetry_element(std::size_t n) {
  return {-1, Scalars(n, 0.0), {}, Vec4::Zero()};
}

inline ChargedMomentum c_symmetry(const ChargedMomentum& j) {
  return coadjoint_ext(c_symmetry_element(j.q.size()), j);
}

}  // namespace dyngroup

#endif  // DYNGROUP_EXTENDED_HPP
