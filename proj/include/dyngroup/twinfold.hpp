#ifndef DYNGROUP_TWINFOLD_HPP
#define DYNGROUP_TWINFOLD_HPP

// Dynamical group on the two-fold cover of space-time, optionally carrying
// n charge dimensions. The embedded (n+6)×(n+6) matrix is
//
//   [ mu   0          0        0        ]   fold index
//   [ 0    mu·nu·1_n  0        mu·nu·phi]   extra dimensions
//   [ 0    0          mu·L_o   C        ]   space-time
//   [ 0    0          0        1        ]
//
// The Lorentz slot mu·L_o is stored split: mu separately and L_o forced
// orthochron. With nu = +1 and n = 0 this is the uncharged twin-fold group.

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dyngroup/errors.hpp"
#include "dyngroup/extended.hpp"
#include "dyngroup/minkowski.hpp"
#include "dyngroup/mutation.hpp"
#include "dyngroup/poincare.hpp"
#include "dyngroup/reduction.hpp"

namespace dyngroup {

using TwinMomentum = ChargedMomentum;

class TwinElement {
 public:
  TwinElement() = default;

  /// Throws ValidationError unless L_o is orthochron and mu, nu are signs.
  TwinElement(int mu, int nu, Scalars phi, const LorentzMatrix& l_o, const Vec4& c)
      : mu_(mu), nu_(nu), phi_(std::move(phi)), l_o_(l_o), c_(c) {
    detail::check_sign(mu, "mu");
    detail::check_sign(nu, "nu");
    if (!l_o.orthochron()) throw ValidationError("L_o must be orthochron");
  }

  /// Normalizes a full Lorentz slot L = mu·L_o.
  static TwinElement from_lorentz_slot(int nu, Scalars phi, const LorentzMatrix& slot,
                                       const Vec4& c) {
    const SignDecomposition d = sign_decompose(slot);
    return {d.mu, nu, std::move(phi), d.orthochron_part, c};
  }

  static TwinElement identity(std::size_t n) {
    return {1, 1, Scalars(n, 0.0), LorentzMatrix{}, Vec4::Zero()};
  }

  int mu() const { return mu_; }
  int nu() const { return nu_; }
  const Scalars& phi() const { return phi_; }
  const LorentzMatrix& L_o() const { return l_o_; }
  const Vec4& C() const { return c_; }
  std::size_t charge_count() const { return phi_.size(); }

  /// mu·L_o as a plain Lorentz matrix.
  LorentzMatrix lorentz_slot() const { return mu_ > 0 ? l_o_ : -l_o_; }

 private:
  int mu_ = 1;
  int nu_ = 1;
  Scalars phi_;
  LorentzMatrix l_o_;
  Vec4 c_ = Vec4::Zero();
};

struct TwinPoint {
  int fold = 1;
  Scalars zeta;
  Vec4 x = Vec4::Zero();
};

struct ParticleState {
  int fold = 1;
  TwinMomentum momentum;
};

inline TwinElement compose_twin(const TwinElement& a, const TwinElement& b) {
  detail::check_same_size(a.charge_count(), b.charge_count(), "compose_twin");
  const int ab = b.mu() * b.nu();
  Scalars phi(a.charge_count());
  for (std::size_t i = 0; i < phi.size(); ++i) phi[i] = b.phi()[i] + ab * a.phi()[i];
  const LorentzMatrix l_o = a.L_o() * b.L_o();
  if (!l_o.orthochron()) throw std::logic_error("orthochron product left the subgroup");
  return {a.mu() * b.mu(), a.nu() * b.nu(), std::move(phi), l_o,
          a.mu() * (a.L_o() * b.C()) + a.C()};
}

inline TwinElement inverse_twin(const TwinElement& g) {
  const int mn = g.mu() * g.nu();
  Scalars phi(g.charge_count());
  for (std::size_t i = 0; i < phi.size(); ++i) phi[i] = -mn * g.phi()[i];
  const LorentzMatrix inv = g.L_o().inverse();
  return {g.mu(), g.nu(), std::move(phi), inv, -g.mu() * (inv * g.C())};
}

/// fold' = μ fold, ζ' = μνζ + μνφ, x' = μ L_o x + C.
inline TwinPoint act_on_twin_point(const TwinElement& g, const TwinPoint& p) {
  detail::check_sign(p.fold, "fold");
  detail::check_same_size(g.charge_count(), p.zeta.size(), "act_on_twin_point");
  const double mn = g.mu() * g.nu();
  TwinPoint out;
  out.fold = g.mu() * p.fold;
  out.zeta.resize(p.zeta.size());
  for (std::size_t i = 0; i < p.zeta.size(); ++i) out.zeta[i] = mn * p.zeta[i] + mn * g.phi()[i];
  out.x = g.mu() * (g.L_o() * p.x) + g.C();
  return out;
}

inline Eigen::MatrixXd embed(const TwinElement& g) {
  const auto n = static_cast<Eigen::Index>(g.charge_count());
  const double mn = g.mu() * g.nu();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n + 6, n + 6);
  m(0, 0) = g.mu();
  for (Eigen::Index i = 0; i < n; ++i) {
    m(1 + i, 1 + i) = mn;
    m(1 + i, n + 5) = mn * g.phi()[static_cast<std::size_t>(i)];
  }
  m.block<4, 4>(n + 1, n + 1) = g.mu() * g.L_o().matrix();
  m.block<4, 1>(n + 1, n + 5) = g.C();
  m(n + 5, n + 5) = 1.0;
  return m;
}

/// Lie algebra element in the twin embedding (empty fold row).
inline Eigen::MatrixXd embed_twin(const ExtendedLieElement& d) {
  const auto n = static_cast<Eigen::Index>(d.dphi.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n + 6, n + 6);
  for (Eigen::Index i = 0; i < n; ++i) m(1 + i, n + 5) = d.dphi[static_cast<std::size_t>(i)];
  m.block<4, 4>(n + 1, n + 1) = gram() * d.omega;
  m.block<4, 1>(n + 1, n + 5) = d.gamma;
  return m;
}

inline ExtendedLieElement extract_twin_lie(const Eigen::MatrixXd& m, std::size_t n) {
  const auto k = static_cast<Eigen::Index>(n);
  ExtendedLieElement d;
  d.dphi.resize(n);
  for (Eigen::Index i = 0; i < k; ++i) d.dphi[static_cast<std::size_t>(i)] = m(1 + i, k + 5);
  d.omega = gram() * m.block<4, 4>(k + 1, k + 1);
  d.gamma = m.block<4, 1>(k + 1, k + 5);
  return d;
}

/// g·d·g⁻¹ on embedded matrices.
inline ExtendedLieElement adjoint_twin(const TwinElement& g, const ExtendedLieElement& d) {
  detail::check_same_size(g.charge_count(), d.dphi.size(), "adjoint_twin");
  return extract_twin_lie(embed(g) * embed_twin(d) * embed(inverse_twin(g)), d.dphi.size());
}

/// δφ' = μν δφ, ω' = ᵗL_o⁻¹ ω L_o⁻¹, γ' = −L_o G ω L_o⁻¹ C + μ L_o γ.
inline ExtendedLieElement adjoint_twin_closed_form(const TwinElement& g,
                                                   const ExtendedLieElement& d) {
  detail::check_same_size(g.charge_count(), d.dphi.size(), "adjoint_twin");
  const Mat4& lo = g.L_o().matrix();
  const Mat4 loinv = g.L_o().inverse().matrix();
  ExtendedLieElement out;
  out.dphi = d.dphi;
  for (double& x : out.dphi) x *= g.mu() * g.nu();
  out.omega = loinv.transpose() * d.omega * loinv;
  out.gamma = -lo * gram() * d.omega * loinv * g.C() + g.mu() * (lo * d.gamma);
  return out;
}

/// q' = μν q, P' = μ L_o P, M' = L_o M ᵗL_o + μ (C ᵗP ᵗL_o − L_o P ᵗC).
inline TwinMomentum coadjoint_twin(const TwinElement& g, const TwinMomentum& j) {
  using namespace detail;
  check_same_size(g.charge_count(), j.q.size(), "coadjoint_twin");
  const Mat4& lo = g.L_o().matrix();
  const double mu = g.mu();
  const Vec4 lp = lo * j.P;
  TwinMomentum out;
  out.q = j.q;
  const double qs = transcribed_sign<kTwinCharge>() * g.mu() * g.nu();
  for (double& q : out.q) q *= qs;
  out.P = transcribed_sign<kTwinEnergyMomentum>() * mu * lp;
  out.M = lo * j.M * lo.transpose() +
          transcribed_sign<kTwinTranslation>() * mu *
              (g.C() * lp.transpose() - lp * g.C().transpose());
  return out;
}

inline ParticleState act_on_state(const TwinElement& g, const ParticleState& s) {
  detail::check_sign(s.fold, "fold");
  return {g.mu() * s.fold, coadjoint_twin(g, s.momentum)};
}

enum class SymmetryTag {
  Identity,              // mu = +1, nu = +1
  ChargeConjugation,     // mu = +1, nu = -1: antimatter in our fold
  TwinFoldAntimatter,    // mu = -1, nu = +1: fold change, charges flip
  FoldChangeSameCharge,  // mu = -1, nu = -1: fold change, charges kept
};

inline constexpr std::string_view to_string(SymmetryTag t) {
  switch (t) {
    case SymmetryTag::Identity:
      return "identity";
    case SymmetryTag::ChargeConjugation:
      return "C";
    case SymmetryTag::TwinFoldAntimatter:
      return "twin-fold antimatter";
    case SymmetryTag::FoldChangeSameCharge:
      return "fold change, charge preserving";
  }
  return "?";
}

struct SymmetryClass {
  SymmetryTag tag;
  int mu;
  int nu;
  ConnectedComponent parity;  // component of L_o: Neutral or SpaceReversing
};

inline SymmetryClass classify_symmetry(const TwinElement& g) {
  SymmetryTag tag;
  if (g.mu() > 0) {
    tag = g.nu() > 0 ? SymmetryTag::Identity : SymmetryTag::ChargeConjugation;
  } else {
    tag = g.nu() > 0 ? SymmetryTag::TwinFoldAntimatter : SymmetryTag::FoldChangeSameCharge;
  }
  return {tag, g.mu(), g.nu(), g.L_o().component()};
}

enum class Effect { Same, Reversed, Mixed };

inline constexpr std::string_view to_string(Effect e) {
  switch (e) {
    case Effect::Same:
      return "same";
    case Effect::Reversed:
      return "reversed";
    case Effect::Mixed:
      return "mixed";
  }
  return "?";
}

struct SymmetryEffect {
  SymmetryClass symmetry;
  Effect energy;
  Effect linear_momentum;
  Effect charge;
  Effect spin;  // Same when the spin scalar is unchanged
  Effect fold;
};

namespace detail {

template <class V>
Effect compare_effect(const V& before, const V& after, double tol) {
  if ((after - before).cwiseAbs().maxCoeff() <= tol) return Effect::Same;
  if ((after + before).cwiseAbs().maxCoeff() <= tol) return Effect::Reversed;
  return Effect::Mixed;
}

inline Effect compare_scalar(double before, double after, double tol) {
  return compare_effect(Eigen::Matrix<double, 1, 1>(before), Eigen::Matrix<double, 1, 1>(after),
                        tol);
}

/// Massive, charged, spinning probe with every component nonzero.
inline ParticleState effect_probe() {
  ParticleState s;
  s.fold = 1;
  s.momentum.q = {1.0};
  s.momentum.P = Vec4(0.3, -0.4, 0.5, 2.0);
  s.momentum.M = spin_passage_recompose(Vec3(0.2, -0.1, 0.7), Vec3(0.05, 0.1, -0.2));
  return s;
}

}  // namespace detail

/// One row per (mu, nu, parity of L_o), obtained by applying the sign
/// representative to a probe state and comparing before/after.
inline std::vector<SymmetryEffect> symmetry_effect_table(double tol = kDefaultTol) {
  const ParticleState probe = detail::effect_probe();
  const double spin0 = spin_scalar(probe.momentum.poincare_part(), tol);
  std::vector<SymmetryEffect> rows;
  for (int mu : {1, -1}) {
    for (int nu : {1, -1}) {
      for (ConnectedComponent parity :
           {ConnectedComponent::Neutral, ConnectedComponent::SpaceReversing}) {
        const TwinElement g(mu, nu, Scalars(probe.momentum.q.size(), 0.0),
                            representative(parity), Vec4::Zero());
        const ParticleState after = act_on_state(g, probe);
        const TwinMomentum& a = after.momentum;
        const Eigen::Map<const Eigen::VectorXd> q0(probe.momentum.q.data(),
                                                   static_cast<Eigen::Index>(probe.momentum.q.size()));
        const Eigen::Map<const Eigen::VectorXd> q1(a.q.data(), static_cast<Eigen::Index>(a.q.size()));
        const double spin1 = spin_scalar(a.poincare_part(), tol);
        rows.push_back({classify_symmetry(g),
                        detail::compare_scalar(probe.momentum.P[kTime], a.P[kTime], tol),
                        detail::compare_effect(Vec3(probe.momentum.P.head<3>()), Vec3(a.P.head<3>()), tol),
                        detail::compare_effect(Eigen::VectorXd(q0), Eigen::VectorXd(q1), tol),
                        std::abs(spin1 - spin0) <= tol ? Effect::Same : Effect::Mixed,
                        after.fold == probe.fold ? Effect::Same : Effect::Reversed});
      }
    }
  }
  return rows;
}

}  // namespace dyngroup

#endif  // DYNGROUP_TWINFOLD_HPP
