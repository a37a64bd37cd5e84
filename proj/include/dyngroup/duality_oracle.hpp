#ifndef DYNGROUP_DUALITY_ORACLE_HPP
#define DYNGROUP_DUALITY_ORACLE_HPP

// Brute-force coadjoint action. For a group element g the transformed
// momentum J' is the unique solution of
//
//   S(J', Ad_g b_k) = S(J, b_k)   for every basis element b_k,
//
// where Ad_g is matrix conjugation and S is the pairing scalar. Nothing in
// here touches the closed-form coadjoint maps, so it can be used to check
// them.

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <vector>

#include "dyngroup/errors.hpp"
#include "dyngroup/extended.hpp"
#include "dyngroup/poincare.hpp"
#include "dyngroup/twinfold.hpp"

namespace dyngroup {

inline constexpr double kPivotTolerance = 1e-12;

/// Canonical basis of the (10 + n)-dimensional Lie algebra: n charge
/// translations, 3 rotations, 3 boosts, 4 space-time translations.
inline std::vector<ExtendedLieElement> lie_basis(std::size_t n) {
  std::vector<ExtendedLieElement> basis;
  basis.reserve(n + 10);
  const auto blank = [n] {
    ExtendedLieElement d;
    d.dphi.assign(n, 0.0);
    return d;
  };
  for (std::size_t i = 0; i < n; ++i) {
    auto d = blank();
    d.dphi[i] = 1.0;
    basis.push_back(d);
  }
  constexpr int kPairs[6][2] = {{1, 2}, {2, 0}, {0, 1}, {0, 3}, {1, 3}, {2, 3}};
  for (const auto& pr : kPairs) {
    auto d = blank();
    d.omega(pr[0], pr[1]) = 1.0;
    d.omega(pr[1], pr[0]) = -1.0;
    basis.push_back(d);
  }
  for (int i = 0; i < 4; ++i) {
    auto d = blank();
    d.gamma[i] = 1.0;
    basis.push_back(d);
  }
  return basis;
}

/// Serialized momentum: (q_1..q_n, E, p_x, p_y, p_z, j_x, j_y, j_z, l_x, l_y, l_z).
inline Eigen::VectorXd charged_coordinates(const ChargedMomentum& j) {
  const auto n = static_cast<Eigen::Index>(j.q.size());
  Eigen::VectorXd v(n + 10);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = j.q[static_cast<std::size_t>(i)];
  const auto c = momentum_coordinates(j.poincare_part());
  for (int i = 0; i < 10; ++i) v[n + i] = c[static_cast<std::size_t>(i)];
  return v;
}

inline ChargedMomentum charged_from_coordinates(const Eigen::VectorXd& v, std::size_t n) {
  std::array<double, 10> c{};
  for (int i = 0; i < 10; ++i) c[static_cast<std::size_t>(i)] = v[static_cast<Eigen::Index>(n) + i];
  const Momentum pj = momentum_from_coordinates(c);
  ChargedMomentum j{Scalars(n), pj.M, pj.P};
  for (std::size_t i = 0; i < n; ++i) j.q[i] = v[static_cast<Eigen::Index>(i)];
  return j;
}

/// Dense LU with partial pivoting; a pivot below kPivotTolerance is a
/// structural failure.
class PivotedLU {
 public:
  explicit PivotedLU(Eigen::MatrixXd a) : lu_(std::move(a)), perm_(lu_.rows()) {
    const Eigen::Index n = lu_.rows();
    if (lu_.cols() != n) throw StructuralFailure("pairing system is not square");
    for (Eigen::Index i = 0; i < n; ++i) perm_[i] = i;
    for (Eigen::Index k = 0; k < n; ++k) {
      Eigen::Index piv = k;
      for (Eigen::Index r = k + 1; r < n; ++r) {
        if (std::abs(lu_(r, k)) > std::abs(lu_(piv, k))) piv = r;
      }
      if (!(std::abs(lu_(piv, k)) >= kPivotTolerance)) {
        throw StructuralFailure("singular pairing system at column " + std::to_string(k));
      }
      if (piv != k) {
        lu_.row(k).swap(lu_.row(piv));
        std::swap(perm_[k], perm_[piv]);
      }
      for (Eigen::Index r = k + 1; r < n; ++r) {
        lu_(r, k) /= lu_(k, k);
        lu_.row(r).tail(n - k - 1) -= lu_(r, k) * lu_.row(k).tail(n - k - 1);
      }
    }
  }

  Eigen::VectorXd solve(const Eigen::VectorXd& b) const {
    const Eigen::Index n = lu_.rows();
    Eigen::VectorXd x(n);
    for (Eigen::Index i = 0; i < n; ++i) x[i] = b[perm_[i]];
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index k = 0; k < i; ++k) x[i] -= lu_(i, k) * x[k];
    }
    for (Eigen::Index i = n - 1; i >= 0; --i) {
      for (Eigen::Index k = i + 1; k < n; ++k) x[i] -= lu_(i, k) * x[k];
      x[i] /= lu_(i, i);
    }
    return x;
  }

 private:
  Eigen::MatrixXd lu_;
  Eigen::VectorXi perm_;
};

/// A[k][i] = S(e_i, b_k) for the canonical basis and unit momentum coordinates.
inline Eigen::MatrixXd pairing_matrix(std::size_t n) {
  const auto basis = lie_basis(n);
  const auto dim = static_cast<Eigen::Index>(n + 10);
  Eigen::MatrixXd a(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const ChargedMomentum e = charged_from_coordinates(Eigen::VectorXd::Unit(dim, i), n);
    for (Eigen::Index k = 0; k < dim; ++k) {
      a(k, i) = invariant_scalar_ext(e, basis[static_cast<std::size_t>(k)]);
    }
  }
  return a;
}

/// 1-norm condition number of pairing_matrix(n).
inline double pairing_condition_number(std::size_t n) {
  const Eigen::MatrixXd a = pairing_matrix(n);
  const PivotedLU lu(a);
  const auto dim = a.rows();
  Eigen::MatrixXd inv(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) inv.col(i) = lu.solve(Eigen::VectorXd::Unit(dim, i));
  const auto norm1 = [](const Eigen::MatrixXd& m) { return m.cwiseAbs().colwise().sum().maxCoeff(); };
  return norm1(a) * norm1(inv);
}

/// Factored duality system for one group element; apply() is linear in J.
class CoadjointReconstruction {
 public:
  /// `adjoint` maps a Lie element through Ad_g (by conjugation).
  template <class AdjointFn>
  CoadjointReconstruction(std::size_t n, AdjointFn&& adjoint)
      : n_(n), basis_(lie_basis(n)), lu_(build(n, basis_, adjoint)) {}

  ChargedMomentum apply(const ChargedMomentum& j) const {
    detail::check_same_size(j.q.size(), n_, "reconstruct_coadjoint");
    Eigen::VectorXd rhs(static_cast<Eigen::Index>(basis_.size()));
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      rhs[static_cast<Eigen::Index>(k)] = invariant_scalar_ext(j, basis_[k]);
    }
    return charged_from_coordinates(lu_.solve(rhs), n_);
  }

 private:
  template <class AdjointFn>
  static PivotedLU build(std::size_t n, const std::vector<ExtendedLieElement>& basis,
                         AdjointFn& adjoint) {
    const auto dim = static_cast<Eigen::Index>(basis.size());
    std::vector<ExtendedLieElement> moved;
    moved.reserve(basis.size());
    for (const auto& b : basis) moved.push_back(adjoint(b));
    Eigen::MatrixXd sys(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      const ChargedMomentum e = charged_from_coordinates(Eigen::VectorXd::Unit(dim, i), n);
      for (Eigen::Index k = 0; k < dim; ++k) {
        sys(k, i) = invariant_scalar_ext(e, moved[static_cast<std::size_t>(k)]);
      }
    }
    return PivotedLU(std::move(sys));
  }

  std::size_t n_;
  std::vector<ExtendedLieElement> basis_;
  PivotedLU lu_;
};

inline CoadjointReconstruction make_reconstruction(const PoincareElement& g) {
  return CoadjointReconstruction(0, [&g](const ExtendedLieElement& d) {
    const LieElement a = adjoint(g, {d.omega, d.gamma});
    return ExtendedLieElement{{}, a.omega, a.gamma};
  });
}

inline CoadjointReconstruction make_reconstruction(const ExtendedElement& g) {
  return CoadjointReconstruction(g.charge_count(),
                                 [&g](const ExtendedLieElement& d) { return adjoint_ext(g, d); });
}

inline CoadjointReconstruction make_reconstruction(const TwinElement& g) {
  return CoadjointReconstruction(g.charge_count(),
                                 [&g](const ExtendedLieElement& d) { return adjoint_twin(g, d); });
}

inline Momentum reconstruct_coadjoint(const PoincareElement& g, const Momentum& j) {
  return make_reconstruction(g).apply({{}, j.M, j.P}).poincare_part();
}

inline ChargedMomentum reconstruct_coadjoint(const ExtendedElement& g, const ChargedMomentum& j) {
  return make_reconstruction(g).apply(j);
}

inline ChargedMomentum reconstruct_coadjoint(const TwinElement& g, const ChargedMomentum& j) {
  return make_reconstruction(g).apply(j);
}

}  // namespace dyngroup

#endif  // DYNGROUP_DUALITY_ORACLE_HPP
