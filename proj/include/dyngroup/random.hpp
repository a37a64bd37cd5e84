#ifndef DYNGROUP_RANDOM_HPP
#define DYNGROUP_RANDOM_HPP

// Seeded generators for group elements, Lie elements and momenta.
// Uniform draws are built directly from mt19937_64 output so the same seed
// produces the same stream on every standard library.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>

#include "dyngroup/extended.hpp"
#include "dyngroup/minkowski.hpp"
#include "dyngroup/poincare.hpp"
#include "dyngroup/twinfold.hpp"

namespace dyngroup {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed = 0) : rng_(seed) {}

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  int sign() { return (rng_() >> 63) != 0 ? -1 : 1; }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(unit() * static_cast<double>(n)); }

  Vec3 axis() {
    const double z = uniform(-1.0, 1.0);
    const double phi = uniform(0.0, 2.0 * std::numbers::pi);
    const double r = std::sqrt(1.0 - z * z);
    return Vec3(r * std::cos(phi), r * std::sin(phi), z).normalized();
  }

  double rapidity() { return uniform(-3.0, 3.0); }
  double angle() { return uniform(0.0, 2.0 * std::numbers::pi); }

  LorentzMatrix random_boost() {
    const Vec3 n = axis();
    return boost(n, rapidity());
  }
  LorentzMatrix random_rotation() {
    const Vec3 n = axis();
    return rotation(n, angle());
  }
  LorentzMatrix neutral() {
    const LorentzMatrix b = random_boost();
    return b * random_rotation();
  }
  LorentzMatrix random_sign_matrix() {
    const int alpha = sign();
    return omega_factor(alpha, sign());
  }

  /// Ω(α, β)·L_n with uniform discrete signs.
  LorentzMatrix lorentz() {
    const LorentzMatrix o = random_sign_matrix();
    return o * neutral();
  }
  LorentzMatrix lorentz_in(ConnectedComponent c) { return representative(c) * neutral(); }
  LorentzMatrix orthochron() {
    const LorentzMatrix o = omega_factor(sign(), 1);
    return o * neutral();
  }

  /// Product of 1..max_factors boosts, rotations and sign matrices.
  LorentzMatrix lorentz_product(int max_factors) {
    const int k = 1 + static_cast<int>(index(static_cast<std::size_t>(max_factors)));
    LorentzMatrix l;
    for (int i = 0; i < k; ++i) {
      switch (index(3)) {
        case 0:
          l = l * random_boost();
          break;
        case 1:
          l = l * random_rotation();
          break;
        default:
          l = l * random_sign_matrix();
          break;
      }
    }
    return l;
  }

  Vec4 four_vector(double scale = 1.0) {
    return Vec4{uniform(-scale, scale), uniform(-scale, scale), uniform(-scale, scale),
                uniform(-scale, scale)};
  }

  Mat4 antisymmetric(double scale = 1.0) {
    Mat4 m = Mat4::Zero();
    for (int i = 0; i < 4; ++i) {
      for (int k = i + 1; k < 4; ++k) {
        m(i, k) = uniform(-scale, scale);
        m(k, i) = -m(i, k);
      }
    }
    return m;
  }

  Scalars scalars(std::size_t n, double scale = 1.0) {
    Scalars v(n);
    for (double& x : v) x = uniform(-scale, scale);
    return v;
  }

  /// Timelike P with mass in [0.5, 2], random energy sign, moderate boost.
  Vec4 timelike(int energy_sign = 0) {
    const double m = uniform(0.5, 2.0);
    const double chi = uniform(0.0, 2.0);
    const Vec3 n = axis();
    const int s = energy_sign == 0 ? sign() : energy_sign;
    return s * Vec4(m * std::sinh(chi) * n.x(), m * std::sinh(chi) * n.y(),
                    m * std::sinh(chi) * n.z(), m * std::cosh(chi));
  }

  PoincareElement poincare() { return {lorentz(), four_vector(2.0)}; }
  LieElement lie() { return {antisymmetric(), four_vector()}; }
  Momentum momentum() { return {antisymmetric(), four_vector(2.0)}; }
  Momentum massive_momentum() { return {antisymmetric(), timelike()}; }

  ExtendedElement extended(std::size_t n, bool allow_nu_flip = true) {
    return {allow_nu_flip ? sign() : 1, scalars(n, 2.0), lorentz(), four_vector(2.0)};
  }
  ExtendedLieElement extended_lie(std::size_t n) {
    return {scalars(n), antisymmetric(), four_vector()};
  }
  ChargedMomentum charged(std::size_t n) {
    return {scalars(n, 2.0), antisymmetric(), four_vector(2.0)};
  }
  ChargedMomentum charged_massive(std::size_t n) {
    return {scalars(n, 2.0), antisymmetric(), timelike()};
  }

  TwinElement twin(std::size_t n, bool allow_nu_flip = true) {
    return {sign(), allow_nu_flip ? sign() : 1, scalars(n, 2.0), orthochron(), four_vector(2.0)};
  }
  TwinElement twin(std::size_t n, int mu, int nu, ConnectedComponent parity) {
    return {mu, nu, scalars(n, 2.0), lorentz_in(parity), four_vector(2.0)};
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace dyngroup

#endif  // DYNGROUP_RANDOM_HPP
