#ifndef DYNGROUP_VERIFY_HPP
#define DYNGROUP_VERIFY_HPP

// Seeded property suites over every group. Each suite draws from its own
// generator (seed mixed with the suite name), so results do not depend on
// which other suites ran. Results come back ordered by suite name.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "dyngroup/duality_oracle.hpp"
#include "dyngroup/extended.hpp"
#include "dyngroup/minkowski.hpp"
#include "dyngroup/poincare.hpp"
#include "dyngroup/random.hpp"
#include "dyngroup/reduction.hpp"
#include "dyngroup/twinfold.hpp"

namespace dyngroup {

struct PropertyResult {
  std::string name;
  bool pass = true;
  std::size_t cases = 0;
  std::size_t failures = 0;
  double max_residual = 0.0;
  double threshold = 0.0;  // 0 for exact checks
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  double tol = kDefaultTol;
  /// Random cases per suite; 0 keeps each suite's default count.
  std::size_t cases = 0;
};

namespace verify_detail {

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Accumulates residuals against a threshold; threshold 0 means exact.
class Tally {
 public:
  Tally(std::string name, double threshold) : r_{std::move(name), true, 0, 0, 0.0, threshold} {}

  void residual(double value) {
    ++r_.cases;
    if (!(value <= r_.threshold)) {
      ++r_.failures;
      r_.pass = false;
    }
    if (std::isnan(value)) {
      r_.max_residual = INFINITY;
    } else {
      r_.max_residual = std::max(r_.max_residual, value);
    }
  }

  void check(bool ok) { residual(ok ? 0.0 : 1.0); }

  PropertyResult result() const { return r_; }

 private:
  PropertyResult r_;
};

inline double max_abs(const Eigen::MatrixXd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

/// max|a − b| / (1 + max|b|).
inline double scaled_diff(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return max_abs(a - b) / (1.0 + max_abs(b));
}

inline Eigen::VectorXd flatten(const ChargedMomentum& j) { return charged_coordinates(j); }
inline Eigen::VectorXd flatten(const Momentum& j) { return charged_coordinates({{}, j.M, j.P}); }

inline Eigen::VectorXd flatten(const ExtendedLieElement& d) {
  const auto n = static_cast<Eigen::Index>(d.dphi.size());
  Eigen::VectorXd v(n + 20);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = d.dphi[static_cast<std::size_t>(i)];
  v.segment<16>(n) = Eigen::Map<const Eigen::Matrix<double, 16, 1>>(d.omega.data());
  v.segment<4>(n + 16) = d.gamma;
  return v;
}

inline Eigen::VectorXd flatten(const LieElement& d) { return flatten(ExtendedLieElement{{}, d.omega, d.gamma}); }

template <class A, class B>
double momentum_diff(const A& a, const B& b) {
  return scaled_diff(flatten(a), flatten(b));
}

inline double relative(double a, double b) { return std::abs(a - b) / (1.0 + std::abs(b)); }

inline int sgn(double x) { return x > 0.0 ? 1 : (x < 0.0 ? -1 : 0); }

inline bool exact_charges(const Scalars& before, const Scalars& after, int factor) {
  if (before.size() != after.size()) return false;
  for (std::size_t i = 0; i < before.size(); ++i) {
    if (after[i] != factor * before[i]) return false;
  }
  return true;
}

struct Context {
  const VerifyOptions& opt;
  std::size_t count(std::size_t fallback) const { return opt.cases ? opt.cases : fallback; }
  Sampler sampler(std::string_view name) const { return Sampler(opt.seed ^ fnv1a(name)); }
};

using Suite = std::function<PropertyResult(const Context&)>;

constexpr ConnectedComponent kAllComponents[] = {
    ConnectedComponent::Neutral, ConnectedComponent::SpaceReversing,
    ConnectedComponent::TimeReversing, ConnectedComponent::SpaceTimeReversing};

constexpr ConnectedComponent kOrthochron[] = {ConnectedComponent::Neutral,
                                              ConnectedComponent::SpaceReversing};

inline ConnectedComponent product_component(ConnectedComponent a, ConnectedComponent b) {
  const auto det = [](ConnectedComponent c) {
    return c == ConnectedComponent::Neutral || c == ConnectedComponent::SpaceTimeReversing ? 1 : -1;
  };
  const auto time = [](ConnectedComponent c) { return is_orthochron(c) ? 1 : -1; };
  return detail::component_from_signs(det(a) * det(b), time(a) * time(b));
}

// ---- Lorentz ---------------------------------------------------------------

inline PropertyResult lorentz_metric(const Context& ctx) {
  Tally t("lorentz.metric_preservation", 1e-10);
  Sampler s = ctx.sampler("lorentz.metric_preservation");
  for (std::size_t i = 0; i < ctx.count(1000); ++i) t.residual(lorentz_residual(s.lorentz_product(5).matrix()));
  return t.result();
}

inline PropertyResult lorentz_components(const Context& ctx) {
  Tally t("lorentz.component_table", 0.0);
  Sampler s = ctx.sampler("lorentz.component_table");
  for (ConnectedComponent c : kAllComponents) t.check(classify_component(representative(c).matrix()) == c);
  for (std::size_t i = 0; i < ctx.count(2000); ++i) {
    const ConnectedComponent ca = kAllComponents[s.index(4)];
    const ConnectedComponent cb = kAllComponents[s.index(4)];
    const LorentzMatrix a = s.lorentz_in(ca);
    const LorentzMatrix b = s.lorentz_in(cb);
    const LorentzMatrix ab(a.matrix() * b.matrix(), 1e-8);
    bool ok = a.component() == ca && b.component() == cb && ab.component() == product_component(ca, cb);
    if (is_orthochron(ca) && is_orthochron(cb)) ok = ok && ab.orthochron();
    if (is_antichron(ca) && is_antichron(cb)) ok = ok && ab.orthochron();
    if (is_antichron(ca) != is_antichron(cb)) ok = ok && ab.antichron();
    t.check(ok);
  }
  return t.result();
}

inline PropertyResult lorentz_factorization(const Context& ctx) {
  Tally t("lorentz.omega_factorization", 0.0);
  Sampler s = ctx.sampler("lorentz.omega_factorization");
  for (std::size_t i = 0; i < ctx.count(200); ++i) {
    const LorentzMatrix ln = s.neutral();
    t.check(ln.component() == ConnectedComponent::Neutral);
    t.check((omega_factor(-1, 1) * ln).component() == ConnectedComponent::SpaceReversing);
    t.check((omega_factor(1, -1) * ln).component() == ConnectedComponent::TimeReversing);
    const LorentzMatrix lst = omega_factor(-1, -1) * ln;
    t.check(lst.component() == ConnectedComponent::SpaceTimeReversing && lst.matrix() == -ln.matrix());
    const LorentzMatrix l = s.lorentz();
    const SignDecomposition d = sign_decompose(l);
    t.check(d.orthochron_part.orthochron() && (d.mu * d.orthochron_part.matrix()) == l.matrix());
  }
  return t.result();
}

// ---- Poincaré --------------------------------------------------------------

inline PropertyResult poincare_group_law(const Context& ctx) {
  Tally t("poincare.group_law", 1e-12);
  Sampler s = ctx.sampler("poincare.group_law");
  for (std::size_t i = 0; i < ctx.count(200); ++i) {
    const PoincareElement a = s.poincare();
    const PoincareElement b = s.poincare();
    t.residual(scaled_diff(embed(compose(a, b)), embed(a) * embed(b)));
    t.residual(scaled_diff(embed(inverse(a)), embed(a).inverse()));
  }
  return t.result();
}

inline PropertyResult poincare_adjoint(const Context& ctx) {
  Tally t("poincare.adjoint_closed_form", 1e-11);
  Sampler s = ctx.sampler("poincare.adjoint_closed_form");
  for (std::size_t i = 0; i < ctx.count(200); ++i) {
    const PoincareElement g = s.poincare();
    const LieElement d = s.lie();
    const LieElement conj = adjoint(g, d);
    t.residual(scaled_diff(flatten(adjoint_closed_form(g, d)), flatten(conj)));
    t.residual(scaled_diff(conj.omega + conj.omega.transpose(), Mat4::Zero()) /
               (1.0 + max_abs(conj.omega)));
  }
  return t.result();
}

inline PropertyResult poincare_duality(const Context& ctx) {
  Tally t("poincare.duality", 1e-10);
  Sampler s = ctx.sampler("poincare.duality");
  for (std::size_t i = 0; i < ctx.count(200); ++i) {
    const PoincareElement g = s.poincare();
    const Momentum j = s.momentum();
    const LieElement d = s.lie();
    const double before = invariant_scalar(j, d);
    const double after = invariant_scalar(coadjoint(g, j), adjoint(g, d));
    t.residual(std::abs(after - before) / (1.0 + std::abs(before)));
  }
  return t.result();
}

inline PropertyResult poincare_triple(const Context& ctx) {
  Tally t("poincare.triple_equivalence", ctx.opt.tol);
  Sampler s = ctx.sampler("poincare.triple_equivalence");
  for (std::size_t i = 0; i < ctx.count(100); ++i) {
    const PoincareElement g = s.poincare();
    const Momentum j = s.momentum();
    const Momentum closed = coadjoint(g, j);
    const Momentum matrix = from_momentum_matrix(coadjoint_matrix(g, momentum_matrix(j)));
    const Momentum oracle = reconstruct_coadjoint(g, j);
    t.residual(max_abs(flatten(closed) - flatten(matrix)));
    t.residual(max_abs(flatten(closed) - flatten(oracle)));
    t.residual(max_abs(flatten(matrix) - flatten(oracle)));
  }
  return t.result();
}

inline PropertyResult poincare_action_law(const Context& ctx) {
  Tally t("poincare.action_law", 1e-10);
  Sampler s = ctx.sampler("poincare.action_law");
  for (std::size_t i = 0; i < ctx.count(200); ++i) {
    const PoincareElement a = s.poincare();
    const PoincareElement b = s.poincare();
    const Momentum j = s.momentum();
    t.residual(momentum_diff(coadjoint(compose(a, b), j), coadjoint(a, coadjoint(b, j))));
  }
  return t.result();
}

inline PropertyResult poincare_antisymmetry(const Context& ctx) {
  Tally t("poincare.antisymmetry", 1e-11);
  Sampler s = ctx.sampler("poincare.antisymmetry");
  for (std::size_t i = 0; i < ctx.count(200); ++i) {
    const Momentum out = coadjoint(s.poincare(), s.momentum());
    t.residual(antisymmetry_residual(out.M) / (1.0 + max_abs(out.M)));
  }
  return t.result();
}

inline PropertyResult poincare_energy_sign(const Context& ctx) {
  Tally t("poincare.energy_sign", 0.0);
  Sampler s = ctx.sampler("poincare.energy_sign");
  for (std::size_t i = 0; i < ctx.count(200); ++i) {
    const PoincareElement g = s.poincare();
    const Momentum j = s.massive_momentum();
    t.check(sgn(coadjoint(g, j).energy()) == g.L.mu() * sgn(j.energy()));
  }
  return t.result();
}

// ---- Charged extensions ------------------------------------------------------

inline PropertyResult extended_duality_impl(const Context& ctx, const char* name, bool eight) {
  Tally t(name, 1e-10);
  Sampler s = ctx.sampler(name);
  const std::size_t per = ctx.count(eight ? 50 : 200);
  const int nus[] = {1, -1};
  for (int nu : nus) {
    if (!eight && nu < 0) continue;
    for (ConnectedComponent c : kAllComponents) {
      const std::size_t reps = eight ? per : per / 4 + 1;
      for (std::size_t i = 0; i < reps; ++i) {
        const std::size_t n = 1 + s.index(3);
        ExtendedElement g = s.extended(n, false);
        g.nu = nu;
        g.L = s.lorentz_in(c);
        const ChargedMomentum j = s.charged(n);
        const ExtendedLieElement d = s.extended_lie(n);
        const double before = invariant_scalar_ext(j, d);
        const double after = invariant_scalar_ext(coadjoint_ext(g, j), adjoint_ext(g, d));
        t.residual(std::abs(after - before) / (1.0 + std::abs(before)));
      }
    }
  }
  return t.result();
}

inline PropertyResult extended_duality(const Context& ctx) {
  return extended_duality_impl(ctx, "extended.duality", false);
}

inline PropertyResult eight_duality(const Context& ctx) {
  return extended_duality_impl(ctx, "eight.duality", true);
}

inline PropertyResult eight_group_law(const Context& ctx) {
  Tally t("eight.group_law", 1e-12);
  Sampler s = ctx.sampler("eight.group_law");
  for (std::size_t i = 0; i < ctx.count(200); ++i) {
    const std::size_t n = 1 + s.index(3);
    const ExtendedElement a = s.extended(n);
    const ExtendedElement b = s.extended(n);
    t.residual(scaled_diff(embed(compose_ext(a, b)), embed(a) * embed(b)));
    t.residual(scaled_diff(embed(inverse_ext(a)), embed(a).inverse()));
  }
  return t.result();
}

inline PropertyResult eight_adjoint(const Context& ctx) {
  Tally t("eight.adjoint_closed_form", 1e-11);
  Sampler s = ctx.sampler("eight.adjoint_closed_form");
  for (std::size_t i = 0; i < ctx.count(200); ++i) {
    const std::size_t n = 1 + s.index(3);
    const ExtendedElement g = s.extended(n);
    const ExtendedLieElement d = s.extended_lie(n);
    t.residual(scaled_diff(flatten(adjoint_ext_closed_form(g, d)), flatten(adjoint_ext(g, d))));
  }
  return t.result();
}

inline PropertyResult eight_charge_law(const Context& ctx) {
  Tally t("eight.charge_law", 0.0);
  Sampler s = ctx.sampler("eight.charge_law");
  for (std::size_t i = 0; i < ctx.count(200); ++i) {
    const std::size_t n = 1 + s.index(3);
    const ExtendedElement g = s.extended(n);
    const ChargedMomentum j = s.charged(n);
    t.check(exact_charges(j.q, coadjoint_ext(g, j).q, g.nu));
  }
  return t.result();
}

inline PropertyResult eight_oracle(const Context& ctx) {
  Tally t("eight.oracle", ctx.opt.tol);
  Sampler s = ctx.sampler("eight.oracle");
  for (std::size_t i = 0; i < ctx.count(100); ++i) {
    const std::size_t n = 1 + s.index(3);
    const ExtendedElement g = s.extended(n);
    const ChargedMomentum j = s.charged(n);
    t.residual(max_abs(flatten(coadjoint_ext(g, j)) - flatten(reconstruct_coadjoint(g, j))));
  }
  return t.result();
}

inline PropertyResult extended_restriction(const Context& ctx) {
  Tally t("extended.restriction", 0.0);
  Sampler s = ctx.sampler("extended.restriction");
  for (std::size_t i = 0; i < ctx.count(200); ++i) {
    const std::size_t n = 1 + s.index(3);
    const ExtendedElement g = s.extended(n);
    ChargedMomentum j = s.charged(n);
    j.q.assign(n, 0.0);
    const ChargedMomentum out = coadjoint_ext(g, j);
    const Momentum ref = coadjoint({g.L, g.C}, j.poincare_part());
    t.check(out.M == ref.M && out.P == ref.P);
  }
  return t.result();
}

inline PropertyResult c_symmetry_contract(const Context& ctx) {
  Tally t("extended.c_symmetry", 1e-12);
  Sampler s = ctx.sampler("extended.c_symmetry");
  for (std::size_t i = 0; i < ctx.count(200); ++i) {
    const std::size_t n = 1 + s.index(3);
    const ChargedMomentum j = s.charged_massive(n);
    const ChargedMomentum c = c_symmetry(j);
    const bool exact = exact_charges(j.q, c.q, -1) && c.P == j.P && c.M == j.M;
    t.residual(exact ? 0.0 : 1.0);
    t.residual(relative(mass_squared(c.P), mass_squared(j.P)));
    t.residual(relative(spin_scalar(c.poincare_part()), spin_scalar(j.poincare_part())));
    const ChargedMomentum cc = c_symmetry(c);
    t.residual(cc.q == j.q && cc.M == j.M && cc.P == j.P ? 0.0 : 1.0);
  }
  return t.result();
}

// ---- Twin-fold -------------------------------------------------------------

template <class Fn>
void for_each_twin_class(Fn&& fn) {
  for (int mu : {1, -1}) {
    for (int nu : {1, -1}) {
      for (ConnectedComponent c : kOrthochron) fn(mu, nu, c);
    }
  }
}

inline PropertyResult twin_duality(const Context& ctx) {
  Tally t("twin.duality", 1e-10);
  Sampler s = ctx.sampler("twin.duality");
  for_each_twin_class([&](int mu, int nu, ConnectedComponent c) {
    for (std::size_t i = 0; i < ctx.count(50); ++i) {
      const std::size_t n = s.index(4);
      const TwinElement g = s.twin(n, mu, nu, c);
      const ChargedMomentum j = s.charged(n);
      const ExtendedLieElement d = s.extended_lie(n);
      const double before = invariant_scalar_ext(j, d);
      const double after = invariant_scalar_ext(coadjoint_twin(g, j), adjoint_twin(g, d));
      t.residual(std::abs(after - before) / (1.0 + std::abs(before)));
    }
  });
  return t.result();
}

inline PropertyResult twin_group_law(const Context& ctx) {
  Tally t("twin.group_law", 1e-12);
  Sampler s = ctx.sampler("twin.group_law");
  for (std::size_t i = 0; i < ctx.count(200); ++i) {
    const std::size_t n = s.index(4);
    const TwinElement a = s.twin(n);
    const TwinElement b = s.twin(n);
    t.residual(scaled_diff(embed(compose_twin(a, b)), embed(a) * embed(b)));
    t.residual(scaled_diff(embed(inverse_twin(a)), embed(a).inverse()));
  }
  return t.result();
}

inline PropertyResult twin_adjoint(const Context& ctx) {
  Tally t("twin.adjoint_closed_form", 1e-11);
  Sampler s = ctx.sampler("twin.adjoint_closed_form");
  for (std::size_t i = 0; i < ctx.count(200); ++i) {
    const std::size_t n = s.index(4);
    const TwinElement g = s.twin(n);
    const ExtendedLieElement d = s.extended_lie(n);
    t.residual(scaled_diff(flatten(adjoint_twin_closed_form(g, d)), flatten(adjoint_twin(g, d))));
  }
  return t.result();
}

inline PropertyResult twin_sign_laws(const Context& ctx) {
  Tally t("twin.sign_laws", 0.0);
  Sampler s = ctx.sampler("twin.sign_laws");
  for_each_twin_class([&](int mu, int nu, ConnectedComponent c) {
    for (std::size_t i = 0; i < ctx.count(50); ++i) {
      const std::size_t n = 1 + s.index(3);
      const TwinElement g = s.twin(n, mu, nu, c);
      const ParticleState st{s.sign(), s.charged_massive(n)};
      const ParticleState out = act_on_state(g, st);
      t.check(out.fold == mu * st.fold);
      t.check(exact_charges(st.momentum.q, out.momentum.q, mu * nu));
      t.check(sgn(out.momentum.P[kTime]) == mu * sgn(st.momentum.P[kTime]));
    }
  });
  return t.result();
}

inline PropertyResult twin_restriction(const Context& ctx) {
  Tally t("twin.restriction", 1e-12);
  Sampler s = ctx.sampler("twin.restriction");
  for (std::size_t i = 0; i < ctx.count(200); ++i) {
    const TwinElement g = s.twin(0, false);
    const Momentum j = s.momentum();
    const ChargedMomentum out = coadjoint_twin(g, {{}, j.M, j.P});
    t.residual(momentum_diff(out, coadjoint({g.lorentz_slot(), g.C()}, j)));
  }
  return t.result();
}

inline PropertyResult twin_oracle(const Context& ctx) {
  Tally t("twin.oracle", ctx.opt.tol);
  Sampler s = ctx.sampler("twin.oracle");
  for_each_twin_class([&](int mu, int nu, ConnectedComponent c) {
    for (std::size_t i = 0; i < ctx.count(25); ++i) {
      const std::size_t n = s.index(4);
      const TwinElement g = s.twin(n, mu, nu, c);
      const ChargedMomentum j = s.charged(n);
      t.residual(max_abs(flatten(coadjoint_twin(g, j)) - flatten(reconstruct_coadjoint(g, j))));
    }
  });
  return t.result();
}

inline PropertyResult twin_involution(const Context& ctx) {
  Tally t("twin.involution", 0.0);
  Sampler s = ctx.sampler("twin.involution");
  for (std::size_t i = 0; i < ctx.count(200); ++i) {
    const TwinElement g = s.twin(s.index(3));
    const SymmetryClass sq = classify_symmetry(compose_twin(g, g));
    t.check(sq.mu == 1 && sq.nu == 1 && sq.tag == SymmetryTag::Identity);
  }
  return t.result();
}

inline PropertyResult symmetry_table_check(const Context& ctx) {
  Tally t("twin.symmetry_table", 0.0);
  for (const SymmetryEffect& row : symmetry_effect_table(ctx.opt.tol)) {
    const SymmetryClass& c = row.symmetry;
    const Effect expect_e = c.mu > 0 ? Effect::Same : Effect::Reversed;
    const Effect expect_q = c.mu * c.nu > 0 ? Effect::Same : Effect::Reversed;
    const bool parity_flip = c.parity == ConnectedComponent::SpaceReversing;
    const Effect expect_p = (c.mu < 0) != parity_flip ? Effect::Reversed : Effect::Same;
    t.check(row.energy == expect_e && row.fold == expect_e && row.charge == expect_q &&
            row.linear_momentum == expect_p && row.spin == Effect::Same);
  }
  return t.result();
}

// ---- Invariants under each group ---------------------------------------------

/// mass² and spin scalar before/after one action.
template <class Act>
PropertyResult casimir_suite(const Context& ctx, const char* name, Act&& act) {
  Tally t(name, ctx.opt.tol);
  Sampler s = ctx.sampler(name);
  for (std::size_t i = 0; i < ctx.count(500); ++i) {
    const ChargedMomentum j = s.charged_massive(2);
    const ChargedMomentum out = act(s, j);
    t.residual(relative(mass_squared(out.P), mass_squared(j.P)));
    t.residual(relative(spin_scalar(out.poincare_part()), spin_scalar(j.poincare_part())));
  }
  return t.result();
}

inline PropertyResult casimir_poincare(const Context& ctx) {
  return casimir_suite(ctx, "casimir.poincare", [](Sampler& s, const ChargedMomentum& j) {
    const Momentum m = coadjoint(s.poincare(), j.poincare_part());
    return ChargedMomentum{j.q, m.M, m.P};
  });
}

inline PropertyResult casimir_extended(const Context& ctx) {
  return casimir_suite(ctx, "casimir.extended", [](Sampler& s, const ChargedMomentum& j) {
    return coadjoint_ext(s.extended(j.q.size(), false), j);
  });
}

inline PropertyResult casimir_eight(const Context& ctx) {
  return casimir_suite(ctx, "casimir.eight", [](Sampler& s, const ChargedMomentum& j) {
    return coadjoint_ext(s.extended(j.q.size(), true), j);
  });
}

inline PropertyResult casimir_twin(const Context& ctx) {
  return casimir_suite(ctx, "casimir.twin", [](Sampler& s, const ChargedMomentum& j) {
    return coadjoint_twin(s.twin(j.q.size(), true), j);
  });
}

// ---- Reduction ---------------------------------------------------------------

inline PropertyResult reduction_round_trip(const Context& ctx) {
  Tally t("reduction.round_trip", ctx.opt.tol);
  Sampler s = ctx.sampler("reduction.round_trip");
  for (std::size_t i = 0; i < ctx.count(200); ++i) {
    const double spin = s.uniform(0.0, 2.0);
    const double mass = s.uniform(0.5, 2.0);
    const double energy = s.sign() * mass;
    const CanonicalMomentum planted{spin, 0.0, energy, {}};
    const PoincareElement g{s.neutral(), s.four_vector(2.0)};
    const Momentum j = coadjoint(g, planted.momentum());
    const CanonicalMomentum red = canonical_reduce(j, ctx.opt.tol);
    t.residual(std::abs(red.s - spin));
    t.residual(std::abs(red.E - energy));
    t.residual(max_abs(flatten(coadjoint(red.g_reducing, j)) - flatten(planted.momentum())));
    t.residual(max_abs(flatten(coadjoint(inverse(red.g_reducing), red.momentum())) - flatten(j)));
  }
  return t.result();
}

inline PropertyResult reduction_spin_invariance(const Context& ctx) {
  Tally t("reduction.spin_invariance", ctx.opt.tol);
  Sampler s = ctx.sampler("reduction.spin_invariance");
  const Momentum j{spin_passage_recompose(Vec3(0.3, -0.6, 0.2), Vec3(0.1, 0.4, -0.3)),
                   Vec4(0.2, 0.1, -0.3, 1.5)};
  const double s0 = spin_scalar(j);
  for (std::size_t i = 0; i < ctx.count(500); ++i) {
    const PoincareElement g{s.neutral(), s.four_vector(2.0)};
    t.residual(relative(spin_scalar(coadjoint(g, j)), s0));
  }
  return t.result();
}

inline PropertyResult oracle_conditioning(const Context&) {
  Tally t("oracle.conditioning", 1e3);
  for (std::size_t n = 0; n <= 4; ++n) t.residual(pairing_condition_number(n));
  return t.result();
}

inline const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      casimir_eight,        casimir_extended,     casimir_poincare,     casimir_twin,
      eight_adjoint,        eight_charge_law,     eight_duality,        eight_group_law,
      eight_oracle,         c_symmetry_contract,  extended_duality,     extended_restriction,
      lorentz_components,   lorentz_metric,       lorentz_factorization, oracle_conditioning,
      poincare_action_law,  poincare_adjoint,     poincare_antisymmetry, poincare_duality,
      poincare_energy_sign, poincare_group_law,   poincare_triple,      reduction_round_trip,
      reduction_spin_invariance, symmetry_table_check, twin_adjoint,    twin_duality,
      twin_group_law,       twin_involution,      twin_oracle,          twin_restriction,
      twin_sign_laws,
  };
  return all;
}

}  // namespace verify_detail

/// Runs every suite; results sorted by name.
inline std::vector<PropertyResult> run_verification(const VerifyOptions& opt) {
  const verify_detail::Context ctx{opt};
  std::vector<PropertyResult> out;
  for (const auto& suite : verify_detail::suites()) {
    try {
      out.push_back(suite(ctx));
    } catch (const std::exception& e) {
      out.push_back({std::string("exception: ") + e.what(), false, 0, 1, INFINITY, 0.0});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const PropertyResult& a, const PropertyResult& b) { return a.name < b.name; });
  return out;
}

inline bool all_passed(const std::vector<PropertyResult>& rs) {
  return std::all_of(rs.begin(), rs.end(), [](const PropertyResult& r) { return r.pass; });
}

}  // namespace dyngroup

#endif  // DYNGROUP_VERIFY_HPP
