#ifndef DYNGROUP_MUTATION_HPP
#define DYNGROUP_MUTATION_HPP

// Sign-mutation hooks for the closed-form coadjoint maps. A normal build
// leaves DYNGROUP_MUTANT at 0 and every hook folds to +1. The test suite
// compiles extra copies of the CLI with one site flipped and expects
// `verify` to reject each of them.

#ifndef DYNGROUP_MUTANT
#define DYNGROUP_MUTANT 0
#endif

namespace dyngroup::detail {

enum MutationSite : int {
  kPoincareEnergyMomentum = 1,  // P' = L P
  kPoincareTranslationLeft = 2,  // + C ᵗP'
  kPoincareTranslationRight = 3,  // − P' ᵗC
  kExtendedCharge = 4,           // q' = ν q
  kTwinEnergyMomentum = 5,       // P' = μ L_o P
  kTwinTranslation = 6,          // + μ (C ᵗP ᵗL_o − L_o P ᵗC)
  kTwinCharge = 7,               // q' = μ ν q
};

inline constexpr int kMutationSiteCount = 7;

template <int Site>
constexpr double transcribed_sign() {
  return DYNGROUP_MUTANT == Site ? -1.0 : 1.0;
}

}  // namespace dyngroup::detail

#endif  // DYNGROUP_MUTATION_HPP
