#ifndef DYNGROUP_DYNGROUP_HPP
#define DYNGROUP_DYNGROUP_HPP

#include "dyngroup/duality_oracle.hpp"
#include "dyngroup/errors.hpp"
#include "dyngroup/extended.hpp"
#include "dyngroup/minkowski.hpp"
#include "dyngroup/poincare.hpp"
#include "dyngroup/random.hpp"
#include "dyngroup/reduction.hpp"
#include "dyngroup/twinfold.hpp"

#endif  // DYNGROUP_DYNGROUP_HPP
