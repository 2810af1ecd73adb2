#pragma once

// Exact-arithmetic toolkit for weak bimonoids on finite-dimensional vector
// spaces: axiom checking, the induced comonoidal monad and its projection,
// the separable Frobenius base monoid, truncated tensor products of modules,
// and antipode machinery.

#include "weakhopf/rational.hpp"     // exact scalars
#include "weakhopf/errors.hpp"       // exception hierarchy
#include "weakhopf/linmap.hpp"       // linear maps, tensor/compose/swap
#include "weakhopf/solve.hpp"        // elimination, splitting, linear systems
#include "weakhopf/report.hpp"       // named check lists with witnesses
#include "weakhopf/weak_bimonoid.hpp"  // axioms, strength, projection
#include "weakhopf/modules.hpp"      // base monoid, module products, coherence
#include "weakhopf/hopf.hpp"         // canonical maps, antipode, opposites
#include "weakhopf/zoo.hpp"          // example corpus and counterexamples
