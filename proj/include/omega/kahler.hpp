#pragma once

#include "omega/fodc.hpp"

namespace omega {

/// Relations im((d.1) - (1.d) o swap) in Omega^1_u coordinates, saturated to
/// a sub-bimodule. Throws PreconditionError naming a noncommuting pair.
Mat kahler_relations(const UniversalCalculus& u);

/// Omega^1_u modulo the Kahler relations, with d_K = q d_u.
QuotientCalculus kahler_calculus(const Algebra& a);

/// r o swap == l and l o swap == r. Requires equal, commutative left and
/// right algebras (PreconditionError otherwise).
bool centrality_check(const Bimodule& m);

}  // namespace omega
