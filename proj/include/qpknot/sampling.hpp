#pragma once

#include <random>

#include "qpknot/braid.hpp"
#include "qpknot/expression.hpp"

namespace qpknot {

// Random inputs for the self-test and the property suites. All sampling is
// rejection-based on closure_stats, so the knot results really close to knots.

using Rng = std::mt19937_64;

/// Word in B_n, 1 <= n <= max_strands, whose free reduction has at most
/// max_length letters and whose closure is a knot.
BraidWord random_knot_braid(Rng& rng, int max_strands, int max_length);

/// Band factorization with knot closure, 2 <= n <= max_strands, at most max_bands bands.
BandFactorization random_band_factorization(Rng& rng, int max_strands, int max_bands);

/// QP factorization with knot closure. Conjugators are arbitrary words of
/// length <= max_conjugator.
QPFactorization random_qp_factorization(Rng& rng, int max_strands, int max_factors, int max_conjugator);

/// Expression tree of depth <= max_depth. Assertions, when attached, are
/// true statements (fibered positive braids, alternating T(2,q), known TB of
/// torus knots), so classification never meets contradictory input.
ExprPtr random_expression(Rng& rng, int max_depth);

}  // namespace qpknot
