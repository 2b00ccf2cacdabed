#pragma once

// Independent reference computations for the property suites. None of these
// call into the library's invariant code; they only read BraidWord letters.

#include <cstdint>
#include <map>
#include <vector>

#include "qpknot/braid.hpp"
#include "qpknot/laurent.hpp"

namespace oracle {

/// Components of the closure by following each strand through the crossings.
int component_count(const qpknot::BraidWord& w);

/// True when det((I - B(t)) minus first row and column), with B the unreduced
/// Burau matrix, equals +-t^k * alexander(t) for one fixed (sign, k) at
/// t = 3, 5, 7, evaluated in exact rationals.
bool burau_agrees(const qpknot::BraidWord& w, const qpknot::LaurentPoly& alexander);

/// Gordon-Litherland signature from the Goeritz matrix of the checkerboard
/// surface of the closed braid diagram, eigenvalues via Eigen. Sign
/// convention: the right-handed trefoil gives -2.
int goeritz_signature(const qpknot::BraidWord& w);

/// n = b(b+1) or n = b(b-1) for some integer b >= 0, by direct search.
bool is_pronic(std::int64_t n);

/// Coefficient map product, no dense storage.
std::map<int, std::int64_t> multiply(const std::map<int, std::int64_t>& a, const std::map<int, std::int64_t>& b);
std::map<int, std::int64_t> to_map(const qpknot::LaurentPoly& p);

/// Sum of letter signs and positive/negative counts, by a plain loop.
struct LetterCounts {
  int positive = 0;
  int negative = 0;
};
LetterCounts count_letters(const qpknot::BraidWord& w);

}  // namespace oracle
