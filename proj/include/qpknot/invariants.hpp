#pragma once

#include <cstdint>
#include <vector>

#include "qpknot/braid.hpp"
#include "qpknot/laurent.hpp"

namespace qpknot {

/// Square integer matrix, row-major.
class SeifertMatrix {
public:
  SeifertMatrix() = default;
  explicit SeifertMatrix(int size) : size_(size), entries_(static_cast<std::size_t>(size) * size, 0) {}

  int size() const noexcept { return size_; }
  std::int64_t operator()(int row, int col) const { return entries_[index(row, col)]; }
  std::int64_t& operator()(int row, int col) { return entries_[index(row, col)]; }

  SeifertMatrix transposed() const;

  friend bool operator==(const SeifertMatrix&, const SeifertMatrix&) = default;

private:
  std::size_t index(int row, int col) const { return static_cast<std::size_t>(row) * size_ + col; }

  int size_ = 0;
  std::vector<std::int64_t> entries_;
};

/// Fixes the unit ambiguity of an Alexander polynomial: exponents symmetric
/// about 0 and value +1 at T = 1. Throws ConsistencyError if that is impossible.
LaurentPoly normalize_alexander(const LaurentPoly& p);

/// Alexander polynomial from the reduced Burau representation:
/// det(I - burau(w)) / (1 + T + ... + T^(n-1)), normalized.
LaurentPoly alexander_burau(const BraidWord& w);

/// Seifert matrix of the surface built by Seifert's algorithm on the closure
/// of the freely reduced word: one disk per strand, one half-twisted band per
/// letter. Generators are the loops through consecutive bands on each column.
SeifertMatrix seifert_matrix(const BraidWord& w);

/// det(V^T - T V), normalized.
LaurentPoly alexander_seifert(const SeifertMatrix& v);

/// Signature of V + V^T, computed exactly.
int signature(const SeifertMatrix& v);

/// |Delta(-1)|.
std::int64_t determinant(const BraidWord& w);
std::int64_t determinant(const LaurentPoly& alexander);

/// Necessary condition for Delta = F(T)F(T^-1): |Delta(-1)| is a perfect square.
bool fox_milnor_necessary(const LaurentPoly& alexander);

/// -nT + (2n+1) - nT^-1.
LaurentPoly twist_family_alexander(std::int64_t n);

/// True iff n = b(b +- 1) for some integer b, i.e. 4n+1 is a perfect square.
/// True means the Fox-Milnor obstruction vanishes for twist_family_alexander(n).
bool fox_milnor_twist_family(std::int64_t n);

/// Exact integer square root test.
bool is_perfect_square(std::int64_t x);

/// Exact determinant of a square matrix over Z[T, T^-1] (fraction-free elimination).
LaurentPoly laurent_determinant(std::vector<std::vector<LaurentPoly>> m);

}  // namespace qpknot
