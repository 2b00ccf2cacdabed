#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace qpknot {

/// Integer Laurent polynomial in one variable T.
///
/// Stored densely from the lowest to the highest nonzero exponent; the zero
/// polynomial has no coefficients. Every operation is exact: int64 overflow
/// throws std::overflow_error instead of wrapping.
class LaurentPoly {
public:
  using Coeff = std::int64_t;

  LaurentPoly() = default;
  /// coeffs[k] is the coefficient of T^(low + k).
  LaurentPoly(int low, std::vector<Coeff> coeffs);
  /// Constant polynomial.
  static LaurentPoly constant(Coeff c);
  /// c * T^exponent.
  static LaurentPoly monomial(Coeff c, int exponent);
  /// Builds from (exponent, coefficient) pairs; repeated exponents add up.
  static LaurentPoly from_terms(std::initializer_list<std::pair<int, Coeff>> terms);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Lowest/highest exponent with a nonzero coefficient. Undefined for zero.
  int low_degree() const noexcept { return low_; }
  int high_degree() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  Coeff coeff(int exponent) const noexcept;
  /// Nonzero (exponent, coefficient) pairs in increasing exponent order.
  std::vector<std::pair<int, Coeff>> terms() const;

  /// Value at T = x; overflow throws.
  Coeff evaluate(Coeff x) const;
  /// Value at T = 1.
  Coeff at_one() const;
  /// Value at T = -1.
  Coeff at_minus_one() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  /// Multiplies by T^k.
  LaurentPoly shifted(int k) const;
  /// Substitutes T -> T^-1.
  LaurentPoly reflected() const;

  /// Exact quotient a / b. Throws ConsistencyError when b does not divide a,
  /// std::domain_error when b is zero.
  static LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

  /// Human-readable form in T, e.g. "-T + 3 - T^-1".
  std::string to_string() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
  void trim();

  int low_ = 0;
  std::vector<Coeff> coeffs_;
};

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t sub(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);

}  // namespace checked

}  // namespace qpknot
