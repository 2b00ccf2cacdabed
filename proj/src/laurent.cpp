#include "qpknot/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qpknot/errors.hpp"

namespace qpknot {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
  return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

}  // namespace checked

LaurentPoly::LaurentPoly(int low, std::vector<Coeff> coeffs) : low_(low), coeffs_(std::move(coeffs)) {
  trim();
}

LaurentPoly LaurentPoly::constant(Coeff c) { return LaurentPoly(0, {c}); }

LaurentPoly LaurentPoly::monomial(Coeff c, int exponent) { return LaurentPoly(exponent, {c}); }

LaurentPoly LaurentPoly::from_terms(std::initializer_list<std::pair<int, Coeff>> terms) {
  LaurentPoly out;
  for (const auto& [e, c] : terms) out += monomial(c, e);
  return out;
}

void LaurentPoly::trim() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](Coeff c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  low_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  while (coeffs_.back() == 0) coeffs_.pop_back();
}

LaurentPoly::Coeff LaurentPoly::coeff(int exponent) const noexcept {
  if (coeffs_.empty() || exponent < low_ || exponent > high_degree()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::vector<std::pair<int, LaurentPoly::Coeff>> LaurentPoly::terms() const {
  std::vector<std::pair<int, Coeff>> out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) out.emplace_back(low_ + static_cast<int>(k), coeffs_[k]);
  }
  return out;
}

LaurentPoly::Coeff LaurentPoly::evaluate(Coeff x) const {
  if (coeffs_.empty()) return 0;
  if (x == 0) {
    if (low_ < 0) throw std::domain_error("Laurent polynomial with negative powers evaluated at 0");
    return coeff(0);
  }
  if (low_ < 0 && x != 1 && x != -1) {
    throw std::domain_error("integer evaluation with negative powers needs T = +-1");
  }
  // Horner on the positive part; T^low_ applied afterwards.
  Coeff acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = checked::add(checked::mul(acc, x), *it);
  int shift = low_;
  if (shift < 0) {
    // x is +-1 here, so x^shift == x^|shift|.
    shift = -shift;
  }
  for (int k = 0; k < shift; ++k) acc = checked::mul(acc, x);
  return acc;
}

LaurentPoly::Coeff LaurentPoly::at_one() const { return evaluate(1); }

LaurentPoly::Coeff LaurentPoly::at_minus_one() const { return evaluate(-1); }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (Coeff& c : out.coeffs_) c = checked::sub(0, c);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  const int lo = std::min(low_, other.low_);
  const int hi = std::max(high_degree(), other.high_degree());
  std::vector<Coeff> sum(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) sum[k + static_cast<std::size_t>(low_ - lo)] = coeffs_[k];
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) {
    Coeff& slot = sum[k + static_cast<std::size_t>(other.low_ - lo)];
    slot = checked::add(slot, other.coeffs_[k]);
  }
  low_ = lo;
  coeffs_ = std::move(sum);
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) { return *this += -other; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<LaurentPoly::Coeff> prod(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      prod[i + j] = checked::add(prod[i + j], checked::mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return LaurentPoly(a.low_ + b.low_, std::move(prod));
}

LaurentPoly LaurentPoly::shifted(int k) const {
  if (is_zero()) return {};
  LaurentPoly out = *this;
  out.low_ += k;
  return out;
}

LaurentPoly LaurentPoly::reflected() const {
  if (is_zero()) return {};
  std::vector<Coeff> rev(coeffs_.rbegin(), coeffs_.rend());
  return LaurentPoly(-high_degree(), std::move(rev));
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return {};
  // Both have a nonzero constant term once shifted, so the quotient is an
  // ordinary polynomial.
  std::vector<Coeff> rem = a.coeffs_;
  const std::vector<Coeff>& div = b.coeffs_;
  if (rem.size() < div.size()) throw ConsistencyError("inexact Laurent division");
  std::vector<Coeff> quot(rem.size() - div.size() + 1, 0);
  const Coeff lead = div.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Coeff top = rem[k + div.size() - 1];
    if (top % lead != 0) throw ConsistencyError("inexact Laurent division");
    const Coeff q = top / lead;
    quot[k] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j < div.size(); ++j) rem[k + j] = checked::sub(rem[k + j], checked::mul(q, div[j]));
  }
  if (std::any_of(rem.begin(), rem.end(), [](Coeff c) { return c != 0; })) {
    throw ConsistencyError("inexact Laurent division");
  }
  return LaurentPoly(a.low_ - b.low_, std::move(quot));
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  const auto ts = terms();
  for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
    const auto [e, c] = *it;
    const Coeff mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag;
    out << 'T';
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

}  // namespace qpknot
