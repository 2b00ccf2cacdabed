#include "qpknot/invariants.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <map>

namespace qpknot {

namespace {

using Matrix = std::vector<std::vector<LaurentPoly>>;

const LaurentPoly kOne = LaurentPoly::constant(1);

// Nonidentity row of the reduced Burau matrix of sigma_index^sign in B_n.
// Returns (row, {column -> entry}).
std::pair<int, std::map<int, LaurentPoly>> burau_row(int letter, int strands) {
  const int index = letter < 0 ? -letter : letter;
  const bool inverse = letter < 0;
  const int size = strands - 1;
  const LaurentPoly t = LaurentPoly::monomial(1, 1);
  const LaurentPoly neg_t = LaurentPoly::monomial(-1, 1);
  const LaurentPoly t_inv = LaurentPoly::monomial(1, -1);
  const LaurentPoly neg_t_inv = LaurentPoly::monomial(-1, -1);

  std::map<int, LaurentPoly> row;
  if (size == 1) {
    row[0] = inverse ? neg_t_inv : neg_t;
    return {0, row};
  }
  const int r = index - 1;
  if (index == 1) {
    row[0] = inverse ? neg_t_inv : neg_t;
    row[1] = inverse ? t_inv : kOne;
  } else if (index == strands - 1) {
    row[r - 1] = inverse ? kOne : t;
    row[r] = inverse ? neg_t_inv : neg_t;
  } else {
    row[r - 1] = inverse ? kOne : t;
    row[r] = inverse ? neg_t_inv : neg_t;
    row[r + 1] = inverse ? t_inv : kOne;
  }
  return {r, row};
}

Matrix identity(int size) {
  Matrix m(static_cast<std::size_t>(size), std::vector<LaurentPoly>(static_cast<std::size_t>(size)));
  for (int k = 0; k < size; ++k) m[k][k] = kOne;
  return m;
}

// product := product * G, where G is the identity except for one row.
void right_multiply(Matrix& product, int row, const std::map<int, LaurentPoly>& entries) {
  const std::size_t size = product.size();
  std::vector<LaurentPoly> pivot_column(size);
  for (std::size_t i = 0; i < size; ++i) pivot_column[i] = product[i][row];
  for (const auto& [col, entry] : entries) {
    const LaurentPoly factor = col == row ? entry - kOne : entry;
    if (factor.is_zero()) continue;
    for (std::size_t i = 0; i < size; ++i) {
      if (!pivot_column[i].is_zero()) product[i][col] += pivot_column[i] * factor;
    }
  }
}

int sign_of(int letter) { return letter > 0 ? 1 : -1; }

}  // namespace

SeifertMatrix SeifertMatrix::transposed() const {
  SeifertMatrix out(size_);
  for (int i = 0; i < size_; ++i)
    for (int j = 0; j < size_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

LaurentPoly laurent_determinant(Matrix m) {
  const std::size_t n = m.size();
  if (n == 0) return kOne;
  LaurentPoly previous = kOne;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k].is_zero()) ++pivot;
    if (pivot == n) return {};
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const LaurentPoly numerator = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = LaurentPoly::divide_exact(numerator, previous);
      }
      m[i][k] = {};
    }
    previous = m[k][k];
  }
  LaurentPoly det = m[n - 1][n - 1];
  return negate ? -det : det;
}

LaurentPoly normalize_alexander(const LaurentPoly& p) {
  if (p.is_zero()) throw ConsistencyError("Alexander polynomial vanished for a knot closure");
  const int span = p.high_degree() - p.low_degree();
  if (span % 2 != 0) throw ConsistencyError("Alexander polynomial has odd span");
  LaurentPoly centered = p.shifted(-(p.low_degree() + span / 2));
  const auto value = centered.at_one();
  if (value == -1) return -centered;
  if (value != 1) throw ConsistencyError("Alexander polynomial is not a unit at T = 1");
  return centered;
}

LaurentPoly alexander_burau(const BraidWord& w) {
  require_knot(w, "Alexander polynomial requires a knot closure");
  const int n = w.strands();
  if (n == 1) return kOne;
  Matrix product = identity(n - 1);
  for (int letter : w.letters()) {
    const auto [row, entries] = burau_row(letter, n);
    right_multiply(product, row, entries);
  }
  Matrix difference = identity(n - 1);
  for (int i = 0; i < n - 1; ++i)
    for (int j = 0; j < n - 1; ++j) difference[i][j] -= product[i][j];
  const LaurentPoly det = laurent_determinant(std::move(difference));
  std::vector<LaurentPoly::Coeff> ones(static_cast<std::size_t>(n), 1);
  return normalize_alexander(LaurentPoly::divide_exact(det, LaurentPoly(0, std::move(ones))));
}

SeifertMatrix seifert_matrix(const BraidWord& w) {
  const BraidWord reduced = free_reduce(w);
  require_knot(reduced, "Seifert matrix requires a knot closure");
  const auto& letters = reduced.letters();

  struct Loop {
    int column;
    int first;   // position of the lower band
    int second;  // position of the next band on the same column
  };
  std::vector<Loop> loops;
  for (int column = 1; column < reduced.strands(); ++column) {
    int last = -1;
    for (int pos = 0; pos < static_cast<int>(letters.size()); ++pos) {
      if (std::abs(letters[pos]) != column) continue;
      if (last >= 0) loops.push_back({column, last, pos});
      last = pos;
    }
  }

  const int size = static_cast<int>(loops.size());
  SeifertMatrix v(size);
  for (int a = 0; a < size; ++a) {
    const Loop& la = loops[a];
    v(a, a) = -(sign_of(letters[la.first]) + sign_of(letters[la.second])) / 2;
    for (int b = 0; b < size; ++b) {
      const Loop& lb = loops[b];
      if (lb.column == la.column && lb.first == la.second) {
        // Consecutive loops sharing one band.
        if (sign_of(letters[la.second]) > 0) {
          v(a, b) = 1;
        } else {
          v(b, a) = -1;
        }
      } else if (lb.column == la.column + 1) {
        // Interleaved loops on neighbouring columns: only the lower column's row is nonzero.
        if (la.first < lb.first && lb.first < la.second && la.second < lb.second) v(a, b) = -1;
        if (lb.first < la.first && la.first < lb.second && lb.second < la.second) v(a, b) = 1;
      }
    }
  }
  const int expected = static_cast<int>(letters.size()) - reduced.strands() + 1;
  if (size != expected) throw ConsistencyError("Seifert surface has unexpected rank");
  return v;
}

LaurentPoly alexander_seifert(const SeifertMatrix& v) {
  const int n = v.size();
  Matrix m(static_cast<std::size_t>(n), std::vector<LaurentPoly>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m[i][j] = LaurentPoly::constant(v(j, i)) - LaurentPoly::monomial(v(i, j), 1);
    }
  }
  return normalize_alexander(laurent_determinant(std::move(m)));
}

int signature(const SeifertMatrix& v) {
  using Rational = boost::multiprecision::cpp_rational;
  const int n = v.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = Rational(v(i, j) + v(j, i));

  // Symmetric congruence: each step applies the same operation to rows and
  // columns, so the inertia is preserved.
  int result = 0;
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int i = k; i < n; ++i) {
      if (a[i][i] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) {
      // Zero diagonal: create a nonzero one from an off-diagonal entry.
      int partner = -1;
      for (int j = k + 1; j < n && partner < 0; ++j)
        if (a[k][j] != 0) partner = j;
      if (partner < 0) {
        // Row k is zero; find any nonzero off-diagonal entry further down.
        for (int i = k + 1; i < n && pivot < 0; ++i)
          for (int j = i + 1; j < n; ++j)
            if (a[i][j] != 0) {
              pivot = i;
              break;
            }
        if (pivot < 0) break;  // remaining block is zero
        std::swap(a[k], a[pivot]);
        for (auto& row : a) std::swap(row[k], row[pivot]);
        for (int j = k + 1; j < n; ++j)
          if (a[k][j] != 0) {
            partner = j;
            break;
          }
      }
      // row_k += row_partner, col_k += col_partner
      for (int j = 0; j < n; ++j) a[k][j] += a[partner][j];
      for (int i = 0; i < n; ++i) a[i][k] += a[i][partner];
      pivot = k;
    }
    if (pivot != k) {
      std::swap(a[k], a[pivot]);
      for (auto& row : a) std::swap(row[k], row[pivot]);
    }
    const Rational d = a[k][k];
    result += d > 0 ? 1 : -1;
    for (int i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      const Rational f = a[i][k] / d;
      for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      for (int j = k; j < n; ++j) a[j][i] = a[i][j];
    }
  }
  return result;
}

std::int64_t determinant(const LaurentPoly& alexander) {
  const auto value = alexander.at_minus_one();
  return value < 0 ? -value : value;
}

std::int64_t determinant(const BraidWord& w) { return determinant(alexander_burau(w)); }

bool is_perfect_square(std::int64_t x) {
  if (x < 0) return false;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(x)));
  while (r > 0 && r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r * r == x;
}

bool fox_milnor_necessary(const LaurentPoly& alexander) { return is_perfect_square(determinant(alexander)); }

LaurentPoly twist_family_alexander(std::int64_t n) {
  return LaurentPoly(-1, {checked::sub(0, n), checked::add(checked::mul(2, n), 1), checked::sub(0, n)});
}

bool fox_milnor_twist_family(std::int64_t n) {
  return is_perfect_square(checked::add(checked::mul(4, n), 1));
}

}  // namespace qpknot
