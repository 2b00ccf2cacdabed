#include "oracles.hpp"

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <optional>

namespace oracle {

using Rational = boost::multiprecision::cpp_rational;
using qpknot::BraidWord;

int component_count(const BraidWord& w) {
  const int n = w.strands();
  std::vector<int> next(n);
  for (int start = 0; start < n; ++start) {
    int pos = start;
    for (int k : w.letters()) {
      const int i = std::abs(k) - 1;
      if (pos == i)
        pos = i + 1;
      else if (pos == i + 1)
        pos = i;
    }
    next[start] = pos;
  }
  std::vector<bool> seen(n, false);
  int cycles = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (int x = s; !seen[x]; x = next[x]) seen[x] = true;
  }
  return cycles;
}

namespace {

using RMatrix = std::vector<std::vector<Rational>>;

RMatrix burau_at(const BraidWord& w, const Rational& t) {
  const int n = w.strands();
  RMatrix m(n, std::vector<Rational>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  for (int k : w.letters()) {
    const int i = std::abs(k) - 1;
    // Right-multiply by the generator block acting on columns i, i+1.
    for (int r = 0; r < n; ++r) {
      const Rational a = m[r][i], b = m[r][i + 1];
      if (k > 0) {
        m[r][i] = a * (1 - t) + b;
        m[r][i + 1] = a * t;
      } else {
        m[r][i] = b / t;
        m[r][i + 1] = a + b * (1 - 1 / t);
      }
    }
  }
  return m;
}

Rational det(RMatrix a) {
  const std::size_t n = a.size();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return d;
}

Rational evaluate(const qpknot::LaurentPoly& p, const Rational& t) {
  Rational s = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational power = 1;
    for (int k = 0; k < std::abs(e); ++k) power *= t;
    s += Rational(c) * (e >= 0 ? power : 1 / power);
  }
  return s;
}

// r = sign * t^k for integer k, or nullopt.
std::optional<std::pair<int, int>> unit_of(Rational r, const Rational& t) {
  const int sign = r < 0 ? -1 : 1;
  if (r < 0) r = -r;
  int k = 0;
  while (r > 1 && k < 400) {
    r /= t;
    ++k;
  }
  while (r < 1 && k > -400) {
    r *= t;
    --k;
  }
  if (r != 1) return std::nullopt;
  return std::pair{sign, k};
}

}  // namespace

bool burau_agrees(const BraidWord& w, const qpknot::LaurentPoly& alexander) {
  std::optional<std::pair<int, int>> unit;
  bool any = false;
  for (int tv : {3, 5, 7}) {
    const Rational t = tv;
    RMatrix m = burau_at(w, t);
    const int n = w.strands();
    RMatrix minor(n - 1, std::vector<Rational>(n - 1));
    for (int r = 1; r < n; ++r)
      for (int c = 1; c < n; ++c) minor[r - 1][c - 1] = (r == c ? 1 : 0) - m[r][c];
    const Rational lhs = det(minor);
    const Rational rhs = evaluate(alexander, t);
    if (rhs == 0) {
      if (lhs != 0) return false;
      continue;
    }
    const auto u = unit_of(lhs / rhs, t);
    if (!u) return false;
    if (unit && *unit != *u) return false;
    unit = u;
    any = true;
  }
  return any;
}

int goeritz_signature(const BraidWord& w) {
  const int n = w.strands();
  if (n == 1) return 0;
  const auto& letters = w.letters();
  std::vector<std::vector<int>> pos(n);
  for (int i = 0; i < static_cast<int>(letters.size()); ++i) pos[std::abs(letters[i])].push_back(i);

  // Gap j lies between strands j and j+1 (gap 0 inside, gap n outside). Odd
  // gaps are shaded; crossings in gap j cut it into |pos[j]| regions.
  std::map<std::pair<int, int>, int> id;
  for (int j = 1; j < n; j += 2)
    for (int s = 0; s < static_cast<int>(pos[j].size()); ++s) id.emplace(std::pair{j, s}, static_cast<int>(id.size()));
  if (n % 2 == 1) id.emplace(std::pair{n, 0}, static_cast<int>(id.size()));

  auto segment = [&](int j, int x) {
    if (j == n) return 0;
    int before = 0;
    for (int p : pos[j]) before += p < x;
    return before % static_cast<int>(pos[j].size());
  };

  const int size = static_cast<int>(id.size());
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(size, size);
  int mu = 0;
  for (int i = 0; i < static_cast<int>(letters.size()); ++i) {
    const int j = std::abs(letters[i]);
    const int eps = letters[i] > 0 ? 1 : -1;
    int a, b, eta;
    if (j % 2 == 1) {
      const int t = segment(j, i);
      a = id.at({j, t});
      b = id.at({j, (t + 1) % static_cast<int>(pos[j].size())});
      eta = eps;
    } else {
      a = id.at({j - 1, segment(j - 1, i)});
      b = id.at({j + 1, segment(j + 1, i)});
      eta = -eps;
      mu += eta;  // crossings between unshaded gaps are the type II ones here
    }
    if (a == b) continue;
    g(a, b) -= eta;
    g(b, a) -= eta;
    g(a, a) += eta;
    g(b, b) += eta;
  }
  int sig = 0;
  if (size > 1) {
    const Eigen::MatrixXd reduced = g.bottomRightCorner(size - 1, size - 1);
    const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(reduced).eigenvalues();
    for (int k = 0; k < ev.size(); ++k) sig += ev[k] > 1e-9 ? 1 : (ev[k] < -1e-9 ? -1 : 0);
  }
  return -(sig - mu);
}

bool is_pronic(std::int64_t n) {
  for (std::int64_t b = 0; b * (b - 1) <= n; ++b)
    if (b * (b + 1) == n || b * (b - 1) == n) return true;
  return false;
}

std::map<int, std::int64_t> to_map(const qpknot::LaurentPoly& p) {
  std::map<int, std::int64_t> m;
  for (const auto& [e, c] : p.terms())
    if (c != 0) m[e] = c;
  return m;
}

std::map<int, std::int64_t> multiply(const std::map<int, std::int64_t>& a, const std::map<int, std::int64_t>& b) {
  std::map<int, std::int64_t> out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) out[ea + eb] += ca * cb;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

LetterCounts count_letters(const BraidWord& w) {
  LetterCounts c;
  for (int k : w.letters()) (k > 0 ? c.positive : c.negative) += 1;
  return c;
}

}  // namespace oracle
