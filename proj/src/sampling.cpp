#include "qpknot/sampling.hpp"

#include <algorithm>
#include <numeric>

namespace qpknot {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

std::vector<int> random_letters(Rng& rng, int strands, int length) {
  std::vector<int> letters;
  if (strands < 2) return letters;
  for (int k = 0; k < length; ++k) {
    const int i = uniform(rng, 1, strands - 1);
    letters.push_back(coin(rng) ? i : -i);
  }
  return letters;
}

// Retry budget; every sampler below hits a knot with probability >= 1/720.
constexpr int kAttempts = 200000;

[[noreturn]] void exhausted(const char* what) {
  throw ConsistencyError(std::string(what) + ": no knot closure found");
}

ExprPtr torus_leaf(Rng& rng) {
  for (;;) {
    const int p = uniform(rng, 2, 5);
    const int q = uniform(rng, 2, 7);
    if (std::gcd(p, q) != 1) continue;
    ExprPtr t = make_torus(p, q);
    const int pick = uniform(rng, 0, 3);
    Assertions a;
    if (pick == 0) a.fibered = true;
    if (pick == 1 && p == 2) a.alternating = true;
    if (pick == 2) a.tb = AssertedValue{static_cast<std::int64_t>(p) * q - p - q, "torus TB"};
    return a.empty() ? t : with_assertions(t, a);
  }
}

ExprPtr cable_leaf(Rng& rng) {
  std::vector<CableStage> stages(static_cast<std::size_t>(uniform(rng, 1, 3)));
  for (CableStage& s : stages) {
    s.p = uniform(rng, 2, 3);
    s.n = uniform(rng, -2, 3);
  }
  return make_iterated_torus(std::move(stages));
}

ExprPtr closure_leaf(Rng& rng) {
  switch (uniform(rng, 0, 2)) {
    case 0: {
      const BraidWord w = random_knot_braid(rng, 4, 8);
      ExprPtr e = make_closure(BraidPresentation::plain(w));
      const bool positive = std::all_of(w.letters().begin(), w.letters().end(), [](int k) { return k > 0; });
      if (positive && coin(rng)) {
        Assertions a;
        a.fibered = true;
        return with_assertions(e, a);
      }
      return e;
    }
    case 1: return make_closure(BraidPresentation::from_bands(random_band_factorization(rng, 4, 6)));
    default: return make_closure(BraidPresentation::from_qp(random_qp_factorization(rng, 4, 5, 3)));
  }
}

ExprPtr leaf(Rng& rng) {
  switch (uniform(rng, 0, 5)) {
    case 0: return torus_leaf(rng);
    case 1: return make_twist(uniform(rng, -6, 20));
    case 2: return cable_leaf(rng);
    case 3: return make_torus(1, 1);
    default: return closure_leaf(rng);
  }
}

}  // namespace

BraidWord random_knot_braid(Rng& rng, int max_strands, int max_length) {
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const int n = uniform(rng, 1, max_strands);
    if (n == 1) return BraidWord(1);
    BraidWord w = free_reduce(BraidWord(n, random_letters(rng, n, uniform(rng, 0, max_length))));
    if (static_cast<int>(w.length()) <= max_length && is_knot_closure(w)) return w;
  }
  exhausted("random_knot_braid");
}

BandFactorization random_band_factorization(Rng& rng, int max_strands, int max_bands) {
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const int n = uniform(rng, 2, max_strands);
    if (n - 1 > max_bands) continue;
    BandFactorization f{n, {}};
    const int m = uniform(rng, n - 1, max_bands);
    for (int k = 0; k < m; ++k) {
      const int i = uniform(rng, 1, n - 1);
      f.bands.push_back({i, uniform(rng, i + 1, n)});
    }
    if (is_knot_closure(expand_sqp(f))) return f;
  }
  exhausted("random_band_factorization");
}

QPFactorization random_qp_factorization(Rng& rng, int max_strands, int max_factors, int max_conjugator) {
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const int n = uniform(rng, 2, max_strands);
    if (n - 1 > max_factors) continue;
    QPFactorization f{n, {}};
    const int m = uniform(rng, n - 1, max_factors);
    for (int k = 0; k < m; ++k) {
      BraidWord conj(n, random_letters(rng, n, uniform(rng, 0, max_conjugator)));
      f.factors.push_back({std::move(conj), uniform(rng, 1, n - 1)});
    }
    if (is_knot_closure(expand_qp(f))) return f;
  }
  exhausted("random_qp_factorization");
}

ExprPtr random_expression(Rng& rng, int max_depth) {
  if (max_depth <= 0 || coin(rng, 0.4)) return leaf(rng);
  switch (uniform(rng, 0, 2)) {
    case 0: return make_mirror(random_expression(rng, max_depth - 1));
    case 1: {
      std::vector<ExprPtr> parts(static_cast<std::size_t>(uniform(rng, 2, 3)));
      for (ExprPtr& p : parts) p = random_expression(rng, max_depth - 1);
      return make_connected_sum(std::move(parts));
    }
    default: return make_whitehead_double(random_expression(rng, max_depth - 1), uniform(rng, -6, 6));
  }
}

}  // namespace qpknot
