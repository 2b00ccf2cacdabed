#include "qpknot/braid.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace qpknot {

namespace {

void check_letter(int letter, int strands) {
  const int index = letter < 0 ? -letter : letter;
  if (letter == 0 || index > strands - 1) {
    throw DomainError("braid letter " + std::to_string(letter) + " out of range for B_" +
                      std::to_string(strands));
  }
}

void check_band(BandGenerator band, int strands) {
  if (band.i < 1 || band.j <= band.i || band.j > strands) {
    throw DomainError("band generator (" + std::to_string(band.i) + "," + std::to_string(band.j) +
                      ") invalid in B_" + std::to_string(strands));
  }
}

void append(std::vector<int>& out, const std::vector<int>& letters) {
  out.insert(out.end(), letters.begin(), letters.end());
}

// (sigma_{first} sigma_{first+1} ... sigma_{first+count-1})^power, power may be negative.
void append_twist(std::vector<int>& out, int first, int count, int power) {
  if (power >= 0) {
    for (int r = 0; r < power; ++r)
      for (int k = 0; k < count; ++k) out.push_back(first + k);
  } else {
    for (int r = 0; r < -power; ++r)
      for (int k = count - 1; k >= 0; --k) out.push_back(-(first + k));
  }
}

}  // namespace

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands < 1) throw DomainError("braid needs at least one strand");
  for (int letter : letters_) check_letter(letter, strands_);
}

int BraidWord::exponent_sum() const noexcept {
  int sum = 0;
  for (int letter : letters_) sum += letter > 0 ? 1 : -1;
  return sum;
}

BraidWord BraidWord::concat(const BraidWord& other) const {
  if (other.strands_ != strands_) throw DomainError("cannot concatenate braids of different strand counts");
  std::vector<int> letters = letters_;
  append(letters, other.letters_);
  return BraidWord(strands_, std::move(letters));
}

BraidWord BraidWord::inverse() const {
  std::vector<int> letters(letters_.rbegin(), letters_.rend());
  for (int& letter : letters) letter = -letter;
  return BraidWord(strands_, std::move(letters));
}

BraidWord BraidWord::mirror() const {
  std::vector<int> letters = letters_;
  for (int& letter : letters) letter = -letter;
  return BraidWord(strands_, std::move(letters));
}

BraidWord expand_band(BandGenerator band, int strands) {
  check_band(band, strands);
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(2 * (band.j - band.i) - 1));
  for (int k = band.i; k <= band.j - 2; ++k) letters.push_back(k);
  letters.push_back(band.j - 1);
  for (int k = band.j - 2; k >= band.i; --k) letters.push_back(-k);
  return BraidWord(strands, std::move(letters));
}

BraidWord expand_sqp(const BandFactorization& f) {
  std::vector<int> letters;
  for (const BandGenerator& band : f.bands) append(letters, expand_band(band, f.strands).letters());
  return BraidWord(f.strands, std::move(letters));
}

BraidWord expand_qp(const QPFactorization& f) {
  std::vector<int> letters;
  for (const QPFactor& factor : f.factors) {
    if (factor.conjugator.strands() != f.strands) {
      throw DomainError("conjugator lives in B_" + std::to_string(factor.conjugator.strands()) +
                        ", factorization in B_" + std::to_string(f.strands));
    }
    check_letter(factor.index, f.strands);
    if (factor.index < 0) throw DomainError("quasipositive factor index must be positive");
    append(letters, factor.conjugator.letters());
    letters.push_back(factor.index);
    append(letters, factor.conjugator.inverse().letters());
  }
  return BraidWord(f.strands, std::move(letters));
}

QPFactorization as_qp(const BandFactorization& f) {
  QPFactorization out{f.strands, {}};
  for (const BandGenerator& band : f.bands) {
    check_band(band, f.strands);
    std::vector<int> conjugator;
    for (int k = band.i; k <= band.j - 2; ++k) conjugator.push_back(k);
    out.factors.push_back({BraidWord(f.strands, std::move(conjugator)), band.j - 1});
  }
  return out;
}

BraidWord free_reduce(const BraidWord& w) {
  std::vector<int> stack;
  stack.reserve(w.length());
  for (int letter : w.letters()) {
    if (!stack.empty() && stack.back() == -letter) {
      stack.pop_back();
    } else {
      stack.push_back(letter);
    }
  }
  return BraidWord(w.strands(), std::move(stack));
}

ClosureStats closure_stats(const BraidWord& w) {
  const int n = w.strands();
  std::vector<int> at(n);  // at[pos] = strand occupying pos
  std::iota(at.begin(), at.end(), 0);
  for (int letter : w.letters()) {
    const int k = (letter < 0 ? -letter : letter) - 1;
    std::swap(at[k], at[k + 1]);
  }
  ClosureStats stats;
  stats.permutation.assign(n, 0);
  for (int pos = 0; pos < n; ++pos) stats.permutation[at[pos]] = pos;

  std::vector<bool> seen(n, false);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++stats.component_count;
    for (int x = s; !seen[x]; x = stats.permutation[x]) seen[x] = true;
  }
  stats.writhe = w.exponent_sum();
  return stats;
}

bool is_knot_closure(const BraidWord& w) { return closure_stats(w).component_count == 1; }

void require_knot(const BraidWord& w, const char* what) {
  const int components = closure_stats(w).component_count;
  if (components != 1) {
    throw KnotRequired(std::string(what) + " (closure has " + std::to_string(components) + " components)");
  }
}

SurfaceStats sqp_surface_stats(const BandFactorization& f) {
  const BraidWord word = expand_sqp(f);
  require_knot(word, "genus formula requires knot closure");
  SurfaceStats stats;
  stats.strands = f.strands;
  stats.bands = static_cast<int>(f.bands.size());
  stats.euler_characteristic = stats.strands - stats.bands;
  const int twice_genus = stats.bands - stats.strands + 1;
  if (twice_genus < 0 || twice_genus % 2 != 0) {
    throw ConsistencyError("knot closure with odd m - b + 1");
  }
  stats.genus = twice_genus / 2;
  return stats;
}

BraidWord torus_braid(int p, int q) {
  if (p < 1 || q < 1) throw DomainError("torus braid needs p >= 1 and q >= 1");
  std::vector<int> letters;
  append_twist(letters, 1, p - 1, q);
  return BraidWord(p, std::move(letters));
}

BraidWord cable_braid(const BraidWord& companion, int p, int q) {
  if (p < 1) throw DomainError("cable needs p >= 1");
  if (std::gcd(p, q) != 1) throw DomainError("cable parameters must be coprime");
  const int strands = companion.strands() * p;
  std::vector<int> letters;
  for (int letter : companion.letters()) {
    const int i = letter < 0 ? -letter : letter;
    const int sign = letter < 0 ? -1 : 1;
    // Ribbon i crosses ribbon i+1: each strand of ribbon i, rightmost first,
    // passes over the p strands of ribbon i+1.
    for (int r = 0; r < p; ++r) {
      const int start = i * p - r;
      for (int s = 0; s < p; ++s) letters.push_back(sign * (start + s));
    }
  }
  // Parallel copies follow the blackboard framing, which is the writhe.
  const int twist = q - p * companion.exponent_sum();
  append_twist(letters, 1, p - 1, twist);
  return BraidWord(strands, std::move(letters));
}

}  // namespace qpknot
