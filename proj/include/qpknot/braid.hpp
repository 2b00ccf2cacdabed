#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qpknot/errors.hpp"

namespace qpknot {

/// A word in the braid group B_n. Letter k > 0 is sigma_k, k < 0 is sigma_|k|^-1.
/// Words are stored as given; cancellation only happens through free_reduce.
class BraidWord {
public:
  BraidWord() = default;
  explicit BraidWord(int strands, std::vector<int> letters = {});

  int strands() const noexcept { return strands_; }
  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  /// Sum of letter signs.
  int exponent_sum() const noexcept;

  /// Same strands, letters appended. Throws DomainError if strand counts differ.
  BraidWord concat(const BraidWord& other) const;
  /// Group inverse: letters reversed and negated.
  BraidWord inverse() const;
  /// Mirror image of the closure: every letter negated, order kept.
  BraidWord mirror() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
  int strands_ = 1;
  std::vector<int> letters_;
};

/// The band generator sigma_{i,j}, 1 <= i < j <= n.
struct BandGenerator {
  int i = 1;
  int j = 2;
  friend bool operator==(const BandGenerator&, const BandGenerator&) = default;
};

struct BandFactorization {
  int strands = 1;
  std::vector<BandGenerator> bands;
  friend bool operator==(const BandFactorization&, const BandFactorization&) = default;
};

/// One factor w sigma_index w^-1 of a quasipositive product.
struct QPFactor {
  BraidWord conjugator;
  int index = 1;
  friend bool operator==(const QPFactor&, const QPFactor&) = default;
};

struct QPFactorization {
  int strands = 1;
  std::vector<QPFactor> factors;
  friend bool operator==(const QPFactorization&, const QPFactorization&) = default;
};

struct ClosureStats {
  /// permutation[s] is the bottom position of the strand starting at top position s (0-based).
  std::vector<int> permutation;
  int component_count = 0;
  int writhe = 0;
};

/// Statistics of the surface built from `strands` disks and `bands` positive bands.
struct SurfaceStats {
  int strands = 0;
  int bands = 0;
  int euler_characteristic = 0;
  int genus = 0;
};

/// (sigma_i ... sigma_{j-2}) sigma_{j-1} (sigma_i ... sigma_{j-2})^-1 in B_n.
BraidWord expand_band(BandGenerator band, int strands);
BraidWord expand_sqp(const BandFactorization& f);
BraidWord expand_qp(const QPFactorization& f);

/// The QP factorization with conjugators sigma_i ... sigma_{j-2} and index j-1 for each band.
QPFactorization as_qp(const BandFactorization& f);

/// Cancels adjacent sigma_k sigma_k^-1 pairs until none remain.
BraidWord free_reduce(const BraidWord& w);

ClosureStats closure_stats(const BraidWord& w);
bool is_knot_closure(const BraidWord& w);

/// Throws KnotRequired with `what` unless the closure of w has one component.
void require_knot(const BraidWord& w, const char* what);

SurfaceStats sqp_surface_stats(const BandFactorization& f);

/// (sigma_1 ... sigma_{p-1})^q in B_p.
BraidWord torus_braid(int p, int q);

/// Braid of the (p, q)-cable of the closure of `companion`, measured against the
/// Seifert framing. Each strand becomes p parallel strands; the twisting
/// needed to correct the blackboard framing is placed on the first p strands.
BraidWord cable_braid(const BraidWord& companion, int p, int q);

}  // namespace qpknot
