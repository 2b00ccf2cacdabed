#pragma once

#include "qpknot/braid.hpp"

namespace qpknot {

/// Cusp and crossing counts of the Legendrian front obtained from a braid
/// closure. Each strand of the closure contributes one left cusp; each
/// negative letter is realized with one extra zigzag, which adds a left cusp
/// and a down-left cusp. Positive letters are plain crossings.
struct FrontStats {
  int strands = 0;
  int positive_letters = 0;
  int negative_letters = 0;
  int left_cusps = 0;
  int down_left_cusps = 0;
  int up_right_cusps = 0;
  int writhe = 0;

  int tb() const noexcept { return writhe - left_cusps; }
  int rot_abs() const noexcept {
    const int d = down_left_cusps - up_right_cusps;
    return d < 0 ? -d : d;
  }
};

/// Throws KnotRequired for multi-component closures.
FrontStats legendrianize(const BraidWord& w);

/// tb + |rot| of the Legendrianized closure; equals -b + writhe.
int bennequin_sum(const BraidWord& w);

/// ceil((tb + |rot| + 1) / 2), a lower bound for the slice genus of the closure.
int slice_genus_lower_bound(const BraidWord& w);

/// Same arithmetic as slice_genus_lower_bound; a lower bound for tau.
int tau_lower_bound(const BraidWord& w);

}  // namespace qpknot
