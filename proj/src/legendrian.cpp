#include "qpknot/legendrian.hpp"

namespace qpknot {

namespace {

int ceil_half(int x) { return x >= 0 ? (x + 1) / 2 : -((-x) / 2); }

}  // namespace

FrontStats legendrianize(const BraidWord& w) {
  require_knot(w, "Legendrian invariants require a knot closure");
  FrontStats front;
  front.strands = w.strands();
  for (int letter : w.letters()) {
    if (letter > 0) {
      ++front.positive_letters;
    } else {
      ++front.negative_letters;
    }
  }
  front.writhe = front.positive_letters - front.negative_letters;
  front.left_cusps = front.strands + front.negative_letters;
  front.down_left_cusps = front.negative_letters;
  front.up_right_cusps = 0;
  return front;
}

int bennequin_sum(const BraidWord& w) {
  const FrontStats front = legendrianize(w);
  return front.tb() + front.rot_abs();
}

int slice_genus_lower_bound(const BraidWord& w) { return ceil_half(bennequin_sum(w) + 1); }

int tau_lower_bound(const BraidWord& w) { return slice_genus_lower_bound(w); }

}  // namespace qpknot
