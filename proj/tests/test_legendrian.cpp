#include <doctest.h>

#include "oracles.hpp"
#include "qpknot/legendrian.hpp"
#include "qpknot/sampling.hpp"
#include "qpknot/text.hpp"

using namespace qpknot;

namespace {

// Smallest integer g with 2g - 1 >= s, by search.
int smallest_genus_for(int s) {
  int g = -1000;
  while (2 * g - 1 < s) ++g;
  return g;
}

}  // namespace

TEST_SUITE("legendrian") {
  TEST_CASE("unknot template") {
    const FrontStats f = legendrianize(BraidWord(1));
    CHECK(f.tb() == -1);
    CHECK(f.rot_abs() == 0);
    CHECK(slice_genus_lower_bound(BraidWord(1)) == 0);
    CHECK(tau_lower_bound(BraidWord(1)) == 0);
  }

  TEST_CASE("trefoil and its mirror") {
    const BraidWord t = parse_braid_text("s1^3 @2");
    const FrontStats f = legendrianize(t);
    CHECK(f.tb() == 1);
    CHECK(f.rot_abs() == 0);
    CHECK(bennequin_sum(t) == 1);
    CHECK(slice_genus_lower_bound(t) == 1);
    CHECK(tau_lower_bound(t) == 1);

    const BraidWord m = t.mirror();
    CHECK(bennequin_sum(m) == -5);
    CHECK(tau_lower_bound(m) == -2);
  }

  TEST_CASE("three-strand word with mixed signs") {
    const FrontStats f = legendrianize(parse_braid_text("s1 s2' s1' s1 @3"));
    CHECK(f.positive_letters == 2);
    CHECK(f.negative_letters == 2);
    CHECK(f.left_cusps == 5);
    CHECK(f.tb() == -5);
    CHECK(f.rot_abs() == 2);
  }

  TEST_CASE("torus (3,4) bound is sharp") { CHECK(slice_genus_lower_bound(torus_braid(3, 4)) == 3); }

  TEST_CASE("links are rejected") {
    CHECK_THROWS_AS(legendrianize(BraidWord(2, {1, 1})), KnotRequired);
    CHECK_THROWS_AS(bennequin_sum(BraidWord(3, {1})), KnotRequired);
  }

  TEST_CASE("tb + |rot| = -b + writhe on random knot words") {
    Rng rng(101);
    for (int k = 0; k < 300; ++k) {
      const BraidWord w = random_knot_braid(rng, 6, 14);
      const FrontStats f = legendrianize(w);
      const oracle::LetterCounts c = oracle::count_letters(w);
      CHECK(f.positive_letters + f.negative_letters == static_cast<int>(w.length()));
      CHECK(f.tb() == -w.strands() + c.positive - 2 * c.negative);
      CHECK(f.rot_abs() == c.negative);
      CHECK(f.tb() + f.rot_abs() == -w.strands() + c.positive - c.negative);
      CHECK(slice_genus_lower_bound(w) == smallest_genus_for(bennequin_sum(w)));
      CHECK(tau_lower_bound(w) == slice_genus_lower_bound(w));
    }
  }

  TEST_CASE("quasipositive factorizations attain -b + m") {
    Rng rng(202);
    for (int k = 0; k < 200; ++k) {
      const QPFactorization f = random_qp_factorization(rng, 6, 10, 6);
      const int m = static_cast<int>(f.factors.size());
      CHECK(bennequin_sum(expand_qp(f)) == m - f.strands);
    }
  }

  TEST_CASE("slice-Bennequin is sharp on band factorizations") {
    Rng rng(303);
    for (int k = 0; k < 200; ++k) {
      const BandFactorization f = random_band_factorization(rng, 6, 10);
      CHECK(slice_genus_lower_bound(expand_sqp(f)) == sqp_surface_stats(f).genus);
    }
  }
}
