// One line per acceptance criterion; exit status is nonzero if any fails.
#include <cstdio>
#include <numeric>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "qpknot/classifier.hpp"
#include "qpknot/invariants.hpp"
#include "qpknot/legendrian.hpp"
#include "qpknot/sampling.hpp"
#include "qpknot/text.hpp"

using namespace qpknot;

namespace {

int failures = 0;

struct Check {
  int id;
  const char* title;
  int cases = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok && first_failure.empty()) first_failure = what;
  }
  ~Check() {
    if (first_failure.empty()) {
      std::printf("PASS %d %s (%d checks)\n", id, title, cases);
    } else {
      ++failures;
      std::printf("FAIL %d %s: %s\n", id, title, first_failure.c_str());
    }
  }
};

std::string show(const std::optional<Fact<std::int64_t>>& f) { return f ? std::to_string(f->value) : "unknown"; }

ExprPtr parse(const std::string& s) { return parse_expression_text(s); }

bool perfect_square_search(std::int64_t x) {
  for (std::int64_t r = 0; r * r <= x; ++r)
    if (r * r == x) return true;
  return false;
}

void torus_table() {
  Check c{1, "torus knot tau and slice-Bennequin bound"};
  for (int p = 2; p <= 7; ++p) {
    for (int q = p + 1; q <= 7; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const std::int64_t expected = (p - 1) * (q - 1) / 2;
      const auto tau = tau_certificate(*make_torus(p, q));
      const int bound = slice_genus_lower_bound(torus_braid(p, q));
      std::ostringstream what;
      what << "T(" << p << "," << q << "): tau " << show(tau) << ", bound " << bound << ", want " << expected;
      c.expect(tau && tau->value == expected && bound == expected, what.str());
    }
  }
}

void qp_sharpness() {
  Check c{2, "quasipositive braids have tb + |rot| = -b + m"};
  Rng rng(2002);
  for (int k = 0; k < 200; ++k) {
    const QPFactorization f = random_qp_factorization(rng, 6, 10, 6);
    const BraidWord w = expand_qp(f);
    const int expected = -f.strands + static_cast<int>(f.factors.size());
    const FrontStats s = legendrianize(w);
    c.expect(is_knot_closure(w) && bennequin_sum(w) == expected && s.tb() + s.rot_abs() == expected,
             format_braid(w) + ": sum " + std::to_string(bennequin_sum(w)) + ", want " + std::to_string(expected));
  }
}

void sqp_triple() {
  Check c{3, "band factorizations: surface genus = slice bound = tau via R-SQP"};
  Rng rng(3003);
  for (int k = 0; k < 200; ++k) {
    const BandFactorization f = random_band_factorization(rng, 6, 10);
    const BraidWord w = expand_sqp(f);
    const int genus = sqp_surface_stats(f).genus;
    // Independent count: disks plus bands give chi = b - m, one boundary component.
    const int chi_genus = (static_cast<int>(f.bands.size()) - f.strands + 1) / 2;
    const int bound = slice_genus_lower_bound(w);
    const ExprPtr e = make_closure(BraidPresentation::from_bands(f));
    const auto tau = tau_certificate(*e);
    const Verdict v = classify(*e);
    const std::string text = format_presentation(BraidPresentation::from_bands(f));
    c.expect(is_knot_closure(w), text + ": not a knot");
    c.expect(genus == chi_genus && bound == genus, text + ": genus " + std::to_string(genus) + ", bound " +
                                                        std::to_string(bound));
    c.expect(tau && tau->value == genus && uses_rule(tau->certificate, "R-SQP"),
             text + ": tau " + show(tau) + " without R-SQP");
    c.expect(v.get(KnotClass::SQP) == Tri::Yes && v.g4 && v.g4->value == genus && v.genus &&
                 v.genus->value == genus,
             text + ": verdict g4 " + show(v.g4) + ", g " + show(v.genus));
  }
}

void oracle_equivalence() {
  Check c{4, "Burau and Seifert Alexander polynomials agree"};
  Rng rng(4004);
  for (int k = 0; k < 300; ++k) {
    const BraidWord w = random_knot_braid(rng, 6, 14);
    const LaurentPoly burau = alexander_burau(w);
    c.expect(free_reduce(w).length() <= 14 && burau == alexander_seifert(seifert_matrix(w)),
             format_braid(w) + ": Burau " + burau.to_string());
    c.expect(oracle::burau_agrees(w, burau), format_braid(w) + ": unreduced Burau minor disagrees");
  }
  const LaurentPoly fig8 = alexander_burau(parse_braid_text("(s1 s2')^2 @3"));
  c.expect(fig8 == LaurentPoly::from_terms({{1, -1}, {0, 3}, {-1, -1}}), "figure-8 gives " + fig8.to_string());
}

void twist_suite() {
  Check c{5, "twist knots: tau = 0, NotQP iff 4n+1 is not a square"};
  for (int n = 1; n <= 50; ++n) {
    const ExprPtr e = make_twist(n);
    const Verdict v = classify(*e);
    const bool not_qp_expected = !perfect_square_search(4 * n + 1);
    const std::string name = "twist(" + std::to_string(n) + ")";
    c.expect(v.tau && v.tau->value == 0, name + ": tau " + show(v.tau));
    c.expect((v.get(KnotClass::NotQP) == Tri::Yes) == not_qp_expected,
             name + ": NotQP " + to_string(v.get(KnotClass::NotQP)));
  }
  for (int n : {2, 6, 12}) {
    const Verdict v = classify(*make_twist(n));
    c.expect(v.get(KnotClass::QP) == Tri::Unknown && v.get(KnotClass::NotQP) == Tri::Unknown,
             "twist(" + std::to_string(n) + ") should stay unknown");
  }
}

void sign_anchor() {
  Check c{6, "signature sign convention"};
  const int sigma = signature(seifert_matrix(parse_braid_text("s1^3 @2")));
  c.expect(sigma == -2, "sigma(s1^3) = " + std::to_string(sigma));

  const ExprPtr alt = parse("closure(\"s1^3 @2\"){alternating}");
  const Verdict va = classify(*alt);
  c.expect(va.tau && va.tau->value == 1 && uses_rule(va.tau->certificate, "R-ALT"),
           "alternating trefoil: tau " + show(va.tau));
  const auto torus_tau = tau_certificate(*make_torus(2, 3));
  c.expect(torus_tau && va.tau && torus_tau->value == va.tau->value, "R-ALT disagrees with the torus rule");

  const int fig8_sigma = signature(seifert_matrix(parse_braid_text("(s1 s2')^2 @3")));
  c.expect(fig8_sigma == 0, "figure-8 sigma " + std::to_string(fig8_sigma));
  for (const char* text : {"closure(\"(s1 s2')^2 @3\"){alternating,g4=1}", "twist(1)"}) {
    const Verdict v = classify(*parse(text));
    c.expect(v.tau && v.tau->value == 0 && v.get(KnotClass::NotQP) == Tri::Yes,
             std::string(text) + ": tau " + show(v.tau) + ", NotQP " + to_string(v.get(KnotClass::NotQP)));
  }
}

void iterated_torus() {
  Check c{7, "two-stage cables: SQP iff all n_i >= 0, tau = g"};
  for (int p1 : {2, 3})
    for (int n1 = -1; n1 <= 2; ++n1)
      for (int p2 : {2, 3})
        for (int n2 = -1; n2 <= 2; ++n2) {
          const std::vector<CableStage> stages{{p1, n1}, {p2, n2}};
          const Verdict v = classify(*make_iterated_torus(stages));
          const bool sqp = n1 >= 0 && n2 >= 0;
          std::ostringstream name;
          name << "cable[(" << p1 << "," << n1 << "),(" << p2 << "," << n2 << ")]";
          c.expect(v.get(KnotClass::SQP) == (sqp ? Tri::Yes : Tri::No), name.str() + ": SQP wrong");
          if (!sqp) continue;
          // genus of T(p1, q1) then one cabling step with (p2, q2)
          const std::int64_t q1 = p1 * n1 + 1, q2 = p2 * n2 + 1;
          const std::int64_t g = p2 * ((p1 - 1) * (q1 - 1) / 2) + (p2 - 1) * (q2 - 1) / 2;
          c.expect(v.tau && v.tau->value == g && v.genus && v.genus->value == g,
                   name.str() + ": tau " + show(v.tau) + ", g " + show(v.genus) + ", want " + std::to_string(g));
        }
  const Verdict v = classify(*parse("cable[(2,1),(2,0)]"));
  c.expect(v.get(KnotClass::SQP) == Tri::Yes && v.tau && v.tau->value == 2 && v.genus && v.genus->value == 2,
           "cable[(2,1),(2,0)]: tau " + show(v.tau) + ", g " + show(v.genus));
}

void chain_fuzz() {
  Check c{8, "random expressions respect the inclusion chain"};
  Rng rng(8008);
  for (int k = 0; k < 1000; ++k) {
    const ExprPtr e = random_expression(rng, 4);
    const std::string text = format_expression(*e);
    try {
      const Verdict v = classify(*e);
      const std::string violation = v.consistency_violation();
      c.expect(violation.empty(), text + ": " + violation);
      // Recheck the chain here rather than trusting consistency_violation alone.
      auto yes = [&](KnotClass k) { return v.get(k) == Tri::Yes; };
      auto no = [&](KnotClass k) { return v.get(k) == Tri::No; };
      bool chain = true;
      const KnotClass order[] = {KnotClass::PositiveBraid, KnotClass::Positive, KnotClass::SQP, KnotClass::QP};
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) chain = chain && !(yes(order[i]) && no(order[j]));
      chain = chain && !(yes(KnotClass::QP) && yes(KnotClass::NotQP)) && !(no(KnotClass::QP) && no(KnotClass::NotQP));
      if (v.tau && v.g4) chain = chain && std::abs(v.tau->value) <= v.g4->value;
      if (v.g4 && v.genus) chain = chain && v.g4->value <= v.genus->value;
      c.expect(chain, text + ": chain violated");
    } catch (const Contradiction& err) {
      c.expect(false, text + ": " + err.what());
    }
  }
}

}  // namespace

int main() {
  torus_table();
  qp_sharpness();
  sqp_triple();
  oracle_equivalence();
  twist_suite();
  sign_anchor();
  iterated_torus();
  chain_fuzz();
  return failures == 0 ? 0 : 1;
}
