#include "qpknot/report.hpp"

#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qpknot/invariants.hpp"
#include "qpknot/legendrian.hpp"
#include "qpknot/sampling.hpp"
#include "qpknot/text.hpp"

namespace qpknot {

using nlohmann::json;

namespace {

// Reduced Burau determinants grow quickly; beyond this the int64 coefficients
// of the Bareiss elimination are at risk, so braid invariants are skipped.
constexpr int kMaxInvariantStrands = 16;
constexpr std::size_t kMaxInvariantLength = 600;

std::optional<BraidWord> representative(const KnotExpression& e) {
  if (const auto* t = std::get_if<TorusNode>(&e.node)) return torus_braid(t->p, t->q);
  if (const auto* it = std::get_if<IteratedTorusNode>(&e.node)) return iterated_torus_braid(it->stages);
  if (const auto* c = std::get_if<BraidClosureNode>(&e.node)) return c->braid.word;
  if (const auto* m = std::get_if<MirrorNode>(&e.node)) {
    auto w = representative(*m->child);
    if (w) return w->mirror();
    return std::nullopt;
  }
  if (const auto* s = std::get_if<ConnectedSumNode>(&e.node)) {
    // beta_1 on strands 1..a, beta_2 shifted onto a..a+b-1, sharing one strand.
    std::vector<int> letters;
    int strands = 1;
    for (const ExprPtr& x : s->summands) {
      auto w = representative(*x);
      if (!w) return std::nullopt;
      for (int k : w->letters()) letters.push_back(k > 0 ? k + strands - 1 : k - strands + 1);
      strands += w->strands() - 1;
    }
    return BraidWord(strands, std::move(letters));
  }
  if (is_evident_unknot(e)) return BraidWord(1);
  return std::nullopt;
}

// Alexander polynomial of nodes without a braid representative.
std::optional<std::pair<LaurentPoly, std::string>> family_alexander(const KnotExpression& e) {
  if (const auto* t = std::get_if<TwistNode>(&e.node))
    return std::pair{twist_family_alexander(t->n), std::string("twist_family_alexander")};
  if (const auto* d = std::get_if<WhiteheadDoubleNode>(&e.node))
    return std::pair{twist_family_alexander(d->n), std::string("twist_family_alexander")};
  if (const auto* m = std::get_if<MirrorNode>(&e.node)) {
    if (auto r = family_alexander(*m->child)) return r;
    if (auto w = representative(*m->child)) return std::pair{alexander_burau(*w), std::string("alexander_burau")};
    return std::nullopt;
  }
  if (const auto* s = std::get_if<ConnectedSumNode>(&e.node)) {
    LaurentPoly product = LaurentPoly::constant(1);
    for (const ExprPtr& x : s->summands) {
      if (auto w = representative(*x)) {
        product = product * alexander_burau(*w);
      } else if (auto r = family_alexander(*x)) {
        product = product * r->first;
      } else {
        return std::nullopt;
      }
    }
    return std::pair{normalize_alexander(product), std::string("product over summands")};
  }
  return std::nullopt;
}

json braid_section(const BraidWord& w, const ClosureStats& stats) {
  json b;
  b["text"] = format_braid(w);
  b["strands"] = w.strands();
  b["length"] = w.length();
  b["writhe"] = stats.writhe;
  b["components"] = stats.component_count;
  return b;
}

bool too_large(const BraidWord& w) {
  return w.strands() > kMaxInvariantStrands || w.length() > kMaxInvariantLength;
}

void add_braid_invariants(json& report, const BraidWord& w, const BraidPresentation* presentation,
                          std::vector<std::string>& warnings) {
  const FrontStats front = legendrianize(w);
  json leg;
  leg["tb"] = front.tb();
  leg["rot_abs"] = front.rot_abs();
  leg["left_cusps"] = front.left_cusps;
  leg["down_left_cusps"] = front.down_left_cusps;
  leg["up_right_cusps"] = front.up_right_cusps;
  leg["positive_letters"] = front.positive_letters;
  leg["negative_letters"] = front.negative_letters;
  leg["bennequin_sum"] = bennequin_sum(w);
  report["legendrian"] = leg;

  json bounds;
  bounds["slice_genus_lower_bound"] = slice_genus_lower_bound(w);
  bounds["tau_lower_bound"] = tau_lower_bound(w);
  if (presentation && presentation->bands) bounds["sqp_surface_genus"] = sqp_surface_stats(*presentation->bands).genus;
  report["bounds"] = bounds;

  if (too_large(w)) {
    warnings.push_back("braid too large for exact Alexander and signature computation; skipped");
    return;
  }
  try {
    const LaurentPoly burau = alexander_burau(w);
    const SeifertMatrix v = seifert_matrix(w);
    const LaurentPoly seifert = alexander_seifert(v);
    if (!(burau == seifert)) {
      throw ConsistencyError("oracle mismatch: Burau gives " + burau.to_string() + ", Seifert matrix gives " +
                             seifert.to_string());
    }
    report["alexander"] = {{"terms", laurent_to_json(burau)},
                           {"text", burau.to_string()},
                           {"source", "alexander_burau = alexander_seifert"}};
    report["signature"] = signature(v);
    report["seifert_matrix_size"] = v.size();
    report["determinant"] = determinant(burau);
    report["fox_milnor_necessary"] = fox_milnor_necessary(burau);
  } catch (const std::overflow_error&) {
    warnings.push_back("coefficient overflow in exact Alexander computation; skipped");
  }
}

void add_verdict(json& report, const KnotExpression& e, const ClassifierOptions& options,
                 std::vector<std::string>& warnings) {
  const Verdict v = Classifier(options).classify(e);
  if (const std::string bad = v.consistency_violation(); !bad.empty())
    throw ConsistencyError("verdict violates the inclusion chain: " + bad);
  report["verdict"] = verdict_to_json(v);
  const Certificate root = v.certificate();
  report["certificate"] = certificate_to_json(root);

  if (uses_rule(root, "R-ALT"))
    warnings.push_back("sign convention: signature of the right-handed trefoil is -2, tau = -signature/2");
  if (root->conjectural) warnings.push_back("some facts rest on a conjectural rule (R-WHDOUBLE-CONJ)");
  if (!v.tau) warnings.push_back("tau is not determined by the available rules");
}

json base_report(const std::string& kind, const std::string& input) {
  json report;
  report["schema"] = kReportSchema;
  report["kind"] = kind;
  report["input"] = input;
  return report;
}

void finish(json& report, std::vector<std::string>& warnings) { report["warnings"] = warnings; }

// Shared sub-derivations are printed once; later occurrences are abbreviated.
void render_certificate(std::ostream& out, const json& cert, int depth, std::set<std::string>& seen) {
  const std::string head = cert["rule"].get<std::string>() + ": " + cert["claim"].get<std::string>();
  out << std::string(static_cast<std::size_t>(2 * depth + 2), ' ') << head;
  if (cert["conjectural"].get<bool>()) out << " [conjectural]";
  const bool repeat = !seen.insert(head).second && !cert["premises"].empty();
  out << (repeat ? " (derived above)\n" : "\n");
  if (repeat) return;
  for (const json& p : cert["premises"]) render_certificate(out, p, depth + 1, seen);
}

std::string scalar(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

}  // namespace

json laurent_to_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [exponent, coefficient] : p.terms())
    terms.push_back({{"exponent", exponent}, {"coefficient", coefficient}});
  return terms;
}

json certificate_to_json(const Certificate& cert) {
  json premises = json::array();
  for (const Certificate& p : cert->premises) premises.push_back(certificate_to_json(p));
  return {{"rule", cert->rule}, {"claim", cert->claim}, {"conjectural", cert->conjectural}, {"premises", premises}};
}

json verdict_to_json(const Verdict& v) {
  json classes;
  for (KnotClass c : kAllClasses) {
    const auto& f = v.fact(c);
    classes[to_string(c)] = {{"value", to_string(v.get(c))}, {"rule", f ? json(f->certificate->rule) : json(nullptr)}};
  }
  json out;
  out["classes"] = classes;
  auto number = [](const std::optional<Fact<std::int64_t>>& f) -> json {
    if (!f) return {{"value", nullptr}, {"rule", nullptr}};
    return {{"value", f->value}, {"rule", f->certificate->rule}};
  };
  out["tau"] = number(v.tau);
  out["genus"] = number(v.genus);
  out["g4"] = number(v.g4);
  return out;
}

json braid_report(const std::string& input, const ClassifierOptions& options) {
  const BraidPresentation presentation = parse_braid_presentation(input);
  const BraidWord& w = presentation.word;
  json report = base_report("braid", input);
  report["canonical"] = format_presentation(presentation);
  const ClosureStats stats = closure_stats(w);
  report["braid"] = braid_section(w, stats);
  std::vector<std::string> warnings;
  if (stats.component_count != 1) {
    warnings.push_back("closure is a link with " + std::to_string(stats.component_count) +
                       " components; knot invariants and classification skipped");
    finish(report, warnings);
    return report;
  }
  add_braid_invariants(report, w, &presentation, warnings);
  add_verdict(report, *make_closure(presentation), options, warnings);
  finish(report, warnings);
  return report;
}

json expression_report(const std::string& input, const ClassifierOptions& options) {
  const ExprPtr e = parse_expression_text(input);
  json report = base_report("expression", input);
  report["canonical"] = format_expression(*e);
  std::vector<std::string> warnings;
  if (auto w = representative(*e)) {
    report["braid"] = braid_section(*w, closure_stats(*w));
    add_braid_invariants(report, *w, nullptr, warnings);
  } else if (auto alex = family_alexander(*e)) {
    report["alexander"] = {
        {"terms", laurent_to_json(alex->first)}, {"text", alex->first.to_string()}, {"source", alex->second}};
    report["determinant"] = determinant(alex->first);
    report["fox_milnor_necessary"] = fox_milnor_necessary(alex->first);
  }
  add_verdict(report, *e, options, warnings);
  finish(report, warnings);
  return report;
}

std::string render_text(const json& report) {
  std::ostringstream out;
  out << "input:      " << report["input"].get<std::string>() << '\n';
  if (report.contains("canonical")) out << "canonical:  " << report["canonical"].get<std::string>() << '\n';
  if (report.contains("braid")) {
    const json& b = report["braid"];
    out << "braid:      " << b["text"].get<std::string>() << "  (writhe " << b["writhe"] << ", " << b["components"]
        << " component" << (b["components"] == 1 ? "" : "s") << ")\n";
  }
  if (report.contains("legendrian")) {
    const json& l = report["legendrian"];
    out << "legendrian: tb = " << l["tb"] << ", |rot| = " << l["rot_abs"] << ", bennequin sum = "
        << l["bennequin_sum"] << '\n';
  }
  if (report.contains("bounds")) {
    out << "bounds:     ";
    const char* sep = "";
    for (const auto& [key, value] : report["bounds"].items()) {
      out << sep << key << " = " << value;
      sep = ", ";
    }
    out << '\n';
  }
  if (report.contains("alexander")) {
    out << "alexander:  " << report["alexander"]["text"].get<std::string>() << "  ["
        << report["alexander"]["source"].get<std::string>() << "]\n";
  }
  if (report.contains("signature")) out << "signature:  " << report["signature"] << '\n';
  if (report.contains("determinant")) {
    out << "determinant: " << report["determinant"] << "  (Fox-Milnor necessary condition "
        << (report["fox_milnor_necessary"].get<bool>() ? "holds" : "fails") << ")\n";
  }
  if (report.contains("verdict")) {
    const json& v = report["verdict"];
    out << "classes:\n";
    for (KnotClass c : kAllClasses) {
      const json& f = v["classes"][to_string(c)];
      out << "  " << to_string(c) << ": " << f["value"].get<std::string>();
      if (!f["rule"].is_null()) out << "  [" << f["rule"].get<std::string>() << "]";
      out << '\n';
    }
    for (const char* key : {"tau", "genus", "g4"}) {
      const json& f = v[key];
      out << "  " << key << ": " << (f["value"].is_null() ? std::string("unknown") : scalar(f["value"]));
      if (!f["rule"].is_null()) out << "  [" << f["rule"].get<std::string>() << "]";
      out << '\n';
    }
    out << "certificate:\n";
    std::set<std::string> seen;
    for (const json& p : report["certificate"]["premises"]) render_certificate(out, p, 0, seen);
  }
  for (const json& w : report["warnings"]) out << "warning: " << w.get<std::string>() << '\n';
  return out.str();
}

SelftestResult run_selftest(std::uint64_t seed) {
  SelftestResult result;
  Rng rng(seed);
  auto record = [&](const std::string& name, int failures, int total, const std::string& first) {
    const bool pass = failures == 0;
    result.ok = result.ok && pass;
    std::string line = std::string(pass ? "PASS " : "FAIL ") + name + ": " + std::to_string(total - failures) + "/" +
                       std::to_string(total);
    if (!pass) line += " (first failure: " + first + ")";
    result.lines.push_back(line);
  };

  {
    int failures = 0, total = 0;
    std::string first;
    for (int k = 0; k < 150; ++k, ++total) {
      const BraidWord w = random_knot_braid(rng, 6, 14);
      try {
        if (!(alexander_burau(w) == alexander_seifert(seifert_matrix(w)))) throw ConsistencyError("polynomials differ");
      } catch (const std::exception& err) {
        if (failures++ == 0) first = format_braid(w) + ": " + err.what();
      }
    }
    const LaurentPoly fig8 = LaurentPoly::from_terms({{-1, -1}, {0, 3}, {1, -1}});
    ++total;
    if (!(alexander_burau(BraidWord(3, {1, -2, 1, -2})) == fig8) && failures++ == 0) first = "figure-eight";
    record("oracle-equivalence (Burau vs Seifert)", failures, total, first);
  }

  {
    int failures = 0, total = 0;
    std::string first;
    const Classifier classifier;
    for (int p = 2; p <= 7; ++p) {
      for (int q = p + 1; q <= 7; ++q) {
        if (std::gcd(p, q) != 1) continue;
        ++total;
        const auto tau = classifier.tau_certificate(*make_torus(p, q));
        const std::int64_t expected = static_cast<std::int64_t>(p - 1) * (q - 1) / 2;
        if ((!tau || tau->value != expected || slice_genus_lower_bound(torus_braid(p, q)) != expected) &&
            failures++ == 0)
          first = "T(" + std::to_string(p) + "," + std::to_string(q) + ")";
      }
    }
    record("torus tau = genus = slice-Bennequin bound", failures, total, first);
  }

  {
    int failures = 0, total = 0;
    std::string first;
    const Classifier classifier;
    for (int k = 0; k < 300; ++k, ++total) {
      const ExprPtr e = random_expression(rng, 3);
      const std::string text = format_expression(*e);
      try {
        const Verdict v = classifier.classify(*e);
        if (const std::string bad = v.consistency_violation(); !bad.empty()) throw ConsistencyError(bad);
        if (!(*parse_expression_text(text) == *e)) throw ConsistencyError("text round trip changed the expression");
      } catch (const std::exception& err) {
        if (failures++ == 0) first = text + ": " + err.what();
      }
    }
    record("chain consistency and round trip on random expressions", failures, total, first);
  }
  return result;
}

}  // namespace qpknot
