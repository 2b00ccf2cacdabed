#include "qpknot/classifier.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "qpknot/invariants.hpp"
#include "qpknot/legendrian.hpp"
#include "qpknot/text.hpp"

namespace qpknot {

Certificate derive(std::string rule, std::string claim, std::vector<Certificate> premises, bool conjectural) {
  for (const Certificate& p : premises) conjectural = conjectural || (p && p->conjectural);
  premises.erase(std::remove(premises.begin(), premises.end(), nullptr), premises.end());
  return std::make_shared<const Derivation>(Derivation{std::move(rule), std::move(claim), std::move(premises), conjectural});
}

std::vector<std::string> rules_used(const Certificate& cert) {
  std::vector<std::string> out;
  std::function<void(const Certificate&)> walk = [&](const Certificate& c) {
    if (!c) return;
    out.push_back(c->rule);
    for (const Certificate& p : c->premises) walk(p);
  };
  walk(cert);
  return out;
}

bool uses_rule(const Certificate& cert, const std::string& rule) {
  const auto rules = rules_used(cert);
  return std::find(rules.begin(), rules.end(), rule) != rules.end();
}

const char* to_string(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    case Tri::Unknown: break;
  }
  return "unknown";
}

const char* to_string(KnotClass c) {
  switch (c) {
    case KnotClass::PositiveBraid: return "PositiveBraid";
    case KnotClass::Positive: return "Positive";
    case KnotClass::SQP: return "SQP";
    case KnotClass::QP: return "QP";
    case KnotClass::NotQP: return "NotQP";
  }
  return "?";
}

Tri Verdict::get(KnotClass c) const {
  const auto& f = fact(c);
  if (!f) return Tri::Unknown;
  return f->value ? Tri::Yes : Tri::No;
}

Certificate Verdict::certificate() const {
  std::vector<Certificate> premises;
  for (KnotClass c : kAllClasses)
    if (fact(c)) premises.push_back(fact(c)->certificate);
  for (const auto* f : {&tau, &genus, &g4})
    if (*f) premises.push_back((*f)->certificate);
  return derive("VERDICT", "conjunction of established facts", std::move(premises));
}

std::string Verdict::consistency_violation() const {
  auto yes = [&](KnotClass c) { return get(c) == Tri::Yes; };
  auto no = [&](KnotClass c) { return get(c) == Tri::No; };
  if (yes(KnotClass::PositiveBraid) && !(yes(KnotClass::Positive) && yes(KnotClass::SQP) && yes(KnotClass::QP)))
    return "PositiveBraid=yes without Positive, SQP and QP";
  if (yes(KnotClass::Positive) && !yes(KnotClass::SQP)) return "Positive=yes without SQP=yes";
  if (yes(KnotClass::SQP) && !yes(KnotClass::QP)) return "SQP=yes without QP=yes";
  if (yes(KnotClass::QP) && yes(KnotClass::NotQP)) return "QP=yes and NotQP=yes";
  if (yes(KnotClass::NotQP) && !(no(KnotClass::SQP) && no(KnotClass::PositiveBraid) && no(KnotClass::QP)))
    return "NotQP=yes without SQP=no, PositiveBraid=no and QP=no";
  if (tau && g4 && std::abs(tau->value) > g4->value) return "|tau| > g4";
  return {};
}

TbTable TbTable::builtin() {
  TbTable table;
  table.set("T(1,1)", {-1, "builtin: the unknot has maximal tb -1"});
  return table;
}

void TbTable::set(const std::string& canonical_name, Entry entry) { entries_[canonical_name] = std::move(entry); }

const TbTable::Entry* TbTable::find(const std::string& canonical_name) const {
  auto it = entries_.find(canonical_name);
  return it == entries_.end() ? nullptr : &it->second;
}

std::int64_t iterated_torus_genus(const std::vector<CableStage>& stages) {
  std::int64_t g = 0;
  for (const CableStage& s : stages) {
    const std::int64_t q = s.q() < 0 ? -static_cast<std::int64_t>(s.q()) : s.q();
    g = s.p * g + (s.p - 1) * (q - 1) / 2;
  }
  return g;
}

BraidWord iterated_torus_braid(const std::vector<CableStage>& stages) {
  if (stages.empty()) throw DomainError("iterated torus knot needs at least one stage");
  const CableStage& first = stages.front();
  // T(p,-q) is the mirror of T(p,q).
  BraidWord w = first.q() > 0 ? torus_braid(first.p, first.q()) : torus_braid(first.p, -first.q()).mirror();
  for (std::size_t k = 1; k < stages.size(); ++k) w = cable_braid(w, stages[k].p, stages[k].q());
  return w;
}

namespace {

std::string str(std::int64_t v) { return std::to_string(v); }

std::string yes_no(bool v) { return v ? "yes" : "no"; }

// Working state for one expression node.
struct NodeFacts {
  std::string name;
  Verdict verdict;
  Certificate fibered;
  Certificate alternating;
  Certificate alt_tau;                    // tau obtained from the signature
  std::optional<Fact<std::int64_t>> tb;   // asserted maximal tb of this node
  std::optional<Fact<std::int64_t>> lower_bound;  // tau, g4 >= value
  bool changed = false;

  void set_class(KnotClass c, bool value, const Certificate& cert) {
    auto& slot = verdict.classes[static_cast<std::size_t>(c)];
    if (slot) {
      if (slot->value != value) {
        throw Contradiction("contradiction at " + name + ": " + to_string(c) + " derived as " + yes_no(slot->value) +
                            " by " + slot->certificate->rule + " and as " + yes_no(value) + " by " + cert->rule);
      }
      return;
    }
    slot = Fact<bool>{value, cert};
    changed = true;
  }

  void set_int(std::optional<Fact<std::int64_t>>& slot, const char* what, std::int64_t value,
               const Certificate& cert) {
    if (slot) {
      if (slot->value != value) {
        throw Contradiction("contradiction at " + name + ": " + what + " derived as " + str(slot->value) + " by " +
                            slot->certificate->rule + " and as " + str(value) + " by " + cert->rule);
      }
      return;
    }
    slot = Fact<std::int64_t>{value, cert};
    changed = true;
  }

  void set_tau(std::int64_t v, const Certificate& c) { set_int(verdict.tau, "tau", v, c); }
  void set_genus(std::int64_t v, const Certificate& c) { set_int(verdict.genus, "genus", v, c); }
  void set_g4(std::int64_t v, const Certificate& c) { set_int(verdict.g4, "g4", v, c); }

  Tri get(KnotClass c) const { return verdict.get(c); }
  const Certificate& cert(KnotClass c) const { return verdict.fact(c)->certificate; }
};

class Engine {
public:
  explicit Engine(const ClassifierOptions& options) : options_(options) {}

  NodeFacts evaluate(const KnotExpression& e) const {
    NodeFacts f;
    f.name = format_expression(e);
    apply_assertions(e.asserted, f);
    std::visit([&](const auto& node) { intrinsic(node, e, f); }, e.node);
    saturate(f);
    return f;
  }

private:
  const ClassifierOptions& options_;

  // ---- assertions -------------------------------------------------------

  static std::string note_or(const std::string& note) { return note.empty() ? "asserted" : note; }

  void apply_assertions(const Assertions& a, NodeFacts& f) const {
    if (a.fibered) f.fibered = derive("ASSERTED", f.name + " is fibered");
    if (a.alternating) f.alternating = derive("ASSERTED", f.name + " is alternating");
    if (a.g4) f.set_g4(a.g4->value, derive("ASSERTED", "g4(" + f.name + ") = " + str(a.g4->value) + " [" + note_or(a.g4->note) + "]"));
    if (a.genus) f.set_genus(a.genus->value, derive("ASSERTED", "g(" + f.name + ") = " + str(a.genus->value) + " [" + note_or(a.genus->note) + "]"));
    if (a.tb) f.tb = Fact<std::int64_t>{a.tb->value, derive("ASSERTED", "TB(" + f.name + ") = " + str(a.tb->value) + " [" + note_or(a.tb->note) + "]")};
  }

  // ---- maximal Thurston-Bennequin lookups --------------------------------

  std::optional<Fact<std::int64_t>> tb_of(const KnotExpression& k) const {
    const std::string name = format_expression(k);
    if (k.asserted.tb) {
      return Fact<std::int64_t>{k.asserted.tb->value,
                                derive("ASSERTED", "TB(" + name + ") = " + str(k.asserted.tb->value) + " [" +
                                                       note_or(k.asserted.tb->note) + "]")};
    }
    const std::string key = format_expression(KnotExpression{k.node, {}});
    if (const auto* entry = options_.tb_table.find(key)) {
      return Fact<std::int64_t>{entry->tb, derive("TB-TABLE", "TB(" + key + ") = " + str(entry->tb) + " [" + entry->source + "]")};
    }
    if (is_evident_unknot(k)) {
      if (const auto* entry = options_.tb_table.find("T(1,1)")) {
        return Fact<std::int64_t>{
            entry->tb, derive("TB-TABLE", "TB(" + name + ") = " + str(entry->tb) + " [" + name + " is the unknot; " +
                                              entry->source + "]")};
      }
    }
    return std::nullopt;
  }

  std::optional<Fact<std::int64_t>> tb_of_mirror(const KnotExpression& k) const {
    if (const auto* m = std::get_if<MirrorNode>(&k.node)) return tb_of(*m->child);
    return tb_of(KnotExpression{MirrorNode{std::make_shared<const KnotExpression>(KnotExpression{k.node, {}})}, {}});
  }

  // ---- importing facts from an equivalent expression ----------------------

  static void import_all(const NodeFacts& src, NodeFacts& f, const std::string& rule, const std::string& why) {
    auto wrap = [&](const Certificate& c, const std::string& claim) { return derive(rule, claim + " [" + why + "]", {c}); };
    for (KnotClass c : kAllClasses) {
      if (const auto& fact = src.verdict.fact(c))
        f.set_class(c, fact->value, wrap(fact->certificate, std::string(to_string(c)) + "(" + f.name + ") = " + yes_no(fact->value)));
    }
    if (src.verdict.tau) f.set_tau(src.verdict.tau->value, wrap(src.verdict.tau->certificate, "tau(" + f.name + ") = " + str(src.verdict.tau->value)));
    if (src.verdict.genus) f.set_genus(src.verdict.genus->value, wrap(src.verdict.genus->certificate, "g(" + f.name + ") = " + str(src.verdict.genus->value)));
    if (src.verdict.g4) f.set_g4(src.verdict.g4->value, wrap(src.verdict.g4->certificate, "g4(" + f.name + ") = " + str(src.verdict.g4->value)));
    if (src.fibered && !f.fibered) f.fibered = wrap(src.fibered, f.name + " is fibered");
    if (src.alternating && !f.alternating) f.alternating = wrap(src.alternating, f.name + " is alternating");
  }

  void as_unknot(NodeFacts& f, const std::string& why) const {
    import_all(evaluate(*make_torus(1, 1)), f, "R-UNKNOT", why);
  }

  // ---- node rules ---------------------------------------------------------

  void intrinsic(const TorusNode& t, const KnotExpression&, NodeFacts& f) const {
    const BraidWord word = torus_braid(t.p, t.q);
    f.set_class(KnotClass::PositiveBraid, true,
                derive("P1", f.name + " is the closure of the positive braid " + format_braid(word)));
    const std::int64_t g = static_cast<std::int64_t>(t.p - 1) * (t.q - 1) / 2;
    const Certificate c = derive("R-TORUS", "tau(" + f.name + ") = g(" + f.name + ") = (p-1)(q-1)/2 = " + str(g));
    f.set_tau(g, c);
    f.set_genus(g, c);
  }

  void intrinsic(const IteratedTorusNode& it, const KnotExpression&, NodeFacts& f) const {
    std::ostringstream steps;
    std::int64_t g = 0;
    for (const CableStage& s : it.stages) {
      const std::int64_t q = s.q() < 0 ? -static_cast<std::int64_t>(s.q()) : s.q();
      const std::int64_t next = s.p * g + (s.p - 1) * (q - 1) / 2;
      steps << " (" << s.p << "," << s.q() << "): " << s.p << "*" << g << " + " << (s.p - 1) << "*" << (q - 1)
            << "/2 = " << next << ";";
      g = next;
    }
    const Certificate genus = derive("R-CABLE-GENUS", "g(" + f.name + ") = " + str(g) + " via" + steps.str());
    f.set_genus(g, genus);

    const auto negative = std::find_if(it.stages.begin(), it.stages.end(), [](const CableStage& s) { return s.n < 0; });
    if (negative == it.stages.end()) {
      const Certificate sqp = derive("P4", f.name + " has every n_i >= 0, so it is strongly quasipositive");
      f.set_class(KnotClass::SQP, true, sqp);
      f.set_tau(g, derive("R-CABLE", "tau(" + f.name + ") = g = " + str(g), {sqp, genus}));
    } else {
      f.set_class(KnotClass::SQP, false,
                  derive("P4", f.name + " has n_" + str(negative - it.stages.begin() + 1) + " = " + str(negative->n) +
                                   " < 0, so it is not strongly quasipositive"));
    }
  }

  void intrinsic(const TwistNode& t, const KnotExpression&, NodeFacts& f) const {
    if (t.n == 0) {
      as_unknot(f, "twist(0) is the unknot");
      return;
    }
    const Certificate via = derive("R-TWIST-DOUBLE", f.name + " = wh+(T(1,1); " + str(t.n) + ")");
    double_rules(*make_torus(1, 1), t.n, via, f);
  }

  void intrinsic(const WhiteheadDoubleNode& d, const KnotExpression&, NodeFacts& f) const {
    if (d.n == 0 && is_evident_unknot(*d.companion)) {
      as_unknot(f, "the 0-twisted double of the unknot is the unknot");
      return;
    }
    double_rules(*d.companion, d.n, nullptr, f);
  }

  void double_rules(const KnotExpression& companion, int n, const Certificate& via, NodeFacts& f) const {
    const NodeFacts comp = evaluate(companion);

    if (const auto tb = tb_of(companion)) {
      const bool sqp = n <= tb->value;
      f.set_class(KnotClass::SQP, sqp,
                  derive("P6", f.name + (sqp ? " is" : " is not") + " strongly quasipositive: n = " + str(n) +
                                   (sqp ? " <= " : " > ") + "TB(" + comp.name + ") = " + str(tb->value),
                         {via, tb->certificate}));
    }

    if (const auto tb_bar = tb_of_mirror(companion)) {
      if (n >= -tb_bar->value) {
        const Certificate tau0 =
            derive("R-WHDOUBLE-0", "tau(" + f.name + ") = 0: n = " + str(n) + " >= -TB(mirror(" + comp.name +
                                       ")) = " + str(-tb_bar->value),
                   {via, tb_bar->certificate});
        f.set_tau(0, tau0);
        if (!fox_milnor_twist_family(n)) {
          const Certificate fm = derive(
              "FOX-MILNOR", "Delta(" + f.name + ") = " + twist_family_alexander(n).to_string() + " and 4n+1 = " +
                                str(4 * static_cast<std::int64_t>(n) + 1) +
                                " is not a square, so Delta is not F(T)F(T^-1) and " + f.name + " is not slice");
          f.set_class(KnotClass::NotQP, true,
                      derive("N4", f.name + " is not quasipositive: tau = 0 while g4 > 0", {tau0, fm}));
        }
      }
    }

    if (options_.enable_conjectural && comp.verdict.tau) {
      const std::int64_t tk = comp.verdict.tau->value;
      if (n <= 2 * tk - 1) {
        const Certificate c = derive("R-WHDOUBLE-CONJ",
                                     "CONJECTURAL: tau(" + f.name + ") = g(" + f.name + ") = 1 since n = " + str(n) +
                                         " <= 2 tau(" + comp.name + ") - 1 = " + str(2 * tk - 1),
                                     {via, comp.verdict.tau->certificate}, true);
        f.set_tau(1, c);
        f.set_genus(1, c);
      }
    }
  }

  void intrinsic(const ConnectedSumNode& s, const KnotExpression&, NodeFacts& f) const {
    std::vector<NodeFacts> parts;
    parts.reserve(s.summands.size());
    for (const ExprPtr& e : s.summands) parts.push_back(evaluate(*e));

    auto additive = [&](auto member, const char* rule, const char* label, auto setter) {
      std::vector<Certificate> premises;
      std::int64_t total = 0;
      for (const NodeFacts& p : parts) {
        const auto& slot = p.verdict.*member;
        if (!slot) return;
        total += slot->value;
        premises.push_back(slot->certificate);
      }
      (f.*setter)(total, derive(rule, std::string(label) + "(" + f.name + ") = sum over summands = " + str(total),
                                std::move(premises)));
    };
    additive(&Verdict::tau, "R-SUM", "tau", &NodeFacts::set_tau);
    additive(&Verdict::genus, "R-SUM-GENUS", "g", &NodeFacts::set_genus);
  }

  void intrinsic(const MirrorNode& m, const KnotExpression&, NodeFacts& f) const {
    if (const auto* inner = std::get_if<MirrorNode>(&m.child->node); inner && m.child->asserted.empty()) {
      import_all(evaluate(*inner->child), f, "R-MIRROR-INVOLUTION", "mirroring twice is the identity");
      return;
    }
    const NodeFacts child = evaluate(*m.child);
    if (child.verdict.tau) {
      f.set_tau(-child.verdict.tau->value,
                derive("R-MIRROR", "tau(" + f.name + ") = -tau(" + child.name + ") = " + str(-child.verdict.tau->value),
                       {child.verdict.tau->certificate}));
    }
    if (child.verdict.genus) {
      f.set_genus(child.verdict.genus->value,
                  derive("R-MIRROR-GENUS", "g(" + f.name + ") = g(" + child.name + ") = " + str(child.verdict.genus->value),
                         {child.verdict.genus->certificate}));
    }
    if (child.verdict.g4) {
      f.set_g4(child.verdict.g4->value,
               derive("R-MIRROR-G4", "g4(" + f.name + ") = g4(" + child.name + ") = " + str(child.verdict.g4->value),
                      {child.verdict.g4->certificate}));
    }
    if (child.fibered && !f.fibered) f.fibered = derive("R-MIRROR-FLAG", f.name + " is fibered", {child.fibered});
    if (child.alternating && !f.alternating)
      f.alternating = derive("R-MIRROR-FLAG", f.name + " is alternating", {child.alternating});
    // N1 gives the shorter certificate when tau < 0 is already known.
    const bool n1_applies = f.verdict.tau && f.verdict.tau->value < 0;
    if (!n1_applies && child.get(KnotClass::QP) == Tri::Yes && child.verdict.g4 && child.verdict.g4->value > 0) {
      f.set_class(KnotClass::NotQP, true,
                  derive("N2", f.name + " is the mirror of the non-slice quasipositive knot " + child.name,
                         {child.cert(KnotClass::QP), child.verdict.g4->certificate}));
    }
  }

  void intrinsic(const BraidClosureNode& c, const KnotExpression&, NodeFacts& f) const {
    const BraidWord& w = c.braid.word;
    const int b = w.strands();
    const bool positive = std::all_of(w.letters().begin(), w.letters().end(), [](int k) { return k > 0; });

    if (positive) {
      const Certificate p1 = derive("P1", f.name + " is the closure of a positive braid");
      f.set_class(KnotClass::PositiveBraid, true, p1);
      BandFactorization bands{b, {}};
      for (int k : w.letters()) bands.bands.push_back({k, k + 1});
      const SurfaceStats s = sqp_surface_stats(bands);
      f.set_genus(s.genus, derive("R-SQP-GENUS",
                                  "g(" + f.name + ") = (m - b + 1)/2 = (" + str(s.bands) + " - " + str(b) + " + 1)/2 = " +
                                      str(s.genus) + " from the quasipositive Seifert surface",
                                  {p1}));
    }
    if (c.braid.bands) {
      const Certificate p2 = derive("P2", f.name + " is a product of band generators");
      f.set_class(KnotClass::SQP, true, p2);
      const SurfaceStats s = sqp_surface_stats(*c.braid.bands);
      f.set_genus(s.genus, derive("R-SQP-GENUS",
                                  "g(" + f.name + ") = (m - b + 1)/2 = (" + str(s.bands) + " - " + str(b) + " + 1)/2 = " +
                                      str(s.genus) + " from the quasipositive Seifert surface",
                                  {p2}));
    }
    if (c.braid.qp) {
      const Certificate p3 = derive("P3", f.name + " is a product of conjugates of positive generators");
      f.set_class(KnotClass::QP, true, p3);
      const int m = static_cast<int>(c.braid.qp->factors.size());
      const int sum = bennequin_sum(w);
      if (sum != m - b) throw ConsistencyError("tb + |rot| differs from m - b on a quasipositive braid");
      const std::int64_t g4 = (m - b + 1) / 2;
      const Certificate sharp =
          derive("R-QP", "tb + |rot| = -b + m = " + str(sum) + " is sharp against the complex curve of genus (-b+m+1)/2, so tau(" +
                             f.name + ") = g4(" + f.name + ") = " + str(g4),
                 {p3});
      f.set_tau(g4, sharp);
      f.set_g4(g4, sharp);
    }
    if (f.alternating) {
      const int sigma = signature(seifert_matrix(w));
      f.alt_tau = derive("R-ALT", "alternating with signature " + str(sigma) + ", so tau(" + f.name + ") = -sigma/2 = " +
                                      str(-sigma / 2),
                         {f.alternating});
      f.set_tau(-sigma / 2, f.alt_tau);
    }
    const int bound = tau_lower_bound(w);
    f.lower_bound = Fact<std::int64_t>{
        bound, derive("R-BENNEQUIN-BOUND", "tau(" + f.name + ") and g4(" + f.name + ") are >= (tb + |rot| + 1)/2 = " +
                                               str(bound))};
  }

  // ---- propagation ---------------------------------------------------------

  static void chain(NodeFacts& f) {
    using K = KnotClass;
    auto imply = [&](K from, bool from_value, K to, bool to_value, const char* why) {
      const auto& fact = f.verdict.fact(from);
      if (fact && fact->value == from_value && f.get(to) == Tri::Unknown) {
        f.set_class(to, to_value,
                    derive("CHAIN", std::string(to_string(to)) + "(" + f.name + ") = " + yes_no(to_value) + ": " + why,
                           {fact->certificate}));
      }
    };
    imply(K::PositiveBraid, true, K::Positive, true, "positive braids are positive knots");
    imply(K::Positive, true, K::SQP, true, "positive knots are strongly quasipositive");
    imply(K::SQP, true, K::QP, true, "strongly quasipositive knots are quasipositive");
    imply(K::QP, true, K::NotQP, false, "quasipositive");
    imply(K::NotQP, false, K::QP, true, "quasipositive");
    imply(K::NotQP, true, K::QP, false, "not quasipositive");
    imply(K::QP, false, K::NotQP, true, "not quasipositive");
    imply(K::QP, false, K::SQP, false, "not quasipositive, hence not strongly quasipositive");
    imply(K::SQP, false, K::Positive, false, "not strongly quasipositive, hence not positive");
    imply(K::Positive, false, K::PositiveBraid, false, "not positive, hence not a positive braid");
  }

  static void sqp_and_qp_rules(NodeFacts& f) {
    auto& v = f.verdict;
    if (f.get(KnotClass::SQP) == Tri::Yes) {
      // Strongly quasipositive: tau = g4 = g.
      const Fact<std::int64_t>* known = v.tau ? &*v.tau : v.genus ? &*v.genus : v.g4 ? &*v.g4 : nullptr;
      if (known) {
        const Certificate c = derive("R-SQP", "strongly quasipositive, so tau(" + f.name + ") = g4 = g = " + str(known->value),
                                     {f.cert(KnotClass::SQP), known->certificate});
        f.set_tau(known->value, c);
        f.set_genus(known->value, c);
        f.set_g4(known->value, c);
      }
    }
    if (f.get(KnotClass::QP) == Tri::Yes) {
      if (v.tau && !v.g4) {
        f.set_g4(v.tau->value, derive("R-QP-G4", "quasipositive, so g4(" + f.name + ") = tau = " + str(v.tau->value),
                                      {f.cert(KnotClass::QP), v.tau->certificate}));
      } else if (v.g4 && !v.tau) {
        f.set_tau(v.g4->value, derive("R-QP-G4", "quasipositive, so tau(" + f.name + ") = g4 = " + str(v.g4->value),
                                      {f.cert(KnotClass::QP), v.g4->certificate}));
      }
    }
    if (f.fibered && v.tau && v.genus) {
      const bool sqp = v.tau->value == v.genus->value;
      f.set_class(KnotClass::SQP, sqp,
                  derive("P5", "fibered with tau = " + str(v.tau->value) + (sqp ? " = " : " != ") + "g = " +
                                   str(v.genus->value) + ", so " + f.name + (sqp ? " is" : " is not") +
                                   " strongly quasipositive",
                         {f.fibered, v.tau->certificate, v.genus->certificate}));
    }
    if (v.tau && v.tau->value < 0) {
      f.set_class(KnotClass::NotQP, true,
                  derive("N1", "tau(" + f.name + ") = " + str(v.tau->value) + " < 0, so it is not quasipositive",
                         {v.tau->certificate}));
    }
    if (f.alternating && f.alt_tau && v.tau && v.g4 && v.tau->value != v.g4->value) {
      f.set_class(KnotClass::NotQP, true,
                  derive("N3", "alternating with tau = -sigma/2 = " + str(v.tau->value) + " != g4 = " + str(v.g4->value) +
                                   ", so " + f.name + " is not quasipositive",
                         {f.alt_tau, v.tau->certificate, v.g4->certificate}));
    }
    if (v.tau && v.g4 && v.tau->value != v.g4->value && f.get(KnotClass::NotQP) == Tri::Unknown) {
      f.set_class(KnotClass::NotQP, true,
                  derive("N-TAU-G4", "tau = " + str(v.tau->value) + " != g4 = " + str(v.g4->value) + ", so " + f.name +
                                         " is not quasipositive",
                         {v.tau->certificate, v.g4->certificate}));
    }
  }

  static void check_bounds(const NodeFacts& f) {
    const auto& v = f.verdict;
    auto fail = [&](const std::string& what) { throw Contradiction("contradiction at " + f.name + ": " + what); };
    if (v.g4 && v.g4->value < 0) fail("g4 < 0");
    if (v.genus && v.genus->value < 0) fail("genus < 0");
    if (v.tau && v.g4 && std::abs(v.tau->value) > v.g4->value)
      fail("|tau| = " + str(std::abs(v.tau->value)) + " > g4 = " + str(v.g4->value));
    if (v.g4 && v.genus && v.g4->value > v.genus->value)
      fail("g4 = " + str(v.g4->value) + " > g = " + str(v.genus->value));
    if (v.tau && v.genus && std::abs(v.tau->value) > v.genus->value)
      fail("|tau| = " + str(std::abs(v.tau->value)) + " > g = " + str(v.genus->value));
    if (f.get(KnotClass::QP) == Tri::Yes && v.tau && v.g4 && v.tau->value != v.g4->value)
      fail("quasipositive with tau = " + str(v.tau->value) + " != g4 = " + str(v.g4->value));
    if (f.lower_bound) {
      if (v.tau && v.tau->value < f.lower_bound->value)
        fail("tau = " + str(v.tau->value) + " below the Legendrian bound " + str(f.lower_bound->value));
      if (v.g4 && v.g4->value < f.lower_bound->value)
        fail("g4 = " + str(v.g4->value) + " below the slice-Bennequin bound " + str(f.lower_bound->value));
    }
    if (f.tb) {
      if (v.tau && f.tb->value > 2 * v.tau->value - 1)
        fail("TB = " + str(f.tb->value) + " exceeds 2 tau - 1 = " + str(2 * v.tau->value - 1));
      if (v.g4 && f.tb->value > 2 * v.g4->value - 1)
        fail("TB = " + str(f.tb->value) + " exceeds 2 g4 - 1 = " + str(2 * v.g4->value - 1));
    }
    if (const std::string violation = v.consistency_violation(); !violation.empty()) fail(violation);
  }

  static void saturate(NodeFacts& f) {
    do {
      f.changed = false;
      chain(f);
      sqp_and_qp_rules(f);
    } while (f.changed);
    check_bounds(f);
  }
};

}  // namespace

Verdict Classifier::classify(const KnotExpression& e) const { return Engine(options_).evaluate(e).verdict; }

std::optional<Fact<std::int64_t>> Classifier::tau_certificate(const KnotExpression& e) const {
  return classify(e).tau;
}

std::optional<Fact<std::int64_t>> Classifier::genus_certificate(const KnotExpression& e) const {
  return classify(e).genus;
}

Verdict classify(const KnotExpression& e) { return Classifier().classify(e); }

std::optional<Fact<std::int64_t>> tau_certificate(const KnotExpression& e) { return Classifier().tau_certificate(e); }

std::optional<Fact<std::int64_t>> genus_certificate(const KnotExpression& e) {
  return Classifier().genus_certificate(e);
}

}  // namespace qpknot
