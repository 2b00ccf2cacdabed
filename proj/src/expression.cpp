#include "qpknot/expression.hpp"

#include <numeric>
#include <string>

namespace qpknot {

namespace {

bool same_value(const std::optional<AssertedValue>& a, const std::optional<AssertedValue>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || a->value == b->value;
}

bool same_ptr(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return a == b;
  return *a == *b;
}

struct NodeEqual {
  const ExprNode& other;

  bool operator()(const TorusNode& a) const {
    const auto& b = std::get<TorusNode>(other);
    return a.p == b.p && a.q == b.q;
  }
  bool operator()(const IteratedTorusNode& a) const { return a.stages == std::get<IteratedTorusNode>(other).stages; }
  bool operator()(const TwistNode& a) const { return a.n == std::get<TwistNode>(other).n; }
  bool operator()(const WhiteheadDoubleNode& a) const {
    const auto& b = std::get<WhiteheadDoubleNode>(other);
    return a.n == b.n && same_ptr(a.companion, b.companion);
  }
  bool operator()(const ConnectedSumNode& a) const {
    const auto& b = std::get<ConnectedSumNode>(other);
    if (a.summands.size() != b.summands.size()) return false;
    for (std::size_t k = 0; k < a.summands.size(); ++k)
      if (!same_ptr(a.summands[k], b.summands[k])) return false;
    return true;
  }
  bool operator()(const MirrorNode& a) const { return same_ptr(a.child, std::get<MirrorNode>(other).child); }
  bool operator()(const BraidClosureNode& a) const { return a.braid == std::get<BraidClosureNode>(other).braid; }
};

ExprPtr make(ExprNode node) { return std::make_shared<const KnotExpression>(KnotExpression{std::move(node), {}}); }

void require_child(const ExprPtr& e) {
  if (!e) throw DomainError("expression node has a null child");
}

}  // namespace

bool operator==(const Assertions& a, const Assertions& b) {
  return a.fibered == b.fibered && a.alternating == b.alternating && same_value(a.tb, b.tb) &&
         same_value(a.g4, b.g4) && same_value(a.genus, b.genus);
}

bool operator==(const KnotExpression& a, const KnotExpression& b) {
  if (a.node.index() != b.node.index()) return false;
  if (!(a.asserted == b.asserted)) return false;
  return std::visit(NodeEqual{b.node}, a.node);
}

BraidPresentation BraidPresentation::plain(BraidWord w) { return {std::move(w), std::nullopt, std::nullopt}; }

BraidPresentation BraidPresentation::from_bands(BandFactorization f) {
  BraidWord w = expand_sqp(f);
  return {std::move(w), std::move(f), std::nullopt};
}

BraidPresentation BraidPresentation::from_qp(QPFactorization f) {
  BraidWord w = expand_qp(f);
  return {std::move(w), std::nullopt, std::move(f)};
}

ExprPtr make_torus(int p, int q) {
  if (p < 1 || q < 1) throw DomainError("torus knot T(p,q) needs p, q >= 1");
  if (std::gcd(p, q) != 1) {
    throw DomainError("T(" + std::to_string(p) + "," + std::to_string(q) + ") is a link: p and q must be coprime");
  }
  return make(TorusNode{p, q});
}

ExprPtr make_iterated_torus(std::vector<CableStage> stages) {
  if (stages.empty()) throw DomainError("iterated torus knot needs at least one stage");
  for (const CableStage& s : stages) {
    if (s.p < 2) throw DomainError("cable stage needs p >= 2, got p = " + std::to_string(s.p));
  }
  return make(IteratedTorusNode{std::move(stages)});
}

ExprPtr make_twist(int n) { return make(TwistNode{n}); }

ExprPtr make_whitehead_double(ExprPtr companion, int n) {
  require_child(companion);
  return make(WhiteheadDoubleNode{std::move(companion), n});
}

ExprPtr make_connected_sum(std::vector<ExprPtr> summands) {
  if (summands.size() < 2) throw DomainError("connected sum needs at least two summands");
  for (const ExprPtr& s : summands) require_child(s);
  return make(ConnectedSumNode{std::move(summands)});
}

ExprPtr make_mirror(ExprPtr child) {
  require_child(child);
  return make(MirrorNode{std::move(child)});
}

ExprPtr make_closure(BraidPresentation braid) {
  require_knot(braid.word, "closure expression requires a knot");
  return make(BraidClosureNode{std::move(braid)});
}

ExprPtr with_assertions(const ExprPtr& e, Assertions asserted) {
  require_child(e);
  return std::make_shared<const KnotExpression>(KnotExpression{e->node, std::move(asserted)});
}

ExprPtr strip_assertions(const ExprPtr& e) { return with_assertions(e, {}); }

bool is_evident_unknot(const KnotExpression& e) {
  if (const auto* t = std::get_if<TorusNode>(&e.node)) return t->p == 1 || t->q == 1;
  if (const auto* t = std::get_if<TwistNode>(&e.node)) return t->n == 0;
  if (const auto* m = std::get_if<MirrorNode>(&e.node)) return is_evident_unknot(*m->child);
  if (const auto* c = std::get_if<BraidClosureNode>(&e.node)) return c->braid.word.strands() == 1;
  if (const auto* s = std::get_if<ConnectedSumNode>(&e.node)) {
    for (const ExprPtr& x : s->summands)
      if (!is_evident_unknot(*x)) return false;
    return true;
  }
  if (const auto* d = std::get_if<WhiteheadDoubleNode>(&e.node)) return d->n == 0 && is_evident_unknot(*d->companion);
  return false;
}

}  // namespace qpknot
