#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qpknot/braid.hpp"

namespace qpknot {

/// An asserted integer fact together with where it came from.
struct AssertedValue {
  std::int64_t value = 0;
  std::string note;
};

/// Facts the caller vouches for. Equality ignores provenance notes.
struct Assertions {
  bool fibered = false;
  bool alternating = false;
  std::optional<AssertedValue> tb;  // maximal Thurston-Bennequin number
  std::optional<AssertedValue> g4;
  std::optional<AssertedValue> genus;

  bool empty() const noexcept { return !fibered && !alternating && !tb && !g4 && !genus; }
  friend bool operator==(const Assertions& a, const Assertions& b);
};

/// A braid together with the factorization it was built from, if any.
struct BraidPresentation {
  BraidWord word;
  std::optional<BandFactorization> bands;
  std::optional<QPFactorization> qp;

  static BraidPresentation plain(BraidWord w);
  static BraidPresentation from_bands(BandFactorization f);
  static BraidPresentation from_qp(QPFactorization f);

  friend bool operator==(const BraidPresentation&, const BraidPresentation&) = default;
};

struct KnotExpression;
using ExprPtr = std::shared_ptr<const KnotExpression>;

struct TorusNode {
  int p = 1;
  int q = 1;
};

/// One stage (p, p*n + 1) of an iterated torus knot.
struct CableStage {
  int p = 2;
  int n = 0;
  int q() const noexcept { return p * n + 1; }
  friend bool operator==(const CableStage&, const CableStage&) = default;
};

struct IteratedTorusNode {
  std::vector<CableStage> stages;
};

struct TwistNode {
  int n = 0;
};

struct WhiteheadDoubleNode {
  ExprPtr companion;
  int n = 0;
};

struct ConnectedSumNode {
  std::vector<ExprPtr> summands;
};

struct MirrorNode {
  ExprPtr child;
};

struct BraidClosureNode {
  BraidPresentation braid;
};

using ExprNode = std::variant<TorusNode, IteratedTorusNode, TwistNode, WhiteheadDoubleNode, ConnectedSumNode,
                              MirrorNode, BraidClosureNode>;

/// Syntax tree of a knot construction. Build through the factory functions
/// below, which enforce the node invariants.
struct KnotExpression {
  ExprNode node;
  Assertions asserted;
};

bool operator==(const KnotExpression& a, const KnotExpression& b);

ExprPtr make_torus(int p, int q);
ExprPtr make_iterated_torus(std::vector<CableStage> stages);
ExprPtr make_twist(int n);
ExprPtr make_whitehead_double(ExprPtr companion, int n);
ExprPtr make_connected_sum(std::vector<ExprPtr> summands);
ExprPtr make_mirror(ExprPtr child);
ExprPtr make_closure(BraidPresentation braid);
ExprPtr with_assertions(const ExprPtr& e, Assertions asserted);
/// Same node, no assertions.
ExprPtr strip_assertions(const ExprPtr& e);

/// Structurally recognizable unknots: T(1,q), T(p,1), twist(0), the 1-strand
/// closure, mirrors and sums of unknots, and the 0-twisted double of an unknot.
bool is_evident_unknot(const KnotExpression& e);

}  // namespace qpknot
