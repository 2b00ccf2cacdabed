#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qpknot/expression.hpp"

namespace qpknot {

/// One rule application: `rule` produced `claim` from `premises`.
struct Derivation {
  std::string rule;
  std::string claim;
  std::vector<std::shared_ptr<const Derivation>> premises;
  /// Set when this step or any premise rests on an unproven statement.
  bool conjectural = false;
};
using Certificate = std::shared_ptr<const Derivation>;

Certificate derive(std::string rule, std::string claim, std::vector<Certificate> premises = {},
                   bool conjectural = false);

/// Every rule identifier in the certificate tree, preorder.
std::vector<std::string> rules_used(const Certificate& cert);
bool uses_rule(const Certificate& cert, const std::string& rule);

enum class Tri { Unknown, Yes, No };
const char* to_string(Tri t);

enum class KnotClass { PositiveBraid, Positive, SQP, QP, NotQP };
inline constexpr std::array<KnotClass, 5> kAllClasses = {KnotClass::PositiveBraid, KnotClass::Positive,
                                                         KnotClass::SQP, KnotClass::QP, KnotClass::NotQP};
const char* to_string(KnotClass c);

template <class T>
struct Fact {
  T value{};
  Certificate certificate;
};

/// Positivity verdict with a derivation for every established fact.
struct Verdict {
  std::array<std::optional<Fact<bool>>, 5> classes;
  std::optional<Fact<std::int64_t>> tau;
  std::optional<Fact<std::int64_t>> genus;
  std::optional<Fact<std::int64_t>> g4;

  Tri get(KnotClass c) const;
  const std::optional<Fact<bool>>& fact(KnotClass c) const { return classes[static_cast<std::size_t>(c)]; }

  /// Root of the whole derivation: one premise per established fact.
  Certificate certificate() const;

  /// Inclusion-chain and |tau| <= g4 checks. Returns an empty string when
  /// consistent, otherwise a description of the violation.
  std::string consistency_violation() const;
};

/// Maximal Thurston-Bennequin numbers keyed by canonical expression text.
class TbTable {
public:
  struct Entry {
    std::int64_t tb = 0;
    std::string source;
  };

  /// Contains only the unknot (tb = -1).
  static TbTable builtin();

  void set(const std::string& canonical_name, Entry entry);
  const Entry* find(const std::string& canonical_name) const;
  std::size_t size() const noexcept { return entries_.size(); }

private:
  std::map<std::string, Entry> entries_;
};

struct ClassifierOptions {
  /// Enables the unproven Whitehead-double rule; its certificates are marked conjectural.
  bool enable_conjectural = false;
  TbTable tb_table = TbTable::builtin();
};

/// Rule engine over knot expressions. Stateless apart from its read-only
/// options, so one instance can serve concurrent queries.
class Classifier {
public:
  Classifier() = default;
  explicit Classifier(ClassifierOptions options) : options_(std::move(options)) {}

  /// Throws Contradiction when the rules derive incompatible facts.
  Verdict classify(const KnotExpression& e) const;
  std::optional<Fact<std::int64_t>> tau_certificate(const KnotExpression& e) const;
  std::optional<Fact<std::int64_t>> genus_certificate(const KnotExpression& e) const;

  const ClassifierOptions& options() const noexcept { return options_; }

private:
  ClassifierOptions options_;
};

Verdict classify(const KnotExpression& e);
std::optional<Fact<std::int64_t>> tau_certificate(const KnotExpression& e);
std::optional<Fact<std::int64_t>> genus_certificate(const KnotExpression& e);

/// Seifert genus of the cable T{p1,q1}...{pk,qk}: g = p*g(companion) + (p-1)(|q|-1)/2 per stage.
std::int64_t iterated_torus_genus(const std::vector<CableStage>& stages);

/// Braid of the iterated torus knot built by repeated cabling of torus_braid.
BraidWord iterated_torus_braid(const std::vector<CableStage>& stages);

}  // namespace qpknot
