#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qpknot/classifier.hpp"
#include "qpknot/expression.hpp"
#include "qpknot/laurent.hpp"

namespace qpknot {

// Reports are plain JSON values (schema 1). nlohmann::json keeps object keys
// in a std::map, so serialization is byte-stable for a given input.

inline constexpr int kReportSchema = 1;

nlohmann::json laurent_to_json(const LaurentPoly& p);
nlohmann::json certificate_to_json(const Certificate& cert);
nlohmann::json verdict_to_json(const Verdict& v);

/// Report for `braid <word>`. Links get braid statistics and a warning only.
/// Throws ParseError, DomainError, ConsistencyError (oracle mismatch) or Contradiction.
nlohmann::json braid_report(const std::string& input, const ClassifierOptions& options);

/// Report for `analyze <expr>`.
nlohmann::json expression_report(const std::string& input, const ClassifierOptions& options);

/// Indented human-readable rendering of either report.
std::string render_text(const nlohmann::json& report);

struct SelftestResult {
  std::vector<std::string> lines;  // one "PASS name: detail" / "FAIL name: detail" per suite
  bool ok = true;
};

/// Oracle-equivalence, chain-consistency and round-trip suites on seeded random input.
SelftestResult run_selftest(std::uint64_t seed = 20240601);

}  // namespace qpknot
