// qpknot: braid-closure invariants and positivity verdicts from the command line.
//
//   qpknot analyze "wh+(T(2,3); 1)" [--json] [--enable-conjectural] [--tb-table FILE]
//   qpknot braid "s1^3 @2" [--json]
//   qpknot selftest
//
// Exit codes: 0 ok, 1 parse or domain error, 2 internal inconsistency
// (oracle mismatch, chain violation, contradictory facts).

#include <fstream>
#include <iostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "qpknot/errors.hpp"
#include "qpknot/report.hpp"
#include "qpknot/text.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kInconsistent = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Braid-closure invariants and certificate-backed positivity verdicts"};
  app.require_subcommand(1);

  bool json_output = false;
  bool conjectural = false;
  std::string tb_table_path;
  std::string input;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", json_output, "Print the schema-1 JSON report");
    sub->add_flag("--enable-conjectural", conjectural, "Allow the conjectural Whitehead-double rule");
    sub->add_option("--tb-table", tb_table_path, "Tab-separated table: name, maximal tb, source note")
        ->check(CLI::ExistingFile);
  };
  CLI::App* analyze = app.add_subcommand("analyze", "Analyze a knot expression");
  analyze->add_option("expr", input, "Knot expression, e.g. \"T(2,3) # mirror(twist(2))\"")->required();
  add_common(analyze);
  CLI::App* braid = app.add_subcommand("braid", "Analyze the closure of a braid word");
  braid->add_option("word", input, "Braid word, e.g. \"s1 s2' s1 s2' @3\"")->required();
  add_common(braid);
  CLI::App* selftest = app.add_subcommand("selftest", "Run the built-in consistency suites");

  CLI11_PARSE(app, argc, argv);

  if (selftest->parsed()) {
    const qpknot::SelftestResult result = qpknot::run_selftest();
    for (const std::string& line : result.lines) std::cout << line << '\n';
    return result.ok ? kOk : kInconsistent;
  }

  try {
    qpknot::ClassifierOptions options;
    options.enable_conjectural = conjectural;
    if (!tb_table_path.empty()) {
      std::ifstream in(tb_table_path);
      if (!in) {
        std::cerr << "error: cannot open " << tb_table_path << '\n';
        return kInputError;
      }
      qpknot::read_tb_table(in, options.tb_table);
    }
    const nlohmann::json report =
        analyze->parsed() ? qpknot::expression_report(input, options) : qpknot::braid_report(input, options);
    if (json_output)
      std::cout << report.dump(2) << '\n';
    else
      std::cout << qpknot::render_text(report);
    return kOk;
  } catch (const qpknot::ParseError& err) {
    std::cerr << "parse error: " << err.what() << '\n';
    return kInputError;
  } catch (const qpknot::DomainError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kInputError;
  } catch (const qpknot::ConsistencyError& err) {
    std::cerr << "internal consistency failure: " << err.what() << '\n';
    return kInconsistent;
  } catch (const qpknot::Contradiction& err) {
    std::cerr << "contradiction: " << err.what() << '\n';
    return kInconsistent;
  } catch (const std::overflow_error& err) {
    std::cerr << "error: input too large for exact arithmetic: " << err.what() << '\n';
    return kInputError;
  }
}
