#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sys/wait.h>

#include "qpknot/report.hpp"

using namespace qpknot;
using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

Run cli(const std::vector<std::string>& args) {
  std::string cmd = QPKNOT_CLI_PATH;
  for (const std::string& a : args) cmd += " " + quote(a);
  cmd += " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json terms(std::initializer_list<std::pair<int, int>> t) {
  json out = json::array();
  for (auto [e, c] : t) out.push_back({{"exponent", e}, {"coefficient", c}});
  return out;
}

}  // namespace

TEST_SUITE("report") {
  TEST_CASE("braid report fields") {
    const json r = braid_report("s1^3 @2", {});
    CHECK(r["schema"] == 1);
    CHECK(r["kind"] == "braid");
    CHECK(r["input"] == "s1^3 @2");
    CHECK(r["legendrian"]["tb"] == 1);
    CHECK(r["legendrian"]["rot_abs"] == 0);
    CHECK(r["bounds"]["slice_genus_lower_bound"] == 1);
    CHECK(r["alexander"]["terms"] == terms({{-1, 1}, {0, -1}, {1, 1}}));
    CHECK(r["signature"] == -2);
    CHECK(r["determinant"] == 3);
    CHECK(r["verdict"]["classes"]["PositiveBraid"]["value"] == "yes");
    CHECK(r["verdict"]["tau"]["value"] == 1);
    CHECK(r["certificate"]["rule"] == "VERDICT");
    CHECK(r["warnings"].empty());
  }

  TEST_CASE("links get a partial report") {
    const json r = braid_report("s1 s1 @2", {});
    CHECK(r["braid"]["components"] == 2);
    CHECK_FALSE(r.contains("verdict"));
    CHECK_FALSE(r.contains("alexander"));
    REQUIRE(r["warnings"].size() == 1);
  }

  TEST_CASE("expression reports") {
    const json twist = expression_report("twist(1)", {});
    CHECK(twist["verdict"]["classes"]["NotQP"]["value"] == "yes");
    CHECK(twist["verdict"]["classes"]["NotQP"]["rule"] == "N4");
    CHECK(twist["alexander"]["terms"] == terms({{-1, -1}, {0, 3}, {1, -1}}));
    CHECK(twist["alexander"]["source"] == "twist_family_alexander");

    const json m = expression_report("mirror(T(2,3))", {});
    CHECK(m["verdict"]["tau"]["value"] == -1);
    CHECK(m["verdict"]["classes"]["NotQP"]["value"] == "yes");
    CHECK(m["signature"] == 2);

    const json s = expression_report("T(2,3) # T(2,3)", {});
    CHECK(s["braid"]["strands"] == 3);
    CHECK(s["signature"] == -4);
    CHECK(s["verdict"]["tau"]["value"] == 2);

    const json alt = expression_report("closure(\"s1^3 @2\"){alternating}", {});
    bool noted = false;
    for (const json& w : alt["warnings"]) noted = noted || w.get<std::string>().find("sign convention") != std::string::npos;
    CHECK(noted);
  }

  TEST_CASE("every numeric field is reproducible from the echoed input") {
    for (const char* input : {"s1 s2' s1 s2' @3", "b1,3 b2,3 @3", "c[s2|1] c[s1 s2'|1] @3"}) {
      const json a = braid_report(input, {});
      const json b = braid_report(a["input"].get<std::string>(), {});
      CHECK(a.dump() == b.dump());
      const json c = braid_report(a["canonical"].get<std::string>(), {});
      CHECK(c["alexander"] == a["alexander"]);
      CHECK(c["verdict"] == a["verdict"]);
    }
  }

  TEST_CASE("certificate serialization") {
    const Certificate leaf = derive("R-TORUS", "leaf");
    const Certificate root = derive("R-MIRROR", "root", {leaf}, true);
    const json j = certificate_to_json(root);
    CHECK(j["rule"] == "R-MIRROR");
    CHECK(j["conjectural"] == true);
    REQUIRE(j["premises"].size() == 1);
    CHECK(j["premises"][0]["rule"] == "R-TORUS");
    CHECK(j["premises"][0]["premises"].empty());
  }

  TEST_CASE("selftest passes") {
    const SelftestResult r = run_selftest();
    CHECK(r.ok);
    CHECK(r.lines.size() == 3);
  }
}

TEST_SUITE("cli") {
  TEST_CASE("analyze twist(1)") {
    const Run r = cli({"analyze", "twist(1)"});
    CHECK(r.code == 0);
    CHECK(r.out.find("NotQP: yes  [N4]") != std::string::npos);
  }

  TEST_CASE("braid --json") {
    const Run r = cli({"braid", "s1^3 @2", "--json"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["legendrian"]["tb"] == 1);
    CHECK(j["bounds"]["slice_genus_lower_bound"] == 1);
    CHECK(j["alexander"]["terms"] == terms({{-1, 1}, {0, -1}, {1, 1}}));
  }

  TEST_CASE("json output is byte-stable") {
    const Run a = cli({"analyze", "cable[(2,1),(2,0)] # mirror(twist(2))", "--json"});
    const Run b = cli({"analyze", "cable[(2,1),(2,0)] # mirror(twist(2))", "--json"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
  }

  TEST_CASE("exit codes") {
    CHECK(cli({"analyze", "T(2,"}).code == 1);
    CHECK(cli({"analyze", "T(2,4)"}).code == 1);
    CHECK(cli({"braid", "s1 q"}).code == 1);
    CHECK(cli({"analyze", "T(2,3){g4=0}"}).code == 2);
    CHECK(cli({"selftest"}).code == 0);
    CHECK(cli({"analyze", "mirror(T(2,3))"}).code == 0);
  }

  TEST_CASE("tb table and conjectural flags") {
    const std::string path = "qpknot_test_tb_table.tsv";
    {
      std::ofstream f(path);
      f << "T(2,3)\t1\ttest\n";
    }
    const Run plain = cli({"analyze", "wh+(T(2,3); 1)", "--json", "--tb-table", path});
    REQUIRE(plain.code == 0);
    const json p = json::parse(plain.out);
    CHECK(p["verdict"]["classes"]["SQP"]["value"] == "yes");
    CHECK(p["verdict"]["tau"]["value"].is_null());

    const Run conj = cli({"analyze", "wh+(T(2,3); 1)", "--json", "--tb-table", path, "--enable-conjectural"});
    REQUIRE(conj.code == 0);
    const json c = json::parse(conj.out);
    CHECK(c["verdict"]["tau"]["value"] == 1);
    CHECK(c["certificate"]["conjectural"] == true);

    {
      std::ofstream f(path);
      f << "T(2,3)\tbad\n";
    }
    CHECK(cli({"analyze", "T(2,3)", "--tb-table", path}).code == 1);
    std::remove(path.c_str());
  }
}
