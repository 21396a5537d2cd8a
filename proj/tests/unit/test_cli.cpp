#include <cstdio>
#include <fstream>
#include <sstream>

#include "common.hpp"
#include "matgeg/cli.hpp"

using namespace t;

namespace {
struct Run {
  int code;
  std::string out, err;
};
Run run(std::vector<std::string> args) {
  std::ostringstream o, e;
  const int c = run_cli(args, o, e);
  return {c, o.str(), e.str()};
}
}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"no-such-command"}).code == kExitUsage);
  CHECK(run({"eigencheck", "--wmax", "x"}).code == kExitUsage);
  CHECK(run({"orthogonality", "--n", "5", "--p", "1"}).code == kExitUsage);
  CHECK(run({"orthogonality", "--n", "4", "--p", "2"}).code == kExitUsage);
  CHECK(run({"decompose"}).code == kExitUsage);
  CHECK(run({"decompose", "--word", "D5"}).code == kExitUsage);
  CHECK(run({"centralizer", "--targets", "c3"}).code == kExitUsage);
  CHECK(run({"decompose", "--op", "/nonexistent.json"}).code == kExitUsage);
}

TEST_CASE("passing commands exit 0") {
  CHECK(run({"eigencheck", "--wmax", "0"}).code == kExitOk);
  const Run o = run({"orthogonality", "--n", "4", "--p", "1", "--wmax", "6"});
  CHECK(o.code == kExitOk);
  CHECK(o.out.find("2/2 checks passed") != std::string::npos);
  CHECK(run({"decompose", "--word", "D3D4"}).code == kExitOk);
  CHECK(run({"center-decompose", "--word", "C1C1"}).code == kExitOk);
  CHECK(run({"mop", "--w", "2"}).code == kExitOk);
  CHECK(run({"centralizer", "--order", "2", "--deg", "4"}).code == kExitOk);
}

TEST_CASE("falsified checks exit 1") {
  CHECK(run({"decompose", "--word", "D1D1", "--p", "1"}).code == kExitOk);
  CHECK(run({"center-decompose", "--word", "D3"}).code == kExitFalsified);
  // Relation four of the A, B presentation does not hold.
  CHECK(run({"verify-relations"}).code == kExitFalsified);
}

TEST_CASE("operator files and deterministic json") {
  const std::string op = "/tmp/matgeg_cli_op.json", a = "/tmp/matgeg_cli_a.json", b = "/tmp/matgeg_cli_b.json";
  {
    std::ofstream f(op);
    f << to_json(DiffOp::term(1, MatPoly::identity(2))).dump();
  }
  const Run r = run({"decompose", "--op", op, "--json", a});
  CHECK(r.code == kExitFalsified);
  run({"decompose", "--op", op, "--json", b});
  std::ifstream fa(a), fb(b);
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  CHECK(!sa.str().empty());
  CHECK(sa.str() == sb.str());
  const json j = json::parse(sa.str());
  CHECK(j["command"] == "decompose");
  CHECK(j["checks"][0]["status"] == "fail");
  CHECK(j["checks"][0].contains("witness"));
  for (const auto& p : {op, a, b}) std::remove(p.c_str());
}

TEST_CASE("json to stdout") {
  const Run r = run({"eigencheck", "--wmax", "1", "--json", "-"});
  const json j = json::parse(r.out);
  CHECK(j["passed"] == true);
  CHECK(j["checks"].size() == 6);
}
