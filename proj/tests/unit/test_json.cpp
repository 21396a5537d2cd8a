#include "common.hpp"
#include "matgeg/report.hpp"

using namespace t;

TEST_CASE("round trips") {
  const RatFunc f = (P() + RatFunc(1)) / (N() - RatFunc(2) * P());
  CHECK(ratfunc_from_json(to_json(f)) == f);
  const Mat m = Mat::rows({{P(), RatFunc(0)}, {f, N()}});
  CHECK(mat_from_json(to_json(m)) == m);
  const MatPoly q = monic_mop_closed(3).poly;
  CHECK(matpoly_from_json(to_json(q)) == q);
  const DiffOp& c = symbolic_algebra().C1();
  CHECK(diffop_from_json(to_json(c)) == c);
  CHECK(diffop_from_json(json::parse(to_json(c).dump())) == c);
}

TEST_CASE("report json has no timing unless asked") {
  Report r;
  r.command = "x";
  r.add(bool_check("ok", true, nullptr));
  r.add(residual_check("bad", symbolic_algebra().generator(1)));
  const json j = r.to_json(false);
  CHECK(!j.contains("elapsed"));
  CHECK(!j["checks"][0].contains("elapsed"));
  CHECK(j["checks"][1]["status"] == "fail");
  CHECK(j["checks"][1].contains("witness"));
  CHECK(j["passed"] == false);
  CHECK(r.to_json(true).contains("elapsed"));
  CHECK(r.to_json(false).dump() == r.to_json(false).dump());
}

TEST_CASE("fail records always carry a witness") {
  const CheckRecord r = timed([]() -> CheckRecord { throw std::runtime_error("boom"); }, "thrower");
  CHECK(r.status == Status::fail);
  CHECK(r.witness.has_value());
}
