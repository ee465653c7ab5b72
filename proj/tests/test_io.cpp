#include <doctest.h>

#include "qpmlab/io.hpp"
#include "qpmlab/runner.hpp"

using namespace qpm;

namespace {

VariantSpec paper_v1() {
  return make_variant(VariantId::V1, IterationMode::Start,
                      Gauge::constant(0.5, {GaugeRange::Kind::Unit, 0.0}),
                      Gauge::constant(2.0 / 3.0, {GaugeRange::Kind::LowerOpen, 0.6}), {});
}

std::string paper_config(const char* extra) {
  return std::string(R"({"scenario":"paper-example",)") + extra + "}";
}

const char* kV1Fields =
    R"x("variant":"V1","mode":"start",)x"
    R"x("phi":{"kind":"constant","c":0.5,"range":"[0,1)"},)x"
    R"x("eta":{"kind":"constant","c":0.6666666666666666,"range":"[b,1)","b":0.6},)x"
    R"x("x0":10)x";

}  // namespace

TEST_CASE("space serialization round trips") {
  Eigen::MatrixXd m(2, 2);
  m << 0.0, 1.5, 0.25, 0.0;
  const Space sp = Space::from_matrix(m);
  const Space back = space_from_json(space_to_json(sp));
  CHECK(back.dist_matrix() == m);

  const Space iv = symmetrize(Space::interval(0.0, 10.0));
  const Space iv_back = space_from_json(space_to_json(iv));
  CHECK(iv_back.view() == MetricView::Symmetric);
  CHECK(distance(iv_back, 4.0, 6.0) == 2.0);

  CHECK_THROWS_AS((void)space_from_json(Json::parse(R"({"kind":"matrix","dist":[[0,"x"],[0,0]]})")),
                  Error);
  CHECK_THROWS_AS((void)space_from_json(Json::parse(R"({"kind":"matrix","dist":[[0,1]]})")), Error);
  CHECK_THROWS_AS(
      (void)space_from_json(Json::parse(R"({"kind":"interval","lo":0,"hi":10,"rule":"euclid"})")),
      Error);
}

TEST_CASE("map serialization round trips") {
  const SetValuedMap table =
      SetValuedMap::table({PointSet({1.0, 2.0}), PointSet::singleton(0.0), PointSet({0.0, 2.0})});
  const SetValuedMap back = map_from_json(map_to_json(table));
  const Space sp = Space::from_matrix(Eigen::MatrixXd::Zero(3, 3).cwiseMax(
      Eigen::MatrixXd::Identity(3, 3)));  // any 3-point space works for lookups
  for (Point x : {0.0, 1.0, 2.0}) CHECK(back.image(sp, x) == table.image(sp, x));

  const SetValuedMap half = map_from_json(Json{{"kind", "closedform"}, {"rule", "half-except-6"}});
  CHECK(half.rule() == MapRule::HalfExceptSix);
  CHECK(map_from_json(map_to_json(half)).rule() == MapRule::HalfExceptSix);

  CHECK_THROWS_AS((void)map_from_json(Json{{"kind", "closedform"}, {"rule", "triple"}}), Error);
  // sparse keys are rejected
  CHECK_THROWS_AS((void)map_from_json(Json::parse(R"({"kind":"table","map":{"0":[1],"2":[0]}})")),
                  Error);
}

TEST_CASE("gauge and variant serialization round trips") {
  const Gauge tbl = Gauge::table({{0.0, 0.0}, {1.0, 0.9}, {2.0, 1.0}},
                                 {GaugeRange::Kind::NonNegative, 0.0});
  for (const Gauge& g : {Gauge::constant(0.5, {GaugeRange::Kind::Unit, 0.0}),
                         Gauge::affine(0.25, 0.1, {GaugeRange::Kind::NonNegative, 0.0}),
                         Gauge::ratio(), tbl}) {
    const Gauge back = gauge_from_json(gauge_to_json(g), "$.g");
    CHECK(back.kind() == g.kind());
    CHECK(back.range() == g.range());
    for (double t : {0.0, 0.4, 1.3, 7.0}) CHECK(back(t) == g(t));
  }

  const VariantSpec v7 = make_variant(
      VariantId::V7, IterationMode::Fixed, Gauge::affine(0.5, 0.0, {}),
      Gauge::affine(0.8, 0.0, {}), {}, {PairProp::EtaContinuous});
  const VariantSpec back = variant_from_json(variant_to_json(v7));
  CHECK(back.id == VariantId::V7);
  CHECK(back.mode == IterationMode::Fixed);
  CHECK(back.props == v7.props);
  CHECK((*back.phi)(2.0) == 1.0);

  CHECK_THROWS_AS((void)variant_from_json(Json{{"variant", "V9"}}), Error);
}

TEST_CASE("config parsing validates and expands the built-in scenario") {
  SUBCASE("empty object points at the scenario field") {
    try {
      (void)parse_config("{}");
      FAIL("expected SchemaError");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::SchemaError);
      CHECK(std::string(e.what()).find("$.scenario") != std::string::npos);
    }
  }
  SUBCASE("paper-example expands to the MaxDiff interval and half map") {
    const ScenarioConfig cfg = parse_config(paper_config(kV1Fields));
    REQUIRE(cfg.space.has_value());
    CHECK(cfg.space->kind() == SpaceKind::Interval);
    CHECK(distance(*cfg.space, 6.0, 4.0) == 2.0);
    REQUIRE(cfg.map.has_value());
    CHECK(cfg.map->rule() == MapRule::HalfExceptSix);
    REQUIRE(cfg.variant.has_value());
    CHECK(cfg.variant->id == VariantId::V1);
    CHECK(cfg.x0 == 10.0);
  }
  SUBCASE("rejects conflicting or unknown scenarios") {
    CHECK_THROWS_AS((void)parse_config(R"({"scenario":"paper-example","space":{"kind":"x"}})"),
                    Error);
    CHECK_THROWS_AS((void)parse_config(R"({"scenario":"other"})"), Error);
    CHECK_THROWS_AS((void)parse_config("not json"), Error);
    CHECK_THROWS_AS((void)parse_config(paper_config(R"("eps":-1)")), Error);
    CHECK_THROWS_AS((void)parse_config(paper_config(R"("grid":0)")), Error);
  }
}

TEST_CASE("trace CSV round trips and replays") {
  const ScenarioConfig cfg = parse_config(paper_config(kV1Fields));
  const IterationTrace trace = solve(*cfg.space, *cfg.map, *cfg.variant, 10.0);
  const std::string csv = trace_to_csv(trace);
  CHECK(csv.rfind("n,x,f,d_n,y,slack\n", 0) == 0);
  CHECK(csv.find("outcome,Converged,") != std::string::npos);

  IterationTrace back = trace_from_csv(csv);
  CHECK(back.outcome == trace.outcome);
  CHECK(back.final_x == trace.final_x);
  CHECK(back.final_f == trace.final_f);
  REQUIRE(back.steps.size() == trace.steps.size());
  for (std::size_t i = 0; i < back.steps.size(); ++i) {
    CHECK(back.steps[i].x == trace.steps[i].x);
    CHECK(back.steps[i].f_x == trace.steps[i].f_x);
    CHECK(back.steps[i].d_n == trace.steps[i].d_n);
    CHECK(back.steps[i].y == trace.steps[i].y);
    CHECK(back.steps[i].slack == trace.steps[i].slack);
  }
  // the reparsed steps replay to a valid trace of the same scenario
  back.variant = trace.variant;
  back.mode = trace.mode;
  back.opts = trace.opts;
  CHECK(validate_trace(*cfg.space, *cfg.map, paper_v1(), back).ok);

  CHECK_THROWS_AS((void)trace_from_csv("x,y\n"), Error);
  CHECK_THROWS_AS((void)trace_from_csv("n,x,f,d_n,y,slack\n0,1,2\n"), Error);
}

TEST_CASE("run_command exit codes cover the contract") {
  SUBCASE("solve on the worked scenario converges with a trace artifact") {
    const ScenarioConfig cfg = parse_config(paper_config(kV1Fields));
    const RunResult r = run_command(Command::Solve, cfg);
    CHECK(r.exit_code == 0);
    REQUIRE(r.trace_csv.has_value());
    CHECK(r.report.at("trace").at("outcome") == "Converged");
    CHECK(r.report.at("settings").contains("eps"));

    // identical configs produce identical reports
    const RunResult again = run_command(Command::Solve, cfg);
    CHECK(r.report.dump() == again.report.dump());
  }
  SUBCASE("solve from the rejected start reports the violation") {
    std::string text = paper_config(kV1Fields);
    text.replace(text.find("\"x0\":10"), 7, "\"x0\":6");
    const RunResult r = run_command(Command::Solve, parse_config(text));
    CHECK(r.exit_code == 2);
    CHECK(r.report.at("trace").at("outcome") == "HypothesisViolation");
    CHECK(r.report.at("trace").at("violation").at("x") == 6.0);
  }
  SUBCASE("check-hypotheses flags the contraction failure") {
    const std::string text = paper_config(
        R"x("variant":"GABA_PHI","phi":{"kind":"constant","c":0.5,"range":"[0,1)"},"grid":1)x");
    const RunResult r = run_command(Command::CheckHypotheses, parse_config(text));
    CHECK(r.exit_code == 2);
    CHECK(r.report.at("hypotheses").at("witnesses").size() == 1);
  }
  SUBCASE("check-space distinguishes clean and broken matrices") {
    const RunResult ok = run_command(
        Command::CheckSpace, parse_config(R"({"space":{"kind":"matrix","dist":[[0,1],[0,0]]}})"));
    CHECK(ok.exit_code == 0);
    const RunResult bad = run_command(
        Command::CheckSpace,
        parse_config(R"({"space":{"kind":"matrix","dist":[[0,5,1],[9,0,9],[9,1,0]]}})"));
    CHECK(bad.exit_code == 2);
    CHECK(bad.report.at("axioms").at("triangle_witness").at("x") == 0.0);
  }
  SUBCASE("semantic config gaps exit 1 instead of throwing") {
    std::string no_x0 = paper_config(kV1Fields);
    no_x0.replace(no_x0.find(",\"x0\":10"), 8, "");
    const RunResult r = run_command(Command::Solve, parse_config(no_x0));
    CHECK(r.exit_code == 1);
    CHECK(r.report.contains("error"));

    // interval oracle without a grid is a usage error
    const RunResult g = run_command(Command::Oracle, parse_config(paper_config(kV1Fields)));
    CHECK(g.exit_code == 1);
  }
  SUBCASE("oracle agrees with the solver on a clean scenario") {
    const std::string text = R"({
      "space": {"kind":"matrix","dist":[[0,2,2],[1,0,2],[0.5,1,0]]},
      "map": {"kind":"table","map":{"0":[0],"1":[0],"2":[0,1]}},
      "variant": "GABA_C", "c": 0.9
    })";
    const RunResult r = run_command(Command::Oracle, parse_config(text));
    CHECK(r.report.at("hypotheses").at("applicable") == true);
    CHECK(r.report.at("agreement") == true);
    CHECK(r.exit_code == 0);
  }
  SUBCASE("oracle without a variant lists all three point kinds") {
    const std::string text = paper_config(R"("grid":0.5)");
    const RunResult r = run_command(Command::Oracle, parse_config(text));
    CHECK(r.exit_code == 0);
    CHECK(r.report.at("start_points") == Json::array({0.0}));
    CHECK(r.report.at("fixed_points") == Json::array({0.0}));
    CHECK(r.report.at("end_points").size() == 21);
  }
}
