#include "qpmlab/runner.hpp"

#include <algorithm>

namespace qpm {

namespace {

Json settings_json(const ScenarioConfig& cfg) {
  const GaugeCheckOptions g;
  Json j{{"eps", cfg.eps},
         {"max_iter", cfg.max_iter},
         {"seed", cfg.seed},
         {"tol_feas", kFeasTol},
         {"axiom_tol", kAxiomTol},
         {"strict_margin", kStrictMargin},
         {"limsup_margin", kLimsupMargin},
         {"tail_fraction", kTailFraction},
         {"gauge_grid_points", g.grid_points},
         {"limsup_probes", g.limsup_probes},
         {"samples_per_window", g.samples_per_window},
         {"window_schedule", g.window_schedule}};
  if (cfg.grid) j["grid_step"] = cfg.grid->step;
  if (cfg.scenario) j["scenario"] = *cfg.scenario;
  return j;
}

const Space& need_space(const ScenarioConfig& cfg) {
  if (!cfg.space) throw Error(Errc::SchemaError, "$.space: command needs a space");
  return *cfg.space;
}

const SetValuedMap& need_map(const ScenarioConfig& cfg) {
  if (!cfg.map) throw Error(Errc::SchemaError, "$.map: command needs a set-valued map");
  return *cfg.map;
}

const VariantSpec& need_variant(const ScenarioConfig& cfg) {
  if (!cfg.variant) throw Error(Errc::SchemaError, "$.variant: command needs a variant");
  return *cfg.variant;
}

PointKind kind_for_mode(IterationMode mode) {
  switch (mode) {
    case IterationMode::Start: return PointKind::Start;
    case IterationMode::End: return PointKind::End;
    case IterationMode::Fixed: return PointKind::Fixed;
  }
  return PointKind::Start;
}

RunResult run_check_space(const ScenarioConfig& cfg) {
  AxiomCheckOptions opts;
  opts.grid = cfg.grid;
  const AxiomReport report = verify_axioms(need_space(cfg), opts);
  RunResult out;
  out.report = Json{{"command", "check-space"},
                    {"settings", settings_json(cfg)},
                    {"axioms", axiom_report_to_json(report)}};
  out.exit_code = report.pass() ? 0 : 2;
  return out;
}

RunResult run_check_hypotheses(const ScenarioConfig& cfg) {
  const HypothesisReport report = exhaustive_hypothesis_check(
      need_space(cfg), need_map(cfg), need_variant(cfg), cfg.grid, HypothesisCheckOptions{});
  RunResult out;
  out.report = Json{{"command", "check-hypotheses"},
                    {"settings", settings_json(cfg)},
                    {"hypotheses", hypothesis_report_to_json(report)}};
  out.exit_code = report.applicable() ? 0 : 2;
  return out;
}

RunResult run_solve(const ScenarioConfig& cfg) {
  if (!cfg.x0) throw Error(Errc::SchemaError, "$.x0: solve needs a start point");
  SolveOptions opts;
  opts.eps = cfg.eps;
  opts.max_iter = cfg.max_iter;
  const Space& s = need_space(cfg);
  const IterationTrace trace = solve(s, need_map(cfg), need_variant(cfg), *cfg.x0, opts);

  Json report{{"command", "solve"},
              {"settings", settings_json(cfg)},
              {"trace", trace_summary_to_json(trace)}};
  if (trace.steps.size() >= 3 && trace.outcome != Outcome::HypothesisViolation) {
    report["diagnostics"] = decay_report_to_json(decay_diagnostics(s, trace));
  }
  RunResult out;
  out.report = std::move(report);
  out.trace_csv = trace_to_csv(trace);
  out.exit_code = trace.outcome == Outcome::Converged ? 0 : 2;
  return out;
}

RunResult run_oracle(const ScenarioConfig& cfg) {
  const Space& s = need_space(cfg);
  const SetValuedMap& m = need_map(cfg);
  RunResult out;
  Json report{{"command", "oracle"}, {"settings", settings_json(cfg)}};

  if (!cfg.variant) {
    for (PointKind kind : {PointKind::Start, PointKind::End, PointKind::Fixed}) {
      report[std::string(point_kind_name(kind)) + "_points"] =
          brute_force_points(s, m, kind, cfg.eps, cfg.grid);
    }
    out.report = std::move(report);
    out.exit_code = 0;
    return out;
  }

  const VariantSpec& v = *cfg.variant;
  const HypothesisReport hyp = exhaustive_hypothesis_check(s, m, v, cfg.grid);
  report["hypotheses"] = hypothesis_report_to_json(hyp);

  const PointKind kind = kind_for_mode(v.mode);
  const std::vector<Point> truth = brute_force_points(s, m, kind, 2.0 * cfg.eps, cfg.grid);
  report[std::string(point_kind_name(kind)) + "_points"] = truth;

  bool agreement = true;
  Json runs = Json::array();
  if (hyp.applicable()) {
    SolveOptions opts;
    opts.eps = cfg.eps;
    opts.max_iter = cfg.max_iter;
    for (Point x0 : enumerate_points(s, cfg.grid)) {
      const IterationTrace trace = solve(s, m, v, x0, opts);
      const bool converged = trace.outcome == Outcome::Converged;
      const bool in_truth =
          converged && std::find(truth.begin(), truth.end(), trace.final_x) != truth.end();
      agreement = agreement && converged && in_truth;
      runs.push_back(Json{{"x0", x0},
                          {"outcome", outcome_name(trace.outcome)},
                          {"final_x", trace.final_x},
                          {"final_f", trace.final_f},
                          {"limit_in_oracle", in_truth}});
    }
  }
  report["solves"] = std::move(runs);
  report["agreement"] = agreement;
  out.report = std::move(report);
  out.exit_code = hyp.applicable() && agreement ? 0 : 2;
  return out;
}

}  // namespace

RunResult run_command(Command cmd, const ScenarioConfig& cfg) {
  try {
    switch (cmd) {
      case Command::CheckSpace: return run_check_space(cfg);
      case Command::CheckHypotheses: return run_check_hypotheses(cfg);
      case Command::Solve: return run_solve(cfg);
      case Command::Oracle: return run_oracle(cfg);
    }
    throw Error(Errc::InvalidArgument, "unhandled command");
  } catch (const Error& e) {
    RunResult out;
    out.exit_code = 1;
    out.report = Json{{"error", e.what()}, {"code", errc_name(e.code())}};
    return out;
  }
}

}  // namespace qpm
