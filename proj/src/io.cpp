#include "qpmlab/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace qpm {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

[[noreturn]] void schema_error(const std::string& path, const std::string& msg) {
  throw Error(Errc::SchemaError, path + ": " + msg);
}

double require_number(const Json& j, const std::string& path) {
  if (!j.is_number()) schema_error(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) schema_error(path, "value must be finite");
  return v;
}

const Json& require_field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) schema_error(path + "." + key, "missing field");
  return j.at(key);
}

}  // namespace

Json space_to_json(const Space& s) {
  if (s.kind() == SpaceKind::Matrix) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < s.size(); ++i) {
      Json row = Json::array();
      for (Eigen::Index j = 0; j < s.size(); ++j) row.push_back(s.dist_matrix()(i, j));
      rows.push_back(std::move(row));
    }
    return Json{{"kind", "matrix"}, {"dist", std::move(rows)}};
  }
  Json j{{"kind", "interval"}, {"lo", s.lo()}, {"hi", s.hi()}, {"rule", "maxdiff"}};
  switch (s.view()) {
    case MetricView::Primal: break;
    case MetricView::Conjugate: j["view"] = "conjugate"; break;
    case MetricView::Symmetric: j["view"] = "symmetric"; break;
  }
  return j;
}

Space space_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected an object");
  const Json& kind = require_field(j, "kind", path);
  if (kind == "matrix") {
    const Json& dist = require_field(j, "dist", path);
    if (!dist.is_array() || dist.empty()) schema_error(path + ".dist", "expected a nonempty array");
    const auto n = static_cast<Eigen::Index>(dist.size());
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const Json& row = dist.at(static_cast<std::size_t>(i));
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
        schema_error(path + ".dist[" + std::to_string(i) + "]", "expected a row of length n");
      }
      for (Eigen::Index k = 0; k < n; ++k) {
        m(i, k) = require_number(row.at(static_cast<std::size_t>(k)),
                                 path + ".dist[" + std::to_string(i) + "][" + std::to_string(k) + "]");
      }
    }
    return Space::from_matrix(std::move(m));
  }
  if (kind == "interval") {
    const double lo = require_number(require_field(j, "lo", path), path + ".lo");
    const double hi = require_number(require_field(j, "hi", path), path + ".hi");
    const Json& rule = require_field(j, "rule", path);
    if (rule != "maxdiff") {
      throw Error(Errc::UnknownRule, path + ".rule: " + rule.dump());
    }
    Space s = Space::interval(lo, hi, IntervalRule::MaxDiff);
    if (j.contains("view")) {
      const Json& view = j.at("view");
      if (view == "conjugate") s = conjugate(s);
      else if (view == "symmetric") s = symmetrize(s);
      else if (view != "primal") schema_error(path + ".view", "expected primal|conjugate|symmetric");
    }
    return s;
  }
  schema_error(path + ".kind", "expected matrix|interval");
}

Json map_to_json(const SetValuedMap& m) {
  if (m.is_table()) {
    Json table = Json::object();
    for (std::size_t i = 0; i < m.images().size(); ++i) {
      Json elems = Json::array();
      for (Point p : m.images()[i].elems()) elems.push_back(p);
      table[std::to_string(i)] = std::move(elems);
    }
    return Json{{"kind", "table"}, {"map", std::move(table)}};
  }
  const char* rule = m.rule() == MapRule::HalfExceptSix ? "half-except-6" : "identity";
  return Json{{"kind", "closedform"}, {"rule", rule}};
}

SetValuedMap map_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected an object");
  const Json& kind = require_field(j, "kind", path);
  if (kind == "table") {
    const Json& table = require_field(j, "map", path);
    if (!table.is_object() || table.empty()) schema_error(path + ".map", "expected a nonempty object");
    std::vector<PointSet> images;
    images.reserve(table.size());
    for (std::size_t i = 0; i < table.size(); ++i) {
      const std::string key = std::to_string(i);
      if (!table.contains(key)) {
        schema_error(path + ".map", "keys must be dense indices 0.." + std::to_string(table.size() - 1));
      }
      const Json& elems = table.at(key);
      if (!elems.is_array() || elems.empty()) {
        schema_error(path + ".map." + key, "image must be a nonempty array");
      }
      std::vector<Point> pts;
      pts.reserve(elems.size());
      for (const Json& e : elems) pts.push_back(require_number(e, path + ".map." + key));
      images.emplace_back(std::move(pts));
    }
    return SetValuedMap::table(std::move(images));
  }
  if (kind == "closedform") {
    const Json& rule = require_field(j, "rule", path);
    if (rule == "half-except-6") return SetValuedMap::closed_form(MapRule::HalfExceptSix);
    if (rule == "identity") return SetValuedMap::closed_form(MapRule::Identity);
    throw Error(Errc::UnknownRule, path + ".rule: " + rule.dump());
  }
  schema_error(path + ".kind", "expected table|closedform");
}

std::string range_to_string(const GaugeRange& r) {
  switch (r.kind) {
    case GaugeRange::Kind::Unit: return "[0,1)";
    case GaugeRange::Kind::LowerOpen: return "[b,1)";
    case GaugeRange::Kind::LowerClosed: return "[b,1]";
    case GaugeRange::Kind::NonNegative: return "[0,inf)";
  }
  return "?";
}

namespace {

GaugeRange range_from_json(const Json& j, const std::string& path) {
  GaugeRange r{GaugeRange::Kind::NonNegative, 0.0};
  if (!j.contains("range")) return r;
  const Json& rng = j.at("range");
  if (rng == "[0,1)") r.kind = GaugeRange::Kind::Unit;
  else if (rng == "[b,1)") r.kind = GaugeRange::Kind::LowerOpen;
  else if (rng == "[b,1]") r.kind = GaugeRange::Kind::LowerClosed;
  else if (rng == "[0,inf)") r.kind = GaugeRange::Kind::NonNegative;
  else schema_error(path + ".range", "expected [0,1) | [b,1) | [b,1] | [0,inf)");
  if (r.kind == GaugeRange::Kind::LowerOpen || r.kind == GaugeRange::Kind::LowerClosed) {
    r.b = require_number(require_field(j, "b", path), path + ".b");
  }
  return r;
}

}  // namespace

Json gauge_to_json(const Gauge& g) {
  Json j;
  switch (g.kind()) {
    case GaugeKind::Constant:
      j = Json{{"kind", "constant"}, {"c", g.constant_value()}};
      break;
    case GaugeKind::Affine:
      j = Json{{"kind", "affine"}, {"slope", g.slope()}, {"intercept", g.intercept()}};
      break;
    case GaugeKind::Ratio:
      j = Json{{"kind", "ratio"}};
      break;
    case GaugeKind::Table: {
      Json knots = Json::array();
      for (const auto& k : g.knots()) knots.push_back(Json::array({k[0], k[1]}));
      j = Json{{"kind", "table"}, {"knots", std::move(knots)}};
      break;
    }
  }
  j["range"] = range_to_string(g.range());
  if (g.range().kind == GaugeRange::Kind::LowerOpen ||
      g.range().kind == GaugeRange::Kind::LowerClosed) {
    j["b"] = g.range().b;
  }
  return j;
}

Gauge gauge_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected an object");
  const Json& kind = require_field(j, "kind", path);
  const GaugeRange range = range_from_json(j, path);
  if (kind == "constant") {
    return Gauge::constant(require_number(require_field(j, "c", path), path + ".c"), range);
  }
  if (kind == "affine") {
    return Gauge::affine(require_number(require_field(j, "slope", path), path + ".slope"),
                         require_number(require_field(j, "intercept", path), path + ".intercept"),
                         range);
  }
  if (kind == "ratio") return Gauge::ratio(range);
  if (kind == "table") {
    const Json& knots = require_field(j, "knots", path);
    if (!knots.is_array() || knots.empty()) schema_error(path + ".knots", "expected a nonempty array");
    std::vector<std::array<double, 2>> ks;
    ks.reserve(knots.size());
    for (const Json& k : knots) {
      if (!k.is_array() || k.size() != 2) schema_error(path + ".knots", "knots are [t,value] pairs");
      ks.push_back({require_number(k.at(0), path + ".knots"), require_number(k.at(1), path + ".knots")});
    }
    return Gauge::table(std::move(ks), range);
  }
  schema_error(path + ".kind", "expected constant|affine|ratio|table");
}

namespace {

const std::pair<const char*, PairProp> kPropNames[] = {
    {"phi_nondecreasing", PairProp::PhiNonDecreasing},
    {"eta_nondecreasing", PairProp::EtaNonDecreasing},
    {"phi_subadditive", PairProp::PhiSubadditive},
    {"eta_subadditive", PairProp::EtaSubadditive},
    {"phi_continuous", PairProp::PhiContinuous},
    {"eta_continuous", PairProp::EtaContinuous},
    {"eta_le_identity", PairProp::EtaLeIdentity},
    {"eta_lt_identity", PairProp::EtaLtIdentity},
};

}  // namespace

Json variant_to_json(const VariantSpec& v) {
  Json j{{"variant", variant_name(v.id)}, {"mode", mode_name(v.mode)}};
  if (v.phi) j["phi"] = gauge_to_json(*v.phi);
  if (v.eta) j["eta"] = gauge_to_json(*v.eta);
  if (v.c) j["c"] = *v.c;
  Json props = Json::array();
  for (const auto& [name, prop] : kPropNames) {
    if (v.props.contains(prop)) props.push_back(name);
  }
  if (!props.empty()) j["props"] = std::move(props);
  return j;
}

VariantSpec variant_from_json(const Json& j, const std::string& path) {
  const Json& name = require_field(j, "variant", path);
  if (!name.is_string()) schema_error(path + ".variant", "expected a string");
  const auto id = variant_from_name(name.get<std::string>());
  if (!id) throw Error(Errc::UnknownVariant, path + ".variant: " + name.dump());

  IterationMode mode = IterationMode::Start;
  if (j.contains("mode")) {
    const Json& m = j.at("mode");
    const auto parsed = m.is_string() ? mode_from_name(m.get<std::string>()) : std::nullopt;
    if (!parsed) schema_error(path + ".mode", "expected start|end|fixed");
    mode = *parsed;
  }
  std::optional<Gauge> phi, eta;
  if (j.contains("phi")) phi = gauge_from_json(j.at("phi"), path + ".phi");
  if (j.contains("eta")) eta = gauge_from_json(j.at("eta"), path + ".eta");
  std::optional<double> c;
  if (j.contains("c")) c = require_number(j.at("c"), path + ".c");

  std::set<PairProp> props;
  if (j.contains("props")) {
    const Json& arr = j.at("props");
    if (!arr.is_array()) schema_error(path + ".props", "expected an array of strings");
    for (const Json& p : arr) {
      bool known = false;
      for (const auto& [n, prop] : kPropNames) {
        if (p == n) { props.insert(prop); known = true; break; }
      }
      if (!known) schema_error(path + ".props", "unknown property " + p.dump());
    }
  }
  try {
    return make_variant(*id, mode, std::move(phi), std::move(eta), c, std::move(props));
  } catch (const Error& e) {
    if (e.code() == Errc::InvalidArgument) schema_error(path, e.what());
    throw;
  }
}

Json axiom_report_to_json(const AxiomReport& r) {
  Json j{{"pass", r.pass()},
         {"entries_ok", r.entries_ok},
         {"zero_diag_ok", r.zero_diag_ok},
         {"triangle_ok", r.triangle_ok},
         {"t0_checked", r.t0_checked},
         {"t0_ok", r.t0_ok},
         {"sampled", r.sampled},
         {"tolerance", r.tol},
         {"points_checked", r.points_checked}};
  if (r.bad_entry) j["bad_entry"] = Json::array({(*r.bad_entry)[0], (*r.bad_entry)[1]});
  if (r.bad_diag) j["bad_diag"] = *r.bad_diag;
  if (r.triangle_witness) {
    j["triangle_witness"] = Json{{"x", r.triangle_witness->x},
                                 {"y", r.triangle_witness->y},
                                 {"z", r.triangle_witness->z},
                                 {"lhs", r.triangle_witness->lhs},
                                 {"rhs", r.triangle_witness->rhs}};
  }
  if (r.t0_witness) j["t0_witness"] = Json::array({(*r.t0_witness)[0], (*r.t0_witness)[1]});
  return j;
}

Json condition_report_to_json(const VariantConditionReport& r) {
  Json items = Json::array();
  for (const auto& item : r.items) {
    Json ij{{"name", item.name}, {"pass", item.pass}, {"sampled", item.sampled}};
    if (item.witness_t) ij["witness_t"] = *item.witness_t;
    if (!item.detail.empty()) ij["detail"] = item.detail;
    items.push_back(std::move(ij));
  }
  return Json{{"pass", r.pass}, {"t_max", r.t_max}, {"items", std::move(items)}};
}

Json candidate_to_json(const CandidateCheck& c) {
  Json checks = Json::array();
  for (const auto& chk : c.checks) {
    checks.push_back(Json{{"name", chk.name}, {"lhs", chk.lhs}, {"rhs", chk.rhs}});
  }
  return Json{{"y", c.y},        {"f_y", c.f_y},           {"h_xy", c.h_xy},
              {"slack", c.slack}, {"feasible", c.feasible}, {"checks", std::move(checks)}};
}

Json hypothesis_report_to_json(const HypothesisReport& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) {
    Json cands = Json::array();
    for (const auto& c : w.candidates) cands.push_back(candidate_to_json(c));
    witnesses.push_back(Json{{"x", w.x}, {"f_x", w.f_x}, {"candidates", std::move(cands)}});
  }
  Json j{{"variant", variant_name(r.variant)},
         {"mode", mode_name(r.mode)},
         {"pass", r.pass()},
         {"applicable", r.applicable()},
         {"witnesses", std::move(witnesses)},
         {"gauge_conditions", condition_report_to_json(r.gauge_report)},
         {"points_checked", r.points_checked},
         {"tol_feas", r.tol_feas}};
  if (r.grid_step) j["grid_step"] = *r.grid_step;
  return j;
}

namespace {

const char* functional_label(IterationMode mode) {
  switch (mode) {
    case IterationMode::Start: return "H({x},Tx)";
    case IterationMode::End: return "H(Tx,{x})";
    case IterationMode::Fixed: return "H^s({x},Tx), both-arm inequalities";
  }
  return "?";
}

}  // namespace

Json trace_summary_to_json(const IterationTrace& t) {
  Json j{{"variant", variant_name(t.variant)},
         {"mode", mode_name(t.mode)},
         {"functional", functional_label(t.mode)},
         {"outcome", outcome_name(t.outcome)},
         {"iterations", t.steps.size()},
         {"final_x", t.final_x},
         {"final_f", t.final_f}};
  if (t.violation) {
    Json cands = Json::array();
    for (const auto& c : t.violation->candidates) cands.push_back(candidate_to_json(c));
    j["violation"] =
        Json{{"x", t.violation->x}, {"f_x", t.violation->f_x}, {"candidates", std::move(cands)}};
  }
  return j;
}

Json decay_report_to_json(const DecayReport& r) {
  Json j{{"monotone_from", r.monotone_from},
         {"monotone_all", r.monotone_all},
         {"dn_lt_2Dn", r.dn_bound_ok},
         {"cauchy", Json{{"left_d", r.cauchy.left_d},
                         {"left_k", r.cauchy.left_k},
                         {"right_d", r.cauchy.right_d},
                         {"right_k", r.cauchy.right_k},
                         {"ds", r.cauchy.ds},
                         {"tol", r.cauchy.tol}}}};
  if (r.q_hat) j["q_hat"] = *r.q_hat;
  return j;
}

std::string trace_to_csv(const IterationTrace& t) {
  std::ostringstream out;
  out << "n,x,f,d_n,y,slack\n";
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const TraceStep& st = t.steps[i];
    out << i << ',' << fmt(st.x) << ',' << fmt(st.f_x) << ',' << fmt(st.d_n) << ',' << fmt(st.y)
        << ',' << fmt(st.slack) << '\n';
  }
  out << "outcome," << outcome_name(t.outcome) << ',' << fmt(t.final_x) << ',' << fmt(t.final_f)
      << '\n';
  return out.str();
}

IterationTrace trace_from_csv(const std::string& csv) {
  IterationTrace t;
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line) || line != "n,x,f,d_n,y,slack") {
    throw Error(Errc::SchemaError, "trace CSV: bad header");
  }
  bool saw_outcome = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    if (!cells.empty() && cells[0] == "outcome") {
      if (cells.size() != 4) throw Error(Errc::SchemaError, "trace CSV: bad outcome row");
      if (cells[1] == "Converged") t.outcome = Outcome::Converged;
      else if (cells[1] == "HypothesisViolation") t.outcome = Outcome::HypothesisViolation;
      else if (cells[1] == "MaxIterations") t.outcome = Outcome::MaxIterations;
      else throw Error(Errc::SchemaError, "trace CSV: unknown outcome");
      t.final_x = std::stod(cells[2]);
      t.final_f = std::stod(cells[3]);
      saw_outcome = true;
      break;
    }
    if (cells.size() != 6) throw Error(Errc::SchemaError, "trace CSV: bad step row");
    TraceStep st;
    st.x = std::stod(cells[1]);
    st.f_x = std::stod(cells[2]);
    st.d_n = std::stod(cells[3]);
    st.y = std::stod(cells[4]);
    st.slack = std::stod(cells[5]);
    t.steps.push_back(st);
  }
  if (!saw_outcome) throw Error(Errc::SchemaError, "trace CSV: missing outcome footer");
  return t;
}

std::optional<Command> command_from_name(const std::string& name) {
  if (name == "check-space") return Command::CheckSpace;
  if (name == "check-hypotheses") return Command::CheckHypotheses;
  if (name == "solve") return Command::Solve;
  if (name == "oracle") return Command::Oracle;
  return std::nullopt;
}

const char* command_name(Command c) {
  switch (c) {
    case Command::CheckSpace: return "check-space";
    case Command::CheckHypotheses: return "check-hypotheses";
    case Command::Solve: return "solve";
    case Command::Oracle: return "oracle";
  }
  return "?";
}

Space paper_example_space() { return Space::interval(0.0, 10.0, IntervalRule::MaxDiff); }

SetValuedMap paper_example_map() { return SetValuedMap::closed_form(MapRule::HalfExceptSix); }

ScenarioConfig parse_config(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::SchemaError, std::string("$: not valid JSON (") + e.what() + ")");
  }
  if (!j.is_object()) schema_error("$", "expected a JSON object");

  ScenarioConfig cfg;
  if (j.contains("scenario")) {
    const Json& sc = j.at("scenario");
    if (!sc.is_string()) schema_error("$.scenario", "expected a string");
    if (j.contains("space") || j.contains("map")) {
      schema_error("$.scenario", "scenario conflicts with an explicit space/map");
    }
    if (sc != "paper-example") schema_error("$.scenario", "unknown scenario " + sc.dump());
    cfg.scenario = sc.get<std::string>();
    cfg.space = paper_example_space();
    cfg.map = paper_example_map();
  } else {
    if (!j.contains("space")) schema_error("$.scenario", "need a scenario name or a space");
    cfg.space = space_from_json(j.at("space"), "$.space");
    if (j.contains("map")) cfg.map = map_from_json(j.at("map"), "$.map");
  }

  if (j.contains("variant")) cfg.variant = variant_from_json(j, "$");
  if (j.contains("x0")) cfg.x0 = require_number(j.at("x0"), "$.x0");
  if (j.contains("eps")) {
    cfg.eps = require_number(j.at("eps"), "$.eps");
    if (!(cfg.eps > 0.0)) schema_error("$.eps", "must be > 0");
  }
  if (j.contains("max_iter")) {
    if (!j.at("max_iter").is_number_integer()) schema_error("$.max_iter", "expected an integer");
    cfg.max_iter = j.at("max_iter").get<int>();
    if (cfg.max_iter < 1) schema_error("$.max_iter", "must be >= 1");
  }
  if (j.contains("grid")) {
    const double step = require_number(j.at("grid"), "$.grid");
    if (!(step > 0.0)) schema_error("$.grid", "must be > 0");
    cfg.grid = GridSpec{step};
  }
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_integer()) schema_error("$.seed", "expected an integer");
    cfg.seed = j.at("seed").get<std::uint64_t>();
  }
  return cfg;
}

}  // namespace qpm
