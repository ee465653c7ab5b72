#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "qpmlab/oracle.hpp"

namespace qpm {

using Json = nlohmann::json;

// --- value (de)serialization -------------------------------------------------

Json space_to_json(const Space& s);
Space space_from_json(const Json& j, const std::string& path = "$.space");

Json map_to_json(const SetValuedMap& m);
SetValuedMap map_from_json(const Json& j, const std::string& path = "$.map");

Json gauge_to_json(const Gauge& g);
Gauge gauge_from_json(const Json& j, const std::string& path);

std::string range_to_string(const GaugeRange& r);

// Variant fields are flattened at the config level:
// {"variant":"V1","mode":"start","phi":{...},"eta":{...},"c":...,"props":[...]}
Json variant_to_json(const VariantSpec& v);
VariantSpec variant_from_json(const Json& j, const std::string& path = "$");

// --- report serialization ----------------------------------------------------

Json axiom_report_to_json(const AxiomReport& r);
Json condition_report_to_json(const VariantConditionReport& r);
Json candidate_to_json(const CandidateCheck& c);
Json hypothesis_report_to_json(const HypothesisReport& r);
Json trace_summary_to_json(const IterationTrace& t);
Json decay_report_to_json(const DecayReport& r);

// --- trace CSV -----------------------------------------------------------------

// Header n,x,f,d_n,y,slack; one row per accepted step; the outcome and the
// final point are appended as a footer row.
std::string trace_to_csv(const IterationTrace& t);
// Parses steps, outcome and final point back; solver options are not part of
// the CSV and stay at their defaults.
IterationTrace trace_from_csv(const std::string& csv);

// --- scenario configs ----------------------------------------------------------

enum class Command { CheckSpace, CheckHypotheses, Solve, Oracle };

std::optional<Command> command_from_name(const std::string& name);
const char* command_name(Command c);

struct ScenarioConfig {
  std::optional<std::string> scenario;
  std::optional<Space> space;
  std::optional<SetValuedMap> map;
  std::optional<VariantSpec> variant;
  std::optional<Point> x0;
  double eps = kDefaultEps;
  int max_iter = kDefaultMaxIter;
  std::optional<GridSpec> grid;
  std::uint64_t seed = 0;
};

// Validates the JSON text into a config; throws Error with a JSON path in the
// message (SchemaError / UnknownVariant / UnknownRule). The built-in
// "paper-example" scenario expands to the MaxDiff interval [0,10] with the
// half-except-6 map.
ScenarioConfig parse_config(const std::string& text);

Space paper_example_space();
SetValuedMap paper_example_map();

}  // namespace qpm
