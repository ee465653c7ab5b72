#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpmlab/gauge.hpp"

namespace qpm {

// GabaC / GabaPhi / GabaB are single-gauge contraction conditions; V1..V8
// are the two-gauge successor-inequality variants.
enum class VariantId { GabaC, GabaPhi, GabaB, V1, V2, V3, V4, V5, V6, V7, V8 };

enum class IterationMode { Start, End, Fixed };

const char* variant_name(VariantId id);
const char* mode_name(IterationMode mode);
std::optional<VariantId> variant_from_name(const std::string& name);
std::optional<IterationMode> mode_from_name(const std::string& name);

struct VariantSpec {
  VariantId id = VariantId::V1;
  IterationMode mode = IterationMode::Start;
  std::optional<Gauge> phi;
  std::optional<Gauge> eta;
  std::optional<double> c;  // GabaC's contraction constant
  std::set<PairProp> props;
};

// Shape properties a variant's theorem demands of its gauges.
std::set<PairProp> required_props(VariantId id);

// Builds a validated spec: the right gauges are present, their declared
// ranges match the theorem's codomains, and the declared props cover the
// requirements. Throws InvalidArgument otherwise.
VariantSpec make_variant(VariantId id, IterationMode mode, std::optional<Gauge> phi,
                         std::optional<Gauge> eta, std::optional<double> c,
                         std::set<PairProp> extra_props = {});

struct ConditionItem {
  std::string name;
  bool pass = true;
  bool sampled = false;
  std::optional<double> witness_t;
  std::string detail;
};

struct VariantConditionReport {
  bool pass = true;
  std::vector<ConditionItem> items;
  double t_max = 0.0;
};

// Numerically verifies every side condition the variant's theorem imposes on
// its gauges, on a grid reaching t_max (callers use twice the space
// diameter). Sampled results are labelled, never proven.
VariantConditionReport check_variant_conditions(const VariantSpec& v, double t_max,
                                                const GaugeCheckOptions& opts = {});

}  // namespace qpm
