#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qpmlab/solver.hpp"

namespace qpm {

// Deterministic generator shared by the random instance builders; identical
// seeds produce identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();                  // splitmix64 step
  double u01();                          // uniform in [0,1)
  std::uint64_t below(std::uint64_t n);  // uniform in [0,n)

 private:
  std::uint64_t state_;
};

enum class PointKind { Start, End, Fixed };

const char* point_kind_name(PointKind k);

// All enumerated x with the kind's functional <= eps. The fixed kind relaxes
// x in Tx to d^s(x, nearest of Tx) <= eps.
std::vector<Point> brute_force_points(const Space& s, const SetValuedMap& t, PointKind kind,
                                      double eps, const std::optional<GridSpec>& grid = {});

struct WitnessEntry {
  Point x = 0.0;
  double f_x = 0.0;
  std::vector<CandidateCheck> candidates;
};

struct HypothesisReport {
  VariantId variant = VariantId::V1;
  IterationMode mode = IterationMode::Start;
  bool feasible_everywhere = false;       // the existence hypothesis verdict
  std::vector<WitnessEntry> witnesses;    // nonempty exactly when it fails
  VariantConditionReport gauge_report;
  std::size_t points_checked = 0;
  std::optional<double> grid_step;
  double tol_feas = kFeasTol;

  bool pass() const { return feasible_everywhere; }
  bool applicable() const { return feasible_everywhere && gauge_report.pass; }
};

struct HypothesisCheckOptions {
  double tol_feas = kFeasTol;
  GaugeCheckOptions gauge;
};

HypothesisReport exhaustive_hypothesis_check(const Space& s, const SetValuedMap& t,
                                             const VariantSpec& v,
                                             const std::optional<GridSpec>& grid = {},
                                             const HypothesisCheckOptions& opts = {});

struct RandomSpaceParams {
  double scale = 1.0;
  double sparse_fraction = 0.25;  // raw entries pinned at the max cost
  double zero_fraction = 0.1;     // raw entries set to zero
};

// Seeded random T0 quasi-pseudometric space: random costs, shortest-path
// closure, zero-pair perturbation, closure again.
Space random_space(int n, std::uint64_t seed, const RandomSpaceParams& params = {});

// Seeded random table map with nonempty images of size <= max_card.
SetValuedMap random_setmap(const Space& s, std::uint64_t seed, int max_card);

}  // namespace qpm
