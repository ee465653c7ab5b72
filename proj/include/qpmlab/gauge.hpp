#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qpmlab/defaults.hpp"
#include "qpmlab/errors.hpp"

namespace qpm {

enum class GaugeKind { Constant, Affine, Ratio, Table };

// Declared codomain of a gauge. The lower bound b is only meaningful for the
// two lower-bounded unit ranges.
struct GaugeRange {
  enum class Kind {
    Unit,         // [0,1)
    LowerOpen,    // [b,1)
    LowerClosed,  // [b,1]
    NonNegative,  // [0,inf)
  };
  Kind kind = Kind::NonNegative;
  double b = 0.0;

  bool admits(double v) const;
  bool operator==(const GaugeRange&) const = default;
};

class Gauge {
 public:
  static Gauge constant(double c, GaugeRange range = {GaugeRange::Kind::Unit, 0.0});
  static Gauge affine(double slope, double intercept,
                      GaugeRange range = {GaugeRange::Kind::NonNegative, 0.0});
  static Gauge ratio(GaugeRange range = {GaugeRange::Kind::Unit, 0.0});  // t / (1 + t)
  // Piecewise-linear through strictly increasing knots; clamps outside them.
  static Gauge table(std::vector<std::array<double, 2>> knots,
                     GaugeRange range = {GaugeRange::Kind::NonNegative, 0.0});

  double operator()(double t) const;

  GaugeKind kind() const { return kind_; }
  const GaugeRange& range() const { return range_; }
  double constant_value() const { return value_; }
  double slope() const { return slope_; }
  double intercept() const { return intercept_; }
  const std::vector<std::array<double, 2>>& knots() const { return knots_; }

 private:
  Gauge() = default;

  GaugeKind kind_ = GaugeKind::Constant;
  GaugeRange range_;
  double value_ = 0.0;
  double slope_ = 0.0;
  double intercept_ = 0.0;
  std::vector<std::array<double, 2>> knots_;
};

// Shape properties a GaugePair can declare; each one is verified numerically
// on the verification grid.
enum class PairProp {
  PhiNonDecreasing,
  EtaNonDecreasing,
  PhiSubadditive,
  EtaSubadditive,
  PhiContinuous,
  EtaContinuous,
  EtaLeIdentity,  // eta(t) <= t
  EtaLtIdentity,  // eta(t) <  t (for t > 0)
};

struct GaugePair {
  Gauge phi;
  Gauge eta;
  std::set<PairProp> props;
};

struct GaugeCheckOptions {
  int grid_points = 512;
  int limsup_probes = 64;       // probe positions t for the right-limsup sweeps
  int samples_per_window = 64;  // samples per shrinking window (t, t+delta]
  std::vector<double> window_schedule = {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
  double margin = kLimsupMargin;
  double strict_margin = kStrictMargin;
  int subadd_points = 64;  // grid subsample for the pairwise check
  double continuity_modulus = 1e6;
};

// {0} followed by log-spaced points up to t_max, plus any table knots.
// Strict pointwise comparisons are evaluated on the t > 0 part only.
std::vector<double> verification_grid(double t_max, const GaugeCheckOptions& opts = {},
                                      const std::vector<double>& extra_knots = {});

struct PointwiseResult {
  bool pass = true;
  std::optional<double> witness_t;
};

// phi(t) < eta(t) on the grid (strict via the margin, t > 0 only).
PointwiseResult check_pointwise_dominance(const GaugePair& pair, const std::vector<double>& grid,
                                          double strict_margin = kStrictMargin);

// Declared codomain enforcement on the grid.
PointwiseResult check_range(const Gauge& g, const std::vector<double>& grid);

struct LimsupEstimate {
  double estimate = 0.0;  // max sampled value over the finest window
  bool pass = false;      // estimate <= 1 - margin
  double finest_delta = 0.0;
  bool sampled = true;  // always: a sampled check, never a proof
};

// limsup_{r -> t+} phi(r)/eta(r), sampled on shrinking right-windows.
LimsupEstimate estimate_limsup_ratio(const GaugePair& pair, double t,
                                     const GaugeCheckOptions& opts = {});
// limsup_{r -> t+} g(r), same sampling scheme.
LimsupEstimate estimate_limsup_value(const Gauge& g, double t, const GaugeCheckOptions& opts = {});

enum class GaugeProp { NonDecreasing, Subadditive, Continuous, LeIdentity, LtIdentity };

struct ShapeResult {
  bool pass = true;
  std::optional<GaugeProp> failed_prop;
  std::optional<double> witness_t;
};

ShapeResult check_shape_properties(const Gauge& g, const std::set<GaugeProp>& props,
                                   const std::vector<double>& grid,
                                   const GaugeCheckOptions& opts = {});

// n-fold composition g(g(...g(t)...)).
double iterate(const Gauge& g, double t, int n);

// Psi = Phi * (2 - Phi); stays in [0,1) whenever Phi is.
double derived_psi(double phi_value);

}  // namespace qpm
