#pragma once

#include <Eigen/Core>
#include <array>
#include <optional>
#include <vector>

#include "qpmlab/defaults.hpp"
#include "qpmlab/errors.hpp"

namespace qpm {

// A point is an integer-valued index into the distance matrix for matrix
// spaces, or a real coordinate for interval spaces.
using Point = double;

enum class SpaceKind { Matrix, Interval };

enum class IntervalRule { MaxDiff };  // d(a,b) = max(a-b, 0)

enum class MetricView { Primal, Conjugate, Symmetric };

// A quasi-pseudometric space: either a finite point set with an explicit
// n-by-n distance matrix, or an interval [lo,hi] with a closed-form rule.
// Matrix spaces materialize conjugation/symmetrization; interval spaces carry
// a view flag and evaluate the rule accordingly.
class Space {
 public:
  static Space from_matrix(Eigen::MatrixXd dist);
  static Space interval(double lo, double hi, IntervalRule rule = IntervalRule::MaxDiff);

  SpaceKind kind() const { return kind_; }
  Eigen::Index size() const { return dist_.rows(); }
  const Eigen::MatrixXd& dist_matrix() const { return dist_; }
  double lo() const { return lo_; }
  double hi() const { return hi_; }
  IntervalRule rule() const { return rule_; }
  MetricView view() const { return view_; }

  bool contains(Point x) const;
  // Largest directed distance achievable in the space.
  double diameter() const;

  friend Space conjugate(const Space& s);
  friend Space symmetrize(const Space& s);

 private:
  Space() = default;

  SpaceKind kind_ = SpaceKind::Matrix;
  Eigen::MatrixXd dist_;
  double lo_ = 0.0;
  double hi_ = 0.0;
  IntervalRule rule_ = IntervalRule::MaxDiff;
  MetricView view_ = MetricView::Primal;
};

double distance(const Space& s, Point x, Point y);

// d(x,y) seen through an overlay view of the space's current metric:
// Primal = d, Conjugate = d^-1, Symmetric = d v d^-1.
double distance_in_view(const Space& s, MetricView view, Point x, Point y);

Space conjugate(const Space& s);
Space symmetrize(const Space& s);

bool ball_membership(const Space& s, Point center, double radius, Point y,
                     bool closed = false, MetricView view = MetricView::Primal);

struct GridSpec {
  double step = 1.0;
};

// Matrix spaces enumerate all indices; interval spaces require a grid.
std::vector<Point> enumerate_points(const Space& s, const std::optional<GridSpec>& grid = {});

struct AxiomCheckOptions {
  bool check_t0 = true;
  double tol = kAxiomTol;
  std::optional<GridSpec> grid;  // required for interval spaces
};

struct AxiomReport {
  bool entries_ok = true;    // all enumerated distances finite and >= 0
  bool zero_diag_ok = true;  // d(x,x) == 0 exactly
  bool triangle_ok = true;
  bool t0_checked = false;
  bool t0_ok = true;
  bool sampled = false;  // interval spaces: grid-sampled, not proven
  double tol = kAxiomTol;
  std::size_t points_checked = 0;

  struct TriangleWitness {
    Point x, y, z;   // d(x,z) > d(x,y) + d(y,z) + tol
    double lhs, rhs;
  };
  std::optional<std::array<Point, 2>> bad_entry;
  std::optional<Point> bad_diag;
  std::optional<TriangleWitness> triangle_witness;
  std::optional<std::array<Point, 2>> t0_witness;

  bool pass() const {
    return entries_ok && zero_diag_ok && triangle_ok && (!t0_checked || t0_ok);
  }
};

AxiomReport verify_axioms(const Space& s, const AxiomCheckOptions& opts = {});

// All-pairs shortest-path closure of a raw cost matrix, iterated to a fixed
// point so the result satisfies the triangle inequality exactly and closure
// is idempotent entrywise.
Space metric_closure(const Eigen::MatrixXd& raw);

}  // namespace qpm
