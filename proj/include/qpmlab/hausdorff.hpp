#pragma once

#include <vector>

#include "qpmlab/space.hpp"

namespace qpm {

// Nonempty finite set of points, deduplicated and kept sorted.
class PointSet {
 public:
  explicit PointSet(std::vector<Point> elems);
  static PointSet singleton(Point x) { return PointSet({x}); }

  const std::vector<Point>& elems() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool contains(Point x) const;

  bool operator==(const PointSet& other) const { return elems_ == other.elems_; }

 private:
  std::vector<Point> elems_;
};

enum class MapRule {
  HalfExceptSix,  // T(6) = {4,5}, T(x) = {x/2} otherwise
  Identity,       // T(x) = {x}
};

// Assigns each point of the space a nonempty finite set of points, either
// via an explicit per-index table or a closed-form rule.
class SetValuedMap {
 public:
  static SetValuedMap table(std::vector<PointSet> images);
  static SetValuedMap closed_form(MapRule rule);

  bool is_table() const { return is_table_; }
  const std::vector<PointSet>& images() const { return images_; }
  MapRule rule() const { return rule_; }

  PointSet image(const Space& s, Point x) const;

 private:
  SetValuedMap() = default;

  bool is_table_ = false;
  std::vector<PointSet> images_;
  MapRule rule_ = MapRule::Identity;
};

double point_to_set(const Space& s, Point x, const PointSet& a);
double set_to_point(const Space& s, const PointSet& a, Point x);

// H(A,B) = max{ sup_{a in A} d(a,B), sup_{b in B} d(A,b) }.
double hausdorff(const Space& s, const PointSet& a, const PointSet& b);
// The same functional evaluated over the symmetrized metric d^s.
double hausdorff_sym(const Space& s, const PointSet& a, const PointSet& b);

// f(x) = H({x}, Tx): zero exactly at startpoints.
double f_start(const Space& s, const SetValuedMap& t, Point x);
// f(x) = H(Tx, {x}): zero exactly at endpoints; equals f_start on the
// conjugate space.
double f_end(const Space& s, const SetValuedMap& t, Point x);
// f(x) = H^s({x}, Tx): the fixed-point functional over d^s.
double f_sym(const Space& s, const SetValuedMap& t, Point x);

}  // namespace qpm
