#include <doctest.h>

#include "qpmlab/hausdorff.hpp"
#include "qpmlab/io.hpp"
#include "qpmlab/oracle.hpp"

using namespace qpm;

namespace {

PointSet pts(std::initializer_list<Point> elems) { return PointSet{std::vector<Point>(elems)}; }

}  // namespace

TEST_CASE("one-sided distances to finite sets") {
  const Space s = paper_example_space();
  CHECK(point_to_set(s, 6.0, pts({4.0, 5.0})) == 1.0);  // min{2, 1}
  CHECK(point_to_set(s, 5.0, pts({4.0, 5.0, 7.0})) == 0.0);
  CHECK(point_to_set(s, 3.0, pts({8.0})) == distance(s, 3.0, 8.0));

  CHECK(set_to_point(s, pts({4.0, 5.0}), 6.0) == 0.0);  // min{d(4,6), d(5,6)}
  CHECK(set_to_point(s, pts({4.0, 5.0}), 4.0) == 0.0);

  // duality with the conjugate space, on random table scenarios
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Space sp = random_space(6, seed);
    const Space spc = conjugate(sp);
    Rng rng(seed + 1000);
    std::vector<Point> elems;
    for (int k = 0; k < 3; ++k) elems.push_back(static_cast<double>(rng.below(6)));
    const PointSet a{elems};
    const Point x = static_cast<double>(rng.below(6));
    CHECK(set_to_point(sp, a, x) == point_to_set(spc, x, a));
  }
}

TEST_CASE("hausdorff functional on the worked example") {
  const Space s = paper_example_space();
  CHECK(hausdorff(s, pts({6.0}), pts({4.0, 5.0})) == 2.0);
  CHECK(hausdorff(s, pts({5.0}), pts({2.5})) == 2.5);
  CHECK(hausdorff(s, pts({4.0, 5.0}), pts({4.0, 5.0})) == 0.0);
  CHECK(hausdorff(s, pts({3.0}), pts({7.0})) == distance(s, 3.0, 7.0));  // = 0, asymmetric
  CHECK(hausdorff(s, pts({7.0}), pts({3.0})) == 4.0);
}

TEST_CASE("hausdorff over the symmetrized metric") {
  const Space s = paper_example_space();
  CHECK(hausdorff_sym(s, pts({6.0}), pts({4.0, 5.0})) == 2.0);  // max{min{2,1}, max{2,1}}
  CHECK(hausdorff_sym(s, pts({1.0, 9.0}), pts({1.0, 9.0})) == 0.0);
  for (double x = 0.0; x <= 10.0; x += 1.25) {
    for (double y = 0.0; y <= 10.0; y += 1.25) {
      CHECK(hausdorff_sym(s, pts({x}), pts({y})) == std::abs(x - y));
    }
  }
}

TEST_CASE("hausdorff properties on random finite spaces") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Space sp = random_space(7, seed);
    Rng rng(seed * 17 + 3);
    auto draw_set = [&]() {
      std::vector<Point> elems;
      const int card = 1 + static_cast<int>(rng.below(4));
      for (int k = 0; k < card; ++k) elems.push_back(static_cast<double>(rng.below(7)));
      return PointSet{elems};
    };
    for (int rep = 0; rep < 6; ++rep) {
      const PointSet a = draw_set(), b = draw_set(), c = draw_set();
      CHECK(hausdorff(sp, a, a) == 0.0);
      // extended quasi-pseudometric triangle inequality
      CHECK(hausdorff(sp, a, c) <= hausdorff(sp, a, b) + hausdorff(sp, b, c) + kAxiomTol);
      const Point x = static_cast<double>(rng.below(7));
      const Point y = static_cast<double>(rng.below(7));
      CHECK(hausdorff(sp, PointSet::singleton(x), PointSet::singleton(y)) == distance(sp, x, y));
      CHECK(hausdorff_sym(sp, PointSet::singleton(x), PointSet::singleton(y)) ==
            distance_in_view(sp, MetricView::Symmetric, x, y));
    }
  }
}

TEST_CASE("start/end functionals reproduce the worked scenario") {
  const Space s = paper_example_space();
  const SetValuedMap t = paper_example_map();

  CHECK(f_start(s, t, 6.0) == 2.0);
  CHECK(f_start(s, t, 3.0) == 1.5);
  CHECK(f_start(s, t, 0.0) == 0.0);
  CHECK(f_end(s, t, 6.0) == 0.0);  // both 4 and 5 reach 6 at zero forward cost

  const SetValuedMap id = SetValuedMap::closed_form(MapRule::Identity);
  CHECK(f_start(s, id, 7.25) == 0.0);
  CHECK(f_end(s, id, 7.25) == 0.0);
  CHECK(f_sym(s, id, 7.25) == 0.0);
}

TEST_CASE("f_end equals f_start on the conjugate space") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Space sp = random_space(6, seed);
    const SetValuedMap t = random_setmap(sp, seed + 999, 3);
    const Space spc = conjugate(sp);
    for (Point x : enumerate_points(sp)) {
      CHECK(f_end(sp, t, x) == f_start(spc, t, x));
    }
  }
}

TEST_CASE("every image point is within f_start of its source") {
  // H({x},{y}) <= H({x},Tx) for y in Tx: the bound behind the eta inequality
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Space sp = random_space(6, seed);
    const SetValuedMap t = random_setmap(sp, seed + 5, 4);
    for (Point x : enumerate_points(sp)) {
      const double fx = f_start(sp, t, x);
      const PointSet img = t.image(sp, x);
      for (Point y : img.elems()) {
        CHECK(distance(sp, x, y) <= fx);
      }
    }
  }
}

TEST_CASE("domain and emptiness errors") {
  const Space s = paper_example_space();
  const SetValuedMap t = paper_example_map();
  CHECK_THROWS_AS((void)PointSet(std::vector<Point>{}), Error);
  CHECK_THROWS_AS((void)f_start(s, t, 12.0), Error);
  CHECK_THROWS_AS((void)t.image(s, -1.0), Error);

  // closed-form images must stay inside the space
  const Space narrow = Space::interval(5.0, 10.0);
  const SetValuedMap half = SetValuedMap::closed_form(MapRule::HalfExceptSix);
  CHECK_THROWS_AS((void)half.image(narrow, 8.0), Error);  // 4 leaves [5,10]
}
