#include <doctest.h>

#include "qpmlab/oracle.hpp"
#include "qpmlab/sequence.hpp"

using namespace qpm;

namespace {

SequencePrefix halving(double start, int count) {
  SequencePrefix seq;
  double v = start;
  for (int i = 0; i < count; ++i) {
    seq.push_back(v);
    v /= 2.0;
  }
  return seq;
}

}  // namespace

TEST_CASE("convergence flags on the halving sequence") {
  const Space s = Space::interval(0.0, 10.0);

  SUBCASE("limit 0: left exact, right depends on the tail size") {
    // d(0, x_n) = max(0 - x_n, 0) = 0, so left holds at any tolerance
    const ConvergenceFlags short_run = classify_convergence(s, halving(10.0, 11), 0.0, 1e-12);
    CHECK(short_run.left);
    CHECK_FALSE(short_run.right);  // tail still carries 10/2^8 ~ 4e-2
    const ConvergenceFlags longer = classify_convergence(s, halving(10.0, 61), 0.0, 1e-12);
    CHECK(longer.left);
    CHECK(longer.right);  // tail starts at 10/2^45 ~ 3e-13
    CHECK(longer.ds);
  }

  SUBCASE("limit 3: right holds once the tail dips below it, left never") {
    const ConvergenceFlags f = classify_convergence(s, halving(10.0, 30), 3.0, 1e-12);
    CHECK_FALSE(f.left);  // d(3, x_n) -> 3
    CHECK(f.right);       // d(x_n, 3) = 0 once x_n <= 3
    CHECK_FALSE(f.ds);
  }

  SUBCASE("constant sequences converge every way") {
    const ConvergenceFlags f = classify_convergence(s, SequencePrefix(8, 4.25), 4.25, 0.0);
    CHECK(f.left);
    CHECK(f.right);
    CHECK(f.ds);
  }

  SUBCASE("errors") {
    CHECK_THROWS_AS((void)classify_convergence(s, {}, 0.0, 1e-9), Error);
    CHECK_THROWS_AS((void)classify_convergence(s, {1.0, 11.0}, 0.0, 1e-9), Error);
  }
}

TEST_CASE("cauchy classification on hand-checked sequences") {
  const Space s = Space::interval(0.0, 10.0);

  SUBCASE("1/n is left-K under MaxDiff") {
    SequencePrefix seq;
    for (int n = 1; n <= 100; ++n) seq.push_back(1.0 / n);
    const CauchyVerdict v = classify_cauchy(s, seq, 0.02);
    CHECK(v.left_k);  // d(x_k, x_n) = 1/k - 1/n <= 1/k on the tail
    CHECK(v.left_d);
  }

  SUBCASE("constant sequences get all five flags") {
    const CauchyVerdict v = classify_cauchy(s, SequencePrefix(6, 2.0), 0.0);
    CHECK(v.left_d);
    CHECK(v.left_k);
    CHECK(v.right_d);
    CHECK(v.right_k);
    CHECK(v.ds);
  }

  SUBCASE("alternating points of the discrete metric fail everything") {
    Eigen::MatrixXd m(2, 2);
    m << 0, 1, 1, 0;
    const Space disc = Space::from_matrix(m);
    SequencePrefix seq;
    for (int i = 0; i < 12; ++i) seq.push_back(static_cast<double>(i % 2));
    const CauchyVerdict v = classify_cauchy(disc, seq, 0.5);
    CHECK_FALSE(v.left_d);
    CHECK_FALSE(v.left_k);
    CHECK_FALSE(v.right_d);
    CHECK_FALSE(v.right_k);
    CHECK_FALSE(v.ds);
  }

  SUBCASE("prefixes shorter than three points are rejected") {
    CHECK_THROWS_AS((void)classify_cauchy(s, {1.0, 2.0}, 1.0), Error);
  }
}

TEST_CASE("cauchy verdicts respect the implication lattice") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Space sp = random_space(7, seed);
    Rng rng(seed * 31 + 7);
    SequencePrefix seq;
    const int len = 5 + static_cast<int>(rng.below(12));
    for (int i = 0; i < len; ++i) seq.push_back(static_cast<double>(rng.below(7)));
    // vary the tolerance so all flag combinations appear across seeds
    const double tol = rng.u01() * sp.diameter();

    const CauchyVerdict v = classify_cauchy(sp, seq, tol);
    if (v.ds) {
      CHECK(v.left_k);
      CHECK(v.right_k);
    }
    if (v.left_k) CHECK(v.left_d);
    if (v.right_k) CHECK(v.right_d);

    // left-K under d == right-K under the conjugate
    const CauchyVerdict vc = classify_cauchy(conjugate(sp), seq, tol);
    CHECK(v.left_k == vc.right_k);
    CHECK(v.right_k == vc.left_k);
    CHECK(v.ds == vc.ds);
  }
}
