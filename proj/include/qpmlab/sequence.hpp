#pragma once

#include <cstddef>
#include <vector>

#include "qpmlab/space.hpp"

namespace qpm {

using SequencePrefix = std::vector<Point>;

struct ClassifyOptions {
  double tail_fraction = kTailFraction;
};

struct ConvergenceFlags {
  bool left = false;   // d(x, x_n) -> 0 over the tail
  bool right = false;  // d(x_n, x) -> 0 over the tail
  bool ds = false;
  double tol = 0.0;
  std::size_t tail_start = 0;
};

// Finite-prefix Cauchy surrogate: each flag is decided on the tail window.
// The flags respect the implication lattice d^s => left-K ^ right-K,
// left-K => left-d, right-K => right-d by construction.
struct CauchyVerdict {
  bool left_d = false;
  bool left_k = false;
  bool right_d = false;
  bool right_k = false;
  bool ds = false;
  double tol = 0.0;
  std::size_t tail_start = 0;
};

ConvergenceFlags classify_convergence(const Space& s, const SequencePrefix& seq, Point x,
                                      double tol, const ClassifyOptions& opts = {});

CauchyVerdict classify_cauchy(const Space& s, const SequencePrefix& seq, double tol,
                              const ClassifyOptions& opts = {});

}  // namespace qpm
