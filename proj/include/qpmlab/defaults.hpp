#pragma once

namespace qpm {

// Absolute slack allowed when verifying the triangle inequality and other
// metric axioms on enumerated triples.
inline constexpr double kAxiomTol = 1e-9;

// Absolute slack allowed on the successor inequalities of every variant.
inline constexpr double kFeasTol = 1e-9;

// Margin used when a strict inequality (phi < eta, eta < id) is evaluated
// pointwise: lhs <= rhs - kStrictMargin.
inline constexpr double kStrictMargin = 1e-12;

// Recorded trace values must match recomputation this tightly.
inline constexpr double kRecomputeTol = 1e-12;

// Perturbation applied to distinct pairs with both directed distances zero.
inline constexpr double kT0Perturb = 1e-6;

// A sampled limsup estimate passes when it stays below 1 by this margin.
inline constexpr double kLimsupMargin = 1e-6;

inline constexpr double kDefaultEps = 1e-8;
inline constexpr int kDefaultMaxIter = 10000;

// Fraction of a sequence prefix treated as its tail by the classifiers.
inline constexpr double kTailFraction = 0.25;

}  // namespace qpm
