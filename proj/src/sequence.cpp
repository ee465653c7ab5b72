#include "qpmlab/sequence.hpp"

#include <algorithm>
#include <cmath>

namespace qpm {

namespace {

std::size_t tail_start_index(std::size_t n, double fraction, std::size_t min_len) {
  const auto want = static_cast<std::size_t>(std::ceil(static_cast<double>(n) * fraction));
  const std::size_t len = std::min(n, std::max(want, min_len));
  return n - len;
}

// Witness candidates for the left/right d-Cauchy search: every point of a
// finite space; for interval spaces the tail points and both endpoints.
std::vector<Point> witness_candidates(const Space& s, const SequencePrefix& seq,
                                      std::size_t tail_start) {
  if (s.kind() == SpaceKind::Matrix) return enumerate_points(s);
  std::vector<Point> cands(seq.begin() + static_cast<std::ptrdiff_t>(tail_start), seq.end());
  cands.push_back(s.lo());
  cands.push_back(s.hi());
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  return cands;
}

}  // namespace

ConvergenceFlags classify_convergence(const Space& s, const SequencePrefix& seq, Point x,
                                      double tol, const ClassifyOptions& opts) {
  if (seq.empty()) throw Error(Errc::EmptyTail, "sequence prefix is empty");
  for (Point p : seq) {
    if (!s.contains(p)) throw Error(Errc::PointOutOfDomain, "sequence point not in space");
  }
  if (!s.contains(x)) throw Error(Errc::PointOutOfDomain, "limit candidate not in space");

  ConvergenceFlags flags;
  flags.tol = tol;
  flags.tail_start = tail_start_index(seq.size(), opts.tail_fraction, 1);

  double max_left = 0.0, max_right = 0.0;
  for (std::size_t n = flags.tail_start; n < seq.size(); ++n) {
    max_left = std::max(max_left, distance(s, x, seq[n]));
    max_right = std::max(max_right, distance(s, seq[n], x));
  }
  flags.left = max_left <= tol;
  flags.right = max_right <= tol;
  flags.ds = flags.left && flags.right;
  return flags;
}

CauchyVerdict classify_cauchy(const Space& s, const SequencePrefix& seq, double tol,
                              const ClassifyOptions& opts) {
  if (seq.size() < 3) throw Error(Errc::EmptyTail, "prefix too short for a Cauchy verdict");
  for (Point p : seq) {
    if (!s.contains(p)) throw Error(Errc::PointOutOfDomain, "sequence point not in space");
  }

  CauchyVerdict v;
  v.tol = tol;
  v.tail_start = tail_start_index(seq.size(), opts.tail_fraction, 2);

  bool left_k = true, right_k = true, ds = true;
  for (std::size_t k = v.tail_start; k < seq.size(); ++k) {
    for (std::size_t n = k; n < seq.size(); ++n) {
      const double fwd = distance(s, seq[k], seq[n]);
      const double bwd = distance(s, seq[n], seq[k]);
      if (fwd > tol) left_k = false;
      if (bwd > tol) right_k = false;
      if (fwd > tol || bwd > tol) ds = false;
    }
  }
  v.left_k = left_k;
  v.right_k = right_k;
  v.ds = ds;

  const std::vector<Point> cands = witness_candidates(s, seq, v.tail_start);
  for (Point w : cands) {
    bool left_ok = true, right_ok = true;
    for (std::size_t n = v.tail_start; n < seq.size(); ++n) {
      if (distance(s, w, seq[n]) > tol) left_ok = false;
      if (distance(s, seq[n], w) > tol) right_ok = false;
      if (!left_ok && !right_ok) break;
    }
    v.left_d = v.left_d || left_ok;
    v.right_d = v.right_d || right_ok;
    if (v.left_d && v.right_d) break;
  }
  // left-K implies left-d (the first tail point is a witness); keep the
  // lattice intact even if the witness pool missed it.
  v.left_d = v.left_d || v.left_k;
  v.right_d = v.right_d || v.right_k;
  return v;
}

}  // namespace qpm
