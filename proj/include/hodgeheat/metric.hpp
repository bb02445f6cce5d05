#pragma once

#include <string>
#include <vector>

#include "hodgeheat/complex.hpp"
#include "hodgeheat/schrodinger.hpp"
#include "hodgeheat/types.hpp"

namespace hodgeheat {

/// A (pseudo-)metric table over the sites of one degree block.  Entries may be
/// +inf across connectivity components.  `jump_size` is the supremum of
/// d(x,y) over pairs with b(x,y) > 0, filled in by certify_intrinsic.
struct MetricData {
  int degree = 0;
  std::vector<std::string> keys;
  RMat dist;
  double jump_size = 1.0;
  bool intrinsic_certified = false;
  double rescale = 1.0;          ///< factor applied by certify_intrinsic
  std::string note;

  int size() const { return static_cast<int>(dist.rows()); }
};

/// Hop-count metric on vertices (degree-0 block ordering).
MetricData combinatorial_metric(const WeightedComplex& cx);

/// Hop metric divided by sqrt(max combinatorial vertex degree); intrinsic for
/// the plain graph Laplacian of a combinatorial complex.
MetricData scaled_intrinsic_metric(const WeightedComplex& cx);

/// Chain metric on the degree-k simplices:
///   rho(s, s') = (dim(Sigma)+1)^{-1/2} * inf over chains s=s_0 ~ ... ~ s_n=s'
///                of sum_j max_{v in s_j cap s_{j-1}} deg(v)^{-1/2},
/// where ~ means sharing a codimension-1 face and deg is the combinatorial
/// vertex degree in the 1-skeleton.  (Adjacency through shared codim-1 faces;
/// recorded in `note`.)
MetricData simplex_metric(const WeightedComplex& cx, int k);

struct IntrinsicReport {
  double max_lhs = 0;   ///< sup_x (1/m(x)) sum_y b(x,y) d(x,y)^2
  bool pass = false;
  double suggested_rescale = 1.0;  ///< divide distances by this to pass
};

/// Checks the intrinsic-metric inequality for the extracted b of `sd`.
IntrinsicReport verify_intrinsic(const SchrodingerData& sd, const MetricData& md);

/// Verifies, rescaling distances once by 1/sqrt(max_lhs) if needed, then
/// fills jump_size and flags the result certified.  Throws if a pair with
/// b > 0 sits at infinite distance (no rescale can fix that).
MetricData certify_intrinsic(const SchrodingerData& sd, MetricData md);

/// Closed-ball membership (indices) around site x.
std::vector<int> ball(const MetricData& md, int x, double r);
/// Weighted volume of the closed ball.
double ball_volume(const MetricData& md, const RVec& m, int x, double r);

/// All-pairs shortest paths from a nonnegative step-cost adjacency list.
RMat shortest_paths(int n, const std::vector<std::vector<std::pair<int, double>>>& adj);

}  // namespace hodgeheat
