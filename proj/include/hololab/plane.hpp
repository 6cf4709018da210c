#pragma once

#include <vector>

#include "hololab/common.hpp"
#include "hololab/riemann.hpp"

namespace hololab {

// Singular-value decomposition of a graphical n-plane against the
// horizontal/vertical splitting.  e_j = cos(theta_j) u_j + sin(theta_j) v_j
// spans the plane; e_{n+mu} = -sin(theta_mu) u_mu + cos(theta_mu) v_mu spans
// the normal space.  Angles are sorted by |sin theta| descending, ties keep
// singular-value order.  u_j (j > m) pairs with a zero v_j; for mu > n the
// normal vector e_{n+mu} is v_mu itself.  Padding vectors are stored
// explicitly as std::nullopt-like zero flags, never silently.
struct TangentPlaneSplit {
  FrameIndexSet frame;
  std::vector<double> theta;       // n angles
  std::vector<Vec> u;              // n horizontal unit vectors (ambient components)
  std::vector<Vec> v;              // m vertical unit vectors
  std::vector<char> v_is_zero;     // v[j] zero-padded (j >= rank side)
  std::vector<Vec> e;              // n plane basis vectors
  std::vector<Vec> e_perp;         // m normal basis vectors
  double s_frak = 0.0;             // max_j |sin theta_j|
  double omega = 0.0;              // Omega(e_1..e_n) = prod cos theta_j

  TangentPlaneSplit(FrameIndexSet f) : frame(f) {}
};

// Omega = w^1 ^ ... ^ w^n evaluated on an (unnormalized) oriented basis after
// orientation-preserving orthonormalization.
double omega_of_basis(const FrameIndexSet& frame, const std::vector<Vec>& basis);

// Splits the span of `basis` (n ambient vectors, frame components).  Requires
// Omega(span) > graphical_tol; throws DomainError("plane not graphical")
// otherwise.
TangentPlaneSplit split_plane(const std::vector<Vec>& basis, const FrameIndexSet& frame,
                              double graphical_tol = 1e-12);

// Largest principal angle between the spans of two bases (radians).
double max_principal_angle(const std::vector<Vec>& a, const std::vector<Vec>& b);

struct EstimateCheck {
  std::string label;
  double lhs_max = 0.0;   // worst observed left-hand side
  double bound = 0.0;     // right-hand side
  bool ok = true;
};

// Evaluates every pairing estimate of the linear-algebraic decomposition on
// the split's bases and checks the stated bounds
// (n, n*s, s, s^2, n*s, 1, n(n-1)s^2).
std::vector<EstimateCheck> linear_estimate_suite(const TangentPlaneSplit& sp,
                                                 double slack = 1e-12);

// Random oriented n-plane through QR of a Gaussian matrix.
std::vector<Vec> random_plane(const FrameIndexSet& frame, Rng& rng);

// Near-horizontal plane: graph of the linear map `tilt` (m x n) over the
// horizontal subspace.
std::vector<Vec> graph_plane(const FrameIndexSet& frame, const Mat& tilt);

struct ComassReport {
  double max_omega = 0.0;        // largest Omega(L) seen
  double worst_near_one = 0.0;   // largest s_frak among samples with Omega > 1 - 1e-12
  bool two_sqrt_eps_ok = true;   // s < 2 sqrt(eps) whenever Omega > 1 - eps (eps < 1/2)
  long samples = 0;
};

// Samples random and near-horizontal planes; verifies comass one and the
// s < 2 sqrt(eps) consequence of Omega > 1 - eps.
ComassReport comass_sample(const FrameIndexSet& frame, long n_random, long n_near,
                           Rng& rng);

}  // namespace hololab
