#pragma once

#include <vector>

#include "hololab/common.hpp"
#include "hololab/plane.hpp"
#include "hololab/riemann.hpp"

namespace hololab {
namespace stenzel {

// Frame layout for T*S^n (dimension 2n), 0-based:
//   0          radial-horizontal codirection (w^1)
//   1..n-1     remaining horizontal (w^j, j = 2..n)
//   n          radial-vertical w^{n+1} = c dr
//   n+1..2n-1  remaining vertical (w^{n+j})
// All scalar data of the metric at fiber radius r.
struct RadialState {
  int n = 0;
  double r = 0.0;
  double rho = 0.0;                  // geodesic distance to the zero section
  double hp = 0.0, hpp = 0.0, hppp = 0.0;
  double a = 0.0, b = 0.0, c = 0.0;
  double A = 0.0, B = 0.0, C = 0.0;  // connection scalars, negative for r > 0
  double Adot = 0.0, Bdot = 0.0, Cdot = 0.0;  // d/d(rho), degree-two polynomials
  bool at_origin = false;            // r = 0 limit data only
};

inline constexpr double kRMax = 300.0;  // sinh overflow cap

// (h', h'', h''') from the potential ODE (h')^n' = 2^{n+1} n sinh(2r)^{n-1}
struct HPrimes {
  double hp, hpp, hppp;
};
HPrimes hprime(double r, int n);

RadialState radial_state(double r, int n);

// rho(r) and its inverse (bracketed Newton; rho is strictly increasing)
double rho_of_r(double r, int n);
double r_of_rho(double rho, int n);

// residuals of the first-order system a./a + A = 0, b./b + B = 0,
// c./c + (n-1)C = 0 and of the sum relations B+C = -a/(bc) etc.
// All normalized by max(1, |lhs|, |rhs|).
struct SystemResiduals {
  double ode_a, ode_b, ode_c;
  double sum_bc, sum_ca, sum_ab;
  double max() const;
};
SystemResiduals system_residuals(const RadialState& st);

struct Lemma21Report {
  double ratio_A_min, ratio_A_max;  // |A| / rho over the grid
  double ratio_C_min, ratio_C_max;  // |C| / rho
  double ratio_B_min, ratio_B_max;  // |B| * rho
  bool all_negative = true;
  double k_emp = 0.0;  // tightest K with all ratios in [1/K, K]
};
Lemma21Report lemma21_sweep(int n, const std::vector<double>& rho_grid);

// |d/drho of (A,B,C) - quadratic expressions|, derivative by central
// differences in rho with step h_fd
struct DotResiduals {
  double res_A, res_B, res_C;
  bool step_warning = false;
};
DotResiduals lemma22_residual(const RadialState& st, double h_fd);

// full curvature table; closes the inequivalent components under the slot
// symmetries and the Kaehler J-invariance
RiemannTensor curvature(const RadialState& st);

// diagonal Hessian of psi = rho^2 in the frame above; entries
// (-2 rho (n-1) C, -2 rho A, 2, -2 rho B)
struct HessianPsi {
  Vec diag;
  bool degenerate_limit = false;  // r = 0: (0, 0, 2, 2)
};
HessianPsi hessian_psi(const RadialState& st);

// orthogonal gauge with first row y/|y|, smooth away from y/|y| = -e_1,
// T(r e_1) = identity
Mat spherical_gauge(const Vec& y);

// covariant derivative of the calibration n-form contracted with X, as a
// metric norm; `terms` of the four-term formula are exposed for tests
double grad_omega_norm(const RadialState& st, const Vec& X);

// value Omega(plane) for this family
double omega_value(const RadialState& st, const TangentPlaneSplit& plane);

// sum_k (nabla^2_{e_k,e_k} Omega)(e_1,...,e_n) over the plane's basis
double hess_omega_trace(const RadialState& st, const TangentPlaneSplit& plane);

// Bound data for the gradient/trace estimates: the certified constant is
// found by sweeping and then re-asserted against every sample.
struct OmegaBoundSample {
  double rho, s_frak;
  double grad_ratio;   // |nabla_X Omega| / (rho |X|)
  double trace;        // trace of nabla^2 Omega over the plane
};
OmegaBoundSample omega_bound_sample(const RadialState& st, const TangentPlaneSplit& plane,
                                    const Vec& X);

}  // namespace stenzel
}  // namespace hololab
