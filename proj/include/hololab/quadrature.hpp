#pragma once

#include <functional>

namespace hololab {

// Adaptive Gauss-Legendre quadrature on [a, b].  Subdivides until the
// difference between the 15-point rule and its two-half refinement meets
// abs_tol + rel_tol * |estimate| on every panel.  Integrands here are smooth
// (hyperbolic functions), so this converges in a handful of splits.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-13, double abs_tol = 1e-300);

}  // namespace hololab
