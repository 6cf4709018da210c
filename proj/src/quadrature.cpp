#include "hololab/quadrature.hpp"

#include <cmath>
#include <cstddef>

#include "hololab/common.hpp"

namespace hololab {
namespace {

// 15-point Gauss-Legendre nodes/weights on [-1, 1]
constexpr int kN = 15;
constexpr double kNodes[kN] = {
    -0.9879925180204854, -0.9372733924007060, -0.8482065834104272,
    -0.7244177313601701, -0.5709721726085388, -0.3941513470775634,
    -0.2011940939974345, 0.0,
    0.2011940939974345,  0.3941513470775634,  0.5709721726085388,
    0.7244177313601701,  0.8482065834104272,  0.9372733924007060,
    0.9879925180204854};
constexpr double kWeights[kN] = {
    0.0307532419961173, 0.0703660474881081, 0.1071592204671719,
    0.1395706779261543, 0.1662692058169939, 0.1861610000155622,
    0.1984314853271116, 0.2025782419255613,
    0.1984314853271116, 0.1861610000155622, 0.1662692058169939,
    0.1395706779261543, 0.1071592204671719, 0.0703660474881081,
    0.0307532419961173};

double gauss_panel(const std::function<double(double)>& f, double a, double b) {
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0;
  for (int i = 0; i < kN; ++i) s += kWeights[i] * f(mid + half * kNodes[i]);
  return s * half;
}

double adapt(const std::function<double(double)>& f, double a, double b,
             double whole, double rel_tol, double abs_tol, int depth) {
  double mid = 0.5 * (a + b);
  double left = gauss_panel(f, a, mid);
  double right = gauss_panel(f, mid, b);
  double refined = left + right;
  double err = std::abs(refined - whole);
  if (err <= abs_tol + rel_tol * std::abs(refined) || depth >= 48)
    return refined;
  return adapt(f, a, mid, left, rel_tol, abs_tol, depth + 1) +
         adapt(f, mid, b, right, rel_tol, abs_tol, depth + 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, double abs_tol) {
  if (a == b) return 0.0;
  double whole = gauss_panel(f, a, b);
  double result = adapt(f, a, b, whole, rel_tol, abs_tol, 0);
  if (!std::isfinite(result)) throw NumericError("quadrature did not converge to a finite value");
  return result;
}

}  // namespace hololab
