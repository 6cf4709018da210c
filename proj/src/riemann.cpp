#include "hololab/riemann.hpp"

#include <array>
#include <cmath>
#include <deque>
#include <sstream>

namespace hololab {

ComplexStructure ComplexStructure::pairs(int half) {
  ComplexStructure J;
  J.perm.resize(2 * half);
  J.sign.resize(2 * half);
  for (int mu = 0; mu < half; ++mu) {
    J.perm[mu] = half + mu;
    J.sign[mu] = 1.0;
    J.perm[half + mu] = mu;
    J.sign[half + mu] = -1.0;
  }
  return J;
}

ComplexStructure ComplexStructure::interleaved(int dim) {
  ComplexStructure J;
  J.perm.resize(dim);
  J.sign.resize(dim);
  for (int k = 0; 2 * k + 1 < dim; ++k) {
    J.perm[2 * k] = 2 * k + 1;
    J.sign[2 * k] = 1.0;
    J.perm[2 * k + 1] = 2 * k;
    J.sign[2 * k + 1] = -1.0;
  }
  return J;
}

double SymmetryReport::worst() const {
  double w = std::max({antisym_last, antisym_first, pair, bianchi});
  if (j_invariance) w = std::max(w, *j_invariance);
  return w;
}

std::string SymmetryReport::to_string() const {
  std::ostringstream os;
  os << "antisym(last)=" << antisym_last << " antisym(first)=" << antisym_first
     << " pair=" << pair << " bianchi=" << bianchi;
  if (j_invariance) os << " J=" << *j_invariance;
  return os.str();
}

RiemannTensor::RiemannTensor(int dim) : dim_(dim) {
  if (dim < 1) throw DomainError("RiemannTensor: dim >= 1 required");
  v_.assign(static_cast<std::size_t>(dim) * dim * dim * dim, 0.0);
}

double RiemannTensor::max_abs() const {
  double m = 0.0;
  for (double x : v_) m = std::max(m, std::abs(x));
  return m;
}

Mat RiemannTensor::ricci() const {
  Mat ric = Mat::Zero(dim_, dim_);
  for (int a = 0; a < dim_; ++a)
    for (int b = 0; b < dim_; ++b) {
      double s = 0.0;
      for (int k = 0; k < dim_; ++k) s += at(a, k, b, k);
      ric(a, b) = s;
    }
  return ric;
}

SymmetryReport RiemannTensor::check_symmetries(const ComplexStructure* J) const {
  SymmetryReport rep;
  const ComplexStructure* Juse = J;
  if (!Juse && J_) Juse = &*J_;
  if (Juse) rep.j_invariance = 0.0;
  for (int a = 0; a < dim_; ++a)
    for (int b = 0; b < dim_; ++b)
      for (int c = 0; c < dim_; ++c)
        for (int d = 0; d < dim_; ++d) {
          double r = at(a, b, c, d);
          rep.antisym_last = std::max(rep.antisym_last, std::abs(r + at(a, b, d, c)));
          rep.antisym_first = std::max(rep.antisym_first, std::abs(r + at(b, a, c, d)));
          rep.pair = std::max(rep.pair, std::abs(r - at(c, d, a, b)));
          rep.bianchi = std::max(
              rep.bianchi, std::abs(r + at(a, c, d, b) + at(a, d, b, c)));
          if (Juse) {
            double jr = Juse->sign[c] * Juse->sign[d] *
                        at(a, b, Juse->perm[c], Juse->perm[d]);
            *rep.j_invariance = std::max(*rep.j_invariance, std::abs(r - jr));
          }
        }
  return rep;
}

RiemannTensor RiemannTensor::space_form(int d, double kappa) {
  RiemannTensor R(d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        for (int e = 0; e < d; ++e)
          R.at(a, b, c, e) =
              kappa * ((a == c && b == e ? 1.0 : 0.0) - (a == e && b == c ? 1.0 : 0.0));
  return R;
}

RiemannTensor close_under_symmetries(int dim, const std::vector<Seed>& seeds,
                                     const ComplexStructure* J) {
  RiemannTensor R(dim);
  std::vector<char> known(static_cast<std::size_t>(dim) * dim * dim * dim, 0);
  auto flat = [dim](int a, int b, int c, int d) {
    return ((static_cast<std::size_t>(a) * dim + b) * dim + c) * dim + d;
  };

  std::deque<std::array<int, 4>> queue;
  double scale = 1.0;
  for (const Seed& s : seeds) scale = std::max(scale, std::abs(s.value));

  auto assign = [&](int a, int b, int c, int d, double value) {
    std::size_t f = flat(a, b, c, d);
    if (known[f]) {
      if (std::abs(R.at(a, b, c, d) - value) > 1e-12 * scale)
        throw NumericError("curvature seed table inconsistent under symmetry closure");
      return;
    }
    known[f] = 1;
    R.at(a, b, c, d) = value;
    queue.push_back({a, b, c, d});
  };

  for (const Seed& s : seeds) assign(s.a, s.b, s.c, s.d, s.value);

  while (!queue.empty()) {
    auto [a, b, c, d] = queue.front();
    queue.pop_front();
    double r = R.at(a, b, c, d);
    assign(a, b, d, c, -r);
    assign(b, a, c, d, -r);
    assign(c, d, a, b, r);
    if (J) {
      assign(a, b, J->perm[c], J->perm[d], J->sign[c] * J->sign[d] * r);
      assign(J->perm[a], J->perm[b], c, d, J->sign[a] * J->sign[b] * r);
    }
  }
  return R;
}

}  // namespace hololab
