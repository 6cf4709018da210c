#include "hololab/plane.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "hololab/forms.hpp"

namespace hololab {
namespace {

// QR with positive diagonal: orthonormal basis of the same span, same
// orientation, deterministic.
Mat orthonormalize(const std::vector<Vec>& basis) {
  int d = static_cast<int>(basis[0].size());
  int n = static_cast<int>(basis.size());
  Mat B(d, n);
  for (int j = 0; j < n; ++j) B.col(j) = basis[j];
  Eigen::HouseholderQR<Mat> qr(B);
  Mat Q = qr.householderQ() * Mat::Identity(d, n);
  Mat R = Q.transpose() * B;
  for (int j = 0; j < n; ++j)
    if (R(j, j) < 0) Q.col(j) = -Q.col(j);
  return Q;
}

}  // namespace

double omega_of_basis(const FrameIndexSet& frame, const std::vector<Vec>& basis) {
  Mat Q = orthonormalize(basis);
  return Q.topRows(frame.n).determinant();
}

TangentPlaneSplit split_plane(const std::vector<Vec>& basis, const FrameIndexSet& frame,
                              double graphical_tol) {
  const int n = frame.n, m = frame.m, d = frame.dim();
  if (static_cast<int>(basis.size()) != n)
    throw DomainError("split_plane: need exactly n basis vectors");
  for (const Vec& b : basis)
    if (b.size() != d) throw DomainError("split_plane: vector dimension mismatch");

  Mat Q = orthonormalize(basis);
  Mat Hb = Q.topRows(n);     // n x n, columns = horizontal parts
  Mat Vb = Q.bottomRows(m);  // m x n
  double om = Hb.determinant();
  if (om <= graphical_tol) throw DomainError("plane not graphical");

  // graph map G: horizontal -> vertical, G = Vb * Hb^{-1}
  Mat G = Vb * Hb.inverse();
  Eigen::JacobiSVD<Mat> svd(G, Eigen::ComputeFullU | Eigen::ComputeFullV);
  // G = W * diag(sigma) * Ut, sigma_j = tan(theta_j), descending
  Mat W = svd.matrixU();  // m x m
  Mat U = svd.matrixV();  // n x n
  int rank = std::min(n, m);

  TangentPlaneSplit sp(frame);
  sp.theta.assign(n, 0.0);
  for (int j = 0; j < rank; ++j) sp.theta[j] = std::atan(svd.singularValues()(j));
  // |sin theta| descending holds automatically: singular values descend and
  // zero-padded angles (j >= rank) sit at the end.

  // [w^i(u_j)] must be special orthogonal: flip the smallest-angle pair.
  if (U.determinant() < 0) {
    U.col(n - 1) = -U.col(n - 1);
    if (n - 1 < rank) W.col(n - 1) = -W.col(n - 1);
  }

  sp.u.assign(n, Vec::Zero(d));
  sp.v.assign(m, Vec::Zero(d));
  // For j >= m the vertical partner of u_j is set to the zero vector; the
  // flag records that explicitly rather than leaving a silent zero column.
  sp.v_is_zero.assign(n, 0);
  for (int j = m; j < n; ++j) sp.v_is_zero[j] = 1;
  for (int j = 0; j < n; ++j) sp.u[j].head(n) = U.col(j);
  for (int mu = 0; mu < m; ++mu) sp.v[mu].tail(m) = W.col(mu);

  sp.e.assign(n, Vec::Zero(d));
  sp.e_perp.assign(m, Vec::Zero(d));
  sp.omega = 1.0;
  sp.s_frak = 0.0;
  for (int j = 0; j < n; ++j) {
    double th = sp.theta[j];
    Vec vpart = (j < m) ? sp.v[j] : Vec(Vec::Zero(d));
    sp.e[j] = std::cos(th) * sp.u[j] + std::sin(th) * vpart;
    sp.omega *= std::cos(th);
    sp.s_frak = std::max(sp.s_frak, std::abs(std::sin(th)));
  }
  for (int mu = 0; mu < m; ++mu) {
    double th = (mu < n) ? sp.theta[mu] : 0.0;
    Vec upart = (mu < n) ? sp.u[mu] : Vec(Vec::Zero(d));
    sp.e_perp[mu] = -std::sin(th) * upart + std::cos(th) * sp.v[mu];
  }
  return sp;
}

double max_principal_angle(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  Mat Qa = orthonormalize(a), Qb = orthonormalize(b);
  // sin-based: resolves angles down to roundoff where acos of a near-1
  // cosine cannot
  Mat resid = Qb - Qa * (Qa.transpose() * Qb);
  Eigen::JacobiSVD<Mat> svd(resid);
  double s = std::clamp(svd.singularValues().maxCoeff(), 0.0, 1.0);
  return std::asin(s);
}

std::vector<EstimateCheck> linear_estimate_suite(const TangentPlaneSplit& sp,
                                                 double slack) {
  const int n = sp.frame.n, m = sp.frame.m;
  const double s = sp.s_frak;
  std::vector<EstimateCheck> out;

  auto record = [&](const std::string& label, double lhs, double bound) {
    EstimateCheck c;
    c.label = label;
    c.lhs_max = lhs;
    c.bound = bound;
    c.ok = lhs <= bound + slack;
    out.push_back(c);
  };

  // sum_i |(w^j x w^k)(e_i,e_i)| <= n and sum_i |(w^{n+mu} x w^j)(e_i,e_i)| <= n*s
  double worst_hh = 0.0, worst_vh = 0.0;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      double acc = 0.0;
      for (int i = 0; i < n; ++i) acc += std::abs(sp.e[i](j) * sp.e[i](k));
      worst_hh = std::max(worst_hh, acc);
    }
  for (int mu = 0; mu < m; ++mu)
    for (int j = 0; j < n; ++j) {
      double acc = 0.0;
      for (int i = 0; i < n; ++i) acc += std::abs(sp.e[i](n + mu) * sp.e[i](j));
      worst_vh = std::max(worst_vh, acc);
    }
  record("sum |(w^j.w^k)(e_i,e_i)|", worst_hh, n);
  record("sum |(w^{n+mu}.w^j)(e_i,e_i)|", worst_vh, n * s);

  std::vector<int> omega_idx(n);
  std::iota(omega_idx.begin(), omega_idx.end(), 0);

  // |Omega(e_{n+mu}, e_1,..,^e_i,..,e_n)| <= s
  double w1 = 0.0;
  for (int mu = 0; mu < m; ++mu)
    for (int i = 0; i < n; ++i) {
      std::vector<Vec> args;
      args.push_back(sp.e_perp[mu]);
      for (int k = 0; k < n; ++k)
        if (k != i) args.push_back(sp.e[k]);
      w1 = std::max(w1, std::abs(eval_wedge(omega_idx, args)));
    }
  record("|Omega(e_perp, e-hat-one)|", w1, s);

  // |Omega(e_{n+mu}, e_{n+nu}, e_1,..,^e_i,..,^e_j,..,e_n)| <= s^2
  double w2 = 0.0;
  for (int mu = 0; mu < m; ++mu)
    for (int nu = 0; nu < m; ++nu)
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          std::vector<Vec> args;
          args.push_back(sp.e_perp[mu]);
          args.push_back(sp.e_perp[nu]);
          for (int k = 0; k < n; ++k)
            if (k != i && k != j) args.push_back(sp.e[k]);
          w2 = std::max(w2, std::abs(eval_wedge(omega_idx, args)));
        }
  record("|Omega(e_perp,e_perp, e-hat-two)|", w2, s * s);

  // |(w^{n+mu} ^ w^1 ^..^ ^w^i ^..^ w^n)(e_1,..,e_n)| <= n*s
  double w3 = 0.0;
  for (int mu = 0; mu < m; ++mu)
    for (int i = 0; i < n; ++i) {
      std::vector<int> idx;
      idx.push_back(n + mu);
      for (int k = 0; k < n; ++k)
        if (k != i) idx.push_back(k);
      w3 = std::max(w3, std::abs(eval_wedge(idx, sp.e)));
    }
  record("|(w^{n+mu}^..hat-i..)(e)|", w3, n * s);

  // same word on (e_{n+nu}, e_1,..,^e_j,..,e_n): <= 1
  double w4 = 0.0;
  for (int mu = 0; mu < m; ++mu)
    for (int i = 0; i < n; ++i) {
      std::vector<int> idx;
      idx.push_back(n + mu);
      for (int k = 0; k < n; ++k)
        if (k != i) idx.push_back(k);
      for (int nu = 0; nu < m; ++nu)
        for (int j = 0; j < n; ++j) {
          std::vector<Vec> args;
          args.push_back(sp.e_perp[nu]);
          for (int k = 0; k < n; ++k)
            if (k != j) args.push_back(sp.e[k]);
          w4 = std::max(w4, std::abs(eval_wedge(idx, args)));
        }
    }
  record("|(w^{n+mu}^..hat-i..)(e_perp, e-hat-one)|", w4, 1.0);

  // |(w^{n+mu} ^ w^{n+nu} ^ ..hat-i..hat-j..)(e_1,..,e_n)| <= n(n-1)s^2
  double w5 = 0.0;
  for (int mu = 0; mu < m; ++mu)
    for (int nu = 0; nu < m; ++nu)
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          std::vector<int> idx;
          idx.push_back(n + mu);
          idx.push_back(n + nu);
          for (int k = 0; k < n; ++k)
            if (k != i && k != j) idx.push_back(k);
          w5 = std::max(w5, std::abs(eval_wedge(idx, sp.e)));
        }
  record("|(w^{n+mu}^w^{n+nu}^..hat-ij..)(e)|", w5, n * (n - 1) * s * s);

  return out;
}

std::vector<Vec> random_plane(const FrameIndexSet& frame, Rng& rng) {
  int d = frame.dim(), n = frame.n;
  Mat B = rng.normal_mat(d, n);
  std::vector<Vec> basis(n);
  for (int j = 0; j < n; ++j) basis[j] = B.col(j);
  return basis;
}

std::vector<Vec> graph_plane(const FrameIndexSet& frame, const Mat& tilt) {
  int n = frame.n, d = frame.dim();
  std::vector<Vec> basis(n, Vec::Zero(d));
  for (int j = 0; j < n; ++j) {
    basis[j](j) = 1.0;
    basis[j].tail(frame.m) = tilt.col(j);
  }
  return basis;
}

ComassReport comass_sample(const FrameIndexSet& frame, long n_random, long n_near,
                           Rng& rng) {
  ComassReport rep;
  auto consider = [&](const std::vector<Vec>& basis) {
    double om = omega_of_basis(frame, basis);
    rep.max_omega = std::max(rep.max_omega, om);
    ++rep.samples;
    if (om > 0.5) {  // graphical with Omega > 1 - eps for eps < 1/2
      TangentPlaneSplit sp = split_plane(basis, frame);
      double eps = 1.0 - om;
      if (om > 1.0 - 1e-12) rep.worst_near_one = std::max(rep.worst_near_one, sp.s_frak);
      if (eps > 0 && sp.s_frak >= 2.0 * std::sqrt(eps))
        rep.two_sqrt_eps_ok = false;
    }
  };
  for (long i = 0; i < n_random; ++i) consider(random_plane(frame, rng));
  for (long i = 0; i < n_near; ++i) {
    double scale = std::pow(10.0, rng.uniform(-8.0, -0.3));
    Mat tilt = scale * rng.normal_mat(frame.m, frame.n);
    consider(graph_plane(frame, tilt));
  }
  return rep;
}

}  // namespace hololab
