#include "hololab/stenzel.hpp"

#include <cmath>
#include <limits>

#include "hololab/forms.hpp"
#include "hololab/quadrature.hpp"

namespace hololab {
namespace stenzel {
namespace {

// I(r) = int_0^r sinh(2u)^{n-1} du; positive integrand, no cancellation
double integral_I(double r, int n) {
  return integrate([n](double u) { return std::pow(std::sinh(2 * u), n - 1); }, 0.0, r);
}

// J(r) = int_0^r sinh(2u)^{n-1} (cosh(2u) - 1) du, with cosh(2u)-1 = 2 sinh(u)^2
double integral_J(double r, int n) {
  return integrate(
      [n](double u) { return std::pow(std::sinh(2 * u), n - 1) * 2.0 * sqr(std::sinh(u)); },
      0.0, r);
}

// L(r) = int_0^r sinh(2u)^{n-1} (cosh(2r) - cosh(2u)) du,
// cosh(2r) - cosh(2u) = 2 sinh(r+u) sinh(r-u)
double integral_L(double r, int n) {
  return integrate(
      [n, r](double u) {
        return std::pow(std::sinh(2 * u), n - 1) * 2.0 * std::sinh(r + u) * std::sinh(r - u);
      },
      0.0, r);
}

double c_of_r(double u, int n) {
  if (u < 1e-8) return 1.0;
  double I = integral_I(u, n);
  double hp = std::pow(std::pow(2.0, n + 1) * n * I, 1.0 / n);
  double hpp = std::pow(2.0, n + 1) * std::pow(std::sinh(2 * u), n - 1) / std::pow(hp, n - 1);
  return 0.5 * std::sqrt(hpp);
}

void check_domain(double r, int n) {
  if (!(r >= 0.0)) throw DomainError("stenzel: r >= 0 required");
  if (n < 2) throw DomainError("stenzel: n > 1 required");
  if (r > kRMax) throw NumericError("stenzel: r exceeds overflow cap");
}

// frame labels, 0-based: paper index 1 -> 0, j in 2..n -> j-1, n+1 -> n,
// n+j -> n+j-1
std::vector<int> phi_word(int n) {
  std::vector<int> w(n - 1);
  for (int i = 0; i < n - 1; ++i) w[i] = i + 1;
  return w;
}

// removes `idx` from the word, returning the interior-product sign (-1)^pos
std::pair<std::vector<int>, int> hat(const std::vector<int>& word, int idx) {
  std::vector<int> out;
  int sign = 1, pos = 0;
  bool found = false;
  for (int w : word) {
    if (w == idx && !found) {
      found = true;
      sign = (pos % 2 == 0) ? 1 : -1;
    } else {
      out.push_back(w);
      ++pos;
    }
  }
  return {out, found ? sign : 0};
}

std::vector<int> cat(std::vector<int> head, const std::vector<int>& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

struct Term1 {
  double coef;
  int alpha;
  std::vector<int> form;
};

struct Term2 {
  double coef;
  int alpha, beta;
  std::vector<int> form;
};

std::vector<Term1> grad_terms(const RadialState& st) {
  const int n = st.n;
  const double A = st.A, C = st.C;
  const std::vector<int> Phi = phi_word(n);
  std::vector<Term1> ts;
  ts.push_back({(n - 1) * C, 0, cat({n}, Phi)});
  for (int j = 2; j <= n; ++j) {
    int jj = j - 1, vj = n + j - 1;
    ts.push_back({A, jj, cat({vj}, Phi)});
    auto [pj, sj] = hat(Phi, jj);
    ts.push_back({-C * sj, 0, cat({0, vj}, pj)});
    ts.push_back({A * sj, jj, cat({0, n}, pj)});
  }
  return ts;
}

// second covariant derivative, transcribed term by term; the leading block I
// enters with multiplicity (n-1)
std::vector<Term2> hess_terms(const RadialState& st) {
  const int n = st.n;
  const double A = st.A, B = st.B, C = st.C, Ad = st.Adot, Cd = st.Cdot;
  const std::vector<int> Phi = phi_word(n);
  const std::vector<int> Om = [&] {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i;
    return w;
  }();
  std::vector<Term2> ts;
  auto add = [&](double coef, int al, int be, std::vector<int> form) {
    if (coef != 0.0) ts.push_back({coef, al, be, std::move(form)});
  };
  const double nm1 = n - 1;

  // block I, weight (n-1)
  add(nm1 * -nm1 * C * C, 0, 0, Om);
  add(nm1 * Cd, n, 0, cat({n}, Phi));
  add(nm1 * nm1 * C * C, 0, n, cat({n}, Phi));
  for (int j = 2; j <= n; ++j) {
    int jj = j - 1, vj = n + j - 1;
    auto [pj, sj] = hat(Phi, jj);
    add(nm1 * -B * C, vj, 0, cat({vj}, Phi));
    add(nm1 * -B * C * sj, vj, 0, cat({0, n}, pj));
    add(nm1 * -B * C, vj, jj, cat({n}, Phi));
    add(nm1 * A * C, jj, vj, cat({n}, Phi));
    add(nm1 * -C * C * sj, 0, 0, cat({n, vj}, pj));
  }

  // block II
  for (int j = 2; j <= n; ++j) {
    int jj = j - 1, vj = n + j - 1;
    auto [pj, sj] = hat(Phi, jj);
    add(-A * A, jj, jj, Om);
    add(A * B, vj, jj, cat({n}, Phi));
    add(Ad, n, jj, cat({vj}, Phi));
    add(A * A, jj, n, cat({vj}, Phi));
    add(A * B, vj, 0, cat({vj}, Phi));
    add(-A * C, 0, vj, cat({vj}, Phi));
    for (int k = 2; k <= n; ++k) {
      int kk = k - 1, vk = n + k - 1;
      auto [pk, sk] = hat(Phi, kk);
      add(A * B * sk, vk, jj, cat({vj, 0}, pk));
      add(-A * C * sk, 0, jj, cat({vj, vk}, pk));
      add(A * A * sk, kk, jj, cat({vj, n}, pk));
    }
  }

  // block III
  add(-C * C, 0, 0, Om);
  for (int k = 2; k <= n; ++k) {  // j-independent bracket items, once per k
    int kk = k - 1, vk = n + k - 1;
    (void)kk;
    auto [pk, sk] = hat(Phi, k - 1);
    add(-Cd * sk, n, 0, cat({0, vk}, pk));
    add(-nm1 * C * C * sk, 0, n, cat({0, vk}, pk));
  }
  for (int j = 2; j <= n; ++j) {
    int jj = j - 1, vj = n + j - 1;
    auto [pj, sj] = hat(Phi, jj);
    add(-nm1 * C * C * sj, 0, 0, cat({n, vj}, pj));
    add(-B * C, vj, 0, cat({vj}, Phi));
    add(-B * C * sj, vj, 0, cat({0, n}, pj));
    for (int k = 2; k <= n; ++k) {
      int kk = k - 1, vk = n + k - 1;
      auto [pk, sk] = hat(Phi, kk);
      add(B * C * sk, vj, jj, cat({0, vk}, pk));
      add(-A * C * sk, jj, vj, cat({0, vk}, pk));
      add(-A * C * sj, kk, 0, cat({vk, vj}, pj));
      if (k != j) {
        auto [pjk, sjk_tmp] = hat(pj, kk);
        int sjk = sj * sjk_tmp;  // iota(e_k) iota(e_j) Phi
        add(C * C * sjk, 0, 0, cat({0, vj, vk}, pjk));
        add(-A * C * sjk, kk, 0, cat({0, vj, n}, pjk));
      }
    }
  }

  // block IV
  for (int j = 2; j <= n; ++j) {
    int jj = j - 1, vj = n + j - 1;
    auto [pj, sj] = hat(Phi, jj);
    add(-A * A, jj, jj, Om);
    add(Ad * sj, n, jj, cat({0, n}, pj));
    add(A * A * sj, jj, n, cat({0, n}, pj));
    add(A * B * sj, vj, 0, cat({0, n}, pj));
    add(-A * C * sj, 0, vj, cat({0, n}, pj));
    add(A * B, vj, jj, cat({n}, Phi));
    for (int k = 2; k <= n; ++k) {
      int kk = k - 1, vk = n + k - 1;
      add(A * A * sj, kk, jj, cat({vk, n}, pj));
      add(-A * B * sj, vk, jj, cat({0, vk}, pj));
      if (k != j) {
        auto [pjk, sjk_tmp] = hat(pj, kk);
        int sjk = sj * sjk_tmp;
        add(-A * C * sjk, 0, jj, cat({0, n, vk}, pjk));
      }
    }
  }

  return ts;
}

}  // namespace

HPrimes hprime(double r, int n) {
  check_domain(r, n);
  if (r == 0.0) return {0.0, 4.0, 0.0};
  double I = integral_I(r, n);
  double hp = std::pow(std::pow(2.0, n + 1) * n * I, 1.0 / n);
  double s2 = std::sinh(2 * r);
  double hpp = std::pow(2.0, n + 1) * std::pow(s2, n - 1) / std::pow(hp, n - 1);
  double hppp = std::pow(2.0, n + 1) * (n - 1) * std::pow(s2, n - 2) *
                (2.0 * std::cosh(2 * r) * hp - s2 * hpp) / std::pow(hp, n);
  return {hp, hpp, hppp};
}

double rho_of_r(double r, int n) {
  check_domain(r, n);
  return integrate([n](double u) { return c_of_r(u, n); }, 0.0, r, 1e-12, 1e-13);
}

double r_of_rho(double rho, int n) {
  if (rho < 0) throw DomainError("stenzel: rho >= 0 required");
  if (rho == 0) return 0.0;
  double lo = 0.0, hi = std::min(rho + 1.0, kRMax);
  while (rho_of_r(hi, n) < rho) {
    lo = hi;
    hi = std::min(2 * hi, kRMax);
    if (hi >= kRMax) break;
  }
  double r = std::min(rho, hi);
  for (int it = 0; it < 80; ++it) {
    double f = rho_of_r(r, n) - rho;
    if (f > 0)
      hi = r;
    else
      lo = r;
    double step = f / c_of_r(std::max(r, 1e-12), n);
    double next = r - step;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - r) < 1e-15 * std::max(1.0, r)) return next;
    r = next;
  }
  return r;
}

RadialState radial_state(double r, int n) {
  check_domain(r, n);
  RadialState st;
  st.n = n;
  st.r = r;
  if (r == 0.0) {
    st.rho = 0.0;
    st.hp = 0.0;
    st.hpp = 4.0;
    st.hppp = 0.0;
    st.a = st.c = 1.0;
    st.b = 0.0;
    st.A = st.C = 0.0;
    st.B = -std::numeric_limits<double>::infinity();
    st.at_origin = true;
    return st;
  }
  auto [hp, hpp, hppp] = hprime(r, n);
  st.hp = hp;
  st.hpp = hpp;
  st.hppp = hppp;
  st.a = 0.5 * std::sqrt(hp / std::tanh(r));
  st.b = 0.5 * std::sqrt(hp * std::tanh(r));
  st.c = 0.5 * std::sqrt(hpp);
  double s2 = std::sinh(2 * r);
  double I = integral_I(r, n);
  double J = integral_J(r, n);
  double L = integral_L(r, n);
  double rt = std::sqrt(hpp);
  // cancellation-free quotients: h''/h' - 2/sinh(2r) = 2J/(sinh(2r) I) and
  // h'''/((n-1) h'') = 2L/(sinh(2r) I)
  st.A = -2.0 * J / (rt * s2 * I);
  st.C = -2.0 * L / (rt * s2 * I);
  st.B = -(hpp / hp + 2.0 / s2) / rt;
  st.rho = rho_of_r(r, n);
  double sum = st.A + st.B + st.C;
  st.Adot = -n * st.B * st.C + st.A * sum;
  st.Bdot = -n * st.A * st.C + st.B * sum;
  st.Cdot = -2.0 * st.A * st.B + (n - 1) * st.C * sum;
  return st;
}

double SystemResiduals::max() const {
  return std::max({ode_a, ode_b, ode_c, sum_bc, sum_ca, sum_ab});
}

SystemResiduals system_residuals(const RadialState& st) {
  if (st.at_origin) throw DomainError("system_residuals: r > 0 required");
  const double r = st.r;
  // independent derivative route: differentiate the closed forms for a, b, c
  double ap = (st.hpp / std::tanh(r) - st.hp / sqr(std::sinh(r))) / (8.0 * st.a);
  double bp = (st.hpp * std::tanh(r) + st.hp / sqr(std::cosh(r))) / (8.0 * st.b);
  double cp = st.hppp / (8.0 * st.c);
  SystemResiduals res;
  res.ode_a = rel_residual(ap / (st.a * st.c), -st.A);
  res.ode_b = rel_residual(bp / (st.b * st.c), -st.B);
  res.ode_c = rel_residual(cp / (st.c * st.c), -(st.n - 1) * st.C);
  res.sum_bc = rel_residual(st.B + st.C, -st.a / (st.b * st.c));
  res.sum_ca = rel_residual(st.C + st.A, -st.b / (st.a * st.c));
  res.sum_ab = rel_residual(st.A + st.B, -st.c / (st.a * st.b));
  return res;
}

Lemma21Report lemma21_sweep(int n, const std::vector<double>& rho_grid) {
  Lemma21Report rep;
  rep.ratio_A_min = rep.ratio_C_min = rep.ratio_B_min = std::numeric_limits<double>::infinity();
  rep.ratio_A_max = rep.ratio_C_max = rep.ratio_B_max = 0.0;
  for (double rho : rho_grid) {
    if (!(rho > 0.0 && rho < 1.0)) throw DomainError("lemma21_sweep: grid must lie in (0,1)");
    RadialState st = radial_state(r_of_rho(rho, n), n);
    if (!(st.A < 0 && st.B < 0 && st.C < 0)) rep.all_negative = false;
    double ra = std::abs(st.A) / rho, rc = std::abs(st.C) / rho, rb = std::abs(st.B) * rho;
    rep.ratio_A_min = std::min(rep.ratio_A_min, ra);
    rep.ratio_A_max = std::max(rep.ratio_A_max, ra);
    rep.ratio_C_min = std::min(rep.ratio_C_min, rc);
    rep.ratio_C_max = std::max(rep.ratio_C_max, rc);
    rep.ratio_B_min = std::min(rep.ratio_B_min, rb);
    rep.ratio_B_max = std::max(rep.ratio_B_max, rb);
  }
  double hi = std::max({rep.ratio_A_max, rep.ratio_B_max, rep.ratio_C_max});
  double lo = std::min({rep.ratio_A_min, rep.ratio_B_min, rep.ratio_C_min});
  rep.k_emp = std::max(hi, 1.0 / std::max(lo, 1e-300));
  return rep;
}

DotResiduals lemma22_residual(const RadialState& st, double h_fd) {
  if (st.at_origin) throw DomainError("lemma22_residual: r > 0 required");
  DotResiduals out;
  out.step_warning = h_fd < 1e-7;
  int n = st.n;
  auto abc_at_rho = [n](double rho) {
    return radial_state(r_of_rho(rho, n), n);
  };
  RadialState p = abc_at_rho(st.rho + h_fd);
  RadialState q = abc_at_rho(st.rho - h_fd);
  double dA = (p.A - q.A) / (2 * h_fd);
  double dB = (p.B - q.B) / (2 * h_fd);
  double dC = (p.C - q.C) / (2 * h_fd);
  out.res_A = rel_residual(dA, st.Adot);
  out.res_B = rel_residual(dB, st.Bdot);
  out.res_C = rel_residual(dC, st.Cdot);
  return out;
}

RiemannTensor curvature(const RadialState& st) {
  if (st.at_origin) throw DomainError("curvature: r > 0 required");
  const int n = st.n, d = 2 * n;
  const double A = st.A, B = st.B, C = st.C;
  const double q = (n - 1) * (C * A + B * C) - 2 * A * B;
  std::vector<Seed> seeds;
  seeds.push_back({0, n, 0, n, (n - 1) * q});
  for (int j = 1; j < n; ++j) {
    seeds.push_back({0, j, 0, j, A * B + B * C - n * C * A});
    seeds.push_back({0, n + j, 0, n + j, A * B + C * A - n * B * C});
    seeds.push_back({0, n, n + j, j, q});
  }
  auto dlt = [](int x, int y) { return x == y ? 1.0 : 0.0; };
  for (int i = 1; i < n; ++i)
    for (int k = 1; k < n; ++k)
      for (int j = 1; j < n; ++j)
        for (int l = 1; l < n; ++l) {
          double mixed = -A * B * (dlt(i, j) * dlt(k, l) + dlt(i, l) * dlt(j, k)) +
                         (B * C + A * C) * dlt(i, k) * dlt(j, l);
          if (mixed != 0.0) seeds.push_back({i, n + k, j, n + l, mixed});
          double horiz = (A * B + B * C + C * A) * (dlt(i, j) * dlt(k, l) - dlt(i, l) * dlt(j, k));
          if (horiz != 0.0) seeds.push_back({i, k, j, l, horiz});
        }
  ComplexStructure J = ComplexStructure::pairs(n);
  RiemannTensor R = close_under_symmetries(d, seeds, &J);
  R.set_complex_structure(J);
  return R;
}

HessianPsi hessian_psi(const RadialState& st) {
  const int n = st.n;
  HessianPsi h;
  h.diag = Vec::Zero(2 * n);
  if (st.at_origin) {
    h.degenerate_limit = true;
    for (int j = 0; j < n; ++j) h.diag(n + j) = 2.0;
    return h;
  }
  h.diag(0) = -2.0 * st.rho * (n - 1) * st.C;
  for (int j = 1; j < n; ++j) h.diag(j) = -2.0 * st.rho * st.A;
  h.diag(n) = 2.0;
  for (int j = 1; j < n; ++j) h.diag(n + j) = -2.0 * st.rho * st.B;
  return h;
}

Mat spherical_gauge(const Vec& y) {
  const int n = static_cast<int>(y.size());
  double r = y.norm();
  if (r == 0.0) throw DomainError("spherical_gauge: y != 0 required");
  Vec w = y / r;
  Vec u = w;
  u(0) += 1.0;
  double uu = u.squaredNorm();
  Mat T;
  if (uu < 1e-28) {
    // antipodal point w = -e_1: any orthogonal completion will do
    T = Mat::Identity(n, n);
    T(0, 0) = -1.0;
    if (n > 1) T(1, 1) = -1.0;
    return T;
  }
  Mat H = 2.0 / uu * (u * u.transpose()) - Mat::Identity(n, n);
  Mat D = -Mat::Identity(n, n);
  D(0, 0) = 1.0;
  T = D * H;
  return T;
}

double grad_omega_norm(const RadialState& st, const Vec& X) {
  FormAccum acc;
  for (const Term1& t : grad_terms(st)) acc.add(t.coef * X(t.alpha), t.form);
  return acc.norm();
}

double omega_value(const RadialState& st, const TangentPlaneSplit& plane) {
  (void)st;
  std::vector<int> om(plane.frame.n);
  for (int i = 0; i < plane.frame.n; ++i) om[i] = i;
  return eval_wedge(om, plane.e);
}

double hess_omega_trace(const RadialState& st, const TangentPlaneSplit& plane) {
  double tr = 0.0;
  for (const Term2& t : hess_terms(st)) {
    double pair = 0.0;
    for (const Vec& ek : plane.e) pair += ek(t.alpha) * ek(t.beta);
    if (pair == 0.0) continue;
    tr += t.coef * pair * eval_wedge(t.form, plane.e);
  }
  return tr;
}

OmegaBoundSample omega_bound_sample(const RadialState& st, const TangentPlaneSplit& plane,
                                    const Vec& X) {
  OmegaBoundSample s;
  s.rho = st.rho;
  s.s_frak = plane.s_frak;
  double nx = X.norm();
  s.grad_ratio = grad_omega_norm(st, X) / std::max(st.rho * nx, 1e-300);
  s.trace = hess_omega_trace(st, plane);
  return s;
}

}  // namespace stenzel
}  // namespace hololab
