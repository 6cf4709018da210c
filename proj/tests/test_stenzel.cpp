#include <cmath>

#include "doctest.h"
#include "hololab/plane.hpp"
#include "hololab/stenzel.hpp"

using namespace hololab;
namespace sz = hololab::stenzel;

TEST_CASE("h' boundary and closed-form values") {
  CHECK(sz::hprime(0.0, 2).hp == 0.0);
  // n = 2: (h')^2 = 16 sinh(r)^2
  auto h = sz::hprime(1.0, 2);
  CHECK(h.hp == doctest::Approx(4 * std::sinh(1.0)).epsilon(1e-12));
  CHECK(h.hpp == doctest::Approx(4 * std::cosh(1.0)).epsilon(1e-12));
  CHECK(h.hppp == doctest::Approx(4 * std::sinh(1.0)).epsilon(1e-10));
  CHECK_THROWS_AS(sz::hprime(-0.1, 2), DomainError);
  CHECK_THROWS_AS(sz::hprime(301.0, 2), NumericError);
}

TEST_CASE("h' small-r expansion") {
  for (int n : {2, 3, 5}) {
    double r = 1e-2;
    double expect = 4 * r * (1 + 2.0 * (n - 1) / (3.0 * (n + 2)) * r * r);
    CHECK(sz::hprime(r, n).hp == doctest::Approx(expect).epsilon(1e-8));
  }
}

TEST_CASE("radial state limits near the origin") {
  for (int n : {2, 3, 4}) {
    auto st = sz::radial_state(1e-5, n);
    CHECK(st.a == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(st.c == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(st.b / st.r == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(st.A == doctest::Approx(-double(n) / (n + 2) * st.r).epsilon(1e-4));
    CHECK(st.C == doctest::Approx(-2.0 / (n + 2) * st.r).epsilon(1e-4));
    CHECK(st.B * st.r == doctest::Approx(-1.0).epsilon(1e-6));
  }
  auto origin = sz::radial_state(0.0, 3);
  CHECK(origin.at_origin);
  CHECK(origin.a == 1.0);
  CHECK(origin.b == 0.0);
}

TEST_CASE("cancellation-safe A and C agree with the direct quotients") {
  for (double r : {0.05, 0.5, 1.5}) {
    auto st = sz::radial_state(r, 3);
    double direct_A = -(st.hpp / st.hp - 2.0 / std::sinh(2 * r)) / std::sqrt(st.hpp);
    double direct_C = -st.hppp / ((3 - 1) * st.hpp * std::sqrt(st.hpp));
    CHECK(st.A == doctest::Approx(direct_A).epsilon(1e-9));
    CHECK(st.C == doctest::Approx(direct_C).epsilon(1e-9));
  }
}

TEST_CASE("first-order system and sum relations on a log grid") {
  for (int n : {2, 3, 4}) {
    for (double lg = -4; lg <= 0.47; lg += 0.35) {
      double r = std::pow(10.0, lg);
      auto res = sz::system_residuals(sz::radial_state(r, n));
      CHECK(res.max() < 1e-10);
    }
  }
}

TEST_CASE("rho inversion round-trips") {
  for (int n : {2, 4}) {
    for (double r : {0.01, 0.4, 2.0}) {
      double rho = sz::rho_of_r(r, n);
      CHECK(sz::r_of_rho(rho, n) == doctest::Approx(r).epsilon(1e-11));
    }
  }
}

TEST_CASE("lemma 2.1 sweep: negativity, bounded band, limits") {
  for (int n : {2, 3}) {
    std::vector<double> grid;
    for (double lg = -3; lg < 0; lg += 0.1) grid.push_back(std::pow(10.0, lg));
    auto rep = sz::lemma21_sweep(n, grid);
    CHECK(rep.all_negative);
    CHECK(rep.k_emp < 50.0);
    // rho -> 0 limits with the smallest grid point at rho = 1e-3
    auto st = sz::radial_state(sz::r_of_rho(1e-3, n), n);
    CHECK(std::abs(st.A) / 1e-3 == doctest::Approx(double(n) / (n + 2)).epsilon(0.01));
    CHECK(std::abs(st.C) / 1e-3 == doctest::Approx(2.0 / (n + 2)).epsilon(0.01));
    CHECK(std::abs(st.B) * 1e-3 == doctest::Approx(1.0).epsilon(0.01));
  }
}

TEST_CASE("lemma 2.2: quadratic expressions match FD derivatives") {
  auto r1 = sz::lemma22_residual(sz::radial_state(0.7, 2), 1e-4);
  CHECK(r1.res_A < 1e-6);
  CHECK(r1.res_B < 1e-6);
  CHECK(r1.res_C < 1e-6);
  auto r2 = sz::lemma22_residual(sz::radial_state(1.5, 4), 1e-4);
  CHECK(r2.res_A < 1e-6);
  CHECK(r2.res_B < 1e-6);
  CHECK(r2.res_C < 1e-6);
  CHECK(sz::lemma22_residual(sz::radial_state(0.5, 2), 1e-8).step_warning);
}

TEST_CASE("lemma 2.2 rho -> 0 limit of both routes") {
  // dA/drho -> -n/(n+2) and -nBC + A(A+B+C) -> same
  int n = 3;
  auto st = sz::radial_state(1e-3, n);
  CHECK(st.Adot == doctest::Approx(-double(n) / (n + 2)).epsilon(0.01));
}

TEST_CASE("curvature table is Ricci flat and symmetric") {
  for (int n : {2, 3, 4}) {
    for (double r : {0.3, 0.8, 1.6}) {
      auto R = sz::curvature(sz::radial_state(r, n));
      CHECK(R.ricci().cwiseAbs().maxCoeff() < 1e-8);
      auto rep = R.check_symmetries();
      CHECK(rep.worst() < 1e-9);
      CHECK(rep.j_invariance.has_value());
    }
  }
}

TEST_CASE("curvature r -> 0: R_{1j1j} -> 1") {
  for (int n : {2, 3}) {
    auto R = sz::curvature(sz::radial_state(1e-4, n));
    CHECK(R.at(0, 1, 0, 1) == doctest::Approx(1.0).epsilon(1e-3));
  }
}

TEST_CASE("mixed horizontal-vertical curvature components vanish") {
  auto R = sz::curvature(sz::radial_state(0.9, 3));
  int n = 3;
  double worst = 0;
  for (int mu = 0; mu < n; ++mu)
    for (int nu = 0; nu < n; ++nu)
      for (int de = 0; de < n; ++de)
        for (int ep = 0; ep < n; ++ep) {
          worst = std::max(worst, std::abs(R.at(mu, n + nu, n + de, n + ep)));
          worst = std::max(worst, std::abs(R.at(n + mu, nu, de, ep)));
        }
  CHECK(worst == 0.0);
}

TEST_CASE("hessian of psi") {
  for (int n : {2, 3, 4}) {
    for (double r = 0.02; r <= 2.0; r += 0.2) {
      auto h = sz::hessian_psi(sz::radial_state(r, n));
      CHECK(h.diag(n) == 2.0);
      CHECK(h.diag.minCoeff() > 0.0);
    }
  }
  // vertical entries approach 2 as rho -> 0
  auto h0 = sz::hessian_psi(sz::radial_state(1e-5, 3));
  CHECK(h0.diag(4) == doctest::Approx(2.0).epsilon(1e-4));
  auto hl = sz::hessian_psi(sz::radial_state(0.0, 3));
  CHECK(hl.degenerate_limit);
  CHECK(hl.diag(0) == 0.0);
  CHECK(hl.diag(3) == 2.0);
}

TEST_CASE("spherical gauge") {
  Vec y(3);
  y << 0.7, 0, 0;
  CHECK((sz::spherical_gauge(y) - Mat::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-15);
  Rng rng(7);
  for (int t = 0; t < 40; ++t) {
    Vec v = rng.normal_vec(4);
    Mat T = sz::spherical_gauge(v);
    CHECK((T * T.transpose() - Mat::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((T.row(0).transpose() - v / v.norm()).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(T.determinant() == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(sz::spherical_gauge(Vec::Zero(3)), DomainError);
  // antipodal direction still yields an orthogonal frame
  Vec anti(3);
  anti << -1, 0, 0;
  Mat T = sz::spherical_gauge(anti);
  CHECK((T * T.transpose() - Mat::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(T(0, 0) == doctest::Approx(-1.0));
}

TEST_CASE("grad Omega: structural zeros") {
  int n = 3;
  auto st = sz::radial_state(0.5, n);
  // X along the radial vertical direction never enters the slots
  Vec X = Vec::Zero(2 * n);
  X(n) = 1.0;
  CHECK(sz::grad_omega_norm(st, X) == 0.0);
  // at rho ~ 0 the coefficients A and C vanish
  auto st0 = sz::radial_state(1e-6, n);
  Vec Y = Vec::Ones(2 * n);
  CHECK(sz::grad_omega_norm(st0, Y) < 1e-5);
}

TEST_CASE("grad Omega bound |nabla_X Omega| <= K rho |X| on random data") {
  Rng rng(31);
  int n = 3;
  FrameIndexSet f(n, n);
  double worst = 0;
  for (int t = 0; t < 300; ++t) {
    double r = rng.uniform(0.02, 0.8);
    auto st = sz::radial_state(r, n);
    if (st.rho >= 1.0) continue;
    Vec X = rng.normal_vec(2 * n);
    worst = std::max(worst, sz::grad_omega_norm(st, X) / (st.rho * X.norm()));
  }
  CHECK(worst > 0.1);   // nontrivial
  CHECK(worst < 20.0);  // bounded band, single constant exists
}

TEST_CASE("hess Omega trace: horizontal plane is strictly negative") {
  int n = 3;
  FrameIndexSet f(n, n);
  auto sp = split_plane(graph_plane(f, Mat::Zero(n, n)), f);
  for (double r : {0.1, 0.4, 0.8}) {
    auto st = sz::radial_state(r, n);
    double tr = sz::hess_omega_trace(st, sp);
    CHECK(tr < 0.0);
    // dominated by the Omega-direction coefficient
    double omega_dir = -((n * n - 2 * n + 2) * st.C * st.C + 2 * (n - 1) * st.A * st.A);
    CHECK(tr == doctest::Approx(omega_dir).epsilon(1e-9));
  }
}

TEST_CASE("hess Omega trace: small rho bounded by K s^2") {
  Rng rng(13);
  int n = 3;
  FrameIndexSet f(n, n);
  auto st = sz::radial_state(0.01, n);
  for (int t = 0; t < 100; ++t) {
    Mat tilt = 0.3 * rng.normal_mat(n, n);
    auto sp = split_plane(graph_plane(f, tilt), f);
    double tr = sz::hess_omega_trace(st, sp);
    CHECK(std::abs(tr) < 50.0 * sp.s_frak * sp.s_frak + 1e-3);
  }
}
