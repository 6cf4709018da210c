#include <cmath>

#include "doctest.h"
#include "hololab/forms.hpp"
#include "hololab/plane.hpp"

using namespace hololab;

TEST_CASE("horizontal plane splits with all angles zero") {
  FrameIndexSet f(3, 3);
  auto basis = graph_plane(f, Mat::Zero(3, 3));
  auto sp = split_plane(basis, f);
  CHECK(sp.s_frak == 0.0);
  CHECK(sp.omega == doctest::Approx(1.0));
  for (double th : sp.theta) CHECK(th == 0.0);
}

TEST_CASE("single matrix-unit graph gives theta_1 = arctan(lambda)") {
  // oracle: a 2x2 rotation in the (u_1, v_1) plane reproduces the split
  FrameIndexSet f(2, 2);
  double lam = 0.7;
  Mat tilt = Mat::Zero(2, 2);
  tilt(0, 0) = lam;
  auto sp = split_plane(graph_plane(f, tilt), f);
  CHECK(sp.theta[0] == doctest::Approx(std::atan(lam)).epsilon(1e-12));
  CHECK(sp.theta[1] == doctest::Approx(0.0).scale(1).epsilon(1e-12));
  CHECK(sp.omega == doctest::Approx(std::cos(std::atan(lam))).epsilon(1e-12));
}

TEST_CASE("split reconstructs the plane and is deterministic") {
  Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    FrameIndexSet f(3, 4);
    auto basis = random_plane(f, rng);
    double om = omega_of_basis(f, basis);
    if (om <= 1e-6) continue;
    auto sp = split_plane(basis, f);
    CHECK(max_principal_angle(basis, sp.e) < 1e-10);
    CHECK(sp.omega == doctest::Approx(om).epsilon(1e-10));
    // bitwise determinism
    auto sp2 = split_plane(basis, f);
    for (int j = 0; j < f.n; ++j) CHECK(sp.theta[j] == sp2.theta[j]);
    for (int j = 0; j < f.n; ++j) CHECK((sp.e[j] - sp2.e[j]).norm() == 0.0);
  }
}

TEST_CASE("angles sorted by |sin theta| descending") {
  FrameIndexSet f(3, 3);
  Mat tilt = Mat::Zero(3, 3);
  tilt(0, 0) = 0.2;
  tilt(1, 1) = 0.9;
  tilt(2, 2) = 0.5;
  auto sp = split_plane(graph_plane(f, tilt), f);
  CHECK(sp.theta[0] == doctest::Approx(std::atan(0.9)));
  CHECK(sp.theta[1] == doctest::Approx(std::atan(0.5)));
  CHECK(sp.theta[2] == doctest::Approx(std::atan(0.2)));
}

TEST_CASE("vertical plane is rejected") {
  FrameIndexSet f(2, 2);
  std::vector<Vec> basis = {basis_vec(4, 2), basis_vec(4, 3)};
  CHECK_THROWS_AS(split_plane(basis, f), DomainError);
}

TEST_CASE("rank-deficient frames: zero padding for n > m and m > n") {
  FrameIndexSet wide(4, 3);  // v_4 is the explicit zero vector
  auto sp = split_plane(graph_plane(wide, 0.3 * Mat::Ones(3, 4)), wide);
  CHECK(sp.v_is_zero.size() == 4);
  CHECK(sp.v_is_zero[3] == 1);
  CHECK(sp.theta[3] == 0.0);

  FrameIndexSet tall(3, 4);  // e_{n+4} = v_4
  auto sp2 = split_plane(graph_plane(tall, 0.3 * Mat::Ones(4, 3)), tall);
  CHECK((sp2.e_perp[3] - sp2.v[3]).norm() < 1e-14);
}

TEST_CASE("linear estimate suite bounds hold on random planes") {
  Rng rng(99);
  for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 2}, {3, 3}, {3, 4}, {4, 3}}) {
    FrameIndexSet f(n, m);
    int done = 0;
    while (done < 30) {
      Mat tilt = 0.4 * rng.normal_mat(m, n);
      auto sp = split_plane(graph_plane(f, tilt), f);
      for (const auto& chk : linear_estimate_suite(sp)) CHECK(chk.ok);
      ++done;
    }
  }
}

TEST_CASE("mixed pairings vanish when s = 0") {
  FrameIndexSet f(3, 3);
  auto sp = split_plane(graph_plane(f, Mat::Zero(3, 3)), f);
  auto checks = linear_estimate_suite(sp);
  // every bound with an s factor has lhs 0
  for (const auto& c : checks)
    if (c.bound == 0.0) CHECK(c.lhs_max < 1e-14);
}

TEST_CASE("exhaustive n=2 check of |Omega(e_perp, e-hat)| <= s") {
  Rng rng(5);
  FrameIndexSet f(2, 2);
  std::vector<int> om = {0, 1};
  for (int t = 0; t < 200; ++t) {
    Mat tilt = rng.normal_mat(2, 2);
    auto sp = split_plane(graph_plane(f, tilt), f);
    for (int mu = 0; mu < 2; ++mu)
      for (int i = 0; i < 2; ++i) {
        std::vector<Vec> args;
        args.push_back(sp.e_perp[mu]);
        for (int k = 0; k < 2; ++k)
          if (k != i) args.push_back(sp.e[k]);
        CHECK(std::abs(eval_wedge(om, args)) <= sp.s_frak + 1e-12);
      }
  }
}

TEST_CASE("comass sampling") {
  Rng rng(2024);
  for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 2}, {3, 4}}) {
    auto rep = comass_sample(FrameIndexSet(n, m), 2000, 2000, rng);
    CHECK(rep.max_omega <= 1.0 + 1e-12);
    // sharp consequence of prod cos > 1 - eps is s <= 2 sqrt(eps)
    CHECK(rep.worst_near_one < 2e-6);
    CHECK(rep.two_sqrt_eps_ok);
  }
}
