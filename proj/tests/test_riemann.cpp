#include "doctest.h"
#include "hololab/riemann.hpp"

using namespace hololab;

TEST_CASE("round sphere symmetry check is clean") {
  RiemannTensor R = RiemannTensor::space_form(3, 1.0);
  auto rep = R.check_symmetries();
  CHECK(rep.worst() == 0.0);
}

TEST_CASE("round S^3 Ricci is 2 Id") {
  RiemannTensor R = RiemannTensor::space_form(3, 1.0);
  Mat ric = R.ricci();
  CHECK((ric - 2.0 * Mat::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("round S^n Ricci fixes the contraction sign: (n-1) Id") {
  for (int d : {2, 4, 5}) {
    Mat ric = RiemannTensor::space_form(d, 1.0).ricci();
    CHECK((ric - (d - 1.0) * Mat::Identity(d, d)).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("injected fault is reported at its size") {
  RiemannTensor R = RiemannTensor::space_form(4, 1.0);
  R.at(0, 1, 0, 1) += 1e-3;
  auto rep = R.check_symmetries();
  CHECK(rep.worst() == doctest::Approx(1e-3).epsilon(1e-9));
}

TEST_CASE("closure rebuilds a space form from one seed per plane") {
  int d = 3;
  std::vector<Seed> seeds;
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) seeds.push_back({a, b, a, b, 1.0});
  RiemannTensor R = close_under_symmetries(d, seeds);
  RiemannTensor E = RiemannTensor::space_form(d, 1.0);
  double diff = 0;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        for (int e = 0; e < d; ++e)
          diff = std::max(diff, std::abs(R.at(a, b, c, e) - E.at(a, b, c, e)));
  CHECK(diff < 1e-15);
}

TEST_CASE("inconsistent seeds throw") {
  std::vector<Seed> seeds = {{0, 1, 0, 1, 1.0}, {1, 0, 0, 1, 1.0}};
  CHECK_THROWS_AS(close_under_symmetries(2, seeds), NumericError);
}
