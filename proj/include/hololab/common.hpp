#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace hololab {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using cplx = std::complex<double>;

// thrown when an input violates an operation's domain
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// thrown when a numerical procedure fails (overflow, non-convergence, singular metric)
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// configuration / usage problems (CLI, config files)
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline double sqr(double x) { return x * x; }

// |lhs - rhs| normalized by max(1, |lhs|, |rhs|); identities at different
// magnitudes (e.g. B ~ -1/r near r = 0) are compared on a common scale.
inline double rel_residual(double lhs, double rhs) {
  double s = std::max({1.0, std::abs(lhs), std::abs(rhs)});
  return std::abs(lhs - rhs) / s;
}

// default tolerances: exact identities vs finite-difference cross-checks
constexpr double kTolAlgebraic = 1e-9;
constexpr double kTolFiniteDiff = 1e-5;

inline int hardware_threads() {
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

// honored by every parallel loop; results do not depend on the value
inline int max_threads() {
  if (const char* env = std::getenv("HOLONOMY_LAB_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return std::min(hardware_threads(), 8);
}

// Static partition of [0, count) over worker threads.  Each index is touched
// by exactly one worker, so writes to per-index slots are race free and the
// outcome is independent of the thread count.
inline void parallel_for(std::int64_t count, const std::function<void(std::int64_t)>& body) {
  int nt = std::min<std::int64_t>(max_threads(), std::max<std::int64_t>(count, 1));
  if (nt <= 1 || count < 64) {
    for (std::int64_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(nt);
  std::int64_t chunk = (count + nt - 1) / nt;
  for (int t = 0; t < nt; ++t) {
    std::int64_t lo = t * chunk, hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    workers.emplace_back([lo, hi, &body] {
      for (std::int64_t i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& w : workers) w.join();
}

// xorshift-based deterministic RNG used wherever tests need random samples;
// independent of libstdc++'s distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next_u64() {
    std::uint64_t x = state_;
    x ^= x << 13;
    x ^= x >> 7;
    x ^= x << 17;
    state_ = x;
    return x;
  }

  // uniform in [0, 1)
  double uniform() { return (next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // standard normal via Box-Muller
  double normal() {
    double u1 = std::max(uniform(), 1e-300);
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

  Vec normal_vec(int n) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v(i) = normal();
    return v;
  }

  Mat normal_mat(int r, int c) {
    Mat m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m(i, j) = normal();
    return m;
  }

 private:
  std::uint64_t state_;
};

}  // namespace hololab
