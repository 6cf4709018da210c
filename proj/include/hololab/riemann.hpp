#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hololab/common.hpp"

namespace hololab {

// Frame label bookkeeping for a rank-m bundle over an n-dimensional base:
// indices 0..n-1 are horizontal codirections, n..n+m-1 vertical.
struct FrameIndexSet {
  int n = 0;  // base dimension
  int m = 0;  // fiber rank

  FrameIndexSet(int n_, int m_) : n(n_), m(m_) {
    if (n < 1 || m < 1) throw DomainError("FrameIndexSet: n >= 1 and m >= 1 required");
  }
  int dim() const { return n + m; }
  bool horizontal(int a) const { return a < n; }
};

// Action of a complex structure on frame indices: e_a -> sign[a] * e_[perm[a]].
struct ComplexStructure {
  std::vector<int> perm;
  std::vector<double> sign;

  // Kaehler pairing e_mu -> e_{n+mu}, e_{n+mu} -> -e_mu (half = n)
  static ComplexStructure pairs(int half);
  // e_{2k} -> e_{2k+1}, e_{2k+1} -> -e_{2k} (adjacent real/imaginary pairs)
  static ComplexStructure interleaved(int dim);
};

struct SymmetryReport {
  double antisym_last = 0.0;   // R(a,b,c,d) + R(a,b,d,c)
  double antisym_first = 0.0;  // R(a,b,c,d) + R(b,a,c,d)
  double pair = 0.0;           // R(a,b,c,d) - R(c,d,a,b)
  double bianchi = 0.0;        // cyclic sum over the last three slots
  std::optional<double> j_invariance;  // R(a,b,c,d) - R(a,b,Jc,Jd)

  double worst() const;
  std::string to_string() const;
};

// Dense 4-index curvature table in an orthonormal frame, convention fixed by
// requiring R(e_a,e_b,e_a,e_b) = +1 on the unit round sphere.
class RiemannTensor {
 public:
  explicit RiemannTensor(int dim);

  int dim() const { return dim_; }
  double& at(int a, int b, int c, int d) { return v_[idx(a, b, c, d)]; }
  double at(int a, int b, int c, int d) const { return v_[idx(a, b, c, d)]; }

  double max_abs() const;

  // Ric(a,b) = sum_k R(a,k,b,k); gives (d-1)*Id on the unit round sphere.
  Mat ricci() const;

  SymmetryReport check_symmetries(const ComplexStructure* J = nullptr) const;

  // constant sectional curvature kappa in dimension d
  static RiemannTensor space_form(int d, double kappa);

  void set_complex_structure(ComplexStructure J) { J_ = std::move(J); }
  const std::optional<ComplexStructure>& complex_structure() const { return J_; }

 private:
  std::size_t idx(int a, int b, int c, int d) const {
    return ((static_cast<std::size_t>(a) * dim_ + b) * dim_ + c) * dim_ + d;
  }
  int dim_;
  std::vector<double> v_;
  std::optional<ComplexStructure> J_;
};

struct Seed {
  int a, b, c, d;
  double value;
};

// Expands an inequivalent-component list to the full table by closing under
// the slot antisymmetries, pair symmetry and (when given) J-invariance.
// Unreached components stay zero.  A seed set that is inconsistent under the
// closure group throws.
RiemannTensor close_under_symmetries(int dim, const std::vector<Seed>& seeds,
                                     const ComplexStructure* J = nullptr);

}  // namespace hololab
