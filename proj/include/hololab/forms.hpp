#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "hololab/common.hpp"

namespace hololab {

// Evaluate the wedge word w^{i0} ^ w^{i1} ^ ... on frame-component vectors:
// det of the matrix M(r, c) = vecs[c][idx[r]].  Repeated indices give 0.
inline double eval_wedge(const std::vector<int>& idx, const std::vector<Vec>& vecs) {
  int k = static_cast<int>(idx.size());
  if (k == 0) return 1.0;
  Mat M(k, k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) M(r, c) = vecs[c](idx[r]);
  return M.determinant();
}

// Accumulates a real k-form as coefficients on the orthonormal basis words
// w^{i0<...<ik-1}; usable for metric norms because the basis is orthonormal.
class FormAccum {
 public:
  void add(double coef, std::vector<int> idx) {
    if (coef == 0.0) return;
    int sign = sort_sign(idx);
    if (sign == 0) return;
    coeffs_[idx] += sign * coef;
  }

  double norm() const {
    double s = 0.0;
    for (const auto& [k, v] : coeffs_) s += v * v;
    return std::sqrt(s);
  }

  // sorts in place; returns the parity sign, or 0 when an index repeats
  static int sort_sign(std::vector<int>& idx) {
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i)
      for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
        if (idx[j - 1] == idx[j]) return 0;
        std::swap(idx[j - 1], idx[j]);
        sign = -sign;
      }
    return sign;
  }

 private:
  std::map<std::vector<int>, double> coeffs_;
};

// One factor of a complex wedge word: xi^a or its conjugate.
struct CFactor {
  int a;       // complex frame index, 0-based
  bool conj;
};

// xi^a evaluated on a real-frame component vector under the convention
// xi^a = w^{2a} + i w^{2a+1}.
inline cplx xi_eval(int a, const Vec& v) { return cplx(v(2 * a), v(2 * a + 1)); }

inline cplx cfactor_eval(const CFactor& f, const Vec& v) {
  cplx z = xi_eval(f.a, v);
  return f.conj ? std::conj(z) : z;
}

inline cplx eval_cwedge(const std::vector<CFactor>& fac, const std::vector<Vec>& vecs) {
  int k = static_cast<int>(fac.size());
  if (k == 0) return 1.0;
  CMat M(k, k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) M(r, c) = cfactor_eval(fac[r], vecs[c]);
  return M.determinant();
}

// All increasing index tuples of length k out of {0..dim-1}; used to expand
// complex wedge words over the real orthonormal basis when taking norms.
inline std::vector<std::vector<int>> increasing_tuples(int dim, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  if (k > dim) return out;
  while (true) {
    out.push_back(cur);
    int pos = k - 1;
    while (pos >= 0 && cur[pos] == dim - k + pos) --pos;
    if (pos < 0) break;
    ++cur[pos];
    for (int i = pos + 1; i < k; ++i) cur[i] = cur[i - 1] + 1;
  }
  return out;
}

inline Vec basis_vec(int dim, int a) {
  Vec v = Vec::Zero(dim);
  v(a) = 1.0;
  return v;
}

}  // namespace hololab
