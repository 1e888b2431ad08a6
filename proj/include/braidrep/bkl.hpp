// Colored BKL representation: the Fox-calculus boundary data of the
// configuration-space presentation, the kernel basis v_{j,k}, the generator
// action on that basis, and the colored product cBKL.
//
// Ring: Z[q_1^{+-1},...,q_n^{+-1},t^{+-1}]; the uncolored versions live in
// Z[q^{+-1},t^{+-1}]. Colored products trace strands right to left and color
// each crossing by its over strand under the lower-slot convention; the
// mixed-variable braid relations hold for exactly that choice.
#pragma once

#include <functional>

#include "braidrep/graded.hpp"
#include "braidrep/varset.hpp"

namespace braidrep {

inline VarSetPtr bkl_ring(int n) { return indexed_varset_plus("q", n, "t"); }
inline VarSetPtr bkl_uncolored_ring() { return make_varset({"q", "t"}); }

// Column order of the relation set {r_{j,k} : 1 <= j <= k <= n}.
inline int rr_index(int n, int j, int k) {
  int idx = 0;
  for (int a = 1; a <= n; ++a)
    for (int b = a; b <= n; ++b) {
      if (a == j && b == k) return idx;
      ++idx;
    }
  throw std::invalid_argument("rr_index: bad pair");
}

// Basis order of {v_{j,k} : 1 <= j < k <= n}, lexicographic on (j,k).
inline int vv_index(int n, int j, int k) {
  int idx = 0;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      if (a == j && b == k) return idx;
      ++idx;
    }
  throw std::invalid_argument("vv_index: bad pair");
}

inline int bkl_dim(int n) { return n * (n - 1) / 2; }

// Boundary map C_2 -> C_1 of the Cayley complex presentation; rows are
// indexed by x_1..x_n, y (y last), columns by the r_{j,k}.
inline Mat boundary_matrix(int n, const VarSetPtr& vs) {
  if (n < 2) throw std::invalid_argument("boundary_matrix: need n >= 2");
  const LaurentPoly one(1);
  auto q = [&](int m) { return LaurentPoly::var(vs, m - 1); };
  LaurentPoly t = LaurentPoly::var(vs, n);
  Mat m = mat_zero(n + 1, n * (n + 1) / 2);
  for (int j = 1; j <= n; ++j)
    for (int k = j; k <= n; ++k) {
      int col = rr_index(n, j, k);
      if (j == k) {
        LaurentPoly f = q(j) * t + one;
        m(j - 1, col) = f * (one - t);
        m(n, col) = f * (q(j) - one);
      } else {
        m(j - 1, col) = one - q(k);
        m(k - 1, col) = t * (q(j) - one);
        m(n, col) = (one - q(k)) * (q(j) - one);
      }
    }
  return m;
}

inline Mat boundary_matrix(int n) { return boundary_matrix(n, bkl_ring(n)); }

// The rank-one kernel generator of the (f_{j,j}, f_{j,k}, f_{k,k}) block,
// written as a full column over the r_{j,k} ordering.
inline Vec kernel_vector(int n, int j, int k, const VarSetPtr& vs) {
  if (!(1 <= j && j < k && k <= n))
    throw std::invalid_argument("kernel_vector: need 1 <= j < k <= n");
  const LaurentPoly one(1);
  auto q = [&](int m) { return LaurentPoly::var(vs, m - 1); };
  LaurentPoly t = LaurentPoly::var(vs, n);
  Vec v(n * (n + 1) / 2);
  for (int i = 0; i < v.size(); ++i) v(i) = LaurentPoly();
  v(rr_index(n, j, j)) = -(one - q(k)) * (q(k) * t + one);
  v(rr_index(n, j, k)) = (one - t) * (q(k) * t + one) * (q(j) * t + one);
  v(rr_index(n, k, k)) = -t * (q(j) - one) * (q(j) * t + one);
  return v;
}

inline Vec kernel_vector(int n, int j, int k) {
  return kernel_vector(n, j, k, bkl_ring(n));
}

// Matrix of sigma_i on the v_{j,k} basis. `qi` is the polynomial standing in
// for the single variable of the action (q_i at the identity grading,
// q_{tau^{-1}(i)} on a permuted block, the over-strand color in cBKL) and
// `t` for the configuration variable.
inline Mat bkl_sigma_matrix(int n, int i, const LaurentPoly& qi, const LaurentPoly& t) {
  if (i < 1 || i > n - 1) throw std::invalid_argument("bkl_sigma_matrix: bad index");
  const LaurentPoly one(1);
  const int d = bkl_dim(n);
  Mat m = mat_zero(d, d);
  for (int j = 1; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k) {
      int col = vv_index(n, j, k);
      if (i == j && i == k - 1) {
        m(vv_index(n, j, k), col) = t * qi * qi;
      } else if (i == j - 1) {
        m(vv_index(n, i, k), col) = qi;
        m(vv_index(n, i, j), col) = qi * qi - qi;
        m(vv_index(n, j, k), col) = one - qi;
      } else if (i == j) {
        m(vv_index(n, j + 1, k), col) = one;
      } else if (i == k - 1) {
        m(vv_index(n, j, i), col) = qi;
        m(vv_index(n, j, k), col) = one - qi;
        m(vv_index(n, i, k), col) = (qi * qi - qi) * t;
      } else if (i == k) {
        m(vv_index(n, j, k + 1), col) = one;
      } else {
        m(vv_index(n, j, k), col) = one;
      }
    }
  return m;
}

// Uncolored BKL_i(q, t) over Z[q^{+-1}, t^{+-1}].
inline Mat bkl_uncolored(int n, int i) {
  auto vs = bkl_uncolored_ring();
  return bkl_sigma_matrix(n, i, LaurentPoly::var(vs, "q"), LaurentPoly::var(vs, "t"));
}

// cBKL(w) = product over crossings of BKL_{i_m}(q_{j_m}, t)^{s_m}, the
// variable indexed by the over strand.
// cbkl(w) * acc, folding one colored block per crossing onto acc. Used both
// for plain matrices (acc = identity) and to build word products against an
// already-computed factor without a dense-by-dense multiplication.
inline Mat cbkl_apply(const BraidWord& w, const VarSetPtr& vs, OverConvention conv,
                      Mat m) {
  const int n = w.n;
  LaurentPoly t = LaurentPoly::var(vs, n);
  auto labels = over_strand_labels(w, conv);
  // One inverse per generator index, computed in the colored ring with a
  // placeholder color and recolored per crossing.
  std::vector<Mat> inv_cache(n);
  for (size_t k = w.letters.size(); k-- > 0;) {
    int i = w.letters[k].index;
    LaurentPoly color = LaurentPoly::var(vs, labels[k].over_strand - 1);
    Mat block;
    if (w.letters[k].sign > 0) {
      block = bkl_sigma_matrix(n, i, color, t);
    } else {
      if (inv_cache[i].rows() == 0)
        inv_cache[i] = mat_inverse_unit_det(
            bkl_sigma_matrix(n, i, LaurentPoly::var(vs, 0), t));
      // Recolor q_1 -> color; q_1 only occurs as the action variable.
      std::vector<LaurentPoly> images;
      for (int v = 0; v < n + 1; ++v) images.push_back(LaurentPoly::var(vs, v));
      images[0] = color;
      block = mat_substitute(inv_cache[i], vs, images);
    }
    m = block * m;
  }
  return m;
}

inline Mat cbkl(const BraidWord& w, const VarSetPtr& vs,
                OverConvention conv = OverConvention::LowerSlot) {
  return cbkl_apply(w, vs, conv, mat_identity(bkl_dim(w.n)));
}

inline Mat cbkl(const BraidWord& w, OverConvention conv = OverConvention::LowerSlot) {
  return cbkl(w, bkl_ring(w.n), conv);
}

// Induced graded action: the block at tau carries the sigma_i matrix with
// variable q_{tau^{-1}(i)}, targeting (i,i+1) tau.
inline GradedMap induced_bkl(const BraidWord& w, const VarSetPtr& vs,
                             const std::vector<Perm>& sources) {
  const int n = w.n;
  LaurentPoly t = LaurentPoly::var(vs, n);
  return induced_rep(w, bkl_dim(n), sources, [&](int i, int sign, const Perm& src) {
    Perm dst = compose(transposition(n, i), src);
    if (sign > 0) {
      LaurentPoly qi = LaurentPoly::var(vs, src.inv_at1(i) - 1);
      return std::make_pair(dst, bkl_sigma_matrix(n, i, qi, t));
    }
    LaurentPoly qi = LaurentPoly::var(vs, dst.inv_at1(i) - 1);
    return std::make_pair(dst, mat_inverse_unit_det(bkl_sigma_matrix(n, i, qi, t)));
  });
}

inline GradedMap bkl_generator_action(int n, int i, const VarSetPtr& vs) {
  return induced_bkl(BraidWord(n, {{i, 1}}), vs, all_perms(n));
}

inline GradedMap bkl_generator_action(int n, int i) {
  return bkl_generator_action(n, i, bkl_ring(n));
}

}  // namespace braidrep
