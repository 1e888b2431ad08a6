// Colored higher Lawrence representations in the code-sequence basis:
// index enumeration, generator actions, the colored product cL, and the
// n = 3 change of basis relating level two to the BKL matrices.
//
// Ring: Z[s_1^{+-1},...,s_n^{+-1},t^{+-1}] (uncolored: Z[s^{+-1},t^{+-1}]).
// Basis: E_{n,m} in descending lexicographic order, the unique order under
// which the generated n=3, m=2 matrices match the displayed L_1, L_2.
#pragma once

#include "braidrep/bkl.hpp"
#include "braidrep/fox.hpp"
#include "braidrep/qnum.hpp"

namespace braidrep {

inline VarSetPtr lawrence_ring(int n) { return indexed_varset_plus("s", n, "t"); }
inline VarSetPtr lawrence_uncolored_ring() { return make_varset({"s", "t"}); }

using CodeSequenceIndex = std::vector<int>;  // (k_1,...,k_{n-1}), sum = m

inline std::vector<CodeSequenceIndex> enumerate_code_sequences(int n, int m) {
  if (n < 2 || m < 0) throw std::invalid_argument("enumerate_code_sequences: bounds");
  std::vector<CodeSequenceIndex> out;
  CodeSequenceIndex cur(n - 1, 0);
  // Descending lexicographic: place the largest leading entries first.
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n - 2) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, m);
  return out;
}

inline int code_sequence_index(const std::vector<CodeSequenceIndex>& basis,
                               const CodeSequenceIndex& k) {
  for (size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == k) return static_cast<int>(i);
  throw std::logic_error("code_sequence_index: not a basis element");
}

// Matrix of sigma_i on the code-sequence basis of level m. `si` stands in for
// the action variable (s_i at the identity grading, s_{tau^{-1}(i)} on a
// permuted block, the over-strand color in cL); `t` is the configuration
// variable. Binomials and trinomials are taken in t^{-1}.
inline Mat lawrence_sigma_matrix(int n, int m, int i, const LaurentPoly& si,
                                 const LaurentPoly& t) {
  if (i < 1 || i > n - 1) throw std::invalid_argument("lawrence_sigma_matrix: bad index");
  auto basis = enumerate_code_sequences(n, m);
  const int d = static_cast<int>(basis.size());
  LaurentPoly tinv = t.unit_inverse();
  Mat out = mat_zero(d, d);
  for (int col = 0; col < d; ++col) {
    const auto& k = basis[col];
    int ki = k[i - 1];
    LaurentPoly common = LaurentPoly(ki % 2 == 0 ? 1 : -1) * pow(t, -ki * (ki - 1) / 2);
    if (i == 1) {
      int k2 = n >= 3 ? k[1] : 0;
      for (int l = 0; l <= k2; ++l) {
        LaurentPoly coeff =
            common * pow(si, ki + l) * t_binomial(ki + l, ki, tinv);
        CodeSequenceIndex target = k;
        target[0] = ki + l;
        if (n >= 3) target[1] = k2 - l;
        out(code_sequence_index(basis, target), col) += coeff;
      }
    } else if (i == n - 1) {
      int kprev = k[n - 3];
      LaurentPoly s_out = common * pow(si, ki);
      for (int l = 0; l <= kprev; ++l) {
        LaurentPoly coeff = s_out * t_binomial(ki + l, ki, tinv);
        CodeSequenceIndex target = k;
        target[n - 3] = kprev - l;
        target[n - 2] = ki + l;
        out(code_sequence_index(basis, target), col) += coeff;
      }
    } else {
      int kprev = k[i - 2], knext = k[i];
      for (int l1 = 0; l1 <= kprev; ++l1)
        for (int l2 = 0; l2 <= knext; ++l2) {
          LaurentPoly coeff = common * pow(si, ki + l2) *
                              t_trinomial(ki + l1 + l2, ki, l1, l2, tinv);
          CodeSequenceIndex target = k;
          target[i - 2] = kprev - l1;
          target[i - 1] = ki + l1 + l2;
          target[i] = knext - l2;
          out(code_sequence_index(basis, target), col) += coeff;
        }
    }
  }
  return out;
}

// Uncolored L_i(s, t) over Z[s^{+-1}, t^{+-1}].
inline Mat lawrence_uncolored(int n, int m, int i) {
  auto vs = lawrence_uncolored_ring();
  return lawrence_sigma_matrix(n, m, i, LaurentPoly::var(vs, "s"),
                               LaurentPoly::var(vs, "t"));
}

// cL(w) = product over crossings of L_{i_m}(s_{j_m}, t)^{e_m}, the variable
// indexed by the over strand.
// claw(w) * acc; see cbkl_apply.
inline Mat claw_apply(const BraidWord& w, int m, const VarSetPtr& vs,
                      OverConvention conv, Mat out) {
  const int n = w.n;
  LaurentPoly t = LaurentPoly::var(vs, n);
  auto labels = over_strand_labels(w, conv);
  std::vector<Mat> inv_cache(n);
  for (size_t kk = w.letters.size(); kk-- > 0;) {
    int i = w.letters[kk].index;
    LaurentPoly color = LaurentPoly::var(vs, labels[kk].over_strand - 1);
    Mat block;
    if (w.letters[kk].sign > 0) {
      block = lawrence_sigma_matrix(n, m, i, color, t);
    } else {
      if (inv_cache[i].rows() == 0)
        inv_cache[i] = mat_inverse_unit_det(
            lawrence_sigma_matrix(n, m, i, LaurentPoly::var(vs, 0), t));
      std::vector<LaurentPoly> images;
      for (int v = 0; v < n + 1; ++v) images.push_back(LaurentPoly::var(vs, v));
      images[0] = color;
      block = mat_substitute(inv_cache[i], vs, images);
    }
    out = block * out;
  }
  return out;
}

inline Mat claw(const BraidWord& w, int m, const VarSetPtr& vs,
                OverConvention conv = OverConvention::LowerSlot) {
  const int d = static_cast<int>(enumerate_code_sequences(w.n, m).size());
  return claw_apply(w, m, vs, conv, mat_identity(d));
}

inline Mat claw(const BraidWord& w, int m,
                OverConvention conv = OverConvention::LowerSlot) {
  return claw(w, m, lawrence_ring(w.n), conv);
}

// Induced graded action at level m: the block at tau carries sigma_i with
// variable s_{tau^{-1}(i)}, targeting (i,i+1) tau.
inline GradedMap induced_lawrence(const BraidWord& w, int m, const VarSetPtr& vs,
                                  const std::vector<Perm>& sources) {
  const int n = w.n;
  LaurentPoly t = LaurentPoly::var(vs, n);
  const int d = static_cast<int>(enumerate_code_sequences(n, m).size());
  return induced_rep(w, d, sources, [&](int i, int sign, const Perm& src) {
    Perm dst = compose(transposition(n, i), src);
    if (sign > 0) {
      LaurentPoly si = LaurentPoly::var(vs, src.inv_at1(i) - 1);
      return std::make_pair(dst, lawrence_sigma_matrix(n, m, i, si, t));
    }
    LaurentPoly si = LaurentPoly::var(vs, dst.inv_at1(i) - 1);
    return std::make_pair(dst,
                          mat_inverse_unit_det(lawrence_sigma_matrix(n, m, i, si, t)));
  });
}

inline GradedMap lawrence_generator_action(int n, int m, int i, const VarSetPtr& vs) {
  return induced_lawrence(BraidWord(n, {{i, 1}}), m, vs, all_perms(n));
}

// The displayed change of basis P for n = 3, m = 2.
inline Mat change_of_basis_p(const VarSetPtr& vs) {
  LaurentPoly u = LaurentPoly(1) + LaurentPoly::var(vs, "t");
  Mat p = mat_zero(3, 3);
  p(0, 0) = u;
  p(0, 1) = u;
  p(1, 1) = u;
  p(2, 1) = u;
  p(2, 2) = u;
  return p;
}

// Uncolored BKL_i(s, t^{-1}) expressed in the Lawrence ring {s, t}.
inline Mat bkl_in_lawrence_vars(int n, int i, const VarSetPtr& vs) {
  Mat b = bkl_uncolored(n, i);
  return mat_substitute(
      b, vs, {LaurentPoly::var(vs, "s"), LaurentPoly::var(vs, "t", -1)});
}

// P BKL_i(s, t^{-1}) = L_i(s, t) P, checked without inverting P (P is only
// invertible after localizing at 1 + t).
inline bool p_relation_holds(int i) {
  auto vs = lawrence_uncolored_ring();
  Mat p = change_of_basis_p(vs);
  Mat lhs = p * bkl_in_lawrence_vars(3, i, vs);
  Mat rhs = lawrence_uncolored(3, 2, i) * p;
  return mat_eq(lhs, rhs);
}

// Code-sequence coordinates of the standard fork F_{1,3} in B_3, m = 2:
// F(a,b) = (a)_t! (b)_t! U(a,b) and F_{1,3} = F(2,0) + (1+t) F(1,1) + F(0,2).
inline Vec fork13_in_code_sequences(const VarSetPtr& vs) {
  LaurentPoly t = LaurentPoly::var(vs, "t");
  Vec v(3);
  v(0) = t_factorial(2, t) * t_factorial(0, t);
  v(1) = t_factorial(1, t) * t_factorial(1, t) * (LaurentPoly(1) + t);
  v(2) = t_factorial(0, t) * t_factorial(2, t);
  return v;
}

// The dictionary relating level-one Lawrence matrices to reduced Burau:
// L_i^{m=1}(s) = D B_i(t -> s)^T D^{-1} with a diagonal monomial D. The
// transpose is the standard Burau antiautomorphism (our reduced Burau
// composes images along columns, the code-sequence action along rows); it is
// part of the recorded dictionary together with t -> s and the exponents.
struct M1BurauDictionary {
  bool transposed = false;
  std::vector<int> exponents;  // D = diag(s^{e_1},...,s^{e_{n-1}}), e_1 = 0
};

inline M1BurauDictionary m1_burau_dictionary(int n) {
  auto vs = lawrence_uncolored_ring();
  LaurentPoly s = LaurentPoly::var(vs, "s");
  const int d = n - 1;
  auto tv = make_varset({"t"});
  std::vector<Mat> lmats, bmats;
  for (int i = 1; i <= n - 1; ++i) {
    lmats.push_back(lawrence_uncolored(n, 1, i));
    bmats.push_back(
        mat_substitute(reduced_burau_matrix(BraidWord(n, {{i, 1}}), tv, 0), vs, {s}));
  }

  auto solve = [&](bool transposed) -> std::vector<int> {
    constexpr int kUnset = INT32_MIN;
    std::vector<int> expo(d, kUnset);
    expo[0] = 0;
    for (int pass = 0; pass < d; ++pass) {
      for (int i = 0; i < n - 1; ++i) {
        const Mat& l = lmats[i];
        Mat b = transposed ? Mat(bmats[i].transpose()) : bmats[i];
        for (int r = 0; r < d; ++r)
          for (int c = 0; c < d; ++c) {
            if (l(r, c).is_zero() != b(r, c).is_zero()) return {};
            if (l(r, c).is_zero()) continue;
            int found = kUnset;
            for (int dd = -2 * n; dd <= 2 * n; ++dd)
              if (l(r, c) == pow(s, dd) * b(r, c)) {
                found = dd;
                break;
              }
            if (found == kUnset) return {};
            if (expo[r] != kUnset && expo[c] == kUnset) expo[c] = expo[r] - found;
            if (expo[c] != kUnset && expo[r] == kUnset) expo[r] = expo[c] + found;
            if (expo[r] != kUnset && expo[c] != kUnset && expo[r] - expo[c] != found)
              return {};
          }
      }
    }
    for (int e : expo)
      if (e == kUnset) return {};
    // Verify the conjugation on every generator.
    for (int i = 0; i < n - 1; ++i) {
      const Mat& l = lmats[i];
      Mat b = transposed ? Mat(bmats[i].transpose()) : bmats[i];
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
          if (l(r, c) != pow(s, expo[r] - expo[c]) * b(r, c)) return {};
    }
    return expo;
  };

  for (bool transposed : {false, true}) {
    auto expo = solve(transposed);
    if (!expo.empty()) return {transposed, expo};
  }
  throw std::logic_error("m1_burau_dictionary: no dictionary found");
}

}  // namespace braidrep
