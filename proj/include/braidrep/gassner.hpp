// Burau blocks, the over-strand-colored Gassner map Gamma, and the induced
// Gassner representation on R[S_n] (x) R^n.
//
// Gamma multiplies one colored Burau block per crossing. Tracing strands from
// the right end of the word, the induced representation colors a positive
// sigma_i with the variable of the strand sitting at slot i+1 (the rule
// t_{tau^{-1}(i+1)} evaluated along the running grading); Gamma therefore
// uses the upper-slot crossing convention. The colored BKL and Lawrence
// products of the other modules use the lower-slot convention instead - the
// verification suites show each choice is forced by its module's identities.
#pragma once

#include "braidrep/graded.hpp"

namespace braidrep {

// U_{n,i}(x): identity with the 2x2 block [[1-x, 1], [x, 0]] at rows and
// columns i, i+1 (1-based).
inline Mat burau_block(int n, int i, const LaurentPoly& x) {
  if (i < 1 || i > n - 1) throw std::invalid_argument("burau_block: index out of range");
  Mat m = mat_identity(n);
  m(i - 1, i - 1) = LaurentPoly(1) - x;
  m(i - 1, i) = LaurentPoly(1);
  m(i, i - 1) = x;
  m(i, i) = LaurentPoly();
  return m;
}

inline Mat burau_block_inverse(int n, int i, const LaurentPoly& x) {
  LaurentPoly xinv = x.unit_inverse();
  Mat m = mat_identity(n);
  m(i - 1, i - 1) = LaurentPoly();
  m(i - 1, i) = xinv;
  m(i, i - 1) = LaurentPoly(1);
  m(i, i) = (x - LaurentPoly(1)) * xinv;
  return m;
}

// Morton's Gamma: the product of colored Burau blocks over the crossings,
// variables t_1..t_n indexed by the over strand.
// gamma(w) * acc; one colored block per crossing folded onto acc.
inline Mat gamma_apply(const BraidWord& w, const VarSetPtr& vs, OverConvention conv,
                       Mat m) {
  auto labels = over_strand_labels(w, conv);
  for (size_t k = w.letters.size(); k-- > 0;) {
    LaurentPoly x = LaurentPoly::var(vs, labels[k].over_strand - 1);
    Mat block = w.letters[k].sign > 0 ? burau_block(w.n, w.letters[k].index, x)
                                      : burau_block_inverse(w.n, w.letters[k].index, x);
    m = block * m;
  }
  return m;
}

inline Mat gamma_matrix(const BraidWord& w, const VarSetPtr& vs,
                        OverConvention conv = OverConvention::UpperSlot) {
  return gamma_apply(w, vs, conv, mat_identity(w.n));
}

inline Mat gamma_matrix(const BraidWord& w,
                        OverConvention conv = OverConvention::UpperSlot) {
  return gamma_matrix(w, indexed_varset("t", w.n), conv);
}

// Induced Gassner: sigma_i sends tau (x) v to (i,i+1)tau (x)
// U_{n,i}(t_{tau^{-1}(i+1)}) v, extended multiplicatively.
inline GradedMap induced_gassner(const BraidWord& w, const VarSetPtr& vs,
                                 const std::vector<Perm>& sources) {
  return induced_rep(w, w.n, sources, [&](int i, int sign, const Perm& src) {
    Perm dst = compose(transposition(w.n, i), src);
    if (sign > 0) {
      LaurentPoly x = LaurentPoly::var(vs, src.inv_at1(i + 1) - 1);
      return std::make_pair(dst, burau_block(w.n, i, x));
    }
    LaurentPoly x = LaurentPoly::var(vs, dst.inv_at1(i + 1) - 1);
    return std::make_pair(dst, burau_block_inverse(w.n, i, x));
  });
}

inline GradedMap induced_gassner(const BraidWord& w) {
  return induced_gassner(w, indexed_varset("t", w.n), all_perms(w.n));
}

}  // namespace braidrep
