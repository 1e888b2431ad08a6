// Truncated Verma modules for the half-integral quantum sl2, the weight-one
// R-matrix, the Quant_n action on the subweight-1 space, the diagonal map Phi
// and the conjugation check against the induced Gassner representation.
//
// The generator action on tau (x) f_i follows the displayed corollary with a
// configurable off-diagonal sign; the corollary's printed sign and the sign
// used in the conjugation theorem's proof disagree, and the conjugation check
// is the instrument that pins the working one (+1).
#pragma once

#include "braidrep/gassner.hpp"
#include "braidrep/qnum.hpp"

namespace braidrep {

inline VarSetPtr verma_ring() { return make_varset({"q", "s"}); }
inline VarSetPtr quant_ring(int n) { return indexed_varset("s", n); }

// Verma module over Z[q^{+-1}, s^{+-1}] truncated at basis index `cutoff`.
struct VermaTrunc {
  int cutoff = 2;
  VarSetPtr ring = verma_ring();

  LaurentPoly q(int e = 1) const { return LaurentPoly::var(ring, "q", e); }
  LaurentPoly s(int e = 1) const { return LaurentPoly::var(ring, "s", e); }

  // K v_j = s q^{-2j} v_j.
  Vec K_action(int j) const {
    Vec v = basis_zero();
    check_index(j);
    v(j) = s() * q(-2 * j);
    return v;
  }

  // E v_j = v_{j-1}, with E v_0 = 0.
  Vec E_action(int j) const {
    Vec v = basis_zero();
    check_index(j);
    if (j > 0) v(j - 1) = LaurentPoly(1);
    return v;
  }

  // F^{(k)} v_j = qbinom(k+j, j)_q prod_{l=0}^{k-1} (s q^{-l-j} - s^{-1} q^{j+l}) v_{j+k}.
  Vec F_action(int k, int j) const {
    check_index(j);
    if (k < 0) throw std::invalid_argument("VermaTrunc: need k >= 0");
    if (j + k > cutoff)
      throw std::out_of_range("VermaTrunc: F^{(k)} image beyond the cutoff");
    Vec v = basis_zero();
    LaurentPoly coeff = q_binomial(k + j, j, ring, 0);
    for (int l = 0; l < k; ++l)
      coeff = coeff * (s() * q(-l - j) - s(-1) * q(j + l));
    v(j + k) = coeff;
    return v;
  }

private:
  Vec basis_zero() const {
    Vec v(cutoff + 1);
    for (int i = 0; i <= cutoff; ++i) v(i) = LaurentPoly();
    return v;
  }
  void check_index(int j) const {
    if (j < 0 || j > cutoff) throw std::out_of_range("VermaTrunc: index beyond cutoff");
  }
};

// Braiding on the weight <= 1 part of V^{s_1} (x) V^{s_2}, basis
// (v_0 (x) v_0, v_1 (x) v_0, v_0 (x) v_1):
//   v_0 v_0 -> v_0 v_0
//   v_1 v_0 -> s_1 v_0 v_1 + (s_2^2 - 1) v_1 v_0
//   v_0 v_1 -> s_2 v_1 v_0
inline Mat r_matrix_weight1(const VarSetPtr& vs, int s1_index, int s2_index) {
  LaurentPoly s1 = LaurentPoly::var(vs, s1_index);
  LaurentPoly s2 = LaurentPoly::var(vs, s2_index);
  Mat m = mat_zero(3, 3);
  m(0, 0) = LaurentPoly(1);
  m(1, 1) = s2 * s2 - LaurentPoly(1);
  m(2, 1) = s1;
  m(1, 2) = s2;
  return m;
}

inline Mat r_matrix_weight1() {
  auto vs = indexed_varset("s", 2);
  return r_matrix_weight1(vs, 0, 1);
}

// Quant_n(sigma_k) out of the block at tau, on the basis f_1..f_n:
//   f_k     -> (1 - s_a^2) f_k + sign s_b f_{k+1}
//   f_{k+1} -> sign s_a f_k
//   f_i     -> f_i otherwise,
// with a = tau^{-1}(k), b = tau^{-1}(k+1), targeting (k,k+1) tau.
inline Mat quant_sigma_block(int n, int k, int sign_choice, const VarSetPtr& vs,
                             const Perm& tau) {
  LaurentPoly sa = LaurentPoly::var(vs, tau.inv_at1(k) - 1);
  LaurentPoly sb = LaurentPoly::var(vs, tau.inv_at1(k + 1) - 1);
  LaurentPoly sgn(sign_choice);
  Mat m = mat_identity(n);
  m(k - 1, k - 1) = LaurentPoly(1) - sa * sa;
  m(k, k - 1) = sgn * sb;
  m(k - 1, k) = sgn * sa;
  m(k, k) = LaurentPoly();
  return m;
}

inline GradedMap quant(const BraidWord& w, int sign_choice, const VarSetPtr& vs,
                       const std::vector<Perm>& sources) {
  if (sign_choice != 1 && sign_choice != -1)
    throw std::invalid_argument("quant: sign_choice must be +-1");
  const int n = w.n;
  return induced_rep(w, n, sources, [&](int k, int sign, const Perm& src) {
    Perm dst = compose(transposition(n, k), src);
    if (sign > 0)
      return std::make_pair(dst, quant_sigma_block(n, k, sign_choice, vs, src));
    // Inverse of the positive block out of dst.
    LaurentPoly sa = LaurentPoly::var(vs, dst.inv_at1(k) - 1);
    LaurentPoly sb = LaurentPoly::var(vs, dst.inv_at1(k + 1) - 1);
    LaurentPoly sgn(sign_choice);
    Mat m = mat_identity(n);
    m(k - 1, k - 1) = LaurentPoly();
    m(k - 1, k) = sgn * sb.unit_inverse();
    m(k, k - 1) = sgn * sa.unit_inverse();
    m(k, k) = -(LaurentPoly(1) - sa * sa) * sa.unit_inverse() * sb.unit_inverse();
    return std::make_pair(dst, m);
  });
}

// Pinned by the conjugation check (AC-3): the theorem-proof sign.
inline constexpr int kQuantSign = 1;

inline GradedMap quant(const BraidWord& w, int sign_choice = kQuantSign) {
  return quant(w, sign_choice, quant_ring(w.n), all_perms(w.n));
}

// Phi: tau (x) f_i -> (1 - s_{tau^{-1}(i)}^2) / (prod_{j=i}^n s_{tau^{-1}(j)})
// tau (x) g_i, diagonal on every block.
inline GradedMap phi(int n, const VarSetPtr& vs) {
  GradedMap g;
  g.n = n;
  g.dim = n;
  for (const auto& tau : all_perms(n)) {
    Mat m = mat_zero(n, n);
    for (int i = 1; i <= n; ++i) {
      LaurentPoly si = LaurentPoly::var(vs, tau.inv_at1(i) - 1);
      LaurentPoly denom(1);
      for (int j = i; j <= n; ++j)
        denom = denom * LaurentPoly::var(vs, tau.inv_at1(j) - 1);
      m(i - 1, i - 1) = (LaurentPoly(1) - si * si) * denom.unit_inverse();
    }
    g.blocks[tau] = {tau, std::move(m)};
  }
  return g;
}

inline GradedMap phi(int n) { return phi(n, quant_ring(n)); }

// Residual Gassner_n(w) o Phi - Phi o Quant_n(w) with t_i = s_i^2; zero iff
// the conjugation theorem holds for w under sign_choice.
inline GradedMap check_conjugation(const BraidWord& w, int sign_choice = kQuantSign) {
  const int n = w.n;
  auto svs = quant_ring(n);
  auto tvs = indexed_varset("t", n);
  std::vector<LaurentPoly> t_to_s2;
  for (int i = 0; i < n; ++i) t_to_s2.push_back(LaurentPoly::var(svs, i, 2));
  GradedMap gass = graded_map_entries(
      induced_gassner(w, tvs, all_perms(n)),
      [&](const LaurentPoly& p) { return p.substitute(svs, t_to_s2); });
  GradedMap ph = phi(n, svs);
  GradedMap qu = quant(w, sign_choice, svs, all_perms(n));
  return graded_sub(compose(gass, ph), compose(ph, qu));
}

}  // namespace braidrep
