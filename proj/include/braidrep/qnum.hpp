// Quantum numbers: balanced [i]_q with factorials and binomials, and the
// one-sided (i)_t family with binomials and trinomials. Everything is built
// from explicit sums and Pascal recursions; no polynomial division.
#pragma once

#include <stdexcept>

#include "braidrep/laurent.hpp"

namespace braidrep {

// [i]_q = q^{i-1} + q^{i-3} + ... + q^{-(i-1)}; [0]_q = 0.
inline LaurentPoly q_number(int i, const VarSetPtr& vs, int var) {
  if (i < 0) throw std::invalid_argument("q_number: negative argument");
  LaurentPoly r = LaurentPoly::zero(vs);
  for (int e = i - 1; e >= -(i - 1); e -= 2) r += LaurentPoly::var(vs, var, e);
  return r;
}

inline LaurentPoly q_factorial(int k, const VarSetPtr& vs, int var) {
  if (k < 0) throw std::invalid_argument("q_factorial: negative argument");
  LaurentPoly r(1);
  for (int i = 1; i <= k; ++i) r = r * q_number(i, vs, var);
  return r.substitute_names(vs, vs->names);  // pin the ring even for k = 0
}

// Balanced Pascal recursion: [k,l]_q = q^l [k-1,l]_q + q^{l-k} [k-1,l-1]_q.
inline LaurentPoly q_binomial(int k, int l, const VarSetPtr& vs, int var) {
  if (l < 0 || l > k) throw std::invalid_argument("q_binomial: need 0 <= l <= k");
  if (l == 0 || l == k) return LaurentPoly::constant(vs, BigInt(1));
  return LaurentPoly::var(vs, var, l) * q_binomial(k - 1, l, vs, var) +
         LaurentPoly::var(vs, var, l - k) * q_binomial(k - 1, l - 1, vs, var);
}

// (i)_b = 1 + b + ... + b^{i-1} for a unit monomial b (b = t or b = t^{-1}).
inline LaurentPoly t_number(int i, const LaurentPoly& base) {
  if (i < 0) throw std::invalid_argument("t_number: negative argument");
  if (!base.is_unit()) throw std::invalid_argument("t_number: base must be a unit");
  LaurentPoly r = LaurentPoly::zero(base.vars());
  LaurentPoly p(1);
  for (int m = 0; m < i; ++m) {
    r += p;
    p = p * base;
  }
  return r;
}

inline LaurentPoly t_factorial(int k, const LaurentPoly& base) {
  if (k < 0) throw std::invalid_argument("t_factorial: negative argument");
  LaurentPoly r(1);
  for (int i = 1; i <= k; ++i) r = r * t_number(i, base);
  return r;
}

// Pascal: binom(k,l)_b = binom(k-1,l-1)_b + b^l binom(k-1,l)_b.
inline LaurentPoly t_binomial(int k, int l, const LaurentPoly& base) {
  if (l < 0 || l > k) throw std::invalid_argument("t_binomial: need 0 <= l <= k");
  if (l == 0 || l == k) return LaurentPoly(1);
  return t_binomial(k - 1, l - 1, base) +
         pow(base, l) * t_binomial(k - 1, l, base);
}

// Factorial reading (n)_b!/((i)_b!(j)_b!(k)_b!) as a product of binomials.
inline LaurentPoly t_trinomial(int n, int i, int j, int k, const LaurentPoly& base) {
  if (i < 0 || j < 0 || k < 0 || i + j + k != n)
    throw std::invalid_argument("t_trinomial: need i+j+k = n, all >= 0");
  return t_binomial(n, i, base) * t_binomial(n - i, j, base);
}

}  // namespace braidrep
