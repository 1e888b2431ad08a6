// Test-only exact division of univariate Laurent polynomials, independent of
// the qnum recursions it checks. Coefficients are assumed to fit in int64
// (true for every quantum number in range here).
#pragma once

#include <map>
#include <optional>
#include <string>

#include "braidrep/laurent.hpp"

namespace oracle {

using Terms = std::map<int, long long>;  // exponent -> coefficient

inline Terms to_terms(const braidrep::LaurentPoly& p) {
  if (p.nvars() > 1) throw std::invalid_argument("oracle: univariate only");
  Terms t;
  for (const auto& term : p.terms())
    t[term.key[0]] = std::stoll(term.coeff.to_string());
  return t;
}

// a = x^shift * A with A(0) != 0; classic long division of A by B over Z[x].
inline std::optional<Terms> divide_exact(const Terms& a, const Terms& b) {
  if (b.empty()) return std::nullopt;
  if (a.empty()) return Terms{};
  int ashift = a.begin()->first, bshift = b.begin()->first;
  std::map<int, long long> r, q;
  for (const auto& [e, c] : a) r[e - ashift] = c;
  std::map<int, long long> bb;
  for (const auto& [e, c] : b) bb[e - bshift] = c;
  const int bdeg = bb.rbegin()->first;
  const long long blc = bb.rbegin()->second;
  while (!r.empty()) {
    int rdeg = r.rbegin()->first;
    long long rlc = r.rbegin()->second;
    if (rdeg < bdeg || rlc % blc != 0) return std::nullopt;
    int qe = rdeg - bdeg;
    long long qc = rlc / blc;
    q[qe] += qc;
    if (q[qe] == 0) q.erase(qe);
    for (const auto& [e, c] : bb) {
      r[e + qe] -= qc * c;
      if (r[e + qe] == 0) r.erase(e + qe);
    }
  }
  Terms out;
  for (const auto& [e, c] : q) out[e + ashift - bshift] = c;
  return out;
}

inline bool equals(const Terms& t, const braidrep::LaurentPoly& p) {
  return t == to_terms(p);
}

}  // namespace oracle
