// Dense matrices over the Laurent ring: Eigen dynamic matrices with
// LaurentPoly scalars plus the exact free functions the representations need.
#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <utility>

#include "braidrep/laurent.hpp"

namespace Eigen {
template <>
struct NumTraits<braidrep::LaurentPoly> {
  using Real = braidrep::LaurentPoly;
  using NonInteger = braidrep::LaurentPoly;
  using Literal = braidrep::LaurentPoly;
  using Nested = braidrep::LaurentPoly;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 16,
    AddCost = 64,
    MulCost = 256
  };
  static int digits10() { return 0; }
};
}  // namespace Eigen

namespace braidrep {

using Mat = Eigen::Matrix<LaurentPoly, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<LaurentPoly, Eigen::Dynamic, 1>;

inline Mat mat_zero(int rows, int cols) {
  Mat m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = LaurentPoly();
  return m;
}

inline Mat mat_identity(int n) {
  Mat m = mat_zero(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = LaurentPoly(1);
  return m;
}

inline bool mat_eq(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c)
      if (a(r, c) != b(r, c)) return false;
  return true;
}

inline bool mat_is_zero(const Mat& a) {
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c)
      if (!a(r, c).is_zero()) return false;
  return true;
}

inline int mat_nonzero_count(const Mat& a) {
  int k = 0;
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c)
      if (!a(r, c).is_zero()) ++k;
  return k;
}

inline size_t mat_first_nonzero_term_count(const Mat& a) {
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c)
      if (!a(r, c).is_zero()) return a(r, c).term_count();
  return 0;
}

template <class Fn>
inline Mat mat_map(const Mat& a, Fn&& fn) {
  Mat r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = fn(a(i, j));
  return r;
}

inline Mat mat_substitute(const Mat& a, const VarSetPtr& target,
                          const std::vector<LaurentPoly>& images) {
  return mat_map(a, [&](const LaurentPoly& p) { return p.substitute(target, images); });
}

inline Mat mat_substitute_names(const Mat& a, const VarSetPtr& target,
                                const std::vector<std::string>& names) {
  return mat_map(a, [&](const LaurentPoly& p) { return p.substitute_names(target, names); });
}

inline Mat mat_delete_last_row_col(const Mat& a) {
  return a.topLeftCorner(a.rows() - 1, a.cols() - 1);
}

// Adjugate and determinant by Faddeev-Leverrier. All divisions are exact
// integer divisions of coefficients, so the result stays in the ring.
inline std::pair<Mat, LaurentPoly> adjugate_det(const Mat& a) {
  const int n = static_cast<int>(a.rows());
  if (n != a.cols() || n == 0)
    throw std::invalid_argument("adjugate_det: nonempty square matrix required");
  Mat M = mat_zero(n, n);   // M_k
  Mat AM = mat_zero(n, n);  // A * M_k
  LaurentPoly c(1);         // c_n, then c_{n-k}
  for (int k = 1; k <= n; ++k) {
    M = AM;
    for (int i = 0; i < n; ++i) M(i, i) += c;
    AM = a * M;
    LaurentPoly tr;
    for (int i = 0; i < n; ++i) tr += AM(i, i);
    c = divexact(-tr, static_cast<uint32_t>(k));
  }
  LaurentPoly det = (n % 2 == 0) ? c : -c;  // det = (-1)^n c_0
  Mat adj = (n % 2 == 1) ? M : Mat(-M);     // adj = (-1)^{n-1} M_n
  return {adj, det};
}

// Inverse of a matrix whose determinant is a unit (+- monomial).
inline Mat mat_inverse_unit_det(const Mat& a) {
  auto [adj, det] = adjugate_det(a);
  if (!det.is_unit())
    throw std::invalid_argument("mat_inverse_unit_det: determinant is not a unit");
  LaurentPoly dinv = det.unit_inverse();
  Mat inv = mat_map(adj, [&](const LaurentPoly& p) { return p * dinv; });
  if (!mat_eq(a * inv, mat_identity(static_cast<int>(a.rows()))))
    throw std::logic_error("mat_inverse_unit_det: verification failed");
  return inv;
}

}  // namespace braidrep
