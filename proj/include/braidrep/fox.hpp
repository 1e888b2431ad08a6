// Free-group ring, Fox derivatives, the Artin action of braid words on the
// free group, and the Magnus/Gassner matrices they induce.
//
// Matrix orientation: column c of magnus_matrix(w) holds the Fox coordinates
// of the image of the c-th generator, so matrices act on column vectors and
// magnus_matrix(uv) = magnus_matrix(u) * magnus_matrix(v) on pure words,
// specializing at t_1 = ... = t_n = t to the standard Burau word product.
#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "braidrep/braid.hpp"
#include "braidrep/matrix.hpp"

namespace braidrep {

// A freely reduced word in the free group F_n; letters are (generator, +-1)
// with 1-based generator indices.
struct FreeWord {
  std::vector<std::pair<int, int>> letters;

  FreeWord() = default;
  static FreeWord generator(int i, int sign = 1) {
    FreeWord w;
    w.letters.push_back({i, sign});
    return w;
  }

  void push(int gen, int sign) {
    if (!letters.empty() && letters.back().first == gen &&
        letters.back().second == -sign)
      letters.pop_back();
    else
      letters.push_back({gen, sign});
  }

  friend FreeWord operator*(const FreeWord& a, const FreeWord& b) {
    FreeWord r = a;
    for (const auto& [g, s] : b.letters) r.push(g, s);
    return r;
  }

  FreeWord inverse() const {
    FreeWord r;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
      r.letters.push_back({it->first, -it->second});
    return r;
  }

  bool empty() const { return letters.empty(); }
  friend bool operator==(const FreeWord& a, const FreeWord& b) {
    return a.letters == b.letters;
  }
  friend bool operator<(const FreeWord& a, const FreeWord& b) {
    return a.letters < b.letters;
  }
};

// Finite integer combination of free-group words.
struct GroupRingElement {
  std::map<FreeWord, BigInt> terms;

  GroupRingElement() = default;
  GroupRingElement(const FreeWord& w) { terms[w] = BigInt(1); }
  static GroupRingElement constant(long long c) {
    GroupRingElement e;
    if (c != 0) e.terms[FreeWord()] = BigInt(c);
    return e;
  }

  void add_term(const FreeWord& w, const BigInt& c) {
    auto it = terms.find(w);
    if (it == terms.end()) {
      if (!c.is_zero()) terms.emplace(w, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  friend GroupRingElement operator+(const GroupRingElement& a,
                                    const GroupRingElement& b) {
    GroupRingElement r = a;
    for (const auto& [w, c] : b.terms) r.add_term(w, c);
    return r;
  }
  friend GroupRingElement operator-(const GroupRingElement& a,
                                    const GroupRingElement& b) {
    GroupRingElement r = a;
    for (const auto& [w, c] : b.terms) r.add_term(w, -c);
    return r;
  }
  friend GroupRingElement operator*(const GroupRingElement& a,
                                    const GroupRingElement& b) {
    GroupRingElement r;
    for (const auto& [wa, ca] : a.terms)
      for (const auto& [wb, cb] : b.terms) r.add_term(wa * wb, ca * cb);
    return r;
  }
  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
    return a.terms == b.terms;
  }
  bool is_zero() const { return terms.empty(); }
};

// Fox derivative of a single reduced word: sum over occurrences of x_j^{+-1}
// of +-(prefix), where a negative occurrence contributes minus the prefix
// including the inverse letter itself.
inline GroupRingElement fox_derivative(const FreeWord& w, int j) {
  GroupRingElement r;
  FreeWord prefix;
  for (const auto& [g, s] : w.letters) {
    if (g == j) {
      if (s > 0) {
        r.add_term(prefix, BigInt(1));
        prefix.push(g, s);
      } else {
        prefix.push(g, s);
        r.add_term(prefix, BigInt(-1));
      }
    } else {
      prefix.push(g, s);
    }
  }
  return r;
}

inline GroupRingElement fox_derivative(const GroupRingElement& e, int j) {
  GroupRingElement r;
  for (const auto& [w, c] : e.terms) {
    GroupRingElement d = fox_derivative(w, j);
    for (const auto& [dw, dc] : d.terms) r.add_term(dw, dc * c);
  }
  return r;
}

// Artin action of a single letter: sigma_i sends x_i -> x_i x_{i+1} x_i^{-1}
// and x_{i+1} -> x_i; the inverse letter acts by the inverse substitution.
inline FreeWord artin_letter(int i, int sign, const FreeWord& x) {
  FreeWord out;
  for (const auto& [g, s] : x.letters) {
    FreeWord image;
    if (sign > 0) {
      if (g == i) {
        image = FreeWord::generator(i) * FreeWord::generator(i + 1) *
                FreeWord::generator(i, -1);
      } else if (g == i + 1) {
        image = FreeWord::generator(i);
      } else {
        image = FreeWord::generator(g);
      }
    } else {
      if (g == i) {
        image = FreeWord::generator(i + 1);
      } else if (g == i + 1) {
        image = FreeWord::generator(i + 1, -1) * FreeWord::generator(i) *
                FreeWord::generator(i + 1);
      } else {
        image = FreeWord::generator(g);
      }
    }
    out = out * (s > 0 ? image : image.inverse());
  }
  return out;
}

// Letters act right to left, matching the representation conventions.
inline FreeWord artin_action(const BraidWord& w, const FreeWord& x) {
  FreeWord cur = x;
  for (size_t m = w.letters.size(); m-- > 0;)
    cur = artin_letter(w.letters[m].index, w.letters[m].sign, cur);
  return cur;
}

// Abelianization x_i -> (monomial image i). The images must be monomials so
// that inverse letters stay in the ring.
inline LaurentPoly abelianize_words(const GroupRingElement& e, const VarSetPtr& vs,
                                    const std::vector<LaurentPoly>& images) {
  LaurentPoly r = LaurentPoly::zero(vs);
  for (const auto& [w, c] : e.terms) {
    LaurentPoly m = LaurentPoly::constant(vs, c);
    for (const auto& [g, s] : w.letters) m = m * pow(images[g - 1], s);
    r += m;
  }
  return r;
}

// The morphism a: x_i -> t_i into Z[t_1^{+-1},...,t_n^{+-1}].
inline LaurentPoly abelianize(const GroupRingElement& e, const VarSetPtr& vs) {
  std::vector<LaurentPoly> images;
  for (size_t i = 0; i < vs->size(); ++i)
    images.push_back(LaurentPoly::var(vs, static_cast<int>(i)));
  return abelianize_words(e, vs, images);
}

// n x n Gassner/Magnus matrix of a braid word over Z[t_1,...,t_n].
inline Mat magnus_matrix(const BraidWord& w, const VarSetPtr& vs) {
  const int n = w.n;
  if (static_cast<int>(vs->size()) != n)
    throw std::invalid_argument("magnus_matrix: need n variables");
  Mat m = mat_zero(n, n);
  for (int c = 1; c <= n; ++c) {
    FreeWord image = artin_action(w, FreeWord::generator(c));
    for (int r = 1; r <= n; ++r)
      m(r - 1, c - 1) = abelianize(fox_derivative(GroupRingElement(image), r), vs);
  }
  return m;
}

inline Mat magnus_matrix(const BraidWord& w) {
  return magnus_matrix(w, indexed_varset("t", w.n));
}

namespace detail {

// Rewrites an x-word in the basis g_j = x_1...x_j (so x_m = g_{m-1}^{-1} g_m).
inline FreeWord to_g_alphabet(const FreeWord& w) {
  FreeWord out;
  for (const auto& [g, s] : w.letters) {
    FreeWord image;
    if (g == 1)
      image = FreeWord::generator(1);
    else
      image = FreeWord::generator(g - 1, -1) * FreeWord::generator(g);
    out = out * (s > 0 ? image : image.inverse());
  }
  return out;
}

// Fox matrix of w in the g-basis; abelianization sends g_j to gimages[j-1].
inline Mat g_basis_matrix(const BraidWord& w, const VarSetPtr& vs,
                          const std::vector<LaurentPoly>& gimages) {
  const int n = w.n;
  Mat m = mat_zero(n, n);
  for (int c = 1; c <= n; ++c) {
    FreeWord gc;
    for (int i = 1; i <= c; ++i) gc.push(i, 1);
    FreeWord image = to_g_alphabet(artin_action(w, gc));
    for (int r = 1; r <= n; ++r)
      m(r - 1, c - 1) =
          abelianize_words(fox_derivative(GroupRingElement(image), r), vs, gimages);
  }
  return m;
}

}  // namespace detail

// (n-1) x (n-1) reduced Gassner matrix of a pure word: the g-basis matrix
// with the invariant boundary line g_n = x_1...x_n quotiented away. The last
// column must be (0,...,0,1) before deletion.
inline Mat reduced_magnus_matrix(const BraidWord& w, const VarSetPtr& vs) {
  if (!is_pure(w))
    throw std::invalid_argument("reduced_magnus_matrix: word must be pure");
  std::vector<LaurentPoly> gimages;
  LaurentPoly acc(1);
  for (int j = 1; j <= w.n; ++j) {
    acc = acc * LaurentPoly::var(vs, j - 1);
    gimages.push_back(acc);
  }
  Mat m = detail::g_basis_matrix(w, vs, gimages);
  for (int r = 0; r < w.n; ++r) {
    LaurentPoly expected = (r == w.n - 1) ? LaurentPoly(1) : LaurentPoly();
    if (m(r, w.n - 1) != expected)
      throw std::logic_error("reduced_magnus_matrix: boundary column is not trivial");
  }
  return mat_delete_last_row_col(m);
}

inline Mat reduced_magnus_matrix(const BraidWord& w) {
  return reduced_magnus_matrix(w, indexed_varset("t", w.n));
}

// Single-variable reduced Burau matrix of an arbitrary word, by the same
// boundary-line quotient (valid for non-pure words since x_1...x_n is fixed
// by every braid).
inline Mat reduced_burau_matrix(const BraidWord& w, const VarSetPtr& vs, int var) {
  std::vector<LaurentPoly> gimages;
  for (int j = 1; j <= w.n; ++j) gimages.push_back(LaurentPoly::var(vs, var, j));
  Mat m = detail::g_basis_matrix(w, vs, gimages);
  for (int r = 0; r < w.n; ++r) {
    LaurentPoly expected = (r == w.n - 1) ? LaurentPoly(1) : LaurentPoly();
    if (m(r, w.n - 1) != expected)
      throw std::logic_error("reduced_burau_matrix: boundary column is not trivial");
  }
  return mat_delete_last_row_col(m);
}

}  // namespace braidrep
