// Exact multivariate Laurent polynomials over the integers.
//
// Terms are kept in a flat vector sorted by exponent key (ascending
// lexicographic), which is the canonical form: equality is structural and
// iteration order is deterministic. Exponent vectors are packed into a fixed
// int16 array, so merging and hashing never allocate per term. Integer
// constants carry no VarSet and combine with polynomials over any ring.
#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "braidrep/bigint.hpp"
#include "braidrep/varset.hpp"

namespace braidrep {

class LaurentPoly {
public:
  static constexpr int kMaxVars = 16;
  using Key = std::array<int16_t, kMaxVars>;  // unused slots stay zero
  struct Term {
    Key key;
    BigInt coeff;
    friend bool operator==(const Term& a, const Term& b) {
      return a.key == b.key && a.coeff == b.coeff;
    }
  };
  using Exps = std::vector<int>;

  LaurentPoly() = default;
  LaurentPoly(long long c) {
    if (c != 0) terms_.push_back({Key{}, BigInt(c)});
  }
  LaurentPoly(const BigInt& c) {
    if (!c.is_zero()) terms_.push_back({Key{}, c});
  }

  static LaurentPoly zero(const VarSetPtr& vs) {
    check_ring(vs);
    LaurentPoly p;
    p.vars_ = vs;
    return p;
  }

  static LaurentPoly constant(const VarSetPtr& vs, BigInt c) {
    LaurentPoly p = zero(vs);
    if (!c.is_zero()) p.terms_.push_back({Key{}, std::move(c)});
    return p;
  }

  static LaurentPoly monomial(const VarSetPtr& vs, const Exps& e, BigInt c) {
    if (!vs || e.size() != vs->size())
      throw std::invalid_argument("LaurentPoly: exponent length mismatch");
    LaurentPoly p = zero(vs);
    if (!c.is_zero()) p.terms_.push_back({pack(e), std::move(c)});
    return p;
  }

  static LaurentPoly var(const VarSetPtr& vs, int index, int exp = 1) {
    check_ring(vs);
    if (index < 0 || static_cast<size_t>(index) >= vs->size())
      throw std::invalid_argument("LaurentPoly: variable index out of range");
    check_exp(exp);
    LaurentPoly p = zero(vs);
    Key k{};
    k[index] = static_cast<int16_t>(exp);
    p.terms_.push_back({k, BigInt(1)});
    return p;
  }

  static LaurentPoly var(const VarSetPtr& vs, const std::string& name, int exp = 1) {
    return var(vs, vs->index_of(name), exp);
  }

  const VarSetPtr& vars() const { return vars_; }
  int nvars() const { return vars_ ? static_cast<int>(vars_->size()) : 0; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  static Exps key_to_exps(const Key& k, int nvars) {
    Exps e(nvars);
    for (int i = 0; i < nvars; ++i) e[i] = k[i];
    return e;
  }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].key == Key{});
  }

  bool is_monomial() const { return terms_.size() == 1; }

  // A unit of Z[x^{+-1}]: a single term with coefficient +-1.
  bool is_unit() const { return terms_.size() == 1 && terms_[0].coeff.is_unit(); }

  LaurentPoly unit_inverse() const {
    if (!is_unit()) throw std::invalid_argument("LaurentPoly: not a unit");
    LaurentPoly r = *this;
    for (auto& x : r.terms_[0].key) x = static_cast<int16_t>(-x);
    return r;
  }

  friend LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r = a;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    r.vars_ = joined_ring(a, b);
    r.terms_ = merge(a.terms_, b.terms_, false);
    return r;
  }

  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    r.vars_ = joined_ring(a, b);
    r.terms_ = merge(a.terms_, b.terms_, true);
    return r;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    r.vars_ = joined_ring(a, b);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    const std::vector<Term>& small = a.terms_.size() <= b.terms_.size() ? a.terms_ : b.terms_;
    const std::vector<Term>& large = a.terms_.size() <= b.terms_.size() ? b.terms_ : a.terms_;
    if (small.size() <= 6) {
      // Successive merges of shifted copies; the common case in word
      // products, where one factor is a generator block entry.
      std::vector<Term> acc;
      std::vector<Term> shifted;
      for (const auto& s : small) {
        shifted.clear();
        shifted.reserve(large.size());
        for (const auto& t : large) {
          Key k = t.key;
          for (int i = 0; i < kMaxVars; ++i) k[i] = static_cast<int16_t>(k[i] + s.key[i]);
          shifted.push_back({k, t.coeff * s.coeff});
        }
        acc = merge(acc, shifted, false);
      }
      r.terms_ = std::move(acc);
      return r;
    }
    std::unordered_map<Key, BigInt, KeyHash> accum(2 * large.size());
    for (const auto& s : small)
      for (const auto& t : large) {
        Key k = t.key;
        for (int i = 0; i < kMaxVars; ++i) k[i] = static_cast<int16_t>(k[i] + s.key[i]);
        accum[k] += t.coeff * s.coeff;
      }
    r.terms_.reserve(accum.size());
    for (auto& [k, c] : accum)
      if (!c.is_zero()) r.terms_.push_back({k, std::move(c)});
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const Term& x, const Term& y) { return x.key < y.key; });
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& b) {
    vars_ = joined_ring(*this, b);
    if (b.terms_.empty()) return *this;
    if (terms_.empty()) {
      terms_ = b.terms_;
      return *this;
    }
    terms_ = merge(terms_, b.terms_, false);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& b) {
    vars_ = joined_ring(*this, b);
    if (b.terms_.empty()) return *this;
    terms_ = merge(terms_, b.terms_, true);
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (!compatible(a.vars_, b.vars_))
      throw std::invalid_argument("LaurentPoly: VarSet mismatch in comparison");
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
    return !(a == b);
  }

  friend LaurentPoly pow(const LaurentPoly& a, int e) {
    if (e < 0) return pow(a.unit_inverse(), -e);
    LaurentPoly r = a.vars_ ? constant(a.vars_, BigInt(1)) : LaurentPoly(1);
    LaurentPoly base = a;
    for (int k = e; k > 0; k >>= 1) {
      if (k & 1) r = r * base;
      if (k > 1) base = base * base;
    }
    return r;
  }

  // Ring homomorphism determined by images[i] over the target ring. If a
  // variable occurs with a negative exponent, its image must be a unit.
  LaurentPoly substitute(const VarSetPtr& target,
                         const std::vector<LaurentPoly>& images) const {
    if (!vars_) {
      LaurentPoly r = target ? zero(target) : LaurentPoly();
      r.terms_ = terms_;
      return r;
    }
    if (images.size() != vars_->size())
      throw std::invalid_argument("substitute: wrong number of images");
    std::vector<LaurentPoly> inv(images.size());
    LaurentPoly r = target ? zero(target) : LaurentPoly();
    for (const auto& t : terms_) {
      LaurentPoly acc = target ? constant(target, t.coeff) : LaurentPoly(t.coeff);
      for (size_t i = 0; i < vars_->size(); ++i) {
        int e = t.key[i];
        if (e == 0) continue;
        if (e > 0) {
          acc = acc * pow(images[i], e);
        } else {
          if (!images[i].is_unit())
            throw std::invalid_argument(
                "substitute: non-invertible image for negatively occurring " +
                vars_->names[i]);
          if (inv[i].is_zero()) inv[i] = images[i].unit_inverse();
          acc = acc * pow(inv[i], -e);
        }
      }
      r += acc;
    }
    return r;
  }

  // Rename-style substitution: each source variable maps to a named variable
  // (or integer constant) of the target ring.
  LaurentPoly substitute_names(const VarSetPtr& target,
                               const std::vector<std::string>& names) const {
    if (!vars_) return substitute(target, {});
    std::vector<LaurentPoly> images;
    images.reserve(names.size());
    for (const auto& nm : names) {
      if (!nm.empty() && (nm[0] == '-' || (nm[0] >= '0' && nm[0] <= '9')))
        images.push_back(constant(target, BigInt::from_string(nm)));
      else
        images.push_back(var(target, nm));
    }
    return substitute(target, images);
  }

private:
  VarSetPtr vars_;  // nullptr for integer constants
  std::vector<Term> terms_;

  struct KeyHash {
    size_t operator()(const Key& k) const {
      uint64_t h = 1469598103934665603ull;
      for (int16_t v : k) {
        h ^= static_cast<uint16_t>(v);
        h *= 1099511628211ull;
      }
      return static_cast<size_t>(h);
    }
  };

  static void check_ring(const VarSetPtr& vs) {
    if (vs && vs->size() > kMaxVars)
      throw std::invalid_argument("LaurentPoly: too many variables (max 16)");
  }
  static void check_exp(long long e) {
    if (e < INT16_MIN || e > INT16_MAX)
      throw std::invalid_argument("LaurentPoly: exponent out of range");
  }
  static Key pack(const Exps& e) {
    Key k{};
    for (size_t i = 0; i < e.size(); ++i) {
      check_exp(e[i]);
      k[i] = static_cast<int16_t>(e[i]);
    }
    return k;
  }

  static bool compatible(const VarSetPtr& a, const VarSetPtr& b) {
    return !a || !b || a == b || *a == *b;
  }

  static VarSetPtr joined_ring(const LaurentPoly& a, const LaurentPoly& b) {
    if (!compatible(a.vars_, b.vars_))
      throw std::invalid_argument("LaurentPoly: VarSet mismatch");
    return a.vars_ ? a.vars_ : b.vars_;
  }

  static std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b,
                                 bool negate_b) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i].key < b[j].key) {
        out.push_back(a[i++]);
      } else if (b[j].key < a[i].key) {
        out.push_back({b[j].key, negate_b ? -b[j].coeff : b[j].coeff});
        ++j;
      } else {
        BigInt c = negate_b ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
        if (!c.is_zero()) out.push_back({a[i].key, std::move(c)});
        ++i;
        ++j;
      }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j)
      out.push_back({b[j].key, negate_b ? -b[j].coeff : b[j].coeff});
    return out;
  }
};

// Coefficient-wise exact division by a small positive integer.
inline LaurentPoly divexact(const LaurentPoly& p, uint32_t d) {
  LaurentPoly r = p.vars() ? LaurentPoly::zero(p.vars()) : LaurentPoly();
  for (const auto& t : p.terms())
    r += p.vars() ? LaurentPoly::monomial(
                        p.vars(), LaurentPoly::key_to_exps(t.key, p.nvars()),
                        t.coeff.divexact(d))
                  : LaurentPoly(t.coeff.divexact(d));
  return r;
}

// Plain-text rendering in canonical term order, e.g. "1 - t1 + 2 t1 t2^-1".
inline std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    BigInt coeff = t.coeff;
    bool neg = coeff.sign() < 0;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    if (neg) coeff = -coeff;
    std::string vars;
    for (int i = 0; i < p.nvars(); ++i) {
      if (t.key[i] == 0) continue;
      if (!vars.empty()) vars += " ";
      vars += p.vars()->names[i];
      if (t.key[i] != 1) vars += "^" + std::to_string(t.key[i]);
    }
    if (vars.empty()) {
      out += coeff.to_string();
    } else {
      if (!coeff.is_one()) out += coeff.to_string() + " ";
      out += vars;
    }
  }
  return out;
}

}  // namespace braidrep
