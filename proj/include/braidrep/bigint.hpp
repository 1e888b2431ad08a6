// Arbitrary-precision signed integers for exact polynomial coefficients.
// Values that fit in int64 are stored inline; larger magnitudes spill into
// sign-magnitude base-10^9 limbs. Only the operations the ring layer needs:
// add, sub, mul, compare, exact small division, printing.
#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidrep {

class BigInt {
public:
  BigInt() = default;
  BigInt(long long v) : small_(v) {}

  static BigInt from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("BigInt: empty string");
    size_t pos = 0;
    int sign = 1;
    if (s[0] == '-') { sign = -1; pos = 1; }
    else if (s[0] == '+') { pos = 1; }
    if (pos == s.size()) throw std::invalid_argument("BigInt: no digits");
    BigInt r;
    for (; pos < s.size(); ++pos) {
      char c = s[pos];
      if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit");
      r = r * BigInt(10) + BigInt(c - '0');
    }
    if (sign < 0) r = -r;
    return r;
  }

  bool is_zero() const { return mag_.empty() ? small_ == 0 : false; }
  bool is_one() const { return mag_.empty() && small_ == 1; }
  bool is_unit() const { return mag_.empty() && (small_ == 1 || small_ == -1); }
  int sign() const {
    if (mag_.empty()) return small_ == 0 ? 0 : (small_ < 0 ? -1 : 1);
    return sign_;
  }

  friend BigInt operator-(const BigInt& a) {
    BigInt r = a;
    if (r.mag_.empty())
      r.small_ = -r.small_;
    else
      r.sign_ = -r.sign_;
    return r;
  }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.mag_.empty() && b.mag_.empty()) {
      long long out;
      if (!__builtin_add_overflow(a.small_, b.small_, &out)) return BigInt(out);
    }
    return big_add(a.to_big(), b.to_big());
  }

  friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.mag_.empty() && b.mag_.empty()) {
      long long out;
      if (!__builtin_mul_overflow(a.small_, b.small_, &out)) return BigInt(out);
    }
    return big_mul(a.to_big(), b.to_big());
  }

  BigInt& operator+=(const BigInt& b) {
    if (mag_.empty() && b.mag_.empty()) {
      long long out;
      if (!__builtin_add_overflow(small_, b.small_, &out)) {
        small_ = out;
        return *this;
      }
    }
    return *this = big_add(to_big(), b.to_big());
  }
  BigInt& operator-=(const BigInt& b) { return *this += -b; }
  BigInt& operator*=(const BigInt& b) { return *this = *this * b; }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    if (a.mag_.empty() && b.mag_.empty()) return a.small_ == b.small_;
    return cmp(a, b) == 0;
  }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b) {
    if (a.mag_.empty() && b.mag_.empty()) return a.small_ < b.small_;
    return cmp(a, b) < 0;
  }

  // Exact division by a small positive integer; throws if a remainder is left.
  BigInt divexact(uint32_t d) const {
    if (d == 0) throw std::invalid_argument("BigInt: division by zero");
    if (mag_.empty()) {
      if (small_ % static_cast<long long>(d) != 0)
        throw std::logic_error("BigInt: inexact division");
      return BigInt(small_ / static_cast<long long>(d));
    }
    BigInt r = *this;
    uint64_t rem = 0;
    for (size_t i = r.mag_.size(); i-- > 0;) {
      uint64_t cur = rem * kBase + r.mag_[i];
      r.mag_[i] = static_cast<uint32_t>(cur / d);
      rem = cur % d;
    }
    if (rem != 0) throw std::logic_error("BigInt: inexact division");
    r.trim();
    return r;
  }

  std::string to_string() const {
    if (mag_.empty()) return std::to_string(small_);
    std::string s = sign_ < 0 ? "-" : "";
    s += std::to_string(mag_.back());
    for (size_t i = mag_.size() - 1; i-- > 0;) {
      std::string limb = std::to_string(mag_[i]);
      s += std::string(9 - limb.size(), '0') + limb;
    }
    return s;
  }

private:
  static constexpr uint64_t kBase = 1000000000ull;
  // Inline value when mag_ is empty; otherwise sign-magnitude limbs.
  long long small_ = 0;
  int sign_ = 0;
  std::vector<uint32_t> mag_;

  struct BigView {
    int sign;
    std::vector<uint32_t> mag;
  };

  BigView to_big() const {
    if (!mag_.empty()) return {sign_, mag_};
    BigView v{0, {}};
    if (small_ == 0) return v;
    v.sign = small_ < 0 ? -1 : 1;
    unsigned long long m = small_ < 0 ? -static_cast<unsigned long long>(small_)
                                      : static_cast<unsigned long long>(small_);
    while (m) {
      v.mag.push_back(static_cast<uint32_t>(m % kBase));
      m /= kBase;
    }
    return v;
  }

  static BigInt from_big(int sign, std::vector<uint32_t> mag) {
    while (!mag.empty() && mag.back() == 0) mag.pop_back();
    if (mag.empty()) return BigInt(0);
    // Re-inline if it fits: at most two limbs always fit in int64.
    if (mag.size() <= 2) {
      long long v = mag.size() == 2
                        ? static_cast<long long>(mag[1]) * static_cast<long long>(kBase) +
                              mag[0]
                        : static_cast<long long>(mag[0]);
      return BigInt(sign < 0 ? -v : v);
    }
    BigInt r;
    r.sign_ = sign;
    r.mag_ = std::move(mag);
    return r;
  }

  void trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) {
      small_ = 0;
      sign_ = 0;
    } else {
      *this = from_big(sign_, std::move(mag_));
    }
  }

  static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  static int cmp(const BigInt& a, const BigInt& b) {
    BigView va = a.to_big(), vb = b.to_big();
    if (va.sign != vb.sign) return va.sign < vb.sign ? -1 : 1;
    int c = cmp_mag(va.mag, vb.mag);
    return va.sign >= 0 ? c : -c;
  }

  static BigInt big_add(const BigView& a, const BigView& b) {
    if (a.sign == 0) return from_big(b.sign, b.mag);
    if (b.sign == 0) return from_big(a.sign, a.mag);
    if (a.sign == b.sign) return from_big(a.sign, add_mag(a.mag, b.mag));
    int c = cmp_mag(a.mag, b.mag);
    if (c == 0) return BigInt(0);
    if (c > 0) return from_big(a.sign, sub_mag(a.mag, b.mag));
    return from_big(b.sign, sub_mag(b.mag, a.mag));
  }

  static BigInt big_mul(const BigView& a, const BigView& b) {
    if (a.sign == 0 || b.sign == 0) return BigInt(0);
    std::vector<uint32_t> r(a.mag.size() + b.mag.size(), 0);
    for (size_t i = 0; i < a.mag.size(); ++i) {
      uint64_t carry = 0;
      for (size_t j = 0; j < b.mag.size(); ++j) {
        uint64_t cur = static_cast<uint64_t>(a.mag[i]) * b.mag[j] + r[i + j] + carry;
        r[i + j] = static_cast<uint32_t>(cur % kBase);
        carry = cur / kBase;
      }
      size_t k = i + b.mag.size();
      while (carry) {
        uint64_t cur = r[k] + carry;
        r[k] = static_cast<uint32_t>(cur % kBase);
        carry = cur / kBase;
        ++k;
      }
    }
    return from_big(a.sign * b.sign, std::move(r));
  }

  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
    const auto& lo = a.size() < b.size() ? a : b;
    const auto& hi = a.size() < b.size() ? b : a;
    std::vector<uint32_t> r(hi.size(), 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < hi.size(); ++i) {
      uint64_t cur = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
      r[i] = static_cast<uint32_t>(cur % kBase);
      carry = cur / kBase;
    }
    if (carry) r.push_back(static_cast<uint32_t>(carry));
    return r;
  }

  // Requires a >= b.
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r = a;
    int64_t borrow = 0;
    for (size_t i = 0; i < r.size(); ++i) {
      int64_t cur = static_cast<int64_t>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
      if (cur < 0) {
        cur += kBase;
        borrow = 1;
      } else
        borrow = 0;
      r[i] = static_cast<uint32_t>(cur);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }
};

}  // namespace braidrep
