// Braid words and the combinatorics the representations share: permutations,
// pure-braid generators, over-strand labels, strand deletion.
//
// Conventions (fixed once for the whole library):
//  - A word sigma_{i_1}^{s_1} ... sigma_{i_k}^{s_k} acts right to left: the
//    rightmost letter is the first crossing in time.
//  - perm_of maps a strand's start position to its end position, so
//    perm_of(uv) = compose(perm_of(u), perm_of(v)).
//  - Over-strand labels report the *initial* index of the over strand. Two
//    crossing conventions exist (the strand entering the lower or the upper
//    slot of a positive sigma_i passes over); both are implemented and the
//    verification suites pin which one each representation family uses.
#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidrep {

struct BraidLetter {
  int index;  // 1-based generator index, 1 <= index <= n-1
  int sign;   // +1 or -1
};

struct BraidWord {
  int n = 0;
  std::vector<BraidLetter> letters;

  BraidWord() = default;
  BraidWord(int strands, std::vector<BraidLetter> ls)
      : n(strands), letters(std::move(ls)) {
    if (n < 1) throw std::invalid_argument("BraidWord: need n >= 1");
    for (const auto& l : letters) {
      if (l.index < 1 || l.index > n - 1)
        throw std::invalid_argument("BraidWord: letter index out of range");
      if (l.sign != 1 && l.sign != -1)
        throw std::invalid_argument("BraidWord: sign must be +-1");
    }
  }

  size_t size() const { return letters.size(); }

  BraidWord inverse() const {
    BraidWord r;
    r.n = n;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
      r.letters.push_back({it->index, -it->sign});
    return r;
  }

  friend BraidWord operator*(const BraidWord& a, const BraidWord& b) {
    if (a.n != b.n) throw std::invalid_argument("BraidWord: strand count mismatch");
    BraidWord r = a;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
  }
};

// Whitespace-separated signed integers, e.g. "1 2 -1".
inline BraidWord parse_braid(const std::string& text, int n) {
  std::vector<BraidLetter> letters;
  size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos >= text.size()) break;
    size_t end = pos;
    while (end < text.size() && text[end] != ' ' && text[end] != '\t') ++end;
    int v = std::stoi(text.substr(pos, end - pos));
    if (v == 0) throw std::invalid_argument("parse_braid: 0 is not a letter");
    letters.push_back({v > 0 ? v : -v, v > 0 ? 1 : -1});
    pos = end;
  }
  return BraidWord(n, std::move(letters));
}

struct Perm {
  std::vector<int> img;  // 0-based: img[p] = image of p

  Perm() = default;
  explicit Perm(int n) : img(n) { std::iota(img.begin(), img.end(), 0); }
  explicit Perm(std::vector<int> images) : img(std::move(images)) {
    std::vector<bool> seen(img.size(), false);
    for (int v : img) {
      if (v < 0 || static_cast<size_t>(v) >= img.size() || seen[v])
        throw std::invalid_argument("Perm: not a bijection");
      seen[v] = true;
    }
  }

  int size() const { return static_cast<int>(img.size()); }
  int operator()(int p) const { return img[p]; }
  bool is_identity() const {
    for (int p = 0; p < size(); ++p)
      if (img[p] != p) return false;
    return true;
  }
  Perm inverse() const {
    Perm r;
    r.img.resize(img.size());
    for (int p = 0; p < size(); ++p) r.img[img[p]] = p;
    return r;
  }
  // 1-based lookup helpers for strand indices.
  int at1(int p1) const { return img[p1 - 1] + 1; }
  int inv_at1(int v1) const {
    for (int p = 0; p < size(); ++p)
      if (img[p] == v1 - 1) return p + 1;
    throw std::logic_error("Perm: value not found");
  }

  friend bool operator==(const Perm& a, const Perm& b) { return a.img == b.img; }
  friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
  friend bool operator<(const Perm& a, const Perm& b) { return a.img < b.img; }
};

// (a o b)(p) = a(b(p)).
inline Perm compose(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw std::invalid_argument("compose: size mismatch");
  Perm r;
  r.img.resize(a.size());
  for (int p = 0; p < b.size(); ++p) r.img[p] = a.img[b.img[p]];
  return r;
}

// Transposition (i, i+1) of 1-based positions.
inline Perm transposition(int n, int i) {
  Perm t(n);
  std::swap(t.img[i - 1], t.img[i]);
  return t;
}

inline std::vector<Perm> all_perms(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::vector<Perm> out;
  do {
    out.push_back(Perm(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

inline Perm perm_of(const BraidWord& w) {
  Perm p(w.n);
  for (const auto& l : w.letters) p = compose(p, transposition(w.n, l.index));
  return p;
}

inline bool is_pure(const BraidWord& w) { return perm_of(w).is_identity(); }

// Birman's generator A_{r,s} = sigma_{s-1} ... sigma_{r+1} sigma_r^2
// sigma_{r+1}^{-1} ... sigma_{s-1}^{-1}.
inline BraidWord pure_generator(int n, int r, int s) {
  if (!(1 <= r && r < s && s <= n))
    throw std::invalid_argument("pure_generator: need 1 <= r < s <= n");
  std::vector<BraidLetter> ls;
  for (int i = s - 1; i >= r + 1; --i) ls.push_back({i, 1});
  ls.push_back({r, 1});
  ls.push_back({r, 1});
  for (int i = r + 1; i <= s - 1; ++i) ls.push_back({i, -1});
  return BraidWord(n, std::move(ls));
}

enum class OverConvention {
  LowerSlot,  // positive sigma_i: the strand entering at slot i passes over
  UpperSlot   // positive sigma_i: the strand entering at slot i+1 passes over
};

struct CrossingLabel {
  int position;     // 0-based letter index within the word
  int over_strand;  // 1-based initial index of the strand passing over
};

// Labels in word order; strands are traced from the right end of the word.
// For a negative letter the roles of the two slots are exchanged, so that an
// adjacent sigma sigma^{-1} pair carries the same label twice.
inline std::vector<CrossingLabel> over_strand_labels(
    const BraidWord& w, OverConvention conv = OverConvention::LowerSlot) {
  std::vector<int> slot_to_strand(w.n);
  std::iota(slot_to_strand.begin(), slot_to_strand.end(), 1);
  std::vector<CrossingLabel> labels(w.letters.size());
  for (size_t m = w.letters.size(); m-- > 0;) {
    const auto& l = w.letters[m];
    bool lower = (conv == OverConvention::LowerSlot) == (l.sign > 0);
    int over_slot = lower ? l.index : l.index + 1;
    labels[m] = {static_cast<int>(m), slot_to_strand[over_slot - 1]};
    std::swap(slot_to_strand[l.index - 1], slot_to_strand[l.index]);
  }
  return labels;
}

// Deletes every crossing in which strand n participates and reindexes the
// rest. Requires a pure word so that strand n returns to position n.
inline BraidWord forget_last_strand(const BraidWord& w) {
  if (w.n < 2) throw std::invalid_argument("forget_last_strand: need n >= 2");
  if (!is_pure(w))
    throw std::invalid_argument("forget_last_strand: word must be pure");
  std::vector<int> slot_to_strand(w.n);
  std::iota(slot_to_strand.begin(), slot_to_strand.end(), 1);
  std::vector<BraidLetter> kept;  // in temporal (right-to-left) order
  for (size_t m = w.letters.size(); m-- > 0;) {
    const auto& l = w.letters[m];
    int a = slot_to_strand[l.index - 1], b = slot_to_strand[l.index];
    if (a != w.n && b != w.n) {
      int slot_of_n = 0;
      for (int s = 0; s < w.n; ++s)
        if (slot_to_strand[s] == w.n) slot_of_n = s + 1;
      int reduced = l.index - (slot_of_n < l.index ? 1 : 0);
      kept.push_back({reduced, l.sign});
    }
    std::swap(slot_to_strand[l.index - 1], slot_to_strand[l.index]);
  }
  std::reverse(kept.begin(), kept.end());
  return BraidWord(w.n - 1, std::move(kept));
}

// Cancels adjacent sigma_i^e sigma_i^{-e} pairs to a fixed point.
inline BraidWord free_reduce(const BraidWord& w) {
  std::vector<BraidLetter> out;
  for (const auto& l : w.letters) {
    if (!out.empty() && out.back().index == l.index && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  BraidWord r;
  r.n = w.n;
  r.letters = std::move(out);
  return r;
}

}  // namespace braidrep
