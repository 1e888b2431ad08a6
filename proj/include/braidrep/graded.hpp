// Permutation-graded linear maps: the uniform value of induced and colored
// braid representations. A GradedMap sends the block at a source permutation
// tau to a target permutation together with a matrix; maps induced by a braid
// word w satisfy target = compose(perm_of(w), tau) on every block.
#pragma once

#include <map>
#include <stdexcept>

#include "braidrep/braid.hpp"
#include "braidrep/matrix.hpp"

namespace braidrep {

struct GradedMap {
  int n = 0;    // grading group S_n
  int dim = 0;  // block dimension
  std::map<Perm, std::pair<Perm, Mat>> blocks;

  const std::pair<Perm, Mat>& at(const Perm& src) const {
    auto it = blocks.find(src);
    if (it == blocks.end()) throw std::invalid_argument("GradedMap: missing block");
    return it->second;
  }
};

inline GradedMap graded_identity(int n, int dim, const std::vector<Perm>& sources) {
  GradedMap g;
  g.n = n;
  g.dim = dim;
  for (const auto& tau : sources) g.blocks[tau] = {tau, mat_identity(dim)};
  return g;
}

// Builds the induced map of a braid word from a per-letter block rule.
// letter_fn(i, sign, src) must return the target permutation and the matrix
// of sigma_i^{sign} out of the block at src. Letters act right to left.
template <class LetterFn>
GradedMap induced_rep(const BraidWord& w, int dim, const std::vector<Perm>& sources,
                      LetterFn&& letter_fn) {
  GradedMap g;
  g.n = w.n;
  g.dim = dim;
  for (const auto& src : sources) {
    Perm cur = src;
    Mat m = mat_identity(dim);
    for (size_t k = w.letters.size(); k-- > 0;) {
      auto [dst, block] = letter_fn(w.letters[k].index, w.letters[k].sign, cur);
      m = block * m;
      cur = dst;
    }
    g.blocks[src] = {cur, std::move(m)};
  }
  return g;
}

// compose(a, b): apply b, then a. Defined on b's sources; a must provide a
// block at every target of b with matching dimensions.
inline GradedMap compose(const GradedMap& a, const GradedMap& b) {
  if (a.n != b.n || a.dim != b.dim)
    throw std::invalid_argument("GradedMap compose: grading mismatch");
  GradedMap g;
  g.n = a.n;
  g.dim = a.dim;
  for (const auto& [src, blk] : b.blocks) {
    const auto& [mid, mb] = blk;
    const auto& [dst, ma] = a.at(mid);
    g.blocks[src] = {dst, Mat(ma * mb)};
  }
  return g;
}

inline bool graded_eq(const GradedMap& a, const GradedMap& b) {
  if (a.n != b.n || a.dim != b.dim || a.blocks.size() != b.blocks.size())
    return false;
  for (const auto& [src, blk] : a.blocks) {
    auto it = b.blocks.find(src);
    if (it == b.blocks.end()) return false;
    if (!(blk.first == it->second.first)) return false;
    if (!mat_eq(blk.second, it->second.second)) return false;
  }
  return true;
}

// Blockwise difference; requires identical gradings.
inline GradedMap graded_sub(const GradedMap& a, const GradedMap& b) {
  if (a.n != b.n || a.dim != b.dim)
    throw std::invalid_argument("GradedMap sub: grading mismatch");
  GradedMap g;
  g.n = a.n;
  g.dim = a.dim;
  for (const auto& [src, blk] : a.blocks) {
    const auto& other = b.at(src);
    if (!(blk.first == other.first))
      throw std::invalid_argument("GradedMap sub: target mismatch");
    g.blocks[src] = {blk.first, Mat(blk.second - other.second)};
  }
  return g;
}

inline bool graded_is_zero(const GradedMap& g) {
  for (const auto& [src, blk] : g.blocks)
    if (!mat_is_zero(blk.second)) return false;
  return true;
}

template <class Fn>
GradedMap graded_map_entries(const GradedMap& g, Fn&& fn) {
  GradedMap r;
  r.n = g.n;
  r.dim = g.dim;
  for (const auto& [src, blk] : g.blocks)
    r.blocks[src] = {blk.first, mat_map(blk.second, fn)};
  return r;
}

}  // namespace braidrep
