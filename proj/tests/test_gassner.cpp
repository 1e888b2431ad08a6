#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "braidrep/gassner.hpp"

using namespace braidrep;

namespace {

BraidWord random_pure_word(int n, std::mt19937_64& rng, int min_f = 2, int max_f = 4) {
  std::uniform_int_distribution<int> fcount(min_f, max_f), coin(0, 1);
  std::uniform_int_distribution<int> rd(1, n - 1);
  BraidWord w(n, {});
  int k = fcount(rng);
  for (int f = 0; f < k; ++f) {
    int r = rd(rng);
    std::uniform_int_distribution<int> sd(r + 1, n);
    BraidWord g = pure_generator(n, r, sd(rng));
    w = coin(rng) ? w * g : w * g.inverse();
  }
  return w;
}

BraidWord random_word(int n, std::mt19937_64& rng, int max_len = 8) {
  std::uniform_int_distribution<int> len(0, max_len), idx(1, n - 1), coin(0, 1);
  std::vector<BraidLetter> ls;
  for (int i = len(rng); i-- > 0;) ls.push_back({idx(rng), coin(rng) ? 1 : -1});
  return BraidWord(n, ls);
}

}  // namespace

TEST_CASE("burau block") {
  auto tv = make_varset({"t"});
  auto t = LaurentPoly::var(tv, "t");
  Mat u = burau_block(2, 1, t);
  CHECK(u(0, 0) == LaurentPoly(1) - t);
  CHECK(u(0, 1) == LaurentPoly(1));
  CHECK(u(1, 0) == t);
  CHECK(u(1, 1).is_zero());

  Mat u3 = burau_block(3, 2, t);
  CHECK(u3(0, 0) == LaurentPoly(1));
  CHECK(u3(0, 1).is_zero());
  CHECK(u3(1, 1) == LaurentPoly(1) - t);
  CHECK(u3(2, 1) == t);

  auto [adj, det] = adjugate_det(u);
  CHECK(det == -t);
  CHECK(mat_eq(burau_block(4, 2, t) * burau_block_inverse(4, 2, t), mat_identity(4)));
  CHECK_THROWS(burau_block(3, 3, t));
}

TEST_CASE("gamma of an inverse pair is the identity") {
  CHECK(mat_eq(gamma_matrix(BraidWord(3, {{2, 1}, {2, -1}})), mat_identity(3)));
  CHECK(mat_eq(gamma_matrix(BraidWord(3, {{2, 1}, {2, -1}}), OverConvention::LowerSlot),
               mat_identity(3)));
}

TEST_CASE("gamma of A_{1,2} uses two distinct colors") {
  auto vs = indexed_varset("t", 2);
  auto t1 = LaurentPoly::var(vs, "t1");
  auto t2 = LaurentPoly::var(vs, "t2");
  Mat g = gamma_matrix(pure_generator(2, 1, 2), vs);
  CHECK(mat_eq(g, burau_block(2, 1, t1) * burau_block(2, 1, t2)));
  // With the lower-slot labels the factors come in the other order.
  Mat gl = gamma_matrix(pure_generator(2, 1, 2), vs, OverConvention::LowerSlot);
  CHECK(mat_eq(gl, burau_block(2, 1, t2) * burau_block(2, 1, t1)));
  CHECK(!mat_eq(g, gl));
}

TEST_CASE("gamma specializes to Burau under t_i -> t") {
  std::mt19937_64 rng(61);
  auto tv = make_varset({"t"});
  auto t = LaurentPoly::var(tv, "t");
  std::vector<LaurentPoly> all_t(3, t);
  for (int trial = 0; trial < 25; ++trial) {
    BraidWord w = random_word(3, rng);
    Mat rhs = mat_identity(3);
    for (const auto& l : w.letters)
      rhs = rhs * (l.sign > 0 ? burau_block(3, l.index, t)
                              : burau_block_inverse(3, l.index, t));
    for (auto conv : {OverConvention::UpperSlot, OverConvention::LowerSlot})
      CHECK(mat_eq(mat_substitute(gamma_matrix(w, conv), tv, all_t), rhs));
  }
}

TEST_CASE("induced gassner generator block at the identity grading") {
  // sigma_1 at tau = () in B_2 uses the variable t_{tau^{-1}(2)} = t_2.
  auto vs = indexed_varset("t", 2);
  GradedMap g = induced_gassner(BraidWord(2, {{1, 1}}), vs, all_perms(2));
  const auto& [dst, m] = g.at(Perm(2));
  CHECK(dst == transposition(2, 1));
  CHECK(mat_eq(m, burau_block(2, 1, LaurentPoly::var(vs, "t2"))));
}

TEST_CASE("induced gassner of the identity word") {
  GradedMap g = induced_gassner(BraidWord(3, {}));
  CHECK(graded_eq(g, graded_identity(3, 3, all_perms(3))));
}

TEST_CASE("for pure words the identity block of the induced map is gamma") {
  std::mt19937_64 rng(67);
  for (int n : {2, 3, 4}) {
    auto vs = indexed_varset("t", n);
    for (int trial = 0; trial < 8; ++trial) {
      BraidWord w = random_pure_word(n, rng);
      GradedMap g = induced_gassner(w, vs, {Perm(n)});
      const auto& [dst, m] = g.at(Perm(n));
      CHECK(dst.is_identity());
      CHECK(mat_eq(m, gamma_matrix(w, vs, OverConvention::UpperSlot)));
    }
  }
  // The lower-slot labeling does not restrict to the induced block.
  auto vs = indexed_varset("t", 2);
  GradedMap g = induced_gassner(pure_generator(2, 1, 2), vs, {Perm(2)});
  CHECK(!mat_eq(g.at(Perm(2)).second,
                gamma_matrix(pure_generator(2, 1, 2), vs, OverConvention::LowerSlot)));
}

TEST_CASE("induced gassner is multiplicative") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    BraidWord u = random_word(3, rng, 5), v = random_word(3, rng, 5);
    GradedMap gu = induced_gassner(u), gv = induced_gassner(v);
    CHECK(graded_eq(induced_gassner(u * v), compose(gu, gv)));
  }
  // Word times its inverse is the graded identity.
  for (int trial = 0; trial < 6; ++trial) {
    BraidWord u = random_word(3, rng, 5);
    CHECK(graded_eq(induced_gassner(u * u.inverse()),
                    graded_identity(3, 3, all_perms(3))));
  }
  // Composing with the identity map changes nothing.
  BraidWord w = random_word(3, rng, 5);
  CHECK(graded_eq(compose(induced_gassner(w), graded_identity(3, 3, all_perms(3))),
                  induced_gassner(w)));
}

TEST_CASE("induced gassner satisfies the braid relations") {
  for (int n = 3; n <= 4; ++n) {
    for (int i = 1; i + 1 <= n - 1; ++i) {
      BraidWord lhs(n, {{i, 1}, {i + 1, 1}, {i, 1}});
      BraidWord rhs(n, {{i + 1, 1}, {i, 1}, {i + 1, 1}});
      CHECK(graded_eq(induced_gassner(lhs), induced_gassner(rhs)));
    }
    for (int i = 1; i <= n - 1; ++i)
      for (int j = i + 2; j <= n - 1; ++j) {
        BraidWord lhs(n, {{i, 1}, {j, 1}});
        BraidWord rhs(n, {{j, 1}, {i, 1}});
        CHECK(graded_eq(induced_gassner(lhs), induced_gassner(rhs)));
      }
  }
}

TEST_CASE("purity gate") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 30; ++trial) {
    BraidWord w = random_word(4, rng);
    GradedMap g = induced_gassner(w, indexed_varset("t", 4), {Perm(4)});
    CHECK((g.at(Perm(4)).first.is_identity()) == is_pure(w));
  }
}

TEST_CASE("Fadell-Neuwirth for gamma") {
  std::mt19937_64 rng(79);
  for (int n : {3, 4}) {
    auto vs = indexed_varset("t", n);
    auto vs1 = indexed_varset("t", n - 1);
    std::vector<LaurentPoly> images;
    for (int i = 0; i < n - 1; ++i) images.push_back(LaurentPoly::var(vs1, i));
    images.push_back(LaurentPoly::constant(vs1, BigInt(1)));
    for (int trial = 0; trial < 10; ++trial) {
      BraidWord w = random_pure_word(n, rng);
      Mat big = mat_substitute(gamma_matrix(w, vs), vs1, images);
      CHECK(mat_eq(mat_delete_last_row_col(big),
                   gamma_matrix(forget_last_strand(w), vs1)));
    }
  }

  // The lower-slot labeling fails this square already on A_{1,3}: the
  // crossing where strand 1 passes over strand 3 keeps its color t_1 after
  // t_3 -> 1 although the forgotten word is empty.
  auto vs = indexed_varset("t", 3);
  auto vs1 = indexed_varset("t", 2);
  std::vector<LaurentPoly> images = {LaurentPoly::var(vs1, 0), LaurentPoly::var(vs1, 1),
                                     LaurentPoly::constant(vs1, BigInt(1))};
  Mat bad = mat_substitute(
      gamma_matrix(pure_generator(3, 1, 3), vs, OverConvention::LowerSlot), vs1, images);
  CHECK(!mat_eq(mat_delete_last_row_col(bad), mat_identity(2)));
}

TEST_CASE("gamma is multiplicative on pure words") {
  std::mt19937_64 rng(83);
  auto vs = indexed_varset("t", 4);
  for (int trial = 0; trial < 10; ++trial) {
    BraidWord u = random_pure_word(4, rng), v = random_pure_word(4, rng);
    CHECK(mat_eq(gamma_matrix(u * v, vs), gamma_matrix(u, vs) * gamma_matrix(v, vs)));
  }
}
