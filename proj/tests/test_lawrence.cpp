#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "braidrep/lawrence.hpp"

using namespace braidrep;

namespace {

long long binom_ll(int a, int b) {
  if (b < 0 || b > a) return 0;
  long long r = 1;
  for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

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

}  // namespace

TEST_CASE("code sequence enumeration") {
  auto e32 = enumerate_code_sequences(3, 2);
  REQUIRE(e32.size() == 3);
  CHECK(e32[0] == CodeSequenceIndex{2, 0});
  CHECK(e32[1] == CodeSequenceIndex{1, 1});
  CHECK(e32[2] == CodeSequenceIndex{0, 2});

  CHECK(enumerate_code_sequences(4, 3).size() == 10);

  auto e2 = enumerate_code_sequences(2, 5);
  REQUIRE(e2.size() == 1);
  CHECK(e2[0] == CodeSequenceIndex{5});

  // |E_{n,m}| = C(n+m-2, m).
  for (int n = 2; n <= 8; ++n)
    for (int m = 0; m <= 8; ++m)
      CHECK(static_cast<long long>(enumerate_code_sequences(n, m).size()) ==
            binom_ll(n + m - 2, m));
}

TEST_CASE("displayed n=3 m=2 Lawrence matrices") {
  auto vs = lawrence_uncolored_ring();
  auto s = LaurentPoly::var(vs, "s");
  auto t = LaurentPoly::var(vs, "t");
  auto tinv = LaurentPoly::var(vs, "t", -1);
  const LaurentPoly one(1);

  Mat l1 = lawrence_uncolored(3, 2, 1);
  Mat e1 = mat_zero(3, 3);
  e1(0, 0) = s * s * tinv;
  e1(0, 1) = -(s * s) * (one + tinv);
  e1(0, 2) = s * s;
  e1(1, 1) = -s;
  e1(1, 2) = s;
  e1(2, 2) = one;
  CHECK(mat_eq(l1, e1));

  Mat l2 = lawrence_uncolored(3, 2, 2);
  Mat e2 = mat_zero(3, 3);
  e2(0, 0) = one;
  e2(1, 0) = one;
  e2(2, 0) = one;
  e2(1, 1) = -s;
  e2(2, 1) = -s * (one + tinv);
  e2(2, 2) = s * s * tinv;
  CHECK(mat_eq(l2, e2));
}

TEST_CASE("middle generator column for n=4") {
  // sigma_2 U(1,1,1) expanded by hand from the displayed double sum.
  int n = 4, m = 3;
  auto vs = lawrence_ring(n);
  auto s2 = LaurentPoly::var(vs, "s2");
  auto t = LaurentPoly::var(vs, "t");
  auto tinv = LaurentPoly::var(vs, "t", -1);
  const LaurentPoly one(1);
  Mat a = lawrence_sigma_matrix(n, m, 2, s2, t);
  auto basis = enumerate_code_sequences(n, m);
  int col = code_sequence_index(basis, {1, 1, 1});
  CHECK(a(code_sequence_index(basis, {1, 1, 1}), col) == -s2);
  CHECK(a(code_sequence_index(basis, {0, 2, 1}), col) == -s2 * (one + tinv));
  CHECK(a(code_sequence_index(basis, {1, 2, 0}), col) == -s2 * s2 * (one + tinv));
  CHECK(a(code_sequence_index(basis, {0, 3, 0}), col) ==
        -s2 * s2 * (one + tinv) * (one + tinv + tinv * tinv));
  // No other targets.
  CHECK(mat_nonzero_count(Mat(a.col(col))) == 4);

  // sigma_2 U(0,1,0) at m=1.
  Mat a1 = lawrence_sigma_matrix(n, 1, 2, s2, t);
  auto basis1 = enumerate_code_sequences(n, 1);
  int col1 = code_sequence_index(basis1, {0, 1, 0});
  CHECK(a1(col1, col1) == -s2);
}

TEST_CASE("braid relations for the uncolored Lawrence action") {
  for (int n = 3; n <= 4; ++n)
    for (int m = 0; m <= 3; ++m) {
      for (int i = 1; i + 1 <= n - 1; ++i) {
        Mat a = lawrence_uncolored(n, m, i), b = lawrence_uncolored(n, m, i + 1);
        CHECK(mat_eq(a * b * a, b * a * b));
      }
      for (int i = 1; i + 2 <= n - 1; ++i) {
        Mat a = lawrence_uncolored(n, m, i), b = lawrence_uncolored(n, m, i + 2);
        CHECK(mat_eq(a * b, b * a));
      }
    }
}

TEST_CASE("mixed-variable relations for the colored Lawrence action") {
  // L_{i+1}(a) L_i(a) L_{i+1}(b) = L_i(b) L_{i+1}(a) L_i(a), far commutation
  // with independent variables; over-strand products pin the lower-slot
  // convention exactly as for cBKL.
  for (int n = 3; n <= 4; ++n) {
    auto vs = lawrence_ring(n);
    auto a = LaurentPoly::var(vs, 0), b = LaurentPoly::var(vs, 1);
    auto t = LaurentPoly::var(vs, n);
    for (int m = 0; m <= 2; ++m) {
      for (int i = 1; i + 1 <= n - 1; ++i) {
        Mat lhs = lawrence_sigma_matrix(n, m, i + 1, a, t) *
                  lawrence_sigma_matrix(n, m, i, a, t) *
                  lawrence_sigma_matrix(n, m, i + 1, b, t);
        Mat rhs = lawrence_sigma_matrix(n, m, i, b, t) *
                  lawrence_sigma_matrix(n, m, i + 1, a, t) *
                  lawrence_sigma_matrix(n, m, i, a, t);
        CHECK(mat_eq(lhs, rhs));
      }
      for (int i = 1; i + 2 <= n - 1; ++i) {
        Mat lhs = lawrence_sigma_matrix(n, m, i, a, t) *
                  lawrence_sigma_matrix(n, m, i + 2, b, t);
        Mat rhs = lawrence_sigma_matrix(n, m, i + 2, b, t) *
                  lawrence_sigma_matrix(n, m, i, a, t);
        CHECK(mat_eq(lhs, rhs));
      }
    }
  }

  for (int i : {1, 2}) {
    BraidWord wl(4, {{i + 1, 1}, {i, 1}, {i + 1, 1}});
    BraidWord wr(4, {{i, 1}, {i + 1, 1}, {i, 1}});
    CHECK(mat_eq(claw(wl, 2, OverConvention::LowerSlot),
                 claw(wr, 2, OverConvention::LowerSlot)));
    CHECK(!mat_eq(claw(wl, 2, OverConvention::UpperSlot),
                  claw(wr, 2, OverConvention::UpperSlot)));
  }
}

TEST_CASE("displayed three-strand colored relation") {
  // L_1(s_2,t) L_2(s_1,t) L_1(s_1,t) = L_2(s_1,t) L_1(s_1,t) L_2(s_2,t).
  auto vs = lawrence_ring(3);
  auto s1 = LaurentPoly::var(vs, "s1"), s2 = LaurentPoly::var(vs, "s2");
  auto t = LaurentPoly::var(vs, "t");
  auto L1 = [&](const LaurentPoly& c) { return lawrence_sigma_matrix(3, 2, 1, c, t); };
  auto L2 = [&](const LaurentPoly& c) { return lawrence_sigma_matrix(3, 2, 2, c, t); };
  CHECK(mat_eq(L1(s2) * L2(s1) * L1(s1), L2(s1) * L1(s1) * L2(s2)));
}

TEST_CASE("claw basics") {
  CHECK(mat_eq(claw(BraidWord(3, {{1, 1}, {1, -1}}), 2), mat_identity(3)));
  CHECK(mat_eq(claw(BraidWord(3, {{2, -1}, {2, 1}}), 2), mat_identity(3)));

  // Specializing all s_i to s collapses to the uncolored word product.
  std::mt19937_64 rng(109);
  int n = 3, m = 2;
  auto vs = lawrence_ring(n);
  auto uvs = lawrence_uncolored_ring();
  std::vector<std::string> names(n, "s");
  names.push_back("t");
  std::uniform_int_distribution<int> len(0, 6), idx(1, n - 1), coin(0, 1);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<BraidLetter> ls;
    for (int i = len(rng); i-- > 0;) ls.push_back({idx(rng), coin(rng) ? 1 : -1});
    BraidWord w(n, ls);
    Mat lhs = mat_substitute_names(claw(w, m, vs), uvs, names);
    Mat rhs = mat_identity(3);
    for (const auto& l : w.letters) {
      Mat blk = lawrence_uncolored(n, m, l.index);
      rhs = rhs * (l.sign > 0 ? blk : mat_inverse_unit_det(blk));
    }
    CHECK(mat_eq(lhs, rhs));
  }
}

TEST_CASE("claw is multiplicative on pure words") {
  std::mt19937_64 rng(113);
  auto vs = lawrence_ring(4);
  for (int trial = 0; trial < 5; ++trial) {
    BraidWord u = random_pure_word(4, rng), v = random_pure_word(4, rng);
    CHECK(mat_eq(claw(u * v, 2, vs), claw(u, 2, vs) * claw(v, 2, vs)));
  }
}

TEST_CASE("graded action restricts to claw on pure words") {
  std::mt19937_64 rng(127);
  int n = 3, m = 2;
  auto vs = lawrence_ring(n);
  for (int trial = 0; trial < 4; ++trial) {
    BraidWord w = random_pure_word(n, rng);
    GradedMap g = induced_lawrence(w, m, vs, {Perm(n)});
    const auto& [dst, mat] = g.at(Perm(n));
    CHECK(dst.is_identity());
    CHECK(mat_eq(mat, claw(w, m, vs)));
  }
}

TEST_CASE("P relation and the fork decomposition column") {
  CHECK(p_relation_holds(1));
  CHECK(p_relation_holds(2));

  auto vs = lawrence_uncolored_ring();
  Mat p = change_of_basis_p(vs);
  Vec f13 = fork13_in_code_sequences(vs);
  for (int r = 0; r < 3; ++r) CHECK(p(r, 1) == f13(r));
}

TEST_CASE("level one matches reduced Burau under a recorded dictionary") {
  // Recorded: t -> s, transpose, conjugation by diag(s^{e_r}) with steps of 1.
  auto d3 = m1_burau_dictionary(3);
  CHECK(d3.transposed);
  REQUIRE(d3.exponents.size() == 2);
  CHECK(d3.exponents[0] - d3.exponents[1] == 1);

  auto d4 = m1_burau_dictionary(4);
  CHECK(d4.transposed);
  REQUIRE(d4.exponents.size() == 3);
  CHECK(d4.exponents == std::vector<int>{0, -1, -2});
}

TEST_CASE("generator actions preserve the level") {
  // All targets stay inside E_{n,m}; the basis lookup would throw otherwise.
  auto vs = lawrence_ring(4);
  auto t = LaurentPoly::var(vs, "t");
  for (int m = 0; m <= 3; ++m)
    for (int i = 1; i <= 3; ++i)
      CHECK_NOTHROW(lawrence_sigma_matrix(4, m, i, LaurentPoly::var(vs, i - 1), t));
}
