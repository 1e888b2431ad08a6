// Verification driver: every identity suite the library asserts about the
// representations, with deterministic seeded sampling and exact residual
// reporting (nonzero entry counts and term counts, never summaries).
#pragma once

#include <chrono>
#include <random>

#include "braidrep/bkl.hpp"
#include "braidrep/fox.hpp"
#include "braidrep/lawrence.hpp"
#include "braidrep/quantum.hpp"
#include "braidrep/serialize.hpp"

namespace braidrep {

struct FailureRecord {
  std::string case_id;
  int nonzero_entries = 0;
  size_t first_term_count = 0;
};

struct VerificationReport {
  std::string suite;
  uint64_t seed = 0;
  std::vector<std::pair<std::string, int>> params;
  int cases = 0;
  std::vector<FailureRecord> failures;
  double wall_ms = 0;
  bool ok() const { return failures.empty(); }
};

inline json report_to_json(const VerificationReport& r) {
  json j;
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  j["params"] = json::object();
  for (const auto& [k, v] : r.params) j["params"][k] = v;
  j["cases"] = r.cases;
  j["failures"] = json::array();
  for (const auto& f : r.failures) {
    json jf;
    jf["case"] = f.case_id;
    jf["nonzero"] = f.nonzero_entries;
    jf["first_term_count"] = f.first_term_count;
    j["failures"].push_back(jf);
  }
  return j;
}

namespace detail {

struct SuiteRunner {
  VerificationReport rep;

  explicit SuiteRunner(std::string name, uint64_t seed) {
    rep.suite = std::move(name);
    rep.seed = seed;
  }

  void residual_matrix(const std::string& id, const Mat& residual) {
    ++rep.cases;
    if (!mat_is_zero(residual))
      rep.failures.push_back(
          {id, mat_nonzero_count(residual), mat_first_nonzero_term_count(residual)});
  }
  void equal_matrices(const std::string& id, const Mat& a, const Mat& b) {
    residual_matrix(id, Mat(a - b));
  }
  void residual_graded(const std::string& id, const GradedMap& residual) {
    ++rep.cases;
    for (const auto& [src, blk] : residual.blocks) {
      if (!mat_is_zero(blk.second)) {
        rep.failures.push_back({id, mat_nonzero_count(blk.second),
                                mat_first_nonzero_term_count(blk.second)});
        return;
      }
    }
  }
  void equal_graded(const std::string& id, const GradedMap& a, const GradedMap& b) {
    residual_graded(id, graded_sub(a, b));
  }
  void residual_poly(const std::string& id, const LaurentPoly& p) {
    ++rep.cases;
    if (!p.is_zero()) rep.failures.push_back({id, 1, p.term_count()});
  }
  void expect(const std::string& id, bool ok) {
    ++rep.cases;
    if (!ok) rep.failures.push_back({id, 1, 0});
  }
};

inline BraidWord sample_pure_word(int n, std::mt19937_64& rng, int min_f = 3,
                                  int max_f = 8) {
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

inline BraidWord sample_word(int n, std::mt19937_64& rng, int max_len = 10) {
  std::uniform_int_distribution<int> len(0, max_len), idx(1, n - 1), coin(0, 1);
  std::vector<BraidLetter> ls;
  for (int i = len(rng); i-- > 0;) ls.push_back({idx(rng), coin(rng) ? 1 : -1});
  return BraidWord(n, ls);
}

inline LaurentPoly sample_poly(const VarSetPtr& vs, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nterms(0, 4), expd(-3, 3), coeffd(-9, 9);
  LaurentPoly p = LaurentPoly::zero(vs);
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    std::vector<int> e(vs->size());
    for (auto& x : e) x = expd(rng);
    p += LaurentPoly::monomial(vs, e, BigInt(coeffd(rng)));
  }
  return p;
}

inline VerificationReport run_ring_axioms(uint64_t seed) {
  SuiteRunner s("ring-axioms", seed);
  std::mt19937_64 rng(seed);
  auto vs = indexed_varset("t", 3);
  auto sv = indexed_varset("s", 3);
  std::vector<LaurentPoly> t_to_s2;
  for (int i = 0; i < 3; ++i) t_to_s2.push_back(LaurentPoly::var(sv, i, 2));
  for (int trial = 0; trial < 80; ++trial) {
    auto a = sample_poly(vs, rng), b = sample_poly(vs, rng), c = sample_poly(vs, rng);
    std::string id = "triple-" + std::to_string(trial);
    s.residual_poly(id + "-assoc", (a + b) + c - (a + (b + c)));
    s.residual_poly(id + "-comm", a * b - b * a);
    s.residual_poly(id + "-mulassoc", (a * b) * c - a * (b * c));
    s.residual_poly(id + "-distr", a * (b + c) - (a * b + a * c));
    s.residual_poly(id + "-unit", a * LaurentPoly(1) - a);
    s.residual_poly(id + "-hom", (a * b).substitute(sv, t_to_s2) -
                                     a.substitute(sv, t_to_s2) * b.substitute(sv, t_to_s2));
  }
  auto tv = make_varset({"t"});
  auto t = LaurentPoly::var(tv, "t");
  for (int k = 2; k <= 8; ++k)
    for (int l = 1; l < k; ++l)
      s.residual_poly("pascal-" + std::to_string(k) + "-" + std::to_string(l),
                      t_binomial(k, l, t) - t_binomial(k - 1, l - 1, t) -
                          pow(t, l) * t_binomial(k - 1, l, t));
  for (int nsum = 0; nsum <= 6; ++nsum)
    for (int i = 0; i <= nsum; ++i)
      for (int j = 0; i + j <= nsum; ++j)
        s.residual_poly("trinom-" + std::to_string(nsum) + "-" + std::to_string(i) +
                            "-" + std::to_string(j),
                        t_trinomial(nsum, i, j, nsum - i - j, t) -
                            t_binomial(nsum, i, t) * t_binomial(nsum - i, j, t));
  return s.rep;
}

inline VerificationReport run_braid_relations_gassner(int max_n) {
  SuiteRunner s("braid-relations-gassner", 0);
  s.rep.params.push_back({"max_n", max_n});
  for (int n = 3; n <= max_n; ++n) {
    auto vs = indexed_varset("t", n);
    auto sources = all_perms(n);
    for (int i = 1; i + 1 <= n - 1; ++i) {
      BraidWord lhs(n, {{i, 1}, {i + 1, 1}, {i, 1}});
      BraidWord rhs(n, {{i + 1, 1}, {i, 1}, {i + 1, 1}});
      s.equal_graded("gassner-braid-n" + std::to_string(n) + "-i" + std::to_string(i),
                     induced_gassner(lhs, vs, sources), induced_gassner(rhs, vs, sources));
    }
    for (int i = 1; i <= n - 1; ++i)
      for (int j = i + 2; j <= n - 1; ++j) {
        BraidWord lhs(n, {{i, 1}, {j, 1}});
        BraidWord rhs(n, {{j, 1}, {i, 1}});
        s.equal_graded("gassner-far-n" + std::to_string(n) + "-" + std::to_string(i) +
                           "-" + std::to_string(j),
                       induced_gassner(lhs, vs, sources), induced_gassner(rhs, vs, sources));
      }
  }
  return s.rep;
}

inline VerificationReport run_conjugation(int max_n, uint64_t seed) {
  SuiteRunner s("conjugation", seed);
  s.rep.params.push_back({"max_n", max_n});
  for (int n = 2; n <= max_n; ++n) {
    for (int k = 1; k <= n - 1; ++k) {
      BraidWord w(n, {{k, 1}});
      std::string id = "n" + std::to_string(n) + "-sigma" + std::to_string(k);
      s.residual_graded("conj-plus-" + id, check_conjugation(w, 1));
      s.expect("conj-minus-fails-" + id, !graded_is_zero(check_conjugation(w, -1)));
    }
  }
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 3; ++trial) {
    BraidWord w = sample_pure_word(3, rng);
    s.residual_graded("conj-pure-word-" + std::to_string(trial),
                      check_conjugation(w, kQuantSign));
  }
  return s.rep;
}

inline VerificationReport run_bkl_kernel(int max_n) {
  SuiteRunner s("bkl-kernel", 0);
  s.rep.params.push_back({"max_n", max_n});
  for (int n = 2; n <= max_n; ++n) {
    auto vs = bkl_ring(n);
    Mat b = boundary_matrix(n, vs);
    for (int j = 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        s.residual_matrix("kernel-n" + std::to_string(n) + "-v" + std::to_string(j) +
                              std::to_string(k),
                          Mat(b * kernel_vector(n, j, k, vs)));
  }
  return s.rep;
}

inline VerificationReport run_bkl_relations(int max_n) {
  SuiteRunner s("bkl-relations", 0);
  s.rep.params.push_back({"max_n", max_n});
  for (int n = 3; n <= max_n; ++n) {
    auto vs = bkl_ring(n);
    auto a = LaurentPoly::var(vs, 0), b = LaurentPoly::var(vs, 1);
    auto t = LaurentPoly::var(vs, n);
    for (int i = 1; i + 1 <= n - 1; ++i) {
      std::string id = "bkl-mixed-n" + std::to_string(n) + "-i" + std::to_string(i);
      s.equal_matrices(id,
                       bkl_sigma_matrix(n, i + 1, a, t) * bkl_sigma_matrix(n, i, a, t) *
                           bkl_sigma_matrix(n, i + 1, b, t),
                       bkl_sigma_matrix(n, i, b, t) * bkl_sigma_matrix(n, i + 1, a, t) *
                           bkl_sigma_matrix(n, i, a, t));
      BraidWord wl(n, {{i + 1, 1}, {i, 1}, {i + 1, 1}});
      BraidWord wr(n, {{i, 1}, {i + 1, 1}, {i, 1}});
      s.equal_matrices(id + "-lower", cbkl(wl, vs, OverConvention::LowerSlot),
                       cbkl(wr, vs, OverConvention::LowerSlot));
      s.expect(id + "-upper-fails",
               !mat_eq(cbkl(wl, vs, OverConvention::UpperSlot),
                       cbkl(wr, vs, OverConvention::UpperSlot)));
    }
    for (int i = 1; i <= n - 1; ++i)
      for (int j = i + 2; j <= n - 1; ++j)
        s.equal_matrices("bkl-far-n" + std::to_string(n) + "-" + std::to_string(i) +
                             "-" + std::to_string(j),
                         bkl_sigma_matrix(n, i, a, t) * bkl_sigma_matrix(n, j, b, t),
                         bkl_sigma_matrix(n, j, b, t) * bkl_sigma_matrix(n, i, a, t));
  }
  return s.rep;
}

inline VerificationReport run_lawrence_relations(int max_n, int max_m) {
  SuiteRunner s("lawrence-relations", 0);
  s.rep.params.push_back({"max_n", max_n});
  s.rep.params.push_back({"max_m", max_m});
  for (int n = 3; n <= max_n; ++n)
    for (int m = 0; m <= max_m; ++m) {
      for (int i = 1; i + 1 <= n - 1; ++i) {
        Mat a = lawrence_uncolored(n, m, i), b = lawrence_uncolored(n, m, i + 1);
        s.equal_matrices("lawrence-braid-n" + std::to_string(n) + "-m" +
                             std::to_string(m) + "-i" + std::to_string(i),
                         a * b * a, b * a * b);
      }
      for (int i = 1; i + 2 <= n - 1; ++i) {
        Mat a = lawrence_uncolored(n, m, i), b = lawrence_uncolored(n, m, i + 2);
        s.equal_matrices("lawrence-far-n" + std::to_string(n) + "-m" +
                             std::to_string(m) + "-i" + std::to_string(i),
                         a * b, b * a);
      }
    }
  for (int n = 3; n <= std::min(4, max_n); ++n) {
    auto vs = lawrence_ring(n);
    auto a = LaurentPoly::var(vs, 0), b = LaurentPoly::var(vs, 1);
    auto t = LaurentPoly::var(vs, n);
    for (int m = 0; m <= max_m; ++m) {
      for (int i = 1; i + 1 <= n - 1; ++i)
        s.equal_matrices(
            "clawrence-mixed-n" + std::to_string(n) + "-m" + std::to_string(m) + "-i" +
                std::to_string(i),
            lawrence_sigma_matrix(n, m, i + 1, a, t) *
                lawrence_sigma_matrix(n, m, i, a, t) *
                lawrence_sigma_matrix(n, m, i + 1, b, t),
            lawrence_sigma_matrix(n, m, i, b, t) *
                lawrence_sigma_matrix(n, m, i + 1, a, t) *
                lawrence_sigma_matrix(n, m, i, a, t));
      for (int i = 1; i + 2 <= n - 1; ++i)
        s.equal_matrices(
            "clawrence-far-n" + std::to_string(n) + "-m" + std::to_string(m) + "-i" +
                std::to_string(i),
            lawrence_sigma_matrix(n, m, i, a, t) *
                lawrence_sigma_matrix(n, m, i + 2, b, t),
            lawrence_sigma_matrix(n, m, i + 2, b, t) *
                lawrence_sigma_matrix(n, m, i, a, t));
    }
  }
  return s.rep;
}

inline VerificationReport run_p_basis() {
  SuiteRunner s("p-basis", 0);
  auto vs = lawrence_uncolored_ring();
  auto sv = LaurentPoly::var(vs, "s");
  auto tv = LaurentPoly::var(vs, "t");
  auto tinv = LaurentPoly::var(vs, "t", -1);
  const LaurentPoly one(1);

  Mat e1 = mat_zero(3, 3);
  e1(0, 0) = sv * sv * tinv;
  e1(0, 1) = -(sv * sv) * (one + tinv);
  e1(0, 2) = sv * sv;
  e1(1, 1) = -sv;
  e1(1, 2) = sv;
  e1(2, 2) = one;
  s.equal_matrices("display-L1", lawrence_uncolored(3, 2, 1), e1);

  Mat e2 = mat_zero(3, 3);
  e2(0, 0) = one;
  e2(1, 0) = one;
  e2(2, 0) = one;
  e2(1, 1) = -sv;
  e2(2, 1) = -sv * (one + tinv);
  e2(2, 2) = sv * sv * tinv;
  s.equal_matrices("display-L2", lawrence_uncolored(3, 2, 2), e2);

  auto qvs = bkl_uncolored_ring();
  auto q = LaurentPoly::var(qvs, "q");
  auto t = LaurentPoly::var(qvs, "t");
  Mat f1 = mat_zero(3, 3);
  f1(0, 0) = q * q * t;
  f1(0, 2) = q * q - q;
  f1(1, 2) = q;
  f1(2, 1) = one;
  f1(2, 2) = one - q;
  s.equal_matrices("display-BKL1", bkl_uncolored(3, 1), f1);

  Mat f2 = mat_zero(3, 3);
  f2(0, 1) = q;
  f2(1, 0) = one;
  f2(1, 1) = one - q;
  f2(2, 1) = t * (q * q - q);
  f2(2, 2) = q * q * t;
  s.equal_matrices("display-BKL2", bkl_uncolored(3, 2), f2);

  s.expect("p-relation-1", p_relation_holds(1));
  s.expect("p-relation-2", p_relation_holds(2));

  Mat p = change_of_basis_p(vs);
  Vec f13 = fork13_in_code_sequences(vs);
  Mat diff = mat_zero(3, 1);
  for (int r = 0; r < 3; ++r) diff(r, 0) = p(r, 1) - f13(r);
  s.residual_matrix("fork13-column", diff);

  // The displayed colored three-strand relations.
  auto cvs = lawrence_ring(3);
  auto s1 = LaurentPoly::var(cvs, "s1"), s2 = LaurentPoly::var(cvs, "s2");
  auto ct = LaurentPoly::var(cvs, "t");
  s.equal_matrices("display-colored-L-relation",
                   lawrence_sigma_matrix(3, 2, 1, s2, ct) *
                       lawrence_sigma_matrix(3, 2, 2, s1, ct) *
                       lawrence_sigma_matrix(3, 2, 1, s1, ct),
                   lawrence_sigma_matrix(3, 2, 2, s1, ct) *
                       lawrence_sigma_matrix(3, 2, 1, s1, ct) *
                       lawrence_sigma_matrix(3, 2, 2, s2, ct));
  auto bvs = bkl_ring(3);
  auto q1 = LaurentPoly::var(bvs, "q1"), q2 = LaurentPoly::var(bvs, "q2");
  auto bt = LaurentPoly::var(bvs, "t");
  s.equal_matrices("display-colored-BKL-relation",
                   bkl_sigma_matrix(3, 1, q2, bt) * bkl_sigma_matrix(3, 2, q1, bt) *
                       bkl_sigma_matrix(3, 1, q1, bt),
                   bkl_sigma_matrix(3, 2, q1, bt) * bkl_sigma_matrix(3, 1, q1, bt) *
                       bkl_sigma_matrix(3, 2, q2, bt));
  return s.rep;
}

inline VerificationReport run_specializations(uint64_t seed) {
  SuiteRunner s("specializations", seed);
  std::mt19937_64 rng(seed);

  // cBKL with q_i -> q equals the uncolored BKL word product.
  for (int n : {3, 4}) {
    auto vs = bkl_ring(n);
    auto uvs = bkl_uncolored_ring();
    std::vector<std::string> names(n, "q");
    names.push_back("t");
    for (int trial = 0; trial < 4; ++trial) {
      BraidWord w = sample_word(n, rng, 6);
      Mat rhs = mat_identity(bkl_dim(n));
      for (const auto& l : w.letters) {
        Mat blk = bkl_uncolored(n, l.index);
        rhs = rhs * (l.sign > 0 ? blk : mat_inverse_unit_det(blk));
      }
      s.equal_matrices("cbkl-collapse-n" + std::to_string(n) + "-" + std::to_string(trial),
                       mat_substitute_names(cbkl(w, vs), uvs, names), rhs);
    }
  }

  // cL with s_i -> s equals the uncolored Lawrence word product.
  {
    int n = 3, m = 2;
    auto vs = lawrence_ring(n);
    auto uvs = lawrence_uncolored_ring();
    std::vector<std::string> names(n, "s");
    names.push_back("t");
    for (int trial = 0; trial < 4; ++trial) {
      BraidWord w = sample_word(n, rng, 6);
      Mat rhs = mat_identity(3);
      for (const auto& l : w.letters) {
        Mat blk = lawrence_uncolored(n, m, l.index);
        rhs = rhs * (l.sign > 0 ? blk : mat_inverse_unit_det(blk));
      }
      s.equal_matrices("claw-collapse-" + std::to_string(trial),
                       mat_substitute_names(claw(w, m, vs), uvs, names), rhs);
    }
  }

  // Gamma with t_i -> t equals the Burau word product.
  {
    int n = 4;
    auto vs = indexed_varset("t", n);
    auto tv = make_varset({"t"});
    auto t = LaurentPoly::var(tv, "t");
    std::vector<LaurentPoly> all_t(n, t);
    for (int trial = 0; trial < 6; ++trial) {
      BraidWord w = sample_word(n, rng, 8);
      Mat rhs = mat_identity(n);
      for (const auto& l : w.letters)
        rhs = rhs * (l.sign > 0 ? burau_block(n, l.index, t)
                                : burau_block_inverse(n, l.index, t));
      s.equal_matrices("gamma-collapse-" + std::to_string(trial),
                       mat_substitute(gamma_matrix(w, vs), tv, all_t), rhs);
    }
  }

  // Level-one Lawrence vs reduced Burau under the recorded dictionary.
  for (int n : {3, 4, 5}) {
    bool ok = true;
    try {
      auto dict = m1_burau_dictionary(n);
      ok = dict.transposed;  // recorded: transpose + t -> s + diagonal
    } catch (const std::exception&) {
      ok = false;
    }
    s.expect("m1-burau-dictionary-n" + std::to_string(n), ok);
  }
  return s.rep;
}

inline VerificationReport run_fadell_neuwirth(uint64_t seed, int cases) {
  SuiteRunner s("fadell-neuwirth", seed);
  s.rep.params.push_back({"cases", cases});
  std::mt19937_64 rng(seed);
  int n = 4;
  auto vs = indexed_varset("t", n);
  auto vs1 = indexed_varset("t", n - 1);
  std::vector<LaurentPoly> images;
  for (int i = 0; i < n - 1; ++i) images.push_back(LaurentPoly::var(vs1, i));
  images.push_back(LaurentPoly::constant(vs1, BigInt(1)));
  for (int trial = 0; trial < cases; ++trial) {
    BraidWord w = sample_pure_word(n, rng);
    Mat big = mat_substitute(gamma_matrix(w, vs), vs1, images);
    s.equal_matrices("gamma-fn-" + std::to_string(trial), mat_delete_last_row_col(big),
                     gamma_matrix(forget_last_strand(w), vs1));
  }
  // The magnus square, on short words (Artin images grow quickly).
  auto mvs = indexed_varset("t", 3);
  auto mvs1 = indexed_varset("t", 2);
  std::vector<LaurentPoly> mimages = {LaurentPoly::var(mvs1, 0), LaurentPoly::var(mvs1, 1),
                                      LaurentPoly::constant(mvs1, BigInt(1))};
  for (int trial = 0; trial < 3; ++trial) {
    BraidWord w = sample_pure_word(3, rng, 2, 3);
    Mat big = mat_substitute(magnus_matrix(w, mvs), mvs1, mimages);
    s.equal_matrices("magnus-fn-" + std::to_string(trial), mat_delete_last_row_col(big),
                     magnus_matrix(forget_last_strand(w), mvs1));
  }
  return s.rep;
}

inline VerificationReport run_pure_multiplicativity(uint64_t seed, int cases) {
  SuiteRunner s("pure-multiplicativity", seed);
  s.rep.params.push_back({"cases", cases});
  std::mt19937_64 rng(seed);
  int n = 4, m = 2;
  auto tvs = indexed_varset("t", n);
  auto qvs = bkl_ring(n);
  auto svs = lawrence_ring(n);
  for (int trial = 0; trial < cases; ++trial) {
    BraidWord u = sample_pure_word(n, rng), v = sample_pure_word(n, rng);
    std::string id = std::to_string(trial);
    // The right-hand products M(u) M(v) are evaluated by folding u's blocks
    // (with u's standalone over-strand labels) onto M(v); by associativity
    // this is the matrix product, computed one sparse block at a time.
    s.equal_matrices("gamma-mult-" + id, gamma_matrix(u * v, tvs),
                     gamma_apply(u, tvs, OverConvention::UpperSlot,
                                 gamma_matrix(v, tvs)));
    s.equal_matrices("cbkl-mult-" + id, cbkl(u * v, qvs),
                     cbkl_apply(u, qvs, OverConvention::LowerSlot, cbkl(v, qvs)));
    s.equal_matrices("claw-mult-" + id, claw(u * v, m, svs),
                     claw_apply(u, m, svs, OverConvention::LowerSlot, claw(v, m, svs)));
  }
  for (int trial = 0; trial < cases; ++trial) {
    BraidWord w = sample_word(n, rng, 10);
    GradedMap g = induced_gassner(w, tvs, {Perm(n)});
    s.expect("purity-gate-" + std::to_string(trial),
             g.at(Perm(n)).first.is_identity() == is_pure(w));
  }
  return s.rep;
}

}  // namespace detail

struct SuiteParams {
  uint64_t seed = 42;
  int max_n = 0;  // 0 = suite default
  int max_m = 0;
  int cases = 0;
};

inline VerificationReport run_suite(const std::string& name, SuiteParams p = {}) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  if (name == "ring-axioms") {
    rep = detail::run_ring_axioms(p.seed);
  } else if (name == "braid-relations-gassner") {
    rep = detail::run_braid_relations_gassner(p.max_n ? p.max_n : 5);
  } else if (name == "conjugation") {
    rep = detail::run_conjugation(p.max_n ? p.max_n : 4, p.seed);
  } else if (name == "bkl-kernel") {
    rep = detail::run_bkl_kernel(p.max_n ? p.max_n : 5);
  } else if (name == "bkl-relations") {
    rep = detail::run_bkl_relations(p.max_n ? p.max_n : 5);
  } else if (name == "lawrence-relations") {
    rep = detail::run_lawrence_relations(p.max_n ? p.max_n : 5, p.max_m ? p.max_m : 3);
  } else if (name == "p-basis") {
    rep = detail::run_p_basis();
  } else if (name == "specializations") {
    rep = detail::run_specializations(p.seed);
  } else if (name == "fadell-neuwirth") {
    rep = detail::run_fadell_neuwirth(p.seed, p.cases ? p.cases : 20);
  } else if (name == "pure-multiplicativity") {
    rep = detail::run_pure_multiplicativity(p.seed, p.cases ? p.cases : 50);
  } else {
    throw std::invalid_argument("run_suite: unknown suite " + name);
  }
  auto t1 = std::chrono::steady_clock::now();
  rep.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return rep;
}

inline std::vector<std::string> suite_names() {
  return {"ring-axioms",        "braid-relations-gassner",
          "conjugation",        "bkl-kernel",
          "bkl-relations",      "lawrence-relations",
          "p-basis",            "specializations",
          "fadell-neuwirth",    "pure-multiplicativity"};
}

}  // namespace braidrep
