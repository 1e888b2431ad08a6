#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braidrep/verify.hpp"

using namespace braidrep;

TEST_CASE("poly JSON schema and round trip") {
  auto vs = make_varset({"s", "t"});
  auto p = LaurentPoly::var(vs, "s", 2) * LaurentPoly::var(vs, "t", -1) -
           LaurentPoly(3);
  json j = poly_to_json(p);
  CHECK(j["vars"] == json::array({"s", "t"}));
  REQUIRE(j["terms"].size() == 2);
  // Canonical order: ascending lexicographic on exponent vectors.
  CHECK(j["terms"][0]["exps"] == json::array({0, 0}));
  CHECK(j["terms"][0]["coeff"] == "-3");
  CHECK(j["terms"][1]["exps"] == json::array({2, -1}));
  CHECK(j["terms"][1]["coeff"] == "1");
  CHECK(poly_from_json(j) == p);

  CHECK(poly_to_json(LaurentPoly::zero(vs))["terms"].empty());
}

TEST_CASE("matrix exports are canonical") {
  Mat id = mat_identity(2);
  json j = matrix_to_json(id);
  CHECK(j["rows"] == 2);
  CHECK(j["cols"] == 2);
  CHECK(j["entries"][0][0]["terms"][0]["coeff"] == "1");
  CHECK(j["entries"][0][1]["terms"].empty());

  CHECK(matrix_to_latex(id) ==
        "\\begin{pmatrix}\n1 & 0 \\\\\n0 & 1\n\\end{pmatrix}\n");

  auto vs = make_varset({"s", "t"});
  auto p = LaurentPoly::var(vs, "s", 2) * LaurentPoly::var(vs, "t", -1);
  CHECK(poly_to_latex(p) == "s^{2} t^{-1}");
  CHECK(poly_to_latex(LaurentPoly(1) - p) == "1 - s^{2} t^{-1}");
  CHECK(latex_name("t12") == "t_{12}");
  CHECK(latex_name("q") == "q");

  Mat m = mat_zero(1, 2);
  m(0, 0) = p;
  m(0, 1) = LaurentPoly(2);
  std::string csv = matrix_to_csv(m);
  CHECK(csv == "vars,s,t\n1,1,1,2,-1\n1,2,2,0,0\n");

  // Byte-stable output for identical inputs.
  CHECK(export_matrix(m, "json") == export_matrix(m, "json"));
  CHECK(export_matrix(m, "latex") == export_matrix(m, "latex"));
  CHECK_THROWS(export_matrix(m, "txt"));
}

TEST_CASE("displayed L1 renders as a pmatrix") {
  Mat l1 = lawrence_uncolored(3, 2, 1);
  std::string tex = matrix_to_latex(l1);
  CHECK(tex ==
        "\\begin{pmatrix}\n"
        "s^{2} t^{-1} & -s^{2} t^{-1} - s^{2} & s^{2} \\\\\n"
        "0 & -s & s \\\\\n"
        "0 & 0 & 1\n"
        "\\end{pmatrix}\n");
}

TEST_CASE("graded map JSON") {
  GradedMap g = induced_gassner(BraidWord(2, {{1, 1}}));
  json j = graded_to_json(g);
  CHECK(j["n"] == 2);
  REQUIRE(j["blocks"].size() == 2);
  CHECK(j["blocks"][0]["src"] == json::array({1, 2}));
  CHECK(j["blocks"][0]["dst"] == json::array({2, 1}));
  CHECK(j["blocks"][0]["matrix"]["rows"] == 2);
}

TEST_CASE("reports are deterministic and suites pass") {
  SuiteParams p;
  p.seed = 42;
  auto r1 = run_suite("ring-axioms", p);
  auto r2 = run_suite("ring-axioms", p);
  CHECK(r1.ok());
  CHECK(report_to_json(r1).dump(2) == report_to_json(r2).dump(2));
  CHECK(r1.cases > 0);

  CHECK_THROWS(run_suite("no-such-suite"));
}

TEST_CASE("small-bound suite smoke runs") {
  SuiteParams p;
  p.seed = 7;
  p.max_n = 3;
  p.max_m = 2;
  p.cases = 3;
  for (const auto& name : suite_names()) {
    auto r = run_suite(name, p);
    INFO(name);
    CHECK(r.ok());
  }
}
