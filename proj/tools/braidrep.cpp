// braidrep: braid-group representation matrices over exact Laurent rings.
//
//   braidrep rep <family> --n N [--m M] --braid "1 2 -1" [--colored]
//            [--induced] [--specialize ...] [--format json|latex|csv-monomial]
//   braidrep verify <suite> [--seed S] [--max-n N] [--max-m M] [--cases C]
//
// Families: gassner (over-strand Gamma; --induced for the graded map),
// fox-gassner (Fox-calculus Magnus matrix; --reduced for the (n-1)x(n-1)
// quotient), quant (graded, --sign +-1), bkl and lawrence (uncolored word
// products; --colored for the over-strand-colored versions).
#include <CLI11.hpp>
#include <iostream>

#include "braidrep/verify.hpp"

using namespace braidrep;

namespace {

// --specialize accepts either a single variable name (collapse every indexed
// family variable to it) or comma-separated assignments var=value with value
// a variable of the same ring or an integer, e.g. "t4=1".
Mat apply_specialize(const Mat& m, const std::string& spec) {
  const VarSetPtr* vsp = nullptr;
  for (int r = 0; r < m.rows() && !vsp; ++r)
    for (int c = 0; c < m.cols() && !vsp; ++c)
      if (m(r, c).vars()) vsp = &m(r, c).vars();
  if (!vsp) return m;
  const VarSetPtr& vs = *vsp;
  std::vector<std::string> images;
  if (spec.find('=') == std::string::npos) {
    for (const auto& name : vs->names) {
      bool indexed = name.size() > 1 && name.back() >= '0' && name.back() <= '9';
      images.push_back(indexed ? spec : name);
    }
    std::vector<std::string> target_names;
    for (const auto& img : images)
      if (std::find(target_names.begin(), target_names.end(), img) ==
          target_names.end())
        target_names.push_back(img);
    return mat_substitute_names(m, make_varset(target_names), images);
  }
  for (const auto& name : vs->names) images.push_back(name);
  std::string rest = spec;
  while (!rest.empty()) {
    size_t comma = rest.find(',');
    std::string item = rest.substr(0, comma);
    rest = comma == std::string::npos ? "" : rest.substr(comma + 1);
    size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("--specialize: expected var=value in " + item);
    images[vs->index_of(item.substr(0, eq))] = item.substr(eq + 1);
  }
  return mat_substitute_names(m, vs, images);
}

Mat uncolored_word_product(const BraidWord& w, int m_level, bool lawrence_family) {
  int dim = lawrence_family
                ? static_cast<int>(enumerate_code_sequences(w.n, m_level).size())
                : bkl_dim(w.n);
  Mat out = mat_identity(dim);
  for (const auto& l : w.letters) {
    Mat blk = lawrence_family ? lawrence_uncolored(w.n, m_level, l.index)
                              : bkl_uncolored(w.n, l.index);
    out = out * (l.sign > 0 ? blk : mat_inverse_unit_det(blk));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Colored braid group representations over exact Laurent rings"};
  app.require_subcommand(1);

  // --- rep ---------------------------------------------------------------
  auto* rep = app.add_subcommand("rep", "Compute a representation matrix");
  std::string family, braid_text, format = "json", specialize;
  int n = 0, m_level = 2, sign = kQuantSign;
  bool colored = false, induced = false, reduced = false;
  rep->add_option("family", family, "gassner|fox-gassner|quant|bkl|lawrence")
      ->required();
  rep->add_option("--n", n, "strand count")->required();
  rep->add_option("--m", m_level, "Lawrence level (lawrence family)");
  rep->add_option("--braid", braid_text, "word as signed generator indices")
      ->required();
  rep->add_flag("--colored", colored, "over-strand-colored product (bkl, lawrence)");
  rep->add_flag("--induced", induced, "emit the permutation-graded map (gassner)");
  rep->add_flag("--reduced", reduced, "reduced (n-1)x(n-1) matrix (fox-gassner)");
  rep->add_option("--sign", sign, "off-diagonal sign for quant (+1 pinned)");
  rep->add_option("--specialize", specialize,
                  "variable collapse (\"t\") or assignments (\"t4=1,...\")");
  rep->add_option("--format", format, "json|latex|csv-monomial");

  // `fox gassner ...` spelling for the Fox-calculus matrix.
  auto* fox_cmd = app.add_subcommand("fox", "Fox-calculus operations");
  auto* fox_gassner = fox_cmd->add_subcommand("gassner", "Magnus/Gassner matrix");
  std::string fg_braid;
  int fg_n = 0;
  bool fg_reduced = false;
  std::string fg_format = "json";
  fox_gassner->add_option("--n", fg_n)->required();
  fox_gassner->add_option("--braid", fg_braid)->required();
  fox_gassner->add_flag("--reduced", fg_reduced);
  fox_gassner->add_option("--format", fg_format);

  // --- verify ------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "Run an identity suite");
  std::string suite;
  SuiteParams params;
  int seed_opt = 42;
  verify->add_option("suite", suite, "one of the named suites")->required();
  verify->add_option("--seed", seed_opt, "seed for randomized cases");
  verify->add_option("--max-n", params.max_n, "strand bound");
  verify->add_option("--max-m", params.max_m, "Lawrence level bound");
  verify->add_option("--cases", params.cases, "randomized case count");

  CLI11_PARSE(app, argc, argv);

  try {
    if (rep->parsed()) {
      BraidWord w = parse_braid(braid_text, n);
      Mat out;
      if (family == "gassner") {
        if (induced) {
          std::cout << graded_to_json(induced_gassner(w)).dump(2) << "\n";
          return 0;
        }
        out = gamma_matrix(w);
      } else if (family == "fox-gassner") {
        out = reduced ? reduced_magnus_matrix(w) : magnus_matrix(w);
      } else if (family == "quant") {
        std::cout << graded_to_json(quant(w, sign)).dump(2) << "\n";
        return 0;
      } else if (family == "bkl") {
        out = colored ? cbkl(w) : uncolored_word_product(w, 0, false);
      } else if (family == "lawrence") {
        out = colored ? claw(w, m_level) : uncolored_word_product(w, m_level, true);
      } else {
        std::cerr << "unknown family: " << family << "\n";
        return 2;
      }
      if (!specialize.empty()) out = apply_specialize(out, specialize);
      std::cout << export_matrix(out, format);
      return 0;
    }
    if (fox_gassner->parsed()) {
      BraidWord w = parse_braid(fg_braid, fg_n);
      Mat out = fg_reduced ? reduced_magnus_matrix(w) : magnus_matrix(w);
      std::cout << export_matrix(out, fg_format);
      return 0;
    }
    if (verify->parsed()) {
      params.seed = static_cast<uint64_t>(seed_opt);
      VerificationReport r = run_suite(suite, params);
      std::cout << report_to_json(r).dump(2) << "\n";
      std::cerr << "suite " << r.suite << ": " << r.cases << " cases, "
                << r.failures.size() << " failures, " << r.wall_ms << " ms\n";
      return r.ok() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
