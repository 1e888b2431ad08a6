// Canonical serialization: JSON (schema below), LaTeX pmatrix rendering and
// a per-monomial CSV. Identical inputs produce byte-identical output; terms
// are emitted in the canonical (ascending lexicographic) order of the ring.
//
//   LaurentPoly: {"vars":[...],"terms":[{"coeff":"<int>","exps":[...]},...]}
//   Matrix:      {"rows":R,"cols":C,"entries":[[poly,...],...]}
//   GradedMap:   {"n":N,"blocks":[{"src":[...],"dst":[...],"matrix":M},...]}
//
// Permutations are serialized as 1-based image lists.
#pragma once

#include <json.hpp>

#include "braidrep/graded.hpp"

namespace braidrep {

using json = nlohmann::ordered_json;

inline json poly_to_json(const LaurentPoly& p) {
  json j;
  j["vars"] = json::array();
  if (p.vars())
    for (const auto& name : p.vars()->names) j["vars"].push_back(name);
  j["terms"] = json::array();
  for (const auto& t : p.terms()) {
    json term;
    term["coeff"] = t.coeff.to_string();
    term["exps"] = LaurentPoly::key_to_exps(t.key, p.nvars());
    j["terms"].push_back(term);
  }
  return j;
}

inline LaurentPoly poly_from_json(const json& j) {
  VarSetPtr vs;
  std::vector<std::string> names = j.at("vars").get<std::vector<std::string>>();
  if (!names.empty()) vs = make_varset(names);
  LaurentPoly p = vs ? LaurentPoly::zero(vs) : LaurentPoly();
  for (const auto& term : j.at("terms")) {
    BigInt c = BigInt::from_string(term.at("coeff").get<std::string>());
    std::vector<int> e = term.at("exps").get<std::vector<int>>();
    if (vs)
      p += LaurentPoly::monomial(vs, e, c);
    else
      p += LaurentPoly(c);
  }
  return p;
}

inline json matrix_to_json(const Mat& m) {
  json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(poly_to_json(m(r, c)));
    j["entries"].push_back(row);
  }
  return j;
}

inline json perm_to_json(const Perm& p) {
  json j = json::array();
  for (int i = 1; i <= p.size(); ++i) j.push_back(p.at1(i));
  return j;
}

inline json graded_to_json(const GradedMap& g) {
  json j;
  j["n"] = g.n;
  j["blocks"] = json::array();
  for (const auto& [src, blk] : g.blocks) {
    json b;
    b["src"] = perm_to_json(src);
    b["dst"] = perm_to_json(blk.first);
    b["matrix"] = matrix_to_json(blk.second);
    j["blocks"].push_back(b);
  }
  return j;
}

// LaTeX: names with a trailing number become subscripted (t1 -> t_{1}).
inline std::string latex_name(const std::string& name) {
  size_t i = name.size();
  while (i > 0 && name[i - 1] >= '0' && name[i - 1] <= '9') --i;
  if (i == name.size() || i == 0) return name;
  return name.substr(0, i) + "_{" + name.substr(i) + "}";
}

inline std::string poly_to_latex(const LaurentPoly& p) {
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
      vars += latex_name(p.vars()->names[i]);
      if (t.key[i] != 1) vars += "^{" + std::to_string(t.key[i]) + "}";
    }
    if (vars.empty())
      out += coeff.to_string();
    else
      out += (coeff.is_one() ? "" : coeff.to_string() + " ") + vars;
  }
  return out;
}

inline std::string matrix_to_latex(const Mat& m) {
  std::string out = "\\begin{pmatrix}\n";
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      out += poly_to_latex(m(r, c));
      if (c + 1 < m.cols()) out += " & ";
    }
    if (r + 1 < m.rows()) out += " \\\\";
    out += "\n";
  }
  out += "\\end{pmatrix}\n";
  return out;
}

// CSV with one line per stored monomial: row,col,coeff,e1,e2,...,ek after a
// header line naming the variables.
inline std::string matrix_to_csv(const Mat& m) {
  std::string out = "vars";
  const VarSetPtr* vs = nullptr;
  for (int r = 0; r < m.rows() && !vs; ++r)
    for (int c = 0; c < m.cols() && !vs; ++c)
      if (m(r, c).vars()) vs = &m(r, c).vars();
  size_t nvars = 0;
  if (vs) {
    for (const auto& name : (*vs)->names) out += "," + name;
    nvars = (*vs)->size();
  }
  out += "\n";
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      for (const auto& t : m(r, c).terms()) {
        out += std::to_string(r + 1) + "," + std::to_string(c + 1) + "," +
               t.coeff.to_string();
        for (size_t i = 0; i < nvars; ++i) out += "," + std::to_string(t.key[i]);
        out += "\n";
      }
  return out;
}

inline std::string export_matrix(const Mat& m, const std::string& format) {
  if (format == "json") return matrix_to_json(m).dump(2) + "\n";
  if (format == "latex") return matrix_to_latex(m);
  if (format == "csv-monomial") return matrix_to_csv(m);
  throw std::invalid_argument("export_matrix: unknown format " + format);
}

}  // namespace braidrep
