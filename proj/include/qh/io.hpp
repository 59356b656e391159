#pragma once

// JSON (de)serialization for polynomials, group configurations and reports,
// plus the CSV rendering of check reports.  All emitters normalize signed
// zeros so equal values always print identically.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qh/error.hpp"
#include "qh/group.hpp"
#include "qh/hardy.hpp"
#include "qh/invariants.hpp"
#include "qh/polynomial.hpp"
#include "qh/report.hpp"
#include "qh/toeplitz.hpp"

namespace qh {

using Json = nlohmann::json;

inline double clean_zero(double x) { return x == 0.0 ? 0.0 : x; }

inline Json complex_to_json(Complex c) {
  return Json::array({clean_zero(c.real()), clean_zero(c.imag())});
}

inline Complex complex_from_json(const Json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2) return Complex(j[0].get<double>(), j[1].get<double>());
  fail(Errc::BadConfig, "complex value must be a number or [re, im]");
}

inline Json poly_to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json t;
    t["a"] = m.holo;
    if (m.anti_degree() > 0) t["b"] = m.anti;
    t["c"] = complex_to_json(c);
    terms.push_back(std::move(t));
  }
  return Json{{"d", p.dim()}, {"terms", std::move(terms)}};
}

inline Polynomial poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("d") || !j.contains("terms"))
    fail(Errc::BadConfig, "polynomial JSON needs keys 'd' and 'terms'");
  const int d = j.at("d").get<int>();
  if (d <= 0) fail(Errc::BadConfig, "polynomial dimension must be positive");
  Polynomial p(d);
  for (const auto& t : j.at("terms")) {
    Monomial m(d);
    auto read_exps = [&](const char* key, std::vector<int>& into) {
      if (!t.contains(key)) return;
      auto v = t.at(key).get<std::vector<int>>();
      if (static_cast<int>(v.size()) != d)
        fail(Errc::BadConfig, std::string("exponent list '") + key + "' has wrong length");
      for (int e : v)
        if (e < 0) fail(Errc::BadConfig, "negative exponent");
      into = std::move(v);
    };
    read_exps("a", m.holo);
    read_exps("b", m.anti);
    p.add_term(std::move(m), complex_from_json(t.at("c")));
  }
  return p;
}

inline Json map_to_json(const PolynomialMap& B) {
  Json comps = Json::array();
  for (const auto& c : B.components) comps.push_back(poly_to_json(c));
  return Json{{"components", std::move(comps)}, {"degrees", B.degrees}};
}

inline PolynomialMap map_from_json(const Json& j) {
  std::vector<Polynomial> comps;
  for (const auto& c : j.at("components")) comps.push_back(poly_from_json(c));
  if (comps.empty()) fail(Errc::BadConfig, "polynomial map needs at least one component");
  return PolynomialMap(std::move(comps));
}

// ---- group configuration -----------------------------------------------------

struct GroupSpecConfig {
  std::string family;            // symmetric | cyclic | wreath | custom
  int d = 0;                     // symmetric / wreath / custom dimension
  int m = 0;                     // wreath cyclic order
  std::vector<int> orders;       // cyclic orders, one per variable
  std::vector<Matrix> generators;  // custom family
  bool has_user_map = false;
  PolynomialMap user_map;
};

inline Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) fail(Errc::BadConfig, "matrix must be a non-empty array of rows");
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j[0].size());
  if (rows != cols) fail(Errc::BadConfig, "generator matrices must be square");
  Matrix M(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(j[r].size()) != cols) fail(Errc::BadConfig, "ragged matrix rows");
    for (int c = 0; c < cols; ++c) M(r, c) = complex_from_json(j[r][c]);
  }
  return M;
}

inline Json matrix_to_json(const Matrix& M) {
  Json rows = Json::array();
  for (int r = 0; r < M.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < M.cols(); ++c) row.push_back(complex_to_json(M(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline GroupSpecConfig group_config_from_json(const Json& j) {
  GroupSpecConfig cfg;
  if (!j.contains("family")) fail(Errc::BadConfig, "group config needs a 'family'");
  cfg.family = j.at("family").get<std::string>();
  if (cfg.family == "symmetric") {
    cfg.d = j.at("d").get<int>();
  } else if (cfg.family == "cyclic") {
    cfg.orders = j.at("orders").get<std::vector<int>>();
    for (int n : cfg.orders)
      if (n < 1) fail(Errc::BadConfig, "cyclic orders must be >= 1");
    cfg.d = static_cast<int>(cfg.orders.size());
  } else if (cfg.family == "wreath") {
    cfg.d = j.at("d").get<int>();
    cfg.m = j.at("m").get<int>();
    if (cfg.m < 1) fail(Errc::BadConfig, "wreath order must be >= 1");
  } else if (cfg.family == "custom") {
    if (!j.contains("generators")) fail(Errc::BadConfig, "custom family needs 'generators'");
    for (const auto& g : j.at("generators")) cfg.generators.push_back(matrix_from_json(g));
    if (cfg.generators.empty()) fail(Errc::BadConfig, "custom family needs generators");
    cfg.d = static_cast<int>(cfg.generators[0].rows());
  } else {
    fail(Errc::UnsupportedFamily, "unknown family '" + cfg.family + "'");
  }
  if (cfg.d <= 0) fail(Errc::BadConfig, "group dimension must be positive");
  if (j.contains("basic_map")) {
    cfg.user_map = map_from_json(j.at("basic_map"));
    cfg.has_user_map = true;
  }
  return cfg;
}

inline FiniteGroup build_group(const GroupSpecConfig& cfg) {
  if (cfg.family == "symmetric") return FiniteGroup::symmetric(cfg.d);
  if (cfg.family == "cyclic") return FiniteGroup::cyclic(cfg.orders);
  if (cfg.family == "wreath") return FiniteGroup::wreath(cfg.m, cfg.d);
  return FiniteGroup::generate(cfg.generators, FiniteGroup::kDefaultCap, "custom", {});
}

inline GroupContext build_context(const GroupSpecConfig& cfg) {
  FiniteGroup G = build_group(cfg);
  if (cfg.has_user_map) return analyze_group(std::move(G), cfg.user_map);
  return analyze_group(std::move(G));
}

// ---- reports -----------------------------------------------------------------

inline Json report_to_json(const CheckReport& r) {
  return Json{{"name", r.name},
              {"verdict", r.verdict},
              {"max_deviation", clean_zero(r.max_deviation)},
              {"exact_region_size", r.exact_region_size},
              {"notes", r.notes}};
}

inline Json reports_to_json(const std::vector<CheckReport>& rs) {
  Json arr = Json::array();
  for (const auto& r : rs) arr.push_back(report_to_json(r));
  return arr;
}

inline std::string csv_escape(const std::string& s) {
  bool needs = s.find_first_of(",\"\n") != std::string::npos;
  if (!needs) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string reports_to_csv(const std::vector<CheckReport>& rs) {
  std::ostringstream os;
  os << "name,verdict,max_deviation,exact_region_size,notes\n";
  for (const auto& r : rs) {
    std::string notes;
    for (size_t i = 0; i < r.notes.size(); ++i) {
      if (i) notes += "; ";
      notes += r.notes[i];
    }
    os << csv_escape(r.name) << ',' << r.verdict << ',' << clean_zero(r.max_deviation) << ','
       << r.exact_region_size << ',' << csv_escape(notes) << '\n';
  }
  return os.str();
}

// ---- describe ------------------------------------------------------------------

inline Json describe_to_json(const GroupContext& ctx) {
  const FiniteGroup& G = ctx.group;
  Json out;
  out["family"] = G.family_tag();
  out["dimension"] = G.dim();
  out["order"] = G.size();
  out["abelian"] = G.is_abelian();
  out["monomial"] = G.is_monomial();
  out["pseudoreflection_count"] = static_cast<int>(G.pseudoreflections().size());

  Json planes = Json::array();
  for (size_t i = 0; i < ctx.planes.size(); ++i) {
    planes.push_back(Json{{"form", poly_to_json(ctx.planes.forms[i])},
                          {"order", ctx.planes.orders[i]},
                          {"generator", matrix_to_json(G.element(ctx.planes.generators[i]).matrix)}});
  }
  out["hyperplanes"] = std::move(planes);

  Json chars = Json::array();
  for (int c = 0; c < ctx.character_count(); ++c) {
    const Character& chi = ctx.character(c);
    Json values = Json::array();
    for (Complex v : chi.values) values.push_back(complex_to_json(v));
    chars.push_back(Json{{"name", chi.name},
                         {"values", std::move(values)},
                         {"exponents", chi.exponents},
                         {"generating_polynomial", poly_to_json(ctx.ell(c))}});
  }
  out["characters"] = std::move(chars);

  out["basic_map"] = map_to_json(ctx.basic.map);
  out["basic_map_source"] = ctx.basic.source;
  out["jacobian_constant"] = complex_to_json(ctx.jacobian_constant);
  return out;
}

inline Json basis_to_json(const QuotientBasis& b) {
  Json entries = Json::array();
  for (const auto& e : b.entries) {
    Json one;
    one["rep"] = e.rep;
    one["lift"] = poly_to_json(e.lift);
    if (!e.quotient_form.terms().empty()) one["quotient_form"] = poly_to_json(e.quotient_form);
    entries.push_back(std::move(one));
  }
  return Json{{"character", b.chi},
              {"max_degree", b.max_degree},
              {"method", b.method},
              {"entries", std::move(entries)}};
}

inline Json truncation_to_json(const ToeplitzTruncation& t) {
  Json rows = Json::array();
  for (int r = 0; r < t.matrix.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < t.matrix.cols(); ++c) row.push_back(complex_to_json(t.matrix(r, c)));
    rows.push_back(std::move(row));
  }
  Json reps = Json::array();
  for (const auto& e : t.basis.entries) reps.push_back(e.rep);
  return Json{{"degree_cutoff", t.degree_cutoff},
              {"symbol", poly_to_json(t.symbol.quotient)},
              {"lifted_symbol", poly_to_json(t.symbol.lifted)},
              {"basis_reps", std::move(reps)},
              {"exact_column", t.exact_column},
              {"matrix", std::move(rows)}};
}

// ---- files ---------------------------------------------------------------------

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::BadConfig, "cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(Errc::BadConfig, "invalid JSON in '" + path + "': " + e.what());
  }
  return j;
}

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const std::exception& e) {
    fail(Errc::BadConfig, std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace qh
