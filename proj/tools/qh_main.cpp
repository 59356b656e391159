// Command-line front end: group analysis, quotient Hardy bases and kernels,
// Toeplitz truncations and the verification suites, all reported as JSON (or
// CSV for report tables).
//
// Exit codes: 0 success / all verdicts PASS, 1 at least one FAIL verdict,
// 2 configuration or usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qh/error.hpp"
#include "qh/group.hpp"
#include "qh/hardy.hpp"
#include "qh/invariants.hpp"
#include "qh/io.hpp"
#include "qh/polynomial.hpp"
#include "qh/report.hpp"
#include "qh/toeplitz.hpp"
#include "qh/verify.hpp"

namespace {

struct GlobalOpts {
  std::string group_file;
  std::string family;
  int d = 0;
  int m = 0;
  std::vector<int> orders;
  std::string basic_map_file;
  std::string model = "polydisc";
  std::string character;
  double tol = -1.0;  // resolved against QH_TOL
  std::uint64_t seed = 12345;
  std::string format = "json";
  std::string out;
};

double resolve_tol(const GlobalOpts& g, double fallback) {
  if (g.tol >= 0.0) return g.tol;
  if (const char* env = std::getenv("QH_TOL")) {
    try {
      return std::stod(env);
    } catch (...) {
      qh::fail(qh::Errc::BadConfig, "QH_TOL is not a number");
    }
  }
  return fallback;
}

qh::GroupSpecConfig config_from_cli(const GlobalOpts& g) {
  if (!g.group_file.empty()) {
    qh::Json j = qh::load_json_file(g.group_file);
    if (!g.basic_map_file.empty()) j["basic_map"] = qh::load_json_file(g.basic_map_file);
    return qh::group_config_from_json(j);
  }
  if (g.family.empty())
    qh::fail(qh::Errc::BadConfig, "provide --group FILE or --family with its parameters");
  qh::Json j;
  j["family"] = g.family;
  if (g.family == "symmetric") {
    if (g.d <= 0) qh::fail(qh::Errc::BadConfig, "--family symmetric needs --d");
    j["d"] = g.d;
  } else if (g.family == "cyclic") {
    if (g.orders.empty()) qh::fail(qh::Errc::BadConfig, "--family cyclic needs --orders");
    j["orders"] = g.orders;
  } else if (g.family == "wreath") {
    if (g.d <= 0 || g.m <= 0) qh::fail(qh::Errc::BadConfig, "--family wreath needs --d and --m");
    j["d"] = g.d;
    j["m"] = g.m;
  } else {
    qh::fail(qh::Errc::UnsupportedFamily,
             "family '" + g.family + "' (custom groups need --group FILE)");
  }
  if (!g.basic_map_file.empty()) j["basic_map"] = qh::load_json_file(g.basic_map_file);
  return qh::group_config_from_json(j);
}

qh::HardyModel model_from_cli(const GlobalOpts& g, int dim) {
  if (g.model == "polydisc") return qh::HardyModel::polydisc(dim);
  if (g.model == "ball") return qh::HardyModel::ball(dim);
  qh::fail(qh::Errc::BadConfig, "--model must be polydisc or ball");
}

int resolve_character(const qh::GroupContext& ctx, const std::string& spec) {
  if (spec.empty()) qh::fail(qh::Errc::BadConfig, "--character is required here");
  bool numeric = !spec.empty();
  for (char c : spec)
    if (!std::isdigit(static_cast<unsigned char>(c))) numeric = false;
  if (numeric) {
    int idx = std::stoi(spec);
    if (idx < 0 || idx >= ctx.character_count())
      qh::fail(qh::Errc::BadConfig, "character index out of range");
    return idx;
  }
  int idx = qh::character_index(ctx, spec);
  if (idx < 0) qh::fail(qh::Errc::BadConfig, "no character named '" + spec + "'");
  return idx;
}

qh::Polynomial symbol_from_cli(const std::string& text, int expected_dim) {
  if (text.empty()) qh::fail(qh::Errc::BadConfig, "empty symbol");
  qh::Json j = (text[0] == '{') ? qh::parse_json_text(text) : qh::load_json_file(text);
  qh::Polynomial p = qh::poly_from_json(j);
  if (p.dim() != expected_dim)
    qh::fail(qh::Errc::DimensionMismatch, "symbol has " + std::to_string(p.dim()) +
                                              " variables, group has " +
                                              std::to_string(expected_dim));
  return p;
}

qh::CVector point_from_cli(const std::string& text, int dim) {
  qh::Json j = (text[0] == '[') ? qh::parse_json_text(text) : qh::load_json_file(text);
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    qh::fail(qh::Errc::DimensionMismatch, "point needs " + std::to_string(dim) + " coordinates");
  qh::CVector z(dim);
  for (int i = 0; i < dim; ++i) z[i] = qh::complex_from_json(j[i]);
  return z;
}

void emit(const GlobalOpts& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(g.out);
  if (!f) qh::fail(qh::Errc::BadConfig, "cannot write '" + g.out + "'");
  f << text;
  if (text.empty() || text.back() != '\n') f << '\n';
}

void emit_json(const GlobalOpts& g, const qh::Json& j) { emit(g, j.dump(2)); }

int emit_reports(const GlobalOpts& g, const std::vector<qh::CheckReport>& reports) {
  if (g.format == "csv")
    emit(g, qh::reports_to_csv(reports));
  else
    emit_json(g, qh::reports_to_json(reports));
  for (const auto& r : reports)
    if (!r.passed()) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariant theory of finite pseudoreflection groups, quotient Hardy spaces and "
               "Toeplitz transfer"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--group", g.group_file, "group configuration JSON file");
  app.add_option("--family", g.family, "built-in family: symmetric | cyclic | wreath");
  app.add_option("--d", g.d, "dimension (symmetric / wreath)");
  app.add_option("--m", g.m, "cyclic order (wreath)");
  app.add_option("--orders", g.orders, "cyclic orders, e.g. --orders 3 or --orders 2,2")
      ->delimiter(',');
  app.add_option("--basic-map", g.basic_map_file, "JSON file with a user-supplied hsop");
  app.add_option("--model", g.model, "Hardy model: polydisc | ball");
  app.add_option("--character", g.character, "character name (e.g. sign) or index");
  app.add_option("--tol", g.tol, "tolerance override (default from QH_TOL or per-command)");
  app.add_option("--seed", g.seed, "random seed for verification suites");
  app.add_option("--format", g.format, "report format: json | csv");
  app.add_option("--out", g.out, "write output to this file instead of stdout");

  auto* cmd_describe = app.add_subcommand("describe", "full structural analysis of the group");
  auto* cmd_characters = app.add_subcommand("characters", "one-dimensional characters");

  auto* cmd_invariants = app.add_subcommand("invariants", "hyperplanes and relative invariants");
  cmd_invariants->require_subcommand(1);
  auto* inv_planes = cmd_invariants->add_subcommand("hyperplanes", "reflecting hyperplanes");
  auto* inv_lrho = cmd_invariants->add_subcommand("lrho", "generating polynomial of a character");
  auto* inv_jac =
      cmd_invariants->add_subcommand("verify-jacobian", "jacobian factorization report");

  auto* cmd_hardy = app.add_subcommand("hardy", "quotient Hardy bases and kernels");
  cmd_hardy->require_subcommand(1);
  auto* hardy_onb = cmd_hardy->add_subcommand("onb", "orthonormal basis of a quotient space");
  int onb_degree = 10;
  bool onb_lifts_only = false;
  hardy_onb->add_option("--degree", onb_degree, "maximal lift degree");
  hardy_onb->add_flag("--lifts-only", onb_lifts_only, "skip quotient-variable forms");
  auto* hardy_kernel = cmd_hardy->add_subcommand("kernel", "kernel values at a point pair");
  std::string z_text, w_text;
  hardy_kernel->add_option("--z", z_text, "first point, JSON [[re,im],...]")->required();
  hardy_kernel->add_option("--w", w_text, "second point, JSON [[re,im],...]")->required();

  auto* cmd_toeplitz = app.add_subcommand("toeplitz", "Toeplitz truncations and identities");
  cmd_toeplitz->require_subcommand(1);
  std::string sym_text, sym_u, sym_v, sym_q;
  int cutoff = 8;
  bool symbol_is_ambient = false;
  auto* toe_matrix = cmd_toeplitz->add_subcommand("matrix", "finite section of T_u");
  toe_matrix->add_option("--symbol", sym_text, "quotient symbol: inline JSON or file")->required();
  toe_matrix->add_option("--cutoff", cutoff, "lift degree cutoff");
  auto* toe_product =
      cmd_toeplitz->add_subcommand("product-transfer", "T_u T_v = T_q verdict transfer");
  toe_product->add_option("--symbol-u", sym_u, "quotient symbol u")->required();
  toe_product->add_option("--symbol-v", sym_v, "quotient symbol v")->required();
  toe_product->add_option("--symbol-q", sym_q, "quotient symbol q")->required();
  toe_product->add_option("--cutoff", cutoff, "probe degree cutoff");
  auto* toe_commute =
      cmd_toeplitz->add_subcommand("commute-transfer", "T_u T_v = T_v T_u verdict transfer");
  toe_commute->add_option("--symbol-u", sym_u, "quotient symbol u")->required();
  toe_commute->add_option("--symbol-v", sym_v, "quotient symbol v")->required();
  toe_commute->add_option("--cutoff", cutoff, "probe degree cutoff");
  auto* toe_bh = cmd_toeplitz->add_subcommand("brown-halmos", "shift-compression identity");
  toe_bh->add_option("--symbol", sym_text, "quotient symbol: inline JSON or file")->required();
  toe_bh->add_option("--cutoff", cutoff, "lift degree cutoff");
  auto* toe_reducing =
      cmd_toeplitz->add_subcommand("reducing", "isotypic subspaces reduce T_u");
  toe_reducing->add_option("--symbol", sym_text, "symbol: inline JSON or file")->required();
  toe_reducing->add_flag("--ambient", symbol_is_ambient,
                         "interpret --symbol in the ambient variables instead of the quotient");
  int reducing_degree = 6;
  toe_reducing->add_option("--degree", reducing_degree, "probe monomial degree");

  auto* cmd_verify = app.add_subcommand("verify-all", "run every verification suite");
  qh::VerifyConfig vcfg;
  cmd_verify->add_option("--samples", vcfg.samples, "random polynomials per check");
  cmd_verify->add_option("--kernel-degree", vcfg.kernel_degree, "ONB series degree");
  cmd_verify->add_option("--kernel-pairs", vcfg.kernel_pairs, "random point pairs");
  cmd_verify->add_option("--cutoff", vcfg.toeplitz_cutoff, "Toeplitz probe cutoff");
  cmd_verify->add_option("--bh-cutoff", vcfg.bh_cutoff, "Brown-Halmos cutoff");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();
  cmd_invariants->fallthrough();
  cmd_hardy->fallthrough();
  cmd_toeplitz->fallthrough();
  for (auto* sub : {inv_planes, inv_lrho, inv_jac, hardy_onb, hardy_kernel, toe_matrix,
                    toe_product, toe_commute, toe_bh, toe_reducing})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    qh::GroupContext ctx = qh::build_context(config_from_cli(g));

    if (cmd_describe->parsed()) {
      emit_json(g, qh::describe_to_json(ctx));
      return 0;
    }
    if (cmd_characters->parsed()) {
      emit_json(g, qh::Json{{"characters", qh::describe_to_json(ctx)["characters"]}});
      return 0;
    }
    if (inv_planes->parsed()) {
      emit_json(g, qh::Json{{"hyperplanes", qh::describe_to_json(ctx)["hyperplanes"]}});
      return 0;
    }
    if (inv_lrho->parsed()) {
      int c = resolve_character(ctx, g.character);
      emit_json(g, qh::Json{{"character", ctx.character(c).name},
                            {"exponents", ctx.character(c).exponents},
                            {"generating_polynomial", qh::poly_to_json(ctx.ell(c))}});
      return 0;
    }
    if (inv_jac->parsed()) {
      qh::CheckReport r = qh::verify_jacobian_factorization(ctx, resolve_tol(g, 1e-9));
      return emit_reports(g, {r});
    }

    if (hardy_onb->parsed()) {
      qh::HardyModel M = model_from_cli(g, ctx.group.dim());
      int c = resolve_character(ctx, g.character);
      qh::QuotientBasis b = qh::quotient_onb(ctx, c, M, onb_degree, !onb_lifts_only);
      emit_json(g, qh::basis_to_json(b));
      return 0;
    }
    if (hardy_kernel->parsed()) {
      qh::HardyModel M = model_from_cli(g, ctx.group.dim());
      int c = resolve_character(ctx, g.character);
      qh::CVector z = point_from_cli(z_text, ctx.group.dim());
      qh::CVector w = point_from_cli(w_text, ctx.group.dim());
      qh::Json out;
      out["szego"] = qh::complex_to_json(qh::szego_kernel(M, z, w));
      out["subspace"] = qh::complex_to_json(qh::subspace_kernel(ctx, c, M, z, w));
      out["subspace_display"] =
          qh::complex_to_json(qh::subspace_kernel_display(ctx, c, M, z, w));
      out["quotient"] = qh::complex_to_json(qh::quotient_kernel(ctx, c, M, z, w));
      emit_json(g, out);
      return 0;
    }

    if (toe_matrix->parsed()) {
      qh::HardyModel M = model_from_cli(g, ctx.group.dim());
      int c = resolve_character(ctx, g.character);
      qh::Polynomial u = symbol_from_cli(sym_text, ctx.group.dim());
      qh::ToeplitzTruncation t = qh::toeplitz_matrix(ctx, c, M, u, cutoff);
      qh::Json out = qh::truncation_to_json(t);
      qh::Json sv = qh::Json::array();
      for (double s : qh::finite_section_singular_values(t)) sv.push_back(qh::clean_zero(s));
      out["singular_values"] = std::move(sv);
      emit_json(g, out);
      return 0;
    }
    if (toe_product->parsed()) {
      qh::HardyModel M = model_from_cli(g, ctx.group.dim());
      qh::TransferReport rep = qh::check_product_transfer(
          ctx, M, symbol_from_cli(sym_u, ctx.group.dim()), symbol_from_cli(sym_v, ctx.group.dim()),
          symbol_from_cli(sym_q, ctx.group.dim()), cutoff, resolve_tol(g, 1e-8));
      return emit_reports(g, {rep.to_check_report()});
    }
    if (toe_commute->parsed()) {
      qh::HardyModel M = model_from_cli(g, ctx.group.dim());
      qh::TransferReport rep = qh::check_commuting_transfer(
          ctx, M, symbol_from_cli(sym_u, ctx.group.dim()), symbol_from_cli(sym_v, ctx.group.dim()),
          cutoff, resolve_tol(g, 1e-8));
      return emit_reports(g, {rep.to_check_report()});
    }
    if (toe_bh->parsed()) {
      int c = resolve_character(ctx, g.character);
      qh::Polynomial u = symbol_from_cli(sym_text, ctx.group.dim());
      qh::BrownHalmosReport rep =
          qh::check_brown_halmos(ctx, c, u, cutoff, resolve_tol(g, 1e-8));
      return emit_reports(g, {rep.to_check_report()});
    }
    if (toe_reducing->parsed()) {
      qh::HardyModel M = model_from_cli(g, ctx.group.dim());
      int c = resolve_character(ctx, g.character);
      qh::Polynomial raw = symbol_from_cli(sym_text, ctx.group.dim());
      qh::Polynomial ambient = symbol_is_ambient ? raw : qh::lift_symbol(ctx, raw).lifted;
      qh::CheckReport r =
          qh::check_reducing(ctx, c, M, ambient, reducing_degree, resolve_tol(g, 1e-8));
      return emit_reports(g, {r});
    }

    if (cmd_verify->parsed()) {
      qh::HardyModel M = model_from_cli(g, ctx.group.dim());
      vcfg.seed = g.seed;
      vcfg.tol = resolve_tol(g, vcfg.tol);
      std::vector<qh::CheckReport> reports = qh::run_verify_all(ctx, M, vcfg);
      return emit_reports(g, reports);
    }
  } catch (const qh::Error& e) {
    std::cerr << "error [" << qh::errc_name(e.code()) << "]: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
