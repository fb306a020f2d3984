// covol: volume lower bounds for orbifold quotients of irreducible symmetric
// spaces of non-compact type.
//
// Subcommands: list, bound, table, solve-wang, curvature, verify.
// Exit codes: 0 success, 2 bad input, 3 verification failure.

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "covol/bounds.hpp"
#include "covol/catalog.hpp"
#include "covol/constants.hpp"
#include "covol/curvature.hpp"
#include "covol/geometry.hpp"
#include "covol/io.hpp"
#include "covol/wang.hpp"

namespace {

using namespace covol;

struct CommonOptions {
  std::string format = "table";
  std::string mode = "paper";
  int digits = 6;
  bool quiet = false;
  std::vector<std::string> spaces_files;
  std::vector<std::string> roots_files;
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_mode) {
  cmd->add_option("--format,-f", opt.format, "Output format: table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  cmd->add_option("--digits", opt.digits, "Significant digits in printed values (1..15)")
      ->check(CLI::Range(1, 15));
  cmd->add_flag("--quiet,-q", opt.quiet, "Suppress headers and summaries");
  cmd->add_option("--spaces-file", opt.spaces_files, "Structured file with extra [space] entries");
  cmd->add_option("--roots-file", opt.roots_files, "Structured file with extra [roots] entries");
  if (with_mode)
    cmd->add_option("--mode,-m", opt.mode, "Constant set: paper or precise")
        ->check(CLI::IsMember({"paper", "precise"}));
}

SpaceRegistry load_registry(const CommonOptions& opt) {
  SpaceRegistry reg;
  for (const auto& path : opt.spaces_files) load_structured_file(path, reg);
  for (const auto& path : opt.roots_files) load_structured_file(path, reg);
  return reg;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  auto to_int = [&](std::string_view s) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
      throw std::invalid_argument("bad range '" + text + "' (expected e.g. 4..8)");
    return v;
  };
  if (dots == std::string::npos) {
    const int v = to_int(text);
    return {v, v};
  }
  return {to_int(std::string_view(text).substr(0, dots)),
          to_int(std::string_view(text).substr(dots + 2))};
}

int run_list(int max_n, const CommonOptions& opt) {
  const SpaceRegistry reg = load_registry(opt);
  std::vector<ListRow> rows;
  for (const auto& s : catalog::list_spaces(max_n))
    rows.push_back({s.id, s.N, s.d, s.alpha_G, catalog::to_string(s.constants_class)});
  std::vector<SymmetricSpaceSpec> extra = reg.user_spaces();
  std::sort(extra.begin(), extra.end(),
            [](const SymmetricSpaceSpec& a, const SymmetricSpaceSpec& b) { return a.id < b.id; });
  for (const auto& s : extra)
    rows.push_back({s.id, s.N, s.d, s.alpha_G, catalog::to_string(s.constants_class)});
  std::cout << format_list(rows, output_format_from_string(opt.format), !opt.quiet);
  return 0;
}

int run_bound(const std::string& space_id, const CommonOptions& opt) {
  const SpaceRegistry reg = load_registry(opt);
  const auto space = reg.find(space_id);
  if (!space) throw std::invalid_argument("unknown space id '" + space_id + "'");
  const BoundResult result = compute_bound(*space, *bound_mode_from_string(opt.mode));
  const OutputRecord rec = make_output_record(result, *space, opt.digits);
  std::cout << format_records({rec}, output_format_from_string(opt.format), opt.digits, !opt.quiet);
  return 0;
}

int run_table(const std::string& family, const std::string& range, bool fixed,
              const CommonOptions& opt) {
  BoundFamily fam;
  int lo = 0, hi = 0;
  if (fixed) {
    fam = BoundFamily::AllFixed;
  } else if (family == "H" || family == "CH") {
    fam = family == "H" ? BoundFamily::Hyperbolic : BoundFamily::ComplexHyperbolic;
    if (range.empty()) {
      lo = family == "H" ? 4 : 2;
      hi = 10;
    } else {
      std::tie(lo, hi) = parse_range(range);
    }
  } else {
    throw std::invalid_argument("table: pass --fixed or --family H|CH");
  }

  const BoundMode mode = *bound_mode_from_string(opt.mode);
  std::vector<RecordOrError> rows;
  for (const auto& row : bound_table(fam, lo, hi, mode)) {
    RecordOrError out;
    out.space_id = row.space_id;
    if (row.result) {
      const auto space = catalog::find_space(row.space_id);
      out.record = make_output_record(*row.result, *space, opt.digits);
    } else {
      out.error = row.error;
    }
    rows.push_back(std::move(out));
  }
  std::cout << format_rows(rows, output_format_from_string(opt.format), opt.digits, !opt.quiet);
  return 0;
}

int run_solve_wang(double c1, double c2, int digits) {
  const WangRadius w = solve_wang_radius(c1, c2);
  std::printf("r_g      = %.*g\n", digits, w.r_g);
  std::printf("r_half   = %.*g\n", digits, w.r_half);
  std::printf("residual = %.3g\n", w.residual);
  return 0;
}

int run_curvature(double alpha, double c1, int digits) {
  const PolyMax pm = max_curvature_poly(alpha);
  std::printf("poly_max = %.*g\n", digits, pm.value);
  std::printf("argmax   = (%.*g, %.*g)\n", digits, pm.a, digits, pm.b);
  std::printf("k        = %.*g\n", digits, pm.value / 4.0 * c1 * c1);
  return 0;
}

struct CheckReport {
  int failures = 0;

  void add(bool pass, const std::string& name, const std::string& detail) {
    if (!pass) ++failures;
    std::printf("[%s] %s: %s\n", pass ? "ok" : "FAIL", name.c_str(), detail.c_str());
  }
};

void verify_wang(CheckReport& report) {
  char buf[160];
  const WangRadius w1 = solve_wang_radius(1.0, std::sqrt(2.0));
  std::snprintf(buf, sizeof buf, "r_g = %.6f (expected 0.228 +- 1e-3), residual %.1e", w1.r_g,
                w1.residual);
  report.add(std::fabs(w1.r_g - 0.228) <= 1e-3 && w1.residual <= 1e-12, "wang (1,sqrt2)", buf);

  const WangRadius w2 = solve_wang_radius(std::sqrt(2.0), std::sqrt(2.0));
  std::snprintf(buf, sizeof buf, "r_g*C1 = %.6f (expected 0.277 +- 1e-3), residual %.1e",
                w2.r_g * std::sqrt(2.0), w2.residual);
  report.add(std::fabs(w2.r_g * std::sqrt(2.0) - 0.277) <= 1e-3 && w2.residual <= 1e-12,
             "wang (sqrt2,sqrt2)", buf);

  const WangRadius ws = solve_wang_radius(2.0, 2.0 * std::sqrt(2.0));
  std::snprintf(buf, sizeof buf, "|2 r_g(2C) - r_g(C)| = %.2e (tolerance 1e-12)",
                std::fabs(2.0 * ws.r_g - w1.r_g));
  report.add(std::fabs(2.0 * ws.r_g - w1.r_g) <= 1e-12, "wang scaling", buf);
}

void verify_curvature(CheckReport& report) {
  char buf[160];
  const PolyMax p1 = max_curvature_poly(1.0);
  std::snprintf(buf, sizeof buf, "max = %.12f (expected 49/13), argmax %.8f", p1.value, p1.a);
  report.add(std::fabs(p1.value - 49.0 / 13.0) <= 1e-9 &&
                 std::fabs(p1.a - std::sqrt(7.0 / 13.0)) <= 1e-6 &&
                 std::fabs(p1.b - std::sqrt(7.0 / 13.0)) <= 1e-6,
             "poly alpha=1", buf);

  const PolyMax p2 = max_curvature_poly(std::sqrt(2.0));
  std::snprintf(buf, sizeof buf, "max = %.12f (expected 4.69036 +- 1e-5)", p2.value);
  report.add(std::fabs(p2.value - 4.69036) <= 1e-5, "poly alpha=sqrt2", buf);
}

void verify_constants(CheckReport& report, const SpaceRegistry& reg) {
  char buf[160];
  for (const auto& id : shipped_root_ids()) {
    const auto space = catalog::find_space(id);
    const auto rrs = shipped_root_system(id);
    if (!space || !rrs) {
      report.add(false, "dual-norm " + id, "no shipped restricted-root data");
      continue;
    }
    const double c1 = c1_from_restricted_roots(*rrs);
    const double expected = classify_constants(*space).c1;
    std::snprintf(buf, sizeof buf, "C1 = %.12f, classifier %.12f", c1, expected);
    report.add(std::fabs(c1 - expected) <= 1e-9, "dual-norm " + id, buf);
  }
  for (const auto& [id, rrs] : reg.user_root_systems()) {
    const auto space = reg.find(id);
    if (!space) {
      report.add(false, "dual-norm " + id, "root data names an unknown space");
      continue;
    }
    double c1 = 0.0;
    try {
      c1 = c1_from_restricted_roots(rrs);
    } catch (const std::exception& e) {
      report.add(false, "dual-norm " + id, e.what());
      continue;
    }
    const double expected = classify_constants(*space).c1;
    std::snprintf(buf, sizeof buf, "C1 = %.12f, classifier %.12f", c1, expected);
    report.add(std::fabs(c1 - expected) <= 1e-9, "dual-norm " + id, buf);
  }
}

int run_verify(const std::string& only, const CommonOptions& opt) {
  const SpaceRegistry reg = load_registry(opt);
  CheckReport report;
  if (only.empty() || only == "wang") verify_wang(report);
  if (only.empty() || only == "curvature") verify_curvature(report);
  if (only.empty() || only == "constants") verify_constants(report, reg);
  if (!opt.quiet)
    std::printf("%s: %d failure(s)\n", report.failures ? "FAIL" : "PASS", report.failures);
  return report.failures ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Volume lower bounds for orbifold quotients of symmetric spaces"};
  app.require_subcommand(1);

  CommonOptions opt;

  auto* list = app.add_subcommand("list", "List the built-in spaces");
  int max_n = 10;
  list->add_option("--max-n", max_n, "Largest family parameter n to enumerate")
      ->check(CLI::Range(2, 500));
  add_common(list, opt, false);

  auto* bound = app.add_subcommand("bound", "Volume lower bound for one space");
  std::string space_id;
  bound->add_option("space", space_id, "Space id, e.g. H.4, CH.2, OH.2, G2_2, F4_4")->required();
  add_common(bound, opt, true);

  auto* table = app.add_subcommand("table", "Volume lower bounds for a family");
  std::string family, range;
  bool fixed = false;
  table->add_option("--family", family, "Family: H or CH")->check(CLI::IsMember({"H", "CH"}));
  table->add_option("--n", range, "Family parameter range, e.g. 4..8");
  table->add_flag("--fixed", fixed, "The three fixed spaces OH.2, G2_2, F4_4");
  add_common(table, opt, true);

  auto* wang = app.add_subcommand("solve-wang", "Solve F(t) = 0 for the displacement radius");
  double c1 = 0.0, c2 = 0.0;
  wang->add_option("--c1", c1, "Constant C1")->required();
  wang->add_option("--c2", c2, "Constant C2")->required();
  wang->add_option("--digits", opt.digits, "Significant digits")->check(CLI::Range(1, 15));

  auto* curv = app.add_subcommand("curvature", "Maximize the curvature objective");
  double alpha = 0.0, curv_c1 = 1.0;
  curv->add_option("--alpha", alpha, "Ratio C2/C1")->required();
  curv->add_option("--c1", curv_c1, "C1 used for the final k");
  curv->add_option("--digits", opt.digits, "Significant digits")->check(CLI::Range(1, 15));

  auto* verify = app.add_subcommand("verify", "Run the built-in cross-checks");
  std::string only;
  verify->add_option("--only", only, "Restrict to one group: wang, curvature or constants")
      ->check(CLI::IsMember({"wang", "curvature", "constants"}));
  add_common(verify, opt, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (list->parsed()) return run_list(max_n, opt);
    if (bound->parsed()) return run_bound(space_id, opt);
    if (table->parsed()) return run_table(family, range, fixed, opt);
    if (wang->parsed()) return run_solve_wang(c1, c2, opt.digits);
    if (curv->parsed()) return run_curvature(alpha, curv_c1, opt.digits);
    if (verify->parsed()) return run_verify(only, opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
