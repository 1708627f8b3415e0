// Command-line front end: series evaluation, root inspection, the identity
// verification registry and cross-method consistency sweeps.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "lehmer/lehmer.hpp"

namespace {

using lehmer::cdouble;

constexpr int kExitOk = 0;
constexpr int kExitRegression = 1;
constexpr int kExitBadInput = 2;

std::string fmt15(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

std::string fmt_complex(cdouble v) {
  if (v.imag() == 0.0) return fmt15(v.real());
  return fmt15(v.real()) + (v.imag() < 0 ? " - " : " + ") + fmt15(std::fabs(v.imag())) + "i";
}

/// "a+bi" with optional parts: "2", "-1.5", "2i", "1-2i", "1e-3+2.5e-2i".
std::optional<cdouble> parse_complex(const std::string& text) {
  const char* c = text.c_str();
  char* end = nullptr;
  const double first = std::strtod(c, &end);
  if (end == c) return std::nullopt;
  if (*end == '\0') return cdouble(first, 0.0);
  if (*end == 'i' && end[1] == '\0') return cdouble(0.0, first);
  if (*end != '+' && *end != '-') return std::nullopt;
  const char* second_start = end;
  const double second = std::strtod(second_start, &end);
  if (end == second_start) return std::nullopt;
  if (*end == 'i' && end[1] == '\0') return cdouble(first, second);
  return std::nullopt;
}

struct MethodValue {
  std::string name;
  cdouble value;
  std::string detail;
};

int run_eval(int s, int k, const std::string& z_text, int start, const std::string& method,
             double tol, int max_terms, const std::string& format) {
  const auto z = parse_complex(z_text);
  if (!z) {
    std::fprintf(stderr, "error: cannot parse complex value '%s' (expected a+bi)\n",
                 z_text.c_str());
    return kExitBadInput;
  }
  const lehmer::SeriesSpec spec{s, k, *z, start};
  const bool all = method == "all";
  const bool z_real = z->imag() == 0.0;

  std::vector<MethodValue> rows;
  if (all || method == "series") {
    const auto sum = lehmer::sum_direct(spec, tol, max_terms);
    char detail[96];
    std::snprintf(detail, sizeof(detail), "truncation bound %.3g, %d terms",
                  sum.truncation_bound, sum.terms_used);
    rows.push_back({"series", sum.value, detail});
  }
  if (all || method == "integral") {
    if (k == 0) {
      const auto q = lehmer::lehmer_integral(s, *z, std::min(tol, 1e-12));
      const cdouble adjusted = q.value - (start == 1 ? 1.0 : 0.0);
      char detail[96];
      std::snprintf(detail, sizeof(detail), "error estimate %.3g, %d panels", q.error_estimate,
                    q.subdivisions);
      rows.push_back({"integral", adjusted, detail});
    } else if (z_real) {
      const auto q = lehmer::weighted_integral(s, k, z->real(), std::min(tol, 1e-12));
      char detail[96];
      std::snprintf(detail, sizeof(detail), "error estimate %.3g, %d panels", q.error_estimate,
                    q.subdivisions);
      rows.push_back({"integral", q.real(), detail});
    } else if (!all) {
      std::fprintf(stderr, "error: the weighted integral needs real z for k >= 1\n");
      return kExitBadInput;
    }
  }
  if (all || method == "rootsum") {
    if (*z == cdouble(0.0)) {
      if (!all) {
        std::fprintf(stderr, "error: the root-sum pipeline needs z != 0\n");
        return kExitBadInput;
      }
    } else if (k == 0) {
      const cdouble v = lehmer::root_sum(s, *z) - (start == 1 ? 1.0 : 0.0);
      rows.push_back({"rootsum", v, ""});
    } else if (z_real && k <= 8) {
      rows.push_back({"rootsum", lehmer::euler_apply(s, z->real(), k), "euler operator"});
    } else if (!all) {
      std::fprintf(stderr, "error: the root-sum pipeline needs real z and k <= 8 for k >= 1\n");
      return kExitBadInput;
    }
  }

  double max_dev = 0.0;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j)
      max_dev = std::max(max_dev, std::abs(rows[i].value - rows[j].value));

  if (format == "json") {
    std::string out = "{\"s\": " + std::to_string(s) + ", \"k\": " + std::to_string(k) +
                      ", \"z\": \"" + z_text + "\", \"start\": " + std::to_string(start) +
                      ", \"values\": {";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      char num[96];
      if (rows[i].value.imag() == 0.0)
        std::snprintf(num, sizeof(num), "%.17g", rows[i].value.real());
      else
        std::snprintf(num, sizeof(num), "{\"re\": %.17g, \"im\": %.17g}",
                      rows[i].value.real(), rows[i].value.imag());
      out += "\"" + rows[i].name + "\": " + num + (i + 1 < rows.size() ? ", " : "");
    }
    char dev[40];
    std::snprintf(dev, sizeof(dev), "%.17g", max_dev);
    out += "}, \"max_deviation\": " + std::string(rows.size() > 1 ? dev : "null") + "}";
    std::printf("%s\n", out.c_str());
  } else if (format == "csv") {
    std::printf("method,value\n");
    for (const auto& r : rows) {
      if (r.value.imag() == 0.0)
        std::printf("%s,%.17g\n", r.name.c_str(), r.value.real());
      else
        std::printf("%s,%.17g%+.17gi\n", r.name.c_str(), r.value.real(), r.value.imag());
    }
  } else if (format == "md") {
    std::printf("| method | value |\n|---|---|\n");
    for (const auto& r : rows)
      std::printf("| %s | %s |\n", r.name.c_str(), fmt_complex(r.value).c_str());
  } else {
    std::printf("s = %d, k = %d, z = %s, start = %d\n", s, k, fmt_complex(*z).c_str(), start);
    for (const auto& r : rows) {
      std::printf("%-9s %s", r.name.c_str(), fmt_complex(r.value).c_str());
      if (!r.detail.empty()) std::printf("   (%s)", r.detail.c_str());
      std::printf("\n");
    }
    if (rows.size() > 1) std::printf("max pairwise deviation %.3g\n", max_dev);
  }
  return kExitOk;
}

int run_roots(int s, const std::string& z_text, double tol, const std::string& format) {
  const auto z = parse_complex(z_text);
  if (!z) {
    std::fprintf(stderr, "error: cannot parse complex value '%s' (expected a+bi)\n",
                 z_text.c_str());
    return kExitBadInput;
  }
  const auto poly = lehmer::lehmer_polynomial(s, *z);
  const auto roots = lehmer::find_roots(poly, tol);

  std::string branch_verdict = "safe: no real root in [0,1]";
  try {
    lehmer::detail::require_branch_safe(roots.roots);
  } catch (const lehmer::error& e) {
    branch_verdict = std::string("refused: ") + e.what();
  }

  if (format == "json") {
    std::string out = "{\"s\": " + std::to_string(s) + ", \"z\": \"" + z_text + "\", \"roots\": [";
    for (std::size_t i = 0; i < roots.roots.size(); ++i) {
      char buf[128];
      std::snprintf(buf, sizeof(buf), "{\"re\": %.17g, \"im\": %.17g, \"residual\": %.3g}",
                    roots.roots[i].real(), roots.roots[i].imag(), roots.residual_per_root[i]);
      out += std::string(buf) + (i + 1 < roots.roots.size() ? ", " : "");
    }
    char sep[40];
    std::snprintf(sep, sizeof(sep), "%.17g", roots.min_pairwise_separation);
    out += "], \"min_separation\": " + std::string(roots.roots.size() > 1 ? sep : "null") +
           ", \"near_multiple\": " + (roots.near_multiple ? "true" : "false") +
           ", \"branch\": \"" + branch_verdict + "\"}";
    std::printf("%s\n", out.c_str());
    return kExitOk;
  }

  std::printf("H(X) with s = %d, z = %s: %zu root(s)\n", s, fmt_complex(*z).c_str(),
              roots.roots.size());
  for (std::size_t i = 0; i < roots.roots.size(); ++i) {
    const cdouble rho = roots.roots[i];
    const cdouble dH = lehmer::eval_derivative(poly, rho);
    std::string logdiff = "n/a";
    try {
      logdiff = fmt_complex(lehmer::principal_log(1.0 - rho) - lehmer::principal_log(-rho));
    } catch (const lehmer::error&) {
    }
    std::printf("root %zu: %s\n", i, fmt_complex(rho).c_str());
    std::printf("   |H(root)| = %.3g, newton step = %.3g, H'(root) = %s, logdiff = %s\n",
                roots.residual_per_root[i], roots.newton_step_per_root[i],
                fmt_complex(dH).c_str(), logdiff.c_str());
  }
  if (roots.roots.size() > 1)
    std::printf("min pairwise separation %.6g%s\n", roots.min_pairwise_separation,
                roots.near_multiple ? " (NEAR-MULTIPLE)" : "");
  std::printf("branch safety: %s\n", branch_verdict.c_str());
  return kExitOk;
}

int run_identities(const std::string& format, double tol_override, int parallelism) {
  lehmer::HarnessConfig config;
  config.tolerance_override = tol_override;
  const auto registry = lehmer::bundled_registry();
  const auto report = lehmer::run_registry(registry, parallelism, config);

  if (format == "json") {
    std::fputs(lehmer::render_json(report).c_str(), stdout);
  } else if (format == "csv") {
    std::fputs(lehmer::render_csv(report).c_str(), stdout);
  } else if (format == "md") {
    std::fputs(lehmer::render_markdown(report).c_str(), stdout);
  } else {
    for (const auto& e : report.entries) {
      std::printf("%-34s %-10s", e.id.c_str(), lehmer::to_string(e.status));
      if (e.lhs && e.rhs) std::printf("  lhs %-22s rhs %-22s", fmt15(*e.lhs).c_str(),
                                      fmt15(*e.rhs).c_str());
      if (e.abs_diff) std::printf("  diff %.3g", *e.abs_diff);
      if (!e.note.empty()) std::printf("  [%s]", e.note.c_str());
      std::printf("\n");
    }
    std::printf("confirmed %d, erratum %d, unresolved %d, total %d\n", report.confirmed,
                report.erratum, report.unresolved, report.total());
  }
  return report.all_expected() ? kExitOk : kExitRegression;
}

int run_crosscheck(int s, int k, const std::string& grid_text, double tol,
                   const std::string& format) {
  double lo = 0, hi = 0, step = 0;
  if (std::sscanf(grid_text.c_str(), "%lf:%lf:%lf", &lo, &hi, &step) != 3 || step <= 0.0) {
    std::fprintf(stderr, "error: cannot parse z grid '%s' (expected lo:hi:step, step > 0)\n",
                 grid_text.c_str());
    return kExitBadInput;
  }

  std::vector<lehmer::CrossCheckEntry> entries;
  for (double z = lo; z <= hi + 1e-12; z += step) entries.push_back(lehmer::cross_check(s, k, z, tol));

  bool any_fail = false;
  const bool json = format == "json";
  if (json) std::printf("{\"s\": %d, \"k\": %d, \"entries\": [", s, k);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    const char* verdict = e.skipped ? "SKIPPED" : e.unresolved ? "UNRESOLVED"
                                    : e.passed  ? "PASS"
                                                : "FAIL";
    if (!e.skipped && !e.passed) any_fail = true;
    if (json) {
      std::printf("%s{\"z\": %.17g, \"status\": \"%s\", \"max_deviation\": %.17g}",
                  i ? ", " : "", e.z, verdict, e.max_deviation);
    } else {
      std::printf("z = %-10s %-10s", fmt15(e.z).c_str(), verdict);
      if (!e.skipped && !e.unresolved) {
        for (const auto& [name, value] : e.values)
          std::printf("  %s %s", name.c_str(), fmt15(value).c_str());
        std::printf("  (max deviation %.3g)", e.max_deviation);
      }
      if (!e.note.empty()) std::printf("  [%s]", e.note.c_str());
      std::printf("\n");
    }
  }
  if (json) std::printf("]}\n");
  if (!json && entries.empty()) std::printf("empty grid\n");
  return any_fail ? kExitRegression : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evaluation and verification of binomial series sum n^k z^n / ((sn+1) C(sn,n))"};
  app.require_subcommand(1);

  int s = 2, k = 0, start = 1, parallelism = 1, max_terms = 20000;
  double tol = 1e-10;
  double crosscheck_tol = 1e-9;
  double identities_tol = 0.0;
  std::string z_text = "1", method = "all", format = "plain", grid_text;

  auto* eval = app.add_subcommand("eval", "evaluate the series by the requested pipelines");
  eval->add_option("--s", s, "series parameter s >= 1")->required();
  eval->add_option("--k", k, "weight exponent k >= 0");
  eval->add_option("--z", z_text, "argument z, complex as a+bi")->required();
  eval->add_option("--start", start, "first summation index, 0 or 1 (default 1)");
  eval->add_option("--method", method, "series | integral | rootsum | all")
      ->check(CLI::IsMember({"series", "integral", "rootsum", "all"}));
  eval->add_option("--tol", tol, "target tolerance (default 1e-10)");
  eval->add_option("--max-terms", max_terms, "direct-summation term cap");
  eval->add_option("--format", format, "plain | json | csv | md")
      ->check(CLI::IsMember({"plain", "json", "csv", "md"}));

  auto* roots = app.add_subcommand("roots", "solve 1 - z X^(s-1) + z X^s = 0 and show diagnostics");
  roots->add_option("--s", s, "series parameter s >= 1")->required();
  roots->add_option("--z", z_text, "argument z, complex as a+bi")->required();
  roots->add_option("--tol", tol, "residual tolerance (default 1e-10)");
  roots->add_option("--format", format, "plain | json")
      ->check(CLI::IsMember({"plain", "json"}));

  auto* identities = app.add_subcommand("identities", "run the bundled identity registry");
  identities->add_option("--format", format, "plain | json | csv | md")
      ->check(CLI::IsMember({"plain", "json", "csv", "md"}));
  identities->add_option("--tol", identities_tol,
                         "override every record tolerance (default: per record)");
  identities->add_option("--parallel", parallelism, "worker threads (default 1)");

  auto* crosscheck = app.add_subcommand("crosscheck", "three-pipeline consistency sweep over a z grid");
  crosscheck->add_option("--s", s, "series parameter s >= 1")->required();
  crosscheck->add_option("--k", k, "weight exponent k >= 0");
  crosscheck->add_option("--z-grid", grid_text, "real z grid as lo:hi:step")->required();
  crosscheck->add_option("--tol", crosscheck_tol, "consistency tolerance (default 1e-9)");
  crosscheck->add_option("--format", format, "plain | json")
      ->check(CLI::IsMember({"plain", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (eval->parsed()) return run_eval(s, k, z_text, start, method, tol, max_terms, format);
    if (roots->parsed()) return run_roots(s, z_text, tol, format);
    if (identities->parsed()) return run_identities(format, identities_tol, parallelism);
    if (crosscheck->parsed()) return run_crosscheck(s, k, grid_text, crosscheck_tol, format);
  } catch (const lehmer::error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitBadInput;
  }
  return kExitOk;
}
