#include "ekr/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "ekr/brute_force.hpp"
#include "ekr/error.hpp"

namespace ekr {

using nlohmann::json;

namespace {

Context make_context(const RunConfig& rc) {
  ContextOptions opt;
  opt.cache_dir = rc.cache_dir;
  opt.threads = rc.threads;
  return Context(EkrConfig::make(rc.q, rc.ell), opt);
}

void emit(const RunConfig& rc, const std::string& text, std::ostream& out) {
  if (rc.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(rc.out, std::ios::binary);
  if (!f) throw Error("cannot write " + rc.out.string());
  f << text;
  if (!f) throw Error("write failed for " + rc.out.string());
}

std::string render_certificate(const Certificate& cert, Format format) {
  if (format == Format::Json) return certificate_json(cert).dump(2) + "\n";
  Table t;
  t.columns = {"field", "value"};
  t.rows.push_back({"q", cert.config.q});
  t.rows.push_back({"ell", cert.config.ell});
  t.rows.push_back({"m", cert.config.m});
  t.rows.push_back({"group_order", cert.group_order});
  t.rows.push_back({"theta1", to_string(cert.theta1)});
  t.rows.push_back({"theta2", to_string(cert.theta2)});
  t.rows.push_back({"hoffman_bound", to_string(cert.hoffman_bound)});
  t.rows.push_back({"h_order", cert.h_order});
  t.rows.push_back({"verdict", cert.verdict});
  for (const auto& c : cert.checks) t.rows.push_back({"check." + c.name, c.passed});
  return render(t, format);
}

}  // namespace

int cmd_certify(const RunConfig& rc, std::ostream& out, std::ostream& err) {
  const Context ctx = make_context(rc);
  const Certificate cert = certify_bound(ctx);
  emit(rc, render_certificate(cert, rc.format), out);
  if (!cert.verdict) {
    json diag = certificate_json(cert, false)["diagnostics"];
    err << diag.dump(2) << '\n';
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_report(const RunConfig& rc, std::ostream& out, std::ostream&) {
  const Context ctx = make_context(rc);
  emit(rc, render(make_table(ctx, rc.table), rc.format), out);
  return kExitOk;
}

int cmd_bruteforce(const RunConfig& rc, std::ostream& out, std::ostream& err) {
  const Context ctx = make_context(rc);
  const EkrConfig& cfg = ctx.config();
  Table t;
  t.columns = {"check", "value", "passed"};
  bool all = true;
  const auto record = [&](const std::string& name, json value, bool passed) {
    t.rows.push_back({name, std::move(value), passed});
    all = all && passed;
  };

  const DenseCayley graph = build_cayley(ctx, rc.slow);
  record("vertices", graph.size(), graph.size() == cfg.group_order());

  const CayleyValidation val = validate_cayley(ctx, graph);
  const auto expected = expected_family_sizes(cfg);
  record("symmetric", val.symmetric, val.symmetric);
  record("zero_diagonal", val.zero_diagonal, val.zero_diagonal);
  for (std::size_t i = 0; i < 4; ++i) {
    record("degree_c" + std::to_string(i + 1), val.degree[i], val.regular[i] && val.degree[i] == expected[i]);
  }

  const auto h = h_vertices(ctx, graph);
  record("h_order", h.size(), h.size() * cfg.ell == cfg.group_order());
  record("h_independent", independence_check(graph, h, h), independence_check(graph, h, h));
  bool cosets = true;
  for (std::int64_t tt = 0; tt < cfg.ell; ++tt) {
    const auto coset = h_coset_vertices(ctx, graph, tt);
    cosets = cosets && independence_check(graph, coset, coset);
  }
  record("h_cosets_independent", static_cast<std::uint64_t>(cfg.ell), cosets);

  const auto irreps = irrep_inventory(ctx);
  const auto inv = derangement_inventory(ctx, graph.classes);
  const WeightVector w = weight_vector(cfg);
  const auto spectrum = weighted_spectrum(cfg, irreps, babai_table(ctx, inv, irreps), w);
  const ClassProfile profile = class_profile(ctx, graph, w);
  const auto residuals = eigenvector_residuals(ctx, graph, profile, irreps, spectrum.per_irrep);
  double worst = 0.0;
  std::uint64_t passed = 0;
  for (double r : residuals) {
    worst = std::max(worst, r);
    if (r < 1e-6) ++passed;
  }
  record("residuals_below_1e-6", passed, passed == irreps.size());
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", worst);
  record("max_residual", std::string(buf), worst < 1e-6);

  const IrrepLabel trivial = trivial_irrep(cfg.q);
  const std::size_t ti = static_cast<std::size_t>(std::find(irreps.begin(), irreps.end(), trivial) - irreps.begin());
  const double theta1 = to_double(spectrum.per_irrep.at(ti));
  const double trivial_res = eigenvector_residual(ctx, graph, profile, trivial, theta1);
  record("trivial_row_sum", to_string(spectrum.per_irrep.at(ti)),
         trivial_res < 1e-9 && spectrum.per_irrep.at(ti) == make_rational(cfg.ell - 1));
  const double control = eigenvector_residual(ctx, graph, profile, trivial, theta1 + 1.0);
  record("negative_control", control >= 1.0 - 1e-9, control >= 1.0 - 1e-9);

  const auto etas = exhaustive_eta_table(ctx, graph);
  std::uint64_t zero = 0;
  for (auto e : etas) zero += e == 0 ? 1 : 0;
  record("eta_agreements", etas.size(), etas.size() == cfg.group_order());
  std::uint64_t expected_zero = 0;
  for (auto s : expected) expected_zero += s;
  record("eta_zero_count", zero, zero == expected_zero);

  if (!rc.edges.empty()) write_edge_list(graph, rc.edges);

  emit(rc, render(t, rc.format), out);
  if (!all) {
    err << "bruteforce: at least one check failed\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_certify_all(const RunConfig& rc, std::ostream& out, std::ostream& err) {
  Table t;
  t.columns = {"q", "ell", "m", "group_order", "hoffman_bound", "h_order", "verdict"};
  bool all = true;
  for (const EkrConfig& cfg : valid_configs(rc.max_q)) {
    RunConfig one = rc;
    one.q = cfg.q;
    one.ell = cfg.ell;
    const Context ctx = make_context(one);
    const Certificate cert = certify_bound(ctx);
    t.rows.push_back({cfg.q, cfg.ell, cfg.m, cert.group_order, to_string(cert.hoffman_bound), cert.h_order,
                      cert.verdict});
    if (!cert.verdict) {
      all = false;
      err << "q=" << cfg.q << " ell=" << cfg.ell << ": " << certificate_json(cert, false)["diagnostics"].dump() << '\n';
    }
  }
  emit(rc, render(t, rc.format), out);
  return all ? kExitOk : kExitCheckFailed;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact spectral certificates for cross-intersecting sets in GL2(q)", "ekr"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(EKR_VERSION));

  RunConfig rc;
  std::string format = "json";
  std::string cache_dir;
  if (const char* env = std::getenv("EKR_CACHE_DIR")) cache_dir = env;

  const auto common = [&](CLI::App* sub, bool needs_config) {
    if (needs_config) {
      sub->add_option("--q", rc.q, "Field size (odd prime power)")->required();
      sub->add_option("--ell", rc.ell, "Odd prime dividing q-1")->required();
    }
    sub->add_option("--format", format, "Output format: json|csv|text");
    sub->add_option("--out", rc.out, "Write output to this file instead of stdout");
    sub->add_option("--cache-dir", cache_dir, "Field table cache directory (default: $EKR_CACHE_DIR)");
    sub->add_option("--threads", rc.threads, "Worker threads (default: all cores)");
  };

  CLI::App* certify = app.add_subcommand("certify", "Run the full pipeline and emit the certificate");
  common(certify, true);

  CLI::App* report = app.add_subcommand("report", "Export one table");
  common(report, true);
  std::string names;
  for (const auto& n : table_names()) names += (names.empty() ? "" : "|") + n;
  report->add_option("table", rc.table, names)->required();

  CLI::App* brute = app.add_subcommand("bruteforce", "Verify on the explicit Cayley graph");
  common(brute, true);
  brute->add_flag("--slow", rc.slow, "Allow |G| up to 30000 (q = 13)");
  brute->add_option("--edges", rc.edges, "Write a gzip edge list to this path");

  CLI::App* all = app.add_subcommand("certify-all", "Certify every valid (q, ell) with q <= max-q");
  common(all, false);
  all->add_option("--max-q", rc.max_q, "Largest q to sweep")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    rc.format = parse_format(format);
    rc.cache_dir = cache_dir;
    if (*certify) return cmd_certify(rc, out, err);
    if (*report) return cmd_report(rc, out, err);
    if (*brute) return cmd_bruteforce(rc, out, err);
    if (*all) return cmd_certify_all(rc, out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CheckFailure& e) {
    err << json{{"error", "check failed"}, {"detail", e.what()}}.dump(2) << '\n';
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    err << json{{"error", "internal"}, {"detail", e.what()}}.dump(2) << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace ekr
