// Command-line surface: spectrum reports, TV/cutoff curves, Monte Carlo
// runs, Stirling table export, and the exact identity battery.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource
// cap exceeded.  Every run emits a manifest (<out>.manifest.json, or stderr
// when writing to stdout).

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

#include <CLI11.hpp>

#include "t2r/json_io.hpp"
#include "t2r/manifest.hpp"
#include "t2r/mixing.hpp"
#include "t2r/simulate.hpp"
#include "t2r/spectral.hpp"
#include "t2r/stirling.hpp"
#include "t2r/verify.hpp"

namespace {

bool use_color() {
  if (std::getenv("NO_COLOR") != nullptr) return false;
  return isatty(fileno(stdout));
}

std::string pass_tag(bool pass) {
  if (!use_color()) return pass ? "[PASS]" : "[FAIL]";
  return pass ? "\033[32m[PASS]\033[0m" : "\033[31m[FAIL]\033[0m";
}

// Streams either to --out or stdout; remembers which for the manifest.
struct OutputTarget {
  explicit OutputTarget(const std::string& path) : path_(path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw t2r::UsageError("cannot open output file: " + path);
    }
  }
  std::ostream& os() { return path_.empty() ? std::cout : file_; }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::ofstream file_;
};

void emit_manifest(t2r::RunManifest m, const OutputTarget& target) {
  m.timestamp_utc = t2r::now_utc();
  if (!target.path().empty()) {
    m.outputs.push_back(target.path());
    if (t2r::write_manifest(m, target.path())) return;
  }
  std::cerr << t2r::manifest_to_json(m) << '\n';
}

std::string fmt_double(double x, int decimals) { return t2r::double_to_decimal(x, decimals); }

int cmd_spectrum(int n, int p, const std::string& method, const std::string& format,
                 const std::string& out, int decimals) {
  (void)decimals;
  t2r::SpectrumReport rep = t2r::multiplicity_report(n, p, method);
  OutputTarget target(out);
  if (format == "json") {
    target.os() << t2r::spectrum_to_json(rep) << '\n';
  } else {
    target.os() << "G_{" << n << "," << p << "}  transition spectrum (" << rep.method
                << " route)\n";
    for (const auto& e : rep.eigenvalues)
      target.os() << "  eigenvalue " << e.value.get_str() << "  (i=" << e.i
                  << ")  multiplicity " << e.multiplicity.get_str() << '\n';
    if (!rep.factored.empty()) target.os() << "  char poly: " << rep.factored << '\n';
  }
  t2r::RunManifest m;
  m.command = "spectrum";
  m.parameters = {{"n", std::to_string(n)},
                  {"p", std::to_string(p)},
                  {"method", method},
                  {"format", format}};
  emit_manifest(std::move(m), target);
  return 0;
}

int cmd_tvd(int n, int p, long k, long kmin, long kmax, long kstep, const std::string& mode,
            const std::string& format, const std::string& out, int decimals) {
  std::vector<long> ks;
  if (k >= 0) {
    ks.push_back(k);
  } else {
    if (kmin < 0 || kmax < kmin) throw t2r::UsageError("tvd: need --k or --kmin <= --kmax");
    if (kstep < 1) throw t2r::UsageError("tvd: --kstep must be >= 1");
    for (long kk = kmin; kk <= kmax; kk += kstep) ks.push_back(kk);
  }
  const std::vector<t2r::TVRecord> records = t2r::tv_curve(n, p, ks, mode);
  if (p == 1)
    std::cerr << "note: p = 1 is outside the stated hypothesis of the closed-form bound;"
              << " values are still exact\n";
  OutputTarget target(out);
  if (format == "json") {
    target.os() << t2r::tv_records_to_json(records, decimals) << '\n';
  } else if (records.size() == 1 && records[0].tv_exact) {
    const t2r::TVRecord& r = records[0];
    target.os() << "n=" << n << " p=" << p << " k=" << r.k << "\n"
                << "  tv_exact = " << r.tv_exact->get_num().get_str() << "/"
                << r.tv_exact->get_den().get_str() << " = "
                << t2r::rat_to_decimal(*r.tv_exact, decimals) << "\n"
                << "  tv_upper = " << fmt_double(r.tv_upper, decimals) << "\n"
                << "  threshold A = " << r.threshold_A << "\n";
  } else {
    t2r::write_tv_csv(target.os(), records, decimals);
  }
  t2r::RunManifest m;
  m.command = "tvd";
  m.parameters = {{"n", std::to_string(n)}, {"p", std::to_string(p)},
                  {"mode", mode},           {"format", format},
                  {"kmin", std::to_string(ks.front())}, {"kmax", std::to_string(ks.back())},
                  {"kstep", std::to_string(kstep)}};
  emit_manifest(std::move(m), target);
  return 0;
}

int cmd_cutoff(int n, int p, double cmin, double cmax, double step, const std::string& mode,
               const std::string& format, const std::string& out, int decimals) {
  const bool exact = mode == "exact";
  std::vector<t2r::TVRecord> records;
  if (cmin > cmax) {
    std::cerr << "warning: empty grid (cmin > cmax)\n";
  } else {
    // Forward-only sessions require ascending k, i.e. ascending c.
    const long count = static_cast<long>(std::floor((cmax - cmin) / step + 1e-9)) + 1;
    for (long i = 0; i < count; ++i) {
      const double c = cmin + static_cast<double>(i) * step;
      if (c < 0 && exact) {
        t2r::CutoffLowerReport rep = t2r::cutoff_lower(n, p, -c, true);
        if (!rep.point.lower_flag)
          std::cerr << "note: c=" << c << " lower-bound surrogate unavailable\n";
        if (!rep.window_ok)
          std::cerr << "note: c=" << c << " outside the admissible lower-bound window\n";
        records.push_back(std::move(rep.point));
      } else {
        records.push_back(t2r::cutoff_upper(n, p, c, exact));
      }
    }
  }
  OutputTarget target(out);
  if (format == "json")
    target.os() << t2r::tv_records_to_json(records, decimals) << '\n';
  else
    t2r::write_tv_csv(target.os(), records, decimals);
  t2r::RunManifest m;
  m.command = "cutoff";
  m.parameters = {{"n", std::to_string(n)},       {"p", std::to_string(p)},
                  {"cmin", fmt_double(cmin, 6)},  {"cmax", fmt_double(cmax, 6)},
                  {"step", fmt_double(step, 6)},  {"mode", mode},
                  {"format", format}};
  emit_manifest(std::move(m), target);
  return 0;
}

int cmd_simulate(int n, int p, long k, long trials, std::uint64_t seed, int threads,
                 const std::string& out, const std::string& histogram, int decimals) {
  t2r::ChainConfig cfg;
  cfg.n = n;
  cfg.p = p;
  cfg.k = k;
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.threads = threads;
  const t2r::SimulationReport rep = t2r::simulate_report(cfg);
  OutputTarget target(out);
  t2r::write_simulation_csv(target.os(), rep, decimals);
  t2r::RunManifest m;
  m.command = "simulate";
  m.parameters = {{"n", std::to_string(n)},         {"p", std::to_string(p)},
                  {"k", std::to_string(k)},         {"trials", std::to_string(trials)},
                  {"seed", std::to_string(seed)},   {"threads", std::to_string(threads)}};
  m.rng_algorithm = t2r::kRngAlgorithm;
  if (!histogram.empty()) {
    std::ofstream hs(histogram);
    if (!hs) throw t2r::UsageError("cannot open histogram file: " + histogram);
    t2r::write_histogram_csv(hs, rep.dist);
    m.outputs.push_back(histogram);
  }
  emit_manifest(std::move(m), target);
  return 0;
}

int cmd_verify(int n_max, int p_max, const std::string& suite) {
  t2r::VerifyOptions opts;
  opts.n_max = n_max;
  opts.p_max = p_max;
  std::vector<t2r::CheckResult> results;
  if (suite == "algebra")
    results = t2r::verify_algebra(opts);
  else if (suite == "spectral")
    results = t2r::verify_spectral(opts);
  else if (suite == "mixing")
    results = t2r::verify_mixing(opts);
  else
    results = t2r::verify_all(opts);
  for (const auto& r : results)
    std::cout << pass_tag(r.pass) << ' ' << r.name << "  (" << r.detail << ")\n";
  t2r::RunManifest m;
  m.command = "verify";
  m.parameters = {{"n_max", std::to_string(n_max)},
                  {"p_max", std::to_string(p_max)},
                  {"suite", suite}};
  m.timestamp_utc = t2r::now_utc();
  std::cerr << t2r::manifest_to_json(m) << '\n';
  return t2r::all_passed(results) ? 0 : 1;
}

int cmd_stirling(const std::string& kind, long kmin, long kmax, int amin, int amax,
                 long mode_k, long menon_k, long menon_n, const std::string& out,
                 int decimals) {
  OutputTarget target(out);
  bool wrote_table = false;
  if (kmax >= kmin && amax >= amin) {
    t2r::write_stirling_csv(target.os(), kind == "first" ? 1 : 2, kmin, kmax, amin, amax);
    wrote_table = true;
  }
  if (mode_k > 0) {
    const t2r::ModeReport rep = t2r::stirling_mode(mode_k);
    std::ostream& os = wrote_table ? std::cout : target.os();
    os << "mode r_" << mode_k << " = " << rep.r_exact
       << "  (k/log k = " << fmt_double(rep.asymptote, decimals) << ")\n";
  }
  if (menon_k > 0 && menon_n > 0) {
    const t2r::MenonEstimate est = t2r::menon_approx(menon_k, menon_n);
    std::ostream& os = wrote_table ? std::cout : target.os();
    os << "menon k=" << menon_k << " n=" << menon_n << "  lambda=" << est.lambda.str(decimals)
       << "  log_estimate=" << est.log_value.str(decimals)
       << "  hypothesis flags: ratio=" << (est.ratio_ok ? "ok" : "outside")
       << " gap=" << (est.gap_ok ? "ok" : "outside") << "\n";
  }
  t2r::RunManifest m;
  m.command = "stirling";
  m.parameters = {{"kind", kind},
                  {"kmin", std::to_string(kmin)},
                  {"kmax", std::to_string(kmax)},
                  {"amin", std::to_string(amin)},
                  {"amax", std::to_string(amax)},
                  {"mode_k", std::to_string(mode_k)},
                  {"menon_k", std::to_string(menon_k)},
                  {"menon_n", std::to_string(menon_n)}};
  emit_manifest(std::move(m), target);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact top-to-random shuffle toolkit on colored permutation groups"};
  app.require_subcommand(1);
  int decimals = 12;
  app.add_option("--decimals", decimals, "significant digits for decimal output")
      ->capture_default_str();

  // spectrum
  auto* sp = app.add_subcommand("spectrum", "eigenvalue multiplicities of the transition operator");
  int sp_n = 3, sp_p = 2;
  std::string sp_method = "formula", sp_format = "text", sp_out;
  sp->add_option("--n", sp_n, "number of cards")->required();
  sp->add_option("--p", sp_p, "number of colors")->required();
  sp->add_option("--method", sp_method, "formula|trace|charpoly")
      ->check(CLI::IsMember({"formula", "trace", "charpoly"}))
      ->capture_default_str();
  sp->add_option("--format", sp_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  sp->add_option("--out", sp_out, "output file (default stdout)");

  // tvd
  auto* tv = app.add_subcommand("tvd", "exact/log-space total-variation distance from uniform");
  int tv_n = 3, tv_p = 2;
  long tv_k = -1, tv_kmin = -1, tv_kmax = -1, tv_kstep = 1;
  std::string tv_mode = "exact", tv_format = "csv", tv_out;
  tv->add_option("--n", tv_n)->required();
  tv->add_option("--p", tv_p)->required();
  tv->add_option("--k", tv_k, "single step count");
  tv->add_option("--kmin", tv_kmin, "range start");
  tv->add_option("--kmax", tv_kmax, "range end");
  tv->add_option("--kstep", tv_kstep, "range stride")->capture_default_str();
  tv->add_option("--mode", tv_mode, "exact|logspace")
      ->check(CLI::IsMember({"exact", "logspace"}))
      ->capture_default_str();
  tv->add_option("--format", tv_format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  tv->add_option("--out", tv_out);

  // cutoff
  auto* co = app.add_subcommand("cutoff", "TV profile on the k = floor(n log n + c n) grid");
  int co_n = 100, co_p = 2;
  double co_cmin = -2, co_cmax = 5, co_step = 1;
  std::string co_mode = "exact", co_format = "csv", co_out;
  co->add_option("--n", co_n)->required();
  co->add_option("--p", co_p)->required();
  co->add_option("--cmin", co_cmin)->capture_default_str();
  co->add_option("--cmax", co_cmax)->capture_default_str();
  co->add_option("--step", co_step)->capture_default_str();
  co->add_option("--mode", co_mode, "exact|logspace")
      ->check(CLI::IsMember({"exact", "logspace"}))
      ->capture_default_str();
  co->add_option("--format", co_format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  co->add_option("--out", co_out);

  // simulate
  auto* si = app.add_subcommand("simulate", "Monte Carlo trajectories of the physical shuffle");
  int si_n = 3, si_p = 2, si_threads = 1;
  long si_k = 0, si_trials = 1;
  std::uint64_t si_seed = 1;
  std::string si_out, si_hist;
  si->add_option("--n", si_n)->required();
  si->add_option("--p", si_p)->required();
  si->add_option("--k", si_k)->required();
  si->add_option("--trials", si_trials)->required();
  si->add_option("--seed", si_seed)->capture_default_str();
  si->add_option("--threads", si_threads, "worker count (result is schedule-invariant)")
      ->capture_default_str();
  si->add_option("--out", si_out);
  si->add_option("--histogram", si_hist, "also dump the full state histogram CSV");

  // verify
  auto* ve = app.add_subcommand("verify", "exact identity battery");
  int ve_nmax = 3, ve_pmax = 2;
  std::string ve_suite = "all";
  ve->add_option("--n-max", ve_nmax)->capture_default_str();
  ve->add_option("--p-max", ve_pmax)->capture_default_str();
  ve->add_option("--suite", ve_suite, "algebra|spectral|mixing|all")
      ->check(CLI::IsMember({"algebra", "spectral", "mixing", "all"}))
      ->capture_default_str();

  // stirling
  auto* st = app.add_subcommand("stirling", "Stirling table export / mode / asymptotics");
  std::string st_kind = "second", st_out;
  long st_kmin = 0, st_kmax = -1, st_mode_k = 0, st_menon_k = 0, st_menon_n = 0;
  int st_amin = 0, st_amax = -1;
  st->add_option("--kind", st_kind, "second|first")
      ->check(CLI::IsMember({"second", "first"}))
      ->capture_default_str();
  st->add_option("--kmin", st_kmin);
  st->add_option("--kmax", st_kmax);
  st->add_option("--amin", st_amin);
  st->add_option("--amax", st_amax);
  st->add_option("--mode-k", st_mode_k, "print the row mode r_k");
  st->add_option("--menon-k", st_menon_k, "asymptotic estimate: k");
  st->add_option("--menon-n", st_menon_n, "asymptotic estimate: n");
  st->add_option("--out", st_out);

  try {
    app.parse(argc, argv);
    if (sp->parsed())
      return cmd_spectrum(sp_n, sp_p, sp_method, sp_format, sp_out, decimals);
    if (tv->parsed())
      return cmd_tvd(tv_n, tv_p, tv_k, tv_kmin, tv_kmax, tv_kstep, tv_mode, tv_format, tv_out,
                     decimals);
    if (co->parsed())
      return cmd_cutoff(co_n, co_p, co_cmin, co_cmax, co_step, co_mode, co_format, co_out,
                        decimals);
    if (si->parsed())
      return cmd_simulate(si_n, si_p, si_k, si_trials, si_seed, si_threads, si_out, si_hist,
                          decimals);
    if (ve->parsed()) return cmd_verify(ve_nmax, ve_pmax, ve_suite);
    if (st->parsed())
      return cmd_stirling(st_kind, st_kmin, st_kmax, st_amin, st_amax, st_mode_k, st_menon_k,
                          st_menon_n, st_out, decimals);
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const t2r::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const t2r::ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return 3;
  } catch (const t2r::InternalError& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
