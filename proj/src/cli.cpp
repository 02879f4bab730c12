#include "qparity/cli.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "qparity/application.hpp"
#include "qparity/oracle.hpp"
#include "qparity/report.hpp"
#include "qparity/selftest.hpp"
#include "qparity/series_io.hpp"
#include "qparity/special_matrix.hpp"
#include "qparity/spectrum.hpp"

namespace qparity::cli {

namespace {

struct CommonOpts {
  std::string format = "csv";
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", c.out_path, "Also write the report to this file");
}

void emit(const RunReport& rep, const CommonOpts& c, std::ostream& out) {
  std::ostringstream buf;
  if (c.format == "json")
    write_report_json(buf, rep);
  else
    write_report_csv(buf, rep);
  out << buf.str();
  if (!c.out_path.empty()) {
    std::ofstream f(c.out_path);
    if (!f) throw std::runtime_error("cannot open output file: " + c.out_path);
    f << buf.str();
  }
}

int verdict_status(const RunReport& rep) {
  return rep.verdict == "pass" ? 0 : 1;
}

std::string join_longs(const std::vector<long>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

int cmd_spectra(int d, int kappa, long max_n, const CommonOpts& c,
                std::ostream& out) {
  RunReport rep;
  rep.command = "spectra";
  rep.params = {{"d", std::to_string(d)},
                {"k", std::to_string(kappa)},
                {"max-n", std::to_string(max_n)}};
  ReportTable t;
  t.name = "eigenvalues";
  t.header = {"n", "exact", "float"};
  if (d == 3) {
    for (const auto& e : lambda_fast_sequence(kappa, max_n))
      t.rows.push_back({std::to_string(e.n), e.lambda.str(),
                        float_str(e.float_approx)});
  } else {
    for (long n = 0; n <= max_n; ++n) {
      const BigRational lam = lambda_direct(d, kappa, n);
      t.rows.push_back({std::to_string(n), lam.str(), float_str(lam.to_double())});
    }
  }
  rep.tables.push_back(std::move(t));
  rep.verdict = "pass";
  emit(rep, c, out);
  return 0;
}

int cmd_certify(int kappa, long cutoff, const CommonOpts& c,
                std::ostream& out) {
  RunReport rep;
  rep.command = "certify";
  rep.params = {{"k", std::to_string(kappa)},
                {"cutoff", std::to_string(cutoff)}};
  try {
    const CertifiedTop2 top = certify_top2(kappa, cutoff);
    rep.results = {{"alpha", top.alpha.str()},
                   {"alpha_float", float_str(top.alpha.to_double())},
                   {"alpha_indices", join_longs(top.alpha_indices)},
                   {"beta", top.beta.str()},
                   {"beta_float", float_str(top.beta.to_double())},
                   {"beta_indices", join_longs(top.beta_indices)},
                   {"certificate", top.certificate}};
    rep.verdict = "pass";
  } catch (const CertificationError& e) {
    rep.results = {{"error", e.what()}};
    rep.verdict = "fail";
  }
  emit(rep, c, out);
  return verdict_status(rep);
}

int cmd_quarter(const std::string& kappa_arg, long max_n, const CommonOpts& c,
                std::ostream& out) {
  std::vector<int> ks;
  if (kappa_arg == "all") {
    ks = {0, 1, 2, 3};
  } else {
    ks = {std::stoi(kappa_arg)};
  }
  RunReport rep;
  rep.command = "quarter-search";
  rep.params = {{"k", kappa_arg}, {"max-n", std::to_string(max_n)}};
  ReportTable t;
  t.name = "hits";
  t.header = {"k", "n"};
  bool any = false;
  for (int k : ks) {
    for (long n : quarter_search(k, max_n)) {
      t.rows.push_back({std::to_string(k), std::to_string(n)});
      any = true;
    }
  }
  rep.results = {{"hit_count", std::to_string(t.rows.size())}};
  rep.tables.push_back(std::move(t));
  rep.verdict = any ? "fail" : "pass";
  emit(rep, c, out);
  return verdict_status(rep);
}

int cmd_figure1(long count, const CommonOpts& c, std::ostream& out) {
  ReportTable t;
  t.name = "figure1";
  t.header = {"series", "n", "exact", "float"};
  for (int k = 0; k <= 1; ++k) {
    const std::string tag = k == 0 ? "G0" : "G1";
    for (const auto& row : figure_data(k, count))
      t.rows.push_back({tag, std::to_string(row.n), row.value.str(),
                        float_str(row.approx)});
  }
  if (c.format == "json") {
    RunReport rep;
    rep.command = "figure1";
    rep.params = {{"count", std::to_string(count)}};
    rep.tables.push_back(std::move(t));
    rep.verdict = "pass";
    emit(rep, c, out);
    return 0;
  }
  // Plot-ready bare CSV.
  std::ostringstream buf;
  write_table_csv(buf, t);
  out << buf.str();
  if (!c.out_path.empty()) {
    std::ofstream f(c.out_path);
    if (!f) throw std::runtime_error("cannot open output file: " + c.out_path);
    f << buf.str();
  }
  return 0;
}

int cmd_eigenvector(int d, int kappa, int n, const CommonOpts& c,
                    std::ostream& out) {
  RunReport rep;
  rep.command = "eigenvector";
  rep.params = {{"d", std::to_string(d)},
                {"k", std::to_string(kappa)},
                {"n", std::to_string(n)}};
  const EigenvectorResult res = eigenvector_poly(d, kappa, n);
  const BigRational lam = lambda_direct(d, kappa, n);
  rep.results = {{"polynomial", res.poly.str()},
                 {"degenerate", res.degenerate ? "true" : "false"},
                 {"lambda", lam.str()},
                 {"harmonic", poly_laplacian(res.poly).is_zero() ? "true" : "false"}};
  rep.verdict = "pass";
  emit(rep, c, out);
  return 0;
}

int cmd_special_check(const std::string& file, const std::string& builtin,
                      int order, const CommonOpts& c, std::ostream& out) {
  TruncatedSeries f(3, 0);
  std::string source;
  if (!file.empty()) {
    f = read_sparse_series_file(file);
    source = file;
  } else {
    source = builtin;
    if (builtin == "identity") {
      f = identity_f(order);
    } else if (builtin.size() == 2 && builtin[0] == 'F' && builtin[1] >= '0' &&
               builtin[1] <= '3') {
      f = f_app_series(builtin[1] - '0', order);
    } else {
      throw CLI::ValidationError("--builtin",
                                 "expected identity or F0..F3, got " + builtin);
    }
  }

  RunReport rep;
  rep.command = "special-check";
  rep.params = {{"input", source}, {"order", std::to_string(f.order())}};
  const SpecialSeriesPair pair = make_special_pair(f);
  const SpecialityWitness& w = pair.witness;
  rep.results = {{"commute", w.commute ? "true" : "false"},
                 {"lde_residual_zero", w.lde_zero ? "true" : "false"},
                 {"recursion", w.recursion ? "true" : "false"},
                 {"z_independent", w.z_independent ? "true" : "false"},
                 {"criteria_agree", w.criteria_agree() ? "true" : "false"},
                 {"special", w.special() ? "true" : "false"}};
  if (w.special()) {
    ReportTable t;
    t.name = "eigenvalues";
    t.header = {"n", "e_n", "float"};
    const int nmax = std::min(f.order(), 12);
    for (int n = 0; n <= nmax; ++n) {
      const BigRational e = eigen_from_h(pair.h, n);
      t.rows.push_back({std::to_string(n), e.str(), float_str(e.to_double())});
    }
    rep.tables.push_back(std::move(t));
  }
  rep.verdict = w.criteria_agree() ? "pass" : "fail";
  emit(rep, c, out);
  return verdict_status(rep);
}

int cmd_bridge_verify(int kappa, int S, const CommonOpts& c,
                      std::ostream& out) {
  RunReport rep;
  rep.command = "bridge-verify";
  rep.params = {{"k", std::to_string(kappa)}, {"S", std::to_string(S)}};

  const GramReport gram = gram_matrix_exact(kappa, S);
  const bool annihilated = annihilation_check(
      f_app_series(kappa, S + ApplicationParams::of(kappa).p), S);

  rep.results = {
      {"dimension", std::to_string(gram.dimension)},
      {"rank", std::to_string(gram.rank)},
      {"rank_bound_ok", gram.rank_ok ? "true" : "false"},
      {"spectrum_ok", gram.spectrum_ok ? "true" : "false"},
      {"mtilde_annihilated", annihilated ? "true" : "false"}};
  if (gram.scalar_mismatch)
    rep.results.push_back({"scalar_mismatch", gram.mismatch_scalar.str()});

  ReportTable spect;
  spect.name = "nonzero_spectrum";
  spect.header = {"computed", "expected"};
  const size_t rows = std::max(gram.nonzero_spectrum.size(), gram.expected.size());
  for (size_t i = 0; i < rows; ++i)
    spect.rows.push_back(
        {i < gram.nonzero_spectrum.size() ? gram.nonzero_spectrum[i].str() : "",
         i < gram.expected.size() ? gram.expected[i].str() : ""});
  rep.tables.push_back(std::move(spect));

  ReportTable mat;
  mat.name = "ratio_matrix";
  mat.header = {"row", "entries"};
  for (int i = 0; i < gram.ratio.size(); ++i) {
    std::ostringstream os;
    for (int j = 0; j < gram.ratio.size(); ++j)
      os << (j ? " " : "") << gram.ratio.at(i, j).str();
    mat.rows.push_back({std::to_string(i), os.str()});
  }
  rep.tables.push_back(std::move(mat));

  rep.verdict = gram.pass && annihilated ? "pass" : "fail";
  emit(rep, c, out);
  return verdict_status(rep);
}

int cmd_oracle(const std::string& check, int r, int kappa, double a_re,
               double a_im, int eps, double tol, const CommonOpts& c,
               std::ostream& out) {
  RunReport rep;
  rep.command = "oracle";
  rep.params = {{"check", check}, {"tol", float_str(tol)}};
  const std::complex<double> a(a_re, a_im);
  bool pass = true;

  if (check == "strichartz") {
    rep.params.push_back({"r", std::to_string(r)});
    rep.params.push_back({"a", float_str(a_re) + "+" + float_str(a_im) + "i"});
    const GaussianWaveSpec spec{r, a, 1.0};
    const IntegralResult I = strichartz_l6(spec);
    const double measured = std::sqrt(12.0) * I.value;
    const double factor = r == 0 ? 1.0 : 5.0 / 9.0;
    const double target = factor * std::pow(l2_norm_sq(spec), 3.0);
    pass = I.converged && std::abs(measured - target) <= tol * std::abs(target);
    rep.results = {{"sqrt12_l6_integral", float_str(measured)},
                   {"target", float_str(target)},
                   {"rel_deviation", float_str(std::abs(measured / target - 1.0))},
                   {"error_estimate", float_str(I.error_estimate * std::sqrt(12.0))},
                   {"t_truncation", float_str(I.t_truncation)},
                   {"evaluations", std::to_string(I.evaluations)}};
    rep.verdict = !I.converged ? "non-converged" : (pass ? "pass" : "fail");
  } else if (check == "qform") {
    rep.params.push_back({"k", std::to_string(kappa)});
    rep.params.push_back({"a", float_str(a_re) + "+" + float_str(a_im) + "i"});
    const IntegralResult q = q_form_numeric(kappa, a);
    const double targets[4] = {1.0, 1.0 / 3.0, 1.0 / 3.0, 5.0 / 9.0};
    pass = q.converged &&
           std::abs(q.value - targets[kappa]) <= tol * targets[kappa];
    rep.results = {{"q_over_norm", float_str(q.value)},
                   {"target", float_str(targets[kappa])},
                   {"rel_deviation",
                    float_str(std::abs(q.value / targets[kappa] - 1.0))},
                   {"error_estimate", float_str(q.error_estimate)},
                   {"evaluations", std::to_string(q.evaluations)}};
    rep.verdict = !q.converged ? "non-converged" : (pass ? "pass" : "fail");
  } else if (check == "kernel") {
    rep.params.push_back({"eps", std::to_string(eps)});
    const KernelCheckResult res =
        kernel_reproduce_check(eps, default_kernel_samples());
    pass = res.all_converged && res.max_deviation <= tol;
    ReportTable t;
    t.name = "samples";
    t.header = {"x", "w", "t", "closed", "quadrature", "deviation"};
    for (const auto& row : res.rows)
      t.rows.push_back({float_str(row.sample.x), float_str(row.sample.w),
                        float_str(row.sample.t), float_str(row.closed_value),
                        float_str(row.quad_value), float_str(row.deviation)});
    rep.tables.push_back(std::move(t));
    rep.results = {{"max_deviation", float_str(res.max_deviation)}};
    rep.verdict = !res.all_converged ? "non-converged" : (pass ? "pass" : "fail");
  } else {  // constants
    const FoschiReport fr = foschi_constant_check(tol);
    rep.results = {{"even_ratio", float_str(fr.even_ratio)},
                   {"even_target", float_str(fr.even_target)},
                   {"odd_ratio", float_str(fr.odd_ratio)},
                   {"odd_target", float_str(fr.odd_target)},
                   {"odd_even_quotient", float_str(fr.quotient)},
                   {"quotient_target", float_str(fr.quotient_target)}};
    rep.verdict = fr.pass ? "pass" : "fail";
  }
  emit(rep, c, out);
  return verdict_status(rep);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "qparity: exact spectra of the diagonal-trace Strichartz form under "
      "parity constraints, with certified bounds and numeric cross-checks"};
  app.require_subcommand(1);

  // spectra
  int sp_d = 3, sp_k = 0;
  long sp_maxn = 20;
  CommonOpts sp_c;
  auto* sp = app.add_subcommand("spectra", "Exact eigenvalue table");
  sp->add_option("--d", sp_d, "Dimension (>= 3)")->check(CLI::Range(3, 8));
  sp->add_option("--k", sp_k, "Parity class")->required();
  sp->add_option("--max-n", sp_maxn, "Largest spherical-harmonic degree");
  add_common(sp, sp_c);

  // certify
  int ce_k = 0;
  long ce_cutoff = 2000;
  CommonOpts ce_c;
  auto* ce = app.add_subcommand("certify",
                                "Certified top-two eigenvalues (d = 3)");
  ce->add_option("--k", ce_k, "Parity class")->required()->check(CLI::Range(0, 3));
  ce->add_option("--cutoff", ce_cutoff, "Exact scan bound (>= 1000)");
  add_common(ce, ce_c);

  // quarter-search
  std::string qs_k = "all";
  long qs_maxn = 100000;
  CommonOpts qs_c;
  auto* qs = app.add_subcommand("quarter-search",
                                "Search for exact 1/4 coefficients");
  qs->add_option("--k", qs_k, "Parity class (0..3 or 'all')");
  qs->add_option("--max-n", qs_maxn, "Scan bound");
  add_common(qs, qs_c);

  // figure1
  long f1_count = 501;
  CommonOpts f1_c;
  auto* f1 = app.add_subcommand("figure1",
                                "Emit live-parity coefficients of G0 and G1");
  f1->add_option("--count", f1_count, "Rows per series");
  add_common(f1, f1_c);

  // eigenvector
  int ev_d = 3, ev_k = 0, ev_n = 0;
  CommonOpts ev_c;
  auto* ev = app.add_subcommand("eigenvector",
                                "Zonal eigenvector polynomial");
  ev->add_option("--d", ev_d, "Dimension")->check(CLI::Range(3, 6));
  ev->add_option("--k", ev_k, "Parity class")->required();
  ev->add_option("--n", ev_n, "Degree")->required();
  add_common(ev, ev_c);

  // special-check
  std::string sc_file, sc_builtin;
  int sc_order = 12;
  CommonOpts sc_c;
  auto* sc = app.add_subcommand("special-check",
                                "Run the four specialness criteria on a series");
  sc->add_option("--file", sc_file, "Sparse series file (order: N; a b c p/q)");
  sc->add_option("--builtin", sc_builtin, "identity or F0..F3");
  sc->add_option("--order", sc_order, "Box order for builtins");
  add_common(sc, sc_c);

  // bridge-verify
  int bv_k = 0, bv_s = 2;
  CommonOpts bv_c;
  auto* bv = app.add_subcommand(
      "bridge-verify", "Exact Gram spectrum against closed eigenvalues");
  bv->add_option("--k", bv_k, "Parity class")->required()->check(CLI::Range(0, 3));
  bv->add_option("--S", bv_s, "Basis degree")->check(CLI::Range(0, 6));
  add_common(bv, bv_c);

  // oracle
  std::string or_check = "constants";
  int or_r = 0, or_k = 0, or_eps = 1;
  double or_are = 3.14159265358979323846, or_aim = 0.0, or_tol = 1e-6;
  CommonOpts or_c;
  auto* orc = app.add_subcommand("oracle", "Floating-point analytic checks");
  orc->add_option("--check", or_check, "Which check to run")
      ->check(CLI::IsMember({"strichartz", "qform", "kernel", "constants"}));
  orc->add_option("--r", or_r, "Parity exponent")->check(CLI::Range(0, 1));
  orc->add_option("--k", or_k, "Parity class for qform")->check(CLI::Range(0, 3));
  orc->add_option("--a-re", or_are, "Re of the Gaussian width");
  orc->add_option("--a-im", or_aim, "Im of the Gaussian width");
  orc->add_option("--eps", or_eps, "Kernel parity, +1 or -1");
  orc->add_option("--tol", or_tol, "Comparison tolerance");
  add_common(orc, or_c);

  // selftest
  long st_sweep = 100000;
  auto* st = app.add_subcommand("selftest", "Run the full acceptance suite");
  st->add_option("--sweep-max", st_sweep,
                 "Bound for the two n-sweeps (default 100000)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const auto t0 = std::chrono::steady_clock::now();
  int status = 2;
  try {
    if (sp->parsed()) {
      if (sp_k < 0 || sp_k > sp_d)
        throw std::invalid_argument("spectra: k must be in [0, d]");
      status = cmd_spectra(sp_d, sp_k, sp_maxn, sp_c, out);
    } else if (ce->parsed()) {
      status = cmd_certify(ce_k, ce_cutoff, ce_c, out);
    } else if (qs->parsed()) {
      status = cmd_quarter(qs_k, qs_maxn, qs_c, out);
    } else if (f1->parsed()) {
      status = cmd_figure1(f1_count, f1_c, out);
    } else if (ev->parsed()) {
      status = cmd_eigenvector(ev_d, ev_k, ev_n, ev_c, out);
    } else if (sc->parsed()) {
      if (sc_file.empty() == sc_builtin.empty())
        throw std::invalid_argument(
            "special-check: give exactly one of --file or --builtin");
      status = cmd_special_check(sc_file, sc_builtin, sc_order, sc_c, out);
    } else if (bv->parsed()) {
      status = cmd_bridge_verify(bv_k, bv_s, bv_c, out);
    } else if (orc->parsed()) {
      status = cmd_oracle(or_check, or_r, or_k, or_are, or_aim, or_eps, or_tol,
                          or_c, out);
    } else if (st->parsed()) {
      AcceptanceOptions opts;
      opts.sweep_max = st_sweep;
      status = run_acceptance(out, opts) == 0 ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "elapsed: "
      << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
             .count()
      << " s\n";
  return status;
}

}  // namespace qparity::cli
