#include "qparity/selftest.hpp"

#include <chrono>
#include <cmath>
#include <sstream>
#include <vector>

#include "qparity/application.hpp"
#include "qparity/oracle.hpp"
#include "qparity/orthopoly.hpp"
#include "qparity/special_matrix.hpp"
#include "qparity/spectrum.hpp"

namespace qparity {

namespace {

constexpr double kPi = 3.14159265358979323846;

class Harness {
public:
  explicit Harness(std::ostream& out) : out_(out) {}

  void criterion(int num, const std::string& name, bool ok,
                 const std::string& detail = "") {
    out_ << (ok ? "[PASS] " : "[FAIL] ") << num << ". " << name;
    if (!detail.empty()) out_ << " (" << detail << ")";
    out_ << "\n";
    if (!ok) ++failures_;
  }

  int failures() const { return failures_; }

private:
  std::ostream& out_;
  int failures_ = 0;
};

double seconds_since(
    const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string runtime_detail(double sec, double cap) {
  std::ostringstream os;
  os.precision(1);
  os << std::fixed << "runtime " << sec << "s, cap " << cap << "s";
  return os.str();
}

bool check_certify(std::string& detail) {
  const BigRational alphas[4] = {BigRational(1), BigRational(1, 3),
                                 BigRational(1, 3), BigRational(5, 9)};
  const std::vector<long> alpha_idx[4] = {{0}, {1, 5}, {2}, {3}};
  const BigRational betas[4] = {
      BigRational(8320, 19683), BigRational(469136, 1594323),
      BigRational(232, 729), BigRational(221312, 531441)};
  const std::vector<long> beta_idx[4] = {{10}, {15}, {8}, {13}};
  for (int k = 0; k <= 3; ++k) {
    CertifiedTop2 top;
    try {
      top = certify_top2(k, 2000);
    } catch (const std::exception& e) {
      detail = std::string("kappa ") + std::to_string(k) + ": " + e.what();
      return false;
    }
    if (top.alpha != alphas[k] || top.alpha_indices != alpha_idx[k] ||
        top.beta != betas[k] || top.beta_indices != beta_idx[k]) {
      detail = "kappa " + std::to_string(k) + ": alpha=" + top.alpha.str() +
               " beta=" + top.beta.str();
      return false;
    }
  }
  return true;
}

bool check_triple_agreement(int max_n, std::string& detail) {
  for (int k = 0; k <= 3; ++k) {
    const TruncatedSeries g = g_series(k, max_n);
    const std::vector<SpectrumEntry> fast = lambda_fast_sequence(k, max_n);
    for (int n = 0; n <= max_n; ++n) {
      const BigRational direct = lambda_direct(3, k, n);
      if (direct != g.coeff(n) || direct != fast[n].lambda) {
        detail = "mismatch at kappa=" + std::to_string(k) +
                 " n=" + std::to_string(n);
        return false;
      }
    }
  }
  return true;
}

bool check_equivalence(int order, const std::vector<TruncatedSeries>& f_app,
                       std::string& detail) {
  std::vector<std::pair<TruncatedSeries, bool>> cases;  // series, expected special
  cases.emplace_back(identity_f(order), true);
  for (const auto& f : f_app) cases.emplace_back(f, true);
  cases.emplace_back(TruncatedSeries::constant(3, order, BigRational(1)), false);
  {
    const TruncatedSeries one = TruncatedSeries::constant(3, order, BigRational(1));
    const TruncatedSeries w1 = TruncatedSeries::variable(3, order, 0);
    cases.emplace_back((one - w1).inv(), false);
  }
  cases.emplace_back(
      identity_f(order) +
          TruncatedSeries::monomial(3, order, {1, 1, 1}, BigRational(1)),
      false);

  for (size_t i = 0; i < cases.size(); ++i) {
    const SpecialityWitness w = verify_speciality(cases[i].first);
    if (!w.criteria_agree()) {
      detail = "criteria disagree on series " + std::to_string(i);
      return false;
    }
    if (w.special() != cases[i].second) {
      detail = "unexpected speciality verdict on series " + std::to_string(i);
      return false;
    }
  }

  // Identity example: H = (1+y-xy)^{-1} with e_n = 1 for all n.
  const TruncatedSeries idf = identity_f(order);
  if (f_to_h(idf).h != identity_h(order)) {
    detail = "identity H mismatch";
    return false;
  }
  for (int n = 0; n <= order; ++n)
    if (eigen_from_ev(idf, n) != BigRational(1) ||
        eigen_from_h(identity_h(order), n) != BigRational(1)) {
      detail = "identity eigenvalue != 1 at n=" + std::to_string(n);
      return false;
    }
  return true;
}

bool check_annihilation(int smax, const std::vector<TruncatedSeries>& f_app,
                        int order, std::string& detail) {
  std::vector<TruncatedSeries> series = f_app;
  series.push_back(identity_f(order));
  for (size_t i = 0; i < series.size(); ++i)
    for (int S = 0; S <= smax; ++S)
      if (!annihilation_check(series[i], S)) {
        detail = "series " + std::to_string(i) + " S=" + std::to_string(S);
        return false;
      }
  return true;
}

bool check_gram(int smax, std::string& detail) {
  for (int k = 0; k <= 3; ++k)
    for (int S = 0; S <= smax; ++S) {
      GramReport rep;
      try {
        rep = gram_matrix_exact(k, S);
      } catch (const std::exception& e) {
        detail = "kappa=" + std::to_string(k) + " S=" + std::to_string(S) +
                 ": " + e.what();
        return false;
      }
      if (!rep.pass) {
        std::ostringstream os;
        os << "kappa=" << k << " S=" << S << " rank=" << rep.rank
           << (rep.scalar_mismatch
                   ? " scalar mismatch " + rep.mismatch_scalar.str()
                   : " spectrum/rank mismatch");
        detail = os.str();
        return false;
      }
    }
  return true;
}

bool check_figure(long count, std::string& detail) {
  for (int k = 0; k <= 1; ++k) {
    const auto rows = figure_data(k, count);
    if (static_cast<long>(rows.size()) != count) {
      detail = "row count";
      return false;
    }
    const BigRational quarter(1, 4);
    const BigRational bound_sq(9, 16);  // (0.75)^2
    for (const auto& row : rows) {
      if (row.value < BigRational(0) || row.value > BigRational(1)) {
        detail = "value outside [0,1] at n=" + std::to_string(row.n);
        return false;
      }
      if (row.n >= 4) {
        const BigRational dev = row.value - quarter;
        if (dev * dev * BigRational(row.n) > bound_sq) {
          detail = "deviation bound fails at n=" + std::to_string(row.n);
          return false;
        }
      }
    }
  }
  return true;
}

bool rel_close(double value, double target, double tol) {
  return std::abs(value - target) <= tol * std::abs(target);
}

bool check_oracle(std::string& detail) {
  const double tol = 1e-6;
  const std::complex<double> pi_w(kPi, 0.0);

  // Even Gaussian: sqrt(12) I = ||g||^6 with ||g||^2 = 2^{-1/2}.
  const GaussianWaveSpec even{0, pi_w, 1.0};
  const IntegralResult ie = strichartz_l6(even);
  const double even_target = std::pow(2.0, -1.5);
  if (!ie.converged || !rel_close(std::sqrt(12.0) * ie.value, even_target, tol)) {
    detail = "even Gaussian L6";
    return false;
  }

  // Odd Gaussian: sqrt(12) I = (5/9) ||g||^6 with ||g||^2 = 1/(4 pi sqrt2).
  const GaussianWaveSpec odd{1, pi_w, 1.0};
  const IntegralResult io = strichartz_l6(odd);
  const double odd_norm_sq = 1.0 / (4.0 * kPi * std::sqrt(2.0));
  const double odd_target = (5.0 / 9.0) * std::pow(odd_norm_sq, 3.0);
  if (!io.converged || !rel_close(std::sqrt(12.0) * io.value, odd_target, tol)) {
    detail = "odd Gaussian L6";
    return false;
  }

  // Complex width: same equality case after rescaling by the exact norm.
  const GaussianWaveSpec twisted{1, kPi * std::complex<double>(1.0, 0.3), 1.0};
  const IntegralResult it = strichartz_l6(twisted);
  const double tw_target = (5.0 / 9.0) * std::pow(l2_norm_sq(twisted), 3.0);
  if (!it.converged || !rel_close(std::sqrt(12.0) * it.value, tw_target, tol)) {
    detail = "complex-width L6";
    return false;
  }

  const double q_targets[4] = {1.0, 1.0 / 3.0, 1.0 / 3.0, 5.0 / 9.0};
  for (int k = 0; k <= 3; ++k) {
    const IntegralResult q = q_form_numeric(k, pi_w);
    if (!q.converged || !rel_close(q.value, q_targets[k], tol)) {
      detail = "q form at kappa=" + std::to_string(k);
      return false;
    }
  }

  const FoschiReport fr = foschi_constant_check(1e-5);
  if (!fr.pass) {
    detail = "sharp constant ratios";
    return false;
  }
  return true;
}

bool check_eigenvectors(std::string& detail) {
  const MultiPoly x1 = MultiPoly::variable(3, 0);
  const MultiPoly x2 = MultiPoly::variable(3, 1);
  const MultiPoly x3 = MultiPoly::variable(3, 2);

  const EigenvectorResult e22 = eigenvector_poly(3, 2, 2);
  if (e22.degenerate || e22.poly != x1 * x2) {
    detail = "P(3,2,2)";
    return false;
  }
  const EigenvectorResult e33 = eigenvector_poly(3, 3, 3);
  if (e33.degenerate || e33.poly != x1 * x2 * x3) {
    detail = "P(3,3,3)";
    return false;
  }
  // x1 (x1^4 - 5(x2^2+x3^2) x1^2 + 15 x2^4 - 75 x2^2 x3^2 + 15 x3^4).
  MultiPoly quintic =
      x1.pow(4) - (x2 * x2 + x3 * x3).scaled(BigRational(5)) * x1 * x1 +
      x2.pow(4).scaled(BigRational(15)) -
      (x2 * x2 * x3 * x3).scaled(BigRational(75)) +
      x3.pow(4).scaled(BigRational(15));
  const MultiPoly expected = (x1 * quintic).normalized();
  const EigenvectorResult e15 = eigenvector_poly(3, 1, 5);
  if (e15.degenerate || !e15.poly.proportional_to(expected)) {
    detail = "P(3,1,5)";
    return false;
  }
  for (const auto& [k, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 3}, {1, 5}})
    if (!solid_harmonic_check(3, k, n)) {
      detail = "harmonicity at (" + std::to_string(k) + "," + std::to_string(n) + ")";
      return false;
    }
  return true;
}

}  // namespace

int run_acceptance(std::ostream& out, const AcceptanceOptions& opts) {
  Harness h(out);
  std::string detail;

  {
    const auto t0 = std::chrono::steady_clock::now();
    const bool ok = check_certify(detail);
    const double sec = seconds_since(t0);
    h.criterion(1, "certified top-two eigenvalues, all parity classes",
                ok && sec < 10.0, ok ? runtime_detail(sec, 10.0) : detail);
  }

  detail.clear();
  h.criterion(2, "three-way spectrum agreement to n=" +
                     std::to_string(opts.triple_max_n),
              check_triple_agreement(opts.triple_max_n, detail), detail);

  std::vector<TruncatedSeries> f_app;
  for (int k = 0; k <= 3; ++k)
    f_app.push_back(f_app_series(k, opts.equivalence_order));

  detail.clear();
  h.criterion(3, "specialness criteria equivalence through order " +
                     std::to_string(opts.equivalence_order),
              check_equivalence(opts.equivalence_order, f_app, detail), detail);

  detail.clear();
  h.criterion(4, "annihilation identity to S=" +
                     std::to_string(opts.annihilation_smax),
              check_annihilation(opts.annihilation_smax, f_app,
                                 opts.equivalence_order, detail),
              detail);

  detail.clear();
  {
    bool ok = true;
    for (int k = 0; k <= 3 && ok; ++k)
      if (!e_matches_g(k, opts.closed_match_n)) {
        ok = false;
        detail = "kappa=" + std::to_string(k);
      }
    h.criterion(5, "closed eigenvalues match G coefficients to n=" +
                       std::to_string(opts.closed_match_n),
                ok, detail);
  }

  detail.clear();
  {
    const auto t0 = std::chrono::steady_clock::now();
    const bool ok = check_gram(opts.gram_smax, detail);
    const double sec = seconds_since(t0);
    h.criterion(6, "Gram bridge spectra to S=" + std::to_string(opts.gram_smax),
                ok && sec < 120.0, ok ? runtime_detail(sec, 120.0) : detail);
  }

  detail.clear();
  {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (int k = 0; k <= 3 && ok; ++k) {
      const auto hits = quarter_search(k, opts.sweep_max);
      if (!hits.empty()) {
        ok = false;
        detail = "hit at kappa=" + std::to_string(k) +
                 " n=" + std::to_string(hits.front());
      }
    }
    const double sec = seconds_since(t0);
    h.criterion(7, "no exact 1/4 coefficient to n=" +
                       std::to_string(opts.sweep_max),
                ok && sec < 300.0, ok ? runtime_detail(sec, 300.0) : detail);
  }

  detail.clear();
  h.criterion(8, "figure coefficients: range and 0.75/sqrt(n) envelope",
              check_figure(opts.figure_count, detail), detail);

  detail.clear();
  {
    const TailBoundScan scan = certify_bernstein_third(opts.sweep_max);
    h.criterion(9, "Bernstein tail bound sufficient test to n=" +
                       std::to_string(opts.sweep_max),
                scan.ok,
                scan.ok ? ""
                        : "first failure at n=" +
                              std::to_string(scan.first_failure));
  }

  detail.clear();
  {
    const auto t0 = std::chrono::steady_clock::now();
    const bool ok = check_oracle(detail);
    const double sec = seconds_since(t0);
    h.criterion(10, "analytic constants via Schroedinger oracle",
                ok && sec < 120.0, ok ? runtime_detail(sec, 120.0) : detail);
  }

  detail.clear();
  h.criterion(11, "eigenvector geometry and harmonicity",
              check_eigenvectors(detail), detail);

  out << (h.failures() == 0 ? "ACCEPTANCE: all criteria passed"
                            : "ACCEPTANCE: " + std::to_string(h.failures()) +
                                  " criterion(s) failed")
      << "\n";
  return h.failures();
}

}  // namespace qparity
