#include "qparity/application.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "qparity/orthopoly.hpp"
#include "qparity/quadrature.hpp"
#include "qparity/special_matrix.hpp"
#include "qparity/spectrum.hpp"

namespace qparity {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<BigRational> poly_vector(const MultiPoly& p, int degree) {
  std::vector<BigRational> v(degree + 1, BigRational(0));
  for (const auto& [e, c] : p.terms()) v.at(e[0]) = c;
  return v;
}

std::vector<BigRational> poly_mul_vec(const std::vector<BigRational>& a,
                                      const std::vector<BigRational>& b) {
  std::vector<BigRational> r(a.size() + b.size() - 1, BigRational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      r[i + j].add_mul(a[i], b[j]);
    }
  }
  return r;
}

struct SharedFBuild {
  TruncatedSeries inv_u3;   // 1/(1 - T u)
  TruncatedSeries inv_u1;   // 1/(1 - z1 u)
  TruncatedSeries a;        // (1-z1)/(1-T) = (1-w)/D
  TruncatedSeries sqrt_a;
  TruncatedSeries inv_w;    // 1/(1 - w), common to all four kernel terms
};

/// The kappa-independent pieces of F_kappa at a given box order.
const SharedFBuild& shared_f_build(int order) {
  static std::mutex mu;
  static std::map<int, SharedFBuild> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;

  const int N = order;
  const TruncatedSeries one = TruncatedSeries::constant(3, N, BigRational(1));
  const TruncatedSeries T = TruncatedSeries::variable(3, N, 0);
  const TruncatedSeries w = TruncatedSeries::variable(3, N, 1);
  const TruncatedSeries u = TruncatedSeries::variable(3, N, 2);

  // D = 1 - (8/9)T - (1/9)w;  z1 = ((8/9)w - Tw + (1/9)T)/D.
  const TruncatedSeries d =
      one - T.scaled(BigRational(8, 9)) - w.scaled(BigRational(1, 9));
  const TruncatedSeries inv_d = d.inv();
  const TruncatedSeries z1 =
      (w.scaled(BigRational(8, 9)) - T * w + T.scaled(BigRational(1, 9))) *
      inv_d;

  SharedFBuild b{(one - T * u).inv(), (one - z1 * u).inv(),
                 (one - w) * inv_d, TruncatedSeries(3, N),
                 (one - w).inv()};
  b.sqrt_a = b.a.sqrt();
  auto [pos, inserted] = cache.emplace(order, std::move(b));
  return pos->second;
}

BigRational app_weight(int kappa, int r) {
  // (3-2kappa)/(4*3^r)
  return BigRational(3 - 2 * kappa, 4) / BigRational(3).pow(r);
}

/// Norm ||Q_n^eps||^2 from exact Gaussian moments: expand L_n^{(alpha)}(pi x^2)^2
/// and integrate term by term. Result carries pi^{-r}.
PiScaled laguerre_norm_sq(long n, const BigRational& alpha, int r) {
  const auto l = poly_vector(laguerre_coeffs(n, alpha), n);
  const auto sq = poly_mul_vec(l, l);
  PiScaled sum(BigRational(0), 0);
  for (size_t k = 0; k < sq.size(); ++k) {
    if (sq[k].is_zero()) continue;
    sum += PiScaled(sq[k], static_cast<long>(k)) *
           gaussian_moment(r + static_cast<long>(k));
  }
  return sum;
}

}  // namespace

ApplicationParams ApplicationParams::of(int kappa) {
  if (kappa < 0 || kappa > 3)
    throw std::invalid_argument("ApplicationParams: kappa must be in [0, 3]");
  ApplicationParams p{kappa, kappa / 2, kappa % 2, kappa % 2 == 0 ? 1 : -1};
  return p;
}

CoshSinhCoeffs c_coeffs(int kappa) {
  ApplicationParams::of(kappa);
  const BigRational eighth(1, 8);
  const BigRational sgn = kappa % 2 == 0 ? BigRational(1) : BigRational(-1);
  CoshSinhCoeffs c;
  c.c3 = eighth;
  c.cm3 = sgn * eighth;
  c.c1 = BigRational(3 - 2 * kappa, 8);
  c.cm1 = sgn * c.c1;
  return c;
}

TruncatedSeries z_m_series(int m, int order) {
  if (m != 1 && m != -1 && m != 3 && m != -3)
    throw std::invalid_argument("z_m_series: m must be in {+-1, +-3}");
  const BigRational q(static_cast<long>(m) * m, 9);
  const int N = order;
  const TruncatedSeries one = TruncatedSeries::constant(2, N, BigRational(1));
  const TruncatedSeries w = TruncatedSeries::variable(2, N, 0);
  const TruncatedSeries t = TruncatedSeries::variable(2, N, 1);
  const TruncatedSeries num = w * (one - w * t - (one - t).scaled(q));
  const TruncatedSeries den = one - w * t - (w * (one - t)).scaled(q);
  return num * den.inv();
}

TruncatedSeries f_app_series(int kappa, int order) {
  const ApplicationParams ap = ApplicationParams::of(kappa);
  const SharedFBuild& b = shared_f_build(order);
  TruncatedSeries half_power = ap.r == 0 ? b.sqrt_a : b.a * b.sqrt_a;
  // The 1/(1-w) factor comes from the kernel prefactor of every I_m term; it
  // is required for F to satisfy (FfromH) with (w1,w2,w3) = (T,w,u).
  return b.inv_w * (b.inv_u3.scaled(BigRational(1, 4)) +
                    (half_power * b.inv_u1).scaled(app_weight(kappa, ap.r)));
}

TruncatedSeries h_app_series(int kappa, int order) {
  const ApplicationParams ap = ApplicationParams::of(kappa);
  const int N = order;
  const TruncatedSeries one = TruncatedSeries::constant(2, N, BigRational(1));
  const TruncatedSeries x = TruncatedSeries::variable(2, N, 0);
  const TruncatedSeries y = TruncatedSeries::variable(2, N, 1);
  const TruncatedSeries bxy = one + y - x * y;  // 1 - y(x-1)
  const TruncatedSeries bx = one - x.scaled(BigRational(8, 9));
  const TruncatedSeries den = bx + y - x * y;   // 1 - 8x/9 - y(x-1)
  const TruncatedSeries num = ap.r == 0 ? bx.sqrt() : bx.inv_sqrt();
  return bxy.inv().scaled(BigRational(1, 4)) +
         (num * den.inv()).scaled(app_weight(kappa, ap.r));
}

std::vector<BigRational> e_closed_sequence(int kappa, long N) {
  const ApplicationParams ap = ApplicationParams::of(kappa);
  if (N < 0) throw std::invalid_argument("e_closed_sequence: N must be >= 0");
  const int n = std::max(static_cast<int>(N), 2);
  const TruncatedSeries one = TruncatedSeries::constant(1, n, BigRational(1));
  const TruncatedSeries v = TruncatedSeries::variable(1, n, 0);
  const TruncatedSeries disc =
      one + v.scaled(BigRational(14, 9)) +
      TruncatedSeries::monomial(1, n, {2, 0, 0}, BigRational(1));
  const TruncatedSeries root = disc.sqrt();
  const TruncatedSeries half_sum = (one + v + root).scaled(BigRational(1, 2));
  const TruncatedSeries gen =
      disc.inv_sqrt() * (ap.r == 0 ? half_sum.sqrt() : half_sum.inv_sqrt());
  const BigRational quarter(1, 4);
  const BigRational weight = app_weight(kappa, ap.r);
  std::vector<BigRational> out;
  out.reserve(N + 1);
  for (long k = 0; k <= N; ++k)
    out.push_back(quarter + weight * gen.coeff(static_cast<int>(k)));
  return out;
}

BigRational e_closed(int kappa, long n) {
  return e_closed_sequence(kappa, n).at(n);
}

bool e_matches_g(int kappa, long N) {
  const ApplicationParams ap = ApplicationParams::of(kappa);
  const TruncatedSeries g = g_series(kappa, static_cast<int>(2 * N + ap.r));
  const std::vector<BigRational> e = e_closed_sequence(kappa, N);
  for (long n = 0; n <= N; ++n)
    if (e[n] != g.coeff(static_cast<int>(2 * n + ap.r))) return false;
  return true;
}

ExactMatrix mtilde_matrix(int kappa, int S) {
  if (S < 0) throw std::invalid_argument("mtilde_matrix: S must be >= 0");
  const ApplicationParams ap = ApplicationParams::of(kappa);
  return build_RS(f_app_series(kappa, S + ap.p), S + ap.p);
}

GramReport gram_matrix_exact(int kappa, int S) {
  const ApplicationParams ap = ApplicationParams::of(kappa);
  if (S < 0) throw std::invalid_argument("gram_matrix_exact: S must be >= 0");
  const int dim = (S + 1) * (S + 2) / 2;
  if (dim > 36)
    throw std::invalid_argument("gram_matrix_exact: dimension above 36");

  GramReport rep;
  rep.kappa = kappa;
  rep.S = S;
  rep.dimension = dim;

  // Multi-indices |n| = S in deterministic order.
  std::vector<std::array<int, 3>> idx;
  for (int n1 = 0; n1 <= S; ++n1)
    for (int n2 = 0; n1 + n2 <= S; ++n2) idx.push_back({n1, n2, S - n1 - n2});

  // Laguerre coefficient vectors for both parameter values up to degree S.
  std::vector<std::vector<BigRational>> lag_plus, lag_minus;  // alpha = -1/2, +1/2
  for (int n = 0; n <= S; ++n) {
    lag_plus.push_back(poly_vector(laguerre_coeffs(n, BigRational(-1, 2)), n));
    lag_minus.push_back(poly_vector(laguerre_coeffs(n, BigRational(1, 2)), n));
  }
  const auto factor_coeffs = [&](int slot, int n) -> const std::vector<BigRational>& {
    return slot < kappa ? lag_minus[n] : lag_plus[n];
  };

  // Gram entries: 3^{-kappa} integral of x^{2 kappa} prod_j L_{m_j} L_{n_j}
  // (argument pi x^2/3) against e^{-pi x^2}; every term lands on pi^{-kappa}.
  ExactMatrix gram(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) {
      std::vector<BigRational> prod{BigRational(1)};
      for (int slot = 0; slot < 3; ++slot) {
        prod = poly_mul_vec(prod, factor_coeffs(slot, idx[i][slot]));
        prod = poly_mul_vec(prod, factor_coeffs(slot, idx[j][slot]));
      }
      PiScaled entry(BigRational(0), 0);
      for (size_t k = 0; k < prod.size(); ++k) {
        if (prod[k].is_zero()) continue;
        const long kk = static_cast<long>(k);
        entry += PiScaled(prod[k] / BigRational(3).pow(kk + kappa), kk) *
                 gaussian_moment(kappa + kk);
      }
      // The pi power must have collapsed to -kappa by construction.
      const PiScaled norm_check =
          entry.is_zero() ? PiScaled(BigRational(0), 0)
                          : PiScaled(entry.value, entry.pi_exponent + kappa);
      gram.at(i, j) = norm_check.as_rational();  // rational after pi^{-kappa}
      gram.at(j, i) = gram.at(i, j);
    }

  // Diagonal norms of the unrestricted product basis.
  std::vector<PiScaled> dnorm(dim, PiScaled(BigRational(1), 0));
  for (int i = 0; i < dim; ++i) {
    PiScaled d(BigRational(1), 0);
    for (int slot = 0; slot < 3; ++slot) {
      const int r_slot = slot < kappa ? 1 : 0;
      const BigRational alpha =
          slot < kappa ? BigRational(1, 2) : BigRational(-1, 2);
      d = d * laguerre_norm_sq(idx[i][slot], alpha, r_slot);
    }
    dnorm[i] = d;
  }

  // ratio = D^{-1} G; the pi powers cancel exactly or as_rational throws.
  rep.ratio = ExactMatrix(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const PiScaled g(gram.at(i, j), -kappa);
      rep.ratio.at(i, j) = (g / dnorm[i]).as_rational();
    }

  rep.rank = rank(rep.ratio);
  rep.rank_ok = rep.rank <= S + ap.p + 1;

  for (const BigRational& e : e_closed_sequence(kappa, S + ap.p))
    if (!e.is_zero()) rep.expected.push_back(e);
  std::sort(rep.expected.begin(), rep.expected.end());

  const std::vector<BigRational> chi = char_poly(rep.ratio);
  int zeros = 0;
  while (zeros <= dim && chi[zeros].is_zero()) ++zeros;
  std::vector<BigRational> reduced(chi.begin() + zeros, chi.end());

  const auto matches = [&](const std::vector<BigRational>& roots) {
    if (static_cast<int>(roots.size()) + zeros != dim) return false;
    return reduced == poly_from_roots(roots);
  };

  if (matches(rep.expected)) {
    rep.spectrum_ok = true;
    rep.nonzero_spectrum = rep.expected;
  } else {
    // Extract whatever rational roots deflate exactly, for the report.
    std::vector<BigRational> q = reduced;
    for (const BigRational& e : rep.expected) {
      if (q.size() < 2) break;
      if (poly_eval(q, e).is_zero()) {
        q = poly_deflate(q, e);
        rep.nonzero_spectrum.push_back(e);
      }
    }
    std::sort(rep.nonzero_spectrum.begin(), rep.nonzero_spectrum.end());
    // A single global scalar slip is reported explicitly.
    BigRational esum(0);
    for (const BigRational& e : rep.expected) esum += e;
    if (!esum.is_zero()) {
      const BigRational s = rep.ratio.trace() / esum;
      std::vector<BigRational> scaled;
      for (const BigRational& e : rep.expected) scaled.push_back(s * e);
      std::sort(scaled.begin(), scaled.end());
      if (matches(scaled)) {
        rep.scalar_mismatch = true;
        rep.mismatch_scalar = s;
        rep.nonzero_spectrum = scaled;
      }
    }
  }
  rep.pass = rep.rank_ok && rep.spectrum_ok;
  return rep;
}

std::vector<KernelSample> default_kernel_samples() {
  return {{0.7, 0.3, 0.2}, {1.1, 0.25, 0.4}, {0.35, 0.55, -0.3},
          {1.6, 0.12, 0.62}, {0.9, 0.45, 0.1}};
}

KernelCheckResult kernel_reproduce_check(int eps,
                                         const std::vector<KernelSample>& samples,
                                         double quad_tol) {
  if (eps != 1 && eps != -1)
    throw std::invalid_argument("kernel_reproduce_check: eps must be +-1");
  const int r = eps == 1 ? 0 : 1;
  const auto q_gen = [&](double x, double s) {
    const double amp = std::pow(1.0 - s, -(r + 0.5));
    const double expo = std::exp(-0.5 * kPi * (1.0 + s) / (1.0 - s) * x * x);
    return (r == 1 ? x : 1.0) * amp * expo;
  };

  KernelCheckResult out;
  for (const KernelSample& smp : samples) {
    if (!(std::abs(smp.w) < 1.0 && std::abs(smp.t) < 1.0))
      throw std::invalid_argument("kernel_reproduce_check: need |w|,|t| < 1");
    if (smp.w < 0.0 || (eps == -1 && smp.w == 0.0))
      throw std::invalid_argument(
          "kernel_reproduce_check: need w > 0 (w = 0 only for eps = +1)");
    const double x = smp.x, w = smp.w, t = smp.t;
    const double A = (1.0 + w) / (1.0 - w);
    const double sw = std::sqrt(w);
    const auto kernel = [&](double y) {
      const double arg = 2.0 * kPi * x * y * sw / (1.0 - w);
      const double gauss =
          std::exp(-0.5 * kPi * A * (x * x + y * y)) / std::sqrt(1.0 - w);
      if (eps == 1) return gauss * std::cosh(arg);
      return gauss * std::sinh(arg) / sw;
    };
    const auto integrand = [&](double y) { return kernel(y) * q_gen(y, t); };

    const double c2 = 0.5 * kPi * (A + (1.0 + t) / (1.0 - t));
    const double c1 = 2.0 * kPi * std::abs(x) * sw / (1.0 - w);
    const double Y = (c1 + std::sqrt(c1 * c1 + 4.0 * c2 * 60.0)) / (2.0 * c2);

    // The integrand is even in y for both parities.
    QuadResult q = integrate_gk(integrand, 0.0, Y, 0.5 * quad_tol);
    const double quad = 2.0 * q.value;
    const double closed = q_gen(x, w * t);
    KernelDeviationRow row{smp, closed, quad, std::abs(quad - closed),
                           q.converged};
    out.max_deviation = std::max(out.max_deviation, row.deviation);
    out.all_converged = out.all_converged && q.converged;
    out.rows.push_back(row);
  }
  return out;
}

}  // namespace qparity
