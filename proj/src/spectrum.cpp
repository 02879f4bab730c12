#include "qparity/spectrum.hpp"

#include <algorithm>
#include <sstream>

#include "qparity/orthopoly.hpp"

namespace qparity {

namespace {

void require_dkn(int d, int kappa, long n) {
  if (d < 3) throw std::invalid_argument("spectrum: d must be >= 3");
  if (kappa < 0 || kappa > d)
    throw std::invalid_argument("spectrum: kappa must be in [0, d]");
  if (n < 0) throw std::invalid_argument("spectrum: n must be >= 0");
}

const BigRational& fast_slope(int kappa) {
  static const BigRational q[4] = {BigRational(3, 4), BigRational(1, 4),
                                   BigRational(-1, 4), BigRational(-3, 4)};
  if (kappa < 0 || kappa > 3)
    throw std::invalid_argument("spectrum: kappa must be in [0, 3] for d = 3");
  return q[kappa];
}

/// Enumerates compositions m_1+..+m_d = m with m_i odd for i <= kappa and
/// even otherwise, calling fn(exponents, multinomial m!/(m_1!..m_d!)).
void for_parity_compositions(
    int d, int kappa, int m,
    const std::function<void(const std::vector<int>&, const BigInt&)>& fn) {
  std::vector<int> e(d, 0);
  const BigInt mfac = factorial(m);
  std::function<void(int, int)> rec = [&](int pos, int rem) {
    if (pos == d - 1) {
      const bool need_odd = pos < kappa;
      if ((rem % 2 == 1) != need_odd) return;
      e[pos] = rem;
      BigInt coeff = mfac;
      for (int i = 0; i < d; ++i) coeff /= factorial(e[i]);
      fn(e, coeff);
      return;
    }
    const bool need_odd = pos < kappa;
    for (int v = need_odd ? 1 : 0; v <= rem; v += 2) {
      e[pos] = v;
      rec(pos + 1, rem - v);
    }
    e[pos] = 0;
  };
  if (d == 1) {
    const bool need_odd = kappa >= 1;
    if ((m % 2 == 1) == need_odd) {
      e[0] = m;
      fn(e, BigInt(1));
    }
    return;
  }
  rec(0, m);
}

}  // namespace

BigRational lambda_direct(int d, int kappa, long n) {
  require_dkn(d, kappa, n);
  const BigRational lam(d - 2, 2);  // d/2 - 1
  // C_n at each distinct argument (d - 2s)/d, s = 0..d.
  std::vector<BigRational> cn(d + 1);
  for (int s = 0; s <= d; ++s)
    cn[s] = gegenbauer_values(BigRational(d - 2 * s, d), lam, n)[n];
  BigRational sum(0);
  for (int i = 0; i <= kappa; ++i) {
    const BigInt bi = binomial(kappa, i);
    for (int j = 0; j <= d - kappa; ++j) {
      BigRational term = BigRational(bi * binomial(d - kappa, j)) * cn[i + j];
      if (i % 2 == 1) term = -term;
      sum += term;
    }
  }
  sum /= BigRational(BigInt(1) << d);
  return sum / gegenbauer_at_one(n, lam);
}

BigRational lambda_closed_diag(int d, int kappa) {
  require_dkn(d, kappa, kappa);
  const BigRational num =
      BigRational(BigInt(1) << kappa) * BigRational(factorial(kappa)) *
      pochhammer(BigRational(d - 2, 2), kappa);
  const BigRational den =
      BigRational(d).pow(kappa) * pochhammer(BigRational(d - 2), kappa);
  return num / den;
}

TruncatedSeries g_series(int kappa, int order) {
  if (kappa < 0 || kappa > 3)
    throw std::invalid_argument("g_series: kappa must be in [0, 3]");
  const int N = order;
  const BigRational third(1, 3);

  TruncatedSeries one = TruncatedSeries::constant(1, N, BigRational(1));
  TruncatedSeries w = TruncatedSeries::variable(1, N, 0);
  TruncatedSeries w2 = TruncatedSeries::monomial(1, N, {2, 0, 0}, BigRational(1));

  // 1/(4(1-w^2)) and the two inverse square roots, with their 1/8 weights.
  TruncatedSeries base =
      (one - w2).scaled(BigRational(4)).inv();
  TruncatedSeries minus =
      (one - w.scaled(BigRational(2, 3)) + w2).inv_sqrt().scaled(BigRational(1, 8));
  TruncatedSeries plus =
      (one + w.scaled(BigRational(2, 3)) + w2).inv_sqrt().scaled(BigRational(1, 8));

  switch (kappa) {
    case 0:
      return base + minus.scaled(BigRational(3)) + plus.scaled(BigRational(3));
    case 1:
      return w * base + minus - plus;
    case 2:
      return base - minus - plus;
    default:
      return w * base - minus.scaled(BigRational(3)) + plus.scaled(BigRational(3));
  }
}

std::vector<SpectrumEntry> lambda_fast_sequence(int kappa, long N) {
  const BigRational& q = fast_slope(kappa);
  const std::vector<BigRational> p =
      gegenbauer_values(BigRational(1, 3), BigRational(1, 2), N);
  std::vector<SpectrumEntry> out;
  out.reserve(N + 1);
  const BigRational quarter(1, 4);
  for (long n = 0; n <= N; ++n) {
    BigRational lam(0);
    if ((n - kappa) % 2 == 0) lam = quarter + q * p[n];
    out.push_back(SpectrumEntry{3, kappa, n, lam, lam.to_double()});
  }
  return out;
}

MultiPoly eigenvector_poly_raw(int d, int kappa, int n) {
  require_dkn(d, kappa, n);
  const MultiPoly cpoly = gegenbauer_coeffs(n, BigRational(d - 2, 2));
  MultiPoly r2(d);
  for (int i = 0; i < d; ++i) {
    MultiPoly::Exponents e(d, 0);
    e[i] = 2;
    r2.add_term(e, BigRational(1));
  }
  MultiPoly sum(d);
  for (const auto& [e, cm] : cpoly.terms()) {
    const int m = e[0];
    // E_m = 2^{-d} sum_eps eps_1..eps_kappa (x.eps)^m, expanded through the
    // parity-restricted multinomial identity.
    MultiPoly em(d);
    for_parity_compositions(d, kappa, m,
                            [&](const std::vector<int>& exps, const BigInt& c) {
                              em.add_term(exps, BigRational(c));
                            });
    if (em.is_zero()) continue;
    const int half = (n - m) / 2;
    MultiPoly term = em * r2.pow(half);
    sum += term.scaled(cm * BigRational(d).pow(half));
  }
  return sum;
}

EigenvectorResult eigenvector_poly(int d, int kappa, int n) {
  MultiPoly raw = eigenvector_poly_raw(d, kappa, n);
  EigenvectorResult res{MultiPoly(d), raw.is_zero(), BigRational(1)};
  if (res.degenerate) return res;
  res.poly = raw.normalized(&res.scale_from_raw);
  return res;
}

bool solid_harmonic_check(int d, int kappa, int n) {
  return poly_laplacian(eigenvector_poly(d, kappa, n).poly).is_zero();
}

bool epsilon_multinomial_identity(int d, int kappa, int m) {
  // Left side: explicit sum over all 2^d sign vectors, with the 2^{-d} factor.
  BigInt lhs(0);
  for (unsigned long mask = 0; mask < (1ul << d); ++mask) {
    long s = 0;
    int negs_front = 0;
    for (int i = 0; i < d; ++i) {
      const bool neg = (mask >> i) & 1;
      s += neg ? -1 : 1;
      if (neg && i < kappa) ++negs_front;
    }
    BigInt term(s);
    BigInt p;
    mpz_pow_ui(p.get_mpz_t(), term.get_mpz_t(), static_cast<unsigned long>(m));
    if (negs_front % 2 == 1) p = -p;
    lhs += p;
  }
  const BigRational left = BigRational(lhs) / BigRational(BigInt(1) << d);

  // Right side: parity-restricted multinomial sum, no prefactor.
  BigInt rhs(0);
  for_parity_compositions(d, kappa, m,
                          [&](const std::vector<int>&, const BigInt& c) {
                            rhs += c;
                          });
  return left == BigRational(rhs);
}

CertifiedTop2 certify_top2(int kappa, long cutoff) {
  if (cutoff < 1000)
    throw std::invalid_argument("certify_top2: cutoff must be >= 1000");
  const std::vector<SpectrumEntry> seq = lambda_fast_sequence(kappa, cutoff);

  BigRational alpha = seq[0].lambda;
  for (const auto& e : seq) alpha = std::max(alpha, e.lambda);
  BigRational beta = BigRational(0);
  bool have_beta = false;
  for (const auto& e : seq) {
    if (e.lambda == alpha) continue;
    if (!have_beta || e.lambda > beta) {
      beta = e.lambda;
      have_beta = true;
    }
  }
  if (!have_beta)
    throw CertificationError("certify_top2: fewer than two distinct values");

  CertifiedTop2 out;
  out.kappa = kappa;
  out.alpha = alpha;
  out.beta = beta;
  out.cutoff = cutoff;
  for (const auto& e : seq) {
    if (e.lambda == alpha) out.alpha_indices.push_back(e.n);
    if (e.lambda == beta) out.beta_indices.push_back(e.n);
  }

  // Tail: for n > cutoff, lambda <= 1/4 + (3/4)|P_n(1/3)| and Bernstein gives
  // |P_n(1/3)| <= sqrt(3/(pi n sqrt2)). With pi sqrt2 > (314159/10^5)(141421/10^5)
  // the envelope at n = cutoff+1 bounds the whole tail (it decreases in n).
  const BigRational quarter(1, 4);
  if (beta <= quarter)
    throw CertificationError(
        "certify_top2: beta <= 1/4, tail bound cannot apply");
  const BigRational gap = beta - quarter;
  const BigRational envelope_sq =
      BigRational(9, 16) * BigRational(3) *
      BigRational(BigInt(10000000000L), BigInt(314159L) * BigInt(141421L) *
                                            BigInt(cutoff + 1));
  if (!(envelope_sq < gap * gap)) {
    std::ostringstream os;
    os << "certify_top2: tail bound does not clear beta at cutoff " << cutoff
       << ": envelope^2 = " << envelope_sq.str() << " vs (beta-1/4)^2 = "
       << (gap * gap).str();
    throw CertificationError(os.str());
  }

  std::ostringstream cert;
  cert << "exact scan of lambda_{3," << kappa << ",n} for n <= " << cutoff
       << "; for n > " << cutoff
       << ", lambda <= 1/4 + (3/4)|P_n(1/3)| <= 1/4 + (3/4)sqrt(3/(pi n sqrt2))"
          " < beta, using the rational lower bound pi*sqrt2 >"
          " (314159/100000)*(141421/100000) at n = "
       << (cutoff + 1) << " and monotonicity in n";
  out.certificate = cert.str();
  return out;
}

std::vector<long> quarter_search(int kappa, long max_n) {
  if (max_n < 1) throw std::invalid_argument("quarter_search: max_n must be >= 1");
  fast_slope(kappa);  // validates kappa
  std::vector<long> hits;
  scan_legendre_third(max_n, [&](long n, const BigInt& c) {
    if ((n - kappa) % 2 != 0) return;
    if (sgn(c) == 0) hits.push_back(n);
  });
  return hits;
}

std::vector<FigureRow> figure_data(int kappa, long count) {
  if (count < 1) throw std::invalid_argument("figure_data: count must be >= 1");
  const BigRational& q = fast_slope(kappa);
  const long nmax = (kappa % 2) + 2 * (count - 1);
  const std::vector<BigRational> p =
      gegenbauer_values(BigRational(1, 3), BigRational(1, 2), nmax);
  const BigRational quarter(1, 4);
  std::vector<FigureRow> rows;
  rows.reserve(count);
  for (long i = 0; i < count; ++i) {
    const long n = (kappa % 2) + 2 * i;
    const BigRational lam = quarter + q * p[n];
    rows.push_back(FigureRow{n, lam, lam.to_double()});
  }
  return rows;
}

}  // namespace qparity
