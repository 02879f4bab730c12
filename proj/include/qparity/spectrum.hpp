#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qparity/multipoly.hpp"
#include "qparity/rational.hpp"
#include "qparity/series.hpp"

namespace qparity {

/// One eigenvalue lambda_{d,kappa,n} of the diagonal-trace form on the
/// parity-kappa subspace, exact, with a display-only float rendering.
struct SpectrumEntry {
  int d;
  int kappa;
  long n;
  BigRational lambda;
  double float_approx;
};

/// Exactly certified largest and second-largest eigenvalues for d = 3.
struct CertifiedTop2 {
  int kappa;
  BigRational alpha;
  std::vector<long> alpha_indices;
  BigRational beta;
  std::vector<long> beta_indices;
  long cutoff;
  std::string certificate;
};

struct CertificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// lambda_{d,kappa,n} = 2^{-d} sum_eps eps_1..eps_kappa
///   C_n^{d/2-1}((eps_1+..+eps_d)/d) / C_n^{d/2-1}(1),
/// with the sign sum collapsed over the count of -1 entries.
BigRational lambda_direct(int d, int kappa, long n);

/// Closed form for the diagonal n = kappa:
///   2^kappa kappa! (d/2-1)_kappa / (d^kappa (d-2)_kappa).
BigRational lambda_closed_diag(int d, int kappa);

/// Order-N expansion of G_kappa(w), built from series primitives:
/// a signed combination of 1/(4(1-w^2)) and (1 -+ (2/3)w + w^2)^{-1/2}/8.
TruncatedSeries g_series(int kappa, int order);

/// All entries lambda_{3,kappa,n} for n <= N in O(N) exact operations, via
/// lambda = 1/4 + q_kappa P_n(1/3) on the live parity class (n == kappa
/// mod 2) with q = (3/4, 1/4, -1/4, -3/4), zero elsewhere.
std::vector<SpectrumEntry> lambda_fast_sequence(int kappa, long N);

/// The sign-symmetrized zonal sum scaled by d^{n/2} so that every coefficient
/// is rational: d^{n/2} * 2^{-d} sum_eps eps_1..eps_kappa
/// C_n^{d/2-1}(x.eps/(sqrt(d)|x|)) |x|^n.
MultiPoly eigenvector_poly_raw(int d, int kappa, int n);

struct EigenvectorResult {
  MultiPoly poly;               // normalized: integer content 1, positive lex lead
  bool degenerate = false;      // the symmetrized sum vanished identically
  BigRational scale_from_raw;   // poly = scale_from_raw * raw
};
EigenvectorResult eigenvector_poly(int d, int kappa, int n);

/// True iff the eigenvector polynomial is annihilated by the Laplacian.
bool solid_harmonic_check(int d, int kappa, int n);

/// Checks 2^{-d} sum_eps eps_1..eps_kappa (eps_1+..+eps_d)^m against the
/// parity-restricted multinomial sum (no 2^{-d} prefactor on that side),
/// both sides computed independently.
bool epsilon_multinomial_identity(int d, int kappa, int m);

/// Exact scan of lambda_{3,kappa,n} for n <= cutoff plus a rigorous Bernstein
/// tail certificate for n > cutoff. Throws CertificationError when the cutoff
/// is too small for the tail bound to clear beta.
CertifiedTop2 certify_top2(int kappa, long cutoff = 2000);

/// Indices n <= max_n with lambda_{3,kappa,n} = 1/4 exactly (equivalently
/// P_n(1/3) = 0). Expected empty.
std::vector<long> quarter_search(int kappa, long max_n);

struct FigureRow {
  long n;
  BigRational value;
  double approx;
};

/// First `count` coefficients of G_kappa on its live parity class, in order
/// (exact zeros included).
std::vector<FigureRow> figure_data(int kappa, long count);

}  // namespace qparity
