#pragma once

#include <functional>
#include <vector>

#include "qparity/multipoly.hpp"
#include "qparity/rational.hpp"

namespace qparity {

/// Gegenbauer polynomial C_n^{lambda}(z) as an exact one-variable polynomial,
/// built from the three-term recurrence
///   (m+1) C_{m+1} = 2(m+lambda) z C_m - (m+2 lambda-1) C_{m-1}.
MultiPoly gegenbauer_coeffs(long n, const BigRational& lambda);

/// Exact values C_0(x), ..., C_N(x) by the value recurrence, O(N) rational
/// operations.
std::vector<BigRational> gegenbauer_values(const BigRational& x,
                                           const BigRational& lambda, long N);

/// C_n^{lambda}(1) = (2 lambda)_n / n!.
BigRational gegenbauer_at_one(long n, const BigRational& lambda);

/// Laguerre polynomial L_n^{(alpha)}(z), alpha restricted to +-1/2.
MultiPoly laguerre_coeffs(long n, const BigRational& alpha);

/// Integral over R of x^{2m} e^{-pi x^2} dx = (1/2)_m * pi^{-m}, exact.
PiScaled gaussian_moment(long m);

/// Streams the integer numerators c_n = 3^n P_n(1/3) (Legendre P) for
/// n = 0..N via the exact-division recurrence
///   (n+1) c_{n+1} = (2n+1) c_n - 9 n c_{n-1}.
void scan_legendre_third(long N,
                         const std::function<void(long, const BigInt&)>& visit);

/// Rigorous all-n sweep of the sufficient rational test
///   P_n(1/3)^2 * n * (355/113) * (141422/100000) <= 3,
/// whose success implies the Bernstein envelope P_n(1/3)^2 * n <= 3/(pi sqrt2)
/// since 355/113 > pi and 141422/100000 > sqrt2.
struct TailBoundScan {
  bool ok = true;
  long first_failure = -1;  // smallest violating n, -1 when none
};
TailBoundScan certify_bernstein_third(long N);

}  // namespace qparity
