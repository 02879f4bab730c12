#include "qparity/orthopoly.hpp"

#include <stdexcept>

namespace qparity {

MultiPoly gegenbauer_coeffs(long n, const BigRational& lambda) {
  if (n < 0) throw std::invalid_argument("gegenbauer_coeffs: n < 0");
  if (lambda <= BigRational(-1, 2))
    throw std::invalid_argument("gegenbauer_coeffs: lambda <= -1/2");
  MultiPoly prev = MultiPoly::constant(1, BigRational(1));  // C_0
  if (n == 0) return prev;
  const MultiPoly z = MultiPoly::variable(1, 0);
  MultiPoly cur = z.scaled(BigRational(2) * lambda);  // C_1 = 2 lambda z
  for (long m = 1; m < n; ++m) {
    MultiPoly next =
        (z * cur).scaled(BigRational(2) * (BigRational(m) + lambda)) -
        prev.scaled(BigRational(m) + BigRational(2) * lambda - BigRational(1));
    next = next.scaled(BigRational(1, m + 1));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<BigRational> gegenbauer_values(const BigRational& x,
                                           const BigRational& lambda, long N) {
  if (N < 0) throw std::invalid_argument("gegenbauer_values: N < 0");
  std::vector<BigRational> v;
  v.reserve(N + 1);
  v.push_back(BigRational(1));
  if (N == 0) return v;
  v.push_back(BigRational(2) * lambda * x);
  for (long m = 1; m < N; ++m) {
    BigRational next =
        (BigRational(2) * (BigRational(m) + lambda) * x * v[m] -
         (BigRational(m) + BigRational(2) * lambda - BigRational(1)) * v[m - 1]) /
        BigRational(m + 1);
    v.push_back(std::move(next));
  }
  return v;
}

BigRational gegenbauer_at_one(long n, const BigRational& lambda) {
  return pochhammer(BigRational(2) * lambda, n) / BigRational(factorial(n));
}

MultiPoly laguerre_coeffs(long n, const BigRational& alpha) {
  if (n < 0) throw std::invalid_argument("laguerre_coeffs: n < 0");
  if (alpha != BigRational(1, 2) && alpha != BigRational(-1, 2))
    throw std::invalid_argument("laguerre_coeffs: alpha must be +-1/2");
  MultiPoly prev = MultiPoly::constant(1, BigRational(1));  // L_0
  if (n == 0) return prev;
  const MultiPoly z = MultiPoly::variable(1, 0);
  MultiPoly cur = MultiPoly::constant(1, BigRational(1) + alpha) - z;  // L_1
  for (long m = 1; m < n; ++m) {
    // (m+1) L_{m+1} = (2m+1+alpha-z) L_m - (m+alpha) L_{m-1}
    MultiPoly next =
        cur.scaled(BigRational(2 * m + 1) + alpha) - z * cur -
        prev.scaled(BigRational(m) + alpha);
    next = next.scaled(BigRational(1, m + 1));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

PiScaled gaussian_moment(long m) {
  if (m < 0) throw std::invalid_argument("gaussian_moment: m < 0");
  return PiScaled(pochhammer(BigRational(1, 2), m), -m);
}

void scan_legendre_third(long N,
                         const std::function<void(long, const BigInt&)>& visit) {
  BigInt prev(1);  // c_0
  visit(0, prev);
  if (N == 0) return;
  BigInt cur(1);  // c_1 = 3 * P_1(1/3)
  visit(1, cur);
  BigInt next, t;
  for (long n = 1; n < N; ++n) {
    // (n+1) c_{n+1} = (2n+1) c_n - 9n c_{n-1}; the division is exact.
    next = cur * (2 * n + 1);
    t = prev * (9 * n);
    next -= t;
    mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(),
                    static_cast<unsigned long>(n + 1));
    visit(n + 1, next);
    prev = std::move(cur);
    cur = std::move(next);
  }
}

TailBoundScan certify_bernstein_third(long N) {
  // c_n^2 * n * 355 * 141422 <= 3 * 113 * 100000 * 9^n, exact integers.
  TailBoundScan scan;
  BigInt rhs(33900000);  // 3 * 113 * 100000, times 9^n as n advances
  BigInt lhs, sq;
  scan_legendre_third(N, [&](long n, const BigInt& c) {
    if (n == 0) return;
    rhs *= 9;
    if (!scan.ok) return;
    // Cheap width test first: lhs < 2^(2*bits(c) + bits(n*355*141422)) and
    // rhs >= 2^(bits(rhs)-1).
    const size_t cb = mpz_sizeinbase(c.get_mpz_t(), 2);
    BigInt nf(n);
    nf *= 50204810;  // 355 * 141422
    const size_t nb = mpz_sizeinbase(nf.get_mpz_t(), 2);
    const size_t rb = mpz_sizeinbase(rhs.get_mpz_t(), 2);
    if (2 * cb + nb < rb) return;
    sq = c * c;
    lhs = sq * nf;
    if (lhs > rhs) {
      scan.ok = false;
      scan.first_failure = n;
    }
  });
  return scan;
}

}  // namespace qparity
