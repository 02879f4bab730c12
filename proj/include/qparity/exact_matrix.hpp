#pragma once

#include <vector>

#include "qparity/rational.hpp"

namespace qparity {

/// Square matrix over BigRational with exact, decidable entrywise equality.
class ExactMatrix {
public:
  explicit ExactMatrix(int n) : n_(n), e_(static_cast<size_t>(n) * n) {}

  static ExactMatrix identity(int n);

  int size() const { return n_; }
  const BigRational& at(int i, int j) const { return e_[idx(i, j)]; }
  BigRational& at(int i, int j) { return e_[idx(i, j)]; }

  bool is_zero() const;
  BigRational trace() const;

  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  ExactMatrix scaled(const BigRational& c) const;

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }
  friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

private:
  size_t idx(int i, int j) const { return static_cast<size_t>(i) * n_ + j; }

  int n_;
  std::vector<BigRational> e_;
};

/// Exact determinant: denominators are cleared row-wise, then fraction-free
/// Bareiss elimination runs over the integers.
BigRational determinant(const ExactMatrix& m);

/// Monic characteristic polynomial det(xI - A), exact. Returned as the
/// coefficient vector c with c[k] the coefficient of x^k (size n+1). Computed
/// by Bareiss determinant evaluation at n+1 points plus Lagrange
/// interpolation.
std::vector<BigRational> char_poly(const ExactMatrix& a);

/// Exact rank by Gaussian elimination over the rationals.
int rank(const ExactMatrix& m);

// Small exact polynomial helpers (coefficient vectors, index = degree).
BigRational poly_eval(const std::vector<BigRational>& p, const BigRational& x);
/// Monic product prod (x - r) over the given roots.
std::vector<BigRational> poly_from_roots(const std::vector<BigRational>& roots);
/// Divides p by (x - r); requires exact divisibility (p(r) = 0).
std::vector<BigRational> poly_deflate(const std::vector<BigRational>& p,
                                      const BigRational& r);

}  // namespace qparity
