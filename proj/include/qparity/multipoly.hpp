#pragma once

#include <map>
#include <string>
#include <vector>

#include "qparity/rational.hpp"

namespace qparity {

/// Exact multivariate polynomial in x_1..x_d, sparse: a map from exponent
/// vectors to nonzero rational coefficients. No explicit zero terms are kept,
/// so equality, degree and parity queries are exact.
class MultiPoly {
public:
  using Exponents = std::vector<int>;

  explicit MultiPoly(int dim) : dim_(dim) {}

  static MultiPoly constant(int dim, const BigRational& c);
  static MultiPoly variable(int dim, int var);
  static MultiPoly monomial(int dim, const Exponents& e, const BigRational& c);

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;  // -1 for the zero polynomial
  long term_count() const { return static_cast<long>(terms_.size()); }

  const std::map<Exponents, BigRational>& terms() const { return terms_; }
  BigRational coeff(const Exponents& e) const;
  void add_term(const Exponents& e, const BigRational& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly scaled(const BigRational& c) const;
  MultiPoly pow(int e) const;

  BigRational evaluate(const std::vector<BigRational>& x) const;

  /// Scales by the positive rational that clears all denominators, divides by
  /// the integer content and makes the lexicographically-leading coefficient
  /// positive. Returns the applied scalar s (result = s * this). Zero input
  /// is returned unchanged with s = 1.
  MultiPoly normalized(BigRational* applied_scale = nullptr) const;

  /// True if the two polynomials agree up to a nonzero rational scalar.
  bool proportional_to(const MultiPoly& o) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  /// Deterministic rendering, e.g. "x1^2*x2 - 5/9*x3".
  std::string str() const;

private:
  int dim_;
  std::map<Exponents, BigRational> terms_;
};

/// Sum of second partials, exact.
MultiPoly poly_laplacian(const MultiPoly& p);

}  // namespace qparity
