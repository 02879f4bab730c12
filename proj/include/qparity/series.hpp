#pragma once

#include <array>
#include <vector>

#include "qparity/rational.hpp"

namespace qparity {

/// Dense formal power series in 1 to 3 variables over BigRational, truncated
/// to a fixed per-variable order ("box" truncation: every exponent <= order).
/// All coefficient slots of the box are stored; a slot absent from a
/// constructor-style builder is an explicit zero. Values are immutable in
/// spirit: every operation returns a new series.
class TruncatedSeries {
public:
  TruncatedSeries(int arity, int order);

  static TruncatedSeries constant(int arity, int order, const BigRational& c);
  /// The series w_var (0-based variable index).
  static TruncatedSeries variable(int arity, int order, int var);
  /// c * w_0^{e0} w_1^{e1} w_2^{e2} (trailing exponents ignored past arity).
  static TruncatedSeries monomial(int arity, int order,
                                  const std::array<int, 3>& exps,
                                  const BigRational& c);

  int arity() const { return arity_; }
  int order() const { return order_; }

  const BigRational& coeff(int i) const;
  const BigRational& coeff(int i, int j) const;
  const BigRational& coeff(int i, int j, int k) const;
  const BigRational& coeff_at(const std::array<int, 3>& e) const;
  void set_coeff(const std::array<int, 3>& e, const BigRational& c);

  bool is_zero() const;
  long nonzero_count() const;

  TruncatedSeries operator-() const;
  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

  TruncatedSeries scaled(const BigRational& c) const;

  /// Exact product truncated to the common box; coefficients of total degree
  /// beyond total_cap are dropped (used to keep Newton iterations cheap).
  static TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b,
                             int total_cap = -1);

  /// Multiplicative inverse; requires a nonzero constant term.
  TruncatedSeries inv() const;
  /// Square root with sqrt(a)^2 = a through the box; requires constant term 1.
  TruncatedSeries sqrt() const;
  /// Inverse square root; requires constant term 1.
  TruncatedSeries inv_sqrt() const;
  TruncatedSeries pow(int e) const;

  /// Formal partial derivative. The result is exact for exponents < order in
  /// the differentiated variable; the top slice is zeroed.
  TruncatedSeries derivative(int var) const;

  /// Copy truncated to a smaller box.
  TruncatedSeries truncated(int new_order) const;

  /// The sub-series of terms with exponent of `var` equal to k, with that
  /// exponent reset to zero (same arity/order).
  TruncatedSeries slice(int var, int k) const;

  /// Largest exponent of `var` carrying a nonzero coefficient, -1 if none.
  int max_exponent(int var) const;

  /// Relabels variables: new exponent vector n satisfies n[perm[i]] = old[i].
  TruncatedSeries permute_vars(const std::array<int, 3>& perm) const;

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

private:
  long index(int i, int j, int k) const;
  void require_same_shape(const TruncatedSeries& o) const;

  int arity_;
  int order_;
  std::vector<BigRational> c_;
};

}  // namespace qparity
