#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace qparity {

using BigInt = mpz_class;

/// Exact rational number. Always kept canonical: gcd(|num|, den) = 1, den > 0.
/// Arithmetic never rounds.
class BigRational {
public:
  BigRational() : v_(0) {}
  BigRational(long n) : v_(n) {}
  BigRational(int n) : v_(static_cast<long>(n)) {}
  explicit BigRational(const BigInt& n) : v_(n) {}
  BigRational(long num, long den) : v_(num, den) { canonicalize_checked(); }
  BigRational(const BigInt& num, const BigInt& den) : v_(num, den) {
    canonicalize_checked();
  }

  /// Parses "p/q" or "p" (canonical after parsing). Throws on malformed input
  /// or zero denominator.
  static BigRational from_string(const std::string& s) {
    BigRational r;
    if (r.v_.set_str(s, 10) != 0)
      throw std::invalid_argument("BigRational: cannot parse '" + s + "'");
    r.canonicalize_checked();
    return r;
  }

  const BigInt& numerator() const { return v_.get_num(); }
  const BigInt& denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  BigRational operator-() const {
    BigRational r;
    mpq_neg(r.v_.get_mpq_t(), v_.get_mpq_t());
    return r;
  }

  BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
  BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
  BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
  BigRational& operator/=(const BigRational& o) {
    if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

  /// this += a*b without a temporary allocation per call.
  void add_mul(const BigRational& a, const BigRational& b) {
    static thread_local mpq_class t;
    mpq_mul(t.get_mpq_t(), a.v_.get_mpq_t(), b.v_.get_mpq_t());
    mpq_add(v_.get_mpq_t(), v_.get_mpq_t(), t.get_mpq_t());
  }

  friend bool operator==(const BigRational& a, const BigRational& b) {
    return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
  }
  friend bool operator!=(const BigRational& a, const BigRational& b) { return !(a == b); }
  friend bool operator<(const BigRational& a, const BigRational& b) {
    return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) < 0;
  }
  friend bool operator>(const BigRational& a, const BigRational& b) { return b < a; }
  friend bool operator<=(const BigRational& a, const BigRational& b) { return !(b < a); }
  friend bool operator>=(const BigRational& a, const BigRational& b) { return !(a < b); }

  BigRational abs() const {
    BigRational r;
    mpq_abs(r.v_.get_mpq_t(), v_.get_mpq_t());
    return r;
  }

  /// Integer power; negative exponents require a nonzero base.
  BigRational pow(long e) const {
    if (e == 0) return BigRational(1);
    if (e < 0) {
      if (is_zero()) throw std::domain_error("BigRational: 0^negative");
      return inverse().pow(-e);
    }
    BigRational r;
    mpz_pow_ui(r.v_.get_num().get_mpz_t(), v_.get_num().get_mpz_t(),
               static_cast<unsigned long>(e));
    mpz_pow_ui(r.v_.get_den().get_mpz_t(), v_.get_den().get_mpz_t(),
               static_cast<unsigned long>(e));
    return r;  // powers of a canonical fraction stay canonical
  }

  BigRational inverse() const {
    if (is_zero()) throw std::domain_error("BigRational: inverse of zero");
    BigRational r;
    mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
    return r;
  }

  double to_double() const { return v_.get_d(); }

  /// Canonical text form, "p/q" or "p" when q = 1.
  std::string str() const { return v_.get_str(); }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& r) {
    return os << r.v_;
  }

private:
  void canonicalize_checked() {
    if (sgn(v_.get_den()) == 0)
      throw std::domain_error("BigRational: zero denominator");
    v_.canonicalize();
  }

  mpq_class v_;
};

/// Rising factorial (a)_k = a(a+1)...(a+k-1), exact.
inline BigRational pochhammer(const BigRational& a, long k) {
  BigRational r(1);
  BigRational f = a;
  for (long i = 0; i < k; ++i) {
    r *= f;
    f += BigRational(1);
  }
  return r;
}

inline BigInt binomial(long n, long k) {
  if (k < 0 || k > n) return BigInt(0);
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

inline BigInt factorial(long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

/// A rational multiple of an integer power of pi: value * pi^pi_exponent.
/// Keeps Gaussian-moment bookkeeping exact; sums require matching exponents.
struct PiScaled {
  BigRational value;
  long pi_exponent = 0;

  PiScaled() = default;
  PiScaled(BigRational v, long e) : value(std::move(v)), pi_exponent(e) {}

  PiScaled operator*(const PiScaled& o) const {
    return PiScaled(value * o.value, pi_exponent + o.pi_exponent);
  }

  PiScaled& operator+=(const PiScaled& o) {
    if (o.value.is_zero()) return *this;
    if (value.is_zero()) { *this = o; return *this; }
    if (pi_exponent != o.pi_exponent)
      throw std::logic_error("PiScaled: sum of mismatched pi exponents (" +
                             std::to_string(pi_exponent) + " vs " +
                             std::to_string(o.pi_exponent) + ")");
    value += o.value;
    return *this;
  }

  PiScaled operator+(const PiScaled& o) const {
    PiScaled r = *this;
    r += o;
    return r;
  }

  /// Exact quotient; pi exponents subtract.
  PiScaled operator/(const PiScaled& o) const {
    return PiScaled(value / o.value, pi_exponent - o.pi_exponent);
  }

  bool is_zero() const { return value.is_zero(); }

  /// The plain rational value; only defined when the pi power has cancelled.
  BigRational as_rational() const {
    if (!value.is_zero() && pi_exponent != 0)
      throw std::logic_error("PiScaled: residual pi^" +
                             std::to_string(pi_exponent) +
                             " where a pure rational was required");
    return value;
  }

  double to_double() const {
    static const double kPi = 3.14159265358979323846;
    double v = value.to_double();
    long e = pi_exponent;
    while (e > 0) { v *= kPi; --e; }
    while (e < 0) { v /= kPi; ++e; }
    return v;
  }
};

}  // namespace qparity
