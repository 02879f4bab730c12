#include "qparity/special_matrix.hpp"

#include <stdexcept>

namespace qparity {

namespace {

void require_3var(const TruncatedSeries& f, const char* who) {
  if (f.arity() != 3)
    throw std::invalid_argument(std::string(who) + ": expected a 3-variable series");
}

BigRational binom_q(long n, long k) { return BigRational(binomial(n, k)); }

/// Extracts the z = 0 slice of a 3-variable series in (x,y,z) as a
/// 2-variable series in (x,y).
TruncatedSeries two_var_slice_z0(const TruncatedSeries& s) {
  const int N = s.order();
  TruncatedSeries h(2, N);
  for (int i = 0; i <= N; ++i)
    for (int j = 0; j <= N; ++j) {
      const BigRational& c = s.coeff(i, j, 0);
      if (!c.is_zero()) h.set_coeff({i, j, 0}, c);
    }
  return h;
}

}  // namespace

ExactMatrix build_RS(const TruncatedSeries& f, int S) {
  require_3var(f, "build_RS");
  if (S < 0) throw std::invalid_argument("build_RS: S must be >= 0");
  if (f.order() < S)
    throw std::invalid_argument("build_RS: series truncation order below S");
  ExactMatrix m(S + 1);
  for (int a = 0; a <= S; ++a)
    for (int b = 0; b <= S; ++b) m.at(a, b) = f.coeff(a, S - a, b);
  return m;
}

bool commute_check(const TruncatedSeries& f, int S) {
  require_3var(f, "commute_check");
  if (f.order() < S + 1)
    throw std::invalid_argument("commute_check: truncation order below S+1");
  const ExactMatrix rs = build_RS(f, S);
  const ExactMatrix rs1 = build_RS(f, S + 1);
  for (int a = 0; a <= S; ++a) {
    for (int b = 0; b <= S + 1; ++b) {
      // Phi[(u+v) u^a v^{S-a}] vs (u+v) Phi[u^a v^{S-a}], coefficient of
      // u^b v^{S+1-b}, both sides scaled by binom(S,a).
      BigRational lhs = binom_q(S + 1, b) *
                        (binom_q(S, a) / binom_q(S + 1, a + 1) * rs1.at(a + 1, b) +
                         binom_q(S, a) / binom_q(S + 1, a) * rs1.at(a, b));
      BigRational rhs(0);
      if (b >= 1) rhs += binom_q(S, b - 1) * rs.at(a, b - 1);
      if (b <= S) rhs += binom_q(S, b) * rs.at(a, b);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

TruncatedSeries lde_residual(const TruncatedSeries& f) {
  require_3var(f, "lde_residual");
  const int N = f.order();
  if (N < 1) throw std::invalid_argument("lde_residual: order must be >= 1");
  const TruncatedSeries one = TruncatedSeries::constant(3, N, BigRational(1));
  const TruncatedSeries w1 = TruncatedSeries::variable(3, N, 0);
  const TruncatedSeries w2 = TruncatedSeries::variable(3, N, 1);
  const TruncatedSeries w3 = TruncatedSeries::variable(3, N, 2);
  const TruncatedSeries d1 = f.derivative(0);
  const TruncatedSeries d2 = f.derivative(1);
  const TruncatedSeries d3 = f.derivative(2);
  TruncatedSeries res = (one - w1) * d1 + (one - w2) * d2 +
                        (w3 - w3 * w3) * d3 - (one + w3) * f;
  return res.truncated(N - 1);
}

bool recursion_check(const TruncatedSeries& f, int N) {
  require_3var(f, "recursion_check");
  if (N > f.order())
    throw std::invalid_argument("recursion_check: N beyond truncation order");
  for (int a = 0; a + 1 <= N; ++a)
    for (int b = 0; a + b + 1 <= N; ++b)
      for (int c = 0; a + b + c + 1 <= N; ++c) {
        BigRational lhs = BigRational(a + 1) * f.coeff(a + 1, b, c) +
                          BigRational(b + 1) * f.coeff(a, b + 1, c);
        BigRational rhs = BigRational(a + b - c + 1) * f.coeff(a, b, c);
        if (c >= 1) rhs += BigRational(c) * f.coeff(a, b, c - 1);
        if (lhs != rhs) return false;
      }
  return true;
}

FtoHResult f_to_h(const TruncatedSeries& f) {
  require_3var(f, "f_to_h");
  const int N = f.order();
  // Target ring (x,y,z). Move the w2 exponents straight to z and park the
  // w3 exponents in the y slot until they are substituted.
  const TruncatedSeries parked = f.permute_vars({0, 2, 1});

  const TruncatedSeries one = TruncatedSeries::constant(3, N, BigRational(1));
  const TruncatedSeries x = TruncatedSeries::variable(3, N, 0);
  const TruncatedSeries y = TruncatedSeries::variable(3, N, 1);
  const TruncatedSeries z = TruncatedSeries::variable(3, N, 2);

  const TruncatedSeries inv_1yz = (one + y - z).inv();
  const TruncatedSeries t = y * inv_1yz;       // w3 -> y/(1+y-z)
  const TruncatedSeries s1 = x + z - x * z;    // w1 -> x+z-xz

  // Horner over the parked w3 exponent.
  TruncatedSeries acc(3, N);
  for (int c = parked.max_exponent(1); c >= 0; --c) {
    if (!acc.is_zero()) acc = acc * t;
    acc += parked.slice(1, c);
  }
  // Horner over the w1 exponent.
  TruncatedSeries acc2(3, N);
  for (int a = acc.max_exponent(0); a >= 0; --a) {
    if (!acc2.is_zero()) acc2 = acc2 * s1;
    acc2 += acc.slice(0, a);
  }
  const TruncatedSeries omz = one - z;
  TruncatedSeries image = acc2 * omz * omz * inv_1yz;

  // Box-order-N input data determines the image coefficient at (i,j,k)
  // exactly when i + k <= N; the z-independence verdict is confined to that
  // region.
  FtoHResult out{two_var_slice_z0(image), N, true};
  for (int k = 1; k <= N; ++k)
    for (int i = 0; i + k <= N; ++i)
      for (int j = 0; j <= N; ++j)
        if (!image.coeff(i, j, k).is_zero()) {
          out.z_clear_order = std::min(out.z_clear_order, i + k - 1);
          out.z_independent = false;
        }
  return out;
}

TruncatedSeries h_to_f(const TruncatedSeries& h, int order) {
  if (h.arity() != 2)
    throw std::invalid_argument("h_to_f: expected a 2-variable series");
  if (h.order() < order)
    throw std::invalid_argument("h_to_f: H truncation order below target");
  const int N = order;
  const TruncatedSeries one = TruncatedSeries::constant(3, N, BigRational(1));
  const TruncatedSeries w1 = TruncatedSeries::variable(3, N, 0);
  const TruncatedSeries w2 = TruncatedSeries::variable(3, N, 1);
  const TruncatedSeries w3 = TruncatedSeries::variable(3, N, 2);

  const TruncatedSeries inv2 = (one - w2).inv();
  const TruncatedSeries inv3 = (one - w3).inv();
  const TruncatedSeries xs = (w1 - w2) * inv2;        // x -> (w1-w2)/(1-w2)
  const TruncatedSeries ys = w3 * (one - w2) * inv3;  // y -> w3(1-w2)/(1-w3)

  // Lift H(x,y) with x parked in slot 0 and y parked in slot 2.
  TruncatedSeries parked(3, N);
  for (int i = 0; i <= N; ++i)
    for (int j = 0; j <= N; ++j) {
      const BigRational& c = h.coeff(i, j);
      if (!c.is_zero()) parked.set_coeff({i, 0, j}, c);
    }

  TruncatedSeries acc(3, N);
  for (int j = parked.max_exponent(2); j >= 0; --j) {
    if (!acc.is_zero()) acc = acc * ys;
    acc += parked.slice(2, j);
  }
  TruncatedSeries acc2(3, N);
  for (int i = acc.max_exponent(0); i >= 0; --i) {
    if (!acc2.is_zero()) acc2 = acc2 * xs;
    acc2 += acc.slice(0, i);
  }
  return acc2 * inv2 * inv3;
}

BigRational eigen_from_ev(const TruncatedSeries& f, int n) {
  require_3var(f, "eigen_from_ev");
  if (n < 0 || n > f.order())
    throw std::invalid_argument("eigen_from_ev: n beyond truncation order");
  BigRational e(0);
  for (int b = 0; b <= n; ++b) {
    BigRational term = binom_q(n, b) * f.coeff(n, 0, b);
    if ((n - b) % 2 == 1) term = -term;
    e += term;
  }
  return e;
}

BigRational eigen_from_h(const TruncatedSeries& h, int n) {
  if (h.arity() != 2)
    throw std::invalid_argument("eigen_from_h: expected a 2-variable series");
  if (n < 0 || n > h.order())
    throw std::invalid_argument("eigen_from_h: n beyond truncation order");
  return h.coeff(n, n);
}

bool annihilation_check(const TruncatedSeries& f, int S) {
  require_3var(f, "annihilation_check");
  if (f.order() < S)
    throw std::invalid_argument("annihilation_check: truncation order below S");
  if (!recursion_check(f, f.order()))
    throw std::invalid_argument("annihilation_check: series is not special");
  const ExactMatrix rs = build_RS(f, S);
  ExactMatrix prod = ExactMatrix::identity(S + 1);
  for (int n = 0; n <= S; ++n) {
    ExactMatrix factor = rs;
    const BigRational en = eigen_from_ev(f, n);
    for (int i = 0; i <= S; ++i) factor.at(i, i) -= en;
    prod = prod * factor;
  }
  return prod.is_zero();
}

TruncatedSeries identity_f(int order) {
  const TruncatedSeries one = TruncatedSeries::constant(3, order, BigRational(1));
  const TruncatedSeries w1 = TruncatedSeries::variable(3, order, 0);
  const TruncatedSeries w2 = TruncatedSeries::variable(3, order, 1);
  const TruncatedSeries w3 = TruncatedSeries::variable(3, order, 2);
  return (one - w2).inv() * (one - w1 * w3).inv();
}

TruncatedSeries identity_h(int order) {
  const TruncatedSeries one = TruncatedSeries::constant(2, order, BigRational(1));
  const TruncatedSeries x = TruncatedSeries::variable(2, order, 0);
  const TruncatedSeries y = TruncatedSeries::variable(2, order, 1);
  return (one + y - x * y).inv();
}

namespace {
SpecialityWitness witness_with(const TruncatedSeries& f,
                               const FtoHResult& image) {
  SpecialityWitness w;
  w.order = f.order();
  w.commute = true;
  for (int S = 0; S + 1 <= f.order(); ++S)
    if (!commute_check(f, S)) { w.commute = false; break; }
  w.lde_zero = lde_residual(f).is_zero();
  w.recursion = recursion_check(f, f.order());
  w.z_independent = image.z_independent;
  return w;
}
}  // namespace

SpecialityWitness verify_speciality(const TruncatedSeries& f) {
  require_3var(f, "verify_speciality");
  return witness_with(f, f_to_h(f));
}

SpecialSeriesPair make_special_pair(const TruncatedSeries& f) {
  require_3var(f, "make_special_pair");
  const FtoHResult image = f_to_h(f);
  return SpecialSeriesPair{f, image.h, f.order(), witness_with(f, image)};
}

}  // namespace qparity
