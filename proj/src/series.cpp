#include "qparity/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace qparity {

namespace {
long box_size(int arity, int order) {
  long s = 1;
  for (int i = 0; i < arity; ++i) s *= order + 1;
  return s;
}
}  // namespace

TruncatedSeries::TruncatedSeries(int arity, int order)
    : arity_(arity), order_(order) {
  if (arity < 1 || arity > 3)
    throw std::invalid_argument("TruncatedSeries: arity must be 1, 2 or 3");
  if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
  c_.assign(box_size(arity, order), BigRational(0));
}

TruncatedSeries TruncatedSeries::constant(int arity, int order,
                                          const BigRational& c) {
  TruncatedSeries s(arity, order);
  s.c_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::variable(int arity, int order, int var) {
  std::array<int, 3> e{0, 0, 0};
  e[var] = 1;
  return monomial(arity, order, e, BigRational(1));
}

TruncatedSeries TruncatedSeries::monomial(int arity, int order,
                                          const std::array<int, 3>& exps,
                                          const BigRational& c) {
  TruncatedSeries s(arity, order);
  s.set_coeff(exps, c);
  return s;
}

long TruncatedSeries::index(int i, int j, int k) const {
  long idx = i;
  if (arity_ >= 2) idx = idx * (order_ + 1) + j;
  if (arity_ >= 3) idx = idx * (order_ + 1) + k;
  return idx;
}

const BigRational& TruncatedSeries::coeff(int i) const {
  return c_[index(i, 0, 0)];
}
const BigRational& TruncatedSeries::coeff(int i, int j) const {
  return c_[index(i, j, 0)];
}
const BigRational& TruncatedSeries::coeff(int i, int j, int k) const {
  return c_[index(i, j, k)];
}
const BigRational& TruncatedSeries::coeff_at(const std::array<int, 3>& e) const {
  return c_[index(e[0], e[1], e[2])];
}

void TruncatedSeries::set_coeff(const std::array<int, 3>& e,
                                const BigRational& c) {
  for (int v = 0; v < arity_; ++v)
    if (e[v] < 0 || e[v] > order_)
      throw std::invalid_argument("TruncatedSeries: exponent outside box");
  for (int v = arity_; v < 3; ++v)
    if (e[v] != 0)
      throw std::invalid_argument("TruncatedSeries: exponent beyond arity");
  c_[index(e[0], e[1], e[2])] = c;
}

bool TruncatedSeries::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

long TruncatedSeries::nonzero_count() const {
  long n = 0;
  for (const auto& c : c_)
    if (!c.is_zero()) ++n;
  return n;
}

void TruncatedSeries::require_same_shape(const TruncatedSeries& o) const {
  if (arity_ != o.arity_ || order_ != o.order_)
    throw std::invalid_argument("TruncatedSeries: arity/order mismatch");
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  require_same_shape(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  require_same_shape(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

TruncatedSeries TruncatedSeries::scaled(const BigRational& c) const {
  TruncatedSeries r(*this);
  for (auto& x : r.c_) x *= c;
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  return TruncatedSeries::mul(a, b);
}

TruncatedSeries TruncatedSeries::mul(const TruncatedSeries& a,
                                     const TruncatedSeries& b, int total_cap) {
  a.require_same_shape(b);
  const int N = a.order_;
  if (total_cap < 0) total_cap = 3 * N;
  // Outer loop over the factor with fewer nonzero terms.
  const TruncatedSeries* A = &a;
  const TruncatedSeries* B = &b;
  if (a.nonzero_count() > b.nonzero_count()) std::swap(A, B);

  TruncatedSeries res(a.arity_, N);
  const int jmax = a.arity_ >= 2 ? N : 0;
  const int kmax = a.arity_ >= 3 ? N : 0;
  for (int i1 = 0; i1 <= N; ++i1) {
    for (int j1 = 0; j1 <= jmax; ++j1) {
      for (int k1 = 0; k1 <= kmax; ++k1) {
        const BigRational& ca = A->c_[A->index(i1, j1, k1)];
        if (ca.is_zero()) continue;
        const int rem = total_cap - i1 - j1 - k1;
        if (rem < 0) continue;
        const int i2max = std::min({N - i1, rem});
        for (int i2 = 0; i2 <= i2max; ++i2) {
          const int j2max = std::min({jmax - j1, rem - i2});
          for (int j2 = 0; j2 <= j2max; ++j2) {
            const int k2max = std::min({kmax - k1, rem - i2 - j2});
            for (int k2 = 0; k2 <= k2max; ++k2) {
              const BigRational& cb = B->c_[B->index(i2, j2, k2)];
              if (cb.is_zero()) continue;
              res.c_[res.index(i1 + i2, j1 + j2, k1 + k2)].add_mul(ca, cb);
            }
          }
        }
      }
    }
  }
  return res;
}

TruncatedSeries TruncatedSeries::inv() const {
  if (c_[0].is_zero())
    throw std::domain_error("TruncatedSeries::inv: zero constant term");
  const int target = arity_ * order_;  // largest total degree in the box
  TruncatedSeries x = constant(arity_, order_, c_[0].inverse());
  const TruncatedSeries two = constant(arity_, order_, BigRational(2));
  // Newton iteration x <- x(2 - a x), exact order doubling each step.
  for (int correct = 1; correct <= target; correct *= 2) {
    const int cap = std::min(2 * correct - 1, target);
    TruncatedSeries t = two - mul(*this, x, cap);
    x = mul(x, t, cap);
  }
  return x;
}

TruncatedSeries TruncatedSeries::inv_sqrt() const {
  if (c_[0] != BigRational(1))
    throw std::invalid_argument(
        "TruncatedSeries::inv_sqrt: constant term must be 1");
  const int target = arity_ * order_;
  TruncatedSeries x = constant(arity_, order_, BigRational(1));
  const TruncatedSeries three = constant(arity_, order_, BigRational(3));
  const BigRational half(1, 2);
  // Division-free Newton: x <- x(3 - a x^2)/2, order doubling each step.
  for (int correct = 1; correct <= target; correct *= 2) {
    const int cap = std::min(2 * correct - 1, target);
    TruncatedSeries x2 = mul(x, x, cap);
    TruncatedSeries t = three - mul(*this, x2, cap);
    x = mul(x, t, cap).scaled(half);
  }
  return x;
}

TruncatedSeries TruncatedSeries::sqrt() const {
  if (c_[0] != BigRational(1))
    throw std::invalid_argument(
        "TruncatedSeries::sqrt: constant term must be 1");
  return mul(*this, inv_sqrt());
}

TruncatedSeries TruncatedSeries::pow(int e) const {
  if (e < 0) return inv().pow(-e);
  TruncatedSeries r = constant(arity_, order_, BigRational(1));
  TruncatedSeries base(*this);
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return r;
}

TruncatedSeries TruncatedSeries::derivative(int var) const {
  if (var < 0 || var >= arity_)
    throw std::invalid_argument("TruncatedSeries::derivative: bad variable");
  TruncatedSeries r(arity_, order_);
  const int jmax = arity_ >= 2 ? order_ : 0;
  const int kmax = arity_ >= 3 ? order_ : 0;
  for (int i = 0; i <= order_; ++i)
    for (int j = 0; j <= jmax; ++j)
      for (int k = 0; k <= kmax; ++k) {
        std::array<int, 3> e{i, j, k};
        if (e[var] == 0) continue;
        const BigRational& c = c_[index(i, j, k)];
        if (c.is_zero()) continue;
        BigRational scaled = c * BigRational(e[var]);
        std::array<int, 3> d = e;
        d[var] -= 1;
        r.c_[r.index(d[0], d[1], d[2])] = scaled;
      }
  return r;
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
  if (new_order > order_)
    throw std::invalid_argument("TruncatedSeries::truncated: order too large");
  TruncatedSeries r(arity_, new_order);
  const int jmax = arity_ >= 2 ? new_order : 0;
  const int kmax = arity_ >= 3 ? new_order : 0;
  for (int i = 0; i <= new_order; ++i)
    for (int j = 0; j <= jmax; ++j)
      for (int k = 0; k <= kmax; ++k)
        r.c_[r.index(i, j, k)] = c_[index(i, j, k)];
  return r;
}

TruncatedSeries TruncatedSeries::slice(int var, int kslice) const {
  if (var < 0 || var >= arity_)
    throw std::invalid_argument("TruncatedSeries::slice: bad variable");
  TruncatedSeries r(arity_, order_);
  if (kslice > order_) return r;
  const int jmax = arity_ >= 2 ? order_ : 0;
  const int kmax = arity_ >= 3 ? order_ : 0;
  for (int i = 0; i <= order_; ++i)
    for (int j = 0; j <= jmax; ++j)
      for (int k = 0; k <= kmax; ++k) {
        std::array<int, 3> e{i, j, k};
        if (e[var] != kslice) continue;
        const BigRational& c = c_[index(i, j, k)];
        if (c.is_zero()) continue;
        std::array<int, 3> d = e;
        d[var] = 0;
        r.c_[r.index(d[0], d[1], d[2])] = c;
      }
  return r;
}

int TruncatedSeries::max_exponent(int var) const {
  if (var < 0 || var >= arity_)
    throw std::invalid_argument("TruncatedSeries::max_exponent: bad variable");
  int best = -1;
  const int jmax = arity_ >= 2 ? order_ : 0;
  const int kmax = arity_ >= 3 ? order_ : 0;
  for (int i = 0; i <= order_; ++i)
    for (int j = 0; j <= jmax; ++j)
      for (int k = 0; k <= kmax; ++k) {
        if (c_[index(i, j, k)].is_zero()) continue;
        std::array<int, 3> e{i, j, k};
        best = std::max(best, e[var]);
      }
  return best;
}

TruncatedSeries TruncatedSeries::permute_vars(
    const std::array<int, 3>& perm) const {
  TruncatedSeries r(arity_, order_);
  const int jmax = arity_ >= 2 ? order_ : 0;
  const int kmax = arity_ >= 3 ? order_ : 0;
  for (int i = 0; i <= order_; ++i)
    for (int j = 0; j <= jmax; ++j)
      for (int k = 0; k <= kmax; ++k) {
        const BigRational& c = c_[index(i, j, k)];
        if (c.is_zero()) continue;
        std::array<int, 3> e{i, j, k};
        std::array<int, 3> d{0, 0, 0};
        for (int v = 0; v < arity_; ++v) d[perm[v]] = e[v];
        r.set_coeff(d, c);
      }
  return r;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.arity_ != b.arity_ || a.order_ != b.order_) return false;
  return a.c_ == b.c_;
}

}  // namespace qparity
