#include "qparity/exact_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace qparity {

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = BigRational(1);
  return m;
}

bool ExactMatrix::is_zero() const {
  for (const auto& c : e_)
    if (!c.is_zero()) return false;
  return true;
}

BigRational ExactMatrix::trace() const {
  BigRational t(0);
  for (int i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  if (n_ != o.n_) throw std::invalid_argument("ExactMatrix: size mismatch");
  for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
  if (n_ != o.n_) throw std::invalid_argument("ExactMatrix: size mismatch");
  for (size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("ExactMatrix: size mismatch");
  const int n = a.n_;
  ExactMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const BigRational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        const BigRational& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        r.at(i, j).add_mul(aik, bkj);
      }
    }
  return r;
}

ExactMatrix ExactMatrix::scaled(const BigRational& c) const {
  ExactMatrix r(*this);
  for (auto& x : r.e_) x *= c;
  return r;
}

BigRational determinant(const ExactMatrix& m) {
  const int n = m.size();
  if (n == 0) return BigRational(1);
  // Clear denominators row by row; det scales by the product of the factors.
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  BigInt scale(1);
  for (int i = 0; i < n; ++i) {
    BigInt l(1);
    for (int j = 0; j < n; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
              m.at(i, j).denominator().get_mpz_t());
    for (int j = 0; j < n; ++j)
      a[i][j] = m.at(i, j).numerator() * (l / m.at(i, j).denominator());
    scale *= l;
  }

  // Bareiss fraction-free elimination; every division below is exact.
  BigInt prev(1);
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (sgn(a[k][k]) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (sgn(a[i][k]) != 0) { p = i; break; }
      if (p < 0) return BigRational(0);
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        BigInt t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  BigInt det = a[n - 1][n - 1];
  if (sign < 0) det = -det;
  return BigRational(det, scale);
}

std::vector<BigRational> char_poly(const ExactMatrix& a) {
  const int n = a.size();
  if (n == 0) return {BigRational(1)};
  // Sample det(xI - A) at x = 0..n and interpolate the monic polynomial.
  std::vector<BigRational> xs, ys;
  for (int t = 0; t <= n; ++t) {
    ExactMatrix m = a.scaled(BigRational(-1));
    for (int i = 0; i < n; ++i) m.at(i, i) += BigRational(t);
    xs.push_back(BigRational(t));
    ys.push_back(determinant(m));
  }
  // Lagrange interpolation, accumulated into a coefficient vector.
  std::vector<BigRational> p(n + 1, BigRational(0));
  for (int t = 0; t <= n; ++t) {
    std::vector<BigRational> basis{BigRational(1)};  // prod_{s != t} (x - x_s)
    BigRational denom(1);
    for (int s = 0; s <= n; ++s) {
      if (s == t) continue;
      std::vector<BigRational> next(basis.size() + 1, BigRational(0));
      for (size_t d = 0; d < basis.size(); ++d) {
        next[d + 1] += basis[d];
        next[d] -= basis[d] * xs[s];
      }
      basis = std::move(next);
      denom *= xs[t] - xs[s];
    }
    const BigRational w = ys[t] / denom;
    for (size_t d = 0; d < basis.size(); ++d) p[d] += basis[d] * w;
  }
  return p;
}

int rank(const ExactMatrix& m) {
  const int n = m.size();
  std::vector<std::vector<BigRational>> a(n, std::vector<BigRational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);
  int r = 0;
  for (int col = 0; col < n && r < n; ++col) {
    int p = -1;
    for (int i = r; i < n; ++i)
      if (!a[i][col].is_zero()) { p = i; break; }
    if (p < 0) continue;
    std::swap(a[r], a[p]);
    const BigRational inv = a[r][col].inverse();
    for (int j = col; j < n; ++j) a[r][j] *= inv;
    for (int i = r + 1; i < n; ++i) {
      if (a[i][col].is_zero()) continue;
      const BigRational f = a[i][col];
      for (int j = col; j < n; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

BigRational poly_eval(const std::vector<BigRational>& p, const BigRational& x) {
  BigRational v(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

std::vector<BigRational> poly_from_roots(const std::vector<BigRational>& roots) {
  std::vector<BigRational> p{BigRational(1)};
  for (const auto& r : roots) {
    std::vector<BigRational> next(p.size() + 1, BigRational(0));
    for (size_t d = 0; d < p.size(); ++d) {
      next[d + 1] += p[d];
      next[d] -= p[d] * r;
    }
    p = std::move(next);
  }
  return p;
}

std::vector<BigRational> poly_deflate(const std::vector<BigRational>& p,
                                      const BigRational& r) {
  if (p.size() < 2) throw std::invalid_argument("poly_deflate: degree 0");
  std::vector<BigRational> q(p.size() - 1);
  BigRational carry(0);
  for (size_t d = p.size(); d-- > 1;) {
    carry = p[d] + carry * r;
    q[d - 1] = carry;
  }
  if (p[0] + carry * r != BigRational(0))
    throw std::domain_error("poly_deflate: not a root");
  return q;
}

}  // namespace qparity
