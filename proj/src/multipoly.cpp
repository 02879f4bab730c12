#include "qparity/multipoly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qparity {

MultiPoly MultiPoly::constant(int dim, const BigRational& c) {
  MultiPoly p(dim);
  p.add_term(Exponents(dim, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int dim, int var) {
  Exponents e(dim, 0);
  e.at(var) = 1;
  return monomial(dim, e, BigRational(1));
}

MultiPoly MultiPoly::monomial(int dim, const Exponents& e,
                              const BigRational& c) {
  MultiPoly p(dim);
  p.add_term(e, c);
  return p;
}

int MultiPoly::total_degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_)
    deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
  return deg;
}

BigRational MultiPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigRational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const BigRational& c) {
  if (static_cast<int>(e.size()) != dim_)
    throw std::invalid_argument("MultiPoly: exponent vector of wrong length");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(dim_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("MultiPoly: dim mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("MultiPoly: dim mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("MultiPoly: dim mismatch");
  MultiPoly r(a.dim_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      MultiPoly::Exponents e(a.dim_);
      for (int i = 0; i < a.dim_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly MultiPoly::scaled(const BigRational& c) const {
  MultiPoly r(dim_);
  if (c.is_zero()) return r;
  for (const auto& [e, t] : terms_) r.terms_.emplace(e, t * c);
  return r;
}

MultiPoly MultiPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("MultiPoly::pow: negative exponent");
  MultiPoly r = constant(dim_, BigRational(1));
  MultiPoly base(*this);
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

BigRational MultiPoly::evaluate(const std::vector<BigRational>& x) const {
  if (static_cast<int>(x.size()) != dim_)
    throw std::invalid_argument("MultiPoly::evaluate: wrong point dimension");
  BigRational sum(0);
  for (const auto& [e, c] : terms_) {
    BigRational t = c;
    for (int i = 0; i < dim_; ++i)
      if (e[i] != 0) t *= x[i].pow(e[i]);
    sum += t;
  }
  return sum;
}

MultiPoly MultiPoly::normalized(BigRational* applied_scale) const {
  if (applied_scale) *applied_scale = BigRational(1);
  if (terms_.empty()) return *this;
  BigInt den_lcm(1), num_gcd(0);
  for (const auto& [e, c] : terms_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            c.denominator().get_mpz_t());
  }
  for (const auto& [e, c] : terms_) {
    BigInt scaled_num = c.numerator() * (den_lcm / c.denominator());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
            scaled_num.get_mpz_t());
  }
  BigRational s(den_lcm, num_gcd);
  // The lexicographically largest exponent holds the leading term; std::map
  // ordering makes this the last entry.
  if ((terms_.rbegin()->second * s).sign() < 0) s = -s;
  if (applied_scale) *applied_scale = s;
  return scaled(s);
}

bool MultiPoly::proportional_to(const MultiPoly& o) const {
  if (dim_ != o.dim_) return false;
  if (terms_.empty() || o.terms_.empty())
    return terms_.empty() && o.terms_.empty();
  if (terms_.size() != o.terms_.size()) return false;
  auto ita = terms_.begin();
  auto itb = o.terms_.begin();
  BigRational ratio = itb->second / ita->second;
  for (; ita != terms_.end(); ++ita, ++itb) {
    if (ita->first != itb->first) return false;
    if (ita->second * ratio != itb->second) return false;
  }
  return true;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest lexicographic term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigRational a = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    bool has_var = false;
    std::ostringstream vars;
    for (int i = 0; i < dim_; ++i) {
      if (e[i] == 0) continue;
      if (has_var) vars << "*";
      vars << "x" << (i + 1);
      if (e[i] > 1) vars << "^" << e[i];
      has_var = true;
    }
    if (!has_var) {
      os << a.str();
    } else {
      if (a != BigRational(1)) os << a.str() << "*";
      os << vars.str();
    }
  }
  return os.str();
}

MultiPoly poly_laplacian(const MultiPoly& p) {
  MultiPoly r(p.dim());
  for (const auto& [e, c] : p.terms()) {
    for (int v = 0; v < p.dim(); ++v) {
      if (e[v] < 2) continue;
      MultiPoly::Exponents d = e;
      d[v] -= 2;
      r.add_term(d, c * BigRational(e[v]) * BigRational(e[v] - 1));
    }
  }
  return r;
}

}  // namespace qparity
