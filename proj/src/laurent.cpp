#include "satake/laurent.hpp"

#include <sstream>

namespace satake {

LaurentPolynomial::LaurentPolynomial(std::int64_t constant) {
  if (constant != 0) c_[0] = constant;
}

LaurentPolynomial LaurentPolynomial::monomial(std::int64_t exponent, std::int64_t coeff) {
  LaurentPolynomial p;
  if (coeff != 0) p.c_[exponent] = coeff;
  return p;
}

std::int64_t LaurentPolynomial::coeff(std::int64_t exponent) const {
  auto it = c_.find(exponent);
  return it == c_.end() ? 0 : it->second;
}

std::int64_t LaurentPolynomial::min_degree() const {
  if (c_.empty()) throw SatakeError("zero_polynomial", "degree of the zero polynomial");
  return c_.begin()->first;
}

std::int64_t LaurentPolynomial::max_degree() const {
  if (c_.empty()) throw SatakeError("zero_polynomial", "degree of the zero polynomial");
  return c_.rbegin()->first;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [e, k] : o.c_) {
    auto& slot = c_[e];
    slot += k;
    if (slot == 0) c_.erase(e);
  }
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) { return *this += -o; }

LaurentPolynomial operator-(const LaurentPolynomial& a) {
  LaurentPolynomial r = a;
  for (auto& [e, k] : r.c_) k = -k;
  return r;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial r;
  for (const auto& [ea, ka] : a.c_)
    for (const auto& [eb, kb] : b.c_) r += LaurentPolynomial::monomial(ea + eb, ka * kb);
  return r;
}

LaurentPolynomial LaurentPolynomial::substitute_power(std::int64_t k) const {
  LaurentPolynomial r;
  for (const auto& [e, c] : c_) r += monomial(e * k, c);
  return r;
}

LaurentPolynomial LaurentPolynomial::shift(std::int64_t k) const {
  LaurentPolynomial r;
  for (const auto& [e, c] : c_) r.c_[e + k] = c;
  return r;
}

Rational LaurentPolynomial::evaluate(std::int64_t x) const {
  Rational sum(0);
  for (const auto& [e, c] : c_) {
    Rational p(1);
    for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) p *= x;
    sum += e < 0 ? Rational(c) / p : Rational(c) * p;
  }
  return sum;
}

LaurentPolynomial LaurentPolynomial::halve_exponents() const {
  LaurentPolynomial r;
  for (const auto& [e, c] : c_) {
    if (e % 2 != 0) throw SatakeError("odd_exponent", "half-integral power in " + str("v"));
    r.c_[e / 2] = c;
  }
  return r;
}

std::string LaurentPolynomial::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    auto [e, c] = *it;
    if (c < 0) {
      os << '-';
      c = -c;
    } else if (!first) {
      os << '+';
    }
    first = false;
    if (e == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << '*';
    os << var;
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

}  // namespace satake
