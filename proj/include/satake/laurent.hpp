#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "satake/lattice.hpp"

namespace satake {

/// Integer Laurent polynomial in one formal variable. Zero coefficients are
/// never stored, so equality is structural.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(std::int64_t constant);  // NOLINT: integers embed as constants
  static LaurentPolynomial monomial(std::int64_t exponent, std::int64_t coeff = 1);

  bool is_zero() const { return c_.empty(); }
  const std::map<std::int64_t, std::int64_t>& terms() const { return c_; }
  std::int64_t coeff(std::int64_t exponent) const;
  std::int64_t min_degree() const;  // requires nonzero
  std::int64_t max_degree() const;  // requires nonzero

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator-(const LaurentPolynomial& a);
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  /// x -> x^k (k may be negative).
  LaurentPolynomial substitute_power(std::int64_t k) const;
  /// Multiplication by x^k.
  LaurentPolynomial shift(std::int64_t k) const;
  /// Exact value at an integer point; negative exponents give rationals.
  Rational evaluate(std::int64_t x) const;
  /// Halves all exponents (v-polynomial -> q-polynomial); throws on an odd exponent.
  LaurentPolynomial halve_exponents() const;

  /// "2*q^3+q-1+q^-2" with the given variable name; "0" when zero.
  std::string str(const std::string& var = "q") const;

 private:
  std::map<std::int64_t, std::int64_t> c_;
};

}  // namespace satake
