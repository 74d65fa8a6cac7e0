#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace satake {

using Rational = boost::rational<std::int64_t>;

/// Error raised by every library operation on a violated precondition.
/// `code` is a short machine-readable tag used by the CLI.
class SatakeError : public std::runtime_error {
 public:
  SatakeError(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// Integer vector in a character or cocharacter lattice, in the fixed
/// coordinates of its root datum.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t n) : c_(n, 0) {}
  explicit LatticeVector(std::vector<std::int64_t> c) : c_(std::move(c)) {}
  LatticeVector(std::initializer_list<std::int64_t> c) : c_(c) {}

  std::size_t size() const { return c_.size(); }
  std::int64_t operator[](std::size_t i) const { return c_[i]; }
  std::int64_t& operator[](std::size_t i) { return c_[i]; }
  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }
  const std::vector<std::int64_t>& coords() const { return c_; }

  bool is_zero() const;

  LatticeVector& operator+=(const LatticeVector& o);
  LatticeVector& operator-=(const LatticeVector& o);
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator-(LatticeVector a);
  friend LatticeVector operator*(std::int64_t k, LatticeVector a);

  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;

  /// "(1,-1)"
  std::string str() const;

 private:
  std::vector<std::int64_t> c_;
};

std::ostream& operator<<(std::ostream& os, const LatticeVector& v);

/// Standard dot product; the pairing of a datum in its chosen coordinates.
std::int64_t pairing(const LatticeVector& x, const LatticeVector& y);

/// Parses "(1,0,-2)" or "1,0,-2" (whitespace tolerant).
LatticeVector parse_lattice_vector(std::string_view text);

/// Appends one coordinate.
LatticeVector extend(const LatticeVector& v, std::int64_t last);

/// Square integer matrix acting on column vectors.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), a_(n * n, 0) {}
  static IntMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors.
  static IntMatrix from_columns(const std::vector<LatticeVector>& cols);

  std::size_t dim() const { return n_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

  LatticeVector apply(const LatticeVector& v) const;
  IntMatrix transpose() const;
  std::int64_t determinant() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::string str() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> a_;
};

/// Solution set {particular + span(kernel)} of a rational linear system.
struct LinearSolution {
  std::vector<Rational> particular;
  std::vector<std::vector<Rational>> kernel;
};

/// Solves rows * x = rhs over Q. Returns nullopt when inconsistent.
std::optional<LinearSolution> solve_linear(std::vector<std::vector<Rational>> rows,
                                           std::vector<Rational> rhs);

/// Coordinates of `v` in the basis `basis` (assumed linearly independent).
/// Returns nullopt if `v` is outside their rational span.
std::optional<std::vector<Rational>> rational_coordinates(const std::vector<LatticeVector>& basis,
                                                          const LatticeVector& v);

}  // namespace satake
