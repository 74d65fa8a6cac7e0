#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "satake/laurent.hpp"
#include "satake/rep_ring.hpp"

namespace satake {

/// Element of the spherical Hecke ring over Z[v, v^-1], q = v^2: the value at
/// mu is the coefficient of c_mu, the characteristic function of K t^mu K.
using HeckeElement = std::map<Coweight, LaurentPolynomial>;
/// sum_mu p_mu(v) chi_mu in R(G^) (x) Z[v, v^-1].
using SatakeImage = std::map<Coweight, LaurentPolynomial>;

std::string to_string(const std::map<Coweight, LaurentPolynomial>& h, const std::string& basis,
                      const std::string& var = "v");

class SphericalHecke {
 public:
  explicit SphericalHecke(const BasedRootDatum& d);
  explicit SphericalHecke(std::shared_ptr<const DualRepresentations> reps);

  const DualRepresentations& reps() const { return *reps_; }
  const RootSystem& roots() const { return reps_->roots(); }

  HeckeElement basis(const Coweight& mu) const;
  /// f_{IC_mu} = sum_{lambda <= mu} q^{<rho, mu - lambda>} m^mu_lambda(q^-1) c_lambda.
  const HeckeElement& ic_function(const Coweight& mu) const;

  /// Normalized by Sat(f_{IC_mu}) = q^{<rho, mu>} chi_mu.
  SatakeImage satake_transform(const HeckeElement& h) const;
  HeckeElement satake_inverse(const SatakeImage& s) const;

  SatakeImage multiply_images(const SatakeImage& a, const SatakeImage& b) const;
  /// Sat^-1(Sat(a) Sat(b)).
  HeckeElement multiply(const HeckeElement& a, const HeckeElement& b) const;

 private:
  void check_support(const std::map<Coweight, LaurentPolynomial>& h) const;

  std::shared_ptr<const DualRepresentations> reps_;
  mutable std::mutex mu_;
  mutable std::map<Coweight, HeckeElement> ic_cache_;
};

/// Finite field with q = p^k elements; elements are 0..q-1 (base-p digits of
/// a polynomial modulo a fixed irreducible).
class FiniteField {
 public:
  explicit FiniteField(std::int64_t q);
  std::int64_t size() const { return q_; }
  std::int64_t characteristic() const { return p_; }
  int add(int a, int b) const { return add_[a * q_ + b]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }

 private:
  std::int64_t q_ = 0, p_ = 0;
  std::vector<int> add_, mul_, neg_;
};

/// (p, k) with q = p^k, or nullopt.
std::optional<std::pair<std::int64_t, int>> prime_power(std::int64_t q);

/// Structure constant of c_mu * c_lambda at c_nu for GL_n over a local field
/// with residue field F_q, counted directly: the number of lattices L' with
/// L0 / L' of type mu and L' / t^nu L0 of type lambda.
struct LatticeChainProblem {
  std::size_t n = 0;
  Coweight mu, lambda, nu;
  std::int64_t q = 0;
};

/// Throws bad_q if q is not a prime power, bound_overflow if the enumeration
/// would exceed `max_lattices` Hermite forms.
std::int64_t oracle_convolve(const LatticeChainProblem& p, std::int64_t max_lattices = 50'000'000);

/// Integer polynomial through the points (x_i, y_i); throws if the
/// interpolant does not have integer coefficients.
LaurentPolynomial interpolate(const std::vector<std::pair<std::int64_t, std::int64_t>>& points);

}  // namespace satake
