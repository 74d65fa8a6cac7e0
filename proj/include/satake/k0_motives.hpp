#pragma once

#include <memory>

#include "satake/hecke.hpp"

namespace satake {

/// sum a_{mu,n} [IC_mu(n)] in K0 of mixed Tate motives on the affine
/// Grassmannian; same shape as RepElement, keyed by (mu dominant, n).
using K0Element = RepElement;

class MotivicSatake {
 public:
  explicit MotivicSatake(const BasedRootDatum& d);
  explicit MotivicSatake(std::shared_ptr<const SphericalHecke> hecke);

  const SphericalHecke& hecke() const { return *hecke_; }
  const DualRepresentations& reps() const { return hecke_->reps(); }

  K0Element basis(const Coweight& mu, std::int64_t n = 0) const;
  K0Element convolve(const K0Element& a, const K0Element& b) const;
  static K0Element tate_twist(const K0Element& a, std::int64_t k);

  /// [IC_mu(n)] -> q^-n f_{IC_mu}.
  HeckeElement trace_frobenius(const K0Element& a) const;

  /// [IC_mu(n)] -> [V_mu(n)].
  RepElement satake_bridge(const K0Element& a) const;
  K0Element bridge_inverse(const RepElement& r) const;
  /// R(G^_1) -> R(G^_1) / ([d^-1] - q) -> H_G (x) Z[v^-1], computed on
  /// characters: e^{(nu, t)} -> v^{<2rho, nu> - 2t} e^nu, then Sat^-1.
  HeckeElement quotient_specialize(const RepElement& r) const;

  /// sum_lambda m^mu_lambda(q) |W0 lambda|, a polynomial in q.
  LaurentPolynomial graded_fiber_dimension(const Coweight& mu) const;
  std::int64_t fiber_dimension(const Coweight& mu) const;

 private:
  std::shared_ptr<const SphericalHecke> hecke_;
};

}  // namespace satake
