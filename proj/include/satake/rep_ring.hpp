#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "satake/dual_group.hpp"

namespace satake {

/// Finitely supported Z-valued map on weights. Keys of length rank(G) are
/// weights of T^ (plain characters); keys of length rank(G)+1 are weights of
/// T^_1 in Y (+) Z.
using CharacterElement = std::map<LatticeVector, std::int64_t>;

/// Sum of m_{mu,n} [V_mu(n)], mu dominant. Coefficients may be negative.
using RepElement = std::map<std::pair<Coweight, std::int64_t>, std::int64_t>;

CharacterElement multiply(const CharacterElement& a, const CharacterElement& b);
RepElement add(RepElement a, const RepElement& b, std::int64_t scale = 1);
std::string to_string(const RepElement& r);

struct RestrictionReport {
  bool uniform = false;
  std::int64_t gm_weight = 0;  // G_m weight of the pullback (2n - <2rho, mu>)
  Rational d_exponent;         // gm_weight / 2: power of the pulled-back d
  std::vector<std::string> failures;
};

/// Representations of G^ and G^_1 for a root datum of G. Multiplicities and
/// tensor coefficients are cached; every method is safe to call concurrently.
class DualRepresentations {
 public:
  explicit DualRepresentations(const BasedRootDatum& d);
  explicit DualRepresentations(std::shared_ptr<const RootSystem> rs);

  const RootSystem& roots() const { return *rs_; }
  std::shared_ptr<const RootSystem> root_system() const { return rs_; }
  const ExtendedDualDatum& extended() const { return ext_; }

  /// <2rho, y>, the height used to order weights.
  std::int64_t height(const Coweight& y) const { return pairing(rs_->two_rho(), y); }
  /// <rho, y>; throws if y is not in the coroot lattice shift where it is integral.
  std::int64_t rho(const Coweight& y) const;

  /// Dominant nu <= mu, by decreasing height then decreasing coordinates.
  std::vector<Coweight> dominant_weights_below(const Coweight& mu) const;
  /// Freudenthal multiplicities of the dominant weights of V_mu.
  const std::map<Coweight, std::int64_t>& dominant_multiplicities(const Coweight& mu) const;
  std::int64_t multiplicity(const Coweight& mu, const Coweight& nu) const;

  CharacterElement weyl_character(const Coweight& mu) const;
  CharacterElement extended_character(const Coweight& mu, std::int64_t n) const;
  CharacterElement character(const RepElement& r) const;
  std::int64_t weyl_dimension(const Coweight& mu) const;

  /// Leading-term expansion of a W0-invariant character.
  RepElement decompose_character(const CharacterElement& c) const;

  /// N^nu_{mu,lambda} by the Brauer-Klimyk rule.
  const std::map<Coweight, std::int64_t>& tensor_multiplicities(const Coweight& mu, const Coweight& lambda) const;
  RepElement tensor_decompose(const RepElement& a, const RepElement& b) const;

  RestrictionReport restriction_check(const Coweight& mu, std::int64_t n) const;

  /// Image of a weight under the simple reflection i, on Y or on Y (+) Z.
  LatticeVector reflect(std::size_t i, const LatticeVector& weight) const;

 private:
  void require_dominant(const Coweight& mu) const;

  std::shared_ptr<const RootSystem> rs_;
  ExtendedDualDatum ext_;
  std::size_t longest_ = 0;
  mutable std::mutex mu_;
  mutable std::map<Coweight, std::map<Coweight, std::int64_t>> mult_cache_;
  mutable std::map<std::pair<Coweight, Coweight>, std::map<Coweight, std::int64_t>> tensor_cache_;
};

}  // namespace satake
