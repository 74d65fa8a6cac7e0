#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "satake/lattice.hpp"

namespace satake {

using Weight = LatticeVector;    // element of X = X^*(T)
using Coweight = LatticeVector;  // element of Y = X_*(T)

/// Based root datum of a split reductive group. X and Y are both Z^rank
/// and the pairing is the dot product; coroots[i] is the coroot of roots[i];
/// `simple` selects the simple roots (the Borel choice).
struct BasedRootDatum {
  std::string name;
  std::size_t rank = 0;
  std::vector<Weight> roots;
  std::vector<Coweight> coroots;
  std::vector<std::size_t> simple;
};

/// One entry per violated axiom; empty means valid.
using ValidationReport = std::vector<std::string>;

ValidationReport validate_root_datum(const BasedRootDatum& d);

/// Swaps characters with cocharacters and roots with coroots. The simple
/// coroots become the simple roots.
BasedRootDatum dual_root_datum(const BasedRootDatum& d);

/// Presets: GL<n>, SL<n>, PGL<n>, Sp<2g>, SO<2g+1>, T<r> (split torus), Gm.
///
/// GL_n, Sp_2g and SO_2g+1 use the standard coordinates e_1..e_n. SL_n has Y
/// written in the basis of simple coroots (X in the dual basis of fundamental
/// weights); PGL_n has X written in the basis of simple roots (Y in the basis
/// of fundamental coweights). In both cases the rank is n-1.
BasedRootDatum preset_root_datum(const std::string& name);

/// Reads a root-datum file (`rank:`, `roots:`, `coroots:`, `simple:` lines;
/// vectors written as parenthesized tuples) or falls back to a preset name.
BasedRootDatum load_root_datum(const std::string& name_or_path);

/// Based isomorphisms X1 -> X2: unimodular M with M(simple roots) = simple
/// roots (up to a permutation) and M^T(coroots of d2) = matching coroots of
/// d1. Free lattice directions (central tori) are searched in a small box.
std::vector<IntMatrix> find_isomorphisms(const BasedRootDatum& d1, const BasedRootDatum& d2,
                                         std::size_t limit = 16);
bool isomorphic(const BasedRootDatum& d1, const BasedRootDatum& d2);
/// Whether m is a based isomorphism d1 -> d2 in the sense above.
bool is_based_isomorphism(const IntMatrix& m, const BasedRootDatum& d1, const BasedRootDatum& d2);

/// Element of the finite Weyl group W0 together with its action on both lattices.
struct WeylElement {
  std::vector<int> word;  // lexicographically least reduced word in simple indices
  IntMatrix on_x;
  IntMatrix on_y;
  std::size_t length() const { return word.size(); }
};

class WeylGroup {
 public:
  WeylGroup() = default;
  WeylGroup(const BasedRootDatum& d, const std::vector<Weight>& simple_roots,
            const std::vector<Coweight>& simple_coroots);

  std::size_t size() const { return elems_.size(); }
  const WeylElement& operator[](std::size_t i) const { return elems_[i]; }
  const std::vector<WeylElement>& elements() const { return elems_; }
  std::size_t identity() const { return 0; }
  std::size_t multiply(std::size_t a, std::size_t b) const { return mult_[a * elems_.size() + b]; }
  std::size_t inverse(std::size_t a) const { return inv_[a]; }
  std::size_t generator(std::size_t i) const { return gens_.at(i); }
  /// Index of the element acting on Y by `m`; throws if m is not in W0.
  std::size_t index_of(const IntMatrix& on_y) const;
  std::optional<std::size_t> find(const IntMatrix& on_y) const;

 private:
  std::vector<WeylElement> elems_;
  std::vector<std::size_t> mult_, inv_, gens_;
  std::map<IntMatrix, std::size_t> index_;
};

/// Validated root datum with the derived data every other module needs.
class RootSystem {
 public:
  explicit RootSystem(BasedRootDatum d);

  const BasedRootDatum& datum() const { return d_; }
  std::size_t rank() const { return d_.rank; }
  std::size_t num_roots() const { return d_.roots.size(); }
  std::size_t num_simple() const { return d_.simple.size(); }
  const Weight& root(std::size_t i) const { return d_.roots[i]; }
  const Coweight& coroot(std::size_t i) const { return d_.coroots[i]; }
  const Weight& simple_root(std::size_t i) const { return d_.roots[d_.simple[i]]; }
  const Coweight& simple_coroot(std::size_t i) const { return d_.coroots[d_.simple[i]]; }
  bool is_positive(std::size_t root_index) const { return positive_flag_[root_index]; }
  const std::vector<std::size_t>& positive_roots() const { return positive_; }
  std::optional<std::size_t> root_index(const Weight& x) const;
  std::size_t negative_of(std::size_t root_index) const { return negation_[root_index]; }

  /// Integral coefficients of a root in the simple roots.
  const std::vector<std::int64_t>& root_coefficients(std::size_t root_index) const {
    return root_coeffs_[root_index];
  }
  /// Coefficients of y in the simple coroots, if y lies in their integral span.
  std::optional<std::vector<std::int64_t>> simple_coroot_coordinates(const Coweight& y) const;

  /// Sum of positive roots (2rho, in X) and of positive coroots (in Y).
  const Weight& two_rho() const { return two_rho_; }
  const Coweight& two_rho_check() const { return two_rho_check_; }

  Weight reflect_weight(std::size_t root_index, const Weight& x) const;
  Coweight reflect_coweight(std::size_t root_index, const Coweight& y) const;

  bool is_dominant(const Coweight& y) const;
  Coweight dominant_representative(const Coweight& y) const;
  const WeylGroup& weyl_group() const { return *weyl_; }
  /// W0 element index of the reflection in root `root_index`.
  std::size_t reflection_index(std::size_t root_index) const { return reflection_index_[root_index]; }

  /// Connected components of the Dynkin diagram (lists of simple indices)
  /// and, per component, the index of its highest root.
  const std::vector<std::vector<std::size_t>>& components() const { return components_; }
  const std::vector<std::size_t>& highest_roots() const { return highest_; }

 private:
  BasedRootDatum d_;
  std::vector<bool> positive_flag_;
  std::vector<std::size_t> positive_, negation_, reflection_index_;
  std::vector<std::vector<std::int64_t>> root_coeffs_;
  std::map<Weight, std::size_t> root_lookup_;
  Weight two_rho_;
  Coweight two_rho_check_;
  std::shared_ptr<const WeylGroup> weyl_;
  std::vector<std::vector<std::size_t>> components_;
  std::vector<std::size_t> highest_;
};

/// 2rho: the sum of the positive roots. <rho, mu> is <2rho, mu>/2.
Weight two_rho(const BasedRootDatum& d);

/// lambda <= mu in the dominance order on dominant coweights: mu - lambda is
/// a nonnegative integral combination of positive coroots.
bool dominance_leq(const RootSystem& rs, const Coweight& lambda, const Coweight& mu);
bool dominance_leq(const BasedRootDatum& d, const Coweight& lambda, const Coweight& mu);

/// Same test without the dominance precondition.
bool in_positive_coroot_cone(const RootSystem& rs, const Coweight& diff);

struct OrbitResult {
  std::vector<Coweight> orbit;  // sorted
  Coweight dominant;
};
OrbitResult weyl_orbit_dominant(const RootSystem& rs, const Coweight& nu);

/// Dominant coweights mu with <2rho, mu> <= bound and every coordinate in
/// [-box, box]. Sorted.
std::vector<Coweight> dominant_coweights_in_box(const RootSystem& rs, std::int64_t bound,
                                                std::int64_t box);

}  // namespace satake
