#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "satake/root_datum.hpp"

namespace satake {

/// t_lambda * w with w given by its index in the finite Weyl group.
struct IwahoriWeylElement {
  Coweight translation;
  std::size_t finite = 0;

  friend auto operator<=>(const IwahoriWeylElement&, const IwahoriWeylElement&) = default;
  friend bool operator==(const IwahoriWeylElement&, const IwahoriWeylElement&) = default;
};

/// The affine function x -> <root, x> + level on the apartment Y (x) R.
struct AffineRoot {
  std::size_t root = 0;  // index into the datum's roots
  std::int64_t level = 0;

  friend auto operator<=>(const AffineRoot&, const AffineRoot&) = default;
};

/// Subset of the affine simple reflections, sorted. The empty set is the
/// base alcove.
using FacetType = std::vector<std::size_t>;

struct DoubleCoset {
  IwahoriWeylElement rep;  // minimal length representative
  FacetType left;          // J'
  FacetType right;         // J

  friend bool operator==(const DoubleCoset&, const DoubleCoset&) = default;
};

/// Iwahori-Weyl group W = Y x| W0 of a root datum.
///
/// Affine simple reflections are numbered as follows: 0 is the affine
/// reflection of the first Dynkin component, 1..s are the finite simple
/// reflections (simple index i has number i+1), and s+1, s+2, ... are the
/// affine reflections of the remaining components.
class IwahoriWeylGroup {
 public:
  explicit IwahoriWeylGroup(const BasedRootDatum& d);
  explicit IwahoriWeylGroup(std::shared_ptr<const RootSystem> rs);

  const RootSystem& roots() const { return *rs_; }
  std::shared_ptr<const RootSystem> root_system() const { return rs_; }
  std::size_t rank() const { return rs_->rank(); }

  IwahoriWeylElement identity() const;
  IwahoriWeylElement translation(const Coweight& lambda) const;
  IwahoriWeylElement finite(std::size_t w) const;
  const WeylElement& finite_part(const IwahoriWeylElement& x) const;

  IwahoriWeylElement multiply(const IwahoriWeylElement& x, const IwahoriWeylElement& y) const;
  IwahoriWeylElement inverse(const IwahoriWeylElement& x) const;

  /// Action on Y (+) Z as an affine map: [[w, lambda], [0, 1]].
  IntMatrix affine_matrix(const IwahoriWeylElement& x) const;

  std::size_t length(const IwahoriWeylElement& x) const;

  std::size_t num_affine_simple() const { return simple_.size(); }
  const IwahoriWeylElement& simple_reflection(std::size_t i) const { return simple_.at(i); }
  /// Affine simple reflections of the finite Weyl group: {1, ..., s}.
  FacetType hyperspecial() const;
  /// Component id of each affine simple reflection.
  std::size_t component_of(std::size_t i) const { return component_.at(i); }

  bool is_left_descent(std::size_t s, const IwahoriWeylElement& x) const;
  bool is_right_descent(const IwahoriWeylElement& x, std::size_t s) const;

  /// The length-zero element omega with x in W_aff * omega.
  IwahoriWeylElement omega_component(const IwahoriWeylElement& x) const;
  /// Lexicographically least reduced word s_{i1}...s_{ik} with
  /// x = s_{i1}...s_{ik} * omega_component(x).
  std::vector<std::size_t> reduced_word(const IwahoriWeylElement& x) const;

  /// Bruhat order; false when the Omega components differ.
  bool bruhat_leq(const IwahoriWeylElement& x, const IwahoriWeylElement& y) const;
  IwahoriWeylElement demazure_product(const IwahoriWeylElement& x, const IwahoriWeylElement& y) const;

  /// The affine root x(a).
  AffineRoot act(const IwahoriWeylElement& x, const AffineRoot& a) const;
  /// Value of an affine root at the barycenter of facet J of the base alcove.
  Rational evaluate(const AffineRoot& a, const FacetType& J) const;
  /// Number of affine roots a with (v a) > 0 on the base alcove and a < 0 on
  /// the facet J. v must be minimal in v W_J.
  std::size_t affine_root_count_for_cell(const IwahoriWeylElement& v, const FacetType& J) const;

  /// Throws infinite_parabolic if W_J is infinite, bad_facet on an unknown index.
  void check_facet(const FacetType& J) const;
  std::vector<IwahoriWeylElement> parabolic_elements(const FacetType& J) const;
  IwahoriWeylElement min_left_coset_rep(const IwahoriWeylElement& x, const FacetType& J) const;  // x W_J
  IwahoriWeylElement min_double_coset_rep(const FacetType& Jl, const IwahoriWeylElement& x,
                                          const FacetType& J) const;
  bool is_min_double_coset_rep(const FacetType& Jl, const IwahoriWeylElement& x, const FacetType& J) const;

  /// Length-zero elements whose translation has every coordinate in
  /// [-radius, radius]. Omega is infinite when G has a central torus.
  std::vector<IwahoriWeylElement> omega_window(std::int64_t radius = 1) const;
  /// All elements of length <= bound in W_aff * omega_window(radius). Sorted.
  std::vector<IwahoriWeylElement> elements_up_to_length(std::size_t bound, std::int64_t radius = 1) const;

  /// Double cosets W_{J'} x W_J whose minimal representative has length <= bound.
  std::vector<DoubleCoset> double_coset_reps(const FacetType& Jl, const FacetType& J, std::size_t bound,
                                             std::int64_t radius = 1) const;

  /// "t(1,0)*s1s0"-style rendering using finite reduced words.
  std::string str(const IwahoriWeylElement& x) const;

 private:
  void check(const IwahoriWeylElement& x) const;
  IwahoriWeylElement left_mult(std::size_t s, const IwahoriWeylElement& x) const;
  IwahoriWeylElement right_mult(const IwahoriWeylElement& x, std::size_t s) const;

  std::shared_ptr<const RootSystem> rs_;
  std::vector<IwahoriWeylElement> simple_;
  std::vector<std::size_t> component_;
  std::vector<std::size_t> affine_of_component_;
  std::vector<std::int64_t> marks_;  // coefficient of each simple root in its component's highest root
};

/// Facet from a CLI spelling: "iwahori", "hyperspecial" or "0,2".
FacetType parse_facet(const IwahoriWeylGroup& W, const std::string& text);

}  // namespace satake
