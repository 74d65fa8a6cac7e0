#pragma once

#include <memory>
#include <string>
#include <vector>

#include "satake/affine_weyl.hpp"

namespace satake {

/// Partial affine flag variety Fl_f stratified by orbits of the parahoric of f'.
struct FlagVariety {
  std::shared_ptr<const IwahoriWeylGroup> group;
  FacetType facet;             // f
  FacetType stratifying_facet;  // f'

  bool is_grassmannian() const;
  bool is_iwahori() const { return facet.empty() && stratifying_facet.empty(); }
};

FlagVariety make_flag_variety(const BasedRootDatum& d, const std::string& facet,
                              const std::string& stratifying_facet);
FlagVariety make_flag_variety(std::shared_ptr<const IwahoriWeylGroup> W, FacetType facet, FacetType stratifying);

struct Stratum {
  DoubleCoset coset;
  std::size_t dimension = 0;
  std::string label;  // dominant coweight on Gr, element otherwise
};

/// Largest length of a minimal representative of u w W_f, u in W_{f'}.
std::size_t stratum_dimension(const FlagVariety& fl, const DoubleCoset& c);
Stratum make_stratum(const FlagVariety& fl, const IwahoriWeylElement& x);

struct StrataPoset {
  std::vector<Stratum> strata;             // sorted by (dimension, label)
  std::vector<std::vector<bool>> leq;      // leq[i][j]: stratum i lies in the closure of j
  std::vector<std::vector<std::size_t>> covers;  // covers[j]: strata directly below j

  std::vector<std::size_t> closure(std::size_t j) const;
};

/// Strata of dimension <= bound (Omega restricted to omega_window(radius)).
StrataPoset enumerate_strata(const FlagVariety& fl, std::size_t bound, std::int64_t radius = 1);

/// Closure poset as a DOT digraph, edges from a stratum to the ones it covers.
std::string strata_to_dot(const StrataPoset& p);

struct FiberPiece {
  IwahoriWeylElement element;
  std::size_t dimension = 0;
  std::string kind;  // "isomorphism" or "perfect_line_bundle"
};

/// Preimage of Fl_{f_s, v} under Fl -> Fl_{f_s}: the Iwahori strata of v and
/// vs. Requires l(vs) = l(v) + 1.
std::vector<FiberPiece> projection_fibers(const IwahoriWeylGroup& W, const IwahoriWeylElement& v, std::size_t s);

/// Stratum whose closure supports the convolution of the closures of the two
/// strata. Iwahori case: Demazure product; Gr case: dominant translations.
Stratum convolution_support(const FlagVariety& fl, const DoubleCoset& a, const DoubleCoset& b);
/// Gr case on dominant coweights.
Coweight convolution_support(const IwahoriWeylGroup& W, const Coweight& mu, const Coweight& lambda);

struct ParityRow {
  Coweight mu, lambda;  // lambda <= mu
  std::size_t dim_mu = 0, dim_lambda = 0;
  bool same_parity = false;
};

/// All comparable pairs of Gr strata of dimension <= bound.
std::vector<ParityRow> parity_table(const FlagVariety& fl, std::size_t bound, std::int64_t radius = 1);

}  // namespace satake
