#include "satake/flag_strata.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace satake {

bool FlagVariety::is_grassmannian() const {
  const auto hs = group->hyperspecial();
  return facet == hs && stratifying_facet == hs;
}

FlagVariety make_flag_variety(const BasedRootDatum& d, const std::string& facet,
                              const std::string& stratifying_facet) {
  auto W = std::make_shared<const IwahoriWeylGroup>(d);
  auto f = parse_facet(*W, facet);
  auto fs = parse_facet(*W, stratifying_facet);
  return make_flag_variety(std::move(W), std::move(f), std::move(fs));
}

FlagVariety make_flag_variety(std::shared_ptr<const IwahoriWeylGroup> W, FacetType facet, FacetType stratifying) {
  W->check_facet(facet);
  W->check_facet(stratifying);
  return {std::move(W), std::move(facet), std::move(stratifying)};
}

std::size_t stratum_dimension(const FlagVariety& fl, const DoubleCoset& c) {
  const auto& W = *fl.group;
  std::size_t dim = 0;
  for (const auto& u : W.parabolic_elements(c.left))
    dim = std::max(dim, W.length(W.min_left_coset_rep(W.multiply(u, c.rep), c.right)));
  return dim;
}

Stratum make_stratum(const FlagVariety& fl, const IwahoriWeylElement& x) {
  const auto& W = *fl.group;
  Stratum s;
  s.coset = {W.min_double_coset_rep(fl.stratifying_facet, x, fl.facet), fl.stratifying_facet, fl.facet};
  s.dimension = stratum_dimension(fl, s.coset);
  s.label = fl.is_grassmannian() ? W.roots().dominant_representative(s.coset.rep.translation).str()
                                 : W.str(s.coset.rep);
  return s;
}

std::vector<std::size_t> StrataPoset::closure(std::size_t j) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < strata.size(); ++i)
    if (leq[i][j]) out.push_back(i);
  return out;
}

StrataPoset enumerate_strata(const FlagVariety& fl, std::size_t bound, std::int64_t radius) {
  const auto& W = *fl.group;
  StrataPoset p;
  for (const auto& c : W.double_coset_reps(fl.stratifying_facet, fl.facet, bound, radius)) {
    auto s = make_stratum(fl, c.rep);
    if (s.dimension <= bound) p.strata.push_back(std::move(s));
  }
  std::stable_sort(p.strata.begin(), p.strata.end(), [](const Stratum& a, const Stratum& b) {
    return std::tie(a.dimension, a.label) < std::tie(b.dimension, b.label);
  });
  const std::size_t n = p.strata.size();
  p.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p.leq[i][j] = W.bruhat_leq(p.strata[i].coset.rep, p.strata[j].coset.rep);
  p.covers.resize(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j || !p.leq[i][j]) continue;
      bool direct = true;
      for (std::size_t k = 0; k < n && direct; ++k)
        if (k != i && k != j && p.leq[i][k] && p.leq[k][j]) direct = false;
      if (direct) p.covers[j].push_back(i);
    }
  return p;
}

std::string strata_to_dot(const StrataPoset& p) {
  std::ostringstream os;
  os << "digraph strata {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < p.strata.size(); ++i)
    os << "  n" << i << " [label=\"" << p.strata[i].label << "\\ndim " << p.strata[i].dimension << "\"];\n";
  for (std::size_t j = 0; j < p.strata.size(); ++j)
    for (auto i : p.covers[j]) os << "  n" << i << " -> n" << j << ";\n";
  os << "}\n";
  return os.str();
}

std::vector<FiberPiece> projection_fibers(const IwahoriWeylGroup& W, const IwahoriWeylElement& v, std::size_t s) {
  if (s >= W.num_affine_simple()) throw SatakeError("bad_facet", "no affine simple reflection " + std::to_string(s));
  const auto vs = W.multiply(v, W.simple_reflection(s));
  const auto lv = W.length(v);
  if (W.length(vs) != lv + 1)
    throw SatakeError("non_reduced", W.str(v) + " * s" + std::to_string(s) + " is not a reduced decomposition");
  return {{v, lv, "isomorphism"}, {vs, lv + 1, "perfect_line_bundle"}};
}

Stratum convolution_support(const FlagVariety& fl, const DoubleCoset& a, const DoubleCoset& b) {
  const auto& W = *fl.group;
  if (fl.is_iwahori()) return make_stratum(fl, W.demazure_product(a.rep, b.rep));
  if (!fl.is_grassmannian())
    throw SatakeError("unsupported_facet", "convolution support needs the Iwahori or the Grassmannian case");
  const auto& R = W.roots();
  const auto mu = R.dominant_representative(a.rep.translation);
  const auto lambda = R.dominant_representative(b.rep.translation);
  return make_stratum(fl, W.translation(convolution_support(W, mu, lambda)));
}

Coweight convolution_support(const IwahoriWeylGroup& W, const Coweight& mu, const Coweight& lambda) {
  const auto& R = W.roots();
  if (!R.is_dominant(mu) || !R.is_dominant(lambda))
    throw SatakeError("not_dominant", "convolution support expects dominant coweights");
  const auto z = W.demazure_product(W.translation(mu), W.translation(lambda));
  return R.dominant_representative(z.translation);
}

std::vector<ParityRow> parity_table(const FlagVariety& fl, std::size_t bound, std::int64_t radius) {
  if (!fl.is_grassmannian()) throw SatakeError("unsupported_facet", "parity table is defined on the Grassmannian");
  const auto p = enumerate_strata(fl, bound, radius);
  const auto& R = fl.group->roots();
  std::vector<ParityRow> rows;
  for (std::size_t j = 0; j < p.strata.size(); ++j)
    for (std::size_t i = 0; i < p.strata.size(); ++i) {
      if (!p.leq[i][j]) continue;
      const auto& a = p.strata[i];
      const auto& b = p.strata[j];
      rows.push_back({R.dominant_representative(b.coset.rep.translation),
                      R.dominant_representative(a.coset.rep.translation), b.dimension, a.dimension,
                      b.dimension % 2 == a.dimension % 2});
    }
  return rows;
}

}  // namespace satake
