#include "satake/affine_weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

namespace satake {

IwahoriWeylGroup::IwahoriWeylGroup(const BasedRootDatum& d)
    : IwahoriWeylGroup(std::make_shared<const RootSystem>(d)) {}

IwahoriWeylGroup::IwahoriWeylGroup(std::shared_ptr<const RootSystem> rs) : rs_(std::move(rs)) {
  const auto& R = *rs_;
  const std::size_t s = R.num_simple();
  const std::size_t ncomp = R.components().size();
  simple_.resize(s + ncomp);
  component_.resize(s + ncomp);
  marks_.assign(s, 0);
  for (std::size_t c = 0; c < ncomp; ++c) {
    const std::size_t id = c == 0 ? 0 : s + c;
    const std::size_t theta = R.highest_roots()[c];
    simple_[id] = {R.coroot(theta), R.reflection_index(theta)};
    component_[id] = c;
    affine_of_component_.push_back(id);
    for (auto k : R.components()[c]) {
      simple_[k + 1] = {Coweight(R.rank()), R.weyl_group().generator(k)};
      component_[k + 1] = c;
      marks_[k] = R.root_coefficients(theta)[k];
    }
  }
}

void IwahoriWeylGroup::check(const IwahoriWeylElement& x) const {
  if (x.translation.size() != rank() || x.finite >= rs_->weyl_group().size())
    throw SatakeError("datum_mismatch", "element does not belong to this Iwahori-Weyl group");
}

IwahoriWeylElement IwahoriWeylGroup::identity() const { return {Coweight(rank()), 0}; }

IwahoriWeylElement IwahoriWeylGroup::translation(const Coweight& lambda) const {
  IwahoriWeylElement x{lambda, 0};
  check(x);
  return x;
}

IwahoriWeylElement IwahoriWeylGroup::finite(std::size_t w) const {
  IwahoriWeylElement x{Coweight(rank()), w};
  check(x);
  return x;
}

const WeylElement& IwahoriWeylGroup::finite_part(const IwahoriWeylElement& x) const {
  check(x);
  return rs_->weyl_group()[x.finite];
}

IwahoriWeylElement IwahoriWeylGroup::multiply(const IwahoriWeylElement& x, const IwahoriWeylElement& y) const {
  check(x);
  check(y);
  const auto& W = rs_->weyl_group();
  return {x.translation + W[x.finite].on_y.apply(y.translation), W.multiply(x.finite, y.finite)};
}

IwahoriWeylElement IwahoriWeylGroup::inverse(const IwahoriWeylElement& x) const {
  check(x);
  const auto& W = rs_->weyl_group();
  const auto wi = W.inverse(x.finite);
  return {-W[wi].on_y.apply(x.translation), wi};
}

IntMatrix IwahoriWeylGroup::affine_matrix(const IwahoriWeylElement& x) const {
  check(x);
  const std::size_t r = rank();
  const auto& w = rs_->weyl_group()[x.finite].on_y;
  IntMatrix m(r + 1);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) m(i, j) = w(i, j);
    m(i, r) = x.translation[i];
  }
  m(r, r) = 1;
  return m;
}

std::size_t IwahoriWeylGroup::length(const IwahoriWeylElement& x) const {
  check(x);
  const auto& R = *rs_;
  const auto& winv = R.weyl_group()[R.weyl_group().inverse(x.finite)].on_x;
  std::int64_t len = 0;
  for (auto a : R.positive_roots()) {
    const auto b = *R.root_index(winv.apply(R.root(a)));
    std::int64_t v = pairing(R.root(a), x.translation);
    if (!R.is_positive(b)) v -= 1;
    len += std::llabs(v);
  }
  return static_cast<std::size_t>(len);
}

FacetType IwahoriWeylGroup::hyperspecial() const {
  FacetType J;
  for (std::size_t k = 0; k < rs_->num_simple(); ++k) J.push_back(k + 1);
  return J;
}

IwahoriWeylElement IwahoriWeylGroup::left_mult(std::size_t s, const IwahoriWeylElement& x) const {
  return multiply(simple_.at(s), x);
}

IwahoriWeylElement IwahoriWeylGroup::right_mult(const IwahoriWeylElement& x, std::size_t s) const {
  return multiply(x, simple_.at(s));
}

bool IwahoriWeylGroup::is_left_descent(std::size_t s, const IwahoriWeylElement& x) const {
  return length(left_mult(s, x)) < length(x);
}

bool IwahoriWeylGroup::is_right_descent(const IwahoriWeylElement& x, std::size_t s) const {
  return length(right_mult(x, s)) < length(x);
}

IwahoriWeylElement IwahoriWeylGroup::omega_component(const IwahoriWeylElement& x) const {
  auto y = x;
  for (std::size_t len = length(y); len > 0;) {
    for (std::size_t s = 0; s < simple_.size(); ++s) {
      auto z = left_mult(s, y);
      const auto lz = length(z);
      if (lz < len) {
        y = std::move(z);
        len = lz;
        break;
      }
    }
  }
  return y;
}

std::vector<std::size_t> IwahoriWeylGroup::reduced_word(const IwahoriWeylElement& x) const {
  std::vector<std::size_t> word;
  auto y = x;
  for (std::size_t len = length(y); len > 0;) {
    for (std::size_t s = 0; s < simple_.size(); ++s) {
      auto z = left_mult(s, y);
      const auto lz = length(z);
      if (lz < len) {
        word.push_back(s);
        y = std::move(z);
        len = lz;
        break;
      }
    }
  }
  return word;
}

bool IwahoriWeylGroup::bruhat_leq(const IwahoriWeylElement& x, const IwahoriWeylElement& y) const {
  auto a = x, b = y;
  std::size_t la = length(a), lb = length(b);
  while (true) {
    if (la > lb) return false;
    if (lb == 0) return a == b;
    std::size_t s = 0;
    while (!is_left_descent(s, b)) ++s;
    b = left_mult(s, b);
    --lb;
    auto sa = left_mult(s, a);
    const auto lsa = length(sa);
    if (lsa < la) {
      a = std::move(sa);
      la = lsa;
    }
  }
}

IwahoriWeylElement IwahoriWeylGroup::demazure_product(const IwahoriWeylElement& x,
                                                      const IwahoriWeylElement& y) const {
  const auto word = reduced_word(x);
  auto z = multiply(omega_component(x), y);
  auto lz = length(z);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    auto sz = left_mult(*it, z);
    const auto l = length(sz);
    if (l > lz) {
      z = std::move(sz);
      lz = l;
    }
  }
  return z;
}

AffineRoot IwahoriWeylGroup::act(const IwahoriWeylElement& x, const AffineRoot& a) const {
  check(x);
  const auto& R = *rs_;
  const auto wb = R.weyl_group()[x.finite].on_x.apply(R.root(a.root));
  return {*R.root_index(wb), a.level - pairing(wb, x.translation)};
}

Rational IwahoriWeylGroup::evaluate(const AffineRoot& a, const FacetType& J) const {
  check_facet(J);
  const auto& R = *rs_;
  const std::set<std::size_t> in_j(J.begin(), J.end());
  // Vertex v_i = omega_i^vee / mark_i, affine vertex 0; the barycenter of the
  // face opposite J averages the vertices not in J, componentwise.
  std::vector<std::int64_t> vertices(R.components().size(), 0);
  for (std::size_t id = 0; id < simple_.size(); ++id)
    if (!in_j.count(id)) ++vertices[component_[id]];
  Rational value(a.level);
  const auto& coeff = R.root_coefficients(a.root);
  for (std::size_t k = 0; k < coeff.size(); ++k) {
    if (coeff[k] == 0 || in_j.count(k + 1)) continue;
    value += Rational(coeff[k], marks_[k] * vertices[component_[k + 1]]);
  }
  return value;
}

std::size_t IwahoriWeylGroup::affine_root_count_for_cell(const IwahoriWeylElement& v, const FacetType& J) const {
  check(v);
  check_facet(J);
  if (!(min_left_coset_rep(v, J) == v))
    throw SatakeError("not_minimal", str(v) + " is not minimal in its coset");
  const auto& R = *rs_;
  std::int64_t window = 1;
  for (std::size_t a = 0; a < R.num_roots(); ++a)
    window = std::max<std::int64_t>(window, 1 + std::llabs(pairing(R.root(a), v.translation)));
  const Rational zero(0);
  std::size_t count = 0;
  for (std::size_t a = 0; a < R.num_roots(); ++a)
    for (std::int64_t k = -window; k <= window; ++k) {
      const AffineRoot alpha{a, k};
      if (evaluate(alpha, J) < zero && evaluate(act(v, alpha), {}) > zero) ++count;
    }
  return count;
}

void IwahoriWeylGroup::check_facet(const FacetType& J) const {
  std::vector<std::size_t> hits(affine_of_component_.size(), 0);
  for (auto j : J) {
    if (j >= simple_.size())
      throw SatakeError("bad_facet", "no affine simple reflection with index " + std::to_string(j));
    ++hits[component_[j]];
  }
  for (std::size_t c = 0; c < hits.size(); ++c)
    if (hits[c] == rs_->components()[c].size() + 1)
      throw SatakeError("infinite_parabolic", "facet contains every affine simple reflection of a component");
}

std::vector<IwahoriWeylElement> IwahoriWeylGroup::parabolic_elements(const FacetType& J) const {
  check_facet(J);
  std::set<IwahoriWeylElement> seen{identity()};
  std::vector<IwahoriWeylElement> queue{identity()};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (auto s : J) {
      auto y = right_mult(queue[i], s);
      if (seen.insert(y).second) queue.push_back(y);
    }
  return queue;
}

IwahoriWeylElement IwahoriWeylGroup::min_left_coset_rep(const IwahoriWeylElement& x, const FacetType& J) const {
  auto y = x;
  for (bool changed = true; changed;) {
    changed = false;
    for (auto s : J)
      if (is_right_descent(y, s)) {
        y = right_mult(y, s);
        changed = true;
      }
  }
  return y;
}

IwahoriWeylElement IwahoriWeylGroup::min_double_coset_rep(const FacetType& Jl, const IwahoriWeylElement& x,
                                                          const FacetType& J) const {
  check_facet(Jl);
  check_facet(J);
  auto y = x;
  for (bool changed = true; changed;) {
    changed = false;
    for (auto s : Jl)
      if (is_left_descent(s, y)) {
        y = left_mult(s, y);
        changed = true;
      }
    for (auto s : J)
      if (is_right_descent(y, s)) {
        y = right_mult(y, s);
        changed = true;
      }
  }
  return y;
}

bool IwahoriWeylGroup::is_min_double_coset_rep(const FacetType& Jl, const IwahoriWeylElement& x,
                                               const FacetType& J) const {
  for (auto s : Jl)
    if (is_left_descent(s, x)) return false;
  for (auto s : J)
    if (is_right_descent(x, s)) return false;
  return true;
}

std::vector<IwahoriWeylElement> IwahoriWeylGroup::omega_window(std::int64_t radius) const {
  std::vector<IwahoriWeylElement> out;
  const std::size_t r = rank();
  Coweight lambda(r);
  for (std::size_t i = 0; i < r; ++i) lambda[i] = -radius;
  while (true) {
    for (std::size_t w = 0; w < rs_->weyl_group().size(); ++w) {
      IwahoriWeylElement x{lambda, w};
      if (length(x) == 0) out.push_back(x);
    }
    std::size_t i = 0;
    while (i < r && lambda[i] == radius) lambda[i++] = -radius;
    if (i == r) break;
    ++lambda[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IwahoriWeylElement> IwahoriWeylGroup::elements_up_to_length(std::size_t bound,
                                                                         std::int64_t radius) const {
  auto shell = omega_window(radius);
  std::set<IwahoriWeylElement> all(shell.begin(), shell.end());
  for (std::size_t len = 0; len < bound && !shell.empty(); ++len) {
    std::set<IwahoriWeylElement> next;
    for (const auto& z : shell)
      for (std::size_t s = 0; s < simple_.size(); ++s) {
        auto y = left_mult(s, z);
        if (length(y) == len + 1) next.insert(y);
      }
    shell.assign(next.begin(), next.end());
    all.insert(next.begin(), next.end());
  }
  return {all.begin(), all.end()};
}

std::vector<DoubleCoset> IwahoriWeylGroup::double_coset_reps(const FacetType& Jl, const FacetType& J,
                                                             std::size_t bound, std::int64_t radius) const {
  check_facet(Jl);
  check_facet(J);
  std::vector<std::pair<std::size_t, IwahoriWeylElement>> reps;
  for (const auto& x : elements_up_to_length(bound, radius))
    if (is_min_double_coset_rep(Jl, x, J)) reps.emplace_back(length(x), x);
  std::sort(reps.begin(), reps.end());
  std::vector<DoubleCoset> out;
  for (auto& [len, x] : reps) out.push_back({x, Jl, J});
  return out;
}

std::string IwahoriWeylGroup::str(const IwahoriWeylElement& x) const {
  check(x);
  std::ostringstream os;
  const auto& word = rs_->weyl_group()[x.finite].word;
  if (!x.translation.is_zero()) os << 't' << x.translation.str();
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i || !x.translation.is_zero()) os << '*';
    os << 's' << word[i] + 1;
  }
  if (os.tellp() == 0) os << 'e';
  return os.str();
}

FacetType parse_facet(const IwahoriWeylGroup& W, const std::string& text) {
  FacetType J;
  if (text == "iwahori" || text.empty()) {
  } else if (text == "hyperspecial") {
    J = W.hyperspecial();
  } else {
    for (auto v : parse_lattice_vector(text)) {
      if (v < 0) throw SatakeError("bad_facet", "negative reflection index in '" + text + "'");
      J.push_back(static_cast<std::size_t>(v));
    }
    std::sort(J.begin(), J.end());
    J.erase(std::unique(J.begin(), J.end()), J.end());
  }
  W.check_facet(J);
  return J;
}

}  // namespace satake
