#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "satake/affine_weyl.hpp"

using namespace satake;

namespace {

using Elt = IwahoriWeylElement;

// Word length in the affine simple reflections, by breadth-first search in
// the Cayley graph of W_aff.
std::map<Elt, std::size_t> cayley_distances(const IwahoriWeylGroup& W, std::size_t depth) {
  std::map<Elt, std::size_t> dist{{W.identity(), 0}};
  std::vector<Elt> shell{W.identity()};
  for (std::size_t d = 1; d <= depth; ++d) {
    std::vector<Elt> next;
    for (const auto& x : shell)
      for (std::size_t s = 0; s < W.num_affine_simple(); ++s) {
        auto y = W.multiply(x, W.simple_reflection(s));
        if (dist.emplace(y, d).second) next.push_back(y);
      }
    shell = std::move(next);
  }
  return dist;
}

// Bruhat interval below y: all subword products of a reduced word.
std::set<Elt> subword_products(const IwahoriWeylGroup& W, const Elt& y) {
  const auto word = W.reduced_word(y);
  const auto omega = W.omega_component(y);
  std::set<Elt> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << word.size()); ++mask) {
    Elt z = W.identity();
    for (std::size_t i = 0; i < word.size(); ++i)
      if (mask >> i & 1) z = W.multiply(z, W.simple_reflection(word[i]));
    out.insert(W.multiply(z, omega));
  }
  return out;
}

std::vector<FacetType> proper_facets(const IwahoriWeylGroup& W) {
  std::vector<FacetType> out;
  const std::size_t n = W.num_affine_simple();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    FacetType J;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) J.push_back(i);
    try {
      W.check_facet(J);
      out.push_back(J);
    } catch (const SatakeError&) {
    }
  }
  return out;
}

}  // namespace

TEST_CASE("group law and affine matrices") {
  for (auto name : {"SL2", "GL2", "Sp4", "PGL3"}) {
    CAPTURE(name);
    IwahoriWeylGroup W(preset_root_datum(name));
    auto elts = W.elements_up_to_length(3);
    for (const auto& x : elts) {
      CHECK(W.multiply(x, W.inverse(x)) == W.identity());
      for (const auto& y : elts) CHECK(W.affine_matrix(W.multiply(x, y)) == W.affine_matrix(x) * W.affine_matrix(y));
    }
  }
  IwahoriWeylGroup sl2(preset_root_datum("SL2"));
  auto p = sl2.multiply(sl2.simple_reflection(0), sl2.simple_reflection(1));
  CHECK(p.translation == sl2.roots().coroot(sl2.roots().positive_roots()[0]));
  CHECK(p.finite == 0);
  IwahoriWeylGroup gl2(preset_root_datum("GL2"));
  CHECK(gl2.multiply(gl2.translation({1, 0}), gl2.translation({0, 3})) == gl2.translation({1, 3}));
  CHECK_THROWS_AS(gl2.multiply(gl2.identity(), sl2.identity()), SatakeError);
}

TEST_CASE("length") {
  IwahoriWeylGroup sl2(preset_root_datum("SL2"));
  CHECK(sl2.length(sl2.identity()) == 0);
  CHECK(sl2.length(sl2.translation({1})) == 2);
  IwahoriWeylGroup gl2(preset_root_datum("GL2"));
  CHECK(gl2.length(gl2.translation({1, 1})) == 0);
  CHECK(gl2.length(gl2.translation({2, 0})) == 2);

  for (auto name : {"SL2", "SL3", "Sp4", "SO5", "GL3"}) {
    CAPTURE(name);
    IwahoriWeylGroup W(preset_root_datum(name));
    for (std::size_t s = 0; s < W.num_affine_simple(); ++s) CHECK(W.length(W.simple_reflection(s)) == 1);
    // Word length in the Coxeter part.
    for (const auto& [x, d] : cayley_distances(W, 6)) CHECK(W.length(x) == d);
    for (const auto& mu : dominant_coweights_in_box(W.roots(), 12, 3))
      CHECK(static_cast<std::int64_t>(W.length(W.translation(mu))) == pairing(W.roots().two_rho(), mu));
  }
}

TEST_CASE("subadditivity and the Demazure product") {
  IwahoriWeylGroup sl2(preset_root_datum("SL2"));
  auto s0 = sl2.simple_reflection(0), s1 = sl2.simple_reflection(1);
  CHECK(sl2.demazure_product(s0, s0) == s0);
  CHECK(sl2.demazure_product(sl2.multiply(s0, s1), sl2.multiply(s1, s0)) == sl2.multiply(sl2.multiply(s0, s1), s0));

  for (auto name : {"SL2", "GL2", "SL3", "Sp4"}) {
    CAPTURE(name);
    IwahoriWeylGroup W(preset_root_datum(name));
    auto elts = W.elements_up_to_length(3, 0);
    for (const auto& x : elts)
      for (const auto& y : elts) {
        const auto xy = W.multiply(x, y);
        const auto dem = W.demazure_product(x, y);
        CHECK(W.length(xy) <= W.length(x) + W.length(y));
        CHECK((W.length(xy) == W.length(x) + W.length(y)) == (dem == xy));
        // Oracle: the product is the unique longest element of {u v : u <= x, v <= y}.
        std::size_t best = 0;
        std::set<Elt> argmax;
        for (const auto& u : subword_products(W, x))
          for (const auto& v : subword_products(W, y)) {
            auto uv = W.multiply(u, v);
            const auto l = W.length(uv);
            if (l > best) argmax.clear(), best = l;
            if (l == best) argmax.insert(uv);
          }
        CHECK(argmax == std::set<Elt>{dem});
      }
  }
}

TEST_CASE("Bruhat order agrees with subword enumeration") {
  IwahoriWeylGroup sl2(preset_root_datum("SL2"));
  auto s0 = sl2.simple_reflection(0), s1 = sl2.simple_reflection(1);
  CHECK(sl2.bruhat_leq(s0, sl2.multiply(s0, s1)));
  CHECK_FALSE(sl2.bruhat_leq(s1, s0));

  for (auto name : {"SL2", "GL2", "SL3", "Sp4", "PGL2"}) {
    CAPTURE(name);
    IwahoriWeylGroup W(preset_root_datum(name));
    auto elts = W.elements_up_to_length(4);
    for (const auto& y : elts) {
      const auto below = subword_products(W, y);
      CHECK(W.bruhat_leq(W.omega_component(y), y));
      for (const auto& x : elts) CHECK(W.bruhat_leq(x, y) == (below.count(x) > 0));
    }
  }
}

TEST_CASE("Bruhat order on dominant translations is the dominance order") {
  for (auto name : {"GL2", "GL3", "Sp4", "SO5", "PGL3"}) {
    CAPTURE(name);
    IwahoriWeylGroup W(preset_root_datum(name));
    auto box = dominant_coweights_in_box(W.roots(), 6, 2);
    for (const auto& a : box)
      for (const auto& b : box)
        CHECK(W.bruhat_leq(W.translation(a), W.translation(b)) == dominance_leq(W.roots(), a, b));
  }
}

TEST_CASE("affine root count equals the length of minimal coset representatives") {
  IwahoriWeylGroup sl2(preset_root_datum("SL2"));
  CHECK(sl2.affine_root_count_for_cell(sl2.identity(), {}) == 0);
  CHECK(sl2.affine_root_count_for_cell(sl2.simple_reflection(0), sl2.hyperspecial()) == 1);
  CHECK_THROWS_AS(sl2.affine_root_count_for_cell(sl2.simple_reflection(1), sl2.hyperspecial()), SatakeError);

  for (auto name : {"SL2", "PGL3", "Sp4"}) {
    CAPTURE(name);
    IwahoriWeylGroup W(preset_root_datum(name));
    auto elts = W.elements_up_to_length(8);
    for (const auto& J : proper_facets(W))
      for (const auto& v : elts) {
        if (!(W.min_left_coset_rep(v, J) == v)) continue;
        CHECK(W.affine_root_count_for_cell(v, J) == W.length(v));
      }
  }
}

TEST_CASE("facets and parabolic subgroups") {
  IwahoriWeylGroup sl3(preset_root_datum("SL3"));
  CHECK(sl3.parabolic_elements({}).size() == 1);
  CHECK(sl3.parabolic_elements(sl3.hyperspecial()).size() == 6);
  CHECK(sl3.parabolic_elements({0, 1}).size() == 6);
  CHECK_THROWS_AS(sl3.parabolic_elements({0, 1, 2}), SatakeError);
  CHECK_THROWS_AS(parse_facet(sl3, "0,7"), SatakeError);
  CHECK(parse_facet(sl3, "hyperspecial") == FacetType{1, 2});
  CHECK(parse_facet(sl3, "iwahori").empty());
  CHECK(parse_facet(sl3, "2,0,2") == FacetType{0, 2});
}

TEST_CASE("double cosets") {
  IwahoriWeylGroup gl2(preset_root_datum("GL2"));
  const auto hs = gl2.hyperspecial();
  auto gr = gl2.double_coset_reps(hs, hs, 2);
  std::set<Coweight> labels;
  for (const auto& c : gr) labels.insert(gl2.roots().dominant_representative(c.rep.translation));
  for (Coweight mu : {Coweight{1, 1}, Coweight{1, 0}, Coweight{2, 0}}) CHECK(labels.count(mu));

  auto omega = gl2.omega_window();
  auto zero = gl2.double_coset_reps(hs, hs, 0);
  REQUIRE(zero.size() == omega.size());
  for (std::size_t i = 0; i < omega.size(); ++i) CHECK(zero[i].rep == omega[i]);

  auto iw = gl2.double_coset_reps({}, {}, 3);
  auto all = gl2.elements_up_to_length(3);
  CHECK(iw.size() == all.size());

  for (auto name : {"SL2", "GL2", "SL3", "Sp4"}) {
    CAPTURE(name);
    IwahoriWeylGroup W(preset_root_datum(name));
    const std::size_t bound = 4;
    auto elts = W.elements_up_to_length(bound);
    for (const auto& Jl : proper_facets(W))
      for (const auto& J : proper_facets(W)) {
        auto reps = W.double_coset_reps(Jl, J, bound);
        std::set<Elt> rep_set;
        for (const auto& c : reps) rep_set.insert(c.rep);
        CHECK(rep_set.size() == reps.size());
        const auto left = W.parabolic_elements(Jl), right = W.parabolic_elements(J);
        for (const auto& x : elts) {
          // Oracle: the whole double coset, explicitly.
          std::set<Elt> coset;
          for (const auto& u : left)
            for (const auto& v : right) coset.insert(W.multiply(W.multiply(u, x), v));
          std::size_t hits = 0;
          Elt shortest = x;
          for (const auto& z : coset) {
            hits += rep_set.count(z);
            if (W.length(z) < W.length(shortest)) shortest = z;
          }
          CHECK(hits == 1);
          CHECK(W.min_double_coset_rep(Jl, x, J) == shortest);
        }
      }
  }
}
