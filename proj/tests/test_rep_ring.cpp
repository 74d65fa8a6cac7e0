#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "satake/rep_ring.hpp"

using namespace satake;

namespace {

// Kostant partition function by recursion over the positive coroots in a
// fixed order: ways to write beta as a sum of positive coroots.
std::int64_t partitions(const RootSystem& R, const Coweight& beta, std::size_t from) {
  if (beta.is_zero()) return 1;
  auto c = R.simple_coroot_coordinates(beta);
  if (!c || std::any_of(c->begin(), c->end(), [](std::int64_t x) { return x < 0; })) return 0;
  std::int64_t total = 0;
  const auto& pos = R.positive_roots();
  for (std::size_t i = from; i < pos.size(); ++i) total += partitions(R, beta - R.coroot(pos[i]), i);
  return total;
}

// Kostant's multiplicity formula.
std::int64_t kostant_multiplicity(const RootSystem& R, const Coweight& mu, const Coweight& nu) {
  std::int64_t m = 0;
  const auto& W = R.weyl_group();
  for (const auto& w : W.elements()) {
    Coweight x = w.on_y.apply(2 * mu + R.two_rho_check()) - 2 * nu - R.two_rho_check();
    if (std::any_of(x.begin(), x.end(), [](std::int64_t v) { return v % 2 != 0; })) continue;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] /= 2;
    const std::int64_t sign = w.length() % 2 ? -1 : 1;
    m += sign * partitions(R, x, 0);
  }
  return m;
}

RepElement V(const Coweight& mu, std::int64_t n = 0) { return {{{mu, n}, 1}}; }

}  // namespace

TEST_CASE("characters of GL2") {
  DualRepresentations gl2(preset_root_datum("GL2"));
  CHECK(gl2.weyl_character({0, 0}) == CharacterElement{{{0, 0}, 1}});
  CHECK(gl2.weyl_character({1, 0}) == CharacterElement{{{1, 0}, 1}, {{0, 1}, 1}});
  CHECK(gl2.weyl_character({2, 0}) == CharacterElement{{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}});
  CHECK(gl2.weyl_dimension({2, 0}) == 3);
  CHECK(gl2.weyl_dimension({0, 0}) == 1);
  CHECK(DualRepresentations(preset_root_datum("GL3")).weyl_dimension({1, 0, 0}) == 3);
  CHECK_THROWS_AS(gl2.weyl_character({0, 1}), SatakeError);
  CHECK_THROWS_AS(gl2.weyl_dimension({0, 1}), SatakeError);
  CHECK(gl2.extended_character({1, 0}, 0) == CharacterElement{{{1, 0, 0}, 1}, {{0, 1, -1}, 1}});
}

TEST_CASE("Freudenthal against Kostant's formula and the Weyl dimension") {
  for (auto name : {"GL2", "GL3", "Sp4", "SO5", "SL3", "PGL3", "GL1"}) {
    CAPTURE(name);
    DualRepresentations rep(preset_root_datum(name));
    const auto& R = rep.roots();
    for (const auto& mu : dominant_coweights_in_box(R, 10, 4)) {
      CAPTURE(mu);
      auto chi = rep.weyl_character(mu);
      std::int64_t total = 0;
      for (const auto& [x, k] : chi) {
        total += k;
        CHECK(k > 0);
      }
      CHECK(total == rep.weyl_dimension(mu));
      CHECK(chi.at(mu) == 1);
      for (const auto& nu : rep.dominant_weights_below(mu))
        CHECK(rep.multiplicity(mu, nu) == kostant_multiplicity(R, mu, nu));
      for (const auto& [x, k] : chi)
        for (std::size_t i = 0; i < R.num_simple(); ++i) CHECK(chi.at(rep.reflect(i, x)) == k);
    }
  }
}

TEST_CASE("decomposition of characters") {
  DualRepresentations gl2(preset_root_datum("GL2"));
  CharacterElement c{{{2, 0}, 1}, {{0, 2}, 1}};
  CHECK(gl2.decompose_character(c) == RepElement{{{{2, 0}, 0}, 1}, {{{1, 1}, 0}, -1}});
  CHECK(gl2.decompose_character({}).empty());
  CHECK_THROWS_AS(gl2.decompose_character({{{1, 0}, 1}}), SatakeError);

  for (auto name : {"GL2", "GL3", "Sp4", "PGL2"}) {
    DualRepresentations rep(preset_root_datum(name));
    auto box = dominant_coweights_in_box(rep.roots(), 6, 2);
    RepElement mixed;
    std::int64_t n = -2;
    for (const auto& mu : box) {
      CHECK(rep.decompose_character(rep.extended_character(mu, n)) == V(mu, n));
      mixed[{mu, n}] = n;
      n = n == 2 ? -2 : n + 1;
    }
    std::erase_if(mixed, [](const auto& kv) { return kv.second == 0; });
    CHECK(rep.decompose_character(rep.character(mixed)) == mixed);
  }
}

TEST_CASE("tensor products") {
  DualRepresentations gl2(preset_root_datum("GL2"));
  CHECK(gl2.tensor_decompose(V({1, 0}), V({1, 0})) == RepElement{{{{2, 0}, 0}, 1}, {{{1, 1}, -1}, 1}});
  CHECK(gl2.tensor_decompose(V({2, 1}, 3), V({0, 0})) == V({2, 1}, 3));
  CHECK(gl2.tensor_decompose(V({2, 0}, 1), V({0, 0}, -3)) == V({2, 0}, -2));

  for (auto name : {"GL2", "GL3", "Sp4", "SO5", "PGL2", "SL2"}) {
    CAPTURE(name);
    DualRepresentations rep(preset_root_datum(name));
    const auto& R = rep.roots();
    auto box = dominant_coweights_in_box(R, 6, 2);
    for (const auto& mu : box)
      for (const auto& la : box) {
        auto t = rep.tensor_decompose(V(mu, 1), V(la, -1));
        CHECK(rep.character(t) == multiply(rep.extended_character(mu, 1), rep.extended_character(la, -1)));
        CHECK(t.at({mu + la, 0}) == 1);
        for (const auto& [key, N] : t) {
          CHECK(N > 0);
          CHECK(dominance_leq(R, key.first, mu + la));
          CHECK(key.second <= 0);
          CHECK(rep.height(mu + la - key.first) == -2 * key.second);
        }
        const auto& plain = rep.tensor_multiplicities(mu, la);
        CHECK(rep.decompose_character(multiply(rep.weyl_character(mu), rep.weyl_character(la))) ==
              [&] {
                RepElement r;
                for (const auto& [nu, N] : plain) r[{nu, 0}] = N;
                return r;
              }());
      }
  }
}

TEST_CASE("restriction along the isogeny") {
  for (auto name : {"PGL2", "SL2", "GL2", "Sp4"}) {
    CAPTURE(name);
    DualRepresentations rep(preset_root_datum(name));
    for (const auto& mu : dominant_coweights_in_box(rep.roots(), 6, 3))
      for (std::int64_t n = -2; n <= 2; ++n) {
        auto r = rep.restriction_check(mu, n);
        CHECK(r.uniform);
        CHECK(r.failures.empty());
        CHECK(r.gm_weight == 2 * n - rep.height(mu));
      }
    const Coweight zero(rep.roots().rank());
    for (std::int64_t n = -2; n <= 2; ++n) CHECK(rep.restriction_check(zero, n).gm_weight == 2 * n);
    CHECK(rep.restriction_check(zero, 0).gm_weight == 0);
  }
}
