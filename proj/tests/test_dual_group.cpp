#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "satake/dual_group.hpp"

using namespace satake;

namespace {

const char* kGroups[] = {"GL1", "GL2", "GL3", "SL2", "SL3", "PGL2", "PGL3", "Sp4", "SO5", "T2", "Gm"};

}  // namespace

TEST_CASE("extended dual of PGL2 is GL2 with d = det") {
  auto e = build_extended_dual(preset_root_datum("PGL2"));
  CHECK(e.extended.rank == 2);
  CHECK(std::set<Weight>(e.extended.roots.begin(), e.extended.roots.end()) == std::set<Weight>{{2, 1}, {-2, -1}});
  CHECK(isomorphic(e.extended, preset_root_datum("GL2")));
  auto rep = check_isogeny_and_d(e);
  CHECK(rep.ok());
  REQUIRE(rep.det_isomorphism);
  CHECK(rep.det_isomorphism->apply({1, 1}) == e.d_character);
  CHECK_FALSE(rep.epsilon_trivial);
  CHECK_FALSE(rep.splitting);
}

TEST_CASE("simply connected groups give a product") {
  for (auto name : {"SL2", "SL3"}) {
    CAPTURE(name);
    auto d = preset_root_datum(name);
    auto e = build_extended_dual(d);
    auto rep = check_isogeny_and_d(e);
    CHECK(rep.ok());
    CHECK(rep.epsilon_trivial);
    CHECK(rep.splitting);
    CHECK(isomorphic(e.extended, product_with_gm(dual_root_datum(d))));
  }
  auto sl2 = build_extended_dual(preset_root_datum("SL2"));
  CHECK(isomorphic(sl2.extended, product_with_gm(preset_root_datum("PGL2"))));
  CHECK_FALSE(isomorphic(build_extended_dual(preset_root_datum("PGL2")).extended,
                         product_with_gm(preset_root_datum("SL2"))));
}

TEST_CASE("torus") {
  auto e = build_extended_dual(preset_root_datum("Gm"));
  CHECK(e.extended.rank == 2);
  CHECK(e.extended.roots.empty());
  CHECK(isomorphic(e.extended, preset_root_datum("T2")));
  auto rep = check_isogeny_and_d(e);
  CHECK(rep.ok());
  CHECK(rep.d_pullback == LatticeVector{0, 2});
}

TEST_CASE("twists are heights of coroots") {
  for (auto name : kGroups) {
    CAPTURE(name);
    auto d = preset_root_datum(name);
    RootSystem rs(d);
    auto e = build_extended_dual(d);
    CHECK(e.extended.rank == d.rank + 1);
    CHECK(e.extended.roots.size() == d.roots.size());
    for (std::size_t i = 0; i < d.roots.size(); ++i) {
      auto c = *rs.simple_coroot_coordinates(rs.coroot(i));
      CHECK(e.root_twists[i] == std::accumulate(c.begin(), c.end(), std::int64_t{0}));
    }
    auto rep = check_isogeny_and_d(e);
    CHECK(rep.ok());
    for (const auto& f : rep.failures) MESSAGE(f);
    LatticeVector two(d.rank + 1);
    two[d.rank] = 2;
    CHECK(rep.d_pullback == two);
  }
}

TEST_CASE("pullback and isogeny are adjoint") {
  auto e = build_extended_dual(preset_root_datum("GL3"));
  for (std::int64_t a = -2; a <= 2; ++a)
    for (std::int64_t b = -2; b <= 2; ++b) {
      LatticeVector chi{a, b, 1, a - b};
      LatticeVector cochar{b, 1, -a, 3};
      CHECK(pairing(chi, e.isogeny_on_cocharacters(cochar)) == pairing(e.pullback_character(chi), cochar));
    }
}
