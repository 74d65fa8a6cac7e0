#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

#include "satake/root_datum.hpp"

using namespace satake;

namespace {

const char* kPresets[] = {"GL1", "GL2", "GL3", "GL4", "SL2", "SL3", "SL4", "PGL2", "PGL3",
                          "PGL4", "Sp2", "Sp4", "Sp6", "SO3", "SO5", "SO7", "T0", "T2", "Gm"};

// Independent dominance test: bounded search over nonnegative combinations
// of the positive coroots.
bool dominance_by_search(const RootSystem& rs, const Coweight& diff, int depth) {
  if (diff.is_zero()) return true;
  if (depth == 0) return false;
  for (auto p : rs.positive_roots())
    if (dominance_by_search(rs, diff - rs.coroot(p), depth - 1)) return true;
  return false;
}

}  // namespace

TEST_CASE("presets satisfy the root datum axioms") {
  for (auto name : kPresets) {
    CAPTURE(name);
    CHECK(validate_root_datum(preset_root_datum(name)).empty());
  }
}

TEST_CASE("Sp4 has the eight roots of type C2") {
  auto d = preset_root_datum("Sp4");
  REQUIRE(d.roots.size() == 8);
  std::set<Weight> expected{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}, {2, 0}, {-2, 0}, {0, 2}, {0, -2}};
  CHECK(std::set<Weight>(d.roots.begin(), d.roots.end()) == expected);
  RootSystem rs(d);
  CHECK(rs.positive_roots().size() == 4);
  CHECK(rs.weyl_group().size() == 8);
}

TEST_CASE("violated pairing axiom is reported") {
  BasedRootDatum d{"bad", 2, {{1, -1}, {-1, 1}}, {{2, -1}, {-2, 1}}, {0}};
  auto report = validate_root_datum(d);
  REQUIRE_FALSE(report.empty());
  CHECK(report.front().find("pairing axiom violated") != std::string::npos);
  CHECK_THROWS_AS(RootSystem{d}, SatakeError);
  CHECK_THROWS_AS(dual_root_datum(d), SatakeError);
}

TEST_CASE("mixed-sign root and non-closed root set are reported") {
  BasedRootDatum not_closed{"x", 1, {{2}}, {{1}}, {0}};
  CHECK_FALSE(validate_root_datum(not_closed).empty());
  auto gl3 = preset_root_datum("GL3");
  gl3.simple = {0, 1};  // e1-e2 and e1-e3: e2-e3 then has mixed signs
  CHECK_FALSE(validate_root_datum(gl3).empty());
}

TEST_CASE("dual root data") {
  for (int n = 1; n <= 4; ++n) {
    auto gl = preset_root_datum("GL" + std::to_string(n));
    CHECK(isomorphic(dual_root_datum(gl), gl));
  }
  for (int n = 2; n <= 4; ++n) {
    auto sl = preset_root_datum("SL" + std::to_string(n));
    auto pgl = preset_root_datum("PGL" + std::to_string(n));
    CHECK(isomorphic(dual_root_datum(sl), pgl));
    CHECK(isomorphic(dual_root_datum(pgl), sl));
  }
  CHECK(isomorphic(dual_root_datum(preset_root_datum("Sp4")), preset_root_datum("SO5")));
  CHECK_FALSE(isomorphic(preset_root_datum("Sp4"), preset_root_datum("SO5")));
  CHECK_FALSE(isomorphic(preset_root_datum("SL2"), preset_root_datum("PGL2")));
  CHECK_FALSE(isomorphic(preset_root_datum("GL2"), preset_root_datum("T2")));
  for (auto name : kPresets) {
    auto d = preset_root_datum(name);
    auto dd = dual_root_datum(dual_root_datum(d));
    CHECK(dd.roots == d.roots);
    CHECK(dd.coroots == d.coroots);
    CHECK(dd.simple == d.simple);
  }
}

TEST_CASE("two_rho") {
  CHECK(two_rho(preset_root_datum("T0")) == Weight{});
  CHECK(two_rho(preset_root_datum("SL2")) == Weight{2});  // alpha = 2 omega
  CHECK(two_rho(preset_root_datum("GL2")) == Weight{1, -1});
  CHECK(two_rho(preset_root_datum("Sp4")) == Weight{4, 2});
  for (auto name : kPresets) {
    RootSystem rs(preset_root_datum(name));
    for (std::size_t i = 0; i < rs.num_simple(); ++i) CHECK(pairing(rs.two_rho(), rs.simple_coroot(i)) == 2);
  }
}

TEST_CASE("dominance order") {
  RootSystem gl2(preset_root_datum("GL2"));
  CHECK(dominance_leq(gl2, Coweight{2, 0}, Coweight{2, 0}));
  CHECK(dominance_leq(gl2, Coweight{1, 1}, Coweight{2, 0}));
  CHECK_FALSE(dominance_leq(gl2, Coweight{2, 0}, Coweight{1, 1}));
  CHECK_FALSE(dominance_leq(gl2, Coweight{1, 0}, Coweight{1, 1}));
  CHECK_THROWS_AS(dominance_leq(gl2, Coweight{0, 1}, Coweight{1, 1}), SatakeError);
  CHECK_THROWS_AS(dominance_leq(gl2, Coweight{0}, Coweight{1, 1}), SatakeError);
}

TEST_CASE("dominance is a partial order agreeing with coroot search") {
  for (auto name : {"GL3", "Sp4", "SO5", "SL3", "PGL3"}) {
    CAPTURE(name);
    RootSystem rs(preset_root_datum(name));
    auto box = dominant_coweights_in_box(rs, 8, 3);
    REQUIRE(!box.empty());
    for (const auto& a : box)
      for (const auto& b : box) {
        const bool ab = dominance_leq(rs, a, b);
        CHECK(ab == dominance_by_search(rs, b - a, 8));
        if (ab && dominance_leq(rs, b, a)) CHECK(a == b);
        if (!ab) continue;
        for (const auto& c : box)
          if (dominance_leq(rs, b, c)) CHECK(dominance_leq(rs, a, c));
      }
  }
}

TEST_CASE("Weyl orbits") {
  RootSystem gl2(preset_root_datum("GL2"));
  auto r = weyl_orbit_dominant(gl2, Coweight{0, 1});
  CHECK(r.orbit == std::vector<Coweight>{{0, 1}, {1, 0}});
  CHECK(r.dominant == Coweight{1, 0});
  CHECK(weyl_orbit_dominant(gl2, Coweight{3, 1}).dominant == Coweight{3, 1});
  RootSystem sl2(preset_root_datum("SL2"));
  CHECK(weyl_orbit_dominant(sl2, Coweight{-1}).dominant == Coweight{1});

  for (auto name : {"GL3", "Sp4", "SO5", "SL3"}) {
    RootSystem rs(preset_root_datum(name));
    for (std::int64_t a = -2; a <= 2; ++a)
      for (std::int64_t b = -2; b <= 2; ++b) {
        Coweight v(rs.rank());
        v[0] = a;
        v[1] = b;
        auto o = weyl_orbit_dominant(rs, v);
        CHECK(std::count_if(o.orbit.begin(), o.orbit.end(), [&](auto& x) { return rs.is_dominant(x); }) == 1);
        CHECK(std::find(o.orbit.begin(), o.orbit.end(), o.dominant) != o.orbit.end());
      }
  }
}

TEST_CASE("Weyl group words are lexicographically least reduced words") {
  for (auto name : {"GL3", "GL4", "Sp4", "SO7"}) {
    CAPTURE(name);
    RootSystem rs(preset_root_datum(name));
    const auto& W = rs.weyl_group();
    const std::size_t s = rs.num_simple();
    // Oracle: enumerate all words by length then lexicographically; the first
    // word reaching each matrix is its least reduced word.
    std::map<IntMatrix, std::vector<int>> first;
    std::vector<std::vector<int>> level{{}};
    first.emplace(IntMatrix::identity(rs.rank()), std::vector<int>{});
    while (!level.empty()) {
      std::vector<std::vector<int>> next;
      for (const auto& w : level)
        for (std::size_t i = 0; i < s; ++i) {
          auto word = w;
          word.push_back(static_cast<int>(i));
          IntMatrix m = IntMatrix::identity(rs.rank());
          for (int g : word) m = m * W[W.generator(g)].on_y;
          if (first.emplace(m, word).second) next.push_back(word);
        }
      level = std::move(next);
    }
    REQUIRE(first.size() == W.size());
    for (const auto& e : W.elements()) CHECK(first.at(e.on_y) == e.word);
    for (std::size_t a = 0; a < W.size(); ++a) {
      CHECK(W.multiply(a, W.inverse(a)) == W.identity());
      // X and Y actions are contragredient
      CHECK(W[a].on_x.transpose() * W[a].on_y == IntMatrix::identity(rs.rank()));
    }
  }
}

TEST_CASE("root datum file") {
  auto path = std::filesystem::temp_directory_path() / "satake_gl2_test.datum";
  {
    std::ofstream out(path);
    out << "# GL2 written by hand\nrank: 2\nroots: (1,-1) (-1,1)\ncoroots: (1,-1), (-1,1)\nsimple: 0\n";
  }
  auto d = load_root_datum(path.string());
  CHECK(validate_root_datum(d).empty());
  CHECK(isomorphic(d, preset_root_datum("GL2")));
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_root_datum("E8x"), SatakeError);
  CHECK(load_root_datum("sp4").roots.size() == 8);
}
