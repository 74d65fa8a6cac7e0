#include "satake/dual_group.hpp"

#include <algorithm>

namespace satake {

LatticeVector ExtendedDualDatum::isogeny_on_cocharacters(const LatticeVector& x_k) const {
  const std::size_t r = source.rank;
  if (x_k.size() != r + 1) throw SatakeError("rank_mismatch", "cocharacter of the wrong rank");
  const auto k = x_k[r];
  LatticeVector out(r + 1);
  for (std::size_t i = 0; i < r; ++i) out[i] = x_k[i] - k * two_rho[i];
  out[r] = 2 * k;
  return out;
}

LatticeVector ExtendedDualDatum::pullback_character(const LatticeVector& y_t) const {
  const std::size_t r = source.rank;
  if (y_t.size() != r + 1) throw SatakeError("rank_mismatch", "character of the wrong rank");
  Coweight y(std::vector<std::int64_t>(y_t.begin(), y_t.end() - 1));
  return extend(y, 2 * y_t[r] - pairing(two_rho, y));
}

std::int64_t ExtendedDualDatum::rho_pairing(const Coweight& y) const {
  const auto p = pairing(two_rho, y);
  if (p % 2 != 0) throw SatakeError("half_integral", "<rho, " + y.str() + "> is not an integer");
  return p / 2;
}

BasedRootDatum product_with_gm(const BasedRootDatum& d) {
  BasedRootDatum p{d.name + "xGm", d.rank + 1, {}, {}, d.simple};
  for (const auto& a : d.roots) p.roots.push_back(extend(a, 0));
  for (const auto& a : d.coroots) p.coroots.push_back(extend(a, 0));
  return p;
}

ExtendedDualDatum build_extended_dual(const BasedRootDatum& d) {
  RootSystem rs(d);
  ExtendedDualDatum e;
  e.source = d;
  e.base = dual_root_datum(d);
  e.two_rho = rs.two_rho();
  e.extended = {"G1(" + d.name + ")", d.rank + 1, {}, {}, e.base.simple};
  for (std::size_t i = 0; i < e.base.roots.size(); ++i) {
    const auto twist = e.rho_pairing(e.base.roots[i]);
    e.root_twists.push_back(twist);
    e.extended.roots.push_back(extend(e.base.roots[i], twist));
    e.extended.coroots.push_back(extend(e.base.coroots[i], 0));
  }
  e.d_character = LatticeVector(d.rank + 1);
  e.d_character[d.rank] = 1;
  return e;
}

IsogenyReport check_isogeny_and_d(const ExtendedDualDatum& e) {
  IsogenyReport rep;
  const std::size_t r = e.source.rank;
  auto fail = [&](std::string s) { rep.failures.push_back(std::move(s)); };

  auto valid = validate_root_datum(e.extended);
  for (auto& v : valid) fail("extended datum: " + v);
  if (!valid.empty()) return rep;

  RootSystem ext(e.extended);
  for (std::size_t i = 0; i < e.base.roots.size(); ++i) {
    Coweight y(std::vector<std::int64_t>(e.extended.roots[i].begin(), e.extended.roots[i].end() - 1));
    if (y != e.base.roots[i]) fail("extended root " + e.extended.roots[i].str() + " does not lie over its root");
  }
  for (std::size_t k = 0; k < e.base.simple.size(); ++k)
    if (e.root_twists[e.base.simple[k]] != 1) fail("simple coroot with twist other than 1");

  // (epsilon, -1) = exp(pi i (2rho, 1)); it lies in the kernel iff the image of
  // (2rho, 1) is divisible by 2, and is nontrivial since 1 is odd.
  const auto image = e.isogeny_on_cocharacters(extend(e.two_rho, 1));
  if (std::any_of(image.begin(), image.end(), [](std::int64_t c) { return c % 2 != 0; }))
    fail("(epsilon,-1) is not killed by the isogeny: image " + image.str());
  for (std::size_t i = 0; i <= r; ++i) {
    LatticeVector chi(r + 1);
    chi[i] = 1;
    const auto pb = e.pullback_character(chi);
    Coweight y(std::vector<std::int64_t>(pb.begin(), pb.end() - 1));
    if ((pairing(e.two_rho, y) + pb[r]) % 2 != 0) fail("character " + chi.str() + " is nontrivial on (epsilon,-1)");
  }

  rep.d_pullback = e.pullback_character(e.d_character);
  LatticeVector twice_gen(r + 1);
  twice_gen[r] = 2;
  if (rep.d_pullback != twice_gen) fail("d pulls back to " + rep.d_pullback.str() + ", not twice the G_m generator");
  for (const auto& c : e.extended.coroots)
    if (pairing(e.d_character, c) != 0) fail("d is not a character of G^_1");

  // Extended Weyl group fixes 0 (+) Z pointwise.
  for (const auto& w : ext.weyl_group().elements())
    if (w.on_x.apply(e.d_character) != e.d_character) fail("Weyl group moves the Z-summand");

  rep.epsilon_trivial = true;
  for (std::size_t i = 0; i < r; ++i)
    if (e.two_rho[i] % 2 != 0) rep.epsilon_trivial = false;
  rep.notes.push_back(rep.epsilon_trivial ? "epsilon = (2rho)(-1) is trivial; extension splits"
                                          : "epsilon = (2rho)(-1) is nontrivial");
  if (rep.epsilon_trivial) {
    // (y, t) -> (y, t - <rho, y>)
    IntMatrix m = IntMatrix::identity(r + 1);
    for (std::size_t j = 0; j < r; ++j) m(r, j) = -e.two_rho[j] / 2;
    if (!is_based_isomorphism(m, e.extended, product_with_gm(e.base)))
      fail("splitting map is not a based isomorphism");
    rep.splitting = m;
  }

  auto gl2 = preset_root_datum("GL2");
  if (e.extended.rank == 2 && isomorphic(gl2, e.extended)) {
    const LatticeVector det{1, 1};
    for (const auto& m : find_isomorphisms(gl2, e.extended, 64))
      if (m.apply(det) == e.d_character) {
        rep.det_isomorphism = m;
        break;
      }
    if (!rep.det_isomorphism) fail("no isomorphism GL2 -> G^_1 carries det to d");
    else rep.notes.push_back("G^_1 = GL2 with d = det");
  }
  return rep;
}

}  // namespace satake
