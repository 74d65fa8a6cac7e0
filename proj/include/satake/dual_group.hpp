#pragma once

#include <optional>
#include <string>
#include <vector>

#include "satake/root_datum.hpp"

namespace satake {

/// Extended dual group G^_1 = G^ x|^{Ad rho} G_m of a root datum of G.
///
/// Characters of T^_1 = T^ x G_m are written in Y (+) Z, where the last
/// coordinate counts Tate-twist units: V_mu(n) has highest weight (mu, n) and
/// d = (0, 1). In these coordinates the root of G^_1 over a coroot a^vee of G
/// is (a^vee, <rho, a^vee>) and its coroot is (a, 0).
struct ExtendedDualDatum {
  BasedRootDatum source;    // G
  BasedRootDatum base;      // G^
  BasedRootDatum extended;  // G^_1, rank = rank(G) + 1
  Weight two_rho;           // 2rho of G; the twist Ad_rho and epsilon = (2rho)(-1)
  std::vector<std::int64_t> root_twists;  // G_m component of each extended root
  LatticeVector d_character;              // (0, ..., 0, 1)

  /// G^ x G_m -> G^_1, (g, t) -> (g * 2rho(t)^-1, t^2), on cocharacters X (+) Z.
  LatticeVector isogeny_on_cocharacters(const LatticeVector& x_k) const;
  /// Pullback of characters Y (+) Z along the isogeny: (y, t) -> (y, 2t - <y, 2rho>).
  LatticeVector pullback_character(const LatticeVector& y_t) const;
  /// <rho, y>, half of <2rho, y>; throws if not integral.
  std::int64_t rho_pairing(const Coweight& y) const;
};

ExtendedDualDatum build_extended_dual(const BasedRootDatum& d);

/// d x G_m: one more coordinate, roots and coroots padded with 0.
BasedRootDatum product_with_gm(const BasedRootDatum& d);

struct IsogenyReport {
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  LatticeVector d_pullback;
  bool epsilon_trivial = false;       // <2rho, .> even on Y
  std::optional<IntMatrix> splitting;  // G^_1 -> G^ x G_m when epsilon is trivial
  std::optional<IntMatrix> det_isomorphism;  // GL2 -> G^_1 sending det to d, when G^_1 is GL2
  bool ok() const { return failures.empty(); }
};

IsogenyReport check_isogeny_and_d(const ExtendedDualDatum& e);

}  // namespace satake
