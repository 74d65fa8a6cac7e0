#include "satake/k0_motives.hpp"

#include "satake/q_analog.hpp"

namespace satake {

MotivicSatake::MotivicSatake(const BasedRootDatum& d) : MotivicSatake(std::make_shared<const SphericalHecke>(d)) {}

MotivicSatake::MotivicSatake(std::shared_ptr<const SphericalHecke> hecke) : hecke_(std::move(hecke)) {}

K0Element MotivicSatake::basis(const Coweight& mu, std::int64_t n) const {
  hecke_->basis(mu);
  return {{{mu, n}, 1}};
}

K0Element MotivicSatake::convolve(const K0Element& a, const K0Element& b) const {
  return reps().tensor_decompose(a, b);
}

K0Element MotivicSatake::tate_twist(const K0Element& a, std::int64_t k) {
  K0Element out;
  for (const auto& [key, c] : a) out[{key.first, key.second + k}] = c;
  return out;
}

HeckeElement MotivicSatake::trace_frobenius(const K0Element& a) const {
  HeckeElement out;
  for (const auto& [key, c] : a) {
    const auto& [mu, n] = key;
    for (const auto& [lambda, f] : hecke_->ic_function(mu)) {
      auto& slot = out[lambda];
      slot += f.shift(-2 * n) * c;
      if (slot.is_zero()) out.erase(lambda);
    }
  }
  return out;
}

RepElement MotivicSatake::satake_bridge(const K0Element& a) const { return a; }

K0Element MotivicSatake::bridge_inverse(const RepElement& r) const { return r; }

HeckeElement MotivicSatake::quotient_specialize(const RepElement& r) const {
  const std::size_t rank = reps().roots().rank();
  // Slice the specialized character by the power of v; each slice is a
  // W0-invariant character of G^.
  std::map<std::int64_t, CharacterElement> slices;
  for (const auto& [x, k] : reps().character(r)) {
    const Coweight nu(std::vector<std::int64_t>(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(rank)));
    const auto e = reps().height(nu) - 2 * x[rank];
    slices[e][nu] += k;
  }
  SatakeImage image;
  for (auto& [e, chi] : slices) {
    std::erase_if(chi, [](const auto& kv) { return kv.second == 0; });
    for (const auto& [key, m] : reps().decompose_character(chi)) {
      auto& slot = image[key.first];
      slot += LaurentPolynomial::monomial(e, m);
      if (slot.is_zero()) image.erase(key.first);
    }
  }
  return hecke_->satake_inverse(image);
}

LaurentPolynomial MotivicSatake::graded_fiber_dimension(const Coweight& mu) const {
  LaurentPolynomial total;
  for (const auto& lambda : reps().dominant_weights_below(mu)) {
    const auto orbit = static_cast<std::int64_t>(weyl_orbit_dominant(reps().roots(), lambda).orbit.size());
    total += lusztig_q_analog(reps().roots(), mu, lambda) * orbit;
  }
  return total;
}

std::int64_t MotivicSatake::fiber_dimension(const Coweight& mu) const {
  const auto v = graded_fiber_dimension(mu).evaluate(1);
  return v.numerator();
}

}  // namespace satake
