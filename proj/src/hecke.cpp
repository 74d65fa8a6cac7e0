#include "satake/hecke.hpp"

#include <sstream>

#include "satake/q_analog.hpp"

namespace satake {

namespace {

void accumulate(std::map<Coweight, LaurentPolynomial>& h, const Coweight& mu, const LaurentPolynomial& p) {
  auto& slot = h[mu];
  slot += p;
  if (slot.is_zero()) h.erase(mu);
}

}  // namespace

std::string to_string(const std::map<Coweight, LaurentPolynomial>& h, const std::string& basis,
                      const std::string& var) {
  if (h.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = h.rbegin(); it != h.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << '(' << it->second.str(var) << ")*" << basis << it->first.str();
  }
  return os.str();
}

SphericalHecke::SphericalHecke(const BasedRootDatum& d)
    : SphericalHecke(std::make_shared<const DualRepresentations>(d)) {}

SphericalHecke::SphericalHecke(std::shared_ptr<const DualRepresentations> reps) : reps_(std::move(reps)) {}

void SphericalHecke::check_support(const std::map<Coweight, LaurentPolynomial>& h) const {
  for (const auto& [mu, p] : h) {
    if (mu.size() != roots().rank()) throw SatakeError("rank_mismatch", "coweight " + mu.str() + " has the wrong rank");
    if (!roots().is_dominant(mu)) throw SatakeError("not_dominant", mu.str() + " is not dominant");
  }
}

HeckeElement SphericalHecke::basis(const Coweight& mu) const {
  HeckeElement h{{mu, 1}};
  check_support(h);
  return h;
}

const HeckeElement& SphericalHecke::ic_function(const Coweight& mu) const {
  {
    std::lock_guard lock(mu_);
    auto it = ic_cache_.find(mu);
    if (it != ic_cache_.end()) return it->second;
  }
  HeckeElement f;
  for (const auto& lambda : reps_->dominant_weights_below(mu)) {
    const auto m = lusztig_q_analog(roots(), mu, lambda);
    // q -> q^-1 is v -> v^-2; q^{<rho, mu - lambda>} = v^{<2rho, mu - lambda>}.
    accumulate(f, lambda, m.substitute_power(-2).shift(reps_->height(mu - lambda)));
  }
  std::lock_guard lock(mu_);
  return ic_cache_.try_emplace(mu, std::move(f)).first->second;
}

SatakeImage SphericalHecke::satake_transform(const HeckeElement& h) const {
  check_support(h);
  HeckeElement rest = h;
  SatakeImage out;
  while (!rest.empty()) {
    auto top = rest.begin();
    for (auto it = rest.begin(); it != rest.end(); ++it) {
      const auto a = reps_->height(it->first), b = reps_->height(top->first);
      if (a > b || (a == b && it->first > top->first)) top = it;
    }
    const Coweight mu = top->first;
    const LaurentPolynomial p = top->second;
    for (const auto& [lambda, f] : ic_function(mu)) accumulate(rest, lambda, -(p * f));
    accumulate(out, mu, p.shift(reps_->height(mu)));
  }
  return out;
}

HeckeElement SphericalHecke::satake_inverse(const SatakeImage& s) const {
  check_support(s);
  HeckeElement out;
  for (const auto& [mu, p] : s) {
    const auto scaled = p.shift(-reps_->height(mu));
    for (const auto& [lambda, f] : ic_function(mu)) accumulate(out, lambda, scaled * f);
  }
  return out;
}

SatakeImage SphericalHecke::multiply_images(const SatakeImage& a, const SatakeImage& b) const {
  check_support(a);
  check_support(b);
  SatakeImage out;
  for (const auto& [mu, p] : a)
    for (const auto& [lambda, r] : b) {
      const auto pr = p * r;
      for (const auto& [nu, N] : reps_->tensor_multiplicities(mu, lambda)) accumulate(out, nu, pr * N);
    }
  return out;
}

HeckeElement SphericalHecke::multiply(const HeckeElement& a, const HeckeElement& b) const {
  return satake_inverse(multiply_images(satake_transform(a), satake_transform(b)));
}

}  // namespace satake
