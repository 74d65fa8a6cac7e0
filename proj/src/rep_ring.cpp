#include "satake/rep_ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace satake {

CharacterElement multiply(const CharacterElement& a, const CharacterElement& b) {
  CharacterElement out;
  for (const auto& [x, m] : a)
    for (const auto& [y, n] : b) {
      auto& slot = out[x + y];
      slot += m * n;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

RepElement add(RepElement a, const RepElement& b, std::int64_t scale) {
  for (const auto& [k, v] : b) {
    auto& slot = a[k];
    slot += scale * v;
    if (slot == 0) a.erase(k);
  }
  return a;
}

std::string to_string(const RepElement& r) {
  if (r.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : r) {
    auto k = c;
    if (k < 0) {
      os << (first ? "-" : " - ");
      k = -k;
    } else if (!first) {
      os << " + ";
    }
    first = false;
    if (k != 1) os << k << '*';
    os << "V" << key.first.str() << '(' << key.second << ')';
  }
  return os.str();
}

DualRepresentations::DualRepresentations(const BasedRootDatum& d)
    : DualRepresentations(std::make_shared<const RootSystem>(d)) {}

DualRepresentations::DualRepresentations(std::shared_ptr<const RootSystem> rs)
    : rs_(std::move(rs)), ext_(build_extended_dual(rs_->datum())) {
  const auto& W = rs_->weyl_group();
  for (std::size_t w = 0; w < W.size(); ++w)
    if (W[w].length() > W[longest_].length()) longest_ = w;
}

std::int64_t DualRepresentations::rho(const Coweight& y) const { return ext_.rho_pairing(y); }

void DualRepresentations::require_dominant(const Coweight& mu) const {
  if (mu.size() != rs_->rank()) throw SatakeError("rank_mismatch", "coweight " + mu.str() + " has the wrong rank");
  if (!rs_->is_dominant(mu)) throw SatakeError("not_dominant", mu.str() + " is not dominant");
}

LatticeVector DualRepresentations::reflect(std::size_t i, const LatticeVector& weight) const {
  const auto r = rs_->rank();
  const auto& a = rs_->simple_root(i);
  const auto& a_check = rs_->simple_coroot(i);
  Coweight y(std::vector<std::int64_t>(weight.begin(), weight.begin() + static_cast<std::ptrdiff_t>(r)));
  const auto p = pairing(a, y);
  Coweight sy = y - p * a_check;
  if (weight.size() == r) return sy;
  return extend(sy, weight[r] - p * rho(a_check));
}

std::vector<Coweight> DualRepresentations::dominant_weights_below(const Coweight& mu) const {
  require_dominant(mu);
  const auto& R = *rs_;
  const auto lowest = R.weyl_group()[longest_].on_y.apply(mu);
  const auto box = *R.simple_coroot_coordinates(mu - lowest);
  std::vector<Coweight> out;
  std::vector<std::int64_t> k(box.size(), 0);
  while (true) {
    Coweight nu = mu;
    for (std::size_t i = 0; i < k.size(); ++i) nu -= k[i] * R.simple_coroot(i);
    if (R.is_dominant(nu)) out.push_back(nu);
    std::size_t i = 0;
    while (i < k.size() && k[i] == box[i]) k[i++] = 0;
    if (i == k.size()) break;
    ++k[i];
  }
  std::sort(out.begin(), out.end(), [&](const Coweight& a, const Coweight& b) {
    const auto ha = height(a), hb = height(b);
    return ha != hb ? ha > hb : a > b;
  });
  return out;
}

// Freudenthal's formula for the invariant form B(x, y) = sum over all roots a
// of <a, x><a, y>, in the doubled normalization with 2rho^ integral:
//   B(mu - nu, mu + nu + 2rho^) m(nu) = 2 sum_{a > 0} sum_{k >= 1} B(nu + k a^vee, a^vee) m(nu + k a^vee).
const std::map<Coweight, std::int64_t>& DualRepresentations::dominant_multiplicities(const Coweight& mu) const {
  {
    std::lock_guard lock(mu_);
    auto it = mult_cache_.find(mu);
    if (it != mult_cache_.end()) return it->second;
  }
  const auto& R = *rs_;
  auto form = [&](const Coweight& x, const Coweight& y) {
    std::int64_t s = 0;
    for (std::size_t a = 0; a < R.num_roots(); ++a) s += pairing(R.root(a), x) * pairing(R.root(a), y);
    return s;
  };
  std::map<Coweight, std::int64_t> m;
  auto lookup = [&](const Coweight& x) -> std::int64_t {
    auto it = m.find(R.dominant_representative(x));
    return it == m.end() ? 0 : it->second;
  };
  const auto weights = dominant_weights_below(mu);
  for (const auto& nu : weights) {
    if (nu == mu) {
      m[nu] = 1;
      continue;
    }
    std::int64_t num = 0;
    for (auto p : R.positive_roots()) {
      const auto& a_check = R.coroot(p);
      for (std::int64_t k = 1;; ++k) {
        const Coweight x = nu + k * a_check;
        const auto mx = lookup(x);
        if (mx == 0) break;
        num += form(x, a_check) * mx;
      }
    }
    num *= 2;
    const auto den = form(mu - nu, mu + nu + R.two_rho_check());
    if (den <= 0 || num % den != 0)
      throw SatakeError("internal", "Freudenthal recursion is not integral at " + nu.str());
    if (num != 0) m[nu] = num / den;
  }
  std::lock_guard lock(mu_);
  return mult_cache_.try_emplace(mu, std::move(m)).first->second;
}

std::int64_t DualRepresentations::multiplicity(const Coweight& mu, const Coweight& nu) const {
  const auto& m = dominant_multiplicities(mu);
  auto it = m.find(rs_->dominant_representative(nu));
  return it == m.end() ? 0 : it->second;
}

CharacterElement DualRepresentations::weyl_character(const Coweight& mu) const {
  CharacterElement c;
  for (const auto& [nu, k] : dominant_multiplicities(mu))
    for (const auto& x : weyl_orbit_dominant(*rs_, nu).orbit) c[x] = k;
  return c;
}

CharacterElement DualRepresentations::extended_character(const Coweight& mu, std::int64_t n) const {
  CharacterElement c;
  for (const auto& [nu, k] : weyl_character(mu)) c[extend(nu, n - rho(mu - nu))] = k;
  return c;
}

CharacterElement DualRepresentations::character(const RepElement& r) const {
  CharacterElement c;
  for (const auto& [key, k] : r)
    for (const auto& [x, m] : extended_character(key.first, key.second)) c[x] += k * m;
  std::erase_if(c, [](const auto& kv) { return kv.second == 0; });
  return c;
}

std::int64_t DualRepresentations::weyl_dimension(const Coweight& mu) const {
  require_dominant(mu);
  const auto& R = *rs_;
  const Coweight shifted = 2 * mu + R.two_rho_check();
  Rational dim(1);
  for (auto p : R.positive_roots()) dim *= Rational(pairing(R.root(p), shifted), pairing(R.root(p), R.two_rho_check()));
  if (dim.denominator() != 1) throw SatakeError("internal", "Weyl dimension is not integral");
  return dim.numerator();
}

RepElement DualRepresentations::decompose_character(const CharacterElement& c) const {
  const std::size_t r = rs_->rank();
  for (const auto& [x, k] : c) {
    if (x.size() != r && x.size() != r + 1)
      throw SatakeError("rank_mismatch", "weight " + x.str() + " has the wrong rank");
    for (std::size_t i = 0; i < rs_->num_simple(); ++i) {
      auto it = c.find(reflect(i, x));
      if (it == c.end() || it->second != k)
        throw SatakeError("not_invariant", "character is not W0-invariant at " + x.str());
    }
  }
  CharacterElement rest = c;
  RepElement out;
  auto y_part = [&](const LatticeVector& x) {
    return Coweight(std::vector<std::int64_t>(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(r)));
  };
  while (!rest.empty()) {
    auto top = rest.begin();
    for (auto it = rest.begin(); it != rest.end(); ++it) {
      const auto h = height(y_part(it->first)), ht = height(y_part(top->first));
      if (h > ht || (h == ht && it->first > top->first)) top = it;
    }
    const auto x = top->first;
    const auto k = top->second;
    const auto nu = y_part(x);
    if (!rs_->is_dominant(nu)) throw SatakeError("not_invariant", "leading weight " + x.str() + " is not dominant");
    const std::int64_t n = x.size() == r ? 0 : x[r];
    const auto chi = x.size() == r ? weyl_character(nu) : extended_character(nu, n);
    for (const auto& [w, m] : chi) {
      auto& slot = rest[w];
      slot -= k * m;
      if (slot == 0) rest.erase(w);
    }
    out[{nu, n}] += k;
  }
  return out;
}

const std::map<Coweight, std::int64_t>& DualRepresentations::tensor_multiplicities(const Coweight& mu,
                                                                                   const Coweight& lambda) const {
  require_dominant(mu);
  require_dominant(lambda);
  const auto key = std::make_pair(mu, lambda);
  {
    std::lock_guard lock(mu_);
    auto it = tensor_cache_.find(key);
    if (it != tensor_cache_.end()) return it->second;
  }
  const auto& R = *rs_;
  std::map<Coweight, std::int64_t> out;
  for (const auto& [nu, m] : weyl_character(lambda)) {
    Coweight x = 2 * (mu + nu) + R.two_rho_check();
    std::int64_t sign = 1;
    for (bool moved = true; moved;) {
      moved = false;
      for (std::size_t i = 0; i < R.num_simple(); ++i)
        if (pairing(R.simple_root(i), x) < 0) {
          x = R.reflect_coweight(R.datum().simple[i], x);
          sign = -sign;
          moved = true;
        }
    }
    bool regular = true;
    for (std::size_t i = 0; i < R.num_simple(); ++i)
      if (pairing(R.simple_root(i), x) == 0) regular = false;
    if (!regular) continue;
    Coweight top = x - R.two_rho_check();
    for (std::size_t i = 0; i < top.size(); ++i) top[i] /= 2;
    auto& slot = out[top];
    slot += sign * m;
    if (slot == 0) out.erase(top);
  }
  std::lock_guard lock(mu_);
  return tensor_cache_.try_emplace(key, std::move(out)).first->second;
}

RepElement DualRepresentations::tensor_decompose(const RepElement& a, const RepElement& b) const {
  RepElement out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      const auto& [mu, m] = ka;
      const auto& [lambda, n] = kb;
      for (const auto& [nu, N] : tensor_multiplicities(mu, lambda)) {
        const auto twist = m + n - rho(mu + lambda - nu);
        auto& slot = out[{nu, twist}];
        slot += ca * cb * N;
        if (slot == 0) out.erase({nu, twist});
      }
    }
  return out;
}

RestrictionReport DualRepresentations::restriction_check(const Coweight& mu, std::int64_t n) const {
  require_dominant(mu);
  const std::size_t r = rs_->rank();
  RestrictionReport rep;
  std::set<std::int64_t> gm;
  CharacterElement pulled;
  for (const auto& [x, k] : extended_character(mu, n)) {
    const auto p = ext_.pullback_character(x);
    gm.insert(p[r]);
    pulled[Coweight(std::vector<std::int64_t>(p.begin(), p.end() - 1))] += k;
  }
  rep.uniform = gm.size() == 1;
  if (!rep.uniform) rep.failures.push_back("G_m acts on V" + mu.str() + "(" + std::to_string(n) + ") by several weights");
  if (pulled != weyl_character(mu)) rep.failures.push_back("restriction to G^ is not the character of V" + mu.str());
  if (!gm.empty()) {
    rep.gm_weight = *gm.begin();
    rep.d_exponent = Rational(rep.gm_weight, 2);
  }
  return rep;
}

}  // namespace satake
