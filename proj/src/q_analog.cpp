#include "satake/q_analog.hpp"

#include <algorithm>

namespace satake {

LaurentPolynomial q_kostant_partition(const RootSystem& rs, const Coweight& beta) {
  if (beta.size() != rs.rank()) throw SatakeError("rank_mismatch", "coweight " + beta.str() + " has the wrong rank");
  if (beta.is_zero()) return 1;
  const auto c = rs.simple_coroot_coordinates(beta);
  if (!c || std::any_of(c->begin(), c->end(), [](std::int64_t x) { return x < 0; })) return {};
  const auto& top = *c;
  const std::size_t s = top.size();
  // Mixed-radix index over the box 0 <= v <= top.
  std::vector<std::size_t> stride(s, 1);
  std::size_t cells = 1;
  for (std::size_t i = 0; i < s; ++i) {
    stride[i] = cells;
    cells *= static_cast<std::size_t>(top[i] + 1);
  }
  std::vector<LaurentPolynomial> table(cells);
  table[0] = 1;
  const auto q = LaurentPolynomial::monomial(1);
  for (auto p : rs.positive_roots()) {
    const auto a = *rs.simple_coroot_coordinates(rs.coroot(p));
    std::size_t offset = 0;
    bool fits = true;
    for (std::size_t i = 0; i < s; ++i) {
      if (a[i] > top[i]) fits = false;
      offset += static_cast<std::size_t>(a[i]) * stride[i];
    }
    if (!fits) continue;
    std::vector<std::int64_t> v(s, 0);
    for (std::size_t idx = 0; idx < cells; ++idx) {
      bool inside = true;
      for (std::size_t i = 0; i < s; ++i)
        if (v[i] < a[i]) inside = false;
      if (inside) table[idx] += q * table[idx - offset];
      for (std::size_t i = 0; i < s; ++i) {
        if (++v[i] <= top[i]) break;
        v[i] = 0;
      }
    }
  }
  return table[cells - 1];
}

LaurentPolynomial lusztig_q_analog(const RootSystem& rs, const Coweight& mu, const Coweight& lambda) {
  if (!rs.is_dominant(mu) || !rs.is_dominant(lambda))
    throw SatakeError("not_dominant", "q-analog needs dominant coweights");
  LaurentPolynomial m;
  for (const auto& w : rs.weyl_group().elements()) {
    // Doubled: w(2mu + 2rho^) - (2lambda + 2rho^) is even whenever it is in the coroot lattice.
    Coweight x = w.on_y.apply(2 * mu + rs.two_rho_check()) - 2 * lambda - rs.two_rho_check();
    if (std::any_of(x.begin(), x.end(), [](std::int64_t v) { return v % 2 != 0; })) continue;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] /= 2;
    auto p = q_kostant_partition(rs, x);
    if (w.length() % 2) m -= p;
    else m += p;
  }
  return m;
}

}  // namespace satake
