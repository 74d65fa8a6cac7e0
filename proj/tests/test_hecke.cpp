#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "satake/hecke.hpp"

using namespace satake;

namespace {

LaurentPolynomial v(std::int64_t e, std::int64_t c = 1) { return LaurentPolynomial::monomial(e, c); }

// Independent count for GL2 and small mu: lattices L' of index q^|mu| in
// O^2 listed as spans of explicit generators mod t^N, then filtered by brute
// force over all vectors of (O/t^N)^2 with q prime.
std::int64_t brute_gl2(std::int64_t q, const Coweight& mu, const Coweight& lambda, const Coweight& nu) {
  const std::int64_t N = std::max<std::int64_t>({mu[0] + lambda[0], nu[0], 1}) + 1;
  std::int64_t size = 1;
  for (int i = 0; i < N; ++i) size *= q;
  // Elements of O/t^N as integers 0..q^N-1 with base-q digits; arithmetic mod q digitwise-convolved.
  auto digits = [&](std::int64_t x) {
    std::vector<std::int64_t> d(N);
    for (int i = 0; i < N; ++i, x /= q) d[i] = x % q;
    return d;
  };
  auto val = [&](std::int64_t x) {
    auto d = digits(x);
    for (int i = 0; i < N; ++i)
      if (d[i]) return static_cast<std::int64_t>(i);
    return N;
  };
  auto mul = [&](std::int64_t x, std::int64_t y) {
    auto a = digits(x), b = digits(y);
    std::vector<std::int64_t> c(N, 0);
    for (int i = 0; i < N; ++i)
      for (int j = 0; i + j < N; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % q;
    std::int64_t r = 0;
    for (int i = N - 1; i >= 0; --i) r = r * q + c[i];
    return r;
  };
  auto addv = [&](std::int64_t x, std::int64_t y) {
    auto a = digits(x), b = digits(y);
    std::int64_t r = 0;
    for (int i = N - 1; i >= 0; --i) r = r * q + (a[i] + b[i]) % q;
    return r;
  };
  // Invariants of a rank-2 submodule spanned by (x1,y1), (x2,y2) mod t^N:
  // d1 = min valuation of entries, d1 + d2 = valuation of the determinant.
  auto type = [&](std::int64_t x1, std::int64_t y1, std::int64_t x2, std::int64_t y2) {
    const auto d1 = std::min({val(x1), val(y1), val(x2), val(y2)});
    auto neg = [&](std::int64_t z) {
      auto d = digits(z);
      std::int64_t r = 0;
      for (int i = N - 1; i >= 0; --i) r = r * q + (q - d[i]) % q;
      return r;
    };
    const auto det = val(addv(mul(x1, y2), neg(mul(x2, y1))));
    return std::vector<std::int64_t>{d1, det - d1};
  };
  std::int64_t a = std::min(mu[0], mu[1]), b = std::min(lambda[0], lambda[1]);
  const std::vector<std::int64_t> m{mu[1] - a, mu[0] - a}, l{lambda[1] - b, lambda[0] - b};
  const std::int64_t n0 = nu[0] - a - b, n1 = nu[1] - a - b;
  if (n0 + n1 != m[0] + m[1] + l[0] + l[1] || n1 < 0) return 0;
  if (n0 >= N || n1 >= N) return 0;
  auto tpow = [&](std::int64_t e) {
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) r *= q;
    return r;
  };
  // Hermite generators (t^a0, 0), (c, t^a1) with deg c < a0.
  std::int64_t count = 0;
  for (std::int64_t a0 = 0; a0 <= m[1]; ++a0) {
    const auto a1 = m[0] + m[1] - a0;
    if (a1 < 0 || a1 > m[1]) continue;
    for (std::int64_t c = 0; c < tpow(a0); ++c) {
      const auto g1x = tpow(a0), g1y = std::int64_t{0}, g2x = c, g2y = tpow(a1);
      if (type(g1x, g1y, g2x, g2y) != m) continue;
      // t^nu L0 inside L': solve (t^n0, 0) and (0, t^n1) by brute force over coefficients.
      auto inside = [&](std::int64_t x, std::int64_t y, std::int64_t& u, std::int64_t& w) {
        for (u = 0; u < size; ++u)
          for (w = 0; w < size; ++w)
            if (addv(mul(u, g1x), mul(w, g2x)) == x && addv(mul(u, g1y), mul(w, g2y)) == y) return true;
        return false;
      };
      std::int64_t u1, w1, u2, w2;
      if (!inside(tpow(n0), 0, u1, w1) || !inside(0, tpow(n1), u2, w2)) continue;
      if (type(u1, w1, u2, w2) == l) ++count;
    }
  }
  return count;
}

}  // namespace

TEST_CASE("IC functions and the Satake transform for GL2") {
  SphericalHecke H(preset_root_datum("GL2"));
  CHECK(H.ic_function({1, 0}) == HeckeElement{{{1, 0}, 1}});
  CHECK(H.ic_function({2, 0}) == HeckeElement{{{2, 0}, 1}, {{1, 1}, 1}});
  CHECK(H.satake_transform(H.basis({1, 0})) == SatakeImage{{{1, 0}, v(1)}});
  CHECK(H.satake_transform(H.basis({2, 0})) == SatakeImage{{{2, 0}, v(2)}, {{1, 1}, -1}});
  CHECK(H.satake_transform(H.basis({0, 0})) == SatakeImage{{{0, 0}, 1}});
  CHECK(H.satake_transform(H.basis({1, 1})) == SatakeImage{{{1, 1}, 1}});
  CHECK(H.satake_transform({}).empty());
  CHECK_THROWS_AS(H.basis({0, 1}), SatakeError);
  CHECK_THROWS_AS(H.satake_transform({{{1, 0, 0}, 1}}), SatakeError);
}

TEST_CASE("GL2 products") {
  SphericalHecke H(preset_root_datum("GL2"));
  const auto c10 = H.basis({1, 0});
  CHECK(H.multiply(c10, c10) == HeckeElement{{{2, 0}, 1}, {{1, 1}, v(2) + 1}});
  CHECK(H.multiply(H.basis({1, 1}), c10) == HeckeElement{{{2, 1}, 1}});
  CHECK(H.multiply(H.basis({0, 0}), H.basis({3, 1})) == H.basis({3, 1}));
  const auto c20 = H.basis({2, 0});
  const auto prod = H.multiply(c20, c10);
  for (std::int64_t q : {2, 3, 5}) {
    for (const auto& [nu, p] : prod) {
      CAPTURE(nu);
      const auto at_q = p.halve_exponents().evaluate(q);
      CHECK(at_q.denominator() == 1);
      CHECK(at_q.numerator() == oracle_convolve({2, {2, 0}, {1, 0}, nu, q}));
    }
  }
}

TEST_CASE("triangularity and inversion") {
  for (auto name : {"GL2", "GL3", "Sp4", "SL2", "PGL3", "SO5"}) {
    CAPTURE(name);
    SphericalHecke H(preset_root_datum(name));
    const auto box = dominant_coweights_in_box(H.roots(), 4, 2);
    for (const auto& mu : box) {
      CAPTURE(mu);
      const auto s = H.satake_transform(H.basis(mu));
      CHECK(s.at(mu) == v(H.reps().height(mu)));
      for (const auto& [lambda, p] : s) {
        CHECK(dominance_leq(H.roots(), lambda, mu));
        CHECK(p.min_degree() >= 0);
        for (const auto& [e, c] : p.terms()) CHECK((e - H.reps().height(mu)) % 2 == 0);
        if (lambda != mu) CHECK(p.max_degree() < H.reps().height(mu));
      }
      CHECK(H.satake_inverse(s) == H.basis(mu));
      const auto f = H.ic_function(mu);
      CHECK(H.satake_transform(f) == SatakeImage{{mu, v(H.reps().height(mu))}});
    }
  }
}

TEST_CASE("commutativity and associativity") {
  for (auto name : {"GL2", "Sp4", "GL3"}) {
    CAPTURE(name);
    SphericalHecke H(preset_root_datum(name));
    const auto box = dominant_coweights_in_box(H.roots(), 3, 1);
    for (const auto& a : box)
      for (const auto& b : box) {
        CHECK(H.multiply(H.basis(a), H.basis(b)) == H.multiply(H.basis(b), H.basis(a)));
        for (const auto& c : box) {
          if (H.reps().height(a) + H.reps().height(b) + H.reps().height(c) > 6) continue;
          CHECK(H.multiply(H.multiply(H.basis(a), H.basis(b)), H.basis(c)) ==
                H.multiply(H.basis(a), H.multiply(H.basis(b), H.basis(c))));
        }
      }
  }
}

TEST_CASE("finite fields") {
  CHECK(prime_power(8) == std::make_pair<std::int64_t, int>(2, 3));
  CHECK(prime_power(7) == std::make_pair<std::int64_t, int>(7, 1));
  CHECK(!prime_power(6));
  CHECK(!prime_power(1));
  CHECK_THROWS_AS(FiniteField(12), SatakeError);
  for (std::int64_t q : {2, 3, 4, 5, 8, 9, 16, 25, 27}) {
    CAPTURE(q);
    FiniteField F(q);
    for (int a = 0; a < q; ++a) {
      CHECK(F.add(a, 0) == a);
      CHECK(F.mul(a, 1) == a);
      CHECK(F.add(a, F.neg(a)) == 0);
      if (a != 0) {
        int inverses = 0;
        for (int b = 0; b < q; ++b) inverses += F.mul(a, b) == 1;
        CHECK(inverses == 1);
      }
      for (int b = 0; b < q; ++b)
        for (int c = 0; c < q; c += 3) {
          CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
          CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
        }
    }
  }
}

TEST_CASE("lattice oracle") {
  CHECK(oracle_convolve({2, {1, 0}, {1, 0}, {1, 1}, 3}) == 4);
  CHECK(oracle_convolve({2, {1, 0}, {1, 0}, {2, 0}, 3}) == 1);
  CHECK(oracle_convolve({2, {1, 0}, {1, 0}, {1, 0}, 3}) == 0);
  CHECK(oracle_convolve({2, {0, 0}, {2, 1}, {2, 1}, 4}) == 1);
  CHECK(oracle_convolve({2, {-1, -1}, {2, 1}, {1, 0}, 2}) == 1);
  CHECK_THROWS_AS(oracle_convolve({2, {1, 0}, {1, 0}, {1, 1}, 6}), SatakeError);
  CHECK_THROWS_AS(oracle_convolve({2, {0, 1}, {1, 0}, {1, 1}, 2}), SatakeError);
  CHECK_THROWS_AS(oracle_convolve({2, {9, 0}, {9, 0}, {9, 9}, 7}, 1000), SatakeError);

  for (std::int64_t q : {2, 3}) {
    for (std::int64_t m0 = 0; m0 <= 2; ++m0)
      for (std::int64_t m1 = 0; m1 <= m0; ++m1)
        for (std::int64_t l0 = 0; l0 <= 2; ++l0)
          for (std::int64_t l1 = 0; l1 <= l0; ++l1) {
            const Coweight mu{m0, m1}, la{l0, l1};
            const auto total = m0 + m1 + l0 + l1;
            for (std::int64_t n1 = 0; 2 * n1 <= total; ++n1) {
              const Coweight nu{total - n1, n1};
              CAPTURE(q);
              CAPTURE(mu);
              CAPTURE(la);
              CAPTURE(nu);
              CHECK(oracle_convolve({2, mu, la, nu, q}) == brute_gl2(q, mu, la, nu));
            }
          }
  }
}

TEST_CASE("Hecke products agree with lattice counts") {
  SphericalHecke H(preset_root_datum("GL2"));
  for (std::int64_t m0 = 0; m0 <= 2; ++m0)
    for (std::int64_t m1 = 0; m1 <= m0; ++m1)
      for (std::int64_t l0 = 0; l0 <= 2; ++l0)
        for (std::int64_t l1 = 0; l1 <= l0; ++l1) {
          const Coweight mu{m0, m1}, la{l0, l1};
          const auto prod = H.multiply(H.basis(mu), H.basis(la));
          const auto total = m0 + m1 + l0 + l1;
          for (std::int64_t n1 = 0; 2 * n1 <= total; ++n1) {
            const Coweight nu{total - n1, n1};
            CAPTURE(mu);
            CAPTURE(la);
            CAPTURE(nu);
            std::vector<std::pair<std::int64_t, std::int64_t>> pts;
            for (std::int64_t q : {2, 3, 4, 5, 7}) pts.emplace_back(q, oracle_convolve({2, mu, la, nu, q}));
            const auto counted = interpolate(pts);
            auto it = prod.find(nu);
            const LaurentPolynomial expected = it == prod.end() ? LaurentPolynomial{} : it->second.halve_exponents();
            CHECK(counted == expected);
          }
        }
  SphericalHecke H3(preset_root_datum("GL3"));
  const Coweight w1{1, 0, 0};
  const auto prod = H3.multiply(H3.basis(w1), H3.basis(w1));
  for (const Coweight nu : {Coweight{2, 0, 0}, Coweight{1, 1, 0}})
    for (std::int64_t q : {2, 3})
      CHECK(prod.at(nu).halve_exponents().evaluate(q).numerator() == oracle_convolve({3, w1, w1, nu, q}));
}

TEST_CASE("interpolation") {
  CHECK(interpolate({{0, 1}, {1, 3}, {2, 7}}) == v(2) + v(1) + 1);
  CHECK(interpolate({{2, 5}}) == LaurentPolynomial(5));
  CHECK_THROWS_AS(interpolate({{0, 0}, {2, 1}}), SatakeError);
  CHECK_THROWS_AS(interpolate({{1, 0}, {1, 1}}), SatakeError);
}
