#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>

#include "satake/hecke.hpp"

namespace satake {

std::optional<std::pair<std::int64_t, int>> prime_power(std::int64_t q) {
  if (q < 2) return std::nullopt;
  std::int64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  int k = 0;
  for (std::int64_t r = q; r > 1; r /= p, ++k)
    if (r % p != 0) return std::nullopt;
  return std::make_pair(p, k);
}

FiniteField::FiniteField(std::int64_t q) : q_(q) {
  const auto pk = prime_power(q);
  if (!pk || q > 256) throw SatakeError("bad_q", "q = " + std::to_string(q) + " is not a prime power <= 256");
  p_ = pk->first;
  const int k = pk->second;
  auto digits = [&](std::int64_t x) {
    std::vector<std::int64_t> d(k);
    for (int i = 0; i < k; ++i, x /= p_) d[i] = x % p_;
    return d;
  };
  auto number = [&](const std::vector<std::int64_t>& d) {
    std::int64_t x = 0;
    for (int i = k - 1; i >= 0; --i) x = x * p_ + d[i];
    return x;
  };
  // Monic irreducible of degree k: no monic factor of degree 1..k/2.
  std::vector<std::int64_t> modulus;
  auto reduce = [&](std::vector<std::int64_t> a, const std::vector<std::int64_t>& m) {
    const auto dm = m.size() - 1;
    for (auto i = a.size(); i-- > dm;) {
      const auto c = a[i] % p_;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dm; ++j) a[i - dm + j] = ((a[i - dm + j] - c * m[j]) % p_ + p_) % p_;
    }
    a.resize(std::min(a.size(), dm));
    return a;
  };
  auto monic = [&](int deg, std::int64_t idx) {
    std::vector<std::int64_t> m(deg + 1, 0);
    for (int i = 0; i < deg; ++i, idx /= p_) m[i] = idx % p_;
    m[deg] = 1;
    return m;
  };
  std::int64_t pow_deg = 1;
  for (int i = 0; i < k; ++i) pow_deg *= p_;
  for (std::int64_t idx = 0; idx < pow_deg && modulus.empty(); ++idx) {
    auto m = monic(k, idx);
    bool irreducible = true;
    for (int d = 1; 2 * d <= k && irreducible; ++d) {
      std::int64_t count = 1;
      for (int i = 0; i < d; ++i) count *= p_;
      for (std::int64_t j = 0; j < count && irreducible; ++j) {
        auto r = reduce(m, monic(d, j));
        if (std::all_of(r.begin(), r.end(), [](std::int64_t c) { return c == 0; })) irreducible = false;
      }
    }
    if (irreducible) modulus = m;
  }
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  for (std::int64_t a = 0; a < q; ++a) {
    const auto da = digits(a);
    std::vector<std::int64_t> n(k);
    for (int i = 0; i < k; ++i) n[i] = (p_ - da[i]) % p_;
    neg_[a] = static_cast<int>(number(n));
    for (std::int64_t b = 0; b < q; ++b) {
      const auto db = digits(b);
      std::vector<std::int64_t> s(k), prod(2 * k, 0);
      for (int i = 0; i < k; ++i) s[i] = (da[i] + db[i]) % p_;
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      add_[a * q + b] = static_cast<int>(number(s));
      mul_[a * q + b] = static_cast<int>(number(reduce(prod, modulus)));
    }
  }
}

namespace {

// Polynomials in t over F_q, low degree first, no trailing zeros.
using Poly = std::vector<int>;
constexpr std::int64_t kInfinity = std::numeric_limits<std::int64_t>::max();

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly sub(const FiniteField& F, const Poly& a, const Poly& b) {
  Poly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(c);
  return c;
}

Poly mul(const FiniteField& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
  trim(c);
  return c;
}

std::int64_t valuation(const Poly& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) return static_cast<std::int64_t>(i);
  return kInfinity;
}

using PolyMatrix = std::vector<std::vector<Poly>>;

Poly determinant(const FiniteField& F, const PolyMatrix& m, const std::vector<std::size_t>& rows,
                 const std::vector<std::size_t>& cols) {
  std::vector<std::size_t> perm(cols.size());
  std::iota(perm.begin(), perm.end(), 0);
  Poly total;
  do {
    Poly term{1};
    for (std::size_t i = 0; i < rows.size() && !term.empty(); ++i) term = mul(F, term, m[rows[i]][cols[perm[i]]]);
    if (term.empty()) continue;
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    total = inversions % 2 ? sub(F, total, term) : sub(F, total, sub(F, {}, term));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) s.push_back(i);
    out.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

// Elementary divisor exponents (ascending) from determinantal divisors;
// nullopt if the matrix is singular.
std::optional<std::vector<std::int64_t>> elementary_divisors(const FiniteField& F, const PolyMatrix& m,
                                                             const std::vector<std::vector<std::vector<std::size_t>>>& subs) {
  const std::size_t n = m.size();
  std::vector<std::int64_t> e;
  std::int64_t prev = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    std::int64_t d = kInfinity;
    for (const auto& rows : subs[k])
      for (const auto& cols : subs[k]) d = std::min(d, valuation(determinant(F, m, rows, cols)));
    if (d == kInfinity) return std::nullopt;
    e.push_back(d - prev);
    prev = d;
  }
  return e;
}

std::vector<std::int64_t> ascending(const Coweight& x) {
  std::vector<std::int64_t> v(x.begin(), x.end());
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::int64_t oracle_convolve(const LatticeChainProblem& prob, std::int64_t max_lattices) {
  const std::size_t n = prob.n;
  if (n == 0 || n > 4) throw SatakeError("unsupported", "lattice oracle supports GL_n with 1 <= n <= 4");
  for (const auto* x : {&prob.mu, &prob.lambda, &prob.nu}) {
    if (x->size() != n) throw SatakeError("rank_mismatch", "coweight " + x->str() + " has the wrong rank");
    for (std::size_t i = 0; i + 1 < n; ++i)
      if ((*x)[i] < (*x)[i + 1]) throw SatakeError("not_dominant", x->str() + " is not dominant");
  }
  const FiniteField F(prob.q);
  const auto a = *std::min_element(prob.mu.begin(), prob.mu.end());
  const auto b = *std::min_element(prob.lambda.begin(), prob.lambda.end());
  std::vector<std::int64_t> mu = ascending(prob.mu), lambda = ascending(prob.lambda), nu(prob.nu.begin(), prob.nu.end());
  for (auto& x : mu) x -= a;
  for (auto& x : lambda) x -= b;
  for (auto& x : nu) x -= a + b;
  const auto size_mu = std::accumulate(mu.begin(), mu.end(), std::int64_t{0});
  const auto size_lambda = std::accumulate(lambda.begin(), lambda.end(), std::int64_t{0});
  if (std::accumulate(nu.begin(), nu.end(), std::int64_t{0}) != size_mu + size_lambda) return 0;
  if (*std::min_element(nu.begin(), nu.end()) < 0) return 0;

  std::vector<std::vector<std::vector<std::size_t>>> subs(n + 1);
  for (std::size_t k = 1; k <= n; ++k) subs[k] = subsets(n, k);
  const auto top = mu.back();

  std::int64_t count = 0, visited = 0;
  std::vector<std::int64_t> diag(n, 0);
  // Column Hermite forms: upper triangular, diagonal t^{diag_i}, entries
  // right of the diagonal in row i of degree < diag_i.
  auto visit_diagonal = [&] {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    std::vector<std::size_t> widths;
    std::size_t digits = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        slots.emplace_back(i, j);
        widths.push_back(static_cast<std::size_t>(diag[i]));
        digits += static_cast<std::size_t>(diag[i]);
      }
    std::int64_t total = 1;
    for (std::size_t d = 0; d < digits; ++d) {
      total *= prob.q;
      if (total > max_lattices) break;
    }
    visited += total;
    if (visited > max_lattices)
      throw SatakeError("bound_overflow", "lattice enumeration exceeds " + std::to_string(max_lattices) + " forms");
    std::vector<int> coeff(digits, 0);
    PolyMatrix H(n, std::vector<Poly>(n));
    for (std::size_t i = 0; i < n; ++i) {
      H[i][i].assign(static_cast<std::size_t>(diag[i]) + 1, 0);
      H[i][i].back() = 1;
    }
    while (true) {
      std::size_t pos = 0;
      for (std::size_t s = 0; s < slots.size(); ++s) {
        auto [i, j] = slots[s];
        H[i][j].assign(coeff.begin() + static_cast<std::ptrdiff_t>(pos),
                       coeff.begin() + static_cast<std::ptrdiff_t>(pos + widths[s]));
        trim(H[i][j]);
        pos += widths[s];
      }
      if (elementary_divisors(F, H, subs) == mu) {
        // X = H^-1 diag(t^nu) by back substitution; integral iff t^nu L0 lies in L'.
        PolyMatrix X(n, std::vector<Poly>(n));
        bool integral = true;
        for (std::size_t col = 0; col < n && integral; ++col) {
          for (std::size_t i = n; i-- > 0 && integral;) {
            Poly rhs;
            if (i == col) {
              rhs.assign(static_cast<std::size_t>(nu[col]) + 1, 0);
              rhs.back() = 1;
            }
            for (std::size_t k = i + 1; k < n; ++k) rhs = sub(F, rhs, mul(F, H[i][k], X[k][col]));
            const auto shift = static_cast<std::size_t>(diag[i]);
            if (valuation(rhs) < static_cast<std::int64_t>(shift)) {
              integral = false;
              break;
            }
            X[i][col] = rhs.empty() ? Poly{} : Poly(rhs.begin() + static_cast<std::ptrdiff_t>(shift), rhs.end());
          }
        }
        if (integral && elementary_divisors(F, X, subs) == lambda) ++count;
      }
      std::size_t d = 0;
      while (d < digits && coeff[d] == prob.q - 1) coeff[d++] = 0;
      if (d == digits) break;
      ++coeff[d];
    }
  };
  // Diagonal exponents in [0, top] summing to |mu|.
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
    if (i == n - 1) {
      if (left > top) return;
      diag[i] = left;
      visit_diagonal();
      return;
    }
    for (std::int64_t x = 0; x <= std::min(top, left); ++x) {
      diag[i] = x;
      rec(i + 1, left - x);
    }
  };
  rec(0, size_mu);
  return count;
}

LaurentPolynomial interpolate(const std::vector<std::pair<std::int64_t, std::int64_t>>& points) {
  const std::size_t n = points.size();
  std::vector<Rational> result(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    // Lagrange basis polynomial for point i, expanded.
    std::vector<Rational> basis{Rational(1)};
    Rational denom(1);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      if (points[j].first == points[i].first) throw SatakeError("bad_points", "repeated interpolation node");
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * points[j].first;
      }
      basis = std::move(next);
      denom *= Rational(points[i].first - points[j].first);
    }
    for (std::size_t k = 0; k < basis.size(); ++k) result[k] += basis[k] * points[i].second / denom;
  }
  LaurentPolynomial p;
  for (std::size_t k = 0; k < n; ++k) {
    if (result[k].denominator() != 1)
      throw SatakeError("not_integral", "interpolating polynomial has non-integral coefficients");
    p += LaurentPolynomial::monomial(static_cast<std::int64_t>(k), result[k].numerator());
  }
  return p;
}

}  // namespace satake
