#include "satake/root_datum.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>

namespace satake {

namespace {

LatticeVector unit(std::size_t n, std::size_t i, std::int64_t k = 1) {
  LatticeVector v(n);
  v[i] = k;
  return v;
}

std::optional<std::vector<std::int64_t>> integral(const std::optional<std::vector<Rational>>& r) {
  if (!r) return std::nullopt;
  std::vector<std::int64_t> out;
  out.reserve(r->size());
  for (const auto& x : *r) {
    if (x.denominator() != 1) return std::nullopt;
    out.push_back(x.numerator());
  }
  return out;
}

bool linearly_independent(const std::vector<LatticeVector>& vs, std::size_t dim) {
  if (vs.empty()) return true;
  std::vector<std::vector<Rational>> rows(dim, std::vector<Rational>(vs.size()));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < vs.size(); ++j) rows[i][j] = vs[j][i];
  auto sol = solve_linear(std::move(rows), std::vector<Rational>(dim, Rational(0)));
  return sol && sol->kernel.empty();
}

IntMatrix reflection_on_y(const Weight& a, const Coweight& a_check) {
  const std::size_t n = a.size();
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) -= a_check[i] * a[j];
  return m;
}

IntMatrix reflection_on_x(const Weight& a, const Coweight& a_check) {
  const std::size_t n = a.size();
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) -= a[i] * a_check[j];
  return m;
}

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

// Type A_{n-1} roots e_i - e_j in Z^n, i != j.
void type_a_ambient(std::size_t n, std::vector<LatticeVector>& roots, std::vector<std::size_t>& simple) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (j == i + 1) simple.push_back(roots.size());
      roots.push_back(unit(n, i) - unit(n, j));
    }
  std::sort(simple.begin(), simple.end(), [&](std::size_t a, std::size_t b) { return roots[a] > roots[b]; });
}

BasedRootDatum make_gl(std::size_t n) {
  BasedRootDatum d;
  d.name = "GL" + std::to_string(n);
  d.rank = n;
  type_a_ambient(n, d.roots, d.simple);
  d.coroots = d.roots;
  return d;
}

// Prefix sums: coefficients of a sum-zero vector in e_k - e_{k+1}.
LatticeVector prefix_coordinates(const LatticeVector& y) {
  LatticeVector c(y.size() - 1);
  std::int64_t s = 0;
  for (std::size_t k = 0; k + 1 < y.size(); ++k) c[k] = (s += y[k]);
  return c;
}

LatticeVector difference_coordinates(const LatticeVector& x) {
  LatticeVector c(x.size() - 1);
  for (std::size_t k = 0; k + 1 < x.size(); ++k) c[k] = x[k] - x[k + 1];
  return c;
}

BasedRootDatum make_sl(std::size_t n, bool adjoint) {
  if (n < 2) throw SatakeError("unknown_group", "SL/PGL need n >= 2");
  std::vector<LatticeVector> roots;
  std::vector<std::size_t> simple;
  type_a_ambient(n, roots, simple);
  BasedRootDatum d;
  d.name = (adjoint ? "PGL" : "SL") + std::to_string(n);
  d.rank = n - 1;
  d.simple = simple;
  for (const auto& r : roots) {
    if (adjoint) {
      d.roots.push_back(prefix_coordinates(r));
      d.coroots.push_back(difference_coordinates(r));
    } else {
      d.roots.push_back(difference_coordinates(r));
      d.coroots.push_back(prefix_coordinates(r));
    }
  }
  return d;
}

// Types B_g / C_g in Z^g. `symplectic` selects Sp_2g (long roots 2e_i).
BasedRootDatum make_bc(std::size_t g, bool symplectic) {
  if (g < 1) throw SatakeError("unknown_group", "Sp/SO rank must be >= 1");
  BasedRootDatum d;
  d.name = symplectic ? "Sp" + std::to_string(2 * g) : "SO" + std::to_string(2 * g + 1);
  d.rank = g;
  auto add = [&](LatticeVector r, LatticeVector c, bool is_simple) {
    if (is_simple) d.simple.push_back(d.roots.size());
    d.roots.push_back(std::move(r));
    d.coroots.push_back(std::move(c));
  };
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = i + 1; j < g; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          auto v = si * unit(g, i) + sj * unit(g, j);
          add(v, v, si == 1 && sj == -1 && j == i + 1);
        }
  for (std::size_t i = 0; i < g; ++i)
    for (int s : {1, -1}) {
      auto e = s * unit(g, i);
      if (symplectic)
        add(2 * e, e, s == 1 && i + 1 == g);
      else
        add(e, 2 * e, s == 1 && i + 1 == g);
    }
  std::sort(d.simple.begin(), d.simple.end(), [&](std::size_t a, std::size_t b) {
    // order simple roots e_1-e_2, ..., e_{g-1}-e_g, then the short/long one
    auto key = [&](std::size_t k) {
      const auto& r = d.roots[k];
      for (std::size_t t = 0; t < r.size(); ++t)
        if (r[t] != 0) return t;
      return r.size();
    };
    return key(a) < key(b);
  });
  return d;
}

BasedRootDatum make_torus(std::size_t r) {
  BasedRootDatum d;
  d.name = "T" + std::to_string(r);
  d.rank = r;
  return d;
}

std::vector<LatticeVector> parse_vector_list(const std::string& text) {
  static const std::regex tuple(R"(\(([^)]*)\))");
  std::vector<LatticeVector> out;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), tuple); it != std::sregex_iterator(); ++it)
    out.push_back(parse_lattice_vector((*it)[0].str()));
  return out;
}

}  // namespace

ValidationReport validate_root_datum(const BasedRootDatum& d) {
  ValidationReport report;
  auto fail = [&](std::string msg) { report.push_back(std::move(msg)); };

  if (d.roots.size() != d.coroots.size()) {
    fail("roots and coroots are not in bijection");
    return report;
  }
  for (std::size_t i = 0; i < d.roots.size(); ++i)
    if (d.roots[i].size() != d.rank || d.coroots[i].size() != d.rank) {
      fail("lattice rank mismatch at root " + std::to_string(i));
      return report;
    }

  std::map<Weight, std::size_t> lookup;
  for (std::size_t i = 0; i < d.roots.size(); ++i) {
    if (d.roots[i].is_zero()) fail("zero root at index " + std::to_string(i));
    if (!lookup.emplace(d.roots[i], i).second) fail("duplicate root " + d.roots[i].str());
  }
  for (std::size_t i = 0; i < d.roots.size(); ++i)
    if (pairing(d.roots[i], d.coroots[i]) != 2)
      fail("pairing axiom violated: <" + d.roots[i].str() + ", " + d.coroots[i].str() + "> = " +
           std::to_string(pairing(d.roots[i], d.coroots[i])));

  for (std::size_t i = 0; i < d.roots.size(); ++i) {
    auto it = lookup.find(-d.roots[i]);
    if (it == lookup.end())
      fail("root set not closed under negation at " + d.roots[i].str());
    else if (d.coroots[it->second] != -d.coroots[i])
      fail("coroot of " + (-d.roots[i]).str() + " is not the negative coroot");
  }

  for (std::size_t a = 0; a < d.roots.size(); ++a)
    for (std::size_t b = 0; b < d.roots.size(); ++b) {
      const Weight sb = d.roots[b] - pairing(d.roots[b], d.coroots[a]) * d.roots[a];
      auto it = lookup.find(sb);
      if (it == lookup.end()) {
        fail("reflection in " + d.roots[a].str() + " does not permute the roots");
        continue;
      }
      const Coweight sbc = d.coroots[b] - pairing(d.roots[a], d.coroots[b]) * d.coroots[a];
      if (d.coroots[it->second] != sbc)
        fail("reflection in " + d.roots[a].str() + " does not permute coroots compatibly");
    }

  std::set<std::size_t> seen;
  std::vector<LatticeVector> simple_roots;
  for (auto s : d.simple) {
    if (s >= d.roots.size()) {
      fail("simple index " + std::to_string(s) + " out of range");
      return report;
    }
    if (!seen.insert(s).second) fail("repeated simple index " + std::to_string(s));
    simple_roots.push_back(d.roots[s]);
  }
  if (!linearly_independent(simple_roots, d.rank)) {
    fail("simple roots are linearly dependent");
    return report;
  }
  for (const auto& r : d.roots) {
    auto c = integral(rational_coordinates(simple_roots, r));
    if (!c) {
      fail("root " + r.str() + " is not an integral combination of simple roots");
      continue;
    }
    const bool nonneg = std::all_of(c->begin(), c->end(), [](auto x) { return x >= 0; });
    const bool nonpos = std::all_of(c->begin(), c->end(), [](auto x) { return x <= 0; });
    if (!nonneg && !nonpos) fail("root " + r.str() + " has mixed-sign simple coefficients");
  }
  return report;
}

BasedRootDatum dual_root_datum(const BasedRootDatum& d) {
  auto report = validate_root_datum(d);
  if (!report.empty()) throw SatakeError("invalid_datum", "dual of invalid root datum: " + report.front());
  BasedRootDatum e;
  e.name = "dual(" + d.name + ")";
  e.rank = d.rank;
  e.roots = d.coroots;
  e.coroots = d.roots;
  e.simple = d.simple;
  return e;
}

BasedRootDatum preset_root_datum(const std::string& name) {
  const std::string n = lower(name);
  auto number = [&](std::size_t prefix) -> std::size_t {
    const std::string digits = n.substr(prefix);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
      throw SatakeError("unknown_group", "unknown group '" + name + "'");
    return static_cast<std::size_t>(std::stoul(digits));
  };
  if (n == "gm") {
    auto d = make_torus(1);
    d.name = "Gm";
    return d;
  }
  if (n.rfind("pgl", 0) == 0) return make_sl(number(3), true);
  if (n.rfind("gl", 0) == 0) {
    const auto k = number(2);
    if (k < 1) throw SatakeError("unknown_group", "GL_n needs n >= 1");
    return make_gl(k);
  }
  if (n.rfind("sl", 0) == 0) return make_sl(number(2), false);
  if (n.rfind("sp", 0) == 0) {
    const auto k = number(2);
    if (k % 2 != 0 || k == 0) throw SatakeError("unknown_group", "Sp_n needs even n");
    return make_bc(k / 2, true);
  }
  if (n.rfind("so", 0) == 0) {
    const auto k = number(2);
    if (k % 2 != 1 || k < 3) throw SatakeError("unknown_group", "only odd orthogonal groups SO_{2g+1} are shipped");
    return make_bc((k - 1) / 2, false);
  }
  if (n.rfind("t", 0) == 0) return make_torus(number(1));
  throw SatakeError("unknown_group", "unknown group '" + name + "'");
}

BasedRootDatum load_root_datum(const std::string& name_or_path) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_regular_file(name_or_path, ec)) return preset_root_datum(name_or_path);

  std::ifstream in(name_or_path);
  BasedRootDatum d;
  d.name = fs::path(name_or_path).stem().string();
  bool have_rank = false;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    auto colon = line.find(':');
    if (colon == std::string::npos) continue;
    std::string key = lower(line.substr(0, colon));
    key.erase(std::remove_if(key.begin(), key.end(), ::isspace), key.end());
    const std::string value = line.substr(colon + 1);
    if (key == "name") {
      std::istringstream(value) >> d.name;
    } else if (key == "rank") {
      std::istringstream(value) >> d.rank;
      have_rank = true;
    } else if (key == "roots") {
      d.roots = parse_vector_list(value);
    } else if (key == "coroots") {
      d.coroots = parse_vector_list(value);
    } else if (key == "simple") {
      std::string v = value;
      std::replace(v.begin(), v.end(), ',', ' ');
      std::istringstream is(v);
      std::size_t k;
      while (is >> k) d.simple.push_back(k);
    } else {
      throw SatakeError("bad_datum_file", "unknown field '" + key + "' in " + name_or_path);
    }
  }
  if (!have_rank) throw SatakeError("bad_datum_file", "missing rank in " + name_or_path);
  return d;
}

std::vector<IntMatrix> find_isomorphisms(const BasedRootDatum& d1, const BasedRootDatum& d2,
                                         std::size_t limit) {
  std::vector<IntMatrix> found;
  if (d1.rank != d2.rank || d1.roots.size() != d2.roots.size() || d1.simple.size() != d2.simple.size())
    return found;
  const std::size_t r = d1.rank, s = d1.simple.size();
  std::map<Weight, std::size_t> lookup2;
  for (std::size_t i = 0; i < d2.roots.size(); ++i) lookup2.emplace(d2.roots[i], i);

  auto check = [&](const IntMatrix& m) {
    const auto det = m.determinant();
    if (det != 1 && det != -1) return false;
    const IntMatrix mt = m.transpose();
    for (std::size_t i = 0; i < d1.roots.size(); ++i) {
      auto it = lookup2.find(m.apply(d1.roots[i]));
      if (it == lookup2.end()) return false;
      if (mt.apply(d2.coroots[it->second]) != d1.coroots[i]) return false;
    }
    return true;
  };

  std::vector<std::size_t> perm(s);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    // Unknowns: m(p, j) at index p*r + j.
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    for (std::size_t i = 0; i < s; ++i) {
      const auto& a = d1.roots[d1.simple[i]];
      const auto& b = d2.roots[d2.simple[perm[i]]];
      for (std::size_t p = 0; p < r; ++p) {
        std::vector<Rational> row(r * r, Rational(0));
        for (std::size_t j = 0; j < r; ++j) row[p * r + j] = a[j];
        rows.push_back(std::move(row));
        rhs.emplace_back(b[p]);
      }
      const auto& ca = d1.coroots[d1.simple[i]];
      const auto& cb = d2.coroots[d2.simple[perm[i]]];
      for (std::size_t j = 0; j < r; ++j) {
        std::vector<Rational> row(r * r, Rational(0));
        for (std::size_t p = 0; p < r; ++p) row[p * r + j] = cb[p];
        rows.push_back(std::move(row));
        rhs.emplace_back(ca[j]);
      }
    }
    std::optional<LinearSolution> sol;
    if (rows.empty()) {
      sol = LinearSolution{std::vector<Rational>(r * r, Rational(0)), {}};
      for (std::size_t k = 0; k < r * r; ++k) {
        std::vector<Rational> e(r * r, Rational(0));
        e[k] = 1;
        sol->kernel.push_back(std::move(e));
      }
    } else {
      sol = solve_linear(std::move(rows), std::move(rhs));
    }
    if (!sol) continue;

    std::int64_t denom = 1;
    for (const auto& x : sol->particular) denom = std::lcm(denom, x.denominator());
    for (const auto& k : sol->kernel)
      for (const auto& x : k) denom = std::lcm(denom, x.denominator());
    const std::size_t kdim = sol->kernel.size();
    const std::int64_t span = 2 * denom;
    std::size_t combos = 1;
    for (std::size_t k = 0; k < kdim; ++k) {
      combos *= static_cast<std::size_t>(2 * span + 1);
      if (combos > 2000000) throw SatakeError("search_overflow", "isomorphism search space too large");
    }
    std::vector<std::int64_t> t(kdim, -span);
    for (std::size_t c = 0; c < combos; ++c) {
      std::vector<Rational> x = sol->particular;
      for (std::size_t k = 0; k < kdim; ++k)
        if (t[k] != 0)
          for (std::size_t e = 0; e < x.size(); ++e) x[e] += Rational(t[k], denom) * sol->kernel[k][e];
      bool ok = true;
      IntMatrix m(r);
      for (std::size_t e = 0; e < x.size() && ok; ++e) {
        if (x[e].denominator() != 1) ok = false;
        else m(e / r, e % r) = x[e].numerator();
      }
      if (ok && check(m) && std::find(found.begin(), found.end(), m) == found.end()) {
        found.push_back(m);
        if (found.size() >= limit) return found;
      }
      for (std::size_t k = 0; k < kdim; ++k) {
        if (++t[k] <= span) break;
        t[k] = -span;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return found;
}

bool is_based_isomorphism(const IntMatrix& m, const BasedRootDatum& d1, const BasedRootDatum& d2) {
  if (m.dim() != d1.rank || d1.rank != d2.rank || d1.roots.size() != d2.roots.size() ||
      d1.simple.size() != d2.simple.size())
    return false;
  const auto det = m.determinant();
  if (det != 1 && det != -1) return false;
  std::map<Weight, std::size_t> lookup2;
  for (std::size_t i = 0; i < d2.roots.size(); ++i) lookup2.emplace(d2.roots[i], i);
  const std::set<std::size_t> simple2(d2.simple.begin(), d2.simple.end());
  const IntMatrix mt = m.transpose();
  for (std::size_t i = 0; i < d1.roots.size(); ++i) {
    auto it = lookup2.find(m.apply(d1.roots[i]));
    if (it == lookup2.end()) return false;
    if (mt.apply(d2.coroots[it->second]) != d1.coroots[i]) return false;
  }
  for (auto s : d1.simple)
    if (!simple2.count(lookup2.at(m.apply(d1.roots[s])))) return false;
  return true;
}

bool isomorphic(const BasedRootDatum& d1, const BasedRootDatum& d2) {
  return !find_isomorphisms(d1, d2, 1).empty();
}

WeylGroup::WeylGroup(const BasedRootDatum& d, const std::vector<Weight>& simple_roots,
                     const std::vector<Coweight>& simple_coroots) {
  const std::size_t n = d.rank, s = simple_roots.size();
  std::vector<IntMatrix> gy, gx;
  for (std::size_t i = 0; i < s; ++i) {
    gy.push_back(reflection_on_y(simple_roots[i], simple_coroots[i]));
    gx.push_back(reflection_on_x(simple_roots[i], simple_coroots[i]));
  }
  elems_.push_back({{}, IntMatrix::identity(n), IntMatrix::identity(n)});
  index_.emplace(elems_[0].on_y, 0);
  // Breadth-first by length, extending lexicographically least words on the
  // right in increasing generator order, so the first word reaching an element
  // is its lexicographically least reduced word.
  std::size_t level_begin = 0;
  while (level_begin < elems_.size()) {
    const std::size_t level_end = elems_.size();
    for (std::size_t e = level_begin; e < level_end; ++e)
      for (std::size_t i = 0; i < s; ++i) {
        IntMatrix my = elems_[e].on_y * gy[i];
        if (index_.count(my)) continue;
        WeylElement w{elems_[e].word, elems_[e].on_x * gx[i], my};
        w.word.push_back(static_cast<int>(i));
        index_.emplace(my, elems_.size());
        elems_.push_back(std::move(w));
        if (elems_.size() > 100000) throw SatakeError("infinite_weyl_group", "Weyl group too large");
      }
    level_begin = level_end;
  }
  const std::size_t N = elems_.size();
  mult_.resize(N * N);
  inv_.resize(N);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) {
      mult_[a * N + b] = index_of(elems_[a].on_y * elems_[b].on_y);
      if (mult_[a * N + b] == 0) inv_[a] = b;
    }
  for (std::size_t i = 0; i < s; ++i) gens_.push_back(index_of(gy[i]));
}

std::optional<std::size_t> WeylGroup::find(const IntMatrix& on_y) const {
  auto it = index_.find(on_y);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t WeylGroup::index_of(const IntMatrix& on_y) const {
  auto i = find(on_y);
  if (!i) throw SatakeError("not_in_weyl_group", "matrix " + on_y.str() + " is not in W0");
  return *i;
}

RootSystem::RootSystem(BasedRootDatum d) : d_(std::move(d)) {
  auto report = validate_root_datum(d_);
  if (!report.empty()) throw SatakeError("invalid_datum", d_.name + ": " + report.front());

  std::vector<Weight> sr;
  std::vector<Coweight> sc;
  for (auto s : d_.simple) {
    sr.push_back(d_.roots[s]);
    sc.push_back(d_.coroots[s]);
  }
  for (std::size_t i = 0; i < d_.roots.size(); ++i) root_lookup_.emplace(d_.roots[i], i);
  two_rho_ = Weight(d_.rank);
  two_rho_check_ = Coweight(d_.rank);
  for (std::size_t i = 0; i < d_.roots.size(); ++i) {
    root_coeffs_.push_back(*integral(rational_coordinates(sr, d_.roots[i])));
    const auto& c = root_coeffs_.back();
    const bool pos = std::accumulate(c.begin(), c.end(), std::int64_t{0}) > 0;
    positive_flag_.push_back(pos);
    if (pos) {
      positive_.push_back(i);
      two_rho_ += d_.roots[i];
      two_rho_check_ += d_.coroots[i];
    }
    negation_.push_back(root_lookup_.at(-d_.roots[i]));
  }
  weyl_ = std::make_shared<const WeylGroup>(d_, sr, sc);
  for (std::size_t i = 0; i < d_.roots.size(); ++i)
    reflection_index_.push_back(weyl_->index_of(reflection_on_y(d_.roots[i], d_.coroots[i])));

  // Dynkin components and their highest roots.
  const std::size_t s = sr.size();
  std::vector<int> comp(s, -1);
  for (std::size_t i = 0; i < s; ++i) {
    if (comp[i] >= 0) continue;
    const int id = static_cast<int>(components_.size());
    components_.emplace_back();
    std::deque<std::size_t> queue{i};
    comp[i] = id;
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      components_.back().push_back(u);
      for (std::size_t v = 0; v < s; ++v)
        if (comp[v] < 0 && pairing(sr[v], sc[u]) != 0) {
          comp[v] = id;
          queue.push_back(v);
        }
    }
    std::sort(components_.back().begin(), components_.back().end());
  }
  for (const auto& c : components_) {
    std::size_t best = d_.roots.size();
    std::int64_t best_height = -1;
    for (auto p : positive_) {
      const auto& co = root_coeffs_[p];
      bool inside = true;
      std::int64_t h = 0;
      for (std::size_t k = 0; k < s; ++k) {
        if (co[k] != 0 && comp[k] != comp[c.front()]) inside = false;
        h += co[k];
      }
      if (inside && h > best_height) {
        best_height = h;
        best = p;
      }
    }
    highest_.push_back(best);
  }
}

std::optional<std::size_t> RootSystem::root_index(const Weight& x) const {
  auto it = root_lookup_.find(x);
  if (it == root_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::vector<std::int64_t>> RootSystem::simple_coroot_coordinates(const Coweight& y) const {
  std::vector<Coweight> sc;
  for (auto s : d_.simple) sc.push_back(d_.coroots[s]);
  return integral(rational_coordinates(sc, y));
}

Weight RootSystem::reflect_weight(std::size_t i, const Weight& x) const {
  return x - pairing(x, d_.coroots[i]) * d_.roots[i];
}

Coweight RootSystem::reflect_coweight(std::size_t i, const Coweight& y) const {
  return y - pairing(d_.roots[i], y) * d_.coroots[i];
}

bool RootSystem::is_dominant(const Coweight& y) const {
  if (y.size() != d_.rank) throw SatakeError("rank_mismatch", "coweight " + y.str() + " has wrong rank");
  for (auto s : d_.simple)
    if (pairing(d_.roots[s], y) < 0) return false;
  return true;
}

Coweight RootSystem::dominant_representative(const Coweight& y) const {
  Coweight v = y;
  for (bool changed = true; changed;) {
    changed = false;
    for (auto s : d_.simple)
      if (pairing(d_.roots[s], v) < 0) {
        v = reflect_coweight(s, v);
        changed = true;
      }
  }
  return v;
}

Weight two_rho(const BasedRootDatum& d) { return RootSystem(d).two_rho(); }

bool in_positive_coroot_cone(const RootSystem& rs, const Coweight& diff) {
  auto c = rs.simple_coroot_coordinates(diff);
  return c && std::all_of(c->begin(), c->end(), [](auto x) { return x >= 0; });
}

bool dominance_leq(const RootSystem& rs, const Coweight& lambda, const Coweight& mu) {
  if (lambda.size() != rs.rank() || mu.size() != rs.rank())
    throw SatakeError("rank_mismatch", "dominance_leq: rank mismatch");
  if (!rs.is_dominant(lambda) || !rs.is_dominant(mu))
    throw SatakeError("not_dominant", "dominance_leq needs dominant coweights, got " + lambda.str() + ", " + mu.str());
  return in_positive_coroot_cone(rs, mu - lambda);
}

bool dominance_leq(const BasedRootDatum& d, const Coweight& lambda, const Coweight& mu) {
  return dominance_leq(RootSystem(d), lambda, mu);
}

OrbitResult weyl_orbit_dominant(const RootSystem& rs, const Coweight& nu) {
  if (nu.size() != rs.rank()) throw SatakeError("rank_mismatch", "coweight has wrong rank");
  std::set<Coweight> orbit;
  for (const auto& w : rs.weyl_group().elements()) orbit.insert(w.on_y.apply(nu));
  OrbitResult r{{orbit.begin(), orbit.end()}, rs.dominant_representative(nu)};
  return r;
}

std::vector<Coweight> dominant_coweights_in_box(const RootSystem& rs, std::int64_t bound, std::int64_t box) {
  std::vector<Coweight> out;
  const std::size_t r = rs.rank();
  Coweight v(r);
  for (std::size_t i = 0; i < r; ++i) v[i] = -box;
  while (true) {
    if (rs.is_dominant(v) && pairing(rs.two_rho(), v) <= bound) out.push_back(v);
    std::size_t k = 0;
    while (k < r && v[k] == box) v[k++] = -box;
    if (k == r) break;
    ++v[k];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace satake
