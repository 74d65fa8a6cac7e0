#include "satake/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace satake {

bool LatticeVector::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](std::int64_t x) { return x == 0; });
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& o) {
  if (o.size() != size()) throw SatakeError("rank_mismatch", "lattice vectors of different rank");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& o) {
  if (o.size() != size()) throw SatakeError("rank_mismatch", "lattice vectors of different rank");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

LatticeVector operator-(LatticeVector a) {
  for (auto& x : a.c_) x = -x;
  return a;
}

LatticeVector operator*(std::int64_t k, LatticeVector a) {
  for (auto& x : a.c_) x *= k;
  return a;
}

std::string LatticeVector::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ',';
    os << c_[i];
  }
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) { return os << v.str(); }

std::int64_t pairing(const LatticeVector& x, const LatticeVector& y) {
  if (x.size() != y.size()) throw SatakeError("rank_mismatch", "pairing of vectors of different rank");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

LatticeVector parse_lattice_vector(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') throw SatakeError("bad_coweight", "unbalanced parentheses in '" + std::string(text) + "'");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<std::int64_t> out;
  if (s.empty()) return LatticeVector(out);
  std::size_t pos = 0;
  while (pos <= s.size()) {
    auto comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    std::string tok = s.substr(pos, comma - pos);
    std::size_t used = 0;
    try {
      out.push_back(std::stoll(tok, &used));
    } catch (const std::exception&) {
      used = 0;
    }
    if (tok.empty() || used != tok.size())
      throw SatakeError("bad_coweight", "invalid integer tuple '" + std::string(text) + "'");
    pos = comma + 1;
  }
  return LatticeVector(std::move(out));
}

LatticeVector extend(const LatticeVector& v, std::int64_t last) {
  std::vector<std::int64_t> c(v.begin(), v.end());
  c.push_back(last);
  return LatticeVector(std::move(c));
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<LatticeVector>& cols) {
  IntMatrix m(cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != cols.size()) throw SatakeError("rank_mismatch", "non-square column set");
    for (std::size_t i = 0; i < cols.size(); ++i) m(i, j) = cols[j][i];
  }
  return m;
}

LatticeVector IntMatrix::apply(const LatticeVector& v) const {
  if (v.size() != n_) throw SatakeError("rank_mismatch", "matrix/vector size mismatch");
  LatticeVector out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < n_; ++j) s += (*this)(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

// Bareiss fraction-free elimination.
std::int64_t IntMatrix::determinant() const {
  if (n_ == 0) return 1;
  std::vector<std::int64_t> m = a_;
  auto at = [&](std::size_t i, std::size_t j) -> std::int64_t& { return m[i * n_ + j]; };
  std::int64_t sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n_; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n_ && at(p, k) == 0) ++p;
      if (p == n_) return 0;
      for (std::size_t j = 0; j < n_; ++j) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n_; ++i)
      for (std::size_t j = k + 1; j < n_; ++j)
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
    prev = at(k, k);
  }
  return sign * at(n_ - 1, n_ - 1);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw SatakeError("rank_mismatch", "matrix product size mismatch");
  IntMatrix c(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t k = 0; k < a.n_; ++k) {
      const auto aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < a.n_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) os << ',';
      os << (*this)(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

std::optional<LinearSolution> solve_linear(std::vector<std::vector<Rational>> rows,
                                           std::vector<Rational> rhs) {
  const std::size_t m = rows.size();
  const std::size_t n = m ? rows.front().size() : 0;
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && rows[p][c].numerator() == 0) ++p;
    if (p == m) continue;
    std::swap(rows[p], rows[r]);
    std::swap(rhs[p], rhs[r]);
    const Rational inv = Rational(1) / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || rows[i][c].numerator() == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = 0; j < n; ++j) rows[i][j] -= f * rows[r][j];
      rhs[i] -= f * rhs[r];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (rhs[i].numerator() != 0) return std::nullopt;

  LinearSolution sol;
  sol.particular.assign(n, Rational(0));
  for (std::size_t i = 0; i < r; ++i) sol.particular[pivot_cols[i]] = rhs[i];
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> k(n, Rational(0));
    k[f] = 1;
    for (std::size_t i = 0; i < r; ++i) k[pivot_cols[i]] = -rows[i][f];
    sol.kernel.push_back(std::move(k));
  }
  return sol;
}

std::optional<std::vector<Rational>> rational_coordinates(const std::vector<LatticeVector>& basis,
                                                          const LatticeVector& v) {
  const std::size_t dim = v.size();
  std::vector<std::vector<Rational>> rows(dim, std::vector<Rational>(basis.size()));
  std::vector<Rational> rhs(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) rows[i][j] = basis[j][i];
    rhs[i] = v[i];
  }
  auto sol = solve_linear(std::move(rows), std::move(rhs));
  if (!sol) return std::nullopt;
  return sol->particular;
}

}  // namespace satake
