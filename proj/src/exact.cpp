#include "tits/exact.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <stdexcept>

namespace tits {

Rational parse_rational(const std::string& text) {
  static const std::regex pattern(R"(^[+-]?[0-9]+(/[0-9]+)?$)");
  if (!std::regex_match(text, pattern)) {
    throw std::invalid_argument("not an exact rational: \"" + text + "\"");
  }
  std::string body = text[0] == '+' ? text.substr(1) : text;
  auto slash = body.find('/');
  if (slash != std::string::npos) {
    mpz_class den(body.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: \"" + text + "\"");
  }
  Rational q(body);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const RatVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

Rational dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : data_(rows, RatVec(cols, Rational(0))), cols_(cols) {}

RatMatrix::RatMatrix(std::vector<RatVec> rows, std::size_t cols)
    : data_(std::move(rows)), cols_(cols) {
  for (const auto& r : data_)
    if (r.size() != cols_) throw std::invalid_argument("RatMatrix: ragged rows");
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void RatMatrix::append_row(RatVec r) {
  if (data_.empty() && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw std::invalid_argument("append_row: width mismatch");
  data_.push_back(std::move(r));
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = data_[i][j];
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
  if (cols_ != other.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  RatMatrix p(rows(), other.cols());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (data_[i][k] == 0) continue;
      for (std::size_t j = 0; j < other.cols(); ++j) p(i, j) += data_[i][k] * other(k, j);
    }
  return p;
}

RatVec RatMatrix::apply(const RatVec& x) const {
  RatVec y(rows(), Rational(0));
  for (std::size_t i = 0; i < rows(); ++i) y[i] = dot(data_[i], x);
  return y;
}

bool RatMatrix::operator==(const RatMatrix& other) const {
  return cols_ == other.cols_ && data_ == other.data_;
}

RrefResult rref_with_pivots(const RatMatrix& m) {
  std::vector<RatVec> a = m.row_data();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[r], a[p]);
    Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  return {RatMatrix(std::move(a), cols), std::move(pivots)};
}

RatMatrix rref(const RatMatrix& m) { return rref_with_pivots(m).form; }

std::size_t rank(const RatMatrix& m) { return rref_with_pivots(m).pivots.size(); }

RatMatrix nullspace(const RatMatrix& m) {
  auto [form, pivots] = rref_with_pivots(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  RatMatrix basis(0, cols);
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -form(i, f);
    basis.append_row(std::move(v));
  }
  return basis;
}

std::optional<RatVec> solve(const RatMatrix& m, const RatVec& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: size mismatch");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto [form, pivots] = rref_with_pivots(aug);
  RatVec x(m.cols(), Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == m.cols()) return std::nullopt;
    x[pivots[i]] = form(i, m.cols());
  }
  return x;
}

Rational determinant(RatMatrix m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant: not square");
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

Signature signature_on_subspace(const RatMatrix& form, const RatMatrix& basis) {
  if (form.rows() != form.cols()) throw std::invalid_argument("signature: form not square");
  if (basis.rows() > 0 && basis.cols() != form.rows())
    throw std::invalid_argument("signature: dimension mismatch");
  for (std::size_t i = 0; i < form.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (form(i, j) != form(j, i)) throw std::invalid_argument("signature: form not symmetric");
  const std::size_t k = basis.rows();
  if (k == 0) return {};
  RatMatrix g = basis * form * basis.transpose();
  Signature s;
  for (std::size_t t = 0; t < k; ++t) {
    std::size_t p = t;
    while (p < k && g(p, p) == 0) ++p;
    if (p == k) {
      // No nonzero diagonal left: combine two indices with a nonzero
      // off-diagonal entry, which makes a nonzero diagonal entry.
      std::size_t bi = k, bj = k;
      for (std::size_t i = t; i < k && bi == k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
          if (g(i, j) != 0) {
            bi = i;
            bj = j;
            break;
          }
      if (bi == k) break;
      for (std::size_t j = 0; j < k; ++j) g(bi, j) += g(bj, j);
      for (std::size_t i = 0; i < k; ++i) g(i, bi) += g(i, bj);
      p = bi;
    }
    if (p != t) {
      for (std::size_t j = 0; j < k; ++j) std::swap(g(p, j), g(t, j));
      for (std::size_t i = 0; i < k; ++i) std::swap(g(i, p), g(i, t));
    }
    const Rational piv = g(t, t);
    (piv > 0 ? s.n_pos : s.n_neg) += 1;
    for (std::size_t r = t + 1; r < k; ++r) {
      if (g(r, t) == 0) continue;
      Rational f = g(r, t) / piv;
      for (std::size_t j = t; j < k; ++j) g(r, j) -= f * g(t, j);
      for (std::size_t i = t; i < k; ++i) g(i, r) -= f * g(i, t);
    }
  }
  s.n_zero = static_cast<int>(k) - s.n_pos - s.n_neg;
  return s;
}

int orientation_sign_affine(const std::vector<RatVec>& points) {
  if (points.empty()) throw std::invalid_argument("orientation: no points");
  const std::size_t n = points.size() - 1;
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (points[i + 1].size() != n || points[0].size() != n)
      throw std::invalid_argument("orientation: need n+1 points in Q^n");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = points[i + 1][j] - points[0][j];
  }
  return sgn(determinant(m));
}

int orientation_sign_linear(const std::vector<RatVec>& vectors) {
  const std::size_t n = vectors.size();
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (vectors[i].size() != n) throw std::invalid_argument("orientation: need n+1 vectors in Q^(n+1)");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = vectors[i][j];
  }
  return sgn(determinant(m));
}

bool satisfies(const LinearSystem& sys, const RatVec& x) {
  auto eval = [&](const RatVec& row) {
    Rational s = row[0];
    for (std::size_t j = 0; j < sys.vars; ++j) s += row[j + 1] * x[j];
    return s;
  };
  if (x.size() != sys.vars) return false;
  for (const auto& r : sys.strict)
    if (eval(r) <= 0) return false;
  for (const auto& r : sys.nonstrict)
    if (eval(r) < 0) return false;
  for (const auto& r : sys.equalities)
    if (eval(r) != 0) return false;
  return true;
}

namespace {

// Homogeneous problem: find y with g.y >= h for every (g, h) and e.y = 0.
struct Homogeneous {
  std::size_t vars = 0;
  std::vector<RatVec> rows;
  std::vector<Rational> bounds;
  std::vector<RatVec> equalities;
};

Homogeneous homogenize(const LinearSystem& sys) {
  Homogeneous h;
  h.vars = sys.vars + 1;
  auto check = [&](const RatVec& r) {
    if (r.size() != h.vars) throw std::invalid_argument("feasible: row width mismatch");
  };
  // The affine row (c, a) is already the homogeneous row in (t, x).
  RatVec t_row(h.vars, Rational(0));
  t_row[0] = 1;
  h.rows.push_back(t_row);
  h.bounds.push_back(1);
  for (const auto& r : sys.strict) {
    check(r);
    h.rows.push_back(r);
    h.bounds.push_back(1);
  }
  for (const auto& r : sys.nonstrict) {
    check(r);
    h.rows.push_back(r);
    h.bounds.push_back(0);
  }
  for (const auto& r : sys.equalities) {
    check(r);
    h.equalities.push_back(r);
  }
  return h;
}

Rational pick_value(const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
  if ((!lo || *lo <= 0) && (!hi || *hi >= 0)) return 0;
  if (lo && !hi) {
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), lo->get_num_mpz_t(), lo->get_den_mpz_t());
    return Rational(c);
  }
  if (hi && !lo) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), hi->get_num_mpz_t(), hi->get_den_mpz_t());
    return Rational(f);
  }
  // Both bounds on the same side of zero; prefer an integer near zero.
  if (*lo > 0) {
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), lo->get_num_mpz_t(), lo->get_den_mpz_t());
    if (Rational(c) <= *hi) return Rational(c);
  } else {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), hi->get_num_mpz_t(), hi->get_den_mpz_t());
    if (Rational(f) >= *lo) return Rational(f);
  }
  return (*lo + *hi) / 2;
}

std::optional<RatVec> solve_fourier_motzkin(const Homogeneous& h) {
  // Parametrize the equality solution space: y = z * basis.
  RatMatrix eq(h.equalities, h.vars);
  RatMatrix basis = h.equalities.empty() ? RatMatrix::identity(h.vars) : nullspace(eq);
  const std::size_t m = basis.rows();
  using System = std::map<RatVec, Rational>;  // normalized row -> strongest bound
  auto add_row = [](System& s, RatVec row, Rational bound) -> bool {
    std::size_t lead = row.size();
    for (std::size_t j = row.size(); j-- > 0;)
      if (row[j] != 0) {
        lead = j;
        break;
      }
    if (lead == row.size()) return bound <= 0;
    Rational scale = abs(row[lead]);
    for (auto& x : row) x /= scale;
    bound /= scale;
    auto it = s.find(row);
    if (it == s.end())
      s.emplace(std::move(row), std::move(bound));
    else if (bound > it->second)
      it->second = bound;
    return true;
  };

  std::vector<System> levels(m + 1);
  for (std::size_t i = 0; i < h.rows.size(); ++i) {
    RatVec row(m, Rational(0));
    for (std::size_t k = 0; k < m; ++k) row[k] = dot(h.rows[i], basis.row(k));
    if (!add_row(levels[m], std::move(row), h.bounds[i])) return std::nullopt;
  }
  if (m == 0) {
    // Only y = 0 remains, and the t-row demands t >= 1.
    return std::nullopt;
  }
  // levels[j] holds the system in variables z_0..z_{j-1}.
  for (std::size_t j = m; j-- > 0;) {
    const System& cur = levels[j + 1];
    std::vector<std::pair<RatVec, Rational>> pos, neg;
    for (const auto& [row, bound] : cur) {
      if (row[j] > 0)
        pos.emplace_back(row, bound);
      else if (row[j] < 0)
        neg.emplace_back(row, bound);
      else if (!add_row(levels[j], row, bound))
        return std::nullopt;
    }
    for (const auto& [pr, pb] : pos)
      for (const auto& [nr, nb] : neg) {
        Rational a = pr[j], b = -nr[j];
        RatVec row(m, Rational(0));
        for (std::size_t k = 0; k < m; ++k) row[k] = b * pr[k] + a * nr[k];
        row[j] = 0;
        if (!add_row(levels[j], std::move(row), b * pb + a * nb)) return std::nullopt;
      }
  }
  RatVec z(m, Rational(0));
  for (std::size_t j = 0; j < m; ++j) {
    std::optional<Rational> lo, hi;
    for (const auto& [row, bound] : levels[j + 1]) {
      if (row[j] == 0) continue;
      Rational rest = bound;
      for (std::size_t k = 0; k < j; ++k) rest -= row[k] * z[k];
      Rational v = rest / row[j];
      if (row[j] > 0) {
        if (!lo || v > *lo) lo = v;
      } else {
        if (!hi || v < *hi) hi = v;
      }
    }
    if (lo && hi && *lo > *hi) return std::nullopt;  // cannot happen after elimination
    z[j] = pick_value(lo, hi);
  }
  RatVec y(h.vars, Rational(0));
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < h.vars; ++i) y[i] += z[k] * basis(k, i);
  return y;
}

std::optional<RatVec> solve_simplex(const Homogeneous& h) {
  // y = u - v with u, v >= 0; inequality rows get a surplus variable.
  const std::size_t nv = h.vars;
  const std::size_t ni = h.rows.size();
  const std::size_t ne = h.equalities.size();
  const std::size_t r = ni + ne;
  const std::size_t n_struct = 2 * nv + ni;
  const std::size_t n_total = n_struct + r;  // plus one artificial per row
  std::vector<RatVec> t(r + 1, RatVec(n_total + 1, Rational(0)));
  for (std::size_t i = 0; i < r; ++i) {
    const RatVec& g = i < ni ? h.rows[i] : h.equalities[i - ni];
    Rational rhs = i < ni ? h.bounds[i] : Rational(0);
    int flip = rhs < 0 ? -1 : 1;
    for (std::size_t k = 0; k < nv; ++k) {
      t[i][k] = flip * g[k];
      t[i][nv + k] = -flip * g[k];
    }
    if (i < ni) t[i][2 * nv + i] = -flip;
    t[i][n_struct + i] = 1;
    t[i][n_total] = flip * rhs;
  }
  std::vector<std::size_t> basis(r);
  for (std::size_t i = 0; i < r; ++i) basis[i] = n_struct + i;
  RatVec& obj = t[r];
  for (std::size_t j = 0; j <= n_total; ++j) {
    if (j >= n_struct && j < n_total) continue;
    for (std::size_t i = 0; i < r; ++i) obj[j] -= t[i][j];
  }
  while (true) {
    std::size_t enter = n_total;
    for (std::size_t j = 0; j < n_total; ++j)
      if (obj[j] < 0) {
        enter = j;
        break;
      }
    if (enter == n_total) break;
    std::size_t leave = r;
    Rational best;
    for (std::size_t i = 0; i < r; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][n_total] / t[i][enter];
      if (leave == r || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == r) break;  // unbounded phase-one objective cannot occur
    Rational piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    for (std::size_t i = 0; i <= r; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rational f = t[i][enter];
      for (std::size_t j = 0; j <= n_total; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  if (obj[n_total] != 0) return std::nullopt;
  RatVec sol(n_total, Rational(0));
  for (std::size_t i = 0; i < r; ++i) sol[basis[i]] = t[i][n_total];
  RatVec y(nv);
  for (std::size_t k = 0; k < nv; ++k) y[k] = sol[k] - sol[nv + k];
  return y;
}

}  // namespace

std::optional<RatVec> feasible(const LinearSystem& sys, FeasibilityMethod method) {
  Homogeneous h = homogenize(sys);
  if (method == FeasibilityMethod::Auto)
    method = h.vars <= 3 ? FeasibilityMethod::FourierMotzkin : FeasibilityMethod::Simplex;
  std::optional<RatVec> y = method == FeasibilityMethod::FourierMotzkin ? solve_fourier_motzkin(h)
                                                                         : solve_simplex(h);
  if (!y) return std::nullopt;
  RatVec x(sys.vars);
  for (std::size_t i = 0; i < sys.vars; ++i) x[i] = (*y)[i + 1] / (*y)[0];
  if (!satisfies(sys, x)) throw std::logic_error("feasible: witness fails its own constraints");
  return x;
}

}  // namespace tits
