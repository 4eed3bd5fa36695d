#include "tits/integer.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tits {

ZMatrix ZMatrix::identity(std::size_t n) {
  ZMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ZMatrix ZMatrix::from_columns(const std::vector<std::vector<Integer>>& columns, std::size_t rows) {
  ZMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw std::invalid_argument("from_columns: height mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

std::vector<Integer> ZMatrix::column(std::size_t j) const {
  std::vector<Integer> c(rows);
  for (std::size_t i = 0; i < rows; ++i) c[i] = a[i][j];
  return c;
}

ZMatrix ZMatrix::operator*(const ZMatrix& o) const {
  if (cols != o.rows) throw std::invalid_argument("ZMatrix product: shape mismatch");
  ZMatrix p(rows, o.cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < o.cols; ++j) p(i, j) += a[i][k] * o(k, j);
    }
  return p;
}

std::vector<Integer> ZMatrix::apply(const std::vector<Integer>& x) const {
  if (x.size() != cols) throw std::invalid_argument("ZMatrix apply: size mismatch");
  std::vector<Integer> y(rows, 0);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) y[i] += a[i][j] * x[j];
  return y;
}

ZMatrix ZMatrix::hstack(const ZMatrix& o) const {
  if (rows != o.rows) throw std::invalid_argument("hstack: height mismatch");
  ZMatrix m(rows, cols + o.cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = a[i][j];
    for (std::size_t j = 0; j < o.cols; ++j) m(i, cols + j) = o(i, j);
  }
  return m;
}

void IntMatrix::add(std::size_t r, std::size_t c, const Integer& v) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("IntMatrix::add");
  if (v == 0) return;
  auto& col = data_[c];
  auto it = col.find(r);
  if (it == col.end()) {
    col.emplace(r, v);
  } else {
    it->second += v;
    if (it->second == 0) col.erase(it);
  }
}

Integer IntMatrix::at(std::size_t r, std::size_t c) const {
  auto it = data_.at(c).find(r);
  return it == data_[c].end() ? Integer(0) : it->second;
}

std::size_t IntMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : data_) n += c.size();
  return n;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix product: shape mismatch");
  IntMatrix p(rows_, o.cols_);
  for (std::size_t j = 0; j < o.cols_; ++j)
    for (const auto& [k, v] : o.data_[j])
      for (const auto& [i, w] : data_[k]) p.add(i, j, v * w);
  return p;
}

ZMatrix IntMatrix::to_dense() const {
  ZMatrix m(rows_, cols_);
  for (std::size_t j = 0; j < cols_; ++j)
    for (const auto& [i, v] : data_[j]) m(i, j) = v;
  return m;
}

IntMatrix IntMatrix::from_dense(const ZMatrix& m) {
  IntMatrix s(m.rows, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) s.add(i, j, m(i, j));
  return s;
}

namespace {

// Dense smallest-pivot reduction. When track is set, left/right accumulate
// the row and column operations.
std::vector<Integer> dense_snf(ZMatrix a, ZMatrix* left, ZMatrix* right) {
  const std::size_t R = a.rows, C = a.cols;
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a.a[i], a.a[j]);
    if (left) std::swap(left->a[i], left->a[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < R; ++r) std::swap(a(r, i), a(r, j));
    if (right)
      for (std::size_t r = 0; r < C; ++r) std::swap((*right)(r, i), (*right)(r, j));
  };
  // row_i -= q * row_t
  auto row_op = [&](std::size_t i, std::size_t t, const Integer& q) {
    for (std::size_t j = 0; j < C; ++j)
      if (a(t, j) != 0) a(i, j) -= q * a(t, j);
    if (left)
      for (std::size_t j = 0; j < R; ++j)
        if ((*left)(t, j) != 0) (*left)(i, j) -= q * (*left)(t, j);
  };
  // col_j -= q * col_t
  auto col_op = [&](std::size_t j, std::size_t t, const Integer& q) {
    for (std::size_t i = 0; i < R; ++i)
      if (a(i, t) != 0) a(i, j) -= q * a(i, t);
    if (right)
      for (std::size_t i = 0; i < C; ++i)
        if ((*right)(i, t) != 0) (*right)(i, j) -= q * (*right)(i, t);
  };

  std::vector<Integer> diag;
  std::size_t t = 0;
  while (t < R && t < C) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pi = R, pj = C;
    for (std::size_t i = t; i < R; ++i)
      for (std::size_t j = t; j < C; ++j)
        if (a(i, j) != 0 && (pi == R || abs(a(i, j)) < abs(a(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == R) break;
    swap_rows(t, pi);
    swap_cols(t, pj);
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (a(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        if (q != 0) row_op(i, t, q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (a(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        if (q != 0) col_op(j, t, q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        // Move the smallest remainder in the pivot row/column onto the pivot.
        std::size_t bi = t, bj = t;
        Integer best = abs(a(t, t));
        for (std::size_t i = t + 1; i < R; ++i)
          if (a(i, t) != 0 && abs(a(i, t)) < best) {
            best = abs(a(i, t));
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < C; ++j)
          if (a(t, j) != 0 && abs(a(t, j)) < best) {
            best = abs(a(t, j));
            bi = t;
            bj = j;
          }
        swap_rows(t, bi);
        swap_cols(t, bj);
        continue;
      }
      // Pivot must divide the whole trailing block.
      std::size_t bad = R;
      for (std::size_t i = t + 1; i < R && bad == R; ++i)
        for (std::size_t j = t + 1; j < C; ++j)
          if (a(i, j) != 0 && !mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == R) break;
      row_op(t, bad, Integer(-1));
    }
    if (a(t, t) < 0) {
      for (std::size_t j = 0; j < C; ++j) a(t, j) = -a(t, j);
      if (left)
        for (std::size_t j = 0; j < R; ++j) (*left)(t, j) = -(*left)(t, j);
    }
    diag.push_back(a(t, t));
    ++t;
  }
  return diag;
}

}  // namespace

SnfResult smith_normal_form_certified(const ZMatrix& m) {
  ZMatrix left = ZMatrix::identity(m.rows);
  ZMatrix right = ZMatrix::identity(m.cols);
  SnfResult res;
  res.invariant_factors = dense_snf(m, &left, &right);
  res.rank = res.invariant_factors.size();
  res.left = std::move(left);
  res.right = std::move(right);
  return res;
}

SnfResult smith_normal_form(const IntMatrix& m) {
  // Row-oriented working copy plus a column -> rows index.
  std::vector<std::map<std::size_t, Integer>> rows(m.rows());
  std::vector<std::set<std::size_t>> col_rows(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& [r, v] : m.column(c)) {
      rows[r].emplace(c, v);
      col_rows[c].insert(r);
    }
  std::vector<bool> row_alive(m.rows(), true);
  std::size_t units = 0;
  bool progress = true;
  while (progress) {
    progress = false;
    // Visit columns by increasing fill so pivots cause little fill-in.
    std::vector<std::size_t> order;
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!col_rows[c].empty()) order.push_back(c);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return col_rows[x].size() < col_rows[y].size();
    });
    for (std::size_t c : order) {
      if (col_rows[c].empty()) continue;
      std::size_t pr = m.rows();
      for (std::size_t r : col_rows[c]) {
        const Integer& v = rows[r].at(c);
        if (v != 1 && v != -1) continue;
        if (pr == m.rows() || rows[r].size() < rows[pr].size()) pr = r;
      }
      if (pr == m.rows()) continue;
      const Integer pv = rows[pr].at(c);
      std::vector<std::size_t> targets(col_rows[c].begin(), col_rows[c].end());
      for (std::size_t r : targets) {
        if (r == pr) continue;
        Integer f = rows[r].at(c) * pv;  // pv is a unit
        for (const auto& [cc, vv] : rows[pr]) {
          auto it = rows[r].find(cc);
          if (it == rows[r].end()) {
            rows[r].emplace(cc, -f * vv);
            col_rows[cc].insert(r);
          } else {
            it->second -= f * vv;
            if (it->second == 0) {
              rows[r].erase(it);
              col_rows[cc].erase(r);
            }
          }
        }
      }
      for (const auto& [cc, vv] : rows[pr]) col_rows[cc].erase(pr);
      rows[pr].clear();
      row_alive[pr] = false;
      ++units;
      progress = true;
    }
  }
  // Remaining block goes dense.
  std::vector<std::size_t> live_rows, live_cols;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (!rows[r].empty()) live_rows.push_back(r);
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!col_rows[c].empty()) live_cols.push_back(c);
  SnfResult res;
  res.invariant_factors.assign(units, Integer(1));
  if (!live_rows.empty()) {
    std::map<std::size_t, std::size_t> col_pos;
    for (std::size_t k = 0; k < live_cols.size(); ++k) col_pos[live_cols[k]] = k;
    ZMatrix d(live_rows.size(), live_cols.size());
    for (std::size_t k = 0; k < live_rows.size(); ++k)
      for (const auto& [c, v] : rows[live_rows[k]]) d(k, col_pos[c]) = v;
    for (auto& f : dense_snf(std::move(d), nullptr, nullptr)) res.invariant_factors.push_back(f);
  }
  res.rank = res.invariant_factors.size();
  return res;
}

ZMatrix kernel_basis(const ZMatrix& m) {
  SnfResult s = smith_normal_form_certified(m);
  const ZMatrix& v = *s.right;
  ZMatrix k(m.cols, m.cols - s.rank);
  for (std::size_t j = s.rank; j < m.cols; ++j)
    for (std::size_t i = 0; i < m.cols; ++i) k(i, j - s.rank) = v(i, j);
  return k;
}

std::optional<std::vector<Integer>> solve_integer(const ZMatrix& m, const std::vector<Integer>& b) {
  if (b.size() != m.rows) throw std::invalid_argument("solve_integer: size mismatch");
  SnfResult s = smith_normal_form_certified(m);
  std::vector<Integer> c = s.left->apply(b);
  std::vector<Integer> w(m.cols, 0);
  for (std::size_t i = 0; i < m.rows; ++i) {
    if (i < s.rank) {
      if (!mpz_divisible_p(c[i].get_mpz_t(), s.invariant_factors[i].get_mpz_t())) return std::nullopt;
      w[i] = c[i] / s.invariant_factors[i];
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return s.right->apply(w);
}

ZMatrix lattice_basis(const ZMatrix& gens) {
  // Row-style Hermite form of the generators (one generator per row).
  std::vector<std::vector<Integer>> g(gens.cols, std::vector<Integer>(gens.rows));
  for (std::size_t j = 0; j < gens.cols; ++j)
    for (std::size_t i = 0; i < gens.rows; ++i) g[j][i] = gens(i, j);
  const std::size_t d = gens.rows;
  std::size_t r = 0;
  for (std::size_t c = 0; c < d && r < g.size(); ++c) {
    while (true) {
      std::size_t best = g.size();
      for (std::size_t i = r; i < g.size(); ++i)
        if (g[i][c] != 0 && (best == g.size() || abs(g[i][c]) < abs(g[best][c]))) best = i;
      if (best == g.size()) break;
      std::swap(g[r], g[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < g.size(); ++i) {
        if (g[i][c] == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), g[i][c].get_mpz_t(), g[r][c].get_mpz_t());
        for (std::size_t k = c; k < d; ++k) g[i][k] -= q * g[r][k];
        if (g[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (r >= g.size() || g[r][c] == 0) continue;
    if (g[r][c] < 0)
      for (auto& x : g[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), g[i][c].get_mpz_t(), g[r][c].get_mpz_t());
      if (q != 0)
        for (std::size_t k = c; k < d; ++k) g[i][k] -= q * g[r][k];
    }
    ++r;
  }
  g.resize(r);
  ZMatrix out(d, r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < d; ++i) out(i, j) = g[j][i];
  return out;
}

bool same_lattice(const ZMatrix& a, const ZMatrix& b) {
  if (a.rows != b.rows) return false;
  return lattice_basis(a) == lattice_basis(b);
}

bool lattice_contains(const ZMatrix& gens, const std::vector<Integer>& v) {
  return solve_integer(gens, v).has_value();
}

bool is_saturated(const ZMatrix& gens) {
  SnfResult s = smith_normal_form_certified(gens);
  return std::all_of(s.invariant_factors.begin(), s.invariant_factors.end(),
                     [](const Integer& f) { return f == 1; });
}

}  // namespace tits
