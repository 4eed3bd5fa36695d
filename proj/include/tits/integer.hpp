#pragma once

#include <map>
#include <optional>
#include <vector>

#include "tits/exact.hpp"

namespace tits {

// Dense integer matrix.
struct ZMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<Integer>> a;

  ZMatrix() = default;
  ZMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r, std::vector<Integer>(c, 0)) {}
  static ZMatrix identity(std::size_t n);
  static ZMatrix from_columns(const std::vector<std::vector<Integer>>& columns, std::size_t rows);

  Integer& operator()(std::size_t i, std::size_t j) { return a[i][j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return a[i][j]; }

  std::vector<Integer> column(std::size_t j) const;
  ZMatrix operator*(const ZMatrix& o) const;
  std::vector<Integer> apply(const std::vector<Integer>& x) const;
  ZMatrix hstack(const ZMatrix& o) const;
  bool operator==(const ZMatrix& o) const = default;
};

// Sparse integer matrix, stored by columns. Used for every boundary operator.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void add(std::size_t r, std::size_t c, const Integer& v);
  Integer at(std::size_t r, std::size_t c) const;
  const std::map<std::size_t, Integer>& column(std::size_t c) const { return data_[c]; }
  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  IntMatrix operator*(const IntMatrix& o) const;
  ZMatrix to_dense() const;
  static IntMatrix from_dense(const ZMatrix& m);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::map<std::size_t, Integer>> data_;
};

struct SnfResult {
  std::vector<Integer> invariant_factors;  // d1 | d2 | ... | dr, all positive
  std::size_t rank = 0;
  std::optional<ZMatrix> left;   // left * m * right = diag(d1..dr)
  std::optional<ZMatrix> right;
};

// Invariant factors only. Unit pivots are eliminated sparsely first; the
// remainder goes through the dense smallest-pivot reduction.
SnfResult smith_normal_form(const IntMatrix& m);

// Dense reduction with unimodular certificates.
SnfResult smith_normal_form_certified(const ZMatrix& m);

// Columns form a Z-basis of {x : m x = 0}.
ZMatrix kernel_basis(const ZMatrix& m);

// Some integer x with m x = b, or nothing.
std::optional<std::vector<Integer>> solve_integer(const ZMatrix& m, const std::vector<Integer>& b);

// Canonical basis (Hermite normal form, as columns) of the lattice spanned by
// the columns of gens. Two generating sets span the same lattice iff their
// canonical bases coincide.
ZMatrix lattice_basis(const ZMatrix& gens);
bool same_lattice(const ZMatrix& a, const ZMatrix& b);
bool lattice_contains(const ZMatrix& gens, const std::vector<Integer>& v);

// True iff the columns span a saturated sublattice, i.e. every invariant
// factor is 1.
bool is_saturated(const ZMatrix& gens);

}  // namespace tits
