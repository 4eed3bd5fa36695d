#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace tits {

using Rational = mpq_class;
using Integer = mpz_class;
using RatVec = std::vector<Rational>;

// Accepts "p", "-p", "p/q". Anything else (decimals, exponents, q = 0) throws
// std::invalid_argument.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);
std::string to_string(const RatVec& v);

Rational dot(const RatVec& a, const RatVec& b);
bool is_zero(const RatVec& v);

// Dense rational matrix, row major.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::vector<RatVec> rows, std::size_t cols);

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return data_.size(); }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i][j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i][j]; }

  const RatVec& row(std::size_t i) const { return data_[i]; }
  const std::vector<RatVec>& row_data() const { return data_; }
  void append_row(RatVec r);

  RatMatrix transpose() const;
  RatMatrix operator*(const RatMatrix& other) const;
  RatVec apply(const RatVec& x) const;  // this * x

  bool operator==(const RatMatrix& other) const;

 private:
  std::vector<RatVec> data_;
  std::size_t cols_ = 0;
};

struct RrefResult {
  RatMatrix form;                    // zero rows removed
  std::vector<std::size_t> pivots;  // pivot column of each row
};

RrefResult rref_with_pivots(const RatMatrix& m);
RatMatrix rref(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);

// Rows form a basis of {x : m x = 0}.
RatMatrix nullspace(const RatMatrix& m);

// Some x with m x = b, or nothing.
std::optional<RatVec> solve(const RatMatrix& m, const RatVec& b);

Rational determinant(RatMatrix m);

struct Signature {
  int n_pos = 0;
  int n_neg = 0;
  int n_zero = 0;
  bool operator==(const Signature&) const = default;
};

// Sylvester signature of the symmetric form restricted to the row space of
// basis. Throws std::invalid_argument on dimension mismatch.
Signature signature_on_subspace(const RatMatrix& form, const RatMatrix& basis);

// Sign of det[p1-p0, ..., pn-p0] for n+1 chart points in Q^n.
int orientation_sign_affine(const std::vector<RatVec>& points);
// Sign of det[x0, ..., xn] for n+1 vectors in Q^(n+1).
int orientation_sign_linear(const std::vector<RatVec>& vectors);

// Constraint rows are affine: row = (c, a1..ak) stands for c + a.x.
// Strict rows must be > 0, nonstrict >= 0, equalities = 0.
struct LinearSystem {
  std::size_t vars = 0;
  std::vector<RatVec> strict;
  std::vector<RatVec> nonstrict;
  std::vector<RatVec> equalities;
};

enum class FeasibilityMethod { Auto, FourierMotzkin, Simplex };

// A witness x in Q^vars, or nothing when infeasible. Deterministic.
std::optional<RatVec> feasible(const LinearSystem& sys,
                               FeasibilityMethod method = FeasibilityMethod::Auto);

bool satisfies(const LinearSystem& sys, const RatVec& x);

}  // namespace tits
