#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <gmpxx.h>

#include "gbg/complex.hpp"

namespace gbg {

/// Dense exact integer matrix, row-major.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpz_class& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

struct SmithForm {
  /// Nonzero invariant factors d1 | d2 | ..., all positive.
  std::vector<mpz_class> factors;
  /// With transforms: U * M * V is diagonal with the factors leading.
  std::optional<IntegerMatrix> U;
  std::optional<IntegerMatrix> V;
};

SmithForm smith_normal_form(const IntegerMatrix& m, bool with_transforms = false);

/// Sparse integer matrix as coordinate triplets (row, col, value).
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::tuple<std::size_t, std::size_t, long long>> entries;

  IntegerMatrix dense() const;
};

/// Nonzero invariant factors of a sparse matrix. Unit pivots are eliminated
/// sparsely in 64-bit arithmetic (restarting with arbitrary precision on
/// overflow); whatever remains goes through the dense Smith form.
std::vector<mpz_class> invariant_factors(const SparseMatrix& m);

/// Product of two sparse matrices; used for the boundary-squared check.
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

/// Cellular boundary maps; element k-1 is d_k : C_k -> C_{k-1}. Cube
/// (B, M) maps to sum_i (-1)^i (face at hi end of e_i - face at lo end),
/// e_1 < e_2 < ... the moving edges. Verifies d_{k-1} d_k = 0. Throws
/// ValidationError on a capped complex.
std::vector<SparseMatrix> boundary_matrices(const CubeComplex& cc);

struct HomologyProfile {
  std::vector<long long> betti;
  std::vector<std::vector<mpz_class>> torsion;  // per degree, factors > 1
  long long euler = 0;

  bool torsion_free() const;
};

HomologyProfile homology(const CubeComplex& cc);

std::string homology_json(const HomologyProfile& h);
/// "rows cols nnz" header then one "r c v" line per entry.
std::string triplets_text(const SparseMatrix& m);

}  // namespace gbg
