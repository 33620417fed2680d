#pragma once

#include <cstddef>
#include <vector>

#include "dknot/errors.hpp"
#include "dknot/laurent.hpp"
#include "dknot/numeric.hpp"
#include "dknot/rational_function.hpp"

namespace dknot {

// Dense rectangular matrix over an exact coefficient type. 0x0 matrices are
// first-class values (they are the unit of block sums).
template <typename T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, T()) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_empty() const { return rows_ == 0 || cols_ == 0; }

  T& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Matrix transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    }
    return m;
  }

  Matrix operator+(const Matrix& o) const {
    require_same_shape(o);
    Matrix m(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) {
      m.data_[i] = data_[i] + o.data_[i];
    }
    return m;
  }

  Matrix operator-(const Matrix& o) const {
    require_same_shape(o);
    Matrix m(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) {
      m.data_[i] = data_[i] - o.data_[i];
    }
    return m;
  }

  Matrix operator-() const {
    Matrix m(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = -data_[i];
    return m;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) {
      throw DimensionMismatch("matrix product shapes disagree");
    }
    Matrix m(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = at(i, k);
        if (a == T()) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          m.at(i, j) = m.at(i, j) + a * o.at(k, j);
        }
      }
    }
    return m;
  }

  Matrix scaled(const T& s) const {
    Matrix m(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] * s;
    return m;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  // Copies src into this matrix with top-left corner at (i0, j0).
  void set_block(std::size_t i0, std::size_t j0, const Matrix& src) {
    for (std::size_t i = 0; i < src.rows_; ++i) {
      for (std::size_t j = 0; j < src.cols_; ++j) {
        at(i0 + i, j0 + j) = src.at(i, j);
      }
    }
  }

  Matrix block(std::size_t i0, std::size_t j0, std::size_t rows,
               std::size_t cols) const {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = at(i0 + i, j0 + j);
    }
    return m;
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw DimensionMismatch("matrix shapes disagree");
    }
  }

  std::size_t rows_, cols_;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;
using QfMatrix = Matrix<RationalFunction>;
using IntLaurentMatrix = Matrix<IntLaurent>;
using RatLaurentMatrix = Matrix<RatLaurent>;

// --- Conversions -----------------------------------------------------------

RatMatrix to_rational(const IntMatrix& m);
std::optional<IntMatrix> to_integral(const RatMatrix& m);
QfMatrix to_function_matrix(const RatMatrix& m);
QfMatrix to_function_matrix(const RatLaurentMatrix& m);
QfMatrix to_function_matrix(const IntLaurentMatrix& m);
RatLaurentMatrix to_rational_laurent(const IntLaurentMatrix& m);

// --- Field linear algebra (T = Rat or RationalFunction) --------------------

// Determinant by fraction-preserving Gaussian elimination; 0x0 gives 1.
template <typename T>
T field_determinant(Matrix<T> m);

// Inverse of a square matrix; throws DegenerateForm when singular.
template <typename T>
Matrix<T> field_inverse(const Matrix<T>& m);

template <typename T>
std::size_t field_rank(Matrix<T> m);

// Solves m * x = rhs (m square nonsingular).
template <typename T>
Matrix<T> field_solve(const Matrix<T>& m, const Matrix<T>& rhs);

// --- Exact symmetric-form invariants ---------------------------------------

// Signature of a symmetric rational matrix, computed by exact congruence
// diagonalization (no floating point).
int signature(const RatMatrix& symmetric);

// --- Smith normal form over the integers -----------------------------------

struct SmithResult {
  IntMatrix u;           // unimodular, rows x rows
  IntMatrix v;           // unimodular, cols x cols
  std::vector<Int> diag;  // nonnegative, d1 | d2 | ..., u*A*v = diag
};

SmithResult smith_form(const IntMatrix& a);

// --- Module checks over Q[t, 1/t] -----------------------------------------

// True when the columns of a (an n x m matrix of Laurent polynomials over Q)
// generate all of Q[t,1/t]^n, i.e. the cokernel vanishes.
bool gamma_cokernel_trivial(const RatLaurentMatrix& a);

// Laurent-polynomial matrix product and helpers used by module presentations.
RatLaurentMatrix laurent_matrix_mul(const RatLaurentMatrix& a,
                                    const RatLaurentMatrix& b);

// Extracts the Laurent-polynomial entries of a rational-function matrix;
// absent if any entry has a nontrivial denominator (or, for Ring::integer,
// a non-integer coefficient).
std::optional<RatLaurentMatrix> laurent_entries(const QfMatrix& m, Ring ring);

}  // namespace dknot

#include "dknot/matrix_impl.hpp"
