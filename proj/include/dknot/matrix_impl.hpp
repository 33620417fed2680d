#pragma once

// Template definitions for matrix.hpp; include via matrix.hpp only.

namespace dknot {

template <typename T>
T field_determinant(Matrix<T> m) {
  if (!m.is_square()) throw DimensionMismatch("determinant of non-square");
  const std::size_t n = m.rows();
  T det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m.at(piv, col) == T()) ++piv;
    if (piv == n) return T();
    if (piv != col) {
      for (std::size_t j = col; j < n; ++j) {
        T tmp = m.at(col, j);
        m.at(col, j) = m.at(piv, j);
        m.at(piv, j) = tmp;
      }
      det = -det;
    }
    const T pivot = m.at(col, col);
    det = det * pivot;
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m.at(row, col) == T()) continue;
      T factor = m.at(row, col) / pivot;
      for (std::size_t j = col; j < n; ++j) {
        m.at(row, j) = m.at(row, j) - factor * m.at(col, j);
      }
    }
  }
  return det;
}

template <typename T>
Matrix<T> field_solve(const Matrix<T>& m, const Matrix<T>& rhs) {
  if (!m.is_square()) throw DimensionMismatch("solve with non-square matrix");
  if (m.rows() != rhs.rows()) throw DimensionMismatch("solve shapes disagree");
  const std::size_t n = m.rows();
  const std::size_t w = rhs.cols();
  Matrix<T> a(n, n + w);
  a.set_block(0, 0, m);
  a.set_block(0, n, rhs);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a.at(piv, col) == T()) ++piv;
    if (piv == n) throw DegenerateForm();
    if (piv != col) {
      for (std::size_t j = 0; j < n + w; ++j) {
        T tmp = a.at(col, j);
        a.at(col, j) = a.at(piv, j);
        a.at(piv, j) = tmp;
      }
    }
    const T pivot = a.at(col, col);
    for (std::size_t j = col; j < n + w; ++j) {
      a.at(col, j) = a.at(col, j) / pivot;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a.at(row, col) == T()) continue;
      T factor = a.at(row, col);
      for (std::size_t j = col; j < n + w; ++j) {
        a.at(row, j) = a.at(row, j) - factor * a.at(col, j);
      }
    }
  }
  return a.block(0, n, n, w);
}

template <typename T>
Matrix<T> field_inverse(const Matrix<T>& m) {
  return field_solve(m, Matrix<T>::identity(m.rows()));
}

template <typename T>
std::size_t field_rank(Matrix<T> m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && m.at(piv, col) == T()) ++piv;
    if (piv == rows) continue;
    if (piv != rank) {
      for (std::size_t j = col; j < cols; ++j) {
        T tmp = m.at(rank, j);
        m.at(rank, j) = m.at(piv, j);
        m.at(piv, j) = tmp;
      }
    }
    const T pivot = m.at(rank, col);
    for (std::size_t row = rank + 1; row < rows; ++row) {
      if (m.at(row, col) == T()) continue;
      T factor = m.at(row, col) / pivot;
      for (std::size_t j = col; j < cols; ++j) {
        m.at(row, j) = m.at(row, j) - factor * m.at(rank, j);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace dknot
