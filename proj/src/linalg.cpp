#include <algorithm>

#include "dknot/densepoly.hpp"
#include "dknot/matrix.hpp"

namespace dknot {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = Rat(m.at(i, j));
  }
  return r;
}

std::optional<IntMatrix> to_integral(const RatMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!is_integer(m.at(i, j))) return std::nullopt;
      r.at(i, j) = m.at(i, j).get_num();
    }
  }
  return r;
}

QfMatrix to_function_matrix(const RatMatrix& m) {
  QfMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      r.at(i, j) = RationalFunction(m.at(i, j));
    }
  }
  return r;
}

QfMatrix to_function_matrix(const RatLaurentMatrix& m) {
  QfMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      r.at(i, j) = RationalFunction(m.at(i, j));
    }
  }
  return r;
}

QfMatrix to_function_matrix(const IntLaurentMatrix& m) {
  return to_function_matrix(to_rational_laurent(m));
}

RatLaurentMatrix to_rational_laurent(const IntLaurentMatrix& m) {
  RatLaurentMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      r.at(i, j) = to_rational_coeffs(m.at(i, j));
    }
  }
  return r;
}

RatLaurentMatrix laurent_matrix_mul(const RatLaurentMatrix& a,
                                    const RatLaurentMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("laurent matrix product shapes disagree");
  }
  RatLaurentMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        r.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  }
  return r;
}

std::optional<RatLaurentMatrix> laurent_entries(const QfMatrix& m, Ring ring) {
  RatLaurentMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      auto entry = laurent_membership(m.at(i, j), ring);
      if (!entry) return std::nullopt;
      r.at(i, j) = *entry;
    }
  }
  return r;
}

int signature(const RatMatrix& symmetric) {
  if (!symmetric.is_square()) {
    throw DimensionMismatch("signature of non-square matrix");
  }
  RatMatrix m = symmetric;
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (m.at(i, j) != m.at(j, i)) {
        throw DimensionMismatch("signature of non-symmetric matrix");
      }
    }
  }
  int sig = 0;
  // Congruence diagonalization: repeatedly produce a nonzero diagonal pivot
  // (adding a row/column if the diagonal is all zero) and clear its row/col.
  std::size_t start = 0;
  while (start < n) {
    std::size_t piv = n;
    for (std::size_t i = start; i < n; ++i) {
      if (m.at(i, i) != 0) {
        piv = i;
        break;
      }
    }
    if (piv == n) {
      // Diagonal all zero on the active block; find an off-diagonal entry.
      std::size_t a = n, b = n;
      for (std::size_t i = start; i < n && a == n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (m.at(i, j) != 0) {
            a = i;
            b = j;
            break;
          }
        }
      }
      if (a == n) break;  // active block is zero; contributes nothing
      // Congruence: add row/col b to row/col a, making m[a][a] = 2*m[a][b].
      for (std::size_t j = 0; j < n; ++j) m.at(a, j) += m.at(b, j);
      for (std::size_t i = 0; i < n; ++i) m.at(i, a) += m.at(i, b);
      piv = a;
    }
    if (piv != start) {
      // Symmetric swap of rows/cols piv and start.
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(start, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(m.at(i, piv), m.at(i, start));
    }
    const Rat d = m.at(start, start);
    sig += d > 0 ? 1 : -1;
    for (std::size_t i = start + 1; i < n; ++i) {
      if (m.at(i, start) == 0) continue;
      Rat factor = m.at(i, start) / d;
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) -= factor * m.at(start, j);
      for (std::size_t j = 0; j < n; ++j) m.at(j, i) -= factor * m.at(j, start);
    }
    ++start;
  }
  return sig;
}

SmithResult smith_form(const IntMatrix& a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  IntMatrix m = a;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < cols; ++k) std::swap(m.at(i, k), m.at(j, k));
    for (std::size_t k = 0; k < rows; ++k) std::swap(u.at(i, k), u.at(j, k));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < rows; ++k) std::swap(m.at(k, i), m.at(k, j));
    for (std::size_t k = 0; k < cols; ++k) std::swap(v.at(k, i), v.at(k, j));
  };
  auto add_row = [&](std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t k = 0; k < cols; ++k) m.at(dst, k) += c * m.at(src, k);
    for (std::size_t k = 0; k < rows; ++k) u.at(dst, k) += c * u.at(src, k);
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t k = 0; k < rows; ++k) m.at(k, dst) += c * m.at(k, src);
    for (std::size_t k = 0; k < cols; ++k) v.at(k, dst) += c * v.at(k, src);
  };
  auto negate_row = [&](std::size_t i) {
    for (std::size_t k = 0; k < cols; ++k) m.at(i, k) = -m.at(i, k);
    for (std::size_t k = 0; k < rows; ++k) u.at(i, k) = -u.at(i, k);
  };

  const std::size_t limit = std::min(rows, cols);
  std::size_t t = 0;
  for (; t < limit; ++t) {
    // Find the nonzero entry of smallest absolute value in the active block.
    bool found = false;
    std::size_t pi = t, pj = t;
    Int best(0);
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        const Int& x = m.at(i, j);
        if (x == 0) continue;
        if (!found || cmp(abs(x), abs(best)) < 0) {
          best = x;
          pi = i;
          pj = j;
          found = true;
        }
      }
    }
    if (!found) break;
    swap_rows(t, pi);
    swap_cols(t, pj);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m.at(i, t) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), m.at(i, t).get_mpz_t(),
                   m.at(t, t).get_mpz_t());
        add_row(i, t, -q);
        if (m.at(i, t) != 0) {
          swap_rows(t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m.at(t, j) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), m.at(t, j).get_mpz_t(),
                   m.at(t, t).get_mpz_t());
        add_col(j, t, -q);
        if (m.at(t, j) != 0) {
          swap_cols(t, j);
          clean = false;
        }
      }
    }
    if (m.at(t, t) < 0) negate_row(t);
  }
  // Enforce the divisibility chain d1 | d2 | ...
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < t; ++i) {
      const Int &d1 = m.at(i, i), &d2 = m.at(i + 1, i + 1);
      if (d1 == 0 || d2 % d1 == 0) continue;
      changed = true;
      // Fold the pair (d1, d2) into (gcd, lcm) with explicit transforms.
      add_col(i, i + 1, 1);
      bool clean = false;
      while (!clean) {
        clean = true;
        if (m.at(i + 1, i) != 0) {
          Int q;
          mpz_fdiv_q(q.get_mpz_t(), m.at(i + 1, i).get_mpz_t(),
                     m.at(i, i).get_mpz_t());
          add_row(i + 1, i, -q);
          if (m.at(i + 1, i) != 0) {
            swap_rows(i, i + 1);
            clean = false;
          }
        }
        if (m.at(i, i + 1) != 0) {
          Int q;
          mpz_fdiv_q(q.get_mpz_t(), m.at(i, i + 1).get_mpz_t(),
                     m.at(i, i).get_mpz_t());
          add_col(i + 1, i, -q);
          if (m.at(i, i + 1) != 0) {
            swap_cols(i, i + 1);
            clean = false;
          }
        }
      }
      if (m.at(i, i) < 0) negate_row(i);
      if (m.at(i + 1, i + 1) < 0) negate_row(i + 1);
    }
  }
  SmithResult result;
  result.u = std::move(u);
  result.v = std::move(v);
  result.diag.assign(limit, Int(0));
  for (std::size_t i = 0; i < limit; ++i) result.diag[i] = m.at(i, i);
  return result;
}

namespace {

// Diagonalizes a matrix of dense rational polynomials by Euclidean row and
// column operations, returning the diagonal entries.
std::vector<DensePoly> poly_diagonalize(std::vector<std::vector<DensePoly>> m) {
  std::vector<DensePoly> diag;
  std::size_t rows = m.size();
  std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Locate the nonzero entry of minimal degree in the active block.
    bool found = false;
    std::size_t pi = t, pj = t;
    int best = -1;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        int d = dense_deg(m[i][j]);
        if (d < 0) continue;
        if (!found || d < best) {
          best = d;
          pi = i;
          pj = j;
          found = true;
        }
      }
    }
    if (!found) break;
    std::swap(m[t], m[pi]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (dense_is_zero(m[i][t])) continue;
        auto [q, r] = dense_divmod(m[i][t], m[t][t]);
        for (std::size_t j = t; j < cols; ++j) {
          m[i][j] = dense_sub(m[i][j], dense_mul(q, m[t][j]));
        }
        if (!dense_is_zero(m[i][t])) {
          std::swap(m[t], m[i]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (dense_is_zero(m[t][j])) continue;
        auto [q, r] = dense_divmod(m[t][j], m[t][t]);
        for (std::size_t i = t; i < rows; ++i) {
          m[i][j] = dense_sub(m[i][j], dense_mul(q, m[i][t]));
        }
        if (!dense_is_zero(m[t][j])) {
          for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
          clean = false;
        }
      }
    }
    diag.push_back(m[t][t]);
    ++t;
  }
  return diag;
}

}  // namespace

bool gamma_cokernel_trivial(const RatLaurentMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return true;
  // Shift every entry so the matrix lives over Q[t]; shifts by powers of t
  // are row operations by units and do not change the cokernel over the
  // Laurent ring.
  std::vector<std::vector<DensePoly>> m(n, std::vector<DensePoly>(a.cols()));
  for (std::size_t i = 0; i < n; ++i) {
    long min_exp = 0;
    bool nonzero = false;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      long e = a.at(i, j).min_exp();
      min_exp = nonzero ? std::min(min_exp, e) : e;
      nonzero = true;
    }
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      long shift = 0;
      m[i][j] = laurent_to_dense(a.at(i, j).shifted(-min_exp), shift);
      if (shift != 0) {
        DensePoly tpow(shift + 1, Rat(0));
        tpow[shift] = Rat(1);
        m[i][j] = dense_mul(m[i][j], tpow);
      }
    }
  }
  std::vector<DensePoly> diag = poly_diagonalize(std::move(m));
  if (diag.size() < n) return false;
  for (const DensePoly& d : diag) {
    // The entry must be a unit of the Laurent ring: a single monomial.
    std::size_t nonzero = 0;
    for (const auto& c : d) {
      if (c != 0) ++nonzero;
    }
    if (nonzero != 1) return false;
  }
  return true;
}

}  // namespace dknot
