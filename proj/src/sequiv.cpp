#include "dknot/sequiv.hpp"

namespace dknot {

QSeifert to_q(const SeifertData& s) { return {to_rational(s.theta), s.n_parity}; }

namespace {

QSeifert apply_congruence(const QSeifert& s, const CongruenceMove& m) {
  if (!m.p.is_square() || m.p.rows() != s.dim()) {
    throw ShapeMismatch("congruence matrix has the wrong size");
  }
  Rat det = m.p.is_empty() ? Rat(1) : field_determinant(m.p);
  if (det == 0) throw IllegalMove("congruence matrix is singular");
  if (m.ring == Ring::integer) {
    if (!to_integral(m.p)) {
      throw IllegalMove("integral congruence with non-integer entries");
    }
    if (det != 1 && det != -1) {
      throw IllegalMove("integral congruence must have determinant +-1");
    }
  }
  return {m.p.transpose() * s.theta * m.p, s.n_parity};
}

QSeifert apply_row_enlarge(const QSeifert& s, const RowEnlargeMove& m) {
  const std::size_t n = s.dim();
  if (m.u.size() != n || m.v.size() != n) {
    throw ShapeMismatch("enlargement vectors have the wrong length");
  }
  RatMatrix t(n + 2, n + 2);
  t.at(1, 0) = 1;
  t.at(1, 1) = m.x;
  for (std::size_t j = 0; j < n; ++j) {
    t.at(1, j + 2) = m.u[j];
    t.at(j + 2, 1) = m.v[j];
  }
  t.set_block(2, 2, s.theta);
  return {t, s.n_parity};
}

QSeifert apply_col_enlarge(const QSeifert& s, const ColEnlargeMove& m) {
  const std::size_t n = s.dim();
  if (m.u.size() != n || m.v.size() != n) {
    throw ShapeMismatch("enlargement vectors have the wrong length");
  }
  RatMatrix t(n + 2, n + 2);
  t.at(0, 1) = 1;
  t.at(1, 1) = m.x;
  for (std::size_t j = 0; j < n; ++j) {
    t.at(1, j + 2) = m.v[j];
    t.at(j + 2, 1) = m.u[j];
  }
  t.set_block(2, 2, s.theta);
  return {t, s.n_parity};
}

QSeifert apply_row_reduce(const QSeifert& s) {
  const std::size_t n = s.dim();
  if (n < 2) throw ShapeMismatch("matrix too small to reduce");
  const RatMatrix& t = s.theta;
  for (std::size_t j = 0; j < n; ++j) {
    if (t.at(0, j) != 0) throw ShapeMismatch("first row is not zero");
  }
  if (t.at(1, 0) != 1) throw ShapeMismatch("pivot entry is not 1");
  for (std::size_t i = 2; i < n; ++i) {
    if (t.at(i, 0) != 0) throw ShapeMismatch("first column not supported on pivot");
  }
  return {t.block(2, 2, n - 2, n - 2), s.n_parity};
}

QSeifert apply_col_reduce(const QSeifert& s) {
  const std::size_t n = s.dim();
  if (n < 2) throw ShapeMismatch("matrix too small to reduce");
  const RatMatrix& t = s.theta;
  for (std::size_t i = 0; i < n; ++i) {
    if (t.at(i, 0) != 0) throw ShapeMismatch("first column is not zero");
  }
  if (t.at(0, 1) != 1) throw ShapeMismatch("pivot entry is not 1");
  for (std::size_t j = 2; j < n; ++j) {
    if (t.at(0, j) != 0) throw ShapeMismatch("first row not supported on pivot");
  }
  return {t.block(2, 2, n - 2, n - 2), s.n_parity};
}

QSeifert apply_surgery(const QSeifert& s, const SurgeryEnlargeMove& m) {
  const std::size_t n = s.dim();
  if (m.eta.size() != n || m.xi.size() != n) {
    throw ShapeMismatch("surgery border vectors have the wrong length");
  }
  const bool one_zero = (m.x == 0) != (m.x_prime == 0);
  if (!one_zero) {
    throw IllegalMove("surgery enlargement needs exactly one of x, x' zero");
  }
  RatMatrix t(n + 2, n + 2);
  t.set_block(0, 0, s.theta);
  for (std::size_t i = 0; i < n; ++i) {
    t.at(i, n + 1) = m.eta[i];
    t.at(n + 1, i) = m.xi[i];
  }
  t.at(n, n + 1) = m.x;
  t.at(n + 1, n) = m.x_prime;
  t.at(n + 1, n + 1) = m.y;
  return {t, s.n_parity};
}

}  // namespace

QSeifert apply_move(const QSeifert& s, const Move& m) {
  return std::visit(
      [&](const auto& mv) -> QSeifert {
        using T = std::decay_t<decltype(mv)>;
        if constexpr (std::is_same_v<T, CongruenceMove>) {
          return apply_congruence(s, mv);
        } else if constexpr (std::is_same_v<T, RowEnlargeMove>) {
          return apply_row_enlarge(s, mv);
        } else if constexpr (std::is_same_v<T, ColEnlargeMove>) {
          return apply_col_enlarge(s, mv);
        } else if constexpr (std::is_same_v<T, RowReduceMove>) {
          return apply_row_reduce(s);
        } else if constexpr (std::is_same_v<T, ColReduceMove>) {
          return apply_col_reduce(s);
        } else {
          return apply_surgery(s, mv);
        }
      },
      m);
}

QSeifert apply_move(const SeifertData& s, const Move& m) {
  return apply_move(to_q(s), m);
}

QSeifert replay(const MoveTrace& trace) {
  QSeifert cur = trace.start;
  for (const Move& m : trace.moves) cur = apply_move(cur, m);
  if (!(cur == trace.end)) throw Error("move trace does not replay to its end");
  return cur;
}

RatLaurent alexander_determinant_q(const QSeifert& s) {
  const int sign = plus_minus_n(s.n_parity);
  const std::size_t n = s.dim();
  if (n == 0) return RatLaurent(Rat(1));
  QfMatrix m(n, n);
  RationalFunction t{RatLaurent::variable()};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m.at(i, j) = RationalFunction(s.theta.at(i, j)) * t +
                   RationalFunction(Rat(sign) * s.theta.at(j, i));
    }
  }
  auto poly = laurent_membership(field_determinant(m), Ring::rational);
  if (!poly) throw Error("determinant of polynomial matrix not polynomial");
  return *poly;
}

namespace {

// Finds a nonzero rational kernel vector of a singular square matrix.
std::vector<Rat> kernel_vector(const RatMatrix& m) {
  const std::size_t n = m.rows();
  RatMatrix a = m;
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t piv = rank;
    while (piv < n && a.at(piv, col) == 0) ++piv;
    if (piv == n) continue;
    if (piv != rank) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(rank, j), a.at(piv, j));
    }
    const Rat p = a.at(rank, col);
    for (std::size_t j = 0; j < n; ++j) a.at(rank, j) /= p;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == rank || a.at(i, col) == 0) continue;
      Rat f = a.at(i, col);
      for (std::size_t j = 0; j < n; ++j) a.at(i, j) -= f * a.at(rank, j);
    }
    pivot_col.push_back(col);
    ++rank;
  }
  // Pick the first non-pivot column as the free variable.
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  std::size_t free_col = n;
  for (std::size_t c = 0; c < n; ++c) {
    if (!is_pivot[c]) {
      free_col = c;
      break;
    }
  }
  if (free_col == n) throw Error("kernel of nonsingular matrix requested");
  std::vector<Rat> z(n, Rat(0));
  z[free_col] = 1;
  for (std::size_t r = 0; r < pivot_col.size(); ++r) {
    z[pivot_col[r]] = -a.at(r, free_col);
  }
  return z;
}

}  // namespace

ReduceResult reduce_to_nonsingular(const QSeifert& s) {
  ReduceResult result;
  result.trace.start = s;
  QSeifert cur = s;
  while (cur.dim() > 0) {
    Rat det = field_determinant(cur.theta);
    if (det != 0) break;
    const std::size_t n = cur.dim();
    if (n == 1) break;  // the 1x1 zero matrix presents the 0 module
    std::vector<Rat> z = kernel_vector(cur.theta);
    // Basis with z first: replace the unit vector at z's first support index.
    std::size_t pivot = 0;
    while (z[pivot] == 0) ++pivot;
    RatMatrix q(n, n);
    for (std::size_t i = 0; i < n; ++i) q.at(i, 0) = z[i];
    std::size_t col = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == pivot) continue;
      q.at(i, col) = 1;
      ++col;
    }
    RatMatrix t = q.transpose() * cur.theta * q;
    // First column of t is zero; the first row is nonzero because R is
    // nonsingular. Normalize the first row to (0 1 0 ... 0) by further
    // column congruences folded into q.
    std::size_t j = 1;
    while (j < n && t.at(0, j) == 0) ++j;
    if (j == n) throw Error("reduction stalled: degenerate R");
    if (j != 1) {
      for (std::size_t i = 0; i < n; ++i) std::swap(q.at(i, 1), q.at(i, j));
      t = q.transpose() * cur.theta * q;
    }
    const Rat c = t.at(0, 1);
    for (std::size_t i = 0; i < n; ++i) q.at(i, 1) /= c;
    t = q.transpose() * cur.theta * q;
    for (std::size_t k = 2; k < n; ++k) {
      const Rat f = t.at(0, k);
      if (f == 0) continue;
      for (std::size_t i = 0; i < n; ++i) q.at(i, k) -= f * q.at(i, 1);
    }
    CongruenceMove cm{q, Ring::rational};
    result.trace.moves.push_back(cm);
    cur = apply_move(cur, Move(cm));
    result.trace.moves.push_back(ColReduceMove{});
    cur = apply_move(cur, Move(ColReduceMove{}));
  }
  result.trace.end = cur;
  const bool zero_terminal =
      cur.dim() == 0 || (cur.dim() == 1 && cur.theta.at(0, 0) == 0);
  result.zero_module = zero_terminal;
  result.nonsingular = cur;
  return result;
}

ReduceResult reduce_to_nonsingular(const SeifertData& s) {
  ValidityReport rep = validate(s);
  if (!rep.verdict) throw InvalidCandidate(rep.failure_reason());
  return reduce_to_nonsingular(to_q(s));
}

RatMatrix scalar_form(const QSeifert& s) {
  const int sign = plus_minus_n1(s.n_parity);
  RatMatrix form = s.theta.transpose() - s.theta.scaled(Rat(sign));
  if (form.is_empty()) return form;
  if (field_determinant(form) == 0) throw DegenerateForm();
  return field_inverse(form);
}

RatMatrix scalar_form(const SeifertData& s) { return scalar_form(to_q(s)); }

SequivInvariants sequiv_invariants(const QSeifert& s) {
  SequivInvariants inv;
  inv.alexander = similarity_normalize(alexander_determinant_q(s), Ring::rational);
  ReduceResult red = reduce_to_nonsingular(s);
  const QSeifert& ns = red.zero_module
                           ? QSeifert{RatMatrix(), s.n_parity}
                           : red.nonsingular;
  inv.dim_of_nonsingular_rep = ns.dim();
  const int sign = plus_minus_n1(s.n_parity);
  RatMatrix neg_r = ns.theta.transpose() - ns.theta.scaled(Rat(sign));
  Rat det = neg_r.is_empty() ? Rat(1) : field_determinant(neg_r);
  inv.det_class = Rat(squarefree_part(det.get_num() * det.get_den()));
  if (s.n_parity == Parity::even) {
    inv.signature = neg_r.is_empty() ? 0 : signature(neg_r);
  }
  return inv;
}

SequivInvariants sequiv_invariants(const SeifertData& s) {
  ValidityReport rep = validate(s);
  if (!rep.verdict) throw InvalidCandidate(rep.failure_reason());
  return sequiv_invariants(to_q(s));
}

}  // namespace dknot
