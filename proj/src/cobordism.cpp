#include "dknot/cobordism.hpp"

#include "dknot/factor.hpp"

namespace dknot {

SeifertData block_sum(const SeifertData& a, const SeifertData& b) {
  if (a.n_parity != b.n_parity) throw ParityMismatch();
  SeifertData r;
  r.n_parity = a.n_parity;
  r.theta = IntMatrix(a.dim() + b.dim(), a.dim() + b.dim());
  r.theta.set_block(0, 0, a.theta);
  r.theta.set_block(a.dim(), a.dim(), b.theta);
  return r;
}

SeifertData negate(const SeifertData& a) {
  SeifertData r = a;
  r.theta = -a.theta;
  return r;
}

bool check_null_cobordance_witness(const RatMatrix& a,
                                   const CobordismWitness& w) {
  if (!a.is_square()) throw DimensionMismatch("witness ambient not square");
  if (a.rows() != w.ambient_dim) {
    throw DimensionMismatch("witness ambient dimension disagrees with matrix");
  }
  if (a.rows() % 2 != 0 || w.basis.size() != a.rows() / 2) {
    throw DimensionMismatch("witness must have half-dimension many vectors");
  }
  const std::size_t n = a.rows();
  const std::size_t r = w.basis.size();
  RatMatrix vecs(n, r);
  for (std::size_t j = 0; j < r; ++j) {
    if (w.basis[j].size() != n) {
      throw DimensionMismatch("witness vector length disagrees with ambient");
    }
    for (std::size_t i = 0; i < n; ++i) vecs.at(i, j) = w.basis[j][i];
  }
  if (field_rank(vecs) != r) return false;
  RatMatrix gram = vecs.transpose() * a * vecs;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if (gram.at(i, j) != 0) return false;
    }
  }
  return true;
}

ObstructionReport obstruction_suite(const SeifertData& a) {
  ValidityReport validity = validate(a);
  if (!validity.verdict) throw InvalidCandidate(validity.failure_reason());
  ObstructionReport rep;
  rep.dim_even = a.dim() % 2 == 0;
  if (a.n_parity == Parity::even) {
    IntMatrix sym = a.theta + a.theta.transpose();
    rep.signature_zero = signature(to_rational(sym)) == 0;
  }
  RatLaurent alex = alexander_determinant(a);
  rep.fox_milnor = fox_milnor_test(alex).passes;
  // det(-theta + (-1)^n theta') must be plus or minus a perfect square.
  const int sign = plus_minus_n(a.n_parity);
  RatMatrix at_minus_one =
      -to_rational(a.theta) + to_rational(a.theta).transpose().scaled(Rat(sign));
  Rat det = at_minus_one.is_empty() ? Rat(1) : field_determinant(at_minus_one);
  rep.det_at_minus_one_square = is_perfect_square(det.get_num());
  if (!rep.dim_even) {
    rep.obstructed = true;
    rep.reason = "odd dimension";
  } else if (rep.signature_zero.has_value() && !*rep.signature_zero) {
    rep.obstructed = true;
    rep.reason = "nonzero signature";
  } else if (!rep.fox_milnor) {
    rep.obstructed = true;
    rep.reason = "Alexander polynomial fails the conjugate-product test";
  } else if (!rep.det_at_minus_one_square) {
    rep.obstructed = true;
    rep.reason = "determinant at t=-1 is not plus or minus a square";
  }
  return rep;
}

ObstructionReport cobordant_obstructions(const SeifertData& a,
                                         const SeifertData& b) {
  if (a.n_parity != b.n_parity) throw ParityMismatch();
  return obstruction_suite(block_sum(a, negate(b)));
}

SurgeryShape surgery_shape(const SeifertData& m, const SeifertData& enlarged) {
  if (m.n_parity != enlarged.n_parity) throw NotAnEnlargement();
  const std::size_t k = m.dim();
  if (enlarged.dim() != k + 2) throw NotAnEnlargement();
  const IntMatrix& e = enlarged.theta;
  SurgeryShape shape;
  shape.eta.resize(k);
  shape.xi.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (e.at(i, j) != m.theta.at(i, j)) throw NotAnEnlargement();
    }
    if (e.at(i, k) != 0) throw NotAnEnlargement();
    shape.eta[i] = e.at(i, k + 1);
    if (e.at(k, i) != 0) throw NotAnEnlargement();
    shape.xi[i] = e.at(k + 1, i);
  }
  if (e.at(k, k) != 0) throw NotAnEnlargement();
  shape.x = e.at(k, k + 1);
  shape.x_prime = e.at(k + 1, k);
  shape.y = e.at(k + 1, k + 1);
  const bool one_zero = (shape.x == 0) != (shape.x_prime == 0);
  if (!one_zero) throw NotAnEnlargement();
  return shape;
}

CobordismWitness enlargement_cobordism_witness(const SeifertData& m,
                                               const SeifertData& enlarged) {
  surgery_shape(m, enlarged);  // throws unless the shape matches
  const std::size_t k = m.dim();
  CobordismWitness w;
  w.ambient_dim = 2 * k + 2;
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Rat> v(w.ambient_dim, Rat(0));
    v[j] = 1;
    v[k + j] = 1;
    w.basis.push_back(v);
  }
  std::vector<Rat> last(w.ambient_dim, Rat(0));
  last[2 * k] = 1;
  w.basis.push_back(last);
  return w;
}

static void check_combo_blocks(const SeifertData& a0, const SeifertData& a1,
                               const ComboBlocks& b, std::size_t& r0,
                               std::size_t& r1, std::size_t& s) {
  if (a0.n_parity != a1.n_parity) throw ParityMismatch();
  r0 = a0.dim();
  r1 = a1.dim();
  s = b.x3.rows();
  auto expect = [](const RatMatrix& m, std::size_t rows, std::size_t cols,
                   const char* name) {
    if (m.rows() != rows || m.cols() != cols) {
      throw BlockShapeError(std::string(name) + " has the wrong shape");
    }
  };
  expect(b.x1, r0, s, "X1");
  expect(b.x2, r1, s, "X2");
  expect(b.x3, s, s, "X3");
  expect(b.x4, s, r0, "X4");
  expect(b.x5, s, r1, "X5");
  expect(b.x6, s, s, "X6");
  expect(b.x7, s, s, "X7");
}

RatMatrix assemble_combo_matrix(const SeifertData& a0, const SeifertData& a1,
                                const ComboBlocks& blocks) {
  std::size_t r0, r1, s;
  check_combo_blocks(a0, a1, blocks, r0, r1, s);
  const std::size_t r = r0 + r1;
  RatMatrix m(r + 2 * s, r + 2 * s);
  m.set_block(0, 0, to_rational(a0.theta));
  m.set_block(r0, r0, -to_rational(a1.theta));
  m.set_block(0, r + s, blocks.x1);
  m.set_block(r0, r + s, blocks.x2);
  m.set_block(r, r + s, blocks.x3);
  m.set_block(r + s, 0, blocks.x4);
  m.set_block(r + s, r0, blocks.x5);
  m.set_block(r + s, r, blocks.x6);
  m.set_block(r + s, r + s, blocks.x7);
  return m;
}

RatMatrix combo_ambient_matrix(const SeifertData& a0, const SeifertData& a1,
                               const ComboBlocks& blocks) {
  RatMatrix m = assemble_combo_matrix(a0, a1, blocks);
  const std::size_t r = a0.dim() + a1.dim();
  RatMatrix ambient(2 * r + 2 * blocks.x3.rows(), 2 * r + 2 * blocks.x3.rows());
  ambient.set_block(0, 0, -to_rational(a0.theta));
  ambient.set_block(a0.dim(), a0.dim(), to_rational(a1.theta));
  ambient.set_block(r, r, m);
  return ambient;
}

CobordismWitness combo_matrix_witness(const SeifertData& a0,
                                      const SeifertData& a1,
                                      const ComboBlocks& blocks) {
  std::size_t r0, r1, s;
  check_combo_blocks(a0, a1, blocks, r0, r1, s);
  const std::size_t r = r0 + r1;
  CobordismWitness w;
  w.ambient_dim = 2 * r + 2 * s;
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<Rat> v(w.ambient_dim, Rat(0));
    v[j] = 1;
    v[r + j] = 1;
    w.basis.push_back(v);
  }
  for (std::size_t j = 0; j < s; ++j) {
    std::vector<Rat> v(w.ambient_dim, Rat(0));
    v[2 * r + j] = 1;
    w.basis.push_back(v);
  }
  return w;
}

}  // namespace dknot
