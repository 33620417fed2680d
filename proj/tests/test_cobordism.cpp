#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "dknot/cobordism.hpp"
#include "doctest.h"
#include "support/generators.hpp"

using namespace dknot;
using namespace dknot::testsupport;

namespace {

SeifertData make(std::vector<std::vector<int>> rows, Parity p) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
  }
  return SeifertData{m, p};
}

ComboBlocks random_blocks(Rng& rng, std::size_t r0, std::size_t r1,
                          std::size_t s) {
  auto mat = [&](std::size_t rr, std::size_t cc) {
    RatMatrix m(rr, cc);
    for (std::size_t i = 0; i < rr; ++i) {
      for (std::size_t j = 0; j < cc; ++j) m.at(i, j) = rand_rat(rng);
    }
    return m;
  };
  ComboBlocks b;
  b.x1 = mat(r0, s);
  b.x2 = mat(r1, s);
  b.x3 = mat(s, s);
  b.x4 = mat(s, r0);
  b.x5 = mat(s, r1);
  b.x6 = mat(s, s);
  b.x7 = mat(s, s);
  return b;
}

}  // namespace

TEST_CASE("trefoil is obstructed by Fox-Milnor") {
  SeifertData s = make({{-1, 1}, {0, -1}}, Parity::odd);
  ObstructionReport r = obstruction_suite(s);
  CHECK(r.obstructed);
  CHECK(!r.fox_milnor);
  // det at -1 is 3, not a square.
  CHECK(!r.det_at_minus_one_square);
  CHECK(r.verdict_string().rfind("obstructed(", 0) == 0);
}

TEST_CASE("a knot is possibly cobordant to itself") {
  SeifertData s = make({{-1, 1}, {0, -1}}, Parity::odd);
  ObstructionReport r = cobordant_obstructions(s, s);
  CHECK(!r.obstructed);
  CHECK(r.verdict_string() == "possibly_null_cobordant");
}

TEST_CASE("block sum with the negation passes every obstruction") {
  Rng rng(505);
  for (int trial = 0; trial < 100; ++trial) {
    SeifertData a = random_valid_seifert(rng);
    ObstructionReport r = obstruction_suite(block_sum(a, negate(a)));
    CHECK(!r.obstructed);
    CHECK(r.fox_milnor);
    CHECK(r.det_at_minus_one_square);
    if (r.signature_zero) CHECK(*r.signature_zero);
  }
}

TEST_CASE("block sum demands matching parity") {
  SeifertData a = make({{-1, 1}, {0, -1}}, Parity::odd);
  SeifertData b = make({{1, -1}, {2, 1}}, Parity::even);
  CHECK_THROWS_AS(block_sum(a, b), ParityMismatch);
}

TEST_CASE("witness checker accepts only genuinely metabolic data") {
  // Hyperbolic form with the standard half-dimensional zero subspace.
  RatMatrix h(2, 2);
  h.at(0, 1) = Rat(1);
  CobordismWitness good{2, {{Rat(1), Rat(0)}}};
  CHECK(check_null_cobordance_witness(h, good));
  RatMatrix d = RatMatrix::identity(2);
  CHECK(!check_null_cobordance_witness(d, good));
  // Dependent vectors are rejected even when the form vanishes on them.
  RatMatrix z(4, 4);
  CobordismWitness dependent{4,
                             {{Rat(1), Rat(0), Rat(0), Rat(0)},
                              {Rat(2), Rat(0), Rat(0), Rat(0)}}};
  CHECK(!check_null_cobordance_witness(z, dependent));
  CobordismWitness wrong_count{4, {{Rat(1), Rat(0), Rat(0), Rat(0)}}};
  CHECK_THROWS_AS(check_null_cobordance_witness(z, wrong_count),
                  DimensionMismatch);
}

TEST_CASE("surgery enlargement yields a checkable cobordism witness") {
  Rng rng(606);
  for (int trial = 0; trial < 100; ++trial) {
    SeifertData m = random_valid_seifert(rng, 4);
    SeifertData e = surgery_enlarged(rng, m);
    SurgeryShape shape = surgery_shape(m, e);
    CHECK((shape.x == 0) != (shape.x_prime == 0));
    CobordismWitness w = enlargement_cobordism_witness(m, e);
    RatMatrix ambient = to_rational(block_sum(negate(m), e).theta);
    CHECK(check_null_cobordance_witness(ambient, w));
  }
}

TEST_CASE("surgery_shape rejects a non-enlargement") {
  SeifertData m = make({{-1, 1}, {0, -1}}, Parity::odd);
  SeifertData bad = make({{-1, 1, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 1},
                          {0, 0, 1, 1}},
                         Parity::odd);
  CHECK_THROWS_AS(surgery_shape(m, bad), NotAnEnlargement);
}

TEST_CASE("combination construction yields a checkable witness") {
  Rng rng(707);
  for (int trial = 0; trial < 100; ++trial) {
    SeifertData a0 = random_valid_seifert(rng, 4);
    SeifertData a1 = random_valid_dim2(rng, a0.n_parity);
    std::size_t s = 1 + (trial % 2);
    ComboBlocks blocks = random_blocks(rng, a0.dim(), a1.dim(), s);
    CobordismWitness w = combo_matrix_witness(a0, a1, blocks);
    RatMatrix ambient = combo_ambient_matrix(a0, a1, blocks);
    CHECK(check_null_cobordance_witness(ambient, w));
  }
}
