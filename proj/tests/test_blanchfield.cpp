#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "dknot/blanchfield.hpp"
#include "dknot/sequiv.hpp"
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

RationalFunction rf(const RatLaurent& n, const RatLaurent& d) {
  return RationalFunction(n, d);
}

Rat eval_at_one(const IntLaurent& p) {
  Rat acc;
  for (const auto& [e, c] : p.coeffs()) acc += Rat(c);
  return acc;
}

}  // namespace

TEST_CASE("trefoil pairing matrix matches the closed form") {
  SeifertData s = make({{-1, 1}, {0, -1}}, Parity::odd);
  QfMatrix b = pairing_matrix(s);
  RatLaurent t = RatLaurent::variable();
  RatLaurent one(Rat(1));
  RatLaurent tm1 = t - one;
  RatLaurent delta = t * t - t + one;
  CHECK(b.at(0, 0) == rf(tm1 * tm1, delta));
  CHECK(b.at(0, 1) == rf(t * tm1, delta));
  CHECK(b.at(1, 0) == rf(-tm1, delta));
  CHECK(b.at(1, 1) == rf(tm1 * tm1, delta));
}

TEST_CASE("presentation entries are integral with unimodular value at t=1") {
  Rng rng(1414);
  for (int trial = 0; trial < 60; ++trial) {
    SeifertData s = random_valid_seifert(rng);
    IntLaurentMatrix m = presentation_matrix(s);
    IntMatrix at_one(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        Rat v = eval_at_one(m.at(i, j));
        REQUIRE(is_integer(v));
        at_one.at(i, j) = v.get_num();
      }
    }
    Rat det = field_determinant(to_rational(at_one));
    CHECK((det == 1 || det == -1));
    // The determinant of M(t) is a unit multiple of the Alexander
    // determinant.
    RationalFunction det_m = field_determinant(to_function_matrix(m));
    RatLaurent delta = alexander_determinant(s);
    REQUIRE(det_m.den().is_constant());
    RatLaurent det_poly = det_m.num() *
                          RatLaurent(Rat(1) / det_m.den().coeff(0));
    CHECK(similar(det_poly, delta, Ring::rational));
  }
}

TEST_CASE("pairing matrix is hermitian up to the parity sign") {
  Rng rng(1515);
  for (int trial = 0; trial < 40; ++trial) {
    SeifertData s = random_valid_nonsingular(rng);
    const Rat sign(plus_minus_n1(s.n_parity));
    QfMatrix b = pairing_matrix(s);
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) {
        CHECK(b.at(j, i).conjugate() ==
              b.at(i, j) * RationalFunction(sign));
      }
    }
  }
}

TEST_CASE("trace of the pairing recovers the rational scalar form") {
  Rng rng(1616);
  for (int trial = 0; trial < 60; ++trial) {
    SeifertData s = random_valid_nonsingular(rng);
    BlanchfieldForm b = blanchfield_form(s);
    CHECK(trace_form(b) == scalar_form(s));
  }
}

TEST_CASE("adjoint matrix W is integral and has the closed form") {
  Rng rng(1717);
  for (int trial = 0; trial < 40; ++trial) {
    SeifertData s = random_valid_seifert(rng);
    IntLaurentMatrix w = consistency_w(s);
    // W = (-1)^(n+1) (t^-1 - 1) R.
    RatMatrix r = derive_r(s);
    const Rat sign(plus_minus_n1(s.n_parity));
    for (std::size_t i = 0; i < w.rows(); ++i) {
      for (std::size_t j = 0; j < w.cols(); ++j) {
        Rat rij = r.at(i, j) * sign;
        REQUIRE(is_integer(rij));
        IntLaurent expect = IntLaurent::term(rij.get_num(), -1);
        expect.add_term(0, -rij.get_num());
        CHECK(w.at(i, j) == expect);
      }
    }
  }
}

TEST_CASE("invalid candidates are refused") {
  SeifertData s = make({{1}}, Parity::even);
  CHECK_THROWS_AS(presentation_matrix(s), InvalidCandidate);
  CHECK_THROWS_AS(pairing_matrix(s), InvalidCandidate);
}

TEST_CASE("the empty candidate yields empty forms") {
  SeifertData s = make({}, Parity::odd);
  BlanchfieldForm b = blanchfield_form(s);
  CHECK(b.presentation.rows() == 0);
  CHECK(b.pairing.rows() == 0);
  CHECK(trace_form(b).rows() == 0);
}
