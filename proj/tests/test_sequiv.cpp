#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "dknot/json_io.hpp"
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

}  // namespace

TEST_CASE("enlargement followed by reduction restores the matrix") {
  Rng rng(808);
  for (int trial = 0; trial < 40; ++trial) {
    QSeifert s = to_q(random_valid_seifert(rng, 4));
    QSeifert up = apply_move(s, RowEnlargeMove{rand_rat(rng),
                                               rand_rat_vector(rng, s.dim()),
                                               rand_rat_vector(rng, s.dim())});
    CHECK(up.dim() == s.dim() + 2);
    CHECK(apply_move(up, RowReduceMove{}) == s);
    QSeifert up2 = apply_move(s, ColEnlargeMove{rand_rat(rng),
                                                rand_rat_vector(rng, s.dim()),
                                                rand_rat_vector(rng, s.dim())});
    CHECK(apply_move(up2, ColReduceMove{}) == s);
  }
}

TEST_CASE("reduce moves demand the right matrix shape") {
  QSeifert s = to_q(make({{-1, 1}, {0, -1}}, Parity::odd));
  CHECK_THROWS_AS(apply_move(s, RowReduceMove{}), ShapeMismatch);
}

TEST_CASE("congruence moves require an invertible matrix") {
  QSeifert s = to_q(make({{-1, 1}, {0, -1}}, Parity::odd));
  RatMatrix singular(2, 2);
  CHECK_THROWS_AS(apply_move(s, CongruenceMove{singular, Ring::rational}),
                  IllegalMove);
}

TEST_CASE("surgery enlargement move requires exactly one of x, x' zero") {
  QSeifert s = to_q(make({{-1, 1}, {0, -1}}, Parity::odd));
  SurgeryEnlargeMove bad;
  bad.eta = {Rat(0), Rat(0)};
  bad.xi = {Rat(0), Rat(0)};
  bad.x = Rat(1);
  bad.x_prime = Rat(1);
  bad.y = Rat(0);
  CHECK_THROWS_AS(apply_move(s, bad), IllegalMove);
}

TEST_CASE("invariants survive long random move sequences") {
  Rng rng(909);
  for (int base = 0; base < 20; ++base) {
    SeifertData start = random_valid_seifert(rng, 4);
    SequivInvariants inv = sequiv_invariants(start);
    QSeifert cur = to_q(start);
    for (int step = 0; step < 10; ++step) {
      cur = apply_move(cur, random_move(rng, cur.dim()));
      CHECK(sequiv_invariants(cur) == inv);
    }
    CHECK(similar(alexander_determinant_q(cur),
                  alexander_determinant(start), Ring::rational));
  }
}

TEST_CASE("replay verifies a recorded trace and rejects a tampered one") {
  Rng rng(1010);
  SeifertData start = random_valid_seifert(rng, 4);
  MoveTrace trace;
  trace.start = to_q(start);
  QSeifert cur = trace.start;
  for (int step = 0; step < 5; ++step) {
    Move m = random_move(rng, cur.dim());
    trace.moves.push_back(m);
    cur = apply_move(cur, m);
  }
  trace.end = cur;
  CHECK(replay(trace) == cur);
  MoveTrace tampered = trace;
  tampered.end.theta.at(0, 0) += 1;
  CHECK_THROWS(replay(tampered));
}

TEST_CASE("traces round-trip through JSON") {
  Rng rng(1111);
  SeifertData start = random_valid_seifert(rng, 4);
  MoveTrace trace;
  trace.start = to_q(start);
  QSeifert cur = trace.start;
  for (int step = 0; step < 8; ++step) {
    Move m = random_move(rng, cur.dim());
    trace.moves.push_back(m);
    cur = apply_move(cur, m);
  }
  trace.end = cur;
  Json j = trace_to_json(trace);
  MoveTrace back = trace_from_json(parse_json_text(render_report(j)));
  CHECK(back.start == trace.start);
  CHECK(back.end == trace.end);
  CHECK(back.moves.size() == trace.moves.size());
  CHECK(replay(back) == cur);
}

TEST_CASE("reduction strips singular directions and records its trace") {
  Rng rng(1212);
  for (int trial = 0; trial < 25; ++trial) {
    SeifertData base = random_valid_seifert(rng, 4);
    // Make theta singular by a row enlargement (adds a zero row pattern).
    QSeifert singular = apply_move(
        to_q(base), RowEnlargeMove{rand_rat(rng), rand_rat_vector(rng, base.dim()),
                                   rand_rat_vector(rng, base.dim())});
    ReduceResult r = reduce_to_nonsingular(singular);
    if (!r.zero_module) {
      CHECK(field_determinant(r.nonsingular.theta) != 0);
    }
    CHECK(replay(r.trace) == r.trace.end);
    CHECK(r.trace.start == singular);
    // Invariants agree between input and reduced representative.
    CHECK(sequiv_invariants(singular) == sequiv_invariants(r.nonsingular));
  }
}

TEST_CASE("scalar form is the inverse of the symmetrized matrix") {
  Rng rng(1313);
  for (int trial = 0; trial < 30; ++trial) {
    SeifertData s = random_valid_seifert(rng);
    const Rat sign(plus_minus_n1(s.n_parity));
    RatMatrix theta = to_rational(s.theta);
    RatMatrix sym = theta.transpose() - theta.scaled(sign);
    CHECK(scalar_form(s) * sym == RatMatrix::identity(s.dim()));
  }
}
