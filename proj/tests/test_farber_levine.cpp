#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "dknot/farber_levine.hpp"
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

const SeifertData kTrefoil = make({{-1, 1}, {0, -1}}, Parity::odd);
const SeifertData kDisk = make({{1, -1}, {2, 1}}, Parity::even);

}  // namespace

TEST_CASE("unimodular R gives the trivial torsion module") {
  FiniteTorsionModule m = torsion_module(kTrefoil);
  CHECK(m.trivial());
  CHECK(m.group_order() == 1);
  CHECK(m.m_exponent == 1);
  CHECK(m.t_order == 1);
  FLPairingTable table = fl_pairing(kTrefoil, m);
  CHECK(table.orders.empty());
  CHECK(table.values.rows() == 0);

  SeifertData upper = make({{0, 1}, {0, 0}}, Parity::odd);
  REQUIRE(validate(upper).verdict);
  CHECK(torsion_module(upper).trivial());
}

TEST_CASE("random unimodular-R inputs give the trivial module") {
  Rng rng(1818);
  int sphere_cases = 0;
  for (int trial = 0; trial < 40; ++trial) {
    SeifertData s = random_valid_seifert(rng, 4);
    if (!validate(s).is_sphere_matrix) continue;
    ++sphere_cases;
    CHECK(torsion_module(s).trivial());
  }
  CHECK(sphere_cases > 5);
}

TEST_CASE("disk candidate torsion module matches the frozen oracle") {
  FiniteTorsionModule m = torsion_module(kDisk);
  REQUIRE(m.smith_diagonal.size() == 1);
  CHECK(m.smith_diagonal[0] == 3);
  CHECK(m.group_order() == 3);
  CHECK(m.m_exponent == 3);
  CHECK(m.t_order == 2);
  REQUIRE(m.t_action.rows() == 1);
  // t acts as multiplication by 2 = -1 on Z/3.
  CHECK(m.t_action.at(0, 0) == 2);
}

TEST_CASE("disk candidate pairing matches the frozen oracle") {
  FiniteTorsionModule m = torsion_module(kDisk);
  FLPairingTable table = fl_pairing(kDisk, m);
  REQUIRE(table.orders.size() == 1);
  CHECK(table.orders[0] == 3);
  // Oracle from exhaustive lift enumeration at m=3, k=2: [x, x] = 2/3, so
  // by bilinearity [x, 2x] = [2x, x] = 1/3 and [2x, 2x] = 2/3.
  CHECK(table.values.at(0, 0) == Rat(2, 3));
}

TEST_CASE("pairing is independent of the m and k multiples used") {
  FiniteTorsionModule m = torsion_module(kDisk);
  for (int a = 1; a <= 2; ++a) {
    for (int b = 1; b <= 2; ++b) {
      CHECK(mk_independence_check(kDisk, m, a, b));
    }
  }
}

TEST_CASE("pairing is independent of the randomized lift") {
  FiniteTorsionModule m = torsion_module(kDisk);
  FLPairingTable base = fl_pairing(kDisk, m);
  for (unsigned seed = 1; seed <= 10; ++seed) {
    FlPairingOptions opt;
    opt.seed = seed;
    opt.random_shifts = 2;
    CHECK(fl_pairing(kDisk, m, opt) == base);
  }
}

TEST_CASE("bounds are enforced") {
  FlBounds tight;
  tight.k_max = 1;
  CHECK_THROWS_AS(torsion_module(kDisk, tight), BoundExceeded);
  FlBounds small_m;
  small_m.m_max = 2;
  CHECK_THROWS_AS(torsion_module(kDisk, small_m), BoundExceeded);
}

TEST_CASE("invalid input is refused") {
  CHECK_THROWS_AS(torsion_module(make({{1}}, Parity::even)), InvalidCandidate);
}

TEST_CASE("cancellation token aborts the computation") {
  CancelToken cancel;
  cancel.request_stop();
  CHECK_THROWS_AS(torsion_module(kDisk, FlBounds{}, &cancel), Cancelled);
}

TEST_CASE("torsion module of random valid candidates is finite and consistent") {
  Rng rng(1919);
  for (int trial = 0; trial < 25; ++trial) {
    SeifertData s = random_valid_seifert(rng, 4);
    FiniteTorsionModule m = torsion_module(s);
    // Group order is the product of invariant factors, which divide in turn.
    Int order(1);
    for (std::size_t i = 0; i < m.smith_diagonal.size(); ++i) {
      CHECK(m.smith_diagonal[i] > 1);
      if (i + 1 < m.smith_diagonal.size()) {
        CHECK(m.smith_diagonal[i + 1] % m.smith_diagonal[i] == 0);
      }
      order *= m.smith_diagonal[i];
    }
    CHECK(order == m.group_order());
    // The exponent is the largest invariant factor.
    Int expect_m = m.smith_diagonal.empty() ? Int(1) : m.smith_diagonal.back();
    CHECK(m.m_exponent == expect_m);
    CHECK(m.t_order >= 1);
    // The pairing table is well-formed and t-invariant input yields values
    // with denominators dividing the generator orders.
    FLPairingTable table = fl_pairing(s, m);
    REQUIRE(table.values.rows() == m.generator_count());
    for (std::size_t i = 0; i < m.generator_count(); ++i) {
      for (std::size_t j = 0; j < m.generator_count(); ++j) {
        const Rat& v = table.values.at(i, j);
        CHECK(v >= 0);
        CHECK(v < 1);
        CHECK(m.m_exponent % v.get_den() == 0);
      }
    }
  }
}
