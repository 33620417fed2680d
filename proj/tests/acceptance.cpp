// End-to-end acceptance checks. Each numbered criterion prints exactly one
// PASS/FAIL line; the process exits nonzero when any criterion fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "dknot/blanchfield.hpp"
#include "dknot/cobordism.hpp"
#include "dknot/farber_levine.hpp"
#include "dknot/sequiv.hpp"
#include "support/generators.hpp"

using namespace dknot;
using namespace dknot::testsupport;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, double time_limit_s,
               const std::function<void()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string error;
  try {
    body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  double dt =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  std::ostringstream line;
  if (error.empty() && dt <= time_limit_s) {
    line << "PASS criterion " << number << ": " << title << " ("
         << static_cast<long>(dt * 1000) << " ms)";
  } else {
    ++failures;
    line << "FAIL criterion " << number << ": " << title;
    if (!error.empty()) line << " -- " << error;
    if (dt > time_limit_s) {
      line << " -- exceeded time limit (" << static_cast<long>(dt * 1000)
           << " ms > " << static_cast<long>(time_limit_s * 1000) << " ms)";
    }
  }
  std::cout << line.str() << "\n";
}

void require(bool cond, const std::string& what) {
  if (!cond) throw std::runtime_error(what);
}

SeifertData make(std::vector<std::vector<int>> rows, Parity p) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
  }
  return SeifertData{m, p};
}

const SeifertData kTrefoil = make({{-1, 1}, {0, -1}}, Parity::odd);
const SeifertData kDisk = make({{1, -1}, {2, 1}}, Parity::even);

void c1_trefoil_pipeline() {
  ValidityReport r = validate(kTrefoil);
  require(r.verdict, "trefoil must validate");
  require(r.is_sphere_matrix, "trefoil must be a sphere matrix");
  require(alexander_polynomial(kTrefoil).to_string() == "t^2 - t + 1",
          "wrong Alexander polynomial");
  RatLaurent delta = alexander_determinant(kTrefoil);
  Rat at_minus_one = delta.evaluate(Rat(-1));
  require(at_minus_one == 3 || at_minus_one == -3,
          "determinant at -1 must be +-3");
  ObstructionReport o = obstruction_suite(kTrefoil);
  require(!o.fox_milnor, "Fox-Milnor must fail for the trefoil");
  require(!o.det_at_minus_one_square, "3 is not +- a square");
  require(o.obstructed, "trefoil must be obstructed");
}

void c2_non_sphere_candidate() {
  ValidityReport r = validate(kDisk);
  require(r.verdict, "disk candidate must validate");
  require(!r.is_sphere_matrix, "disk candidate is not a sphere matrix");
  Rat det_r = field_determinant(derive_r(kDisk));
  require(det_r == 3 || det_r == -3, "det R must be +-3");
  require(alexander_polynomial(kDisk).to_string() == "t^2 - t + 1",
          "wrong Alexander polynomial");
}

void c3_trace_theorem() {
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    SeifertData s = random_valid_nonsingular(rng, 6);
    if (trace_form(blanchfield_form(s)) != scalar_form(s)) {
      throw std::runtime_error("trace form mismatch on trial " +
                               std::to_string(trial));
    }
  }
}

void c4_move_invariance() {
  Rng rng(41);
  int moves_applied = 0;
  for (int base = 0; base < 50; ++base) {
    SeifertData start = random_valid_seifert(rng, 4);
    SequivInvariants inv = sequiv_invariants(start);
    SimilarityClass alex =
        similarity_normalize(alexander_determinant(start), Ring::rational);
    QSeifert cur = to_q(start);
    for (int step = 0; step < 10; ++step) {
      cur = apply_move(cur, random_move(rng, cur.dim()));
      ++moves_applied;
      if (sequiv_invariants(cur) != inv) {
        throw std::runtime_error("invariants changed under a move");
      }
      RatLaurent det = alexander_determinant_q(cur);
      if (similarity_normalize(det, Ring::rational) != alex) {
        throw std::runtime_error("Alexander class changed under a move");
      }
    }
  }
  require(moves_applied >= 500, "not enough moves exercised");
}

void c5_witness_constructions() {
  Rng rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    SeifertData m = random_valid_seifert(rng, 4);
    SeifertData e = surgery_enlarged(rng, m);
    CobordismWitness w = enlargement_cobordism_witness(m, e);
    RatMatrix ambient = to_rational(block_sum(negate(m), e).theta);
    require(check_null_cobordance_witness(ambient, w),
            "enlargement witness rejected");
  }
  for (int trial = 0; trial < 100; ++trial) {
    SeifertData a0 = random_valid_seifert(rng, 4);
    SeifertData a1 = random_valid_dim2(rng, a0.n_parity);
    std::size_t s = 1 + (trial % 2);
    auto mat = [&](std::size_t rr, std::size_t cc) {
      RatMatrix m(rr, cc);
      for (std::size_t i = 0; i < rr; ++i) {
        for (std::size_t j = 0; j < cc; ++j) m.at(i, j) = rand_rat(rng);
      }
      return m;
    };
    ComboBlocks blocks{mat(a0.dim(), s), mat(a1.dim(), s), mat(s, s),
                       mat(s, a0.dim()), mat(s, a1.dim()), mat(s, s),
                       mat(s, s)};
    CobordismWitness w = combo_matrix_witness(a0, a1, blocks);
    require(check_null_cobordance_witness(combo_ambient_matrix(a0, a1, blocks),
                                          w),
            "combo witness rejected");
  }
}

void c6_null_sums() {
  Rng rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    SeifertData a = random_valid_seifert(rng, 4);
    ObstructionReport r = obstruction_suite(block_sum(a, negate(a)));
    require(!r.obstructed, "A + (-A) must pass every obstruction");
    require(r.fox_milnor, "Fox-Milnor must pass on A + (-A)");
  }
}

void c7_presentation_integrality() {
  Rng rng(71);
  for (int trial = 0; trial < 150; ++trial) {
    SeifertData s = random_valid_seifert(rng, 6);
    // presentation_matrix throws on any non-integral entry; re-derive the
    // t=1 unimodularity here as well.
    IntLaurentMatrix m = presentation_matrix(s);
    RatMatrix at_one(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        Rat acc;
        for (const auto& [e, c] : m.at(i, j).coeffs()) acc += Rat(c);
        at_one.at(i, j) = acc;
      }
    }
    Rat det = field_determinant(at_one);
    require(det == 1 || det == -1, "det M(1) must be +-1");
  }
}

void c8_farber_levine() {
  require(torsion_module(kTrefoil).trivial(),
          "unimodular R must give the trivial module");
  Rng rng(81);
  int sphere_cases = 0;
  while (sphere_cases < 20) {
    SeifertData s = random_valid_seifert(rng, 4);
    if (!validate(s).is_sphere_matrix) continue;
    ++sphere_cases;
    require(torsion_module(s).trivial(),
            "unimodular R must give the trivial module");
  }
  FiniteTorsionModule m = torsion_module(kDisk);
  require(m.smith_diagonal.size() == 1 && m.smith_diagonal[0] == 3,
          "module must be Z/3");
  require(m.m_exponent == 3 && m.t_order == 2, "m=3, k=2 expected");
  require(m.t_action.at(0, 0) == 2, "t must act as -1 on Z/3");
  FLPairingTable table = fl_pairing(kDisk, m);
  require(table.values.at(0, 0) == Rat(2, 3),
          "oracle pairing value [x,x] = 2/3");
  for (int a = 1; a <= 2; ++a) {
    for (int b = 1; b <= 2; ++b) {
      require(mk_independence_check(kDisk, m, a, b),
              "pairing must not depend on the m,k multiples");
    }
  }
  for (unsigned seed = 1; seed <= 10; ++seed) {
    FlPairingOptions opt;
    opt.seed = seed;
    opt.random_shifts = 2;
    require(fl_pairing(kDisk, m, opt) == table,
            "pairing must not depend on the randomized lift");
  }
}

void c9_even_dimension_theorem() {
  Rng rng(91);
  int samples = 0;
  while (samples < 10000) {
    std::size_t dim = 1 + 2 * (samples % 3);  // 1, 3, 5
    Parity parity = random_parity(rng);
    SeifertData s{random_int_matrix(rng, dim), parity};
    ValidityReport r = validate(s);
    if (parity == Parity::odd) {
      ++samples;
      require(!r.verdict, "odd-dimensional candidate passed with n odd");
    } else if (r.r_nondegenerate) {
      Rat det_r = field_determinant(derive_r(s));
      if (det_r.get_num() % 2 != 0) {
        ++samples;
        require(!r.verdict,
                "odd-dimensional candidate passed with n even, det R odd");
      }
    }
  }
}

}  // namespace

int main() {
  criterion(1, "trefoil pipeline", 1.0, c1_trefoil_pipeline);
  criterion(2, "non-sphere disk candidate", 1.0, c2_non_sphere_candidate);
  criterion(3, "trace of the pairing equals the scalar form", 30.0,
            c3_trace_theorem);
  criterion(4, "invariants survive random moves", 30.0, c4_move_invariance);
  criterion(5, "witness constructions verify", 10.0, c5_witness_constructions);
  criterion(6, "null sums pass every obstruction", 20.0, c6_null_sums);
  criterion(7, "presentation integrality and unimodularity at t=1", 30.0,
            c7_presentation_integrality);
  criterion(8, "finite torsion module and linking pairing", 60.0,
            c8_farber_levine);
  criterion(9, "even-dimension rejection", 30.0, c9_even_dimension_theorem);
  if (failures == 0) {
    std::cout << "all acceptance criteria passed\n";
    return 0;
  }
  std::cout << failures << " acceptance criteria failed\n";
  return 1;
}
