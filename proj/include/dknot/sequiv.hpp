#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "dknot/seifert.hpp"

namespace dknot {

// Rational working form of a Seifert matrix: move applications (notably
// rational congruence) leave the integers, so the move engine operates on
// rational matrices. Integral data embeds via to_q.
struct QSeifert {
  RatMatrix theta;
  Parity n_parity = Parity::odd;

  std::size_t dim() const { return theta.rows(); }

  bool operator==(const QSeifert& o) const {
    return n_parity == o.n_parity && theta == o.theta;
  }
};

QSeifert to_q(const SeifertData& s);

// Moves generating rational S-equivalence.
struct CongruenceMove {
  RatMatrix p;  // theta -> p' * theta * p
  Ring ring = Ring::rational;
};

// B -> (0 0 0 / 1 x u / 0 v B): first row zero, pivot 1 below it.
struct RowEnlargeMove {
  Rat x;
  std::vector<Rat> u;  // rest of the pivot row
  std::vector<Rat> v;  // rest of the second column
};

// Transpose pattern: B -> (0 1 0 / 0 x v / 0 u B).
struct ColEnlargeMove {
  Rat x;
  std::vector<Rat> v;  // rest of the pivot-adjacent row
  std::vector<Rat> u;  // rest of the second column
};

struct RowReduceMove {};
struct ColReduceMove {};

// M -> (M 0 eta / 0 0 x / xi x' y); exactly one of x, x' must be zero.
struct SurgeryEnlargeMove {
  std::vector<Rat> eta;
  std::vector<Rat> xi;
  Rat x, x_prime, y;
};

using Move = std::variant<CongruenceMove, RowEnlargeMove, ColEnlargeMove,
                          RowReduceMove, ColReduceMove, SurgeryEnlargeMove>;

QSeifert apply_move(const QSeifert& s, const Move& m);
QSeifert apply_move(const SeifertData& s, const Move& m);

struct MoveTrace {
  QSeifert start;
  std::vector<Move> moves;
  QSeifert end;
};

// Applies the trace's moves to its start and verifies the recorded end is
// reproduced exactly; returns the end state.
QSeifert replay(const MoveTrace& trace);

struct ReduceResult {
  bool zero_module = false;  // true when the matrix presents the 0 module
  QSeifert nonsingular;      // meaningful when zero_module is false
  MoveTrace trace;
};

// Iteratively strips two dimensions by congruence + column reduction while
// det(theta) = 0. Requires det(R) nonzero throughout (guaranteed for valid
// input); the SeifertData overload insists on a fully valid candidate.
ReduceResult reduce_to_nonsingular(const QSeifert& s);
ReduceResult reduce_to_nonsingular(const SeifertData& s);

// Exact inverse of theta' - (-1)^(n+1) theta; throws DegenerateForm.
RatMatrix scalar_form(const QSeifert& s);
RatMatrix scalar_form(const SeifertData& s);

struct SequivInvariants {
  SimilarityClass alexander;
  std::size_t dim_of_nonsingular_rep = 0;
  std::optional<int> signature;  // engaged when n is even
  Rat det_class;                 // squarefree representative mod squares

  bool operator==(const SequivInvariants& o) const {
    return alexander == o.alexander &&
           dim_of_nonsingular_rep == o.dim_of_nonsingular_rep &&
           signature == o.signature && det_class == o.det_class;
  }
};

SequivInvariants sequiv_invariants(const QSeifert& s);
SequivInvariants sequiv_invariants(const SeifertData& s);

// det(theta*t + (-1)^n theta') for a rational matrix.
RatLaurent alexander_determinant_q(const QSeifert& s);

}  // namespace dknot
