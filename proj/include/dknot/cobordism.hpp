#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dknot/seifert.hpp"

namespace dknot {

// A certificate that a square rational matrix of dimension 2r is metabolic:
// r independent vectors spanning a subspace on which the form vanishes.
struct CobordismWitness {
  std::size_t ambient_dim = 0;
  std::vector<std::vector<Rat>> basis;  // column vectors, length ambient_dim
};

struct ObstructionReport {
  bool dim_even = false;
  std::optional<bool> signature_zero;  // engaged only when n is even
  bool fox_milnor = false;
  bool det_at_minus_one_square = false;
  bool obstructed = false;
  std::string reason;  // first failed check when obstructed

  std::string verdict_string() const {
    return obstructed ? "obstructed(" + reason + ")" : "possibly_null_cobordant";
  }
};

// Block-diagonal sum; requires equal parity.
SeifertData block_sum(const SeifertData& a, const SeifertData& b);

// Entrywise negation (the inverse in the cobordism semigroup).
SeifertData negate(const SeifertData& a);

// True iff the witness vectors are independent and x'Ay = 0 for all pairs
// from the witness basis (both orders). Throws DimensionMismatch when the
// ambient dimensions disagree or the count is not half the dimension.
bool check_null_cobordance_witness(const RatMatrix& a,
                                   const CobordismWitness& w);

// Runs the implemented obstructions to null-cobordance. Throws
// InvalidCandidate when validate fails.
ObstructionReport obstruction_suite(const SeifertData& a);

// Obstructions to a and b being cobordant: obstruction_suite on a + (-b).
ObstructionReport cobordant_obstructions(const SeifertData& a,
                                         const SeifertData& b);

// Shape data of a surgery enlargement: enlarged = (M 0 eta / 0 0 x /
// xi x' y) where exactly one of x, x' is zero.
struct SurgeryShape {
  std::vector<Int> eta;  // column, length dim(M)
  std::vector<Int> xi;   // row, length dim(M)
  Int x, x_prime, y;
};

// Checks that `enlarged` has the surgery-enlargement shape over `m` and
// returns the border data; throws NotAnEnlargement otherwise.
SurgeryShape surgery_shape(const SeifertData& m, const SeifertData& enlarged);

// Explicit metabolic witness for (-M) + M_enlarged, built from the standard
// change of basis whose transform exhibits a (k+1)-dimensional zero block.
CobordismWitness enlargement_cobordism_witness(const SeifertData& m,
                                               const SeifertData& enlarged);

// The block matrix (B0 0 0 X1 / 0 -B1 0 X2 / 0 0 0 X3 / X4 X5 X6 X7) used
// by the combination construction; throws BlockShapeError on inconsistent
// dimensions. X3, X6, X7 are s x s; X1 is r0 x s, X2 is r1 x s, X4 is
// s x r0, X5 is s x r1.
struct ComboBlocks {
  RatMatrix x1, x2, x3, x4, x5, x6, x7;
};

RatMatrix assemble_combo_matrix(const SeifertData& a0, const SeifertData& a1,
                                const ComboBlocks& blocks);

// Witness of size r + s for (-B0) + B1 + M where M is the assembled combo
// matrix and r = dim B0 + dim B1, 2s = dim M - r.
CobordismWitness combo_matrix_witness(const SeifertData& a0,
                                      const SeifertData& a1,
                                      const ComboBlocks& blocks);

// Ambient matrix the combo witness certifies: blockdiag(-B0, B1, M).
RatMatrix combo_ambient_matrix(const SeifertData& a0, const SeifertData& a1,
                               const ComboBlocks& blocks);

}  // namespace dknot
