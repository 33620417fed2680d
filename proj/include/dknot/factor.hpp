#pragma once

#include <optional>
#include <vector>

#include "dknot/laurent.hpp"
#include "dknot/similarity.hpp"

namespace dknot {

// One irreducible factor (monic, ordinary polynomial with nonzero constant
// term) together with its multiplicity.
struct FactorEntry {
  RatLaurent factor;
  int multiplicity = 0;
};

// Complete factorization over the rationals, up to a unit of Q[t,t^-1].
// Powers of t are part of the discarded unit. Throws ZeroPolynomial.
std::vector<FactorEntry> factor_over_rationals(const RatLaurent& p);

struct FoxMilnorResult {
  bool passes = false;
  std::optional<RatLaurent> witness;  // q with q(t)*q(1/t) similar to input
};

// Tests whether p is similar over Q[t,t^-1] to q(t)*q(1/t) for some q: every
// irreducible factor must occur with the same multiplicity as its conjugate,
// and self-conjugate factors must occur with even multiplicity.
FoxMilnorResult fox_milnor_test(const RatLaurent& p);

}  // namespace dknot
