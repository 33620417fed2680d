#pragma once

#include "dknot/seifert.hpp"

namespace dknot {

// Presentation matrix M(t) and pairing matrix B(t) of the knot module with
// its Blanchfield pairing. The presentation keeps the intersection matrix R
// explicit (that is what makes it integral with M(1) unimodular); the pairing
// is reported in the R-normalized basis, where the trace functional recovers
// the rational scalar form exactly and the Hermitian identity
// conj(B') = (-1)^(n+1) B holds on the nose.
struct BlanchfieldForm {
  IntLaurentMatrix presentation;  // M(t) = (-1)^(n+1) (R^-1)' tau R t - tau'
  QfMatrix pairing;               // B(t) = (t-1) (theta' - (-1)^(n+1) t theta)^-1
  Parity n_parity = Parity::odd;
};

// M(t); asserts every entry is an integer Laurent polynomial and that M(1)
// has determinant +-1. Throws InvalidCandidate / IntegralityViolation.
IntLaurentMatrix presentation_matrix(const SeifertData& s);

// B(t) in the R-normalized basis; throws DegenerateForm when the inner
// matrix theta' - (-1)^(n+1) t theta is singular.
QfMatrix pairing_matrix(const SeifertData& s);

BlanchfieldForm blanchfield_form(const SeifertData& s);

// The trace functional applied entrywise to the pairing matrix; equals
// scalar_form(s) for nonsingular theta.
RatMatrix trace_form(const BlanchfieldForm& b);

// The adjoint matrix W of the map from the knot module into its dual,
// expressed in the same integral basis as the presentation: with B_int the
// pairing congruence-transported back by R, W = conj(M)' * conj(B_int),
// which evaluates to (-1)^(n+1) (1/t - 1) R. Every entry is asserted to lie
// in Z[t,1/t]; NonIntegralAdjoint otherwise. This basis-matched convention
// is the one under which W is integral (the R-normalized pairing admits no
// integral adjoint product), and it is what the torsion-module construction
// consumes.
IntLaurentMatrix consistency_w(const SeifertData& s);

}  // namespace dknot
