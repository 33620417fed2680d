#pragma once

#include "dknot/matrix.hpp"
#include "dknot/similarity.hpp"

namespace dknot {

// Parity of the ambient dimension parameter n. Every formula in the calculus
// depends only on (-1)^n, so the parity is all that is stored.
enum class Parity { odd, even };

inline int plus_minus_n(Parity p) { return p == Parity::even ? 1 : -1; }
inline int plus_minus_n1(Parity p) { return p == Parity::even ? -1 : 1; }

// A candidate Seifert matrix for a disk knot: a square integer matrix theta
// together with the parity of n. The 0x0 matrix is allowed (and valid).
struct SeifertData {
  IntMatrix theta;
  Parity n_parity = Parity::odd;

  std::size_t dim() const { return theta.rows(); }

  bool operator==(const SeifertData& o) const {
    return n_parity == o.n_parity && theta == o.theta;
  }
};

struct ValidityReport {
  bool r_nondegenerate = false;
  bool tau_integral = false;
  bool mu_integral = false;
  bool dimension_ok = false;
  bool is_sphere_matrix = false;
  bool verdict = false;

  // Human-readable reason for the first failed check; empty when valid.
  std::string failure_reason() const;
};

// R = -theta' + (-1)^(n+1) * theta.
RatMatrix derive_r(const SeifertData& s);

// tau = theta' * R^-1; throws DegenerateR when R is singular.
RatMatrix derive_tau(const SeifertData& s);

// mu = (-1)^(n+1) * theta * R^-1, the linking matrix of the positive
// push-off; satisfies mu*R = (-1)^(n+1) * R' * tau'. Throws DegenerateR.
RatMatrix derive_mu(const SeifertData& s);

// T = -(theta + (-1)^n * theta'), the intersection form.
IntMatrix intersection_matrix(const SeifertData& s);

// Checks the necessary conditions for theta to be a disk-knot Seifert
// matrix: R nonsingular, tau and mu integral, and even dimension whenever
// n is odd or (n is even and det R is odd). is_sphere_matrix records
// |det R| = 1.
ValidityReport validate(const SeifertData& s);

// det(theta * t + (-1)^n * theta') as an exact Laurent polynomial (no unit
// normalization applied).
RatLaurent alexander_determinant(const SeifertData& s);

// Canonical similarity class of the Alexander polynomial. Throws
// InvalidCandidate when validate fails.
SimilarityClass alexander_polynomial(const SeifertData& s);

}  // namespace dknot
