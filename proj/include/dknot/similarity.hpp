#pragma once

#include <string>

#include "dknot/laurent.hpp"

namespace dknot {

enum class Ring { integer, rational };

// Canonical representative of a Laurent polynomial up to multiplication by a
// unit of the ambient ring: +-t^k over the integers, q*t^k (q rational,
// nonzero) over the rationals. The representative has lowest exponent 0; over
// the rationals it is monic, over the integers its leading coefficient is
// positive (content is preserved).
struct SimilarityClass {
  RatLaurent rep;
  Ring ring = Ring::rational;

  bool operator==(const SimilarityClass& o) const {
    return ring == o.ring && rep == o.rep;
  }
  bool operator!=(const SimilarityClass& o) const { return !(*this == o); }

  std::string to_string() const { return rep.to_string(); }
};

// Throws ZeroPolynomial on zero input. For Ring::integer the input must have
// integer coefficients.
SimilarityClass similarity_normalize(const RatLaurent& p, Ring ring);
SimilarityClass similarity_normalize(const IntLaurent& p);

// True when p and q differ by a unit of the given ring.
bool similar(const RatLaurent& p, const RatLaurent& q, Ring ring);

}  // namespace dknot
