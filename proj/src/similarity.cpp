#include "dknot/similarity.hpp"

namespace dknot {

SimilarityClass similarity_normalize(const RatLaurent& p, Ring ring) {
  if (p.is_zero()) throw ZeroPolynomial();
  RatLaurent shifted = p.shifted(-p.min_exp());
  if (ring == Ring::rational) {
    Rat lead = shifted.coeff(shifted.max_exp());
    Rat inv(lead.get_den(), lead.get_num());
    inv.canonicalize();
    return {shifted * inv, ring};
  }
  for (const auto& [e, v] : shifted.coeffs()) {
    (void)e;
    if (!is_integer(v)) {
      throw Error("integer similarity normalization of non-integer polynomial");
    }
  }
  if (shifted.coeff(shifted.max_exp()) < 0) shifted = -shifted;
  return {shifted, ring};
}

SimilarityClass similarity_normalize(const IntLaurent& p) {
  return similarity_normalize(to_rational_coeffs(p), Ring::integer);
}

bool similar(const RatLaurent& p, const RatLaurent& q, Ring ring) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  return similarity_normalize(p, ring) == similarity_normalize(q, ring);
}

}  // namespace dknot
