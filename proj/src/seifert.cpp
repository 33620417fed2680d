#include "dknot/seifert.hpp"

namespace dknot {

std::string ValidityReport::failure_reason() const {
  if (!r_nondegenerate) return "R is degenerate";
  if (!tau_integral) return "tau not integral";
  if (!mu_integral) return "mu not integral";
  if (!dimension_ok) return "odd dimension not allowed for this parity";
  return "";
}

RatMatrix derive_r(const SeifertData& s) {
  const int sign = plus_minus_n1(s.n_parity);
  RatMatrix theta = to_rational(s.theta);
  RatMatrix r = -theta.transpose() + theta.scaled(Rat(sign));
  return r;
}

static RatMatrix r_inverse(const SeifertData& s) {
  RatMatrix r = derive_r(s);
  if (!r.is_empty() && field_determinant(r) == 0) throw DegenerateR();
  return r.is_empty() ? r : field_inverse(r);
}

RatMatrix derive_tau(const SeifertData& s) {
  return to_rational(s.theta).transpose() * r_inverse(s);
}

RatMatrix derive_mu(const SeifertData& s) {
  const int sign = plus_minus_n1(s.n_parity);
  return to_rational(s.theta).scaled(Rat(sign)) * r_inverse(s);
}

IntMatrix intersection_matrix(const SeifertData& s) {
  const int sign = plus_minus_n(s.n_parity);
  IntMatrix t = s.theta + s.theta.transpose().scaled(Int(sign));
  return -t;
}

static bool matrix_integral(const RatMatrix& m) {
  return to_integral(m).has_value();
}

ValidityReport validate(const SeifertData& s) {
  ValidityReport rep;
  RatMatrix r = derive_r(s);
  Rat det_r = r.is_empty() ? Rat(1) : field_determinant(r);
  rep.r_nondegenerate = det_r != 0;
  if (rep.r_nondegenerate) {
    rep.tau_integral = matrix_integral(derive_tau(s));
    rep.mu_integral = matrix_integral(derive_mu(s));
  }
  // det R is an integer here (R has integer entries).
  Int det_r_int = det_r.get_num();
  bool parity_constrains = s.n_parity == Parity::odd ||
                           (rep.r_nondegenerate && det_r_int % 2 != 0);
  rep.dimension_ok = !parity_constrains || s.dim() % 2 == 0;
  rep.is_sphere_matrix = rep.r_nondegenerate && abs(det_r_int) == 1;
  rep.verdict = rep.r_nondegenerate && rep.tau_integral && rep.mu_integral &&
                rep.dimension_ok;
  return rep;
}

RatLaurent alexander_determinant(const SeifertData& s) {
  const int sign = plus_minus_n(s.n_parity);
  const std::size_t n = s.dim();
  if (n == 0) return RatLaurent(Rat(1));
  QfMatrix m(n, n);
  RationalFunction t{RatLaurent::variable()};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      RationalFunction entry =
          RationalFunction(Rat(s.theta.at(i, j))) * t +
          RationalFunction(Rat(sign * s.theta.at(j, i)));
      m.at(i, j) = entry;
    }
  }
  RationalFunction det = field_determinant(m);
  auto poly = laurent_membership(det, Ring::rational);
  if (!poly) throw Error("determinant of polynomial matrix not polynomial");
  return *poly;
}

SimilarityClass alexander_polynomial(const SeifertData& s) {
  ValidityReport rep = validate(s);
  if (!rep.verdict) throw InvalidCandidate(rep.failure_reason());
  RatLaurent det = alexander_determinant(s);
  return similarity_normalize(det, Ring::rational);
}

}  // namespace dknot
