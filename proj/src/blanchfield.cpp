#include "dknot/blanchfield.hpp"

#include "dknot/sequiv.hpp"

namespace dknot {

namespace {

void require_valid(const SeifertData& s) {
  ValidityReport rep = validate(s);
  if (!rep.verdict) throw InvalidCandidate(rep.failure_reason());
}

}  // namespace

IntLaurentMatrix presentation_matrix(const SeifertData& s) {
  require_valid(s);
  const std::size_t n = s.dim();
  const Rat sign(plus_minus_n1(s.n_parity));
  if (n == 0) return IntLaurentMatrix();
  RatMatrix r = derive_r(s);
  RatMatrix r_inv = field_inverse(r);
  RatMatrix tau = derive_tau(s);
  RatMatrix linear = (r_inv.transpose() * tau * r).scaled(sign);  // t-coefficient
  RatMatrix constant = -tau.transpose();
  IntLaurentMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_integer(linear.at(i, j)) || !is_integer(constant.at(i, j))) {
        throw IntegralityViolation("presentation entry not integral");
      }
      IntLaurent entry = IntLaurent::term(linear.at(i, j).get_num(), 1);
      entry.add_term(0, constant.at(i, j).get_num());
      m.at(i, j) = entry;
    }
  }
  // Evaluation at t = 1 must be unimodular.
  RatMatrix at_one = linear + constant;
  Rat det = field_determinant(at_one);
  if (det != 1 && det != -1) {
    throw IntegralityViolation("presentation at t=1 is not unimodular");
  }
  return m;
}

namespace {

// (t-1) * inner^-1 for an inner matrix with entries linear*t + constant.
QfMatrix scaled_inverse(const RatMatrix& linear, const RatMatrix& constant) {
  const std::size_t n = linear.rows();
  QfMatrix inner(n, n);
  RationalFunction t{RatLaurent::variable()};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      inner.at(i, j) = RationalFunction(linear.at(i, j)) * t +
                       RationalFunction(constant.at(i, j));
    }
  }
  if (field_determinant(inner).is_zero()) throw DegenerateForm();
  QfMatrix b = field_inverse(inner);
  RationalFunction t_minus_1 = t - RationalFunction(Rat(1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      b.at(i, j) = t_minus_1 * b.at(i, j);
    }
  }
  return b;
}

}  // namespace

QfMatrix pairing_matrix(const SeifertData& s) {
  require_valid(s);
  const std::size_t n = s.dim();
  if (n == 0) return QfMatrix();
  const Rat sign(plus_minus_n1(s.n_parity));
  RatMatrix theta = to_rational(s.theta);
  // inner = theta' - (-1)^(n+1) t theta
  return scaled_inverse(theta.scaled(-sign), theta.transpose());
}

BlanchfieldForm blanchfield_form(const SeifertData& s) {
  return {presentation_matrix(s), pairing_matrix(s), s.n_parity};
}

RatMatrix trace_form(const BlanchfieldForm& b) {
  RatMatrix r(b.pairing.rows(), b.pairing.cols());
  for (std::size_t i = 0; i < r.rows(); ++i) {
    for (std::size_t j = 0; j < r.cols(); ++j) {
      r.at(i, j) = trace_chi(b.pairing.at(i, j));
    }
  }
  return r;
}

IntLaurentMatrix consistency_w(const SeifertData& s) {
  IntLaurentMatrix m = presentation_matrix(s);
  const std::size_t n = s.dim();
  if (n == 0) return IntLaurentMatrix();
  // Pairing matrix transported to the presentation's integral basis:
  // (t-1) * ((R^-1)' tau - (-1)^(n+1) t tau' R^-1)^-1.
  const Rat sign(plus_minus_n1(s.n_parity));
  RatMatrix r_inv = field_inverse(derive_r(s));
  RatMatrix tau = derive_tau(s);
  QfMatrix b_int = scaled_inverse((tau.transpose() * r_inv).scaled(-sign),
                                  r_inv.transpose() * tau);
  // conj(M)' * conj(B_int), computed over the rational-function field.
  QfMatrix m_bar_t(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m_bar_t.at(i, j) =
          RationalFunction(to_rational_coeffs(m.at(j, i)).conjugate());
    }
  }
  QfMatrix b_bar(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      b_bar.at(i, j) = b_int.at(i, j).conjugate();
    }
  }
  QfMatrix w = m_bar_t * b_bar;
  auto entries = laurent_entries(w, Ring::integer);
  if (!entries) throw NonIntegralAdjoint();
  IntLaurentMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto e = to_integer_coeffs(entries->at(i, j));
      if (!e) throw NonIntegralAdjoint();
      out.at(i, j) = *e;
    }
  }
  return out;
}

}  // namespace dknot
