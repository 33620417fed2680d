#pragma once

#include <optional>
#include <string>

#include "dknot/laurent.hpp"
#include "dknot/similarity.hpp"

namespace dknot {

// Exact quotient of rational Laurent polynomials, kept in reduced normal
// form: the denominator is an ordinary polynomial (lowest exponent 0) with
// nonzero constant term, monic, and coprime to the numerator. This makes the
// representation unique, so equality is structural.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Rat(1)) {}
  explicit RationalFunction(const Rat& c) : num_(c), den_(Rat(1)) {}
  explicit RationalFunction(const RatLaurent& n) : num_(n), den_(Rat(1)) {}
  RationalFunction(const RatLaurent& n, const RatLaurent& d);

  const RatLaurent& num() const { return num_; }
  const RatLaurent& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction operator-() const;

  bool operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  // Substitutes t -> t^-1.
  RationalFunction conjugate() const;

  std::string to_string() const;

 private:
  void normalize();

  RatLaurent num_;
  RatLaurent den_;
};

// The linear functional chi on rational functions: write f = g + h where g
// has denominator a power of t times a power of (1-t) and h is a proper
// fraction whose denominator is coprime to t(1-t); return h'(1).
Rat trace_chi(const RationalFunction& f);

// Returns the Laurent polynomial equal to f when the denominator divides the
// numerator (integer coefficients demanded by the integer variant); otherwise
// absent. The result is reported with rational coefficients in both variants.
std::optional<RatLaurent> laurent_membership(const RationalFunction& f,
                                             Ring ring);

}  // namespace dknot
