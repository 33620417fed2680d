#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "dknot/errors.hpp"
#include "dknot/numeric.hpp"

namespace dknot {

// Sparse Laurent polynomial in one variable t over an exact coefficient ring
// (Int or Rat). Zero coefficients are never stored; the zero polynomial has an
// empty coefficient map. Exponents may be negative.
template <typename C>
class LaurentPoly {
 public:
  LaurentPoly() = default;

  explicit LaurentPoly(const C& constant) {
    if (constant != 0) c_[0] = constant;
  }

  static LaurentPoly term(const C& coeff, long exp) {
    LaurentPoly p;
    if (coeff != 0) p.c_[exp] = coeff;
    return p;
  }

  static LaurentPoly variable() { return term(C(1), 1); }

  bool is_zero() const { return c_.empty(); }

  bool is_constant() const {
    return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0);
  }

  // True when the polynomial is exactly 1.
  bool is_one() const {
    return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1;
  }

  const std::map<long, C>& coeffs() const { return c_; }

  C coeff(long exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? C(0) : it->second;
  }

  long min_exp() const {
    if (is_zero()) throw ZeroPolynomial();
    return c_.begin()->first;
  }

  long max_exp() const {
    if (is_zero()) throw ZeroPolynomial();
    return c_.rbegin()->first;
  }

  void add_term(long exp, const C& coeff) {
    if (coeff == 0) return;
    auto it = c_.find(exp);
    if (it == c_.end()) {
      c_[exp] = coeff;
    } else {
      it->second += coeff;
      if (it->second == 0) c_.erase(it);
    }
  }

  LaurentPoly operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, v] : o.c_) r.add_term(e, v);
    return r;
  }

  LaurentPoly operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, v] : o.c_) r.add_term(e, C(-v));
    return r;
  }

  LaurentPoly operator-() const {
    LaurentPoly r;
    for (const auto& [e, v] : c_) r.c_[e] = -v;
    return r;
  }

  LaurentPoly operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, v1] : c_) {
      for (const auto& [e2, v2] : o.c_) {
        r.add_term(e1 + e2, C(v1 * v2));
      }
    }
    return r;
  }

  LaurentPoly operator*(const C& s) const {
    LaurentPoly r;
    if (s == 0) return r;
    for (const auto& [e, v] : c_) r.c_[e] = v * s;
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }
  bool operator!=(const LaurentPoly& o) const { return c_ != o.c_; }

  // Substitutes t -> t^-1.
  LaurentPoly conjugate() const {
    LaurentPoly r;
    for (const auto& [e, v] : c_) r.c_[-e] = v;
    return r;
  }

  // Multiplies by t^k.
  LaurentPoly shifted(long k) const {
    LaurentPoly r;
    for (const auto& [e, v] : c_) r.c_[e + k] = v;
    return r;
  }

  // Formal derivative with respect to t.
  LaurentPoly derivative() const {
    LaurentPoly r;
    for (const auto& [e, v] : c_) {
      if (e != 0) r.add_term(e - 1, C(v * C(e)));
    }
    return r;
  }

  // Exact evaluation; x must be nonzero when negative exponents are present.
  Rat evaluate(const Rat& x) const {
    Rat acc(0);
    for (const auto& [e, v] : c_) {
      Rat p(1);
      long a = e >= 0 ? e : -e;
      Rat base = x;
      if (e < 0) base = Rat(x.get_den(), x.get_num());
      if (e < 0) base.canonicalize();
      for (long i = 0; i < a; ++i) p *= base;
      acc += Rat(v) * p;
    }
    return acc;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      const long e = it->first;
      C v = it->second;
      if (!first) {
        out << (v < 0 ? " - " : " + ");
        if (v < 0) v = -v;
      }
      first = false;
      const bool unit_coeff = (v == 1 || v == -1) && e != 0;
      if (!unit_coeff) {
        out << coeff_text(v);
        if (e != 0) out << "*";
      } else if (v == -1) {
        out << "-";
      }
      if (e == 1) {
        out << "t";
      } else if (e != 0) {
        out << "t^" << e;
      }
    }
    return out.str();
  }

 private:
  static std::string coeff_text(const Int& v) { return v.get_str(); }
  static std::string coeff_text(const Rat& v) { return rat_to_string(v); }

  std::map<long, C> c_;
};

using IntLaurent = LaurentPoly<Int>;
using RatLaurent = LaurentPoly<Rat>;

template <typename C>
LaurentPoly<C> conjugate(const LaurentPoly<C>& p) {
  return p.conjugate();
}

inline RatLaurent to_rational_coeffs(const IntLaurent& p) {
  RatLaurent r;
  for (const auto& [e, v] : p.coeffs()) r.add_term(e, Rat(v));
  return r;
}

// Succeeds only when every coefficient is an integer.
inline std::optional<IntLaurent> to_integer_coeffs(const RatLaurent& p) {
  IntLaurent r;
  for (const auto& [e, v] : p.coeffs()) {
    if (!is_integer(v)) return std::nullopt;
    r.add_term(e, v.get_num());
  }
  return r;
}

}  // namespace dknot
