#include "dknot/rational_function.hpp"

#include "dknot/densepoly.hpp"

namespace dknot {

RationalFunction::RationalFunction(const RatLaurent& n, const RatLaurent& d)
    : num_(n), den_(d) {
  if (d.is_zero()) throw Error("zero denominator in rational function");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = RatLaurent(Rat(1));
    return;
  }
  long sn = 0, sd = 0;
  DensePoly n = laurent_to_dense(num_, sn);
  DensePoly d = laurent_to_dense(den_, sd);
  DensePoly g = dense_gcd(n, d);
  if (dense_deg(g) > 0) {
    n = dense_exact_div(n, g);
    d = dense_exact_div(d, g);
  }
  // Move any remaining power of t in the denominator into the shift.
  std::size_t v = 0;
  while (v < d.size() && d[v] == 0) ++v;
  if (v > 0) {
    d.erase(d.begin(), d.begin() + static_cast<long>(v));
  }
  long shift = sn - sd - static_cast<long>(v);
  const Rat lead = d.back();
  for (auto& c : d) c /= lead;
  for (auto& c : n) c /= lead;
  num_ = dense_to_laurent(n, shift);
  den_ = dense_to_laurent(d, 0);
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw Error("division by zero rational function");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::conjugate() const {
  if (is_zero()) return RationalFunction();
  return RationalFunction(num_.conjugate(), den_.conjugate());
}

std::string RationalFunction::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

Rat trace_chi(const RationalFunction& f) {
  if (f.is_zero()) return Rat(0);
  long sn = 0;
  DensePoly n = laurent_to_dense(f.num(), sn);
  long sd = 0;
  DensePoly d = laurent_to_dense(f.den(), sd);
  // The stored denominator has nonzero constant term, so sd = 0 and only
  // factors of (t-1) need to be split off from it.
  DensePoly t_minus_1 = {Rat(-1), Rat(1)};
  DensePoly h = d;
  while (dense_deg(h) >= 1 && dense_eval(h, Rat(1)) == 0) {
    h = dense_exact_div(h, t_minus_1);
  }
  int b = dense_deg(d) - dense_deg(h);
  if (dense_deg(h) == 0) return Rat(0);  // f lies in the split-off summand
  // Partial fractions: n/((t-1)^b * h) = u/(t-1)^b + v/h.
  DensePoly v;
  if (b == 0) {
    v = dense_mod(n, h);
  } else {
    DensePoly pow = dense_one();
    for (int i = 0; i < b; ++i) pow = dense_mul(pow, t_minus_1);
    ExtGcd eg = dense_ext_gcd(h, pow);
    // eg.s * h + eg.u * pow = 1, so (n * eg.u) is n/h modulo h.
    v = dense_mod(dense_mul(n, eg.u), h);
  }
  // Multiply by t^sn inside Q[t]/(h); h(0) != 0 so t is invertible there.
  if (sn > 0) {
    DensePoly tpow = {Rat(0), Rat(1)};
    for (long i = 0; i < sn; ++i) v = dense_mod(dense_mul(v, tpow), h);
  } else if (sn < 0) {
    DensePoly t_only = {Rat(0), Rat(1)};
    ExtGcd eg = dense_ext_gcd(t_only, h);
    // eg.s * t + eg.u * h = 1, so eg.s is the inverse of t modulo h.
    for (long i = 0; i < -sn; ++i) v = dense_mod(dense_mul(v, eg.s), h);
  }
  // Derivative of v/h at t = 1.
  Rat h1 = dense_eval(h, Rat(1));
  Rat v1 = dense_eval(v, Rat(1));
  Rat hp1 = dense_eval(dense_derivative(h), Rat(1));
  Rat vp1 = dense_eval(dense_derivative(v), Rat(1));
  return (vp1 * h1 - v1 * hp1) / (h1 * h1);
}

std::optional<RatLaurent> laurent_membership(const RationalFunction& f,
                                             Ring ring) {
  if (!f.den().is_one()) return std::nullopt;
  if (ring == Ring::integer) {
    for (const auto& [e, v] : f.num().coeffs()) {
      (void)e;
      if (!is_integer(v)) return std::nullopt;
    }
  }
  return f.num();
}

}  // namespace dknot
