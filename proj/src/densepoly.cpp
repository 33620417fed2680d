#include "dknot/densepoly.hpp"

#include <algorithm>

namespace dknot {

void dense_trim(DensePoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int dense_deg(const DensePoly& p) { return static_cast<int>(p.size()) - 1; }

bool dense_is_zero(const DensePoly& p) { return p.empty(); }

DensePoly dense_add(const DensePoly& a, const DensePoly& b) {
  DensePoly r(std::max(a.size(), b.size()), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  dense_trim(r);
  return r;
}

DensePoly dense_sub(const DensePoly& a, const DensePoly& b) {
  DensePoly r(std::max(a.size(), b.size()), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  dense_trim(r);
  return r;
}

DensePoly dense_mul(const DensePoly& a, const DensePoly& b) {
  if (a.empty() || b.empty()) return {};
  DensePoly r(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  dense_trim(r);
  return r;
}

DensePoly dense_scale(const DensePoly& a, const Rat& s) {
  if (s == 0) return {};
  DensePoly r = a;
  for (auto& c : r) c *= s;
  return r;
}

DensePoly dense_neg(const DensePoly& a) {
  DensePoly r = a;
  for (auto& c : r) c = -c;
  return r;
}

std::pair<DensePoly, DensePoly> dense_divmod(const DensePoly& a,
                                             const DensePoly& b) {
  if (b.empty()) throw Error("division by zero polynomial");
  DensePoly r = a;
  dense_trim(r);
  const int db = dense_deg(b);
  if (dense_deg(r) < db) return {{}, r};
  DensePoly q(r.size() - b.size() + 1, Rat(0));
  const Rat lead = b.back();
  for (int i = dense_deg(r); i >= db; --i) {
    if (r[i] == 0) continue;
    Rat c = r[i] / lead;
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= c * b[j];
  }
  dense_trim(q);
  dense_trim(r);
  return {q, r};
}

DensePoly dense_mod(const DensePoly& a, const DensePoly& b) {
  return dense_divmod(a, b).second;
}

DensePoly dense_exact_div(const DensePoly& a, const DensePoly& b) {
  auto [q, r] = dense_divmod(a, b);
  if (!r.empty()) throw Error("inexact polynomial division");
  return q;
}

static void make_monic(DensePoly& p) {
  if (p.empty()) return;
  const Rat lead = p.back();
  for (auto& c : p) c /= lead;
}

DensePoly dense_gcd(DensePoly a, DensePoly b) {
  dense_trim(a);
  dense_trim(b);
  while (!b.empty()) {
    DensePoly r = dense_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  make_monic(a);
  return a;
}

ExtGcd dense_ext_gcd(const DensePoly& a, const DensePoly& b) {
  DensePoly r0 = a, r1 = b;
  dense_trim(r0);
  dense_trim(r1);
  DensePoly s0 = dense_one(), s1 = {};
  DensePoly u0 = {}, u1 = dense_one();
  while (!r1.empty()) {
    auto [q, r2] = dense_divmod(r0, r1);
    DensePoly s2 = dense_sub(s0, dense_mul(q, s1));
    DensePoly u2 = dense_sub(u0, dense_mul(q, u1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  if (!r0.empty()) {
    const Rat lead = r0.back();
    for (auto& c : r0) c /= lead;
    for (auto& c : s0) c /= lead;
    for (auto& c : u0) c /= lead;
  }
  return {r0, s0, u0};
}

DensePoly dense_derivative(const DensePoly& a) {
  if (a.size() <= 1) return {};
  DensePoly r(a.size() - 1, Rat(0));
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * Rat(Int(i));
  dense_trim(r);
  return r;
}

Rat dense_eval(const DensePoly& a, const Rat& x) {
  Rat acc(0);
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
  return acc;
}

DensePoly laurent_to_dense(const RatLaurent& p, long& shift) {
  if (p.is_zero()) {
    shift = 0;
    return {};
  }
  shift = p.min_exp();
  DensePoly d(p.max_exp() - shift + 1, Rat(0));
  for (const auto& [e, v] : p.coeffs()) d[e - shift] = v;
  return d;
}

RatLaurent dense_to_laurent(const DensePoly& d, long shift) {
  RatLaurent p;
  for (std::size_t i = 0; i < d.size(); ++i) {
    p.add_term(static_cast<long>(i) + shift, d[i]);
  }
  return p;
}

DensePoly dense_one() { return {Rat(1)}; }

DensePoly dense_constant(const Rat& c) {
  if (c == 0) return {};
  return {c};
}

}  // namespace dknot
