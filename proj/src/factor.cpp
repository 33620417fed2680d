#include "dknot/factor.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "dknot/densepoly.hpp"

namespace dknot {
namespace {

// ---------------------------------------------------------------------------
// Dense integer polynomials (coefficient of t^i at index i).
// ---------------------------------------------------------------------------

using ZPoly = std::vector<Int>;

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int zdeg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  ztrim(r);
  return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  ztrim(r);
  return r;
}

DensePoly z_to_q(const ZPoly& a) {
  DensePoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = Rat(a[i]);
  return r;
}

// Clears denominators and divides by the content; the result has positive
// leading coefficient. The discarded rational unit is irrelevant here.
ZPoly q_to_z_primitive(const DensePoly& a) {
  Int lcm(1);
  for (const auto& c : a) {
    Int den = c.get_den();
    lcm = lcm / gcd(lcm, den) * den;
  }
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rat scaled = a[i] * Rat(lcm);
    r[i] = scaled.get_num();
  }
  Int content(0);
  for (const auto& c : r) content = gcd(content, c);
  if (content > 1) {
    for (auto& c : r) c /= content;
  }
  if (!r.empty() && r.back() < 0) {
    for (auto& c : r) c = -c;
  }
  ztrim(r);
  return r;
}

// Exact division over the integers; returns absent when not exact.
std::optional<ZPoly> z_exact_div(const ZPoly& a, const ZPoly& b) {
  auto [q, r] = dense_divmod(z_to_q(a), z_to_q(b));
  if (!r.empty()) return std::nullopt;
  ZPoly out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (!is_integer(q[i])) return std::nullopt;
    out[i] = q[i].get_num();
  }
  return out;
}

// Symmetric representative of each coefficient modulo q, in (-q/2, q/2].
ZPoly zsym_mod(const ZPoly& a, const Int& q) {
  ZPoly r = a;
  Int half = q / 2;
  for (auto& c : r) {
    Int m;
    mpz_fdiv_r(m.get_mpz_t(), c.get_mpz_t(), q.get_mpz_t());
    if (m > half) m -= q;
    c = m;
  }
  ztrim(r);
  return r;
}

// ---------------------------------------------------------------------------
// Dense polynomials modulo a small prime p (coefficients in [0, p)).
// ---------------------------------------------------------------------------

using MPoly = std::vector<long>;

void mtrim(MPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int mdeg(const MPoly& a) { return static_cast<int>(a.size()) - 1; }

long mpow(long base, long exp, long p) {
  long r = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) r = r * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return r;
}

long minv(long a, long p) { return mpow((a % p + p) % p, p - 2, p); }

MPoly mmul(const MPoly& a, const MPoly& b, long p) {
  if (a.empty() || b.empty()) return {};
  MPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
  }
  mtrim(r);
  return r;
}

MPoly msub(const MPoly& a, const MPoly& b, long p) {
  MPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] % p;
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] - b[i] % p + p) % p;
  mtrim(r);
  return r;
}

MPoly mscale(const MPoly& a, long s, long p) {
  MPoly r = a;
  s = (s % p + p) % p;
  for (auto& c : r) c = c * s % p;
  mtrim(r);
  return r;
}

// Division with remainder; b need not be monic.
std::pair<MPoly, MPoly> mdivmod(const MPoly& a, const MPoly& b, long p) {
  MPoly r = a;
  mtrim(r);
  const int db = mdeg(b);
  if (db < 0) throw Error("modular division by zero");
  if (mdeg(r) < db) return {{}, r};
  MPoly q(r.size() - b.size() + 1, 0);
  const long lead_inv = minv(b.back(), p);
  for (int i = mdeg(r); i >= db; --i) {
    if (r[i] == 0) continue;
    long c = r[i] * lead_inv % p;
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) {
      r[i - db + j] = (r[i - db + j] - c * b[j] % p + p) % p;
    }
  }
  mtrim(q);
  mtrim(r);
  return {q, r};
}

MPoly mmod(const MPoly& a, const MPoly& b, long p) {
  return mdivmod(a, b, p).second;
}

MPoly mmonic(const MPoly& a, long p) {
  if (a.empty()) return a;
  return mscale(a, minv(a.back(), p), p);
}

MPoly mgcd(MPoly a, MPoly b, long p) {
  mtrim(a);
  mtrim(b);
  while (!b.empty()) {
    MPoly r = mmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return mmonic(a, p);
}

// Bezout coefficients: s*a + u*b = 1 (requires gcd(a, b) = 1).
std::pair<MPoly, MPoly> mbezout(const MPoly& a, const MPoly& b, long p) {
  MPoly r0 = a, r1 = b;
  mtrim(r0);
  mtrim(r1);
  MPoly s0 = {1}, s1 = {};
  MPoly u0 = {}, u1 = {1};
  while (!r1.empty()) {
    auto [q, r2] = mdivmod(r0, r1, p);
    MPoly s2 = msub(s0, mmul(q, s1, p), p);
    MPoly u2 = msub(u0, mmul(q, u1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  if (mdeg(r0) != 0) throw Error("modular bezout on non-coprime inputs");
  long inv = minv(r0[0], p);
  return {mscale(s0, inv, p), mscale(u0, inv, p)};
}

MPoly mderivative(const MPoly& a, long p) {
  if (a.size() <= 1) return {};
  MPoly r(a.size() - 1, 0);
  for (std::size_t i = 1; i < a.size(); ++i) {
    r[i - 1] = a[i] * static_cast<long>(i % p) % p;
  }
  mtrim(r);
  return r;
}

MPoly z_to_m(const ZPoly& a, long p) {
  MPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = static_cast<long>(mpz_fdiv_ui(a[i].get_mpz_t(), p));
  }
  mtrim(r);
  return r;
}

ZPoly m_to_z(const MPoly& a) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = Int(a[i]);
  ztrim(r);
  return r;
}

// ---------------------------------------------------------------------------
// Berlekamp factorization of a squarefree monic polynomial modulo p.
// ---------------------------------------------------------------------------

std::vector<MPoly> berlekamp(const MPoly& f, long p) {
  const int n = mdeg(f);
  if (n == 1) return {f};
  // Frobenius matrix: column i holds x^(p*i) mod f.
  MPoly x = {0, 1};
  MPoly xp = {1};
  {
    // x^p mod f by square and multiply.
    long e = p;
    MPoly base = x;
    while (e > 0) {
      if (e & 1) xp = mmod(mmul(xp, base, p), f, p);
      base = mmod(mmul(base, base, p), f, p);
      e >>= 1;
    }
  }
  std::vector<std::vector<long>> mat(n, std::vector<long>(n, 0));
  MPoly qi = {1};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < static_cast<int>(qi.size()); ++j) mat[j][i] = qi[j];
    qi = mmod(mmul(qi, xp, p), f, p);
  }
  for (int i = 0; i < n; ++i) mat[i][i] = (mat[i][i] - 1 % p + p) % p;
  // Nullspace of (Frobenius - identity) by Gaussian elimination.
  std::vector<int> pivot_col_of_row;
  std::vector<int> col_pivot(n, -1);
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int piv = -1;
    for (int row = rank; row < n; ++row) {
      if (mat[row][col] != 0) {
        piv = row;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(mat[rank], mat[piv]);
    long inv = minv(mat[rank][col], p);
    for (int j = 0; j < n; ++j) mat[rank][j] = mat[rank][j] * inv % p;
    for (int row = 0; row < n; ++row) {
      if (row == rank || mat[row][col] == 0) continue;
      long c = mat[row][col];
      for (int j = 0; j < n; ++j) {
        mat[row][j] = (mat[row][j] - c * mat[rank][j] % p + p) % p;
      }
    }
    col_pivot[col] = rank;
    pivot_col_of_row.push_back(col);
    ++rank;
  }
  std::vector<MPoly> basis;
  for (int col = 0; col < n; ++col) {
    if (col_pivot[col] >= 0) continue;
    MPoly v(n, 0);
    v[col] = 1;
    for (int c2 = 0; c2 < n; ++c2) {
      if (col_pivot[c2] >= 0) {
        v[c2] = (p - mat[col_pivot[c2]][col] % p) % p;
      }
    }
    mtrim(v);
    basis.push_back(v);
  }
  const std::size_t r = basis.size();
  if (r <= 1) return {f};
  std::vector<MPoly> factors = {f};
  for (const MPoly& v : basis) {
    if (factors.size() >= r) break;
    if (mdeg(v) < 1) continue;  // constants split nothing
    std::vector<MPoly> next;
    for (const MPoly& w : factors) {
      MPoly rest = w;
      for (long s = 0; s < p && mdeg(rest) > 1; ++s) {
        MPoly vs = v;
        vs[0] = (vs[0] - s % p + p) % p;
        mtrim(vs);
        MPoly g = mgcd(rest, vs, p);
        if (mdeg(g) >= 1 && mdeg(g) < mdeg(rest)) {
          next.push_back(g);
          rest = mmonic(mdivmod(rest, g, p).first, p);
        }
      }
      if (mdeg(rest) >= 1) next.push_back(mmonic(rest, p));
    }
    factors = std::move(next);
  }
  return factors;
}

// ---------------------------------------------------------------------------
// Hensel lifting of a modular factorization of a monic integer polynomial.
// ---------------------------------------------------------------------------

void hensel_lift_range(const ZPoly& f, const std::vector<MPoly>& mods,
                       std::size_t lo, std::size_t hi, long p,
                       const Int& q_target, std::vector<ZPoly>& out) {
  if (hi - lo == 1) {
    out.push_back(zsym_mod(f, q_target));
    return;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  MPoly g0 = {1}, h0 = {1};
  for (std::size_t i = lo; i < mid; ++i) g0 = mmul(g0, mods[i], p);
  for (std::size_t i = mid; i < hi; ++i) h0 = mmul(h0, mods[i], p);
  auto [s, u] = mbezout(g0, h0, p);
  ZPoly g = m_to_z(g0);
  ZPoly h = m_to_z(h0);
  Int q(p);
  while (q < q_target) {
    ZPoly diff = zsub(f, zmul(g, h));
    ZPoly e_int(diff.size());
    for (std::size_t i = 0; i < diff.size(); ++i) e_int[i] = diff[i] / q;
    MPoly e = z_to_m(e_int, p);
    MPoly a = mmod(mmul(u, e, p), g0, p);
    MPoly b = mdivmod(msub(e, mmul(a, h0, p), p), g0, p).first;
    Int qp = q * p;
    ZPoly za = m_to_z(a), zb = m_to_z(b);
    ZPoly g_next(std::max(g.size(), za.size()), Int(0));
    for (std::size_t i = 0; i < g.size(); ++i) g_next[i] += g[i];
    for (std::size_t i = 0; i < za.size(); ++i) g_next[i] += q * za[i];
    ZPoly h_next(std::max(h.size(), zb.size()), Int(0));
    for (std::size_t i = 0; i < h.size(); ++i) h_next[i] += h[i];
    for (std::size_t i = 0; i < zb.size(); ++i) h_next[i] += q * zb[i];
    g = zsym_mod(g_next, qp);
    h = zsym_mod(h_next, qp);
    q = qp;
  }
  hensel_lift_range(g, mods, lo, mid, p, q_target, out);
  hensel_lift_range(h, mods, mid, hi, p, q_target, out);
}

// ---------------------------------------------------------------------------
// Zassenhaus factorization of a squarefree monic integer polynomial.
// ---------------------------------------------------------------------------

std::vector<long> small_primes_up_to(long bound) {
  std::vector<bool> sieve(bound + 1, true);
  std::vector<long> primes;
  for (long i = 2; i <= bound; ++i) {
    if (!sieve[i]) continue;
    if (i >= 3) primes.push_back(i);
    for (long j = 2 * i; j <= bound; j += i) sieve[j] = false;
  }
  return primes;
}

std::vector<ZPoly> factor_monic_squarefree(const ZPoly& f) {
  const int n = zdeg(f);
  if (n <= 1) return {f};
  if (n > 32) throw Error("factorization degree cap (32) exceeded");
  static const std::vector<long> primes = small_primes_up_to(10000);
  long p = 0;
  MPoly fp;
  for (long cand : primes) {
    MPoly m = z_to_m(f, cand);
    if (mdeg(m) != n) continue;
    if (mdeg(mgcd(m, mderivative(m, cand), cand)) == 0) {
      p = cand;
      fp = mmonic(m, cand);
      break;
    }
  }
  if (p == 0) throw Error("no squarefree prime found for factorization");
  std::vector<MPoly> mods = berlekamp(fp, p);
  if (mods.size() == 1) return {f};
  // Coefficient bound for monic factors: 2^n times the 2-norm of f.
  Int norm_sq(0);
  for (const auto& c : f) norm_sq += c * c;
  Int bound = (exact_sqrt(norm_sq) + 1) << n;
  Int q_target(p);
  while (q_target < 2 * bound + 1) q_target *= p;
  std::vector<ZPoly> lifted;
  hensel_lift_range(zsym_mod(f, q_target), mods, 0, mods.size(), p, q_target,
                    lifted);
  // Recombination: search subsets whose product is a true integer factor.
  std::vector<ZPoly> result;
  ZPoly current = f;
  std::vector<ZPoly> pool = lifted;
  bool progress = true;
  while (progress && !pool.empty()) {
    progress = false;
    const std::size_t r = pool.size();
    for (std::size_t d = 1; d <= r / 2 && !progress; ++d) {
      std::vector<std::size_t> idx(d);
      std::iota(idx.begin(), idx.end(), 0);
      while (true) {
        ZPoly cand = {Int(1)};
        for (std::size_t i : idx) cand = zsym_mod(zmul(cand, pool[i]), q_target);
        auto quo = z_exact_div(current, cand);
        if (quo) {
          result.push_back(cand);
          current = *quo;
          std::vector<ZPoly> next_pool;
          for (std::size_t i = 0; i < pool.size(); ++i) {
            if (std::find(idx.begin(), idx.end(), i) == idx.end()) {
              next_pool.push_back(pool[i]);
            }
          }
          pool = std::move(next_pool);
          progress = true;
          break;
        }
        // Next combination of size d.
        long pos = static_cast<long>(d) - 1;
        while (pos >= 0 && idx[pos] == r - d + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (std::size_t j = pos + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
    if (!progress) break;
  }
  if (zdeg(current) >= 1) result.push_back(current);
  return result;
}

std::vector<ZPoly> factor_squarefree_primitive(const ZPoly& g) {
  const int n = zdeg(g);
  if (n == 1) return {g};
  const Int l = g.back();
  if (l == 1) return factor_monic_squarefree(g);
  // Transform to a monic polynomial: F(x) = l^(n-1) * g(x/l).
  ZPoly F(g.size());
  F[n] = 1;
  Int pow(1);
  for (int k = n - 1; k >= 0; --k) {
    F[k] = g[k] * pow;
    pow *= l;
  }
  std::vector<ZPoly> monic_factors = factor_monic_squarefree(F);
  std::vector<ZPoly> result;
  for (const ZPoly& G : monic_factors) {
    ZPoly h(G.size());
    Int lp(1);
    for (std::size_t k = 0; k < G.size(); ++k) {
      h[k] = G[k] * lp;
      lp *= l;
    }
    result.push_back(q_to_z_primitive(z_to_q(h)));
  }
  return result;
}

RatLaurent monic_laurent(const ZPoly& f) {
  DensePoly d = z_to_q(f);
  const Rat lead = d.back();
  for (auto& c : d) c /= lead;
  return dense_to_laurent(d, 0);
}

}  // namespace

std::vector<FactorEntry> factor_over_rationals(const RatLaurent& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  long shift = 0;
  DensePoly dq = laurent_to_dense(p, shift);
  ZPoly f = q_to_z_primitive(dq);
  if (zdeg(f) == 0) return {};
  // Yun squarefree decomposition over Q on the monic version.
  DensePoly F = z_to_q(f);
  {
    const Rat lead = F.back();
    for (auto& c : F) c /= lead;
  }
  std::vector<FactorEntry> out;
  DensePoly fp = dense_derivative(F);
  DensePoly a = dense_gcd(F, fp);
  DensePoly b = dense_exact_div(F, a);
  DensePoly c = dense_exact_div(fp, a);
  DensePoly d = dense_sub(c, dense_derivative(b));
  int mult = 1;
  while (dense_deg(b) > 0) {
    DensePoly ai = dense_gcd(b, d);
    if (dense_deg(ai) > 0) {
      ZPoly gi = q_to_z_primitive(ai);
      for (const ZPoly& irr : factor_squarefree_primitive(gi)) {
        out.push_back({monic_laurent(irr), mult});
      }
    }
    b = dense_exact_div(b, ai);
    c = dense_exact_div(d, ai);
    d = dense_sub(c, dense_derivative(b));
    ++mult;
  }
  return out;
}

FoxMilnorResult fox_milnor_test(const RatLaurent& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  std::vector<FactorEntry> factors = factor_over_rationals(p);
  // Index factors by canonical representative for conjugate matching.
  struct Item {
    RatLaurent f;
    RatLaurent conj;  // canonical form of f(1/t)
    int mult;
    bool used = false;
  };
  std::vector<Item> items;
  for (const auto& fe : factors) {
    RatLaurent conj_canon =
        similarity_normalize(fe.factor.conjugate(), Ring::rational).rep;
    items.push_back({fe.factor, conj_canon, fe.multiplicity, false});
  }
  RatLaurent witness(Rat(1));
  for (auto& it : items) {
    if (it.used) continue;
    it.used = true;
    if (it.conj == it.f) {
      if (it.mult % 2 != 0) return {false, std::nullopt};
      for (int i = 0; i < it.mult / 2; ++i) witness *= it.f;
      continue;
    }
    bool matched = false;
    for (auto& other : items) {
      if (other.used || !(other.f == it.conj)) continue;
      if (other.mult != it.mult) return {false, std::nullopt};
      other.used = true;
      matched = true;
      for (int i = 0; i < it.mult; ++i) witness *= it.f;
      break;
    }
    if (!matched) return {false, std::nullopt};
  }
  return {true, witness};
}

}  // namespace dknot
