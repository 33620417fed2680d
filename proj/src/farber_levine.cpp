#include "dknot/farber_levine.hpp"

#include <algorithm>
#include <random>

#include "dknot/densepoly.hpp"

namespace dknot {

namespace {

void check_cancel(const CancelToken* cancel) {
  if (cancel && cancel->stop_requested()) throw Cancelled();
}

IntLaurentMatrix conjugate_transpose(const IntLaurentMatrix& m) {
  IntLaurentMatrix r(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      r.at(j, i) = m.at(i, j).conjugate();
    }
  }
  return r;
}

// [conj(M)' | W], the presentation of A over Lambda.
IntLaurentMatrix module_presentation(const SeifertData& s) {
  IntLaurentMatrix mbt = conjugate_transpose(presentation_matrix(s));
  IntLaurentMatrix w = consistency_w(s);
  IntLaurentMatrix pres(mbt.rows(), mbt.cols() + w.cols());
  pres.set_block(0, 0, mbt);
  pres.set_block(0, mbt.cols(), w);
  return pres;
}

// Integer matrix of the columns of `mat` and their t-shifts, in the group
// ring Z[t]/(t^k-1): row index (a, j) is the coefficient of t^j in
// component a; column index (c, sh) is t^sh times column c.
IntMatrix expand_mod(const IntLaurentMatrix& mat, long k) {
  const std::size_t n = mat.rows();
  const std::size_t c = mat.cols();
  IntMatrix e(n * k, c * k);
  for (std::size_t col = 0; col < c; ++col) {
    for (long sh = 0; sh < k; ++sh) {
      for (std::size_t a = 0; a < n; ++a) {
        for (const auto& [exp, coef] : mat.at(a, col).coeffs()) {
          long j = ((exp + sh) % k + k) % k;
          std::size_t row = a * k + j;
          e.at(row, col * k + sh) = e.at(row, col * k + sh) + coef;
        }
      }
    }
  }
  return e;
}

struct QuotientGroup {
  SmithResult smith;
  Int order = 1;       // product of nonzero invariant factors
  bool finite = true;  // false when a zero invariant factor appears
};

QuotientGroup quotient_group(const IntLaurentMatrix& pres, long k) {
  QuotientGroup g;
  IntMatrix e = expand_mod(pres, k);
  g.smith = smith_form(e);
  std::size_t nonzero = 0;
  for (const Int& d : g.smith.diag) {
    if (d == 0) {
      g.finite = false;
    } else {
      g.order *= d;
      ++nonzero;
    }
  }
  if (nonzero < e.rows()) g.finite = false;  // rank deficit leaves free rank
  return g;
}

// Exact inverse of a unimodular integer matrix.
IntMatrix unimodular_inverse(const IntMatrix& u) {
  RatMatrix inv = field_inverse(to_rational(u));
  IntMatrix r(inv.rows(), inv.cols());
  for (std::size_t i = 0; i < inv.rows(); ++i) {
    for (std::size_t j = 0; j < inv.cols(); ++j) {
      if (!is_integer(inv.at(i, j))) {
        throw Error("matrix expected to be unimodular is not");
      }
      r.at(i, j) = inv.at(i, j).get_num();
    }
  }
  return r;
}

Int positive_mod(const Int& v, const Int& d) {
  Int r = v % d;
  if (r < 0) r += d;
  return r;
}

// Reduces row i of a generator-coordinate matrix modulo d_i.
void reduce_rows(IntMatrix& m, const std::vector<Int>& diag) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      m.at(i, j) = positive_mod(m.at(i, j), diag[i]);
    }
  }
}

bool is_identity_mod(const IntMatrix& m, const std::vector<Int>& diag) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Int want = i == j ? 1 : 0;
      if (positive_mod(m.at(i, j) - want, diag[i]) != 0) return false;
    }
  }
  return true;
}

// True when the endomorphism given by matrix c on the finite group with
// invariant factors `diag` is bijective.
bool group_endo_bijective(const IntMatrix& c, const std::vector<Int>& diag) {
  const std::size_t g = diag.size();
  if (g == 0) return true;
  IntMatrix stacked(g, 2 * g);
  stacked.set_block(0, 0, c);
  for (std::size_t i = 0; i < g; ++i) stacked.at(i, g + i) = diag[i];
  SmithResult sf = smith_form(stacked);
  if (sf.diag.size() < g) return false;
  for (std::size_t i = 0; i < g; ++i) {
    if (sf.diag[i] != 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Truncated linear solver over Z[t,1/t] for [W | conj(M)'] (b; l) = rhs.
// Unknown coefficients range over exponents [lo, hi]; only the b part of a
// solution is reported (the l part is absorbed into the presentation).

struct LambdaSystem {
  std::size_t n = 0;
  long lo = 0, width = 0;
  long elo = 0, eh = 0;
  IntMatrix e;
  SmithResult smith;
  std::vector<std::vector<IntLaurent>> kernel;  // b parts of kernel vectors
};

LambdaSystem build_lambda_system(const IntLaurentMatrix& pres, long lo,
                                 long hi) {
  LambdaSystem sys;
  sys.n = pres.rows();
  sys.lo = lo;
  sys.width = hi - lo + 1;
  long elo = lo, ehi = hi;
  for (std::size_t i = 0; i < pres.rows(); ++i) {
    for (std::size_t j = 0; j < pres.cols(); ++j) {
      const IntLaurent& p = pres.at(i, j);
      if (p.is_zero()) continue;
      elo = std::min(elo, lo + p.min_exp());
      ehi = std::max(ehi, hi + p.max_exp());
    }
  }
  sys.elo = elo;
  sys.eh = ehi - elo + 1;
  sys.e = IntMatrix(sys.n * sys.eh, pres.cols() * sys.width);
  for (std::size_t comp = 0; comp < pres.cols(); ++comp) {
    for (long sh = 0; sh < sys.width; ++sh) {
      std::size_t col = comp * sys.width + sh;
      for (std::size_t a = 0; a < sys.n; ++a) {
        IntLaurent shifted = pres.at(a, comp).shifted(lo + sh);
        for (const auto& [exp, coef] : shifted.coeffs()) {
          std::size_t row = a * sys.eh + (exp - elo);
          sys.e.at(row, col) = sys.e.at(row, col) + coef;
        }
      }
    }
  }
  sys.smith = smith_form(sys.e);
  // Unknown layout: components 0..n-1 are the conj(M)' coefficients (the
  // absorbed part), components n..2n-1 the W coefficients, which form the
  // reported solution.
  for (std::size_t j = 0; j < sys.e.cols(); ++j) {
    bool in_kernel = j >= sys.smith.diag.size() || sys.smith.diag[j] == 0;
    if (!in_kernel) continue;
    std::vector<IntLaurent> b(sys.n);
    for (std::size_t a = 0; a < sys.n; ++a) {
      std::size_t base = (sys.n + a) * sys.width;
      for (long sh = 0; sh < sys.width; ++sh) {
        b[a].add_term(lo + sh, sys.smith.v.at(base + sh, j));
      }
    }
    sys.kernel.push_back(std::move(b));
  }
  return sys;
}

std::optional<std::vector<IntLaurent>> solve_lambda(
    const LambdaSystem& sys, const std::vector<IntLaurent>& rhs) {
  IntMatrix r(sys.e.rows(), 1);
  for (std::size_t a = 0; a < sys.n; ++a) {
    for (const auto& [exp, coef] : rhs[a].coeffs()) {
      if (exp < sys.elo || exp > sys.elo + sys.eh - 1) return std::nullopt;
      r.at(a * sys.eh + (exp - sys.elo), 0) = coef;
    }
  }
  IntMatrix ur = sys.smith.u * r;
  IntMatrix y(sys.e.cols(), 1);
  for (std::size_t i = 0; i < sys.e.rows(); ++i) {
    Int v = ur.at(i, 0);
    if (i < sys.smith.diag.size() && sys.smith.diag[i] != 0) {
      if (v % sys.smith.diag[i] != 0) return std::nullopt;
      y.at(i, 0) = v / sys.smith.diag[i];
    } else if (v != 0) {
      return std::nullopt;
    }
  }
  IntMatrix x = sys.smith.v * y;
  std::vector<IntLaurent> b(sys.n);
  for (std::size_t a = 0; a < sys.n; ++a) {
    std::size_t base = (sys.n + a) * sys.width;
    for (long sh = 0; sh < sys.width; ++sh) {
      b[a].add_term(sys.lo + sh, x.at(base + sh, 0));
    }
  }
  return b;
}

// Projects a rational-function value to Q/Z: reduce modulo t^k - 1 into
// Q[t]/(t^k-1) (the denominator must be coprime to the modulus), then take
// the coefficient of t^0 modulo 1.
Rat project_to_q_mod_z(const RationalFunction& z, long k) {
  if (z.is_zero()) return Rat(0);
  long shift = 0;
  DensePoly num = laurent_to_dense(z.num(), shift);
  long den_shift = 0;
  DensePoly den = laurent_to_dense(z.den(), den_shift);
  DensePoly modulus(k + 1);
  modulus[0] = -1;
  modulus[k] = 1;
  dense_trim(modulus);
  ExtGcd eg = dense_ext_gcd(den, modulus);
  if (dense_deg(eg.g) != 0) {
    throw LiftFailure("pairing denominator shares a factor with t^k-1");
  }
  DensePoly den_inv =
      dense_mod(dense_scale(eg.s, Rat(1) / eg.g[0]), modulus);
  DensePoly v = dense_mod(dense_mul(dense_mod(num, modulus), den_inv), modulus);
  long s = ((shift % k) + k) % k;
  DensePoly ts(s + 1);
  ts[s] = 1;
  v = dense_mod(dense_mul(v, ts), modulus);
  Rat c0 = v.empty() ? Rat(0) : v[0];
  return mod_one(c0);
}

}  // namespace

Int FiniteTorsionModule::group_order() const {
  Int o = 1;
  for (const Int& d : smith_diagonal) o *= d;
  return o;
}

FiniteTorsionModule torsion_module(const SeifertData& s, FlBounds bounds,
                                   const CancelToken* cancel) {
  ValidityReport validity = validate(s);
  if (!validity.verdict) throw InvalidCandidate(validity.failure_reason());
  FiniteTorsionModule mod;
  mod.n_parity = s.n_parity;
  mod.ambient_dim = s.dim();
  if (s.dim() == 0) return mod;
  IntLaurentMatrix pres = module_presentation(s);
  if (!gamma_cokernel_trivial(to_rational_laurent(pres))) {
    throw InfiniteModule();
  }
  std::map<long, QuotientGroup> cache;
  auto group_at = [&](long k) -> const QuotientGroup& {
    auto it = cache.find(k);
    if (it == cache.end()) {
      check_cancel(cancel);
      it = cache.emplace(k, quotient_group(pres, k)).first;
    }
    return it->second;
  };
  long stable_k = 0;
  for (long k = 1; 2 * k <= bounds.k_max; ++k) {
    const QuotientGroup& a_k = group_at(k);
    const QuotientGroup& a_2k = group_at(2 * k);
    if (!a_k.finite || !a_2k.finite) throw InfiniteModule();
    if (a_k.order == a_2k.order) {
      stable_k = 2 * k;
      break;
    }
  }
  if (stable_k == 0) {
    throw BoundExceeded("quotients A/(t^k-1)A did not stabilize by k_max");
  }
  const QuotientGroup& group = group_at(stable_k);
  const std::size_t n = s.dim();
  const long k = stable_k;
  const std::size_t total = n * k;
  // Indices of the nontrivial cyclic factors.
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < group.smith.diag.size(); ++i) {
    if (group.smith.diag[i] > 1) kept.push_back(i);
  }
  for (std::size_t i : kept) mod.smith_diagonal.push_back(group.smith.diag[i]);
  if (!mod.smith_diagonal.empty()) {
    mod.m_exponent = mod.smith_diagonal.back();
  }
  if (mod.m_exponent > bounds.m_max) {
    throw BoundExceeded("module exponent exceeds m_max");
  }
  IntMatrix u_inv = unimodular_inverse(group.smith.u);
  // Generator lifts: columns of U^-1 at the kept indices, read as vectors
  // over Lambda via (a, j) -> t^j e_a.
  for (std::size_t idx : kept) {
    std::vector<IntLaurent> lift(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (long j = 0; j < k; ++j) {
        Int c = u_inv.at(a * k + j, idx);
        if (c != 0) lift[a].add_term(j, c);
      }
    }
    mod.generator_lifts.push_back(std::move(lift));
  }
  // t acts on expanded coordinates as the exponent shift permutation.
  IntMatrix perm(total, total);
  for (std::size_t a = 0; a < n; ++a) {
    for (long j = 0; j < k; ++j) {
      perm.at(a * k + (j + 1) % k, a * k + j) = 1;
    }
  }
  IntMatrix t_full = group.smith.u * perm * u_inv;
  const std::size_t g = kept.size();
  mod.t_action = IntMatrix(g, g);
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = 0; j < g; ++j) {
      mod.t_action.at(i, j) = t_full.at(kept[i], kept[j]);
    }
  }
  reduce_rows(mod.t_action, mod.smith_diagonal);
  if (g > 0) {
    // Columns of t_full below a kept row but at a dropped (order-1) column
    // are irrelevant (those generators are zero); rows at dropped indices
    // likewise. Order of t on the group:
    IntMatrix power = mod.t_action;
    long order = 0;
    for (long kk = 1; kk <= k; ++kk) {
      if (is_identity_mod(power, mod.smith_diagonal)) {
        order = kk;
        break;
      }
      power = power * mod.t_action;
      reduce_rows(power, mod.smith_diagonal);
    }
    if (order == 0) {
      throw Error("t-action order does not divide the stabilized k");
    }
    mod.t_order = order;
    // Type K condition: t - 1 acts invertibly on the finite module.
    IntMatrix t_minus_1 = mod.t_action;
    for (std::size_t i = 0; i < g; ++i) {
      t_minus_1.at(i, i) = t_minus_1.at(i, i) - 1;
    }
    if (!group_endo_bijective(t_minus_1, mod.smith_diagonal)) {
      throw Error("t-1 does not act invertibly on the torsion module");
    }
  }
  return mod;
}

FLPairingTable fl_pairing(const SeifertData& s,
                          const FiniteTorsionModule& t_mod,
                          FlPairingOptions options,
                          const CancelToken* cancel) {
  FLPairingTable table;
  table.orders = t_mod.smith_diagonal;
  const std::size_t g = t_mod.generator_count();
  table.values = RatMatrix(g, g);
  if (g == 0) return table;
  const std::size_t n = s.dim();
  IntLaurentMatrix mbt = conjugate_transpose(presentation_matrix(s));
  IntLaurentMatrix pres = module_presentation(s);
  const long k = t_mod.t_order * options.k_scale;
  const Int m = t_mod.m_exponent * options.m_scale;
  // Degree window for the truncated solves: the presentation determinant has
  // degree at most n, generator lifts reach the stabilized shift range.
  long lift_hi = 0;
  for (const auto& lift : t_mod.generator_lifts) {
    for (const IntLaurent& p : lift) {
      if (!p.is_zero()) lift_hi = std::max(lift_hi, p.max_exp());
    }
  }
  const long pad = static_cast<long>(n) + k + 2;
  LambdaSystem sys = build_lambda_system(pres, -pad, lift_hi + pad);
  std::mt19937 rng(options.seed);
  std::uniform_int_distribution<int> small(-2, 2);
  auto perturb = [&](std::vector<IntLaurent>& vec) {
    if (options.random_shifts == 0 || sys.kernel.empty()) return;
    for (int r = 0; r < options.random_shifts; ++r) {
      const auto& ker = sys.kernel[rng() % sys.kernel.size()];
      Int c = small(rng);
      for (std::size_t a = 0; a < n; ++a) vec[a] += ker[a] * c;
    }
  };
  auto perturb_lift = [&](std::vector<IntLaurent>& vec) {
    if (options.random_shifts == 0) return;
    // Class-preserving change of representative: add columns of the
    // presentation with small Laurent coefficients.
    for (std::size_t c = 0; c < pres.cols(); ++c) {
      IntLaurent coef;
      coef.add_term(rng() % 2, small(rng));
      for (std::size_t a = 0; a < n; ++a) vec[a] += pres.at(a, c) * coef;
    }
  };
  IntLaurent tk1;
  tk1.add_term(k, 1);
  tk1.add_term(0, -1);
  QfMatrix mbt_f = to_function_matrix(mbt);
  std::vector<std::vector<IntLaurent>> lifts = t_mod.generator_lifts;
  for (auto& lift : lifts) perturb_lift(lift);
  // Per-generator lifts B and S with W B + conj(M)' L = m X, (t^k-1) X.
  std::vector<std::vector<IntLaurent>> b_el(g), s_el(g);
  for (std::size_t i = 0; i < g; ++i) {
    check_cancel(cancel);
    std::vector<IntLaurent> rhs_b(n), rhs_s(n);
    for (std::size_t a = 0; a < n; ++a) {
      rhs_b[a] = lifts[i][a] * m;
      rhs_s[a] = lifts[i][a] * tk1;
    }
    auto b = solve_lambda(sys, rhs_b);
    auto se = solve_lambda(sys, rhs_s);
    if (!b || !se) {
      throw LiftFailure("no Laurent solution within the degree window");
    }
    b_el[i] = std::move(*b);
    s_el[i] = std::move(*se);
    perturb(b_el[i]);
    perturb(s_el[i]);
  }
  RationalFunction tk1_f{to_rational_coeffs(tk1)};
  RationalFunction m_f{Rat(m)};
  for (std::size_t j = 0; j < g; ++j) {
    check_cancel(cancel);
    std::vector<IntLaurent> y = t_mod.generator_lifts[j];
    perturb_lift(y);
    QfMatrix rhs(n, 1);
    for (std::size_t a = 0; a < n; ++a) {
      rhs.at(a, 0) = RationalFunction(to_rational_coeffs(y[a]));
    }
    QfMatrix sol = field_solve(mbt_f, rhs);
    for (std::size_t i = 0; i < g; ++i) {
      RationalFunction v_s, v_b;
      for (std::size_t a = 0; a < n; ++a) {
        v_s = v_s + RationalFunction(to_rational_coeffs(s_el[i][a])) *
                        sol.at(a, 0);
        v_b = v_b + RationalFunction(to_rational_coeffs(b_el[i][a])) *
                        sol.at(a, 0);
      }
      RationalFunction z = -v_s + (tk1_f / m_f) * v_b;
      table.values.at(i, j) = project_to_q_mod_z(z, k);
    }
  }
  return table;
}

bool mk_independence_check(const SeifertData& s,
                           const FiniteTorsionModule& t_mod, int a, int b) {
  if (a < 1 || b < 1) throw Error("independence scales must be >= 1");
  FLPairingTable base = fl_pairing(s, t_mod);
  FlPairingOptions options;
  options.m_scale = a;
  options.k_scale = b;
  return fl_pairing(s, t_mod, options) == base;
}

}  // namespace dknot
