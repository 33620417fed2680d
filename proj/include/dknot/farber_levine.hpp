#pragma once

#include <atomic>
#include <map>
#include <utility>
#include <vector>

#include "dknot/blanchfield.hpp"

namespace dknot {

// Cooperative cancellation for the long-running searches below. The caller
// keeps the token alive and may set it from another thread; the searches
// poll it and throw Cancelled.
class CancelToken {
 public:
  void request_stop() { stop_.store(true, std::memory_order_relaxed); }
  bool stop_requested() const {
    return stop_.load(std::memory_order_relaxed);
  }

 private:
  std::atomic<bool> stop_{false};
};

struct FlBounds {
  long k_max = 24;    // largest k tried when stabilizing A/(t^k-1)A
  long m_max = 10000; // largest permitted exponent of the finite module
};

// The finite abelian group A = coker[conj(M)' | W] over Z[t,1/t], presented
// in Smith normal coordinates, together with the action of t. Only the
// nontrivial cyclic factors are kept.
struct FiniteTorsionModule {
  std::vector<Int> smith_diagonal;  // invariant factors > 1, d1 | d2 | ...
  IntMatrix t_action;               // g x g integer matrix, row i mod d_i
  Int m_exponent = 1;               // exponent of the group (1 when trivial)
  long t_order = 1;                 // smallest k with t^k = identity
  // Lift of each generator to the ambient free module Lambda^n.
  std::vector<std::vector<IntLaurent>> generator_lifts;
  Parity n_parity = Parity::odd;
  std::size_t ambient_dim = 0;

  std::size_t generator_count() const { return smith_diagonal.size(); }
  bool trivial() const { return smith_diagonal.empty(); }
  Int group_order() const;
};

// Computes the torsion module from valid Seifert data. Throws InfiniteModule
// when the cokernel does not vanish rationally, BoundExceeded when the
// quotients A/(t^k-1)A fail to stabilize within bounds or the exponent
// exceeds m_max, and Cancelled when the token is triggered.
FiniteTorsionModule torsion_module(const SeifertData& s, FlBounds bounds = {},
                                   const CancelToken* cancel = nullptr);

// Exact values of the torsion linking pairing on generator pairs, as
// rationals in [0,1) read modulo 1.
struct FLPairingTable {
  std::vector<Int> orders;  // generator orders, same as smith_diagonal
  RatMatrix values;         // values[i][j] = [x_i, x_j] in Q/Z

  bool operator==(const FLPairingTable& o) const {
    return orders == o.orders && values == o.values;
  }
};

struct FlPairingOptions {
  Int m_scale = 1;        // use m' = m_scale * m_exponent
  long k_scale = 1;       // use k' = k_scale * t_order
  unsigned seed = 0;      // seed for randomized lift perturbation
  int random_shifts = 0;  // number of homogeneous kernel shifts per lift
};

// Computes the pairing table for the generators of t_mod. The value for a
// pair (x, y) is -V(S,Y) + ((t^k-1)/m) V(B,Y) with V(a,w) = a' (conj(M)')^-1 w,
// where W B + conj(M)' L1 = m X and W S + conj(M)' L2 = (t^k-1) X are solved
// over Z[t,1/t] by truncated integer linear algebra. The result is projected
// to Q/Z by reduction modulo t^k-1 followed by extraction of the constant
// coefficient. Throws LiftFailure when a truncated solve has no solution.
FLPairingTable fl_pairing(const SeifertData& s,
                          const FiniteTorsionModule& t_mod,
                          FlPairingOptions options = {},
                          const CancelToken* cancel = nullptr);

// Recomputes the table with m' = a*m and k' = b*k and reports whether it
// agrees with the plain table (it must, for small a, b >= 1).
bool mk_independence_check(const SeifertData& s,
                           const FiniteTorsionModule& t_mod, int a, int b);

}  // namespace dknot
