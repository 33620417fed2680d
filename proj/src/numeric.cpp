#include "dknot/numeric.hpp"

#include <cctype>
#include <map>

namespace dknot {

bool is_perfect_square(const Int& n) {
  Int a = abs(n);
  return mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

Int exact_sqrt(const Int& n) {
  Int a = abs(n);
  Int r;
  mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

namespace {

bool is_probable_prime(const Int& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

// Nontrivial factor of an odd composite with no small prime factors
// (Pollard's rho with deterministic polynomial offsets).
Int rho_split(const Int& n) {
  for (unsigned long c = 1;; ++c) {
    Int x(2), y(2), d(1);
    do {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      Int diff = x > y ? Int(x - y) : Int(y - x);
      if (diff == 0) {
        d = 0;  // cycle without a factor; retry with the next offset
        break;
      }
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    } while (d == 1);
    if (d != 0 && d != n) return d;
  }
}

void count_prime_factors(const Int& a, std::map<Int, long>& counts) {
  if (a == 1) return;
  if (is_probable_prime(a)) {
    ++counts[a];
    return;
  }
  if (mpz_perfect_power_p(a.get_mpz_t())) {
    for (unsigned long k = 2;; ++k) {
      Int root;
      if (mpz_root(root.get_mpz_t(), a.get_mpz_t(), k) != 0) {
        std::map<Int, long> inner;
        count_prime_factors(root, inner);
        for (const auto& [p, e] : inner) counts[p] += e * long(k);
        return;
      }
    }
  }
  Int d = rho_split(a);
  count_prime_factors(d, counts);
  count_prime_factors(Int(a / d), counts);
}

constexpr long kTrialBound = 10000;

}  // namespace

Int squarefree_part(const Int& n) {
  if (n == 0) return 0;
  Int a = abs(n);
  Int result = n < 0 ? Int(-1) : Int(1);
  // Strip small primes by trial division, then finish the (rare) large
  // cofactor with primality testing, perfect-power detection, and rho.
  for (Int p = 2; p <= kTrialBound && p * p <= a; p == 2 ? p = 3 : p += 2) {
    int count = 0;
    while (mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t())) {
      a /= p;
      ++count;
    }
    if (count % 2 == 1) result *= p;
  }
  if (a > 1) {
    if (a <= Int(kTrialBound) * kTrialBound) {
      // No factor below min(kTrialBound, sqrt(a)) survived, so a is prime.
      result *= a;
    } else {
      std::map<Int, long> counts;
      count_prime_factors(a, counts);
      for (const auto& [p, e] : counts) {
        if (e % 2 == 1) result *= p;
      }
    }
  }
  return result;
}

static bool valid_integer_text(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Int parse_int(const std::string& text) {
  if (!valid_integer_text(text)) {
    throw ParseError("not a decimal integer: '" + text + "'");
  }
  return Int(text, 10);
}

Rat parse_rat(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    return Rat(parse_int(text));
  }
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + text + "'");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat mod_one(const Rat& q) {
  Int num = q.get_num();
  Int den = q.get_den();
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  Rat out(r, den);
  out.canonicalize();
  return out;
}

}  // namespace dknot
