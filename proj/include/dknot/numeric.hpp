#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "dknot/errors.hpp"

namespace dknot {

using Int = mpz_class;
using Rat = mpq_class;

// True when the absolute value of n is a perfect square.
bool is_perfect_square(const Int& n);

// Exact integer square root of a perfect square; caller must check first.
Int exact_sqrt(const Int& n);

// Squarefree part of a nonzero integer (sign preserved): n = s * square.
Int squarefree_part(const Int& n);

// Parses "123" or "-4/7" into an exact rational. Throws ParseError.
Rat parse_rat(const std::string& text);

// Renders a rational as "p" or "p/q" with q > 1.
std::string rat_to_string(const Rat& q);

// Parses a decimal integer string. Throws ParseError.
Int parse_int(const std::string& text);

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Reduces a rational into the half-open interval [0,1) modulo 1.
Rat mod_one(const Rat& q);

}  // namespace dknot
