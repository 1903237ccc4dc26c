#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hankel {

using Int = mpz_class;
using Rat = mpq_class;  // gmp keeps results canonical: lowest terms, positive denominator

// p/q in lowest terms; throws std::domain_error when q == 0.
Rat make_rat(const Int& p, const Int& q);

// Division that refuses a zero divisor instead of trapping inside gmp.
Rat rat_div(const Rat& a, const Rat& b);

// "p/q", or "p" when q == 1.
std::string to_string(const Rat& r);
std::string to_string(const Int& z);

// Accepts "p", "p/q", "-p/q". Throws std::invalid_argument on junk.
Rat parse_rat(std::string_view s);

bool is_integer(const Rat& r);

}  // namespace hankel
