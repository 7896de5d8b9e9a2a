#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace chiclass {

using Integer = mpz_class;
using Rat = mpq_class;

// Parses "p", "-p" or "p/q" (surrounding blanks allowed). Throws DomainError
// on anything else, including a zero denominator.
Rat parse_rat(std::string_view text);

std::string to_string(const Rat& r);

inline bool is_integral(const Rat& r) { return r.get_den() == 1; }

// floor(r) as an Integer.
Integer floor(const Rat& r);

Integer binomial(long n, long k);

Integer factorial(long n);

}  // namespace chiclass
