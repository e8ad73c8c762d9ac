#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace sym {

// Exact rationals over GMP; always canonical (lowest terms, positive denominator).
using Coefficient = mpq_class;
using Integer = mpz_class;

inline bool is_integral(const Coefficient& c)
{
    return c.get_den() == 1;
}

// "7", "-2", "3/4"
std::string to_string(const Coefficient& c);
std::string to_string(const Integer& z);
// Accepts the forms produced by to_string. Throws std::invalid_argument.
Coefficient parse_coefficient(std::string_view text);

} // namespace sym
