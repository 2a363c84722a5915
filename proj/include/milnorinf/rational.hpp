#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace milnorinf {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exact decimal text: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "p" or "p/q" (optional leading sign). Throws Error(Parse) on bad input.
Rational parse_rational(std::string_view text);

/// Comma-separated rationals, e.g. "0,-1,1/2,0".
std::vector<Rational> parse_rational_list(std::string_view text);

/// Comma-separated positive integers, e.g. "2,1,5".
std::vector<int> parse_int_list(std::string_view text);

bool is_integer(const Rational& q);

}  // namespace milnorinf
