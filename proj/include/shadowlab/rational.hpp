#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace shadowlab {

using Integer = mpz_class;
using Rational = mpq_class;

template <class T>
using Matrix = std::vector<std::vector<T>>;

using IntMatrix = Matrix<std::int64_t>;
using RatMatrix = Matrix<Rational>;

/// "p/q" for non-integers, "p" otherwise. Always canonical.
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on junk or zero denominator.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& x);

/// Exact conversion; throws std::domain_error when x is not an integer or overflows int64.
std::int64_t to_int64(const Rational& x);
std::int64_t to_int64(const Integer& x);

Rational pow2(long e);

}  // namespace shadowlab
