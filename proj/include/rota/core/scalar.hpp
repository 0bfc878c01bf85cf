#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rota {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator as long as construction goes through parse_scalar
/// or arithmetic (never raw set_str without canonicalize).
using Scalar = mpq_class;
using BigInt = mpz_class;

/// Parses "p", "-p" or "p/q". Throws ValidationError on malformed text or a
/// zero denominator.
Scalar parse_scalar(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Scalar& value);

inline bool is_zero(const Scalar& value) { return sgn(value) == 0; }

}  // namespace rota
