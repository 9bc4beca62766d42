#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace singindex {

using Integer = mpz_class;
// mpq_class keeps values canonical: lowest terms, positive denominator, 0 == 0/1.
using Rational = mpq_class;

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "n" or "n/d" with optional sign. Throws RejectedInput.
Rational parse_rational(std::string_view text);

/// Converts to int64; throws RejectedInput if q is not an integer or overflows.
std::int64_t to_int64(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace singindex
