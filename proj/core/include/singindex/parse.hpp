#pragma once

#include "singindex/polynomial.hpp"

#include <string_view>
#include <vector>

namespace singindex {

/// Parses the polynomial text format, e.g. "x^2 + 2/3*x*y - z".
///
/// Grammar: identifiers drawn from the context, non-negative integer literals,
/// binary + - * ^, division by a non-zero constant (so "a/b" is a rational),
/// unary minus and parentheses. Throws RejectedInput with the byte offset of
/// the first offending token.
Polynomial parse_polynomial(std::string_view text, const Context& ctx);

std::vector<Polynomial> parse_polynomials(const std::vector<std::string>& texts, const Context& ctx);

}  // namespace singindex
