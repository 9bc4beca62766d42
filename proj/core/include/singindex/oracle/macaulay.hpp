#pragma once

#include "singindex/polynomial.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace singindex::oracle {

/// dim_Q Q[x] / (I + m^D), by linear algebra on the truncated Macaulay matrix.
std::size_t truncated_colength(const std::vector<Polynomial>& generators, unsigned bound);

/// Local colength at 0: the first value of truncated_colength that repeats for
/// two consecutive bounds. nullopt if it keeps growing up to max_bound.
std::optional<std::size_t> macaulay_colength(const std::vector<Polynomial>& generators, unsigned max_bound = 40);

/// Colength at an arbitrary rational point p (generators translated x -> x + p).
std::optional<std::size_t> macaulay_colength_at(const std::vector<Polynomial>& generators,
                                                const std::vector<Rational>& point, unsigned max_bound = 40);

}  // namespace singindex::oracle
