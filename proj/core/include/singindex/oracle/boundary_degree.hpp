#pragma once

#include "singindex/polynomial.hpp"

#include <optional>
#include <vector>

namespace singindex::oracle {

/// Degree of F/|F| on the boundary of the box [-eps, eps]^n (n = 2 or 3),
/// from signed crossings of a ray by the piecewise-linear image of a mesh with
/// `resolution` cells per edge. nullopt if a mesh vertex maps to 0.
std::optional<int> boundary_degree(const std::vector<Polynomial>& f, const Rational& eps, unsigned resolution);

/// boundary_degree at each resolution; the common value if they all agree.
std::optional<int> stable_boundary_degree(const std::vector<Polynomial>& f, const Rational& eps,
                                          const std::vector<unsigned>& resolutions = {8, 16});

}  // namespace singindex::oracle
