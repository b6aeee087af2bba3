#pragma once

#include <cstddef>

#include "zoopt/rng.hpp"
#include "zoopt/types.hpp"

namespace zoopt {

/// Uniform draw from the unit l1 sphere {v : |v|_1 = 1}.
///
/// Magnitudes are i.i.d. standard exponentials normalised to sum one (a flat
/// Dirichlet, i.e. uniform on the simplex) and each coordinate gets an
/// independent Rademacher sign.
/// Throws InvalidDimension for d = 0.
Vector sample_sphere_l1(std::size_t d, RngStream& rng);

/// Uniform draw from the unit l2 sphere (normalised Gaussian vector).
Vector sample_sphere_l2(std::size_t d, RngStream& rng);

/// Uniform draw from the unit l1 or l2 ball: a sphere draw scaled by U^{1/d}.
Vector sample_ball(Scheme norm, std::size_t d, RngStream& rng);

/// Sphere draw for the given scheme (L1 -> l1 sphere, L2 -> l2 sphere).
Vector sample_sphere(Scheme norm, std::size_t d, RngStream& rng);

}  // namespace zoopt
