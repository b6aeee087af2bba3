#pragma once

#include <cstddef>

#include "zoopt/types.hpp"

// Closed-form constants of the two smoothing schemes.

namespace zoopt {

/// Dimension factor of the second-moment bound.
///   L1: 48 (1 + sqrt2)^2 d^{2 - 2/p}
///   L2: sqrt2 min{q, ln d} d^{1 - 2/p}   (q = infinity for p = 1)
/// Throws InvalidConfig("p") unless p is 1 or 2, InvalidDimension for d = 0.
double kappa(Scheme scheme, int p, std::size_t d);

/// Upper bound on E|g|_q^2 for one two-point estimate g at noise level delta.
///   L1: kappa (M2^2 + d^2 delta^2 / (12 (1 + sqrt2)^2 gamma^2))
///   L2: kappa (d M2^2 + d^2 delta^2 / (sqrt2 gamma^2))
/// Throws InvalidConfig("gamma") if gamma <= 0 while delta > 0.
double variance_bound(Scheme scheme, int p, std::size_t d, double m2, double delta,
                      double gamma);

/// Upper bound on f_gamma(x) - f(x).
///   nonsmooth: L1 2 gamma M2 / sqrt(d),  L2 gamma M2
///   smooth:    L1 (2/d) gamma^2 L^2,     L2 gamma^2 L^2
/// `m2_or_l` is M2 in the nonsmooth setting and L in the smooth one.
double smoothing_bias_bound(Scheme scheme, Setting setting, double m2_or_l, double gamma,
                            std::size_t d);

/// Lipschitz constant of the smoothed gradient: d M / gamma (L1), sqrt(d) M / gamma (L2).
double smoothing_lipschitz_grad(Scheme scheme, double m, double gamma, std::size_t d);

}  // namespace zoopt
