#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <string>
#include <string_view>

namespace zoopt {

using Vector = Eigen::VectorXd;

/// Randomization used by the smoothing scheme: l1 or l2 sphere/ball.
enum class Scheme { L1, L2 };

/// Whether the objective is only Lipschitz or additionally has a Lipschitz gradient.
enum class Setting { Nonsmooth, Smooth };

std::string to_string(Scheme s);
std::string to_string(Setting s);
Scheme parse_scheme(std::string_view text);
Setting parse_setting(std::string_view text);

/// Exponent value standing for the max-norm (p or q = infinity).
inline constexpr int kMaxNorm = 0;

/// l_p norm for p in {1, 2, kMaxNorm}.
double lp_norm(const Vector& v, int p);

/// Dual exponent of p in {1, 2}: 2 -> 2, 1 -> kMaxNorm.
int dual_exponent(int p);

/// Componentwise sign with sign(0) = 0.
Vector sign(const Vector& v);

bool all_finite(const Vector& v);

}  // namespace zoopt
