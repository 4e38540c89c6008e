#pragma once

#include <cstddef>

namespace zlab {

// Bernoulli numbers B_2, B_4, ..., B_60, stored as exact decimal
// numerator/denominator strings and rendered to double once at startup.
inline constexpr int kBernoulliCount = 30;  // B_{2k}, k = 1..30

/// B_{2k} for k in [1, 30].
double bernoulli_2k(int k);

/// B_{2k} / (2k)! for k in [1, 30] (Euler-Maclaurin weights).
double bernoulli_2k_over_factorial(int k);

/// B_{2k} / (2k * (2k-1)) for k in [1, 30] (Stirling-series weights).
double bernoulli_2k_stirling_weight(int k);

}  // namespace zlab
