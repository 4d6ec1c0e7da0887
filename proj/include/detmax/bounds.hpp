#pragma once

#include "detmax/bigint.hpp"

namespace detmax {

/// Determinant bounds for order n == 2 (mod 4). ew_upper and skew_upper are
/// the denominators of the ratios R_M and R_K.
struct BoundsReport {
    int n = 0;
    BigInt ew_upper;    // (2n-2) * (n-2)^(n/2-1)
    BigInt skew_upper;  // (2n-3) * (n-3)^(n/2-1)
    BigInt g_lower;     // 2 * (n+2)^(n/2-1)
    BigInt f_lower;     // (n+1)^(n/2-1)
    bool skew_bound_feasible = false;  // 2n-3 is a perfect square
};

/// Throws std::invalid_argument unless n >= 6 and n == 2 (mod 4).
BoundsReport bounds_report(int n);

}  // namespace detmax
