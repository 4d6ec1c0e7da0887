#include "detmax/bounds.hpp"

#include <stdexcept>

namespace detmax {

BoundsReport bounds_report(int n) {
    if (n < 6 || n % 4 != 2)
        throw std::invalid_argument("bounds_report: order must be >= 6 and == 2 (mod 4)");
    const unsigned long e = static_cast<unsigned long>(n / 2 - 1);
    BoundsReport b;
    b.n = n;
    b.ew_upper = BigInt(2 * n - 2) * big_pow(BigInt(n - 2), e);
    b.skew_upper = BigInt(2 * n - 3) * big_pow(BigInt(n - 3), e);
    b.g_lower = 2 * big_pow(BigInt(n + 2), e);
    b.f_lower = big_pow(BigInt(n + 1), e);
    b.skew_bound_feasible = is_perfect_square(BigInt(2 * n - 3));
    return b;
}

}  // namespace detmax
