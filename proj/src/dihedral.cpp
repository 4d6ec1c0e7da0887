#include "detmax/dihedral.hpp"

#include <stdexcept>

namespace detmax {

namespace {

// g_i = a^x b^e with x = (i-1) mod t, e = floor((i-1)/t), i 1-based.
inline int index_of(int t, int x, int e) { return 1 + x + e * t; }

}  // namespace

GroupTable::GroupTable(int t) : t_(t) {
    if (t < 3 || t % 2 == 0) throw std::invalid_argument("GroupTable: t must be odd and >= 3");
    const int n = 2 * t;
    mul_.resize(static_cast<size_t>(n) * n);
    inv_.resize(n);
    for (int i = 1; i <= n; ++i) {
        const int xi = (i - 1) % t;
        const int ei = (i - 1) / t;
        for (int j = 1; j <= n; ++j) {
            const int xj = (j - 1) % t;
            const int ej = (j - 1) / t;
            // b a^y = a^(-y) b, so (a^x b^e)(a^y b^f) = a^(x + (-1)^e y) b^(e+f)
            const int x = ((xi + (ei == 0 ? xj : -xj)) % t + t) % t;
            const int e = (ei + ej) % 2;
            mul_[static_cast<size_t>(i - 1) * n + (j - 1)] = index_of(t, x, e);
        }
        // rotations invert to a^(t-x); every reflection a^x b is an involution
        inv_[i - 1] = ei == 0 ? index_of(t, (t - xi) % t, 0) : i;
    }
}

}  // namespace detmax
