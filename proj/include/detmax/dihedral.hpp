#pragma once

#include <vector>

namespace detmax {

/// Multiplication structure of the dihedral group D_2t (t odd) with
/// presentation <a, b : a^t = b^2 = (ab)^2 = 1> and element ordering
/// {1, a, ..., a^(t-1), b, ab, ..., a^(t-1) b}.
///
/// Element indices are 1-based throughout: g_i = a^((i-1) mod t) * b^floor((i-1)/t).
class GroupTable {
public:
    explicit GroupTable(int t);  // throws std::invalid_argument if t even or t < 3

    int t() const { return t_; }
    int order() const { return 2 * t_; }

    int mul(int i, int j) const { return mul_[static_cast<size_t>(i - 1) * (2 * t_) + (j - 1)]; }
    int inv(int i) const { return inv_[i - 1]; }

private:
    int t_ = 0;
    std::vector<int> mul_;
    std::vector<int> inv_;
};

inline GroupTable build_group(int t) { return GroupTable(t); }

}  // namespace detmax
