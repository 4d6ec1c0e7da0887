#pragma once

#include <cassert>
#include <cstdint>
#include <cstring>
#include <vector>

namespace detmax {

/// Dense square matrix with entries in {-1,+1}. Row-major, 0-based indices.
class SignMatrix {
public:
    SignMatrix() = default;
    explicit SignMatrix(int n, int8_t fill = +1) : n_(n), e_(static_cast<size_t>(n) * n, fill) {
        assert(n >= 1);
        assert(fill == 1 || fill == -1);
    }

    int order() const { return n_; }

    int8_t operator()(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }

    void set(int i, int j, int8_t v) {
        assert(v == 1 || v == -1);
        e_[static_cast<size_t>(i) * n_ + j] = v;
    }

    void flip(int i, int j) {
        int8_t& x = e_[static_cast<size_t>(i) * n_ + j];
        x = static_cast<int8_t>(-x);
    }

    void flip_flat(size_t idx) { e_[idx] = static_cast<int8_t>(-e_[idx]); }

    const int8_t* row(int i) const { return e_.data() + static_cast<size_t>(i) * n_; }

    // entrywise (Hadamard) product with another sign matrix of the same order
    void hadamard_mul(const SignMatrix& other) {
        assert(n_ == other.n_);
        for (size_t k = 0; k < e_.size(); ++k) e_[k] = static_cast<int8_t>(e_[k] * other.e_[k]);
    }

    void copy_entries_from(const SignMatrix& other) {
        assert(n_ == other.n_);
        std::memcpy(e_.data(), other.e_.data(), e_.size());
    }

    friend bool operator==(const SignMatrix&, const SignMatrix&) = default;

private:
    int n_ = 0;
    std::vector<int8_t> e_;
};

/// Signed permutation acting on rows or columns. As a matrix it has exactly
/// one nonzero entry per row and column: row i carries signs[i] at column
/// perm[i].
struct MonomialTransform {
    std::vector<int> perm;
    std::vector<int8_t> signs;

    static MonomialTransform identity(int n) {
        MonomialTransform m;
        m.perm.resize(n);
        m.signs.assign(n, 1);
        for (int i = 0; i < n; ++i) m.perm[i] = i;
        return m;
    }

    int order() const { return static_cast<int>(perm.size()); }

    bool valid() const {
        const int n = order();
        if (static_cast<int>(signs.size()) != n) return false;
        std::vector<bool> seen(n, false);
        for (int i = 0; i < n; ++i) {
            if (perm[i] < 0 || perm[i] >= n || seen[perm[i]]) return false;
            if (signs[i] != 1 && signs[i] != -1) return false;
            seen[perm[i]] = true;
        }
        return true;
    }
};

}  // namespace detmax
