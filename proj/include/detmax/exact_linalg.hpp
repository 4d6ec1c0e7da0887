#pragma once

#include <cstdint>
#include <vector>

#include "detmax/bigint.hpp"
#include "detmax/sign_matrix.hpp"

namespace detmax {

/// Square integer matrix: Gram matrices (entries in [-n, n]) and K - I.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(int n, int64_t fill = 0) : n_(n), e_(static_cast<size_t>(n) * n, fill) {}

    int order() const { return n_; }
    int64_t operator()(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }
    void set(int i, int j, int64_t v) { e_[static_cast<size_t>(i) * n_ + j] = v; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    int n_ = 0;
    std::vector<int64_t> e_;
};

/// Exact signed determinant via fraction-free (Bareiss) elimination.
/// Orders <= 26 run on 64-bit entries with 128-bit intermediates; larger
/// orders use GMP. Callers wanting the usual convention take abs().
BigInt determinant_exact(const SignMatrix& m);
BigInt determinant_exact(const IntMatrix& m);

/// Fast path for the sweeps (requires order <= 26; exact, see notes in the
/// implementation for the minor bound that makes 64-bit storage safe).
int64_t determinant_exact_i64(const SignMatrix& m);

IntMatrix gram_rows(const SignMatrix& m);  // M * M^T
IntMatrix gram_cols(const SignMatrix& m);  // M^T * M

/// P * M * Q^T for monomial P, Q; the result is again a sign matrix.
SignMatrix apply_monomial(const MonomialTransform& p, const SignMatrix& m,
                          const MonomialTransform& q);

/// Unit diagonal and m[i][j] = -m[j][i] off the diagonal.
bool is_skew_type(const SignMatrix& m);

/// True iff M*M^T == diag(L, L) with L = (n-2)*I + 2*J of size n/2.
/// Throws std::invalid_argument for odd order.
bool check_ew_gram_structure(const SignMatrix& m);

IntMatrix subtract_identity(const SignMatrix& k);  // K - I

}  // namespace detmax
