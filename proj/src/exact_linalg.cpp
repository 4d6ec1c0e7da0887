#include "detmax/exact_linalg.hpp"

#include <stdexcept>

namespace detmax {

namespace {

// Fraction-free (Bareiss) elimination. Every intermediate entry is a minor
// of the input, so the divisions are exact. Zero pivots are repaired by a
// row swap (sign tracked); if the whole column is zero the determinant is 0.
BigInt bareiss_mpz(std::vector<BigInt> a, int n) {
    if (n == 1) return a[0];
    int sign = 1;
    BigInt prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a[static_cast<size_t>(k) * n + k] == 0) {
            int r = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[static_cast<size_t>(i) * n + k] != 0) {
                    r = i;
                    break;
                }
            if (r < 0) return BigInt(0);
            for (int j = k; j < n; ++j)
                std::swap(a[static_cast<size_t>(k) * n + j], a[static_cast<size_t>(r) * n + j]);
            sign = -sign;
        }
        const BigInt& pivot = a[static_cast<size_t>(k) * n + k];
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                BigInt& x = a[static_cast<size_t>(i) * n + j];
                x = x * pivot - a[static_cast<size_t>(i) * n + k] * a[static_cast<size_t>(k) * n + j];
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
            }
            a[static_cast<size_t>(i) * n + k] = 0;
        }
        prev = pivot;
    }
    BigInt det = a[static_cast<size_t>(n - 1) * n + (n - 1)];
    return sign < 0 ? BigInt(-det) : det;
}

// Same elimination on int64 storage. Exactness of the 64-bit result rests on
// the Hadamard bound: a k x k minor of a matrix with entries in {-1,0,1} is
// at most k^(k/2), which stays below 2^63 for k <= 26. The cross products of
// two such minors need up to ~126 bits, hence the __int128 intermediates.
int64_t bareiss_i64(std::vector<int64_t> a, int n) {
    if (n == 1) return a[0];
    int sign = 1;
    int64_t prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a[static_cast<size_t>(k) * n + k] == 0) {
            int r = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[static_cast<size_t>(i) * n + k] != 0) {
                    r = i;
                    break;
                }
            if (r < 0) return 0;
            for (int j = k; j < n; ++j)
                std::swap(a[static_cast<size_t>(k) * n + j], a[static_cast<size_t>(r) * n + j]);
            sign = -sign;
        }
        const int64_t pivot = a[static_cast<size_t>(k) * n + k];
        int64_t* rowk = a.data() + static_cast<size_t>(k) * n;
        for (int i = k + 1; i < n; ++i) {
            int64_t* rowi = a.data() + static_cast<size_t>(i) * n;
            const int64_t lead = rowi[k];
            for (int j = k + 1; j < n; ++j) {
                const __int128 num =
                    static_cast<__int128>(rowi[j]) * pivot - static_cast<__int128>(lead) * rowk[j];
                rowi[j] = static_cast<int64_t>(num / prev);
            }
            rowi[k] = 0;
        }
        prev = pivot;
    }
    const int64_t det = a[static_cast<size_t>(n - 1) * n + (n - 1)];
    return sign < 0 ? -det : det;
}

}  // namespace

int64_t determinant_exact_i64(const SignMatrix& m) {
    const int n = m.order();
    if (n > 26) throw std::invalid_argument("determinant_exact_i64: order > 26");
    std::vector<int64_t> a(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * n + j] = m(i, j);
    return bareiss_i64(std::move(a), n);
}

BigInt determinant_exact(const SignMatrix& m) {
    const int n = m.order();
    if (n <= 26) return BigInt(determinant_exact_i64(m));
    std::vector<BigInt> a(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * n + j] = m(i, j);
    return bareiss_mpz(std::move(a), n);
}

BigInt determinant_exact(const IntMatrix& m) {
    const int n = m.order();
    std::vector<BigInt> a(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * n + j] = m(i, j);
    return bareiss_mpz(std::move(a), n);
}

IntMatrix gram_rows(const SignMatrix& m) {
    const int n = m.order();
    IntMatrix g(n);
    for (int i = 0; i < n; ++i) {
        const int8_t* ri = m.row(i);
        for (int j = i; j < n; ++j) {
            const int8_t* rj = m.row(j);
            int64_t s = 0;
            for (int k = 0; k < n; ++k) s += ri[k] * rj[k];
            g.set(i, j, s);
            g.set(j, i, s);
        }
    }
    return g;
}

IntMatrix gram_cols(const SignMatrix& m) {
    const int n = m.order();
    IntMatrix g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            int64_t s = 0;
            for (int k = 0; k < n; ++k) s += m(k, i) * m(k, j);
            g.set(i, j, s);
            g.set(j, i, s);
        }
    return g;
}

SignMatrix apply_monomial(const MonomialTransform& p, const SignMatrix& m,
                          const MonomialTransform& q) {
    const int n = m.order();
    if (p.order() != n || q.order() != n)
        throw std::invalid_argument("apply_monomial: dimension mismatch");
    // (P*M*Q^T)[i][j] = p.signs[i] * q.signs[j] * M[p.perm[i]][q.perm[j]]
    SignMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.set(i, j, static_cast<int8_t>(p.signs[i] * q.signs[j] * m(p.perm[i], q.perm[j])));
    return out;
}

bool is_skew_type(const SignMatrix& m) {
    const int n = m.order();
    for (int i = 0; i < n; ++i) {
        if (m(i, i) != 1) return false;
        for (int j = i + 1; j < n; ++j)
            if (m(i, j) != -m(j, i)) return false;
    }
    return true;
}

bool check_ew_gram_structure(const SignMatrix& m) {
    const int n = m.order();
    if (n % 2 != 0) throw std::invalid_argument("check_ew_gram_structure: odd order");
    const int h = n / 2;
    const IntMatrix g = gram_rows(m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const bool same_block = (i < h) == (j < h);
            const int64_t want = i == j ? n : (same_block ? 2 : 0);
            if (g(i, j) != want) return false;
        }
    return true;
}

IntMatrix subtract_identity(const SignMatrix& k) {
    const int n = k.order();
    IntMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.set(i, j, k(i, j) - (i == j ? 1 : 0));
    return out;
}

}  // namespace detmax
