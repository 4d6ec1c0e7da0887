#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "detmax/dihedral.hpp"
#include "detmax/exact_linalg.hpp"
#include "detmax/sign_matrix.hpp"

namespace detmax {

/// Identifies one D_2t-matrix: a subset of elementary coboundary indices.
/// The inflation cocycle beta is always an implicit factor. Bit k (0-based)
/// of `mask` set means coboundary index k+2 is selected; valid indices run
/// 2..2t-1, so there are 2t-2 basis coboundaries.
struct CocycleSelection {
    int t = 0;
    uint64_t mask = 0;

    static int basis_size(int t) { return 2 * t - 2; }

    std::vector<int> coboundary_indices() const {
        std::vector<int> out;
        for (int k = 0; k < basis_size(t); ++k)
            if (mask >> k & 1) out.push_back(k + 2);
        return out;
    }

    friend bool operator==(const CocycleSelection&, const CocycleSelection&) = default;
};

struct CocyclicMatrix {
    CocycleSelection selection;
    SignMatrix matrix;
};

/// Coboundary of the characteristic set map of g_d:
/// entry (i,j) = delta_d(g_i) * delta_d(g_j) * delta_d(g_i g_j), where
/// delta_d(g) = -1 iff g = g_d. d is 1-based, 1 <= d <= 2t.
SignMatrix elementary_coboundary(const GroupTable& g, int d);
SignMatrix elementary_coboundary(int t, int d);

/// [[1,1],[1,-1]] (x) J_t: block matrix [[J, J], [J, -J]] of order 2t.
SignMatrix beta_matrix(int t);

/// Precomputed coboundary data for one group; built once, shared read-only.
class CocycleBasis {
public:
    explicit CocycleBasis(const GroupTable& g);

    const GroupTable& group() const { return group_; }
    const SignMatrix& beta() const { return beta_; }
    const SignMatrix& coboundary(int d) const { return coboundaries_[d - 1]; }

    /// Entrywise product of the selected coboundaries and beta.
    SignMatrix assemble(uint64_t mask) const;
    void assemble_into(uint64_t mask, SignMatrix& out) const;

private:
    GroupTable group_;
    SignMatrix beta_;
    std::vector<SignMatrix> coboundaries_;          // all d in 1..2t
    std::vector<std::vector<uint32_t>> neg_index_;  // flat positions of -1 entries, d in 2..2t-1
};

CocyclicMatrix assemble(const CocycleSelection& sel);

/// Cocycle condition over G, reading psi(g_i, g_j) = M[i][j] (1-based group
/// indices against 0-based matrix indices).
bool verify_cocycle(const SignMatrix& m, const GroupTable& g);

using RowExcess = int;

/// Absolute row excess: sum over rows 2..n of |row sum|.
RowExcess row_excess(const SignMatrix& m);

/// Row and column Gram matrices evaluated through the cocycle identities
/// [G_r]_{ij} = psi(g_i g_j^-1, g_j) * sum_g psi(g_i g_j^-1, g) and
/// [G_c]_{ij} = psi(g_i, g_i^-1 g_j) * sum_g psi(g, g_i^-1 g_j).
/// Throws std::invalid_argument when m is not a cocycle over g.
std::pair<IntMatrix, IntMatrix> gram_via_cocycle(const SignMatrix& m, const GroupTable& g);
std::pair<IntMatrix, IntMatrix> gram_via_cocycle(const CocyclicMatrix& m);

}  // namespace detmax
