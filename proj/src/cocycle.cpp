#include "detmax/cocycle.hpp"

#include <stdexcept>

namespace detmax {

SignMatrix elementary_coboundary(const GroupTable& g, int d) {
    const int n = g.order();
    if (d < 1 || d > n) throw std::invalid_argument("elementary_coboundary: index out of range");
    SignMatrix m(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int v = 1;
            if (i == d) v = -v;
            if (j == d) v = -v;
            if (g.mul(i, j) == d) v = -v;
            m.set(i - 1, j - 1, static_cast<int8_t>(v));
        }
    return m;
}

SignMatrix elementary_coboundary(int t, int d) {
    return elementary_coboundary(GroupTable(t), d);
}

SignMatrix beta_matrix(int t) {
    if (t < 3 || t % 2 == 0) throw std::invalid_argument("beta_matrix: t must be odd and >= 3");
    const int n = 2 * t;
    SignMatrix m(n);
    for (int i = t; i < n; ++i)
        for (int j = t; j < n; ++j) m.set(i, j, -1);
    return m;
}

CocycleBasis::CocycleBasis(const GroupTable& g) : group_(g), beta_(beta_matrix(g.t())) {
    const int n = g.order();
    coboundaries_.reserve(n);
    for (int d = 1; d <= n; ++d) coboundaries_.push_back(elementary_coboundary(g, d));
    neg_index_.resize(CocycleSelection::basis_size(g.t()));
    for (int k = 0; k < static_cast<int>(neg_index_.size()); ++k) {
        const SignMatrix& cb = coboundaries_[static_cast<size_t>(k + 2) - 1];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (cb(i, j) == -1) neg_index_[k].push_back(static_cast<uint32_t>(i) * n + j);
    }
}

void CocycleBasis::assemble_into(uint64_t mask, SignMatrix& out) const {
    out.copy_entries_from(beta_);
    for (size_t k = 0; k < neg_index_.size() && (mask >> k) != 0; ++k)
        if (mask >> k & 1)
            for (uint32_t idx : neg_index_[k]) out.flip_flat(idx);
}

SignMatrix CocycleBasis::assemble(uint64_t mask) const {
    if (mask >> CocycleSelection::basis_size(group_.t()))
        throw std::invalid_argument("assemble: selection bits out of range");
    SignMatrix out(group_.order());
    assemble_into(mask, out);
    return out;
}

CocyclicMatrix assemble(const CocycleSelection& sel) {
    const GroupTable g(sel.t);
    const CocycleBasis basis(g);
    return CocyclicMatrix{sel, basis.assemble(sel.mask)};
}

bool verify_cocycle(const SignMatrix& m, const GroupTable& g) {
    const int n = g.order();
    if (m.order() != n) throw std::invalid_argument("verify_cocycle: order mismatch");
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const int ij = g.mul(i, j);
            for (int k = 1; k <= n; ++k) {
                const int jk = g.mul(j, k);
                if (m(i - 1, j - 1) * m(ij - 1, k - 1) != m(j - 1, k - 1) * m(i - 1, jk - 1))
                    return false;
            }
        }
    return true;
}

RowExcess row_excess(const SignMatrix& m) {
    const int n = m.order();
    int total = 0;
    for (int i = 1; i < n; ++i) {
        const int8_t* r = m.row(i);
        int s = 0;
        for (int j = 0; j < n; ++j) s += r[j];
        total += s < 0 ? -s : s;
    }
    return total;
}

std::pair<IntMatrix, IntMatrix> gram_via_cocycle(const SignMatrix& m, const GroupTable& g) {
    if (!verify_cocycle(m, g))
        throw std::invalid_argument("gram_via_cocycle: cocycle condition violated");
    const int n = g.order();
    std::vector<int64_t> row_sum(n + 1, 0), col_sum(n + 1, 0);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            row_sum[i] += m(i - 1, j - 1);
            col_sum[j] += m(i - 1, j - 1);
        }
    IntMatrix gr(n), gc(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const int r = g.mul(i, g.inv(j));  // g_i g_j^-1
            gr.set(i - 1, j - 1, m(r - 1, j - 1) * row_sum[r]);
            const int c = g.mul(g.inv(i), j);  // g_i^-1 g_j
            gc.set(i - 1, j - 1, m(i - 1, c - 1) * col_sum[c]);
        }
    return {gr, gc};
}

std::pair<IntMatrix, IntMatrix> gram_via_cocycle(const CocyclicMatrix& m) {
    return gram_via_cocycle(m.matrix, GroupTable(m.selection.t));
}

}  // namespace detmax
