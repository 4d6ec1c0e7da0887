#include "detmax/skew.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "detmax/exact_linalg.hpp"

namespace detmax {

namespace {

struct SkewSearch {
    const SignMatrix& m;
    const SkewSearchOptions& opts;
    int n;
    std::vector<int> slot_row;
    std::vector<int8_t> slot_sign;
    std::vector<bool> used;
    uint64_t nodes = 0;
    bool budget_hit = false;

    SkewSearch(const SignMatrix& m_, const SkewSearchOptions& o)
        : m(m_), opts(o), n(m_.order()), slot_row(n, -1), slot_sign(n, 1), used(n, false) {}

    bool extend(int s) {
        if (s == n) return true;
        for (int r = 0; r < n; ++r) {
            if (used[r]) continue;
            if (s == 0 && opts.fix_first_row && r != 0) break;
            ++nodes;
            if (opts.node_budget != 0 && nodes > opts.node_budget) {
                budget_hit = true;
                return false;
            }
            // force the diagonal entry to +1
            const int8_t sign = m(r, s);
            bool ok = true;
            for (int j = 0; j < s; ++j) {
                if (sign * m(r, j) != -slot_sign[j] * m(slot_row[j], s)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            slot_row[s] = r;
            slot_sign[s] = sign;
            used[r] = true;
            if (extend(s + 1)) return true;
            used[r] = false;
            slot_row[s] = -1;
            if (budget_hit) return false;
        }
        return false;
    }
};

}  // namespace

SkewSearchResult find_skew_equivalent(const SignMatrix& m, const SkewSearchOptions& opts) {
    SkewSearch search(m, opts);
    SkewSearchResult res;
    const bool found = search.extend(0);
    res.nodes = search.nodes;
    if (found) {
        const int n = m.order();
        SkewWitness w{SignMatrix(n), {}};
        w.row_source.reserve(n);
        for (int i = 0; i < n; ++i) {
            const int r = search.slot_row[i];
            const int8_t s = search.slot_sign[i];
            for (int j = 0; j < n; ++j) w.k.set(i, j, static_cast<int8_t>(s * m(r, j)));
            w.row_source.emplace_back(r, s);
        }
        res.status = SkewStatus::found;
        res.witness = std::move(w);
    } else {
        res.status = search.budget_hit ? SkewStatus::undecided : SkewStatus::none;
    }
    return res;
}

BigInt skew_class_invariant(const SignMatrix& k) {
    if (!is_skew_type(k)) throw std::invalid_argument("skew_class_invariant: not skew-type");
    return determinant_exact(subtract_identity(k));
}

std::optional<SignMatrix> brute_force_skew_equiv(const SignMatrix& m) {
    const int n = m.order();
    if (n > 6) throw std::invalid_argument("brute_force_skew_equiv: order > 6");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    SignMatrix img(n);
    do {
        for (uint32_t bits = 0; bits < (1u << n); ++bits) {
            for (int i = 0; i < n; ++i) {
                const int8_t s = (bits >> i & 1) ? -1 : 1;
                for (int j = 0; j < n; ++j) img.set(i, j, static_cast<int8_t>(s * m(perm[i], j)));
            }
            if (is_skew_type(img)) return img;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

}  // namespace detmax
