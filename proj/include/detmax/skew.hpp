#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "detmax/bigint.hpp"
#include "detmax/sign_matrix.hpp"

namespace detmax {

/// A skew-type matrix K together with the signed row permutation that
/// produced it: row i of K equals row_source[i].second * M[row_source[i].first].
struct SkewWitness {
    SignMatrix k;
    std::vector<std::pair<int, int8_t>> row_source;
};

enum class SkewStatus {
    found,      // witness attached
    none,       // search space exhausted, no skew-type image exists
    undecided,  // node budget exhausted before a conclusion
};

struct SkewSearchOptions {
    bool fix_first_row = false;  // pin row 1 of M into slot 1
    uint64_t node_budget = 0;    // candidate trials; 0 = unlimited
};

struct SkewSearchResult {
    SkewStatus status = SkewStatus::none;
    std::optional<SkewWitness> witness;
    uint64_t nodes = 0;
};

/// Backtracking search for a skew-type matrix reachable from M by signed row
/// permutations (columns keep M's original order). Slot s+1 takes an unused
/// row, negated if its entry in column s+1 is -1 so the diagonal becomes +1,
/// and accepts it iff its entries in columns 1..s are the negatives of the
/// placed rows' entries in column s+1. Depth-first, candidates in ascending
/// original row index; the first witness in that order is returned.
SkewSearchResult find_skew_equivalent(const SignMatrix& m, const SkewSearchOptions& opts = {});

/// det(K - I): an invariant of the skew-type representatives of a Hadamard
/// equivalence class. Throws std::invalid_argument unless K is skew-type.
BigInt skew_class_invariant(const SignMatrix& k);

/// Independent oracle: tries all n! * 2^n signed row permutations (n <= 6).
std::optional<SignMatrix> brute_force_skew_equiv(const SignMatrix& m);

}  // namespace detmax
