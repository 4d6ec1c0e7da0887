#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "detmax/bigint.hpp"
#include "detmax/cocycle.hpp"

namespace detmax {

struct SearchConfig {
    enum class Mode { exhaustive, re_filtered };

    int t = 3;
    Mode mode = Mode::exhaustive;
    int jobs = 0;              // 0 = hardware concurrency
    std::string cache_path;    // JSON-lines sweep cache; empty disables caching
    bool interval_only = true; // spectrum restricted to [2(n+2)^(n/2-1), (2n-2)(n-2)^(n/2-1)]
};

/// Throws std::invalid_argument unless t is odd and 3 <= t <= 13 (the
/// selection space is 2^(2t-2); t >= 15 is beyond desk scale).
void validate(const SearchConfig& cfg);

/// One swept selection. det_abs fits in 64 bits for order <= 26 (Hadamard:
/// |det| <= n^(n/2) <= 26^13 < 2^63).
struct SweepRecord {
    uint64_t mask = 0;
    int64_t det_abs = 0;
    int32_t re = 0;

    friend bool operator==(const SweepRecord&, const SweepRecord&) = default;
};

/// One distinct |det| value of the spectrum, merged over all selections
/// attaining it. d = det_abs / 2^(n-1), always an integer.
struct SpectrumEntry {
    BigInt d;
    BigInt det_abs;
    CocycleSelection representative;  // smallest bitmask attaining det_abs
    RowExcess re = 0;                 // representative's absolute row excess
    uint64_t multiplicity = 0;

    friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

/// Streams each selection exactly once, lexicographic by bitmask. In
/// re-filtered mode only selections whose assembled matrix has the minimum
/// absolute row excess 2t-2 are yielded.
void enumerate_selections(const SearchConfig& cfg,
                          const std::function<void(const CocycleSelection&)>& fn);
std::vector<CocycleSelection> enumerate_selections(const SearchConfig& cfg);

/// Full sweep over the selection space: parallel, cache-aware, result sorted
/// by mask. In re-filtered mode only RE-minimal selections produce records.
std::vector<SweepRecord> sweep(const SearchConfig& cfg);

/// Distinct |det| values over the swept selections, sorted descending.
std::vector<SpectrumEntry> spectrum(const SearchConfig& cfg);

/// Merge step exposed for tests: associative and order-independent over
/// partial record sets.
std::vector<SpectrumEntry> spectrum_from_records(int t, std::span<const SweepRecord> records,
                                                 bool interval_only);

/// Head of the spectrum (largest det_abs). Throws if the spectrum is empty.
SpectrumEntry max_determinant(const SearchConfig& cfg);

}  // namespace detmax
