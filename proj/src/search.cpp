#include "detmax/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_map>

#include <json.hpp>

#include "detmax/bounds.hpp"
#include "detmax/errors.hpp"

namespace detmax {

namespace {

int effective_jobs(int jobs) {
    if (jobs > 0) return jobs;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

std::string cache_line(int t, const SweepRecord& r) {
    std::string s = "{\"t\":";
    s += std::to_string(t);
    s += ",\"bitmask\":";
    s += std::to_string(r.mask);
    s += ",\"re\":";
    s += std::to_string(r.re);
    s += ",\"det_abs\":\"";
    s += std::to_string(r.det_abs);
    s += "\"}\n";
    return s;
}

// Loads cached records, truncating the file at the first corrupt line
// (partial writes from an interrupted run). A well-formed record with the
// wrong t means the file belongs to a different sweep and is an error.
std::vector<SweepRecord> load_cache(const std::string& path, int t) {
    std::vector<SweepRecord> out;
    std::ifstream in(path, std::ios::binary);
    if (!in) return out;
    std::string line;
    std::streamoff offset = 0;
    while (true) {
        const std::streamoff line_start = offset;
        if (!std::getline(in, line)) break;
        offset = in.tellg();
        if (offset < 0) offset = line_start + static_cast<std::streamoff>(line.size());
        bool ok = !line.empty();
        SweepRecord rec;
        if (ok) {
            try {
                const auto j = nlohmann::json::parse(line);
                if (j.at("t").get<int>() != t)
                    throw std::runtime_error("sweep cache " + path + " was written for t=" +
                                             std::to_string(j.at("t").get<int>()));
                rec.mask = j.at("bitmask").get<uint64_t>();
                rec.re = j.at("re").get<int32_t>();
                rec.det_abs = std::stoll(j.at("det_abs").get<std::string>());
            } catch (const std::runtime_error&) {
                throw;
            } catch (...) {
                ok = false;
            }
        }
        if (!ok) {
            std::cerr << "warning: truncating corrupt trailing data in " << path
                      << " (resuming from byte " << line_start << ")\n";
            in.close();
            std::filesystem::resize_file(path, static_cast<uintmax_t>(line_start));
            break;
        }
        out.push_back(rec);
    }
    std::sort(out.begin(), out.end(),
              [](const SweepRecord& a, const SweepRecord& b) { return a.mask < b.mask; });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const SweepRecord& a, const SweepRecord& b) { return a.mask == b.mask; }),
              out.end());
    return out;
}

}  // namespace

void validate(const SearchConfig& cfg) {
    if (cfg.t < 3 || cfg.t % 2 == 0)
        throw std::invalid_argument("search: t must be odd and >= 3");
    if (cfg.t > 13)
        throw std::invalid_argument(
            "search: t > 13 is beyond desk scale (2^(2t-2) selections); refusing");
}

void enumerate_selections(const SearchConfig& cfg,
                          const std::function<void(const CocycleSelection&)>& fn) {
    validate(cfg);
    const int t = cfg.t;
    const uint64_t total = uint64_t(1) << CocycleSelection::basis_size(t);
    const bool filtered = cfg.mode == SearchConfig::Mode::re_filtered;
    const int min_re = 2 * t - 2;
    GroupTable g(t);
    CocycleBasis basis(g);
    SignMatrix buf(g.order());
    for (uint64_t mask = 0; mask < total; ++mask) {
        if (filtered) {
            basis.assemble_into(mask, buf);
            if (row_excess(buf) != min_re) continue;
        }
        fn(CocycleSelection{t, mask});
    }
}

std::vector<CocycleSelection> enumerate_selections(const SearchConfig& cfg) {
    std::vector<CocycleSelection> out;
    enumerate_selections(cfg, [&](const CocycleSelection& s) { out.push_back(s); });
    return out;
}

std::vector<SweepRecord> sweep(const SearchConfig& cfg) {
    validate(cfg);
    const int t = cfg.t;
    const int n = 2 * t;
    const uint64_t total = uint64_t(1) << CocycleSelection::basis_size(t);
    const bool filtered = cfg.mode == SearchConfig::Mode::re_filtered;
    const int min_re = 2 * t - 2;

    const GroupTable group(t);
    const CocycleBasis basis(group);

    std::vector<SweepRecord> cached;
    std::vector<bool> have(total, false);
    std::ofstream cache_out;
    if (!cfg.cache_path.empty()) {
        cached = load_cache(cfg.cache_path, t);
        for (const SweepRecord& r : cached)
            if (r.mask < total) have[r.mask] = true;
        cache_out.open(cfg.cache_path, std::ios::app | std::ios::binary);
        if (!cache_out)
            throw std::runtime_error("cannot open sweep cache for append: " + cfg.cache_path);
    }

    const int jobs = effective_jobs(cfg.jobs);
    const uint64_t chunk_size =
        std::min<uint64_t>(total, std::max<uint64_t>(1024, total / (uint64_t(jobs) * 32)));
    const uint64_t num_chunks = (total + chunk_size - 1) / chunk_size;

    std::vector<SweepRecord> computed;
    std::mutex mu;
    std::map<uint64_t, std::vector<SweepRecord>> pending;
    uint64_t next_commit = 0;
    std::atomic<uint64_t> next_chunk{0};
    std::exception_ptr first_error;

    // Chunks commit strictly in index order so both the in-memory result and
    // the appended cache stay sorted by mask no matter how workers interleave.
    auto commit = [&](uint64_t idx, std::vector<SweepRecord>&& recs) {
        std::lock_guard<std::mutex> lock(mu);
        pending.emplace(idx, std::move(recs));
        while (!pending.empty() && pending.begin()->first == next_commit) {
            for (const SweepRecord& r : pending.begin()->second) {
                if (cache_out.is_open()) cache_out << cache_line(t, r);
                computed.push_back(r);
            }
            pending.erase(pending.begin());
            ++next_commit;
        }
    };

    auto worker = [&]() {
        try {
            SignMatrix buf(n);
            while (true) {
                const uint64_t idx = next_chunk.fetch_add(1);
                if (idx >= num_chunks) break;
                const uint64_t lo = idx * chunk_size;
                const uint64_t hi = std::min(total, lo + chunk_size);
                std::vector<SweepRecord> recs;
                for (uint64_t mask = lo; mask < hi; ++mask) {
                    if (have[mask]) continue;
                    basis.assemble_into(mask, buf);
                    const int re = row_excess(buf);
                    if (filtered && re != min_re) continue;
                    int64_t det = determinant_exact_i64(buf);
                    if (det < 0) det = -det;
                    recs.push_back(SweepRecord{mask, det, re});
                }
                commit(idx, std::move(recs));
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(mu);
            if (!first_error) first_error = std::current_exception();
        }
    };

    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(jobs);
        for (int i = 0; i < jobs; ++i) threads.emplace_back(worker);
        for (auto& th : threads) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);
    if (cache_out.is_open()) cache_out.flush();

    if (cached.empty()) return computed;
    std::vector<SweepRecord> merged;
    merged.reserve(cached.size() + computed.size());
    std::merge(cached.begin(), cached.end(), computed.begin(), computed.end(),
               std::back_inserter(merged),
               [](const SweepRecord& a, const SweepRecord& b) { return a.mask < b.mask; });
    return merged;
}

std::vector<SpectrumEntry> spectrum_from_records(int t, std::span<const SweepRecord> records,
                                                 bool interval_only) {
    const int n = 2 * t;
    int64_t lo = 0, hi = 0;
    if (interval_only) {
        const BoundsReport b = bounds_report(n);
        if (!b.g_lower.fits_slong_p() || !b.ew_upper.fits_slong_p())
            throw InternalError("spectrum: interval bounds exceed 64 bits");
        lo = b.g_lower.get_si();
        hi = b.ew_upper.get_si();
    }

    struct Agg {
        uint64_t rep_mask;
        int32_t rep_re;
        uint64_t multiplicity;
    };
    std::unordered_map<int64_t, Agg> by_value;
    for (const SweepRecord& r : records) {
        if (interval_only && (r.det_abs < lo || r.det_abs > hi)) continue;
        auto [it, inserted] = by_value.try_emplace(r.det_abs, Agg{r.mask, r.re, 1});
        if (!inserted) {
            ++it->second.multiplicity;
            if (r.mask < it->second.rep_mask) {
                it->second.rep_mask = r.mask;
                it->second.rep_re = r.re;
            }
        }
    }

    const BigInt scale = pow2(static_cast<unsigned long>(n - 1));
    std::vector<SpectrumEntry> out;
    out.reserve(by_value.size());
    for (const auto& [det, agg] : by_value) {
        SpectrumEntry e;
        e.det_abs = BigInt(static_cast<long>(det));
        if (e.det_abs % scale != 0)
            throw InternalError("spectrum: |det| not divisible by 2^(n-1)");
        e.d = e.det_abs / scale;
        e.representative = CocycleSelection{t, agg.rep_mask};
        e.re = agg.rep_re;
        e.multiplicity = agg.multiplicity;
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end(),
              [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.det_abs > b.det_abs; });
    return out;
}

std::vector<SpectrumEntry> spectrum(const SearchConfig& cfg) {
    std::vector<SweepRecord> records = sweep(cfg);
    if (cfg.mode == SearchConfig::Mode::re_filtered) {
        const int32_t min_re = 2 * cfg.t - 2;
        std::erase_if(records, [&](const SweepRecord& r) { return r.re != min_re; });
    }
    return spectrum_from_records(cfg.t, records, cfg.interval_only);
}

SpectrumEntry max_determinant(const SearchConfig& cfg) {
    const std::vector<SpectrumEntry> entries = spectrum(cfg);
    if (entries.empty()) throw std::runtime_error("max_determinant: empty spectrum");
    return entries.front();
}

}  // namespace detmax
