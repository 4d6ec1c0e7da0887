#include "detmax/report.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "detmax/exact_linalg.hpp"

namespace detmax {

namespace {

Rational make_ratio(const BigInt& num, const BigInt& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

nlohmann::json opt_str(const std::optional<BigInt>& v) {
    if (!v) return nullptr;
    return v->get_str();
}

}  // namespace

std::string to_string(SkewVerdict v) {
    switch (v) {
        case SkewVerdict::yes: return "yes";
        case SkewVerdict::no: return "no";
        default: return "undecided";
    }
}

std::vector<Table1Row> make_table1(const SearchConfig& cfg, const Table1Options& opts) {
    validate(cfg);
    const int t = cfg.t;
    const int n = 2 * t;
    const BoundsReport bounds = bounds_report(n);

    std::vector<SweepRecord> records = sweep(cfg);
    if (cfg.mode == SearchConfig::Mode::re_filtered) {
        const int32_t min_re = 2 * t - 2;
        std::erase_if(records, [&](const SweepRecord& r) { return r.re != min_re; });
    }
    const std::vector<SpectrumEntry> entries = spectrum_from_records(t, records, cfg.interval_only);

    // all selections attaining each value, ascending mask (records are sorted)
    std::map<int64_t, std::vector<uint64_t>> class_masks;
    for (const SweepRecord& r : records) class_masks[r.det_abs].push_back(r.mask);

    const GroupTable group(t);
    const CocycleBasis basis(group);

    // Skew verdicts, one determinant class per worker. A value is "yes" iff
    // some selection attaining it has a skew-type image; the witness of the
    // lowest such mask supplies det(K-I), so the result does not depend on
    // scheduling. Row assembly below stays single-threaded.
    struct Verdict {
        SkewVerdict skew = SkewVerdict::no;
        std::optional<BigInt> det_k_minus_i;
    };
    std::vector<Verdict> verdicts(entries.size());
    std::atomic<size_t> next_entry{0};
    std::exception_ptr first_error;
    std::mutex error_mu;
    auto verdict_worker = [&]() {
        try {
            while (true) {
                const size_t idx = next_entry.fetch_add(1);
                if (idx >= entries.size()) break;
                const SpectrumEntry& e = entries[idx];
                Verdict v;
                bool undecided_seen = false;
                for (uint64_t mask : class_masks.at(e.det_abs.get_si())) {
                    const SignMatrix m = basis.assemble(mask);
                    const SkewSearchResult res = find_skew_equivalent(m, opts.skew);
                    if (res.status == SkewStatus::found) {
                        const SignMatrix& k = res.witness->k;
                        if (abs(determinant_exact(k)) != e.det_abs)
                            throw InternalError("table1: witness determinant mismatch");
                        v.skew = SkewVerdict::yes;
                        v.det_k_minus_i = skew_class_invariant(k);
                        break;
                    }
                    if (res.status == SkewStatus::undecided) undecided_seen = true;
                }
                if (v.skew != SkewVerdict::yes && undecided_seen) v.skew = SkewVerdict::undecided;
                verdicts[idx] = std::move(v);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mu);
            if (!first_error) first_error = std::current_exception();
        }
    };
    const unsigned hw = std::thread::hardware_concurrency();
    const size_t jobs = std::min<size_t>(
        entries.size(),
        static_cast<size_t>(cfg.jobs > 0 ? cfg.jobs : (hw > 0 ? hw : 1)));
    if (jobs <= 1) {
        verdict_worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(jobs);
        for (size_t i = 0; i < jobs; ++i) threads.emplace_back(verdict_worker);
        for (auto& th : threads) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    std::vector<Table1Row> rows;
    rows.reserve(entries.size());
    for (size_t idx = 0; idx < entries.size(); ++idx) {
        const SpectrumEntry& e = entries[idx];
        Table1Row row;
        row.n = n;
        row.d = e.d;
        row.det_abs = e.det_abs;
        row.r_m = make_ratio(e.det_abs, bounds.ew_upper);
        row.skew = verdicts[idx].skew;
        row.det_k_minus_i = std::move(verdicts[idx].det_k_minus_i);
        if (row.det_k_minus_i) row.r_k = make_ratio(*row.det_k_minus_i, bounds.skew_upper);
        rows.push_back(std::move(row));
    }

    // det K attains the (-1,1) bound iff det(K-I) attains the skew bound
    for (const Table1Row& row : rows) {
        const bool rm1 = row.det_abs == bounds.ew_upper;
        const bool rk1 = row.det_k_minus_i && *row.det_k_minus_i == bounds.skew_upper;
        if (row.skew == SkewVerdict::yes && rm1 != rk1)
            throw InternalError("table1: bound-attainment correspondence violated at n=" +
                                std::to_string(n));
    }
    return rows;
}

std::optional<Table2Row> table2_row_from(int n, const std::vector<Table1Row>& rows) {
    for (const Table1Row& row : rows) {  // rows sorted by d descending
        if (row.skew == SkewVerdict::undecided)
            throw std::runtime_error("table2: undecided skew verdict (raise the node budget) at n=" +
                                     std::to_string(n));
        if (row.skew == SkewVerdict::yes)
            return Table2Row{n, row.d, *row.det_k_minus_i};
    }
    return std::nullopt;
}

std::vector<Table2Row> make_table2(const std::vector<SearchConfig>& configs,
                                   const Table1Options& opts) {
    std::vector<Table2Row> out;
    out.reserve(configs.size());
    for (const SearchConfig& cfg : configs) {
        const int n = 2 * cfg.t;
        const auto rec = table2_row_from(n, make_table1(cfg, opts));
        if (!rec)
            throw std::runtime_error("table2: no skew-equivalent value in the interval at n=" +
                                     std::to_string(n));
        out.push_back(*rec);
    }
    return out;
}

LinReport lin_report(int n, const std::vector<Table1Row>& rows) {
    LinReport rep;
    rep.n = n;
    for (const Table1Row& row : rows)
        if (row.skew == SkewVerdict::yes) rep.skew_rows.push_back(row);
    std::sort(rep.skew_rows.begin(), rep.skew_rows.end(),
              [](const Table1Row& a, const Table1Row& b) { return a.det_abs < b.det_abs; });
    if (rep.skew_rows.size() < 2) {
        rep.verdict = LinReport::Verdict::insufficient_data;
        return rep;
    }
    bool increasing = true;
    for (size_t i = 1; i < rep.skew_rows.size(); ++i)
        if (!(*rep.skew_rows[i - 1].det_k_minus_i < *rep.skew_rows[i].det_k_minus_i)) {
            increasing = false;
            break;
        }
    rep.verdict = increasing ? LinReport::Verdict::increasing : LinReport::Verdict::not_increasing;
    BigInt max_kmi = *rep.skew_rows.front().det_k_minus_i;
    for (const Table1Row& row : rep.skew_rows) max_kmi = std::max(max_kmi, *row.det_k_minus_i);
    rep.maxima_coincide = *rep.skew_rows.back().det_k_minus_i == max_kmi;
    return rep;
}

std::string format_ratio_3dp(const Rational& q) {
    if (q < 0) return "-" + format_ratio_3dp(Rational(-q));
    const BigInt num = q.get_num();
    const BigInt den = q.get_den();
    const BigInt scaled = (2000 * num + den) / (2 * den);  // half-up
    const BigInt ip = scaled / 1000;
    const BigInt fp = scaled % 1000;
    std::string frac = fp.get_str();
    frac.insert(0, 3 - frac.size(), '0');
    return ip.get_str() + "." + frac;
}

std::string ratio_exact_str(const Rational& q) { return q.get_str(); }

std::string table1_to_csv(const std::vector<Table1Row>& rows) {
    std::string out = "n,d,r_m,skew,det_k_minus_i,r_k\n";
    for (const Table1Row& r : rows) {
        out += std::to_string(r.n) + "," + r.d.get_str() + "," + format_ratio_3dp(r.r_m) + "," +
               to_string(r.skew) + ",";
        if (r.det_k_minus_i) out += r.det_k_minus_i->get_str();
        out += ",";
        if (r.r_k) out += format_ratio_3dp(*r.r_k);
        out += "\n";
    }
    return out;
}

std::string table1_to_json(const std::vector<Table1Row>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Table1Row& r : rows) {
        nlohmann::json j;
        j["n"] = r.n;
        j["d"] = r.d.get_str();
        j["det_abs"] = r.det_abs.get_str();
        j["r_m_exact"] = ratio_exact_str(r.r_m);
        j["r_m"] = format_ratio_3dp(r.r_m);
        j["skew"] = to_string(r.skew);
        j["det_k_minus_i"] = opt_str(r.det_k_minus_i);
        j["r_k_exact"] = r.r_k ? nlohmann::json(ratio_exact_str(*r.r_k)) : nlohmann::json(nullptr);
        j["r_k"] = r.r_k ? nlohmann::json(format_ratio_3dp(*r.r_k)) : nlohmann::json(nullptr);
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::string table2_to_csv(const std::vector<Table2Row>& rows) {
    std::string out = "n,g_c_over_2pow,f_c\n";
    for (const Table2Row& r : rows)
        out += std::to_string(r.n) + "," + r.g_c_over_2pow.get_str() + "," + r.f_c.get_str() + "\n";
    return out;
}

std::string table2_to_json(const std::vector<Table2Row>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Table2Row& r : rows) {
        nlohmann::json j;
        j["n"] = r.n;
        j["g_c_over_2pow"] = r.g_c_over_2pow.get_str();
        j["f_c"] = r.f_c.get_str();
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::string spectrum_to_csv(int t, const std::vector<SpectrumEntry>& entries) {
    std::string out = "t,d,det_abs,re,multiplicity,representative\n";
    for (const SpectrumEntry& e : entries)
        out += std::to_string(t) + "," + e.d.get_str() + "," + e.det_abs.get_str() + "," +
               std::to_string(e.re) + "," + std::to_string(e.multiplicity) + "," +
               std::to_string(e.representative.mask) + "\n";
    return out;
}

std::string spectrum_to_json(int t, const std::vector<SpectrumEntry>& entries) {
    nlohmann::json arr = nlohmann::json::array();
    for (const SpectrumEntry& e : entries) {
        nlohmann::json j;
        j["t"] = t;
        j["d"] = e.d.get_str();
        j["det_abs"] = e.det_abs.get_str();
        j["re"] = e.re;
        j["multiplicity"] = e.multiplicity;
        j["representative"] = e.representative.mask;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::string bounds_to_csv(const BoundsReport& b) {
    std::string out = "n,ew_upper,skew_upper,g_lower,f_lower,skew_bound_feasible\n";
    out += std::to_string(b.n) + "," + b.ew_upper.get_str() + "," + b.skew_upper.get_str() + "," +
           b.g_lower.get_str() + "," + b.f_lower.get_str() + "," +
           (b.skew_bound_feasible ? "true" : "false") + "\n";
    return out;
}

std::string bounds_to_json(const BoundsReport& b) {
    nlohmann::json j;
    j["n"] = b.n;
    j["ew_upper"] = b.ew_upper.get_str();
    j["skew_upper"] = b.skew_upper.get_str();
    j["g_lower"] = b.g_lower.get_str();
    j["f_lower"] = b.f_lower.get_str();
    j["skew_bound_feasible"] = b.skew_bound_feasible;
    return j.dump(2) + "\n";
}

std::string lin_report_to_text(const LinReport& r) {
    std::string out = "n=" + std::to_string(r.n) + " skew_rows=" + std::to_string(r.skew_rows.size());
    switch (r.verdict) {
        case LinReport::Verdict::increasing: out += " det_k_minus_i=strictly-increasing"; break;
        case LinReport::Verdict::not_increasing: out += " det_k_minus_i=not-increasing"; break;
        default: out += " verdict=insufficient-data"; break;
    }
    if (r.verdict != LinReport::Verdict::insufficient_data)
        out += std::string(" maxima_coincide=") + (r.maxima_coincide ? "yes" : "no");
    out += "\n";
    for (const Table1Row& row : r.skew_rows)
        out += "  det_k=" + row.det_abs.get_str() + " det_k_minus_i=" +
               row.det_k_minus_i->get_str() + "\n";
    return out;
}

std::string lin_report_to_json(const LinReport& r) {
    nlohmann::json j;
    j["n"] = r.n;
    switch (r.verdict) {
        case LinReport::Verdict::increasing: j["verdict"] = "increasing"; break;
        case LinReport::Verdict::not_increasing: j["verdict"] = "not_increasing"; break;
        default: j["verdict"] = "insufficient_data"; break;
    }
    j["maxima_coincide"] = r.maxima_coincide;
    nlohmann::json arr = nlohmann::json::array();
    for (const Table1Row& row : r.skew_rows) {
        nlohmann::json e;
        e["det_k"] = row.det_abs.get_str();
        e["det_k_minus_i"] = row.det_k_minus_i->get_str();
        arr.push_back(std::move(e));
    }
    j["rows"] = std::move(arr);
    return j.dump(2) + "\n";
}

}  // namespace detmax
