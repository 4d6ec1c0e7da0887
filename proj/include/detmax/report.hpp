#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "detmax/bigint.hpp"
#include "detmax/bounds.hpp"
#include "detmax/errors.hpp"
#include "detmax/search.hpp"
#include "detmax/skew.hpp"

namespace detmax {

enum class SkewVerdict { yes, no, undecided };

std::string to_string(SkewVerdict v);

struct Table1Row {
    int n = 0;
    BigInt d;
    BigInt det_abs;
    Rational r_m;  // det_abs / ew_upper
    SkewVerdict skew = SkewVerdict::no;
    std::optional<BigInt> det_k_minus_i;
    std::optional<Rational> r_k;  // det(K-I) / skew_upper
};

struct Table2Row {
    int n = 0;
    BigInt g_c_over_2pow;  // largest skew-equivalent |det| / 2^(n-1)
    BigInt f_c;            // the matching det(K-I)
};

struct Table1Options {
    SkewSearchOptions skew;
};

/// One row per interval spectrum value, sorted by d descending. The skew
/// verdict is decided by trying every selection attaining the value in
/// ascending-bitmask order until a witness is found; "no" means the whole
/// class was exhausted.
std::vector<Table1Row> make_table1(const SearchConfig& cfg, const Table1Options& opts = {});

std::vector<Table2Row> make_table2(const std::vector<SearchConfig>& configs,
                                   const Table1Options& opts = {});

/// Collapses one order's rows (sorted by d descending) to its record pair:
/// the largest skew-equivalent d and the matching det(K-I). nullopt when no
/// row has verdict yes. Throws std::runtime_error if an undecided row sits
/// above the first yes.
std::optional<Table2Row> table2_row_from(int n, const std::vector<Table1Row>& rows);

struct LinReport {
    enum class Verdict { increasing, not_increasing, insufficient_data };

    int n = 0;
    Verdict verdict = Verdict::insufficient_data;
    bool maxima_coincide = false;  // largest det K row carries the largest det(K-I)
    std::vector<Table1Row> skew_rows;  // sorted by det K ascending
};

/// Monotonicity of det(K-I) across the skew-equivalent rows, sorted by det K.
LinReport lin_report(int n, const std::vector<Table1Row>& rows);

// ---- formatting ----------------------------------------------------------

/// Half-up rounding to three decimals, e.g. 49/81 -> "0.605".
std::string format_ratio_3dp(const Rational& q);
std::string ratio_exact_str(const Rational& q);

enum class OutputFormat { csv, json };

std::string table1_to_csv(const std::vector<Table1Row>& rows);
std::string table1_to_json(const std::vector<Table1Row>& rows);
std::string table2_to_csv(const std::vector<Table2Row>& rows);
std::string table2_to_json(const std::vector<Table2Row>& rows);
std::string spectrum_to_csv(int t, const std::vector<SpectrumEntry>& entries);
std::string spectrum_to_json(int t, const std::vector<SpectrumEntry>& entries);
std::string bounds_to_csv(const BoundsReport& b);
std::string bounds_to_json(const BoundsReport& b);
std::string lin_report_to_text(const LinReport& r);
std::string lin_report_to_json(const LinReport& r);

}  // namespace detmax
