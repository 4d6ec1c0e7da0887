// detmax: search for cocyclic (-1,1)-matrices over dihedral groups with
// large exact determinants, decide skew-type equivalence, and emit the
// determinant-range and record tables.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "detmax/bounds.hpp"
#include "detmax/errors.hpp"
#include "detmax/matrix_io.hpp"
#include "detmax/report.hpp"
#include "detmax/search.hpp"
#include "detmax/skew.hpp"

namespace {

using namespace detmax;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitUndecided = 2;
constexpr int kExitInternal = 3;

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
}

std::string cache_file_for(const std::string& cache_dir, int t) {
    if (cache_dir.empty()) return {};
    return cache_dir + "/sweep_t" + std::to_string(t) + ".jsonl";
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool any_undecided(const std::vector<Table1Row>& rows) {
    for (const Table1Row& r : rows)
        if (r.skew == SkewVerdict::undecided) return true;
    return false;
}

struct Cli {
    int t = 3;
    std::vector<int> t_list;
    int n = 6;
    std::string mode = "exhaustive";
    int jobs = 0;
    std::string cache_dir;
    bool full_range = false;
    bool fix_first_row = false;
    uint64_t node_budget = 0;
    std::string format = "csv";
    std::string out;
    std::string in_path;

    SearchConfig search_config(int which_t) const {
        SearchConfig cfg;
        cfg.t = which_t;
        cfg.mode = mode == "re-filter" ? SearchConfig::Mode::re_filtered
                                       : SearchConfig::Mode::exhaustive;
        cfg.jobs = jobs;
        cfg.cache_path = cache_file_for(cache_dir, which_t);
        cfg.interval_only = !full_range;
        return cfg;
    }

    Table1Options table_options() const {
        Table1Options opts;
        opts.skew.fix_first_row = fix_first_row;
        opts.skew.node_budget = node_budget;
        return opts;
    }
};

int run_bounds(const Cli& cli) {
    const BoundsReport b = bounds_report(cli.n);
    write_output(cli.format == "json" ? bounds_to_json(b) : bounds_to_csv(b), cli.out);
    return kExitOk;
}

int run_search(const Cli& cli) {
    const auto entries = spectrum(cli.search_config(cli.t));
    write_output(cli.format == "json" ? spectrum_to_json(cli.t, entries)
                                      : spectrum_to_csv(cli.t, entries),
                 cli.out);
    return kExitOk;
}

int run_table1(const Cli& cli) {
    const auto rows = make_table1(cli.search_config(cli.t), cli.table_options());
    write_output(cli.format == "json" ? table1_to_json(rows) : table1_to_csv(rows), cli.out);
    if (any_undecided(rows)) {
        std::cerr << "undecided skew verdicts present (node budget exhausted)\n";
        return kExitUndecided;
    }
    return kExitOk;
}

int run_table2(const Cli& cli) {
    std::vector<Table2Row> out;
    for (int t : cli.t_list) {
        const auto rows = make_table1(cli.search_config(t), cli.table_options());
        if (any_undecided(rows)) {
            std::cerr << "undecided skew verdicts at t=" << t
                      << " (node budget exhausted)\n";
            return kExitUndecided;
        }
        const auto rec = table2_row_from(2 * t, rows);
        if (!rec) throw std::runtime_error("no skew-equivalent value in the interval at t=" +
                                           std::to_string(t));
        out.push_back(*rec);
    }
    write_output(cli.format == "json" ? table2_to_json(out) : table2_to_csv(out), cli.out);
    return kExitOk;
}

int run_lin_report(const Cli& cli) {
    const auto rows = make_table1(cli.search_config(cli.t), cli.table_options());
    const bool undecided = any_undecided(rows);
    const LinReport rep = lin_report(2 * cli.t, rows);
    write_output(cli.format == "json" ? lin_report_to_json(rep) : lin_report_to_text(rep), cli.out);
    if (undecided) {
        std::cerr << "undecided skew verdicts excluded from the report\n";
        return kExitUndecided;
    }
    return kExitOk;
}

int run_skew_check(const Cli& cli) {
    const SignMatrix m = parse_matrix(read_input(cli.in_path));
    SkewSearchOptions opts;
    opts.fix_first_row = cli.fix_first_row;
    opts.node_budget = cli.node_budget;
    const SkewSearchResult res = find_skew_equivalent(m, opts);
    const BigInt det_abs = abs(determinant_exact(m));

    std::string text;
    if (cli.format == "json") {
        nlohmann::json j;
        j["status"] = res.status == SkewStatus::found
                          ? "yes"
                          : (res.status == SkewStatus::none ? "no" : "undecided");
        j["nodes"] = res.nodes;
        j["det_abs"] = det_abs.get_str();
        if (res.witness) {
            j["det_k_minus_i"] = skew_class_invariant(res.witness->k).get_str();
            nlohmann::json src = nlohmann::json::array();
            for (auto [row, sign] : res.witness->row_source)
                src.push_back({{"row", row + 1}, {"sign", sign > 0 ? "+" : "-"}});
            j["row_source"] = std::move(src);
            j["k"] = render_matrix(res.witness->k);
        }
        text = j.dump(2) + "\n";
    } else {
        std::ostringstream ss;
        ss << "status: "
           << (res.status == SkewStatus::found
                   ? "yes"
                   : (res.status == SkewStatus::none ? "no" : "undecided"))
           << "\n"
           << "nodes: " << res.nodes << "\n"
           << "det_abs: " << det_abs.get_str() << "\n";
        if (res.witness) {
            ss << "det_k_minus_i: " << skew_class_invariant(res.witness->k).get_str() << "\n";
            ss << "row_source:";
            for (auto [row, sign] : res.witness->row_source)
                ss << ' ' << (sign > 0 ? '+' : '-') << (row + 1);
            ss << "\nk:\n" << render_matrix(res.witness->k);
        }
        text = ss.str();
    }
    write_output(text, cli.out);
    return res.status == SkewStatus::undecided ? kExitUndecided : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cocyclic search for (-1,1)-matrices of skew type with large determinants"};
    app.require_subcommand(1);
    Cli cli;

    auto add_search_flags = [&](CLI::App* cmd, bool with_skew) {
        cmd->add_option("--mode", cli.mode, "sweep mode")
            ->check(CLI::IsMember({"exhaustive", "re-filter"}))
            ->capture_default_str();
        cmd->add_option("--jobs", cli.jobs, "worker threads (0 = hardware)")
            ->capture_default_str();
        cmd->add_option("--cache-dir", cli.cache_dir, "directory for sweep caches (JSON lines)");
        cmd->add_flag("--full-range", cli.full_range,
                      "report the whole determinant range (default: interval only)");
        cmd->add_flag("--interval-only", [](int64_t) {}, "restrict to the interval (default)");
        if (with_skew) {
            cmd->add_flag("--fix-first-row", cli.fix_first_row,
                          "pin row 1 into slot 1 of the skew search");
            cmd->add_option("--node-budget", cli.node_budget,
                            "skew search cutoff in candidate trials (0 = unlimited)");
        }
        cmd->add_option("--format", cli.format, "output format")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
        cmd->add_option("--out", cli.out, "output file (default: stdout)");
    };
    auto add_t = [&](CLI::App* cmd) {
        cmd->add_option("--t", cli.t, "odd t >= 3; the group order is 2t")->required();
    };

    CLI::App* bounds = app.add_subcommand("bounds", "determinant bounds for one order");
    bounds->add_option("--n", cli.n, "order (must be 2 mod 4, >= 6)")->required();
    bounds->add_option("--format", cli.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    bounds->add_option("--out", cli.out, "output file (default: stdout)");

    CLI::App* search = app.add_subcommand("search", "determinant spectrum of one sweep");
    add_t(search);
    add_search_flags(search, false);

    CLI::App* table1 = app.add_subcommand(
        "table1", "determinant range with skew verdicts and det(K-I) for one order");
    add_t(table1);
    add_search_flags(table1, true);

    CLI::App* table2 =
        app.add_subcommand("table2", "largest skew-equivalent determinants per order");
    table2->add_option("--t", cli.t_list, "odd t >= 3 (repeatable)")->required();
    add_search_flags(table2, true);

    CLI::App* lin = app.add_subcommand(
        "lin-report", "monotonicity of det(K-I) across the skew rows of one order");
    add_t(lin);
    add_search_flags(lin, true);

    CLI::App* skew = app.add_subcommand("skew-check",
                                        "decide skew-type equivalence for a matrix file");
    skew->add_option("--in", cli.in_path, "matrix file ('-' for stdin)")->required();
    skew->add_flag("--fix-first-row", cli.fix_first_row, "pin row 1 into slot 1");
    skew->add_option("--node-budget", cli.node_budget,
                     "search cutoff in candidate trials (0 = unlimited)");
    skew->add_option("--format", cli.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_str("text");
    skew->add_option("--out", cli.out, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (bounds->parsed()) return run_bounds(cli);
        if (search->parsed()) return run_search(cli);
        if (table1->parsed()) return run_table1(cli);
        if (table2->parsed()) return run_table2(cli);
        if (lin->parsed()) return run_lin_report(cli);
        if (skew->parsed()) return run_skew_check(cli);
    } catch (const InternalError& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
