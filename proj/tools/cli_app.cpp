#include "cli_app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "schur/automorphic.hpp"
#include "schur/constructions.hpp"
#include "schur/enumeration.hpp"
#include "schur/formulas.hpp"
#include "schur/json.hpp"
#include "schur/number_theory.hpp"
#include "schur/oracle.hpp"

namespace schur::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

int oracle_limit(std::ostream& err) {
    const int limit = oracle_limit_from_env();
    if (limit > kDefaultOracleLimit) {
        err << "warning: oracle limit raised to " << limit << "; searches above n = " << kDefaultOracleLimit
            << " can take minutes\n";
    }
    return limit;
}

std::vector<SchurPartition> run_oracle(int n, int limit) {
    OracleOptions options;
    options.limit = limit;
    try {
        return brute_force_schur_rings(n, options);
    } catch (const OracleLimitExceeded& e) {
        throw UsageError(e.what());
    }
}

// --- count ---------------------------------------------------------------

int cmd_count(int n, const std::string& method, std::ostream& out, std::ostream& err) {
    std::size_t value = 0;
    if (method == "formula") {
        try {
            value = omega_formula(static_cast<std::uint64_t>(n));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    } else if (method == "enumerate") {
        value = omega(n);
    } else {
        value = run_oracle(n, oracle_limit(err)).size();
    }
    out << "omega(" << n << ") = " << value << " [" << method << "]\n";
    return kPass;
}

// --- enumerate -----------------------------------------------------------

void print_census_text(const std::vector<CoreCount>& census, std::ostream& out) {
    out << "\n# wedge-core census\n";
    for (const auto& [order, total] : census_by_order(census)) {
        out << "order " << order << ": " << total << "\n";
    }
    for (const auto& c : census) {
        out << "core order=" << c.order << " count=" << c.count << " " << c.core.to_string() << "\n";
    }
}

int cmd_enumerate(int n, bool json, bool tags, bool cores, std::ostream& out) {
    const auto result = enumerate(n);
    if (json) {
        out << to_json(result).dump() << "\n";
        return kPass;
    }
    for (std::size_t i = 0; i < result.rings.size(); ++i) {
        out << result.rings[i].to_string();
        if (tags) {
            out << "  [";
            const auto names = result.tags[i].names();
            for (std::size_t j = 0; j < names.size(); ++j) out << (j ? "," : "") << names[j];
            out << "]";
        }
        out << "\n";
    }
    if (cores) print_census_text(result.core_census, out);
    return kPass;
}

// --- table ---------------------------------------------------------------

std::vector<int> table_rows(const std::string& kind, int max) {
    std::vector<int> rows;
    for (int n = 2; n <= max; ++n) {
        const auto m = classify_for_formula(static_cast<std::uint64_t>(n));
        if ((kind == "semiprime" && m.kind == FormulaKind::semiprime) ||
            (kind == "fourp" && m.kind == FormulaKind::four_p)) {
            rows.push_back(n);
        }
    }
    return rows;
}

int cmd_table(const std::string& kind, int max, bool verify, std::ostream& out) {
    Enumerator enumerator;
    bool all_ok = true;
    out << std::setw(6) << "n" << std::setw(8) << "omega";
    if (verify) out << std::setw(12) << "enumerated" << "  status";
    out << "\n";
    for (int n : table_rows(kind, max)) {
        const auto value = omega_formula(static_cast<std::uint64_t>(n));
        out << std::setw(6) << n << std::setw(8) << value;
        if (verify) {
            const auto counted = enumerator.rings(n).rings.size();
            const bool ok = counted == value;
            all_ok = all_ok && ok;
            out << std::setw(12) << counted << "  " << (ok ? "ok" : "MISMATCH");
        }
        out << "\n";
    }
    return all_ok ? kPass : kMismatch;
}

// --- verify --------------------------------------------------------------

class Report {
public:
    explicit Report(std::ostream& out) : out_(out) {}

    void check(const std::string& name, bool ok, const std::string& detail) {
        out_ << (ok ? "[PASS] " : "[FAIL] ") << name << ": " << detail << "\n";
        failed_ = failed_ || !ok;
    }
    void skip(const std::string& name, const std::string& why) { out_ << "[SKIP] " << name << ": " << why << "\n"; }
    bool failed() const { return failed_; }

private:
    std::ostream& out_;
    bool failed_ = false;
};

std::string eq(std::uint64_t a, std::uint64_t b) {
    return std::to_string(a) + (a == b ? " = " : " != ") + std::to_string(b);
}

int cmd_verify(int n, bool deep, std::ostream& out, std::ostream& err) {
    Report report(out);
    const auto result = enumerate(n);
    const auto count = static_cast<std::uint64_t>(result.omega());

    const bool axioms_ok = std::all_of(result.rings.begin(), result.rings.end(), is_schur_partition);
    report.check("axioms", axioms_ok, std::to_string(count) + " enumerated rings checked");

    const auto match = classify_for_formula(static_cast<std::uint64_t>(n));
    if (match.kind == FormulaKind::none) {
        report.skip("formula", "no closed form for n = " + std::to_string(n));
    } else {
        const auto expected = omega_formula(static_cast<std::uint64_t>(n));
        report.check("formula", expected == count, "enumerated " + eq(count, expected) + " closed form");
    }

    if (match.kind == FormulaKind::semiprime) {
        const auto split = semiprime_split(match.p, match.q);
        const auto counts = family_counts(result);
        const bool ok = counts.automorphic == split.automorphic && counts.wedge_not_automorphic == split.wedge &&
                        counts.trivial == split.trivial && split.total() == count;
        std::ostringstream detail;
        detail << count << " = " << counts.automorphic << " automorphic + " << counts.wedge_not_automorphic
               << " wedge + " << counts.trivial << " trivial (expected " << split.automorphic << " + " << split.wedge
               << " + " << split.trivial << ")";
        report.check("family split", ok, detail.str());
    }

    if (match.kind == FormulaKind::four_p) {
        const auto p = static_cast<int>(match.p);
        const auto expected = fourp_census(match.p);
        auto by_order = census_by_order(result.core_census);
        const std::map<int, std::uint64_t> want{{2, expected.order_2},
                                                {p, expected.order_p},
                                                {4, expected.order_4},
                                                {2 * p, expected.order_2p},
                                                {4 * p, expected.indecomposable}};
        bool ok = by_order.size() == want.size();
        std::ostringstream detail;
        for (const auto& [order, value] : want) {
            const auto got = by_order.count(order) ? by_order.at(order) : 0;
            ok = ok && got == value;
            detail << "d=" << order << ":" << eq(got, value) << " ";
        }
        report.check("core census", ok, detail.str());
    }

    const int limit = oracle_limit(err);
    if (n <= limit || deep) {
        if (n > limit) err << "warning: --deep runs the brute-force search above its limit\n";
        const auto brute = run_oracle(n, std::max(limit, n));
        report.check("oracle", brute == result.rings,
                     "brute-force search found " + std::to_string(brute.size()) +
                         (brute == result.rings ? " rings, identical to the enumeration" : " rings, sets differ"));
    } else {
        report.skip("oracle", "n = " + std::to_string(n) + " exceeds oracle limit " + std::to_string(limit) +
                                  " (use --deep or SCHUR_ORACLE_LIMIT)");
    }

    out << "verify " << n << ": " << (report.failed() ? "FAIL" : "PASS") << "\n";
    return report.failed() ? kMismatch : kPass;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Construct, verify and count Schur rings over cyclic groups Z_n", "schur"};
    app.require_subcommand(1);

    int count_n = 0;
    std::string method = "enumerate";
    auto* count = app.add_subcommand("count", "Print Omega(n), the number of Schur rings over Z_n");
    count->add_option("n", count_n, "Group order")->required()->check(CLI::Range(1, kMaxModulus));
    count->add_option("--method", method, "formula, enumerate or oracle")
        ->check(CLI::IsMember({"formula", "enumerate", "oracle"}));

    int enum_n = 0;
    bool as_json = false;
    bool as_text = false;
    bool with_tags = false;
    bool with_cores = false;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "List every Schur ring over Z_n");
    enumerate_cmd->add_option("n", enum_n, "Group order")->required()->check(CLI::Range(1, kMaxModulus));
    auto* json_flag = enumerate_cmd->add_flag("--json", as_json, "Emit JSON");
    auto* text_flag = enumerate_cmd->add_flag("--text", as_text, "Emit one brace list per ring (default)");
    json_flag->excludes(text_flag);
    enumerate_cmd->add_flag("--tags", with_tags, "Show the families producing each ring");
    enumerate_cmd->add_flag("--cores", with_cores, "Append the wedge-core census");

    std::string table_kind;
    int table_max = 100;
    bool table_verify = false;
    auto* table = app.add_subcommand("table", "Tabulate closed-form counts for n = pq or n = 4p");
    table->add_option("kind", table_kind, "semiprime or fourp")
        ->required()
        ->check(CLI::IsMember({"semiprime", "fourp"}));
    table->add_option("--max", table_max, "Largest n listed")->required()->check(CLI::Range(1, kMaxModulus));
    table->add_flag("--verify", table_verify, "Re-derive each row by enumeration");

    int verify_n = 0;
    bool deep = false;
    auto* verify = app.add_subcommand("verify", "Cross-check formula, enumeration and brute-force search");
    verify->add_option("n", verify_n, "Group order")->required()->check(CLI::Range(1, kMaxModulus));
    verify->add_flag("--deep", deep, "Run the brute-force search even above the oracle limit");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (*count) return cmd_count(count_n, method, out, err);
        if (*enumerate_cmd) return cmd_enumerate(enum_n, as_json, with_tags, with_cores, out);
        if (*table) return cmd_table(table_kind, table_max, table_verify, out);
        if (*verify) return cmd_verify(verify_n, deep, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

} // namespace schur::cli
