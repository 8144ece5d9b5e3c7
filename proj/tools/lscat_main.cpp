// lscat: exact mod-p cohomology computations for the compact exceptional
// Lie groups: cup length, Toomer filtration weight, certified module-weight
// lower bounds, and the bar/cobar homology cross-checks behind them.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lscat/catalog.hpp"
#include "lscat/json_io.hpp"

using nlohmann::json;
using namespace lscat;

namespace {

enum class LogLevel { Quiet, Info, Debug };

LogLevel log_level() {
    const char* env = std::getenv("LSCAT_LOG");
    if (!env) return LogLevel::Info;
    std::string s = env;
    if (s == "quiet") return LogLevel::Quiet;
    if (s == "debug") return LogLevel::Debug;
    return LogLevel::Info;
}

void info(const std::string& msg) {
    if (log_level() != LogLevel::Quiet) std::cerr << msg << "\n";
}

struct Selection {
    std::string group;
    int prime = 0;
    bool all = false;

    std::vector<std::pair<Group, int>> resolve() const {
        if (all) return all_entries();
        auto g = parse_group(group);
        if (!g) throw CLI::ValidationError("--group", "unknown group " + group + " (use G2/F4/E6/E7/E8)");
        if (prime != 2 && prime != 3)
            throw CLI::ValidationError("--prime", "prime must be 2 or 3");
        return {{*g, prime}};
    }
};

std::string check_status(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "PASS";
        case CheckStatus::Finding: return "FINDING";
        case CheckStatus::Fail: return "FAIL";
    }
    return "?";
}

std::string op_text(const BasicOp& op, int p) { return op_name(op, p); }

using Row = std::vector<std::string>;

std::string emit_csv(const Row& head, const std::vector<Row>& rows) {
    std::ostringstream os;
    for (std::size_t i = 0; i < head.size(); ++i) os << (i ? "," : "") << head[i];
    os << "\n";
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
        os << "\n";
    }
    return os.str();
}

std::string emit_markdown(const Row& head, const std::vector<Row>& rows) {
    std::ostringstream os;
    os << "|";
    for (const auto& h : head) os << " " << h << " |";
    os << "\n|";
    for (std::size_t i = 0; i < head.size(); ++i) os << " --- |";
    os << "\n";
    for (const auto& r : rows) {
        os << "|";
        for (const auto& c : r) os << " " << c << " |";
        os << "\n";
    }
    return os.str();
}

std::string emit_aligned(const Row& head, const std::vector<Row>& rows) {
    std::vector<std::size_t> w(head.size());
    for (std::size_t i = 0; i < head.size(); ++i) w[i] = head[i].size();
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
    std::ostringstream os;
    for (std::size_t i = 0; i < head.size(); ++i) os << head[i] << std::string(w[i] - head[i].size() + 2, ' ');
    os << "\n";
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) os << r[i] << std::string(w[i] - r[i].size() + 2, ' ');
        os << "\n";
    }
    return os.str();
}

std::string emit_table(const std::string& format, const Row& head, const std::vector<Row>& rows) {
    if (format == "csv") return emit_csv(head, rows);
    if (format == "markdown") return emit_markdown(head, rows);
    return emit_aligned(head, rows);
}

int run_invariants(const Selection& sel, const std::string& format, const std::string& input, bool strict,
                   bool exploratory) {
    json out = json::array();
    std::ostringstream text;
    std::vector<Row> rows;
    if (!input.empty()) {
        PresentationBundle b = load_bundle_file(input);
        MwgtOptions opts;
        opts.strict_mode = strict;
        opts.exploratory = exploratory;
        AlgebraPresentation e2 = synthesize_e2(b.algebra, b.z_classes, b.differentials);
        opts.strict.e2 = &e2;
        opts.strict.differentials = &b.differentials;
        InvariantReport rep = mwgt_lower(b.algebra, b.action_table, b.z_classes, opts);
        out.push_back(invariant_report_to_json(b.algebra, rep));
        text << "custom input: cup=" << rep.cup << " wgt=" << rep.wgt << " mwgtLower=" << rep.mwgt_lower << "\n";
        rows.push_back({"custom", "-", std::to_string(rep.cup), std::to_string(rep.wgt),
                        std::to_string(rep.mwgt_lower),
                        rep.certificate ? std::to_string(rep.certificate->m) : "-"});
    } else {
        for (auto [g, p] : sel.resolve()) {
            CatalogEntry entry = get(g, p);
            InvariantReport rep = compute_invariants(entry, strict, exploratory);
            json j = invariant_report_to_json(entry.algebra, rep);
            j["group"] = group_name(g);
            j["prime"] = p;
            out.push_back(j);
            text << group_name(g) << " p=" << p << ": cup=" << rep.cup << " wgt=" << rep.wgt
                 << " mwgtLower=" << rep.mwgt_lower;
            if (rep.certificate) {
                const auto& c = *rep.certificate;
                text << "  [witness " << op_text(c.op, p) << " " << c.z_name << " = " << c.x
                     << ", mu = " << entry.algebra.to_string(c.mu) << ", m = " << c.m << "]";
            } else if (!rep.fallback_reason.empty()) {
                text << "  [" << rep.fallback_reason << "]";
            }
            if (rep.exploratory_m) text << "  [exploratory, non-certified: m up to " << *rep.exploratory_m << "]";
            text << "\n";
            rows.push_back({group_name(g), std::to_string(p), std::to_string(rep.cup), std::to_string(rep.wgt),
                            std::to_string(rep.mwgt_lower),
                            rep.certificate ? std::to_string(rep.certificate->m) : "-"});
        }
    }
    if (format == "json")
        std::cout << out.dump(2) << "\n";
    else if (format == "csv" || format == "markdown")
        std::cout << emit_table(format, {"group", "prime", "cup", "wgt", "mwgtLower", "witnessM"}, rows);
    else
        std::cout << text.str();
    return 0;
}

std::vector<Row> dim_rows(const BigradedDims& dims, const std::map<int, int>& expected, bool have_expected,
                          int max_degree) {
    std::vector<Row> rows;
    auto totals = dims.totals();
    for (int d = 0; d <= max_degree; ++d) {
        int c = totals.count(d) ? totals.at(d) : 0;
        int e = expected.count(d) ? expected.at(d) : 0;
        if (c == 0 && (!have_expected || e == 0)) continue;
        Row r = {std::to_string(d), std::to_string(c)};
        if (have_expected) {
            r.push_back(std::to_string(e));
            r.push_back(c != e ? "<-- differs" : "");
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

void print_dim_table(std::ostream& os, const BigradedDims& dims, const std::map<int, int>& expected,
                     bool have_expected, int max_degree) {
    Row head = {"degree", "dim"};
    if (have_expected) {
        head.push_back("expected");
        head.push_back("");
    }
    os << emit_aligned(head, dim_rows(dims, expected, have_expected, max_degree));
    if (log_level() == LogLevel::Debug) {
        os << "bigraded cells (s, t, dim):";
        for (const auto& [st, dim] : dims.dims) os << " (" << st.first << "," << st.second << "," << dim << ")";
        os << "\n";
    }
}

int run_homology(const Selection& sel, const std::string& mode, int max_degree, const std::string& format,
                 const std::string& input) {
    bool tor = mode == "tor";
    if (!tor && mode != "cotor") throw CLI::ValidationError("--mode", "mode must be tor or cotor");
    json jout = json::array();
    std::ostringstream text;
    std::vector<Row> rows;  // for csv/markdown output
    int exit_code = 0;
    if (!input.empty()) {
        PresentationBundle b = load_bundle_file(input);
        BigradedDims dims;
        if (tor) {
            dims = bar_homology(b.algebra, max_degree);
        } else {
            if (!b.coalgebra) throw std::runtime_error("input has no coalgebra section for cotor mode");
            dims = cobar_homology(*b.coalgebra, max_degree);
        }
        jout.push_back(dims_to_json(dims));
        print_dim_table(text, dims, {}, false, max_degree);
        for (auto& r : dim_rows(dims, {}, false, max_degree)) {
            Row row = {"custom", "-"};
            row.insert(row.end(), r.begin(), r.end());
            rows.push_back(std::move(row));
        }
    } else {
        for (auto [g, p] : sel.resolve()) {
            CatalogEntry entry = get(g, p);
            info("computing " + mode + " homology for " + group_name(g) + " at p=" + std::to_string(p));
            BigradedDims dims = tor ? bar_homology(entry.algebra, max_degree)
                                    : cobar_homology(entry.loop_coalgebra, max_degree);
            CheckResult cmp = tor ? tor_comparison(entry, dims, max_degree)
                                  : cotor_comparison(entry, dims, max_degree);
            json j = dims_to_json(dims);
            j["group"] = group_name(g);
            j["prime"] = p;
            j["comparison"] = {{"status", check_status(cmp.status)}, {"detail", cmp.detail}};
            jout.push_back(j);
            text << group_name(g) << " p=" << p << " (" << mode << ", cutoff " << max_degree << ")\n";
            auto expected = tor ? entry.loop_coalgebra.dims_up_to(max_degree)
                                : entry.expected_cotor.poincare_dims(max_degree);
            print_dim_table(text, dims, expected, true, max_degree);
            text << "[" << check_status(cmp.status) << "] " << cmp.detail << "\n";
            for (auto& r : dim_rows(dims, expected, true, max_degree)) {
                Row row = {group_name(g), std::to_string(p)};
                row.insert(row.end(), r.begin(), r.end());
                rows.push_back(std::move(row));
            }
            if (cmp.status == CheckStatus::Fail) exit_code = 1;
        }
    }
    if (format == "json")
        std::cout << jout.dump(2) << "\n";
    else if (format == "csv" || format == "markdown")
        std::cout << emit_table(format, {"group", "prime", "degree", "dim", "expected", "note"}, rows);
    else
        std::cout << text.str();
    return exit_code;
}

int run_verify(const Selection& sel, int max_degree, const std::string& format) {
    json jout = json::array();
    bool any_fail = false;
    std::ostringstream text;
    for (auto [g, p] : sel.resolve()) {
        CatalogEntry entry = get(g, p);
        info("verifying " + group_name(g) + " at p=" + std::to_string(p));
        EntryReport rep = verify_entry(entry, max_degree);
        jout.push_back(entry_report_to_json(rep));
        text << group_name(g) << " p=" << p << "\n";
        for (const auto& c : rep.checks) {
            text << "  [" << check_status(c.status) << "] " << c.name;
            if (!c.detail.empty()) text << ": " << c.detail;
            text << "\n";
        }
        any_fail = any_fail || rep.any_fail();
    }
    if (format == "json")
        std::cout << jout.dump(2) << "\n";
    else
        std::cout << text.str();
    return any_fail ? 1 : 0;
}

struct ReportData {
    // live values, computed once per (group, prime)
    std::map<std::pair<Group, int>, InvariantReport> live;
    std::map<std::pair<Group, int>, CatalogEntry> entries;

    ReportData() {
        for (auto [g, p] : all_entries()) {
            entries.emplace(std::make_pair(g, p), get(g, p));
            live.emplace(std::make_pair(g, p), compute_invariants(entries.at({g, p})));
        }
    }
};

int run_report(const std::string& format) {
    ReportData data;
    SummaryTables paper = expected_tables();

    // Rows: mod-2 table (wgt, Mwgt lower) and mod-3 difference table.
    std::vector<std::vector<std::string>> t1rows, t2rows;
    for (std::size_t i = 0; i < paper.mod2.size(); ++i) {
        Group g = paper.mod2[i].group;
        const auto& inv2 = data.live.at({g, 2});
        const auto& inv3 = data.live.at({g, 3});
        t1rows.push_back({group_name(g), std::to_string(inv2.wgt), ">= " + std::to_string(inv2.mwgt_lower),
                          std::to_string(paper.mod2[i].wgt), ">= " + std::to_string(paper.mod2[i].mwgt_lower)});
        t2rows.push_back({group_name(g), std::to_string(inv3.wgt - inv3.cup),
                          ">= " + std::to_string(inv2.mwgt_lower - inv2.wgt),
                          ">= " + std::to_string(inv3.mwgt_lower - inv3.wgt),
                          std::to_string(paper.mod3[i].wgt_minus_cup),
                          ">= " + std::to_string(paper.mod3[i].mwgt_minus_wgt_p2),
                          ">= " + std::to_string(paper.mod3[i].mwgt_minus_wgt_p3)});
    }
    std::vector<std::string> t1head = {"G", "wgt(G;F2)", "Mwgt(G;F2)", "wgt expected", "Mwgt expected"};
    std::vector<std::string> t2head = {"G",           "wgt-cup(F3)",  "Mwgt-wgt(F2)", "Mwgt-wgt(F3)",
                                       "wgt-cup exp", "Mwgt-wgt(F2) exp", "Mwgt-wgt(F3) exp"};

    if (format == "json") {
        json j;
        j["mod2"] = json::array();
        j["mod3"] = json::array();
        for (std::size_t i = 0; i < paper.mod2.size(); ++i) {
            Group g = paper.mod2[i].group;
            const auto& e2 = data.entries.at({g, 2});
            const auto& e3 = data.entries.at({g, 3});
            json r2 = invariant_report_to_json(e2.algebra, data.live.at({g, 2}));
            r2["group"] = group_name(g);
            r2["paperWgt"] = paper.mod2[i].wgt;
            r2["paperMwgtLower"] = paper.mod2[i].mwgt_lower;
            j["mod2"].push_back(r2);
            json r3 = invariant_report_to_json(e3.algebra, data.live.at({g, 3}));
            r3["group"] = group_name(g);
            r3["paperWgtMinusCup"] = paper.mod3[i].wgt_minus_cup;
            r3["paperMwgtMinusWgtP2"] = paper.mod3[i].mwgt_minus_wgt_p2;
            r3["paperMwgtMinusWgtP3"] = paper.mod3[i].mwgt_minus_wgt_p3;
            j["mod3"].push_back(r3);
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::string t1 = emit_table(format, t1head, t1rows);
    std::string t2 = emit_table(format, t2head, t2rows);
    std::cout << "Mod-2 category weight and module weight (computed vs expected)\n"
              << t1 << "\nDifference table at p = 3 and module-weight gaps (computed vs expected)\n"
              << t2;
    return 0;
}

int run_export(const Selection& sel) {
    json out = json::array();
    for (auto [g, p] : sel.resolve()) out.push_back(entry_to_json(get(g, p)));
    if (out.size() == 1)
        std::cout << out[0].dump(2) << "\n";
    else
        std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact mod-p invariants of the compact exceptional Lie groups"};
    app.require_subcommand(1);

    std::string format = "text";
    int max_degree = 20;
    Selection sel;
    std::string input;
    bool strict = false, exploratory = false;
    std::string mode = "cotor";

    auto add_selection = [&](CLI::App* cmd, bool allow_all) {
        cmd->add_option("--group", sel.group, "G2, F4, E6, E7 or E8");
        cmd->add_option("--prime", sel.prime, "coefficient prime (2 or 3)");
        if (allow_all) cmd->add_flag("--all", sel.all, "run over every catalog entry");
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "text | json | csv | markdown")
            ->check(CLI::IsMember({"text", "json", "csv", "markdown"}));
    };

    CLI::App* inv = app.add_subcommand("invariants", "cup length, wgt and the certified Mwgt lower bound");
    add_selection(inv, true);
    add_format(inv);
    inv->add_option("--input", input, "custom presentation (JSON)");
    inv->add_flag("--strict", strict, "also require survival against the transpotence differentials");
    inv->add_flag("--exploratory", exploratory, "report the largest level the survival reasoning allows");

    CLI::App* hom = app.add_subcommand("homology", "bar (tor) or cobar (cotor) homology dimensions");
    hom->add_option("--mode", mode, "tor | cotor")->required();
    add_selection(hom, true);
    add_format(hom);
    hom->add_option("--max-degree", max_degree, "degree cutoff (default 20)")->check(CLI::PositiveNumber);
    hom->add_option("--input", input, "custom presentation (JSON)");

    CLI::App* ver = app.add_subcommand("verify", "run every stored-vs-computed cross-check");
    add_selection(ver, true);
    add_format(ver);
    ver->add_option("--max-degree", max_degree, "degree cutoff (default 20)")->check(CLI::PositiveNumber);

    CLI::App* rep = app.add_subcommand("report", "both summary tables, values computed live");
    add_format(rep);

    CLI::App* exp = app.add_subcommand("export", "emit a catalog entry as JSON");
    add_selection(exp, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(inv)) return run_invariants(sel, format, input, strict, exploratory);
        if (app.got_subcommand(hom)) return run_homology(sel, mode, max_degree, format, input);
        if (app.got_subcommand(ver)) return run_verify(sel, max_degree, format);
        if (app.got_subcommand(rep)) return run_report(format);
        if (app.got_subcommand(exp)) return run_export(sel);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
