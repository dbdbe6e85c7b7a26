/*
   Copyright 2026 The footprint-lab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FOOTPRINT_TOOLS_CLI_APP_HPP
#define FOOTPRINT_TOOLS_CLI_APP_HPP

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "footprint/formulas.hpp"
#include "footprint/prm_code.hpp"
#include "footprint/search.hpp"
#include "footprint/verify.hpp"
#include "json_io.hpp"

namespace footprint::cli {

using io::Json;

enum ExitCode { kOk = 0, kFailed = 1, kInvalid = 2 };

/// Invalid parameters; always exit code 2.
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// "3", "3,4,7", "1..4" or mixtures like "1..3,6".  Sorted, duplicates removed.
inline std::vector<int> parse_grid(const std::string& text, const std::string& flag) {
    std::set<int> values;
    std::stringstream in(text);
    std::string item;
    auto number = [&](const std::string& s) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size()) throw InvalidInput("--" + flag + ": '" + s + "' is not an integer");
        return v;
    };
    while (std::getline(in, item, ',')) {
        const auto dots = item.find("..");
        if (dots == std::string::npos) {
            values.insert(number(item));
            continue;
        }
        const int lo = number(item.substr(0, dots)), hi = number(item.substr(dots + 2));
        if (hi < lo) throw InvalidInput("--" + flag + ": empty range " + item);
        for (int v = lo; v <= hi; ++v) values.insert(v);
    }
    if (values.empty()) throw InvalidInput("--" + flag + " needs at least one value");
    return {values.begin(), values.end()};
}

inline void require_field(int q) {
    try {
        FiniteField field(q);
    } catch (const std::exception& e) {
        throw InvalidInput("--q " + std::to_string(q) + ": " + e.what());
    }
}

struct Common {
    std::string format = "json";
    std::string output;
    std::uint64_t budget = 0;
    unsigned workers = 1;

    SearchOptions search() const {
        SearchOptions options;
        options.budget = budget ? budget : default_budget();
        options.workers = workers;
        return options;
    }
};

inline void emit(const Common& common, const std::string& text, std::ostream& out) {
    if (common.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(common.output);
    if (!file) throw InvalidInput("cannot write " + common.output);
    file << text;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------- tables

struct TablesArgs {
    std::string q, d, m, r;
};

inline const std::vector<std::string>& table_columns() {
    static const std::vector<std::string> columns{"q", "d", "m", "r", "H_r", "K_r", "e_r", "status", "macaulay_tuple",
                                                  "i", "j", "r_d", "prm_dim", "prm_mindist"};
    return columns;
}

inline int cmd_tables(const TablesArgs& args, const Common& common, std::ostream& out) {
    const auto qs = parse_grid(args.q, "q"), ds = parse_grid(args.d, "d"), ms = parse_grid(args.m, "m");
    std::optional<std::vector<int>> rs;
    if (!args.r.empty()) rs = parse_grid(args.r, "r");
    Json rows = Json::array();
    for (int q : qs) {
        require_field(q);
        for (int d : ds) {
            if (d < 1 || d >= q)
                throw InvalidInput("tables needs 1 <= d < q (got d=" + std::to_string(d) + ", q=" + std::to_string(q) + ")");
            for (int m : ms) {
                if (m < 1) throw InvalidInput("tables needs m >= 1");
                const Integer total = binomial(m + d, d);
                std::vector<Integer> range;
                if (rs) {
                    for (int r : *rs) {
                        if (r < 1 || Integer(r) > total)
                            throw InvalidInput("r=" + std::to_string(r) + " outside 1.." + to_string(total));
                        range.emplace_back(r);
                    }
                } else {
                    for (Integer r = 1; r <= total; ++r) range.push_back(r);
                }
                for (const auto& r : range) {
                    const auto er = conjectured_er(r, d, m, q);
                    const auto dec = decompose_r(r, d, m);
                    Json tuple = Json::array();
                    for (int e : macaulay_tuple(total - r, d).entries) tuple.push_back(e);
                    const bool prm = d <= m * (q - 1);
                    rows.push_back({{"q", q},
                                    {"d", d},
                                    {"m", m},
                                    {"r", io::integer(r)},
                                    {"H_r", io::integer(compute_H(r, d, m, q))},
                                    {"K_r", io::integer(compute_K(r, d, m, q))},
                                    {"e_r", io::integer(er.value)},
                                    {"status", to_string(er.status)},
                                    {"macaulay_tuple", tuple},
                                    {"i", dec.i},
                                    {"j", io::integer(dec.j)},
                                    {"r_d", io::integer(gamma_dim(d, m, q))},
                                    {"prm_dim", prm ? io::integer(sorensen_dim(d, m, q)) : Json()},
                                    {"prm_mindist", prm ? io::integer(sorensen_mindist(d, m, q)) : Json()}});
                }
            }
        }
    }
    auto cell = [](const Json& v) -> std::string {
        if (v.is_null()) return "";
        if (v.is_string()) return v.get<std::string>();
        if (v.is_array()) {
            std::string s;
            for (const auto& e : v) s += (s.empty() ? "" : " ") + e.dump();
            return s;
        }
        return v.dump();
    };
    std::ostringstream text;
    if (common.format == "json") {
        text << dump({{"schema", io::kSchema}, {"command", "tables"}, {"columns", table_columns()}, {"rows", rows}});
    } else if (common.format == "csv") {
        for (std::size_t c = 0; c < table_columns().size(); ++c) text << (c ? "," : "") << table_columns()[c];
        text << "\n";
        for (const auto& row : rows) {
            bool first = true;
            for (const auto& col : table_columns()) {
                text << (first ? "" : ",") << cell(row[col]);
                first = false;
            }
            text << "\n";
        }
    } else {
        std::vector<std::size_t> width;
        for (const auto& col : table_columns()) width.push_back(col.size());
        for (const auto& row : rows)
            for (std::size_t c = 0; c < width.size(); ++c)
                width[c] = std::max(width[c], cell(row[table_columns()[c]]).size());
        auto line = [&](auto get) {
            for (std::size_t c = 0; c < width.size(); ++c)
                text << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << get(c);
            text << "\n";
        };
        line([&](std::size_t c) { return table_columns()[c]; });
        for (const auto& row : rows) line([&](std::size_t c) { return cell(row[table_columns()[c]]); });
    }
    emit(common, text.str(), out);
    return kOk;
}

// ---------------------------------------------------------------- search

struct SearchArgs {
    std::string kind;
    int q = 0, d = 0, m = 0, r = 0;
    std::optional<int> e;
    std::string mode = "reduced";
};

inline double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

inline int cmd_search(const SearchArgs& args, const Common& common, std::ostream& out) {
    require_field(args.q);
    const int q = args.q, d = args.d, m = args.m, r = args.r;
    if (m < 1) throw InvalidInput("search needs m >= 1");
    if (r < 1) throw InvalidInput("search needs r >= 1");
    if (d < (args.kind == "affine" ? 0 : 1)) throw InvalidInput("search needs d >= 1");
    auto options = common.search();
    const auto start = std::chrono::steady_clock::now();

    Json report = {{"schema", io::kSchema}, {"command", "search"}, {"kind", args.kind},
                   {"q", q}, {"d", d}, {"m", m}, {"r", r}};
    std::vector<std::string> failed;
    Json formula;  // null: no formula applies
    std::optional<bool> matches;
    auto compare = [&](const std::string& name, const Integer& expected, bool proven, const Integer& value) {
        formula = {{"name", name}, {"value", io::integer(expected)}, {"status", proven ? "proven" : "conjectural"}};
        matches = expected == value;
        if (proven && !*matches) failed.push_back(name);
    };

    try {
        if (args.kind == "er") {
            if (args.mode != "reduced" && args.mode != "all") throw InvalidInput("--mode must be reduced or all");
            const auto mode = args.mode == "reduced" ? ErMode::projective_reduced : ErMode::all_homogeneous;
            options.audit_footprint = mode == ErMode::projective_reduced;
            const auto dim = mode == ErMode::projective_reduced ? Integer(enumerate_reduced(m, q, d).size()) : binomial(m + d, d);
            if (Integer(r) > dim) throw InvalidInput("r=" + std::to_string(r) + " exceeds the space dimension " + to_string(dim));
            const auto found = brute_force_er(r, d, m, q, mode, options);
            const Integer value = found.value;
            report["mode"] = args.mode;
            report["value"] = found.value;
            report["witness"] = io::polynomials(found.witness);
            if (d <= q) {
                const auto lower = conjectured_er(r, d, m, q);
                if (const auto known = known_er(r, d, m, q))
                    compare("e_r closed form", *known, true, value);
                else
                    compare("conjectured e_r", lower.value, false, value);
                if (value < lower.value) failed.push_back("lower bound H_j(d-1,m-i) + p_{m-i-1}");
                report["lower_bound"] = io::integer(lower.value);
            }
            if (d < q) {
                const auto upper = compute_K(r, d, m, q);
                if (value > upper) failed.push_back("upper bound K_r");
                report["upper_bound"] = io::integer(upper);
            }
            if (options.audit_footprint) {
                report["footprint_checks"] = found.footprint_checked;
                report["footprint_violations"] = found.footprint_violations;
                if (found.footprint_violations) failed.push_back("footprint bound");
            }
            report["subspaces_enumerated"] = found.subspaces_enumerated;
        } else if (args.kind == "affine") {
            const auto found = brute_force_affine_er(r, d, m, q, options);
            report["value"] = found.value;
            report["witness"] = io::polynomials(found.witness);
            if (d < q) compare("H_r", compute_H(r, d, m, q), true, found.value);
            report["subspaces_enumerated"] = found.subspaces_enumerated;
        } else if (args.kind == "footprint") {
            const int e = args.e.value_or(stable_degree(d, m, q));
            if (e < 0) throw InvalidInput("--e must be nonnegative");
            const auto found = brute_force_max_footprint(r, d, m, q, e, options);
            report["e"] = e;
            report["value"] = found.value;
            report["witness"] = io::monomials(found.witness);
            if (d < q && e >= stable_degree(d, m, q)) {
                compare("K_r", compute_K(r, d, m, q), true, found.value);
                const auto lex = footprint_size(lex_set_projective(m, q, d, static_cast<std::size_t>(r)), e, q);
                if (Integer(lex) != Integer(found.value)) failed.push_back("lex segment footprint");
            }
            report["subspaces_enumerated"] = found.subsets_enumerated;
        } else if (args.kind == "ghw") {
            const auto code = build_prm(d, m, q);
            if (static_cast<std::size_t>(r) > code.k)
                throw InvalidInput("r=" + std::to_string(r) + " exceeds the code dimension " + std::to_string(code.k));
            const auto found = ghw_exhaustive(code, r, options);
            report["value"] = found.value;
            report["witness"] = found.basis;
            report["n"] = code.n;
            report["k"] = code.k;
            const Integer pm = projective_count(m, q);
            if (d <= q) {
                if (const auto known = known_er(r, d, m, q))
                    compare("p_m - e_r", pm - *known, true, found.value);
                else
                    compare("p_m - conjectured e_r", pm - conjectured_er(r, d, m, q).value, false, found.value);
            }
            if (d < q) {
                const auto bound = ghw_lower_bound(r, d, m, q);
                if (Integer(found.value) < bound) failed.push_back("GHW lower bound");
                report["lower_bound"] = io::integer(bound);
            }
            report["subspaces_enumerated"] = found.subspaces_enumerated;
        } else {
            throw InvalidInput("unknown search kind '" + args.kind + "' (er, affine, footprint, ghw)");
        }
    } catch (const BudgetExceeded& e) {
        report["error"] = "budget exceeded";
        report["required"] = e.required();
        report["candidates"] = e.candidates();
        report["budget"] = e.budget();
        emit(common, dump(report), out);
        return kInvalid;
    } catch (const OutOfRange& e) {
        throw InvalidInput(e.what());
    }
    report["formula"] = formula;
    report["matches_formula"] = matches ? Json(*matches) : Json();
    report["failed"] = failed;
    report["elapsed"] = seconds_since(start);
    emit(common, dump(report), out);
    return failed.empty() ? kOk : kFailed;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    std::string suite;
    std::string q;
    int m_max = -1, ell = -1, d_max = -1;
    bool quick = false;
};

inline int cmd_verify(const VerifyArgs& args, const Common& common, std::ostream& out) {
    VerifyConfig config;
    if (!args.q.empty()) config.qs = parse_grid(args.q, "q");
    for (int q : config.qs) require_field(q);
    config.m_max = args.m_max;
    config.ell = args.ell;
    config.d_max = args.d_max;
    config.quick = args.quick;
    config.search = common.search();
    if (args.suite != "all" && !suites().count(args.suite)) {
        std::string names;
        for (const auto& [name, fn] : suites()) names += " " + name;
        throw InvalidInput("unknown suite '" + args.suite + "'; one of:" + names + " all");
    }
    const auto start = std::chrono::steady_clock::now();
    const auto reports = run_suites(args.suite, config);
    bool passed = true;
    Json list = Json::array();
    for (const auto& rep : reports) {
        passed = passed && rep.passed();
        list.push_back(io::suite(rep));
    }
    if (common.format == "json") {
        emit(common,
             dump({{"schema", io::kSchema}, {"command", "verify"}, {"suite", args.suite}, {"quick", args.quick},
                   {"passed", passed}, {"suites", list}, {"elapsed", seconds_since(start)}}),
             out);
    } else {
        std::ostringstream text;
        for (const auto& rep : reports)
            for (const auto& p : rep.properties) {
                text << (p.passed ? "PASS " : "FAIL ") << rep.suite << ": " << p.name << " (" << p.checked << " checked";
                if (p.skipped) text << ", " << p.skipped << " skipped over budget";
                text << ")\n";
                if (!p.passed) text << "  counterexample: " << p.counterexample << "\n";
            }
        text << (passed ? "all properties hold" : "verification FAILED") << "\n";
        emit(common, text.str(), out);
    }
    return passed ? kOk : kFailed;
}

// ---------------------------------------------------------------- code, witness

struct InstanceArgs {
    int q = 0, d = 0, m = 0, r = 0;
};

inline int cmd_code(const InstanceArgs& args, const Common& common, std::ostream& out) {
    require_field(args.q);
    if (args.d < 1 || args.m < 1) throw InvalidInput("code needs d >= 1 and m >= 1");
    const auto code = build_prm(args.d, args.m, args.q);
    emit(common, common.format == "json" ? dump(io::code(code)) : generator_csv(code), out);
    return kOk;
}

inline int cmd_witness(const InstanceArgs& args, const Common& common, std::ostream& out) {
    require_field(args.q);
    const int q = args.q, d = args.d, m = args.m, r = args.r;
    if (d < 1 || d > q) throw InvalidInput("witness needs 1 <= d <= q");
    if (m < 1 || r < 1 || Integer(r) > binomial(m + d, d)) throw InvalidInput("witness needs m >= 1 and 1 <= r <= C(m+d, d)");
    const auto forms = construct_witness(r, d, m, q, common.search());
    const auto dec = decompose_r(r, d, m);
    Json report = {{"schema", io::kSchema},
                   {"command", "witness"},
                   {"q", q},
                   {"d", d},
                   {"m", m},
                   {"r", r},
                   {"i", dec.i},
                   {"j", io::integer(dec.j)},
                   {"expected", io::integer(conjectured_er(r, d, m, q).value)},
                   {"zeros", count_common_zeros(forms, m, q)},
                   {"polynomials", io::polynomials(forms)}};
    emit(common, dump(report), out);
    return kOk;
}

// ---------------------------------------------------------------- entry

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"footprint-lab: rational points on projective varieties and PRM codes"};
    app.require_subcommand(1);
    Common common;
    auto add_common = [&](CLI::App* sub, std::vector<std::string> formats) {
        sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember(formats));
        sub->add_option("--output", common.output, "Write to this file instead of stdout");
        sub->add_option("--budget", common.budget, "Evaluation budget (default FOOTPRINT_LAB_BUDGET or 1e8)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--workers", common.workers, "Worker threads")->check(CLI::Range(1u, 256u));
    };

    TablesArgs tables;
    auto* t = app.add_subcommand("tables", "H_r, K_r and e_r over a parameter grid");
    t->add_option("--q", tables.q, "Field orders, e.g. 3,4 or 3..5")->required();
    t->add_option("--d", tables.d, "Degrees")->required();
    t->add_option("--m", tables.m, "Projective dimensions")->required();
    t->add_option("--r", tables.r, "Ranks (default: all)");
    add_common(t, {"json", "csv", "pretty"});

    SearchArgs search;
    auto* s = app.add_subcommand("search", "Exhaustive searches: er, affine, footprint, ghw");
    s->add_option("kind", search.kind, "er | affine | footprint | ghw")->required();
    s->add_option("--q", search.q)->required();
    s->add_option("--d", search.d)->required();
    s->add_option("--m", search.m)->required();
    s->add_option("--r", search.r)->required();
    s->add_option("--e", search.e, "Footprint degree (footprint search; default d + m(q-1))");
    s->add_option("--mode", search.mode, "reduced | all (er search)");
    add_common(s, {"json"});

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "Run property suites");
    v->add_option("--suite", verify.suite, "Suite name or all")->required();
    v->add_option("--q", verify.q, "Field orders");
    v->add_option("--m-max", verify.m_max);
    v->add_option("--l", verify.ell, "Hypercube dimension");
    v->add_option("--d-max", verify.d_max);
    v->add_flag("--quick", verify.quick, "Pinned small instances");
    add_common(v, {"json", "pretty"});

    InstanceArgs code_args;
    auto* c = app.add_subcommand("code", "Generator matrix of PRM_q(d, m)");
    c->add_option("--q", code_args.q)->required();
    c->add_option("--d", code_args.d)->required();
    c->add_option("--m", code_args.m)->required();
    add_common(c, {"json", "csv"});

    InstanceArgs witness_args;
    auto* w = app.add_subcommand("witness", "Forms attaining the conjectured e_r");
    w->add_option("--q", witness_args.q)->required();
    w->add_option("--d", witness_args.d)->required();
    w->add_option("--m", witness_args.m)->required();
    w->add_option("--r", witness_args.r)->required();
    add_common(w, {"json"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInvalid;
    }
    try {
        if (t->parsed()) return cmd_tables(tables, common, out);
        if (s->parsed()) return cmd_search(search, common, out);
        if (v->parsed()) return cmd_verify(verify, common, out);
        if (c->parsed()) return cmd_code(code_args, common, out);
        if (w->parsed()) return cmd_witness(witness_args, common, out);
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const WitnessInvalid& e) {
        err << "error: " << e.what() << "\n";
        return kFailed;
    }
    return kInvalid;
}

}  // namespace footprint::cli

#endif
