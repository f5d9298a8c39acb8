/*
 * SPDX-License-Identifier: Apache-2.0
 *
 * sdom: construct, label, verify and solve domination structures on
 * Sierpinski graphs S(K_n,t).
 *
 * Exit codes: 0 success / all checks match, 1 a verification or comparison
 * failed, 2 capacity exceeded, 3 exact solve skipped or cut short (cap or
 * time budget), 64 usage error.
 */
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sierpdom/checks.hpp"
#include "sierpdom/construction.hpp"
#include "sierpdom/domination.hpp"
#include "sierpdom/exact_solver.hpp"
#include "sierpdom/io.hpp"

namespace {

using nlohmann::json;
using namespace sierpdom;

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_capacity = 2;
constexpr int exit_partial = 3;
constexpr int exit_usage = 64;

std::uint64_t env_vertex_cap() {
    if (const char* raw = std::getenv("SDOM_VERTEX_CAP")) {
        char* end = nullptr;
        const unsigned long long parsed = std::strtoull(raw, &end, 10);
        if (end && *end == '\0' && parsed > 0) return parsed;
        std::cerr << "warning: ignoring malformed SDOM_VERTEX_CAP='" << raw << "'\n";
    }
    return default_vertex_cap;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw error("cannot open output file '" + out_path + "'");
    out << text;
}

std::string slurp(const std::string& in_path) {
    if (in_path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(in_path, std::ios::binary);
    if (!in) throw error("cannot open input file '" + in_path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Variant variant_from_name(const std::string& name) {
    if (name == "plain") return Variant::plain;
    if (name == "roman") return Variant::roman;
    return Variant::double_roman;
}

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::plain: return "plain";
        case Variant::roman: return "roman";
        case Variant::double_roman: return "double-roman";
    }
    return "?";
}

struct CommonParams {
    std::uint32_t n = 0;
    std::uint32_t t = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("-n", n, "Base clique size (>= 2)")->required();
        cmd->add_option("-t", t, "Iteration depth (>= 1)")->required();
    }
};

// ---------------------------------------------------------------- gen

int run_gen(const CommonParams& p, const std::string& format, std::uint64_t vertex_cap,
            const std::string& out_path) {
    GraphParams g(p.n, p.t);
    std::string text;
    if (format == "edgelist") text = to_edge_list(g, vertex_cap);
    else if (format == "dot") text = to_dot(g, vertex_cap);
    else text = graph_to_json(g, vertex_cap);
    emit(text, out_path);
    return exit_ok;
}

// ---------------------------------------------------------------- construct

int run_construct(const CommonParams& p, const std::string& kind_name,
                  const std::string& format, std::uint64_t member_cap,
                  const std::string& out_path) {
    GraphParams g(p.n, p.t);
    const SetKind kind = kind_name == "D" ? SetKind::dominating : SetKind::dominating_star;
    VertexSet set = kind == SetKind::dominating ? build_dominating_set(g, member_cap)
                                                : build_dominating_set_star(g, member_cap);
    if (format == "json") {
        emit(vertex_set_to_json(set, kind), out_path);
    } else {
        std::string text;
        for (const Word& w : set) {
            text += word_to_string(w);
            text += '\n';
        }
        emit(text, out_path);
    }
    return exit_ok;
}

// ---------------------------------------------------------------- label

int run_label(const CommonParams& p, const std::string& variant, const std::string& format,
              std::uint64_t member_cap, const std::string& out_path) {
    GraphParams g(p.n, p.t);
    Labeling f = variant == "roman" ? roman_labeling(g, member_cap)
                                    : double_roman_labeling(g, member_cap);
    if (format == "json") {
        emit(labeling_to_json(f), out_path);
    } else {
        std::string text = "weight " + std::to_string(f.weight()) + "\n";
        f.for_each_assignment([&](const Word& w, std::uint8_t value) {
            text += word_to_string(w) + " " + std::to_string(value) + "\n";
        });
        emit(text, out_path);
    }
    return exit_ok;
}

// ---------------------------------------------------------------- verify

int run_verify(const std::string& in_path, const std::string& format,
               std::uint64_t vertex_cap, const std::string& out_path) {
    const std::string payload = slurp(in_path);
    json parsed = json::parse(payload, nullptr, false);
    if (parsed.is_discarded() || !parsed.is_object()) {
        throw invalid_set_error("input is not a JSON object");
    }

    json report;
    bool pass = false;
    if (parsed.contains("kind")) {
        ParsedVertexSet in = vertex_set_from_json(payload);
        const auto gap = find_undominated(in.set, vertex_cap);
        pass = !gap.has_value();
        report["type"] = "vertex_set";
        report["kind"] = set_kind_name(in.kind);
        report["n"] = in.set.params().n();
        report["t"] = in.set.params().t();
        report["size"] = in.set.size();
        report["dominating"] = pass;
        if (gap) report["counterexample"] = word_to_string(*gap);
    } else if (parsed.contains("mode")) {
        Labeling f = labeling_from_json(payload);
        const auto bad = f.mode() == LabelingMode::roman
                             ? find_roman_violation(f, vertex_cap)
                             : find_double_roman_violation(f, vertex_cap);
        pass = !bad.has_value();
        report["type"] = "labeling";
        report["mode"] = f.mode() == LabelingMode::roman ? "roman" : "double_roman";
        report["n"] = f.params().n();
        report["t"] = f.params().t();
        report["weight"] = f.weight();
        report["valid"] = pass;
        if (bad) report["counterexample"] = word_to_string(*bad);
    } else {
        throw invalid_set_error("input has neither a 'kind' nor a 'mode' field");
    }

    if (format == "json") {
        emit(report.dump(2) + "\n", out_path);
    } else {
        std::string text;
        for (const auto& [key, value] : report.items()) {
            text += key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) +
                    "\n";
        }
        emit(text, out_path);
    }
    return pass ? exit_ok : exit_check_failed;
}

// ---------------------------------------------------------------- solve

struct SolveFlags {
    std::string variant = "plain";
    std::uint64_t solver_cap = 64;
    std::uint64_t vertex_cap = default_vertex_cap;
    std::uint64_t member_cap = default_member_cap;
    std::optional<std::uint64_t> time_budget_ms;
    bool all_values = false;
    bool trace = false;
    std::string format = "text";
    std::string out_path;
};

int run_solve(const CommonParams& p, const SolveFlags& flags) {
    GraphParams g(p.n, p.t);
    const Variant variant = variant_from_name(flags.variant);

    DominationReport report{g, variant};
    report.formula_value = closed_form_number(g, variant);
    report.lower_bound = counting_lower_bound(g, variant);

    std::string witness_note;
    try {
        if (variant == Variant::plain) {
            VertexSet set = build_dominating_set(g, flags.member_cap);
            report.witness_weight = set.size();
            report.witness_valid = is_dominating(set, flags.vertex_cap);
        } else {
            Labeling f = variant == Variant::roman ? roman_labeling(g, flags.member_cap)
                                                   : double_roman_labeling(g, flags.member_cap);
            report.witness_weight = f.weight();
            report.witness_valid = variant == Variant::roman
                                       ? is_roman(f, flags.vertex_cap)
                                       : is_double_roman(f, flags.vertex_cap);
        }
    } catch (const capacity_error& e) {
        witness_note = e.what();
    }

    std::string solver_note;
    std::optional<std::uint64_t> incumbent;
    try {
        SolverConfig cfg;
        cfg.variant = variant;
        cfg.restrict_values = !flags.all_values;
        cfg.vertex_cap = flags.solver_cap;
        if (flags.time_budget_ms) {
            cfg.time_budget = std::chrono::milliseconds(*flags.time_budget_ms);
        }
        if (flags.trace) cfg.trace = &std::cerr;
        report.exact_value = solve_exact(g, cfg);
    } catch (const capacity_error& e) {
        solver_note = e.what();
    } catch (const budget_error& e) {
        solver_note = e.what();
        incumbent = e.incumbent();
        report.lower_bound = std::max(report.lower_bound, e.lower_bound());
    }

    const bool partial = !report.exact_value.has_value() || !report.witness_weight.has_value();
    const bool match = report.all_match();

    if (flags.format == "json") {
        json j;
        j["n"] = g.n();
        j["t"] = g.t();
        j["variant"] = variant_name(variant);
        j["formula"] = report.formula_value;
        j["lower_bound"] = report.lower_bound;
        j["witness_weight"] =
            report.witness_weight ? json(*report.witness_weight) : json(nullptr);
        j["witness_valid"] = report.witness_valid ? json(*report.witness_valid) : json(nullptr);
        j["exact"] = report.exact_value ? json(*report.exact_value) : json(nullptr);
        if (incumbent) j["incumbent"] = *incumbent;
        j["status"] = partial ? "partial" : "complete";
        j["match"] = match;
        emit(j.dump(2) + "\n", flags.out_path);
    } else {
        std::ostringstream text;
        text << "graph: n=" << g.n() << " t=" << g.t() << " (" << g.vertex_count()
             << " vertices)\n";
        text << "variant: " << variant_name(variant) << "\n";
        text << "formula: " << report.formula_value << "\n";
        text << "lower_bound: " << report.lower_bound << "\n";
        if (report.witness_weight) {
            text << "witness_weight: " << *report.witness_weight << "\n";
            text << "witness_valid: " << (*report.witness_valid ? "yes" : "no") << "\n";
        } else {
            text << "witness: skipped (" << witness_note << ")\n";
        }
        if (report.exact_value) {
            text << "exact: " << *report.exact_value << "\n";
        } else {
            text << "exact: skipped (" << solver_note << ")\n";
            if (incumbent) text << "incumbent: " << *incumbent << "\n";
        }
        text << "status: " << (partial ? "partial" : "complete") << "\n";
        text << "match: " << (match ? "yes" : "no") << "\n";
        emit(text.str(), flags.out_path);
    }

    if (partial) return exit_partial;
    return match ? exit_ok : exit_check_failed;
}

// ---------------------------------------------------------------- table

int run_table(std::uint32_t n_max, std::uint32_t t_max, const std::string& out_path) {
    std::string csv = "n,t,gamma,gamma_R,gamma_dR\n";
    for (std::uint32_t n = 2; n <= n_max; ++n) {
        for (std::uint32_t t = 1; t <= t_max; ++t) {
            csv += std::to_string(n) + "," + std::to_string(t) + ",";
            try {
                GraphParams g(n, t);
                csv += std::to_string(domination_number(g)) + "," +
                       std::to_string(roman_domination_number(g)) + "," +
                       std::to_string(double_roman_domination_number(g));
            } catch (const invalid_params_error&) {
                csv += "overflow,overflow,overflow";
            }
            csv += '\n';
        }
    }
    emit(csv, out_path);
    return exit_ok;
}

// ---------------------------------------------------------------- check-lemmas

int run_check_lemmas(const CommonParams& p, const CheckOptions& opts,
                     const std::string& out_path) {
    GraphParams g(p.n, p.t);
    CheckReport report = run_structural_checks(g, opts);
    json j;
    j["n"] = g.n();
    j["t"] = g.t();
    j["all_pass"] = report.all_pass;
    json checks = json::array();
    for (const CheckOutcome& outcome : report.results) {
        json c;
        c["name"] = outcome.name;
        c["mode"] = outcome.mode;
        c["pass"] = outcome.pass;
        c["detail"] = outcome.detail;
        checks.push_back(std::move(c));
    }
    j["checks"] = std::move(checks);
    if (report.all_ones_min_distance) {
        j["all_ones_min_distance"] = *report.all_ones_min_distance;
    }
    emit(j.dump(2) + "\n", out_path);
    return report.all_pass ? exit_ok : exit_check_failed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Domination structures on Sierpinski graphs S(K_n,t)"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "sdom 0.1.0");
    const std::uint64_t base_vertex_cap = env_vertex_cap();

    // gen
    auto* gen = app.add_subcommand("gen", "Emit the graph as edge list, DOT or JSON");
    CommonParams gen_p;
    gen_p.attach(gen);
    std::string gen_format = "edgelist";
    std::uint64_t gen_cap = base_vertex_cap;
    std::string gen_out;
    gen->add_option("--format", gen_format, "Output format")
        ->check(CLI::IsMember({"edgelist", "dot", "json"}));
    gen->add_option("--vertex-cap", gen_cap, "Max n^t for whole-graph output");
    gen->add_option("--out", gen_out, "Output path (default stdout)");

    // construct
    auto* construct = app.add_subcommand("construct", "Build the canonical dominating set");
    CommonParams con_p;
    con_p.attach(construct);
    std::string con_kind = "D";
    std::string con_format = "json";
    std::uint64_t con_member_cap = default_member_cap;
    std::string con_out;
    construct->add_option("--kind", con_kind, "Full set or set without the all-ones word")
        ->check(CLI::IsMember({"D", "D_star"}));
    construct->add_option("--format", con_format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
    construct->add_option("--member-cap", con_member_cap, "Max materialized members");
    construct->add_option("--out", con_out, "Output path (default stdout)");

    // label
    auto* label = app.add_subcommand("label", "Build the canonical minimal labeling");
    CommonParams lab_p;
    lab_p.attach(label);
    std::string lab_variant = "roman";
    std::string lab_format = "json";
    std::uint64_t lab_member_cap = default_member_cap;
    std::string lab_out;
    label->add_option("--variant", lab_variant, "Labeling variant")
        ->check(CLI::IsMember({"roman", "double-roman"}));
    label->add_option("--format", lab_format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
    label->add_option("--member-cap", lab_member_cap, "Max materialized members");
    label->add_option("--out", lab_out, "Output path (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "Re-verify a serialized set or labeling");
    std::string ver_in;
    std::string ver_format = "text";
    std::uint64_t ver_cap = base_vertex_cap;
    std::string ver_out;
    verify->add_option("--in", ver_in, "Input JSON path, or - for stdin")->required();
    verify->add_option("--format", ver_format, "Report format")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--vertex-cap", ver_cap, "Max n^t for the verification scan");
    verify->add_option("--out", ver_out, "Output path (default stdout)");

    // solve
    auto* solve = app.add_subcommand(
        "solve", "Compare closed form, constructed witness and exact search");
    CommonParams sol_p;
    sol_p.attach(solve);
    SolveFlags sol;
    sol.vertex_cap = base_vertex_cap;
    std::uint64_t sol_budget_ms = 0;
    solve->add_option("--variant", sol.variant, "Domination variant")
        ->check(CLI::IsMember({"plain", "roman", "double-roman"}));
    solve->add_option("--solver-cap", sol.solver_cap, "Max n^t for the exact search");
    solve->add_option("--vertex-cap", sol.vertex_cap, "Max n^t for witness verification");
    solve->add_option("--member-cap", sol.member_cap, "Max materialized members");
    auto* budget_opt =
        solve->add_option("--time-budget-ms", sol_budget_ms, "Time budget for the search");
    solve->add_flag("--all-values", sol.all_values,
                    "Search double-Roman values {0,1,2,3} instead of {0,2,3}");
    solve->add_flag("--trace", sol.trace, "Print the search trace to stderr");
    solve->add_option("--format", sol.format, "Report format")
        ->check(CLI::IsMember({"text", "json"}));
    solve->add_option("--out", sol.out_path, "Output path (default stdout)");

    // table
    auto* table = app.add_subcommand("table", "CSV of the closed-form numbers");
    std::uint32_t table_n_max = 10, table_t_max = 6;
    std::string table_out;
    table->add_option("--n-max", table_n_max, "Largest n (rows start at n=2)");
    table->add_option("--t-max", table_t_max, "Largest t (rows start at t=1)");
    table->add_option("--out", table_out, "Output path (default stdout)");

    // check-lemmas
    auto* check = app.add_subcommand(
        "check-lemmas", "Verify the structural guarantees of the canonical set");
    CommonParams chk_p;
    chk_p.attach(check);
    CheckOptions chk_opts;
    chk_opts.vertex_cap = base_vertex_cap;
    std::string chk_out;
    check->add_option("--sample-size", chk_opts.sample_size,
                      "Sampled pairs for the distance check above the threshold");
    check->add_option("--seed", chk_opts.seed, "Seed for sampled checks");
    check->add_option("--pair-threshold", chk_opts.pair_threshold,
                      "Switch distance checking to sampling above this many pairs");
    check->add_option("--vertex-cap", chk_opts.vertex_cap, "Max n^t for exhaustive scans");
    check->add_option("--member-cap", chk_opts.member_cap, "Max materialized members");
    check->add_option("--threads", chk_opts.threads, "Workers for sampled checks (0 = auto)");
    check->add_option("--out", chk_out, "Output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (gen->parsed()) return run_gen(gen_p, gen_format, gen_cap, gen_out);
        if (construct->parsed()) {
            return run_construct(con_p, con_kind, con_format, con_member_cap, con_out);
        }
        if (label->parsed()) {
            return run_label(lab_p, lab_variant, lab_format, lab_member_cap, lab_out);
        }
        if (verify->parsed()) return run_verify(ver_in, ver_format, ver_cap, ver_out);
        if (solve->parsed()) {
            if (budget_opt->count() > 0) sol.time_budget_ms = sol_budget_ms;
            return run_solve(sol_p, sol);
        }
        if (table->parsed()) return run_table(table_n_max, table_t_max, table_out);
        if (check->parsed()) return run_check_lemmas(chk_p, chk_opts, chk_out);
    } catch (const capacity_error& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return exit_capacity;
    } catch (const budget_error& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return exit_partial;
    } catch (const invalid_params_error& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return exit_usage;
    } catch (const invalid_word_error& e) {
        std::cerr << "invalid word: " << e.what() << "\n";
        return exit_usage;
    } catch (const invalid_set_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return exit_usage;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_check_failed;
    }
    return exit_usage;
}
