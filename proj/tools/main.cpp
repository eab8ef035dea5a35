// Command-line driver: check | search | la | construct | conjectures.
// Exit codes: 0 = property holds / optimum proven, 1 = violation found or
// only a bound was established, 2 = usage or parse error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sperner/io.hpp"
#include "sperner/report.hpp"
#include "sperner/search.hpp"

namespace {

using namespace sperner;

struct GlobalOptions {
    std::string format = "text";
    SearchBudget budget;
    bool verbose = false;
};

void add_budget_flags(CLI::App* cmd, GlobalOptions& opts) {
    cmd->add_option("--format", opts.format, "Output format: json, csv, or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--max-seconds", opts.budget.max_seconds, "Wall-clock budget per search");
    cmd->add_option("--max-nodes", opts.budget.max_nodes, "Branch-node budget per search");
    cmd->add_option("--threads", opts.budget.threads, "Worker threads");
    cmd->add_flag("--deterministic", opts.budget.deterministic,
                  "Schedule-independent results (byte-stable JSON)");
    cmd->add_option("--seed", opts.budget.seed, "Random seed for heuristics");
    cmd->add_option("--witnesses", opts.budget.witness_cap, "Extremal families to keep");
    cmd->add_flag("--verbose", opts.verbose, "Log incumbent improvements to stderr");
}

int resolve_l(int n, std::optional<int> l, std::optional<int> lp) {
    if (l.has_value() == lp.has_value())
        throw RangeError("exactly one of --l / --lp must be given");
    return l ? *l : n - *lp;
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw Error("cannot open output file: " + out_path);
        out << text;
    }
}

int cmd_check(const std::string& family_path, std::optional<int> l, std::optional<int> lp,
              int k, const GlobalOptions& opts) {
    SetFamily family = parse_family_file(family_path);
    TraceProblem problem(family.ground(), resolve_l(family.ground().n(), l, lp), k);
    auto violation = find_violation(family, problem);

    if (opts.format == "json") {
        Json j;
        j["problem"] = trace_problem_json(problem);
        j["family_size"] = family.size();
        j["verdict"] = violation ? "violation" : "holds";
        if (violation) {
            j["window"] = format_set(violation->window);
            j["window_complement"] = format_set(family.ground().full() ^ violation->window);
            Json chain = Json::array();
            for (Mask m : violation->chain.links) chain.push_back(format_set(m));
            j["chain"] = std::move(chain);
        }
        std::cout << j.dump(2) << "\n";
    } else if (opts.format == "csv") {
        std::cout << "verdict,n,l,lp,k,window,window_complement,chain\n";
        std::cout << (violation ? "violation" : "holds") << ',' << problem.ground.n() << ','
                  << problem.l << ',' << problem.lp() << ',' << problem.k << ',';
        if (violation) {
            std::cout << '"' << format_set(violation->window) << "\",\""
                      << format_set(family.ground().full() ^ violation->window) << "\",\"";
            for (std::size_t i = 0; i < violation->chain.links.size(); ++i) {
                if (i) std::cout << ';';
                std::cout << format_set(violation->chain.links[i]);
            }
            std::cout << '"';
        } else {
            std::cout << ",,";
        }
        std::cout << "\n";
    } else {
        if (violation) {
            std::cout << "violation\n";
            std::cout << "window: " << format_set(violation->window) << "\n";
            std::cout << "removed: " << format_set(family.ground().full() ^ violation->window)
                      << "\n";
            std::cout << "chain:\n";
            SetFamily chain_family(family.ground(), violation->chain.links);
            std::cout << write_family(chain_family);
        } else {
            std::cout << "holds: every " << problem.l << "-window trace is " << problem.k
                      << "-Sperner\n";
        }
    }
    return violation ? 1 : 0;
}

int cmd_search(int n, std::optional<int> l, std::optional<int> lp, int k,
               GlobalOptions& opts) {
    Ground g(n);
    TraceProblem problem(g, resolve_l(n, l, lp), k);
    if (opts.verbose) opts.budget.log = &std::cerr;
    SearchResult res = max_trace_sperner(problem, opts.budget);
    if (opts.format == "json")
        std::cout << search_result_json(trace_problem_json(problem), res, opts.budget).dump(2)
                  << "\n";
    else if (opts.format == "csv")
        std::cout << search_result_csv(problem, res);
    else
        std::cout << search_result_text(res);
    return res.status == SearchStatus::proven_optimal ? 0 : 1;
}

int cmd_la(int n, const std::string& poset_spec, GlobalOptions& opts) {
    Ground g(n);
    TreePoset poset = poset_from_spec(poset_spec);
    if (opts.verbose) opts.budget.log = &std::cerr;
    SearchResult res = max_p_free(g, poset, opts.budget);
    if (opts.format == "json")
        std::cout << search_result_json(poset_problem_json(g, poset), res, opts.budget).dump(2)
                  << "\n";
    else if (opts.format == "csv")
        std::cout << search_result_csv(g, poset, res);
    else
        std::cout << search_result_text(res);
    return res.status == SearchStatus::proven_optimal ? 0 : 1;
}

int cmd_construct(const std::string& spec, const std::string& out_path) {
    SetFamily family = construct_family(spec);
    emit(out_path, write_family(family));
    return 0;
}

int cmd_conjectures(int n_max, int k_max, GlobalOptions& opts) {
    if (opts.verbose) opts.budget.log = &std::cerr;
    std::vector<ReportRow> rows = conjecture_table(n_max, k_max, opts.budget);
    if (opts.format == "json")
        std::cout << report_rows_json(rows).dump(2) << "\n";
    else if (opts.format == "csv")
        std::cout << report_rows_csv(rows);
    else
        std::cout << report_rows_text(rows);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact analysis of trace-Sperner set families and forbidden tree posets"};
    app.require_subcommand(1);

    GlobalOptions opts;

    // check
    std::string family_path;
    std::optional<int> check_l, check_lp;
    int check_k = 1;
    CLI::App* check = app.add_subcommand("check", "Verify the windowed Sperner property of a family file");
    check->add_option("family", family_path, "Family file")->required();
    check->add_option("--l", check_l, "Window size");
    check->add_option("--lp", check_lp, "Co-window size (l = n - lp)");
    check->add_option("--k", check_k, "Sperner depth")->required();
    add_budget_flags(check, opts);

    // search
    int search_n = 0, search_k = 1;
    std::optional<int> search_l, search_lp;
    CLI::App* search = app.add_subcommand("search", "Maximize a family under the windowed Sperner property");
    search->add_option("--n", search_n, "Ground set size")->required();
    search->add_option("--k", search_k, "Sperner depth")->required();
    search->add_option("--l", search_l, "Window size");
    search->add_option("--lp", search_lp, "Co-window size (l = n - lp)");
    add_budget_flags(search, opts);

    // la
    int la_n = 0;
    std::string poset_spec;
    CLI::App* la = app.add_subcommand("la", "Maximize a poset-free family");
    la->add_option("--n", la_n, "Ground set size")->required();
    la->add_option("--poset", poset_spec, "chain:<k>, tree:h=<h>,c=<c>, or a poset file")
        ->required();
    add_budget_flags(la, opts);

    // construct
    std::string construct_spec, construct_out;
    CLI::App* construct = app.add_subcommand("construct", "Write a named family construction");
    construct->add_option("spec", construct_spec,
                          "level:n=..,i=.. | band:n=..,lo=..,hi=.. | low:n=..,l=.. | "
                          "midband:n=..,k=..,lp=..")
        ->required();
    construct->add_option("--output", construct_out, "Output path (stdout when omitted)");

    // conjectures
    int nj_max = 6, kj_max = 3;
    CLI::App* conjectures = app.add_subcommand("conjectures", "Survey table over small parameters");
    conjectures->add_option("--n-max", nj_max, "Largest ground set size");
    conjectures->add_option("--k-max", kj_max, "Largest Sperner depth / co-window size");
    add_budget_flags(conjectures, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (check->parsed()) return cmd_check(family_path, check_l, check_lp, check_k, opts);
        if (search->parsed()) return cmd_search(search_n, search_l, search_lp, search_k, opts);
        if (la->parsed()) return cmd_la(la_n, poset_spec, opts);
        if (construct->parsed()) return cmd_construct(construct_spec, construct_out);
        if (conjectures->parsed()) return cmd_conjectures(nj_max, kj_max, opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
