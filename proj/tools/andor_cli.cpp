// Command-line front end. Talks to the library only through the C interface.

#include <cstdio>
#include <cstdlib>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "andor/andor.h"

namespace {

constexpr int kExitSolvable = 0;
constexpr int kExitUnsolvable = 10;
constexpr int kExitExhausted = 20;
constexpr int kExitInputError = 2;

struct GraphDeleter {
    void operator()(andor_graph* g) const { andor_graph_free(g); }
};
struct OutcomeDeleter {
    void operator()(andor_outcome* o) const { andor_outcome_free(o); }
};
struct CompareDeleter {
    void operator()(andor_compare_result* r) const { andor_compare_free(r); }
};
using GraphPtr = std::unique_ptr<andor_graph, GraphDeleter>;
using OutcomePtr = std::unique_ptr<andor_outcome, OutcomeDeleter>;
using ComparePtr = std::unique_ptr<andor_compare_result, CompareDeleter>;

// Thrown to unwind to main with the diagnostic already chosen.
struct CliFailure {
    int exit_code;
};

void check(andor_status s)
{
    if (s == ANDOR_OK) return;
    std::fprintf(stderr, "error: %s: %s\n", andor_status_name(s), andor_last_error());
    throw CliFailure{s == ANDOR_E_INTERNAL ? 1 : kExitInputError};
}

std::uint64_t effective_seed(std::uint64_t flag)
{
    if (const char* env = std::getenv("ANDOR_SEED"); env && *env) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (*end != '\0') {
            std::fprintf(stderr, "error: ANDOR_SEED must be an unsigned integer, got '%s'\n", env);
            throw CliFailure{kExitInputError};
        }
        return v;
    }
    return flag;
}

const std::map<std::string, andor_psi> kPsi{{"sum", ANDOR_PSI_SUM}, {"max", ANDOR_PSI_MAX}};
const std::map<std::string, andor_tie> kTie{
    {"first", ANDOR_TIE_FIRST_CHILD}, {"last", ANDOR_TIE_LAST_CHILD}, {"random", ANDOR_TIE_RANDOM}};
const std::map<std::string, andor_pick> kPick{{"any-first", ANDOR_PICK_ANY_FIRST},
                                              {"any-random", ANDOR_PICK_ANY_RANDOM},
                                              {"deepest", ANDOR_PICK_DEEPEST},
                                              {"highest-h", ANDOR_PICK_HIGHEST_H}};
const std::map<std::string, andor_heuristic_mode> kHeuristic{{"unit", ANDOR_HEURISTIC_UNIT},
                                                             {"admissible", ANDOR_HEURISTIC_ORACLE_ADMISSIBLE},
                                                             {"exact", ANDOR_HEURISTIC_EXACT}};

// Search flags shared by solve and compare.
struct SearchFlags {
    std::string algorithm = "pns-star";
    andor_psi psi = ANDOR_PSI_SUM;
    andor_tie tie = ANDOR_TIE_FIRST_CHILD;
    andor_pick pick = ANDOR_PICK_ANY_FIRST;
    std::int64_t budget = 1000000;
    std::int64_t max_nodes = -1;
    double value_scale = 100.0;
    bool audit = false;
    bool strict_marking = false;
    std::uint64_t seed = 0;

    void attach(CLI::App* app)
    {
        app->add_option("--psi", psi, "AND-node combination: sum or max")
            ->transform(CLI::CheckedTransformer(kPsi, CLI::ignore_case));
        app->add_option("--tie", tie, "tie-break: first, last or random")
            ->transform(CLI::CheckedTransformer(kTie, CLI::ignore_case));
        app->add_option("--pick", pick, "AO* leaf choice: any-first, any-random, deepest, highest-h")
            ->transform(CLI::CheckedTransformer(kPick, CLI::ignore_case));
        app->add_option("--budget", budget, "expansion limit, negative for none");
        app->add_option("--max-nodes", max_nodes, "explicit-graph size limit, negative for none");
        app->add_option("--value-scale", value_scale, "bfmm constant C with h + hbar = C");
        app->add_flag("--audit", audit, "check incremental tables against full recomputation");
        app->add_flag("--strict-marking", strict_marking, "AO*: propagate through marked edges only");
        app->add_option("--seed", seed, "seed for random tie-break and leaf pick (ANDOR_SEED overrides)");
    }

    andor_run_config config(const std::string& alg_name, bool trace) const
    {
        andor_run_config c;
        andor_run_config_init(&c);
        check(andor_parse_algorithm(alg_name.c_str(), &c.algorithm));
        c.psi = psi;
        c.tie = tie;
        c.pick = pick;
        c.tie_seed = c.pick_seed = effective_seed(seed);
        c.max_expansions = budget;
        c.max_nodes = max_nodes;
        c.value_scale = value_scale;
        c.trace = trace;
        c.audit = audit;
        c.strict_marking = strict_marking;
        return c;
    }
};

// "fixture:NAME" or a JSON path.
GraphPtr load_input(const std::string& input)
{
    andor_graph* g = nullptr;
    if (input.rfind("fixture:", 0) == 0) check(andor_graph_fixture(input.c_str() + 8, &g));
    else check(andor_graph_load(input.c_str(), &g));
    return GraphPtr(g);
}

void print_value(const char* label, double v) { std::printf("%s%g", label, v); }

int run_solve(const SearchFlags& flags, const std::string& input, bool trace, const std::string& emit)
{
    const andor_run_config cfg = flags.config(flags.algorithm, trace);
    andor_outcome* raw = nullptr;
    GraphPtr graph;
    if (input.rfind("game:", 0) == 0) {
        check(andor_solve_game(input.c_str() + 5, &cfg, &raw));
    } else {
        graph = load_input(input);
        check(andor_solve(graph.get(), &cfg, &raw));
    }
    OutcomePtr out(raw);

    const andor_search_status status = andor_outcome_status(out.get());
    andor_stats stats;
    andor_outcome_stats(out.get(), &stats);
    if (trace) {
        const size_t n = andor_outcome_trace_length(out.get());
        for (size_t i = 0; i < n; ++i) {
            andor_trace_entry t;
            check(andor_outcome_trace_entry(out.get(), i, &t));
            std::printf("trace %llu leaf=%llu", static_cast<unsigned long long>(t.iteration),
                        static_cast<unsigned long long>(t.leaf));
            print_value(" p=", t.root_p);
            if (t.has_d) print_value(" d=", t.root_d);
            std::printf("\n");
        }
    }
    std::printf("status: %s\n", andor_search_status_name(status));
    print_value("root: p=", andor_outcome_root_p(out.get()));
    if (double d; andor_outcome_root_d(out.get(), &d)) print_value(" d=", d);
    std::printf("\nexpansions: %llu\nnodes_generated: %llu\niterations: %llu\n",
                static_cast<unsigned long long>(stats.expansions),
                static_cast<unsigned long long>(stats.nodes_generated),
                static_cast<unsigned long long>(stats.iterations));
    if (flags.audit) {
        std::printf("audit_mismatches: %llu\n", static_cast<unsigned long long>(stats.audit_mismatches));
    }

    if (!emit.empty()) {
        if (status == ANDOR_RESOURCE_EXHAUSTED) {
            std::fprintf(stderr, "warning: no certificate to write to '%s'\n", emit.c_str());
        } else {
            char* json = nullptr;
            check(andor_outcome_solution_json(out.get(), &json));
            std::unique_ptr<char, void (*)(char*)> hold(json, andor_string_free);
            std::FILE* f = std::fopen(emit.c_str(), "wb");
            if (!f || std::fputs(json, f) < 0 || std::fclose(f) != 0) {
                std::fprintf(stderr, "error: cannot write '%s'\n", emit.c_str());
                return kExitInputError;
            }
        }
    }
    switch (status) {
    case ANDOR_PROVED_SOLVABLE: return kExitSolvable;
    case ANDOR_PROVED_UNSOLVABLE: return kExitUnsolvable;
    default: return kExitExhausted;
    }
}

void report_written(const andor_graph* g, const std::string& path)
{
    check(andor_graph_save(g, path.c_str()));
    std::printf("nodes: %zu\nedges: %zu\nwritten: %s\n", andor_graph_node_count(g), andor_graph_edge_count(g),
                path.c_str());
}

void attach_dag_options(CLI::App* app, andor_dag_params& p)
{
    app->add_option("--nodes", p.n_nodes, "node count");
    app->add_option("--layers", p.layers, "layer count");
    app->add_option("--or-fraction", p.or_fraction, "share of OR nodes")->check(CLI::Range(0.0, 1.0));
    app->add_option("--max-children", p.max_children, "children per internal node (upper bound)");
    app->add_option("--cost-lo", p.cost_lo, "smallest edge cost");
    app->add_option("--cost-hi", p.cost_hi, "largest edge cost");
    app->add_option("--terminal-fraction", p.terminal_fraction, "share of leaves that are terminal")
        ->check(CLI::Range(0.0, 1.0));
    app->add_option("--solvable-fraction", p.solvable_fraction, "share of terminals that are solvable")
        ->check(CLI::Range(0.0, 1.0));
    app->add_option("--heuristic", p.heuristic_mode, "unit, admissible or exact")
        ->transform(CLI::CheckedTransformer(kHeuristic, CLI::ignore_case));
    app->add_option("--noise", p.noise, "admissible mode: h drawn from [noise * h*, h*]")
        ->check(CLI::Range(0.0, 1.0));
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Best-first search on acyclic AND/OR graphs"};
    app.require_subcommand(1);

    SearchFlags solve_flags;
    std::string solve_input;
    std::string emit_solution;
    bool trace = false;
    auto* solve = app.add_subcommand("solve", "search a graph file, fixture or built-in game");
    solve->add_option("--input", solve_input, "PATH, fixture:NAME or game:tictactoe")->required();
    solve->add_option("--algorithm", solve_flags.algorithm, "ao-star, pns, pns-star or bfmm");
    solve->add_flag("--trace", trace, "print one line per iteration");
    solve->add_option("--emit-solution", emit_solution, "write the certificate as JSON");
    solve_flags.attach(solve);

    auto* gen = app.add_subcommand("gen", "generate an instance");
    gen->require_subcommand(1);
    andor_dag_params dag;
    andor_dag_params_init(&dag);
    std::string dag_out;
    auto* gen_dag = gen->add_subcommand("dag", "random layered AND/OR DAG");
    attach_dag_options(gen_dag, dag);
    gen_dag->add_option("--seed", dag.seed, "generator seed (ANDOR_SEED overrides)");
    gen_dag->add_option("--out", dag_out, "output JSON path")->required();

    andor_tree_params tree;
    andor_tree_params_init(&tree);
    std::string tree_out;
    auto* gen_tree = gen->add_subcommand("tree", "alternating game tree");
    gen_tree->add_option("--depth", tree.depth, "tree depth");
    gen_tree->add_option("--branching", tree.branching, "children per internal node");
    gen_tree->add_option("--terminal-prob", tree.terminal_prob, "chance a bottom leaf is terminal")
        ->check(CLI::Range(0.0, 1.0));
    gen_tree->add_option("--win-prob", tree.win_prob, "chance a terminal is solvable")->check(CLI::Range(0.0, 1.0));
    gen_tree->add_option("--leaf-value-max", tree.leaf_value_max, "range of leaf estimates, 0 for unit");
    gen_tree->add_option("--seed", tree.seed, "generator seed (ANDOR_SEED overrides)");
    gen_tree->add_option("--out", tree_out, "output JSON path")->required();

    SearchFlags cmp_flags;
    std::vector<std::string> cmp_inputs;
    std::vector<std::string> cmp_algorithms{"ao-star", "pns-star"};
    std::size_t cmp_dags = 0;
    andor_dag_params cmp_dag;
    andor_dag_params_init(&cmp_dag);
    unsigned threads = 1;
    std::string csv_path;
    auto* cmp = app.add_subcommand("compare", "run several algorithms over the same instances");
    cmp->add_option("--input", cmp_inputs, "PATH or fixture:NAME (repeatable)");
    cmp->add_option("--dags", cmp_dags, "generate this many random DAGs (seeds seed, seed+1, ...)");
    attach_dag_options(cmp, cmp_dag);
    cmp->add_option("--algorithms", cmp_algorithms, "comma-separated list")->delimiter(',');
    cmp->add_option("--threads", threads, "worker threads")->check(CLI::Range(1u, 256u));
    cmp->add_option("--csv", csv_path, "CSV output path")->required();
    cmp_flags.attach(cmp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (solve->parsed()) return run_solve(solve_flags, solve_input, trace, emit_solution);

        if (gen_dag->parsed()) {
            dag.seed = effective_seed(dag.seed);
            andor_graph* g = nullptr;
            check(andor_graph_gen_dag(&dag, &g));
            GraphPtr hold(g);
            report_written(g, dag_out);
            return 0;
        }
        if (gen_tree->parsed()) {
            tree.seed = effective_seed(tree.seed);
            andor_graph* g = nullptr;
            check(andor_graph_gen_tree(&tree, &g));
            GraphPtr hold(g);
            report_written(g, tree_out);
            return 0;
        }

        if (cmp->parsed()) {
            if (cmp_inputs.empty() && cmp_dags == 0) {
                std::fprintf(stderr, "error: compare needs --input or --dags\n");
                return kExitInputError;
            }
            std::vector<GraphPtr> graphs;
            std::vector<std::string> names;
            for (const auto& in : cmp_inputs) {
                graphs.push_back(load_input(in));
                names.push_back(in);
            }
            const std::uint64_t base = effective_seed(cmp_flags.seed);
            for (std::size_t i = 0; i < cmp_dags; ++i) {
                cmp_dag.seed = base + i;
                andor_graph* g = nullptr;
                check(andor_graph_gen_dag(&cmp_dag, &g));
                graphs.emplace_back(g);
                names.push_back("dag" + std::to_string(cmp_dag.seed));
            }
            std::vector<andor_algorithm_spec> specs;
            for (const auto& a : cmp_algorithms) specs.push_back({a.c_str(), cmp_flags.config(a, false)});
            std::vector<const andor_graph*> graph_ptrs;
            std::vector<const char*> name_ptrs;
            for (std::size_t i = 0; i < graphs.size(); ++i) {
                graph_ptrs.push_back(graphs[i].get());
                name_ptrs.push_back(names[i].c_str());
            }

            andor_compare_result* raw = nullptr;
            check(andor_compare(graph_ptrs.data(), name_ptrs.data(), graph_ptrs.size(), specs.data(), specs.size(),
                                threads, &raw));
            ComparePtr result(raw);
            check(andor_compare_write_csv(result.get(), csv_path.c_str()));
            char* summary = nullptr;
            check(andor_compare_summary(result.get(), &summary));
            std::printf("rows: %zu\ncsv: %s\n%s", andor_compare_row_count(result.get()), csv_path.c_str(), summary);
            andor_string_free(summary);
            return 0;
        }
    } catch (const CliFailure& f) {
        return f.exit_code;
    }
    return kExitInputError;
}
