#include "andor/andor.h"

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include "andor/compare.hpp"
#include "andor/error.hpp"
#include "andor/generators.hpp"
#include "andor/graph_io.hpp"
#include "andor/search.hpp"

struct andor_graph {
    andor::ExplicitGraph g;
};

struct andor_outcome {
    andor::SearchOutcome o;
};

struct andor_compare_result {
    std::vector<andor::CompareRow> rows;
};

namespace {

thread_local std::string last_error;

static_assert(static_cast<int>(andor::ErrorCode::InvalidArgument) + 1 == ANDOR_E_INVALID_ARGUMENT,
              "andor_status must mirror ErrorCode");

andor_status fail(andor_status s, std::string message)
{
    last_error = std::move(message);
    return s;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
andor_status guarded(F&& body)
{
    try {
        body();
        last_error.clear();
        return ANDOR_OK;
    } catch (const andor::Error& e) {
        return fail(static_cast<andor_status>(static_cast<int>(e.code()) + 1), e.what());
    } catch (const std::bad_alloc&) {
        return fail(ANDOR_E_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(ANDOR_E_INTERNAL, e.what());
    }
}

char* dup_string(const std::string& s)
{
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

andor_status null_arg(const char* what) { return fail(ANDOR_E_NULL_ARGUMENT, std::string(what) + " is null"); }

andor::RunConfig to_config(const andor_run_config& c)
{
    using namespace andor;
    RunConfig r;
    switch (c.algorithm) {
    case ANDOR_ALG_AO_STAR: r.algorithm = Algorithm::AoStar; break;
    case ANDOR_ALG_PNS: r.algorithm = Algorithm::Pns; break;
    case ANDOR_ALG_PNS_STAR: r.algorithm = Algorithm::PnsStar; break;
    case ANDOR_ALG_BFMM: r.algorithm = Algorithm::BestFirstMinimax; break;
    default: throw Error(ErrorCode::InvalidArgument, "unknown algorithm");
    }
    switch (c.psi) {
    case ANDOR_PSI_SUM: r.psi = CostScheme::Sum; break;
    case ANDOR_PSI_MAX: r.psi = CostScheme::Max; break;
    default: throw Error(ErrorCode::InvalidArgument, "unknown psi");
    }
    switch (c.tie) {
    case ANDOR_TIE_FIRST_CHILD: r.tie = TieBreak::first_child(); break;
    case ANDOR_TIE_LAST_CHILD: r.tie = TieBreak::last_child(); break;
    case ANDOR_TIE_RANDOM: r.tie = TieBreak::random(c.tie_seed); break;
    default: throw Error(ErrorCode::InvalidArgument, "unknown tie-break");
    }
    switch (c.pick) {
    case ANDOR_PICK_ANY_FIRST: r.pick.policy = LeafPick::Policy::AnyFirst; break;
    case ANDOR_PICK_ANY_RANDOM: r.pick.policy = LeafPick::Policy::AnyRandom; break;
    case ANDOR_PICK_DEEPEST: r.pick.policy = LeafPick::Policy::Deepest; break;
    case ANDOR_PICK_HIGHEST_H: r.pick.policy = LeafPick::Policy::HighestH; break;
    default: throw Error(ErrorCode::InvalidArgument, "unknown leaf pick");
    }
    r.pick.seed = c.pick_seed;
    r.budget.max_expansions = c.max_expansions < 0 ? std::nullopt : std::optional<std::uint64_t>(c.max_expansions);
    r.budget.max_nodes = c.max_nodes < 0 ? std::nullopt : std::optional<std::uint64_t>(c.max_nodes);
    r.value_scale = c.value_scale;
    r.options.trace = c.trace != 0;
    r.options.audit = c.audit != 0;
    r.options.strict_marking = c.strict_marking != 0;
    return r;
}

andor_status make_graph(andor_graph** out, andor::ExplicitGraph g)
{
    *out = new andor_graph{std::move(g)};
    return ANDOR_OK;
}

} // namespace

extern "C" {

const char* andor_last_error(void) { return last_error.c_str(); }

const char* andor_status_name(andor_status status)
{
    switch (status) {
    case ANDOR_OK: return "Ok";
    case ANDOR_E_NULL_ARGUMENT: return "NullArgument";
    case ANDOR_E_NO_SOLUTION: return "NoSolution";
    case ANDOR_E_INTERNAL: return "Internal";
    default:
        if (status > ANDOR_OK && status <= ANDOR_E_INVALID_ARGUMENT) {
            return andor::to_string(static_cast<andor::ErrorCode>(status - 1)).data();
        }
        return "Unknown";
    }
}

void andor_string_free(char* s) { std::free(s); }

andor_status andor_graph_load(const char* path, andor_graph** out)
{
    if (!path) return null_arg("path");
    if (!out) return null_arg("out");
    return guarded([&] { make_graph(out, andor::load_graph_file(path)); });
}

andor_status andor_graph_parse(const char* json, andor_graph** out)
{
    if (!json) return null_arg("json");
    if (!out) return null_arg("out");
    return guarded([&] { make_graph(out, andor::parse_graph_json(json)); });
}

andor_status andor_graph_fixture(const char* name, andor_graph** out)
{
    if (!name) return null_arg("name");
    if (!out) return null_arg("out");
    return guarded([&] { make_graph(out, andor::fixture(std::string_view(name))); });
}

void andor_dag_params_init(andor_dag_params* p)
{
    if (!p) return;
    andor::DagParams d;
    *p = {d.n_nodes, d.layers, d.or_fraction, d.max_children, d.cost_lo, d.cost_hi, d.terminal_fraction,
          d.solvable_fraction, ANDOR_HEURISTIC_UNIT, d.noise, d.seed};
}

void andor_tree_params_init(andor_tree_params* p)
{
    if (!p) return;
    andor::TreeParams t;
    *p = {t.depth, t.branching, t.terminal_prob, t.win_prob, t.leaf_value_max, t.seed};
}

andor_status andor_graph_gen_dag(const andor_dag_params* p, andor_graph** out)
{
    if (!p) return null_arg("params");
    if (!out) return null_arg("out");
    return guarded([&] {
        andor::DagParams d;
        d.n_nodes = p->n_nodes;
        d.layers = p->layers;
        d.or_fraction = p->or_fraction;
        d.max_children = p->max_children;
        d.cost_lo = p->cost_lo;
        d.cost_hi = p->cost_hi;
        d.terminal_fraction = p->terminal_fraction;
        d.solvable_fraction = p->solvable_fraction;
        switch (p->heuristic_mode) {
        case ANDOR_HEURISTIC_UNIT: d.heuristic_mode = andor::HeuristicMode::Unit; break;
        case ANDOR_HEURISTIC_ORACLE_ADMISSIBLE: d.heuristic_mode = andor::HeuristicMode::OracleAdmissible; break;
        case ANDOR_HEURISTIC_EXACT: d.heuristic_mode = andor::HeuristicMode::Exact; break;
        default: throw andor::Error(andor::ErrorCode::InvalidParams, "unknown heuristic mode");
        }
        d.noise = p->noise;
        d.seed = p->seed;
        make_graph(out, andor::random_andor_dag(d));
    });
}

andor_status andor_graph_gen_tree(const andor_tree_params* p, andor_graph** out)
{
    if (!p) return null_arg("params");
    if (!out) return null_arg("out");
    return guarded([&] {
        andor::TreeParams t;
        t.depth = p->depth;
        t.branching = p->branching;
        t.terminal_prob = p->terminal_prob;
        t.win_prob = p->win_prob;
        t.leaf_value_max = p->leaf_value_max;
        t.seed = p->seed;
        make_graph(out, andor::alternating_tree(t));
    });
}

andor_status andor_graph_to_json(const andor_graph* g, char** out)
{
    if (!g) return null_arg("graph");
    if (!out) return null_arg("out");
    return guarded([&] { *out = dup_string(andor::graph_to_json(g->g)); });
}

andor_status andor_graph_save(const andor_graph* g, const char* path)
{
    if (!g) return null_arg("graph");
    if (!path) return null_arg("path");
    return guarded([&] { andor::save_graph_file(g->g, path); });
}

int andor_graph_equal(const andor_graph* a, const andor_graph* b) { return a && b && a->g == b->g; }

size_t andor_graph_node_count(const andor_graph* g) { return g ? g->g.size() : 0; }

size_t andor_graph_edge_count(const andor_graph* g) { return g ? g->g.edge_count() : 0; }

void andor_graph_free(andor_graph* g) { delete g; }

void andor_run_config_init(andor_run_config* c)
{
    if (!c) return;
    *c = andor_run_config{};
    c->algorithm = ANDOR_ALG_PNS_STAR;
    c->psi = ANDOR_PSI_SUM;
    c->tie = ANDOR_TIE_FIRST_CHILD;
    c->pick = ANDOR_PICK_ANY_FIRST;
    c->max_expansions = 1000000;
    c->max_nodes = -1;
    c->value_scale = 100.0;
    c->trace = 1;
}

andor_status andor_parse_algorithm(const char* name, andor_algorithm* out)
{
    if (!name) return null_arg("name");
    if (!out) return null_arg("out");
    auto a = andor::parse_algorithm(name);
    if (!a) return fail(ANDOR_E_INVALID_ARGUMENT, std::string("unknown algorithm '") + name + "'");
    switch (*a) {
    case andor::Algorithm::AoStar: *out = ANDOR_ALG_AO_STAR; break;
    case andor::Algorithm::Pns: *out = ANDOR_ALG_PNS; break;
    case andor::Algorithm::PnsStar: *out = ANDOR_ALG_PNS_STAR; break;
    case andor::Algorithm::BestFirstMinimax: *out = ANDOR_ALG_BFMM; break;
    }
    return ANDOR_OK;
}

andor_status andor_solve(const andor_graph* g, const andor_run_config* c, andor_outcome** out)
{
    if (!g) return null_arg("graph");
    if (!c) return null_arg("config");
    if (!out) return null_arg("out");
    return guarded([&] {
        andor::ExplicitWorld world(g->g);
        *out = new andor_outcome{andor::solve(world, to_config(*c))};
    });
}

andor_status andor_solve_game(const char* game, const andor_run_config* c, andor_outcome** out)
{
    if (!game) return null_arg("game");
    if (!c) return null_arg("config");
    if (!out) return null_arg("out");
    return guarded([&] {
        if (std::string_view(game) != "tictactoe") {
            throw andor::Error(andor::ErrorCode::InvalidArgument, std::string("unknown game '") + game + "'");
        }
        andor::TicTacToe world;
        *out = new andor_outcome{andor::solve(world, to_config(*c))};
    });
}

andor_search_status andor_outcome_status(const andor_outcome* o)
{
    if (!o) return ANDOR_RESOURCE_EXHAUSTED;
    switch (o->o.status) {
    case andor::SearchStatus::ProvedSolvable: return ANDOR_PROVED_SOLVABLE;
    case andor::SearchStatus::ProvedUnsolvable: return ANDOR_PROVED_UNSOLVABLE;
    default: return ANDOR_RESOURCE_EXHAUSTED;
    }
}

const char* andor_search_status_name(andor_search_status s)
{
    switch (s) {
    case ANDOR_PROVED_SOLVABLE: return andor::to_string(andor::SearchStatus::ProvedSolvable).data();
    case ANDOR_PROVED_UNSOLVABLE: return andor::to_string(andor::SearchStatus::ProvedUnsolvable).data();
    default: return andor::to_string(andor::SearchStatus::ResourceExhausted).data();
    }
}

double andor_outcome_root_p(const andor_outcome* o) { return o ? o->o.root_value.p : 0.0; }

int andor_outcome_root_d(const andor_outcome* o, double* d)
{
    if (!o || !o->o.root_value.d) return 0;
    if (d) *d = *o->o.root_value.d;
    return 1;
}

void andor_outcome_stats(const andor_outcome* o, andor_stats* out)
{
    if (!o || !out) return;
    const auto& s = o->o.stats;
    *out = {s.expansions, s.nodes_generated, s.iterations, s.ancestor_updates, s.audit_mismatches, s.audited_steps};
}

size_t andor_outcome_trace_length(const andor_outcome* o) { return o ? o->o.trace.size() : 0; }

andor_status andor_outcome_trace_entry(const andor_outcome* o, size_t i, andor_trace_entry* out)
{
    if (!o) return null_arg("outcome");
    if (!out) return null_arg("out");
    if (i >= o->o.trace.size()) return fail(ANDOR_E_INVALID_ARGUMENT, "trace index out of range");
    const auto& t = o->o.trace[i];
    *out = {t.iteration, t.leaf, t.root.p, t.root.d.value_or(0.0), t.root.d.has_value()};
    return ANDOR_OK;
}

andor_status andor_outcome_solution_json(const andor_outcome* o, char** out)
{
    if (!o) return null_arg("outcome");
    if (!out) return null_arg("out");
    if (!o->o.solution) return fail(ANDOR_E_NO_SOLUTION, "search ended without a certificate");
    return guarded([&] { *out = dup_string(andor::solution_to_json(o->o.final_graph, *o->o.solution)); });
}

andor_status andor_outcome_final_graph(const andor_outcome* o, andor_graph** out)
{
    if (!o) return null_arg("outcome");
    if (!out) return null_arg("out");
    return guarded([&] { make_graph(out, o->o.final_graph); });
}

void andor_outcome_free(andor_outcome* o) { delete o; }

andor_status andor_compare(const andor_graph* const* graphs, const char* const* names, size_t n_graphs,
                           const andor_algorithm_spec* specs, size_t n_specs, unsigned threads,
                           andor_compare_result** out)
{
    if (n_graphs && !graphs) return null_arg("graphs");
    if (n_specs && !specs) return null_arg("specs");
    if (!out) return null_arg("out");
    return guarded([&] {
        std::vector<andor::NamedWorld> worlds;
        for (size_t i = 0; i < n_graphs; ++i) {
            if (!graphs[i]) throw andor::Error(andor::ErrorCode::InvalidArgument, "null graph in list");
            std::string name = names && names[i] ? names[i] : "g" + std::to_string(i);
            worlds.push_back({std::move(name), std::make_shared<andor::ExplicitWorld>(graphs[i]->g)});
        }
        std::vector<andor::AlgorithmSpec> algs;
        for (size_t i = 0; i < n_specs; ++i) {
            auto cfg = to_config(specs[i].config);
            std::string label = specs[i].label ? specs[i].label : std::string(andor::to_string(cfg.algorithm));
            algs.push_back({std::move(label), cfg});
        }
        *out = new andor_compare_result{andor::compare(worlds, algs, threads)};
    });
}

size_t andor_compare_row_count(const andor_compare_result* r) { return r ? r->rows.size() : 0; }

andor_status andor_compare_write_csv(const andor_compare_result* r, const char* path)
{
    if (!r) return null_arg("result");
    if (!path) return null_arg("path");
    auto status = guarded([&] {
        std::ofstream f(path, std::ios::binary | std::ios::trunc);
        if (!f) throw andor::Error(andor::ErrorCode::IoError, std::string("cannot write '") + path + "'");
        andor::write_compare_csv(f, r->rows);
        f.close();
        if (!f) throw andor::Error(andor::ErrorCode::IoError, std::string("write to '") + path + "' failed");
    });
    if (status != ANDOR_OK) {
        std::error_code ec;
        std::filesystem::remove(path, ec);
    }
    return status;
}

andor_status andor_compare_summary(const andor_compare_result* r, char** out)
{
    if (!r) return null_arg("result");
    if (!out) return null_arg("out");
    return guarded([&] {
        std::ostringstream s;
        andor::write_summary(s, andor::summarize(r->rows));
        *out = dup_string(s.str());
    });
}

void andor_compare_free(andor_compare_result* r) { delete r; }

} // extern "C"
