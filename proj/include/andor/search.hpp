#ifndef ANDOR_SEARCH_HPP
#define ANDOR_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "andor/cost_calculus.hpp"
#include "andor/graph.hpp"
#include "andor/solution.hpp"

namespace andor {

/// Rule for choosing among children with equal selection values.
/// RandomSeeded is stateless: the pick is a hash of (seed, parent key), so two
/// engines looking at the same node always agree.
struct TieBreak {
    enum class Policy { FirstChild, LastChild, RandomSeeded };
    Policy policy = Policy::FirstChild;
    std::uint64_t seed = 0;

    static TieBreak first_child() { return {Policy::FirstChild, 0}; }
    static TieBreak last_child() { return {Policy::LastChild, 0}; }
    static TieBreak random(std::uint64_t seed) { return {Policy::RandomSeeded, seed}; }
};

/// Index into `tied` (non-empty) chosen for the node with `parent_key`.
std::size_t break_tie(const TieBreak& tie, NodeKey parent_key, std::size_t tied);

/// Which nonterminal leaf of the AO* solution base gets expanded.
struct LeafPick {
    enum class Policy { AnyFirst, AnyRandom, Deepest, HighestH };
    Policy policy = Policy::AnyFirst;
    std::uint64_t seed = 0;
};

struct Budget {
    std::optional<std::uint64_t> max_expansions = 1'000'000;
    std::optional<std::uint64_t> max_nodes;

    static Budget unlimited() { return {std::nullopt, std::nullopt}; }
    static Budget expansions(std::uint64_t n) { return {n, std::nullopt}; }
};

struct SearchStats {
    std::uint64_t expansions = 0;
    std::uint64_t nodes_generated = 0;
    std::uint64_t iterations = 0;
    std::uint64_t ancestor_updates = 0;
    /// Steps where the incrementally maintained table differed from a full
    /// recomputation. Only counted with SearchOptions::audit.
    std::uint64_t audit_mismatches = 0;
    std::uint64_t audited_steps = 0;
};

enum class SearchStatus { ProvedSolvable, ProvedUnsolvable, ResourceExhausted };

std::string_view to_string(SearchStatus s);

/// Root estimate: f for single-heuristic search (d absent), (p, d) otherwise.
struct RootValue {
    Cost p = 0.0;
    std::optional<Cost> d;
};

struct TraceEntry {
    std::uint64_t iteration = 0;
    NodeKey leaf = 0;
    RootValue root;
};

/// Called once per iteration with the explicit graph and dual table as they
/// stand when `leaf` has been selected (before it is expanded).
using DescentObserver = std::function<void(const ExplicitGraph&, const PdTable&, NodeId leaf)>;

struct SearchOptions {
    bool trace = true;
    /// Recompute the full table after every update and count mismatches.
    bool audit = false;
    /// AO* only: propagate revisions through marked edges only.
    bool strict_marking = false;
    DescentObserver observer;
};

struct SearchOutcome {
    SearchStatus status = SearchStatus::ResourceExhausted;
    RootValue root_value;
    std::optional<SolutionGraph> solution;
    SearchStats stats;
    ExplicitGraph final_graph;
    std::vector<TraceEntry> trace;
};

/// Follows minimum-f children at OR nodes (ties per `tie`) and all children at
/// AND nodes, from the root down to the leaves. Throws InconsistentTable.
SolutionGraph select_solution_base(const ExplicitGraph& g, const FTable& table, const TieBreak& tie);

/// f1 of the general best-first loop.
using SolutionBasePolicy = std::function<SolutionGraph(const ExplicitGraph&, const FTable&)>;

/// General best-first search over the single-heuristic table: select a base
/// with f1, stop when it is a solution graph (or the root is disproved), else
/// expand the leaf chosen by f2 and update ancestors.
SearchOutcome gbfs_run(const ImplicitGraph& world, const SolutionBasePolicy& f1, const LeafPick& f2,
                       CostScheme psi, const Budget& budget, const SearchOptions& options = {});

SearchOutcome ao_star(const ImplicitGraph& world, CostScheme psi, const TieBreak& tie,
                      const LeafPick& pick, const Budget& budget, const SearchOptions& options = {});

/// Dual-heuristic search: one top-down descent per iteration, min (c + p) at
/// OR nodes and min (c + d) at AND nodes, over undecided children.
SearchOutcome pns_star(const ImplicitGraph& world, CostScheme psi, const TieBreak& tie,
                       const Budget& budget, const SearchOptions& options = {});

/// Proof number search on proof/disproof numbers (unit leaves, no edge
/// costs). Separate bookkeeping from pns_star.
SearchOutcome pns(const ImplicitGraph& world, const TieBreak& tie, const Budget& budget,
                  const SearchOptions& options = {});

/// pns_star with psi = Max, zero edge costs and hbar = scale - h at leaves.
/// Throws InvalidArgument if a leaf estimate falls outside [0, scale].
SearchOutcome best_first_minimax(const ImplicitGraph& world, Cost scale, const Budget& budget,
                                 const SearchOptions& options = {});

/// pns_star variant used to line it up with AO*: hbar forced to 0.
SearchOutcome pns_star_blind_dual(const ImplicitGraph& world, CostScheme psi, const TieBreak& tie,
                                  const Budget& budget, const SearchOptions& options = {});

enum class Algorithm { AoStar, Pns, PnsStar, BestFirstMinimax };

std::string_view to_string(Algorithm a);
std::optional<Algorithm> parse_algorithm(std::string_view name);

struct RunConfig {
    Algorithm algorithm = Algorithm::PnsStar;
    CostScheme psi = CostScheme::Sum;
    TieBreak tie;
    LeafPick pick;
    Budget budget;
    Cost value_scale = 100.0;
    SearchOptions options;
};

/// Dispatches to the engine named in `config`. Throws InvalidArgument for
/// best-first minimax without psi = Max.
SearchOutcome solve(const ImplicitGraph& world, const RunConfig& config);

} // namespace andor

#endif // ANDOR_SEARCH_HPP
