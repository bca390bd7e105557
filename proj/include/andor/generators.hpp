#ifndef ANDOR_GENERATORS_HPP
#define ANDOR_GENERATORS_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>

#include "andor/graph.hpp"

namespace andor {

enum class HeuristicMode { Unit, OracleAdmissible, Exact };

struct DagParams {
    std::size_t n_nodes = 30;
    std::size_t layers = 5;
    double or_fraction = 0.5;
    std::size_t max_children = 3;
    Cost cost_lo = 0.0;
    Cost cost_hi = 4.0;
    double terminal_fraction = 1.0; // share of leaves that are terminal
    double solvable_fraction = 0.5; // share of terminals that are solvable
    HeuristicMode heuristic_mode = HeuristicMode::Unit;
    double noise = 0.5; // OracleAdmissible: h drawn from [noise * h*, h*]
    std::uint64_t seed = 0;
};

/// Layered random AND/OR DAG. Every non-root node has a parent in an earlier
/// layer, so the graph is rooted and acyclic. Edge costs lie on a 0.5 grid in
/// [cost_lo, cost_hi] and heuristics on a 0.25 grid, so sums stay exact.
/// Oracle-based heuristic modes need terminal_fraction = 1. Throws
/// InvalidParams.
ExplicitGraph random_andor_dag(const DagParams& p);

struct TreeParams {
    std::size_t depth = 3;
    std::size_t branching = 2;
    double terminal_prob = 1.0; // chance that a bottom leaf is terminal
    double win_prob = 0.5;      // chance that a terminal is solvable
    /// When positive, nonterminal leaves get h drawn from {0, ..., leaf_value_max}
    /// and hbar = leaf_value_max - h; otherwise h = hbar = 1.
    std::uint32_t leaf_value_max = 0;
    std::uint64_t seed = 0;
};

/// Uniform tree with OR and AND layers alternating from an OR root; zero edge
/// costs. Throws InvalidParams.
ExplicitGraph alternating_tree(const TreeParams& p);

enum class Fixture { Fig1, Fig1Terminalized, Fig3, Fig4, Fig6 };

std::optional<Fixture> parse_fixture(std::string_view name);
std::string_view fixture_name(Fixture f);

/// Hand-built reference instances; see fixtures/*.json for the same graphs
/// on disk. Node ids follow the letter order used in the fixture notes.
ExplicitGraph fixture(Fixture f);
/// Throws UnknownFixture.
ExplicitGraph fixture(std::string_view name);

enum class TicTacToeObjective { FirstPlayerWins };

/// Tic-tac-toe as an implicit AND/OR graph: OR nodes have X to move, AND
/// nodes O. A position is keyed by its board (base-3 number, no symmetry
/// reduction), so transpositions merge.
class TicTacToe final : public ImplicitGraph {
public:
    explicit TicTacToe(TicTacToeObjective objective = TicTacToeObjective::FirstPlayerWins)
        : objective_(objective) {}

    WorldNode root() const override;
    std::vector<Successor> expand(NodeKey key) const override;

    /// Decodes a key into cells (0 empty, 1 X, 2 O), row-major.
    static std::array<int, 9> board(NodeKey key);
    static NodeKey encode(const std::array<int, 9>& cells);
    WorldNode describe(NodeKey key) const;

private:
    TicTacToeObjective objective_;
};

} // namespace andor

#endif // ANDOR_GENERATORS_HPP
