#include "andor/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "andor/error.hpp"
#include "andor/oracle.hpp"
#include "andor/rng.hpp"

namespace andor {

namespace {

constexpr double kCostGrid = 0.5;
constexpr double kHeuristicGrid = 0.25;

void require(bool ok, const std::string& what)
{
    if (!ok) throw Error(ErrorCode::InvalidParams, what);
}

bool is_probability(double x) { return x >= 0.0 && x <= 1.0; }

// Uniform grid point in [lo, hi]; the range must contain one.
double grid_value(Rng& rng, double lo, double hi, double step)
{
    auto k_lo = static_cast<std::int64_t>(std::ceil(lo / step));
    auto k_hi = static_cast<std::int64_t>(std::floor(hi / step));
    if (k_hi < k_lo) k_hi = k_lo;
    return static_cast<double>(rng.between(k_lo, k_hi)) * step;
}

struct Draft {
    NodeKind kind = NodeKind::Or;
    Terminal terminal = Terminal::Nonterminal;
    Cost h = 1.0, hbar = 1.0;
};

ExplicitGraph assemble(const std::vector<Draft>& nodes, const std::vector<EdgeSpec>& edges)
{
    ExplicitGraph g;
    for (const auto& n : nodes) g.add_node(n.kind, n.terminal, n.h, n.hbar);
    for (const auto& e : edges) g.add_edge(e.from, e.to, e.cost);
    g.set_root(0);
    return g;
}

} // namespace

ExplicitGraph random_andor_dag(const DagParams& p)
{
    require(p.n_nodes >= 1, "n_nodes must be at least 1");
    require(p.layers >= 1 && p.layers <= p.n_nodes, "layers must lie in [1, n_nodes]");
    require(p.n_nodes > 1 || p.layers == 1, "a single node has a single layer");
    require(is_probability(p.or_fraction), "or_fraction must lie in [0, 1]");
    require(p.max_children >= 1, "max_children must be at least 1");
    require(p.cost_lo >= 0.0 && p.cost_lo <= p.cost_hi && std::isfinite(p.cost_hi),
            "edge cost range must satisfy 0 <= lo <= hi < inf");
    require(std::floor(p.cost_hi / kCostGrid) >= std::ceil(p.cost_lo / kCostGrid),
            "edge cost range contains no multiple of 0.5");
    require(is_probability(p.terminal_fraction), "terminal_fraction must lie in [0, 1]");
    require(is_probability(p.solvable_fraction), "solvable_fraction must lie in [0, 1]");
    require(is_probability(p.noise), "noise must lie in [0, 1]");
    require(p.heuristic_mode == HeuristicMode::Unit || p.terminal_fraction == 1.0,
            "oracle-based heuristics need terminal_fraction = 1");

    Rng rng(p.seed);
    const std::size_t n = p.n_nodes;

    // Layer per node: root alone in layer 0, each further layer non-empty.
    std::vector<std::size_t> layer(n, 0);
    for (std::size_t i = 1; i < n; ++i) {
        layer[i] = i < p.layers ? i : static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(p.layers) - 1));
    }
    std::sort(layer.begin(), layer.end());
    std::vector<std::vector<NodeId>> by_layer(p.layers);
    for (NodeId v = 0; v < n; ++v) by_layer[layer[v]].push_back(v);

    std::vector<Draft> nodes(n);
    for (auto& d : nodes) d.kind = rng.chance(p.or_fraction) ? NodeKind::Or : NodeKind::And;

    std::vector<EdgeSpec> edges;
    std::vector<std::vector<NodeId>> kids(n);
    auto link = [&](NodeId from, NodeId to) {
        kids[from].push_back(to);
        edges.push_back({from, to, grid_value(rng, p.cost_lo, p.cost_hi, kCostGrid)});
    };
    // Spanning parents from the previous layer, preferring nodes with room.
    for (NodeId v = 1; v < n; ++v) {
        const auto& prev = by_layer[layer[v] - 1];
        std::vector<NodeId> open;
        for (NodeId u : prev) {
            if (kids[u].size() < p.max_children) open.push_back(u);
        }
        const auto& pool = open.empty() ? prev : open;
        link(pool[rng.below(pool.size())], v);
    }
    // Extra edges to deeper layers, making the graph a DAG rather than a tree.
    for (NodeId u = 0; u < n; ++u) {
        if (layer[u] + 1 >= p.layers) continue;
        const NodeId first_deeper = by_layer[layer[u] + 1].front();
        const auto want = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(p.max_children)));
        for (std::size_t attempt = 0; kids[u].size() < want && attempt < 4 * p.max_children; ++attempt) {
            NodeId w = first_deeper + static_cast<NodeId>(rng.below(n - first_deeper));
            if (std::find(kids[u].begin(), kids[u].end(), w) == kids[u].end()) link(u, w);
        }
    }

    for (NodeId v = 0; v < n; ++v) {
        if (!kids[v].empty()) continue;
        if (rng.chance(p.terminal_fraction)) {
            nodes[v].terminal = rng.chance(p.solvable_fraction) ? Terminal::Solvable : Terminal::Unsolvable;
        }
    }
    if (p.heuristic_mode == HeuristicMode::Unit) return assemble(nodes, edges);

    const auto report = oracle::exact_costs(assemble(nodes, edges), CostScheme::Sum);
    // Stand-in for infinite optimal costs, above every finite one so that
    // Exact mode never prefers a hopeless branch.
    Cost finite_max = 0.0;
    for (NodeId v = 0; v < n; ++v) {
        for (Cost c : {report.hstar[v], report.hbar_star[v]}) {
            if (!std::isinf(c)) finite_max = std::max(finite_max, c);
        }
    }
    const double cap = std::ceil((finite_max + std::max(p.cost_hi, 1.0)) / kHeuristicGrid) * kHeuristicGrid;
    auto estimate = [&](Cost star) {
        const double target = std::isinf(star) ? cap : star;
        if (p.heuristic_mode == HeuristicMode::Exact) return target;
        return grid_value(rng, p.noise * target, target, kHeuristicGrid);
    };
    for (NodeId v = 0; v < n; ++v) {
        nodes[v].h = estimate(report.hstar[v]);
        nodes[v].hbar = estimate(report.hbar_star[v]);
    }
    return assemble(nodes, edges);
}

ExplicitGraph alternating_tree(const TreeParams& p)
{
    require(p.depth >= 1, "depth must be at least 1");
    require(p.branching >= 1, "branching must be at least 1");
    require(is_probability(p.terminal_prob) && is_probability(p.win_prob), "probabilities must lie in [0, 1]");
    require(std::pow(static_cast<double>(p.branching), static_cast<double>(p.depth)) <= 1e6,
            "tree would exceed 10^6 leaves");

    Rng rng(p.seed);
    std::vector<Draft> nodes{Draft{NodeKind::Or}};
    std::vector<EdgeSpec> edges;
    std::vector<NodeId> frontier{0};
    for (std::size_t level = 1; level <= p.depth; ++level) {
        const NodeKind kind = level % 2 == 0 ? NodeKind::Or : NodeKind::And;
        std::vector<NodeId> next;
        for (NodeId parent : frontier) {
            for (std::size_t b = 0; b < p.branching; ++b) {
                auto id = static_cast<NodeId>(nodes.size());
                nodes.push_back(Draft{kind});
                edges.push_back({parent, id, 0.0});
                next.push_back(id);
            }
        }
        frontier = std::move(next);
    }
    for (NodeId leaf : frontier) {
        auto& d = nodes[leaf];
        if (rng.chance(p.terminal_prob)) {
            d.terminal = rng.chance(p.win_prob) ? Terminal::Solvable : Terminal::Unsolvable;
        } else if (p.leaf_value_max > 0) {
            d.h = static_cast<Cost>(rng.between(0, p.leaf_value_max));
            d.hbar = static_cast<Cost>(p.leaf_value_max) - d.h;
        }
    }
    return assemble(nodes, edges);
}

std::optional<Fixture> parse_fixture(std::string_view name)
{
    for (Fixture f : {Fixture::Fig1, Fixture::Fig1Terminalized, Fixture::Fig3, Fixture::Fig4, Fixture::Fig6}) {
        if (fixture_name(f) == name) return f;
    }
    return std::nullopt;
}

std::string_view fixture_name(Fixture f)
{
    switch (f) {
    case Fixture::Fig1: return "fig1";
    case Fixture::Fig1Terminalized: return "fig1_terminalized";
    case Fixture::Fig3: return "fig3";
    case Fixture::Fig4: return "fig4";
    case Fixture::Fig6: return "fig6";
    }
    return "?";
}

namespace {

constexpr auto OR = NodeKind::Or;
constexpr auto AND = NodeKind::And;
constexpr auto NT = Terminal::Nonterminal;
constexpr auto WIN = Terminal::Solvable;
constexpr auto LOSS = Terminal::Unsolvable;

// A:OR -> {B, C}; B:AND -> {D, E}; C:OR -> {E, F}. E is shared.
ExplicitGraph problem_reduction(Terminal d, Terminal e, Terminal f)
{
    std::vector<Draft> nodes{{OR}, {AND}, {OR}, {OR, d}, {OR, e}, {OR, f}};
    return assemble(nodes, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 4}, {2, 5}});
}

// A(0) OR -> B(1), C(2), every edge cost 4.
//   B AND -> D(3), E(4).  D -> D1(5) -> unsolvable(11).  E -> E1(6) -> solvable(12).
//   C -> C2(7) -> C3(8) -> C4(9) -> solvable(10).
// h underestimates everywhere, yet B looks cheaper than C until D is expanded.
ExplicitGraph drawback(bool informative_hbar)
{
    auto hb = [&](Cost v) { return informative_hbar ? v : 1.0; };
    std::vector<Draft> nodes{
        {OR, NT, 12, hb(4)}, {AND, NT, 8, hb(4)}, {OR, NT, 16, hb(4)}, {OR, NT, 1, hb(2)},
        {OR, NT, 2, hb(5)},  {OR, NT, 4, hb(4)},  {OR, NT, 0, hb(4)},  {OR, NT, 12, hb(4)},
        {OR, NT, 8, hb(4)},  {OR, NT, 4, hb(4)},  {OR, WIN},           {OR, LOSS},
        {OR, WIN},
    };
    std::vector<EdgeSpec> edges{{0, 1, 4}, {0, 2, 4}, {1, 3, 4}, {1, 4, 4}, {3, 5, 4},  {4, 6, 4},
                                {2, 7, 4}, {7, 8, 4}, {8, 9, 4}, {9, 10, 4}, {5, 11, 4}, {6, 12, 4}};
    return assemble(nodes, edges);
}

// Letters A..L in breadth-first order. Two certificates: {A,B,D,I,E,L} and
// {A,C,F,G}.
ExplicitGraph two_solution_trees()
{
    std::vector<Draft> nodes{
        {OR},       {AND},      {AND},       {OR},       {OR},        {OR, WIN},
        {OR, WIN},  {AND, LOSS}, {AND, WIN}, {AND, LOSS}, {AND, LOSS}, {AND, WIN},
    };
    std::vector<EdgeSpec> edges{{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5},  {2, 6},
                                {3, 7}, {3, 8}, {4, 9}, {4, 10}, {4, 11}};
    return assemble(nodes, edges);
}

} // namespace

ExplicitGraph fixture(Fixture f)
{
    switch (f) {
    case Fixture::Fig1: return problem_reduction(NT, NT, NT);
    case Fixture::Fig1Terminalized: return problem_reduction(WIN, WIN, LOSS);
    case Fixture::Fig3: return drawback(false);
    case Fixture::Fig4: return drawback(true);
    case Fixture::Fig6: return two_solution_trees();
    }
    throw Error(ErrorCode::UnknownFixture, "unknown fixture");
}

ExplicitGraph fixture(std::string_view name)
{
    auto f = parse_fixture(name);
    if (!f) throw Error(ErrorCode::UnknownFixture, "unknown fixture '" + std::string(name) + "'");
    return fixture(*f);
}

// ---------------------------------------------------------------------------

std::array<int, 9> TicTacToe::board(NodeKey key)
{
    std::array<int, 9> cells{};
    for (auto& c : cells) {
        c = static_cast<int>(key % 3);
        key /= 3;
    }
    return cells;
}

NodeKey TicTacToe::encode(const std::array<int, 9>& cells)
{
    NodeKey key = 0;
    for (auto it = cells.rbegin(); it != cells.rend(); ++it) key = key * 3 + static_cast<NodeKey>(*it);
    return key;
}

namespace {

bool has_line(const std::array<int, 9>& b, int who)
{
    static constexpr int lines[8][3] = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {0, 3, 6},
                                        {1, 4, 7}, {2, 5, 8}, {0, 4, 8}, {2, 4, 6}};
    for (const auto& l : lines) {
        if (b[l[0]] == who && b[l[1]] == who && b[l[2]] == who) return true;
    }
    return false;
}

} // namespace

WorldNode TicTacToe::describe(NodeKey key) const
{
    const auto b = board(key);
    const auto xs = std::count(b.begin(), b.end(), 1);
    const auto os = std::count(b.begin(), b.end(), 2);
    WorldNode w;
    w.key = key;
    w.kind = xs == os ? NodeKind::Or : NodeKind::And;
    if (has_line(b, 1)) w.terminal = Terminal::Solvable;
    else if (has_line(b, 2) || xs + os == 9) w.terminal = Terminal::Unsolvable;
    // FirstPlayerWins: draws are failures for X
    (void)objective_;
    return w;
}

WorldNode TicTacToe::root() const { return describe(0); }

std::vector<Successor> TicTacToe::expand(NodeKey key) const
{
    const WorldNode here = describe(key);
    if (here.terminal != Terminal::Nonterminal) {
        throw Error(ErrorCode::InvalidArgument, "terminal position expanded");
    }
    auto b = board(key);
    const int mover = here.kind == NodeKind::Or ? 1 : 2;
    std::vector<Successor> out;
    for (std::size_t cell = 0; cell < 9; ++cell) {
        if (b[cell] != 0) continue;
        b[cell] = mover;
        out.push_back({describe(encode(b)), 0.0});
        b[cell] = 0;
    }
    return out;
}

} // namespace andor
