// Shared helpers for the test binaries.
#ifndef ANDOR_TESTS_SUPPORT_HPP
#define ANDOR_TESTS_SUPPORT_HPP

#include <map>
#include <vector>

#include "andor/generators.hpp"
#include "andor/graph.hpp"
#include "andor/rng.hpp"

namespace andor::testing {

inline std::vector<NodeRecord> records(const ExplicitGraph& g)
{
    std::vector<NodeRecord> out;
    for (NodeId v = 0; v < g.size(); ++v) out.push_back(g.node(v));
    return out;
}

inline std::vector<EdgeSpec> edge_specs(const ExplicitGraph& g)
{
    std::vector<EdgeSpec> out;
    for (NodeId v = 0; v < g.size(); ++v) {
        for (const auto& e : g.children(v)) out.push_back({v, e.child, e.cost});
    }
    return out;
}

/// Copy of `g` with some nodes' terminal status replaced.
inline ExplicitGraph with_terminals(const ExplicitGraph& g, const std::map<NodeId, Terminal>& status)
{
    auto nodes = records(g);
    for (auto [id, t] : status) {
        nodes[id].terminal = t;
        nodes[id].h = nodes[id].hbar = 1.0;
    }
    return build_graph(std::move(nodes), edge_specs(g), g.root());
}

/// Copy of `g` with every edge cost set to `c`.
inline ExplicitGraph with_costs(const ExplicitGraph& g, Cost c)
{
    auto edges = edge_specs(g);
    for (auto& e : edges) e.cost = c;
    return build_graph(records(g), edges, g.root());
}

/// Copy of `g` with nonterminal estimates redrawn on a 0.25 grid in
/// [0, max_h]. hbar gets its own draw unless `complement` is set, in which
/// case hbar = max_h - h.
inline ExplicitGraph with_random_estimates(const ExplicitGraph& g, std::uint64_t seed, Cost max_h = 5.0,
                                           bool complement = false)
{
    Rng rng(seed);
    const auto steps = static_cast<std::int64_t>(max_h * 4);
    auto nodes = records(g);
    for (auto& n : nodes) {
        if (n.is_terminal()) continue;
        n.h = 0.25 * static_cast<double>(rng.between(0, steps));
        n.hbar = complement ? max_h - n.h : 0.25 * static_cast<double>(rng.between(0, steps));
    }
    return build_graph(std::move(nodes), edge_specs(g), g.root());
}

// fig1 letters.
enum Fig1 : NodeId { A = 0, B = 1, C = 2, D = 3, E = 4, F = 5 };

/// The alternating tree suite: depth 1..6, branching 1..3, all leaves
/// terminal.
inline TreeParams tree_suite(std::size_t i)
{
    TreeParams p;
    p.depth = 1 + i % 6;
    p.branching = 1 + (i / 6) % 3;
    p.terminal_prob = 1.0;
    p.win_prob = 0.3 + 0.4 * static_cast<double>((i / 18) % 2);
    p.seed = 1000 + i;
    return p;
}

inline DagParams dag_suite(std::size_t i, HeuristicMode mode = HeuristicMode::Unit)
{
    DagParams p;
    p.n_nodes = 8 + i % 25;
    p.layers = 3 + i % 4;
    p.max_children = 2 + i % 3;
    p.or_fraction = 0.35 + 0.1 * static_cast<double>(i % 4);
    p.heuristic_mode = mode;
    p.seed = 5000 + i;
    return p;
}

/// Grows an explicit graph inside a fully known one, one expansion at a time,
/// the way the engines do. Local nodes are keyed by their id in `full`.
class Grower {
public:
    explicit Grower(const ExplicitGraph& full) : full_(full), local_(full.size(), kAbsent)
    {
        intern(full.root());
        g_.set_root(0);
    }

    const ExplicitGraph& graph() const { return g_; }
    NodeId full_id(NodeId local) const { return static_cast<NodeId>(g_.node(local).key); }

    /// Local leaves that have children in the full graph.
    std::vector<NodeId> open_leaves() const
    {
        std::vector<NodeId> out;
        for (NodeId v = 0; v < g_.size(); ++v) {
            if (g_.is_leaf(v) && !full_.is_leaf(full_id(v))) out.push_back(v);
        }
        return out;
    }

    void expand(NodeId local)
    {
        for (const auto& e : full_.children(full_id(local))) g_.add_edge(local, intern(e.child), e.cost);
    }

private:
    static constexpr NodeId kAbsent = static_cast<NodeId>(-1);

    NodeId intern(NodeId fv)
    {
        if (local_[fv] == kAbsent) {
            const auto& r = full_.node(fv);
            local_[fv] = g_.add_node(r.kind, r.terminal, r.h, r.hbar, fv);
        }
        return local_[fv];
    }

    const ExplicitGraph& full_;
    ExplicitGraph g_;
    std::vector<NodeId> local_;
};

} // namespace andor::testing

#endif // ANDOR_TESTS_SUPPORT_HPP
