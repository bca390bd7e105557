#ifndef ANDOR_GRAPH_HPP
#define ANDOR_GRAPH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "andor/cost.hpp"

namespace andor {

using NodeId = std::uint32_t;
/// Identity of a node in an implicit world; stable across expansions.
using NodeKey = std::uint64_t;

enum class NodeKind : std::uint8_t { And, Or };
enum class Terminal : std::uint8_t { Nonterminal, Solvable, Unsolvable };

struct NodeRecord {
    NodeId id = 0;
    NodeKind kind = NodeKind::Or;
    Terminal terminal = Terminal::Nonterminal;
    Cost h = 1.0;    // estimated cost of proving
    Cost hbar = 1.0; // estimated cost of disproving
    NodeKey key = 0;

    bool is_terminal() const noexcept { return terminal != Terminal::Nonterminal; }
};

struct Edge {
    NodeId child;
    Cost cost;
};

struct EdgeSpec {
    NodeId from;
    NodeId to;
    Cost cost = 0.0;
};

/// The materialised AND/OR graph. Child lists keep insertion order, which is
/// the tie-break basis everywhere in the library. Terminal nodes always carry
/// (h, hbar) = (0, inf) or (inf, 0) regardless of what was supplied.
class ExplicitGraph {
public:
    ExplicitGraph() = default;

    /// Appends a node; its id is the current size. Keys must be unique.
    NodeId add_node(NodeKind kind, Terminal terminal, Cost h, Cost hbar, NodeKey key);
    /// Appends a node keyed by its own id.
    NodeId add_node(NodeKind kind, Terminal terminal, Cost h = 1.0, Cost hbar = 1.0);
    void add_edge(NodeId from, NodeId to, Cost cost);
    void set_root(NodeId root) { root_ = root; }

    std::size_t size() const noexcept { return nodes_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    NodeId root() const noexcept { return root_; }
    bool contains(NodeId id) const noexcept { return id < nodes_.size(); }

    const NodeRecord& node(NodeId id) const { return nodes_.at(id); }
    std::span<const Edge> children(NodeId id) const { return children_.at(id); }
    std::span<const NodeId> parents(NodeId id) const { return parents_.at(id); }
    bool is_leaf(NodeId id) const { return children_.at(id).empty(); }

    /// Local id of a world key, or nullptr-like absence.
    const NodeId* find_key(NodeKey key) const;

    /// Structural equality: nodes (kind, status, heuristics, key), ordered
    /// child lists with costs, and root.
    friend bool operator==(const ExplicitGraph& a, const ExplicitGraph& b);

private:
    std::vector<NodeRecord> nodes_;
    std::vector<std::vector<Edge>> children_;
    std::vector<std::vector<NodeId>> parents_;
    std::unordered_map<NodeKey, NodeId> by_key_;
    std::size_t edge_count_ = 0;
    NodeId root_ = 0;
};

enum class BuildMode {
    Strict,     // rejects negative costs and terminals with children
    Permissive, // only structural errors; leaves the rest to validate()
};

/// Builds a graph from declarations. Node ids must be exactly 0..n-1 (in any
/// order); child order follows the order of `edges`.
/// Throws Error with DuplicateId, SparseIds, DanglingEdge, UnknownNode (root),
/// NegativeCost or TerminalWithChildren.
ExplicitGraph build_graph(std::vector<NodeRecord> nodes, const std::vector<EdgeSpec>& edges,
                          NodeId root, BuildMode mode = BuildMode::Strict);

struct Violation {
    enum class Kind { Cycle, NegativeCost, NegativeHeuristic, TerminalWithChildren };
    Kind kind;
    std::vector<NodeId> nodes;
    std::string message;
};

/// Reports every nontrivial strongly connected component (one violation per
/// cycle cluster), every negative edge cost or heuristic, and every terminal
/// with children. Empty result means the graph is a valid AND/OR DAG.
std::vector<Violation> validate(const ExplicitGraph& g);

/// Swaps AND/OR roles, terminal polarities, and (h, hbar). Edges, costs,
/// keys and root are unchanged.
ExplicitGraph dual(const ExplicitGraph& g);

/// Ids in an order where every node precedes its parents. Throws CyclicGraph.
std::vector<NodeId> reverse_topological_order(const ExplicitGraph& g);

// ---------------------------------------------------------------------------
// Implicit worlds

struct WorldNode {
    NodeKey key = 0;
    NodeKind kind = NodeKind::Or;
    Terminal terminal = Terminal::Nonterminal;
    Cost h = 1.0;
    Cost hbar = 1.0;
};

struct Successor {
    WorldNode node;
    Cost cost = 0.0;
};

/// A hidden graph revealed one expansion at a time. expand() must be a pure
/// function of the key and must never be asked to expand a terminal.
class ImplicitGraph {
public:
    virtual ~ImplicitGraph() = default;
    virtual WorldNode root() const = 0;
    virtual std::vector<Successor> expand(NodeKey key) const = 0;
};

/// Serves a fully materialised graph as a world; keys are node ids. Every
/// leaf of the wrapped graph has to be terminal (expanding a nonterminal
/// leaf throws DeadEnd).
class ExplicitWorld final : public ImplicitGraph {
public:
    explicit ExplicitWorld(ExplicitGraph graph) : graph_(std::move(graph)) {}

    WorldNode root() const override;
    std::vector<Successor> expand(NodeKey key) const override;
    const ExplicitGraph& graph() const noexcept { return graph_; }

private:
    WorldNode describe(NodeId id) const;
    ExplicitGraph graph_;
};

/// Expands every reachable node of a world. Throws InvalidParams when more
/// than `max_nodes` nodes are reached.
ExplicitGraph materialize(const ImplicitGraph& world, std::size_t max_nodes = 1'000'000);

} // namespace andor

#endif // ANDOR_GRAPH_HPP
