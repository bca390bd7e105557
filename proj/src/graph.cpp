#include "andor/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "andor/error.hpp"

namespace andor {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::SparseIds: return "SparseIds";
    case ErrorCode::DanglingEdge: return "DanglingEdge";
    case ErrorCode::NegativeCost: return "NegativeCost";
    case ErrorCode::TerminalWithChildren: return "TerminalWithChildren";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::CyclicGraph: return "CyclicGraph";
    case ErrorCode::InvalidSolutionGraph: return "InvalidSolutionGraph";
    case ErrorCode::InconsistentTable: return "InconsistentTable";
    case ErrorCode::NonterminalLeaf: return "NonterminalLeaf";
    case ErrorCode::TooManyLeaves: return "TooManyLeaves";
    case ErrorCode::NotAlternating: return "NotAlternating";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
    case ErrorCode::DeadEnd: return "DeadEnd";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

namespace {

void impose_terminal_values(NodeRecord& r)
{
    if (r.terminal == Terminal::Solvable) {
        r.h = 0.0;
        r.hbar = kInfinity;
    } else if (r.terminal == Terminal::Unsolvable) {
        r.h = kInfinity;
        r.hbar = 0.0;
    }
}

} // namespace

NodeId ExplicitGraph::add_node(NodeKind kind, Terminal terminal, Cost h, Cost hbar, NodeKey key)
{
    auto id = static_cast<NodeId>(nodes_.size());
    auto [it, inserted] = by_key_.emplace(key, id);
    if (!inserted) {
        throw Error(ErrorCode::DuplicateId, "duplicate node key " + std::to_string(key));
    }
    NodeRecord r{id, kind, terminal, h, hbar, key};
    impose_terminal_values(r);
    nodes_.push_back(r);
    children_.emplace_back();
    parents_.emplace_back();
    return id;
}

NodeId ExplicitGraph::add_node(NodeKind kind, Terminal terminal, Cost h, Cost hbar)
{
    return add_node(kind, terminal, h, hbar, nodes_.size());
}

void ExplicitGraph::add_edge(NodeId from, NodeId to, Cost cost)
{
    if (!contains(from) || !contains(to)) {
        throw Error(ErrorCode::DanglingEdge, "edge " + std::to_string(from) + "->" +
                                                 std::to_string(to) + " references an unknown node");
    }
    children_[from].push_back(Edge{to, cost});
    auto& ps = parents_[to];
    if (std::find(ps.begin(), ps.end(), from) == ps.end()) ps.push_back(from);
    ++edge_count_;
}

const NodeId* ExplicitGraph::find_key(NodeKey key) const
{
    auto it = by_key_.find(key);
    return it == by_key_.end() ? nullptr : &it->second;
}

bool operator==(const ExplicitGraph& a, const ExplicitGraph& b)
{
    if (a.root_ != b.root_ || a.nodes_.size() != b.nodes_.size()) return false;
    for (std::size_t i = 0; i < a.nodes_.size(); ++i) {
        const auto& x = a.nodes_[i];
        const auto& y = b.nodes_[i];
        if (x.kind != y.kind || x.terminal != y.terminal || x.h != y.h || x.hbar != y.hbar ||
            x.key != y.key)
            return false;
        const auto& cx = a.children_[i];
        const auto& cy = b.children_[i];
        if (cx.size() != cy.size()) return false;
        for (std::size_t j = 0; j < cx.size(); ++j) {
            if (cx[j].child != cy[j].child || cx[j].cost != cy[j].cost) return false;
        }
    }
    return true;
}

ExplicitGraph build_graph(std::vector<NodeRecord> nodes, const std::vector<EdgeSpec>& edges,
                          NodeId root, BuildMode mode)
{
    std::vector<const NodeRecord*> slot(nodes.size(), nullptr);
    for (const auto& n : nodes) {
        if (n.id >= nodes.size()) {
            // either a duplicate pushed another id out of range, or ids skip
            bool dup = std::count_if(nodes.begin(), nodes.end(),
                                     [&](const NodeRecord& m) { return m.id == n.id; }) > 1;
            if (dup) throw Error(ErrorCode::DuplicateId, "duplicate node id " + std::to_string(n.id));
            throw Error(ErrorCode::SparseIds,
                        "node ids must be 0.." + std::to_string(nodes.size() - 1) + ", got " +
                            std::to_string(n.id));
        }
        if (slot[n.id] != nullptr) {
            throw Error(ErrorCode::DuplicateId, "duplicate node id " + std::to_string(n.id));
        }
        slot[n.id] = &n;
    }
    if (root >= nodes.size()) {
        throw Error(ErrorCode::UnknownNode, "root " + std::to_string(root) + " is not a node");
    }
    for (const auto& e : edges) {
        if (e.from >= nodes.size() || e.to >= nodes.size()) {
            throw Error(ErrorCode::DanglingEdge, "edge " + std::to_string(e.from) + "->" +
                                                     std::to_string(e.to) +
                                                     " references an unknown node");
        }
    }
    if (mode == BuildMode::Strict) {
        for (const auto& e : edges) {
            if (!(e.cost >= 0.0)) {
                throw Error(ErrorCode::NegativeCost, "edge " + std::to_string(e.from) + "->" +
                                                         std::to_string(e.to) + " has negative cost");
            }
            if (slot[e.from]->is_terminal()) {
                throw Error(ErrorCode::TerminalWithChildren,
                            "terminal node " + std::to_string(e.from) + " has children");
            }
        }
        for (const auto& n : nodes) {
            if (!n.is_terminal() && (!(n.h >= 0.0) || !(n.hbar >= 0.0))) {
                throw Error(ErrorCode::NegativeCost,
                            "node " + std::to_string(n.id) + " has a negative heuristic");
            }
        }
    }

    ExplicitGraph g;
    for (const NodeRecord* n : slot) g.add_node(n->kind, n->terminal, n->h, n->hbar);
    for (const auto& e : edges) g.add_edge(e.from, e.to, e.cost);
    g.set_root(root);
    return g;
}

namespace {

// Iterative Tarjan; returns every SCC with more than one node or a self-loop.
std::vector<std::vector<NodeId>> cyclic_components(const ExplicitGraph& g)
{
    const std::size_t n = g.size();
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, unvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<NodeId> stack;
    std::vector<std::vector<NodeId>> out;
    std::size_t counter = 0;

    struct Frame {
        NodeId v;
        std::size_t next_child;
    };
    for (NodeId s = 0; s < n; ++s) {
        if (index[s] != unvisited) continue;
        std::vector<Frame> call{{s, 0}};
        index[s] = low[s] = counter++;
        stack.push_back(s);
        on_stack[s] = true;
        while (!call.empty()) {
            auto& fr = call.back();
            auto kids = g.children(fr.v);
            if (fr.next_child < kids.size()) {
                NodeId w = kids[fr.next_child++].child;
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[fr.v] = std::min(low[fr.v], index[w]);
                }
                continue;
            }
            NodeId v = fr.v;
            call.pop_back();
            if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            if (low[v] != index[v]) continue;
            std::vector<NodeId> comp;
            NodeId w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp.push_back(w);
            } while (w != v);
            bool self_loop = false;
            for (const auto& e : g.children(v)) self_loop |= (e.child == v);
            if (comp.size() > 1 || self_loop) {
                std::sort(comp.begin(), comp.end());
                out.push_back(std::move(comp));
            }
        }
    }
    return out;
}

} // namespace

std::vector<Violation> validate(const ExplicitGraph& g)
{
    std::vector<Violation> out;
    for (auto& comp : cyclic_components(g)) {
        std::ostringstream msg;
        msg << "cycle through nodes";
        for (NodeId v : comp) msg << ' ' << v;
        out.push_back({Violation::Kind::Cycle, std::move(comp), msg.str()});
    }
    for (NodeId v = 0; v < g.size(); ++v) {
        for (const auto& e : g.children(v)) {
            if (!(e.cost >= 0.0)) {
                out.push_back({Violation::Kind::NegativeCost,
                               {v, e.child},
                               "edge " + std::to_string(v) + "->" + std::to_string(e.child) +
                                   " has negative cost"});
            }
        }
        const auto& r = g.node(v);
        if (r.is_terminal() && !g.is_leaf(v)) {
            out.push_back({Violation::Kind::TerminalWithChildren,
                           {v},
                           "terminal node " + std::to_string(v) + " has children"});
        }
        if (!r.is_terminal() && (!(r.h >= 0.0) || !(r.hbar >= 0.0))) {
            out.push_back({Violation::Kind::NegativeHeuristic,
                           {v},
                           "node " + std::to_string(v) + " has a negative heuristic"});
        }
    }
    return out;
}

ExplicitGraph dual(const ExplicitGraph& g)
{
    ExplicitGraph d;
    for (NodeId v = 0; v < g.size(); ++v) {
        const auto& r = g.node(v);
        NodeKind kind = r.kind == NodeKind::And ? NodeKind::Or : NodeKind::And;
        Terminal t = r.terminal;
        if (t == Terminal::Solvable) t = Terminal::Unsolvable;
        else if (t == Terminal::Unsolvable) t = Terminal::Solvable;
        d.add_node(kind, t, r.hbar, r.h, r.key);
    }
    for (NodeId v = 0; v < g.size(); ++v) {
        for (const auto& e : g.children(v)) d.add_edge(v, e.child, e.cost);
    }
    d.set_root(g.root());
    return d;
}

std::vector<NodeId> reverse_topological_order(const ExplicitGraph& g)
{
    // Kahn's algorithm on out-degree: leaves first, then nodes whose children
    // are all placed.
    std::vector<std::size_t> pending(g.size());
    std::deque<NodeId> ready;
    for (NodeId v = 0; v < g.size(); ++v) {
        pending[v] = g.children(v).size();
        if (pending[v] == 0) ready.push_back(v);
    }
    std::vector<NodeId> order;
    order.reserve(g.size());
    std::vector<std::size_t> seen_from(g.size(), 0);
    while (!ready.empty()) {
        NodeId v = ready.front();
        ready.pop_front();
        order.push_back(v);
        for (NodeId p : g.parents(v)) {
            // a parent may hold several parallel edges to v
            std::size_t multiplicity = 0;
            for (const auto& e : g.children(p)) multiplicity += (e.child == v);
            pending[p] -= multiplicity;
            if (pending[p] == 0) ready.push_back(p);
        }
    }
    if (order.size() != g.size()) {
        throw Error(ErrorCode::CyclicGraph, "graph contains a cycle");
    }
    return order;
}

WorldNode ExplicitWorld::describe(NodeId id) const
{
    const auto& r = graph_.node(id);
    return WorldNode{r.key, r.kind, r.terminal, r.h, r.hbar};
}

WorldNode ExplicitWorld::root() const { return describe(graph_.root()); }

std::vector<Successor> ExplicitWorld::expand(NodeKey key) const
{
    const NodeId* id = graph_.find_key(key);
    if (id == nullptr) throw Error(ErrorCode::UnknownNode, "no node with key " + std::to_string(key));
    if (graph_.node(*id).is_terminal()) {
        throw Error(ErrorCode::InvalidArgument, "terminal node " + std::to_string(key) + " expanded");
    }
    auto kids = graph_.children(*id);
    if (kids.empty()) {
        throw Error(ErrorCode::DeadEnd,
                    "node " + std::to_string(key) + " is a nonterminal leaf and cannot be expanded");
    }
    std::vector<Successor> out;
    out.reserve(kids.size());
    for (const auto& e : kids) out.push_back(Successor{describe(e.child), e.cost});
    return out;
}

ExplicitGraph materialize(const ImplicitGraph& world, std::size_t max_nodes)
{
    ExplicitGraph g;
    auto intern = [&](const WorldNode& w) {
        if (const NodeId* id = g.find_key(w.key)) return std::pair{*id, false};
        if (g.size() >= max_nodes) {
            throw Error(ErrorCode::InvalidParams, "world exceeds " + std::to_string(max_nodes) + " nodes");
        }
        return std::pair{g.add_node(w.kind, w.terminal, w.h, w.hbar, w.key), true};
    };
    std::deque<NodeId> queue{intern(world.root()).first};
    g.set_root(queue.front());
    while (!queue.empty()) {
        NodeId v = queue.front();
        queue.pop_front();
        if (g.node(v).is_terminal()) continue;
        for (const auto& s : world.expand(g.node(v).key)) {
            auto [child, fresh] = intern(s.node);
            g.add_edge(v, child, s.cost);
            if (fresh) queue.push_back(child);
        }
    }
    return g;
}

} // namespace andor
