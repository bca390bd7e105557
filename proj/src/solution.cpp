#include "andor/solution.hpp"

#include <deque>
#include <functional>

#include "andor/error.hpp"

namespace andor {

namespace {

// Under Solvable polarity OR nodes choose; under Unsolvable AND nodes do.
bool chooses(NodeKind kind, Polarity polarity)
{
    return (kind == NodeKind::Or) == (polarity == Polarity::Solvable);
}

Terminal wanted_leaf(Polarity polarity)
{
    return polarity == Polarity::Solvable ? Terminal::Solvable : Terminal::Unsolvable;
}

void check_known(const ExplicitGraph& g, const SolutionGraph& s)
{
    auto known = [&](NodeId v) {
        if (!g.contains(v)) throw Error(ErrorCode::UnknownNode, "node " + std::to_string(v) + " not in graph");
    };
    known(s.root);
    for (NodeId v : s.members) known(v);
    for (auto [from, to] : s.choice) {
        known(from);
        known(to);
    }
}

bool has_child(const ExplicitGraph& g, NodeId parent, NodeId child)
{
    for (const auto& e : g.children(parent)) {
        if (e.child == child) return true;
    }
    return false;
}

} // namespace

bool validate_solution_graph(const ExplicitGraph& g, const SolutionGraph& s)
{
    check_known(g, s);
    if (!s.members.contains(s.root)) return false;

    for (auto [from, to] : s.choice) {
        if (!s.members.contains(from) || !chooses(g.node(from).kind, s.polarity)) return false;
    }
    for (NodeId v : s.members) {
        const auto& r = g.node(v);
        if (g.is_leaf(v)) {
            if (r.terminal != wanted_leaf(s.polarity)) return false;
            continue;
        }
        if (chooses(r.kind, s.polarity)) {
            auto it = s.choice.find(v);
            if (it == s.choice.end() || !has_child(g, v, it->second) ||
                !s.members.contains(it->second))
                return false;
        } else {
            for (const auto& e : g.children(v)) {
                if (!s.members.contains(e.child)) return false;
            }
        }
    }

    // connected: everything must be reachable along certificate edges
    std::set<NodeId> reached{s.root};
    std::deque<NodeId> queue{s.root};
    while (!queue.empty()) {
        NodeId v = queue.front();
        queue.pop_front();
        if (g.is_leaf(v)) continue;
        auto visit = [&](NodeId w) {
            if (reached.insert(w).second) queue.push_back(w);
        };
        if (chooses(g.node(v).kind, s.polarity)) visit(s.choice.at(v));
        else
            for (const auto& e : g.children(v)) visit(e.child);
    }
    return reached.size() == s.members.size();
}

Cost solution_cost(const ExplicitGraph& g, const SolutionGraph& s, CostScheme psi)
{
    if (s.polarity != Polarity::Solvable || !validate_solution_graph(g, s)) {
        throw Error(ErrorCode::InvalidSolutionGraph, "not a valid solvable solution graph");
    }
    std::map<NodeId, Cost> memo;
    std::function<Cost(NodeId)> eval = [&](NodeId v) -> Cost {
        if (auto it = memo.find(v); it != memo.end()) return it->second;
        Cost value = 0.0;
        if (!g.is_leaf(v)) {
            if (g.node(v).kind == NodeKind::Or) {
                NodeId c = s.choice.at(v);
                Cost best = kInfinity;
                // parallel edges to the same child: take the cheapest
                for (const auto& e : g.children(v)) {
                    if (e.child == c) best = std::min(best, e.cost + eval(c));
                }
                value = best;
            } else {
                for (const auto& e : g.children(v)) value = combine(psi, value, e.cost + eval(e.child));
            }
        }
        memo.emplace(v, value);
        return value;
    };
    return eval(s.root);
}

std::vector<BaseLeaf> certificate_leaves(const ExplicitGraph& g, const SolutionGraph& s)
{
    std::vector<BaseLeaf> out;
    std::set<NodeId> seen;
    struct Item {
        NodeId v;
        std::size_t depth;
    };
    std::vector<Item> stack{{s.root, 0}};
    while (!stack.empty()) {
        auto [v, depth] = stack.back();
        stack.pop_back();
        if (!seen.insert(v).second) continue;
        if (g.is_leaf(v)) {
            out.push_back({v, depth});
            continue;
        }
        if (chooses(g.node(v).kind, s.polarity)) {
            auto it = s.choice.find(v);
            if (it != s.choice.end()) stack.push_back({it->second, depth + 1});
        } else {
            auto kids = g.children(v);
            for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back({it->child, depth + 1});
        }
    }
    return out;
}

} // namespace andor
