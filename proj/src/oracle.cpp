#include "andor/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "andor/error.hpp"

namespace andor::oracle {

namespace {

enum class Mark : std::uint8_t { White, Grey, Black };

void require_terminal_leaves(const ExplicitGraph& g)
{
    for (NodeId v = 0; v < g.size(); ++v) {
        if (g.is_leaf(v) && !g.node(v).is_terminal()) {
            throw Error(ErrorCode::NonterminalLeaf, "leaf " + std::to_string(v) + " is not terminal");
        }
    }
}

// Depth-first memoised evaluation with cycle detection. `leaf` maps a terminal
// leaf to its value; `fold` combines (kind, child values) into a node value.
template <class T, class Leaf, class Fold>
std::vector<T> evaluate(const ExplicitGraph& g, Leaf&& leaf, Fold&& fold)
{
    std::vector<T> value(g.size());
    std::vector<Mark> mark(g.size(), Mark::White);
    struct Frame {
        NodeId v;
        std::size_t next;
    };
    for (NodeId s = 0; s < g.size(); ++s) {
        if (mark[s] != Mark::White) continue;
        std::vector<Frame> stack{{s, 0}};
        mark[s] = Mark::Grey;
        while (!stack.empty()) {
            auto& fr = stack.back();
            auto kids = g.children(fr.v);
            if (fr.next < kids.size()) {
                NodeId w = kids[fr.next++].child;
                if (mark[w] == Mark::Grey) throw Error(ErrorCode::CyclicGraph, "graph contains a cycle");
                if (mark[w] == Mark::White) {
                    mark[w] = Mark::Grey;
                    stack.push_back({w, 0});
                }
                continue;
            }
            NodeId v = fr.v;
            stack.pop_back();
            value[v] = kids.empty() ? leaf(v) : fold(v, value);
            mark[v] = Mark::Black;
        }
    }
    return value;
}

std::vector<Cost> optimal_costs(const ExplicitGraph& g, CostScheme psi)
{
    return evaluate<Cost>(
        g, [&](NodeId v) { return g.node(v).terminal == Terminal::Solvable ? 0.0 : kInfinity; },
        [&](NodeId v, const std::vector<Cost>& val) {
            Cost best = g.node(v).kind == NodeKind::Or ? kInfinity : 0.0;
            for (const auto& e : g.children(v)) {
                const Cost x = e.cost + val[e.child];
                if (g.node(v).kind == NodeKind::Or) best = std::min(best, x);
                else best = psi == CostScheme::Sum ? best + x : std::max(best, x);
            }
            return best;
        });
}

} // namespace

OracleReport exact_costs(const ExplicitGraph& g, CostScheme psi)
{
    require_terminal_leaves(g);
    OracleReport r;
    r.hstar = optimal_costs(g, psi);
    r.hbar_star = optimal_costs(dual(g), psi);
    r.solvable.resize(g.size());
    for (NodeId v = 0; v < g.size(); ++v) r.solvable[v] = r.hstar[v] < kInfinity;
    return r;
}

std::vector<bool> solvability(const ExplicitGraph& g)
{
    require_terminal_leaves(g);
    auto flags = evaluate<char>(
        g, [&](NodeId v) -> char { return g.node(v).terminal == Terminal::Solvable; },
        [&](NodeId v, const std::vector<char>& val) -> char {
            const bool is_or = g.node(v).kind == NodeKind::Or;
            bool acc = !is_or;
            for (const auto& e : g.children(v)) acc = is_or ? (acc || val[e.child]) : (acc && val[e.child]);
            return acc;
        });
    return {flags.begin(), flags.end()};
}

int minimal_certificate(const ExplicitGraph& g, Polarity polarity)
{
    std::vector<NodeId> leaves;
    std::vector<int> leaf_index(g.size(), -1);
    for (NodeId v = 0; v < g.size(); ++v) {
        if (g.is_leaf(v)) {
            leaf_index[v] = static_cast<int>(leaves.size());
            leaves.push_back(v);
        }
    }
    if (leaves.size() > 20) {
        throw Error(ErrorCode::TooManyLeaves, std::to_string(leaves.size()) + " leaves (limit 20)");
    }
    // Proving: OR needs one forced child, AND needs all. Disproving is the
    // same rule with roles exchanged.
    const NodeKind any_kind = polarity == Polarity::Solvable ? NodeKind::Or : NodeKind::And;
    const std::uint32_t subsets = 1u << leaves.size();
    int best = static_cast<int>(leaves.size()) + 1;
    for (std::uint32_t mask = 1; mask < subsets; ++mask) {
        const int size = std::popcount(mask);
        if (size >= best) continue;
        auto forced = evaluate<char>(
            g, [&](NodeId v) -> char { return (mask >> leaf_index[v]) & 1u; },
            [&](NodeId v, const std::vector<char>& val) -> char {
                const bool any = g.node(v).kind == any_kind;
                bool acc = !any;
                for (const auto& e : g.children(v)) acc = any ? (acc || val[e.child]) : (acc && val[e.child]);
                return acc;
            });
        if (forced[g.root()]) best = size;
    }
    return best;
}

double negamax(const ExplicitGraph& g, const std::map<NodeId, double>& leaf_values)
{
    for (NodeId v = 0; v < g.size(); ++v) {
        for (const auto& e : g.children(v)) {
            if (g.node(e.child).kind == g.node(v).kind) {
                throw Error(ErrorCode::NotAlternating,
                            "edge " + std::to_string(v) + "->" + std::to_string(e.child) + " joins equal kinds");
            }
        }
    }
    auto values = evaluate<double>(
        g,
        [&](NodeId v) {
            auto it = leaf_values.find(v);
            if (it == leaf_values.end()) {
                throw Error(ErrorCode::InvalidArgument, "leaf " + std::to_string(v) + " has no value");
            }
            return it->second;
        },
        [&](NodeId v, const std::vector<double>& val) {
            double best = -kInfinity;
            for (const auto& e : g.children(v)) best = std::max(best, -val[e.child]);
            return best;
        });
    return values[g.root()];
}

} // namespace andor::oracle
