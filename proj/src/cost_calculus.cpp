#include "andor/cost_calculus.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "andor/error.hpp"

namespace andor {

namespace {

Label leaf_label(const NodeRecord& r)
{
    switch (r.terminal) {
    case Terminal::Solvable: return Label::Solved;
    case Terminal::Unsolvable: return Label::Disproved;
    case Terminal::Nonterminal: break;
    }
    return Label::Unknown;
}

// Boolean AND/OR propagation of terminal outcomes.
template <class LabelOf>
Label interior_label(const ExplicitGraph& g, NodeId v, LabelOf&& label_of)
{
    bool any_solved = false, all_solved = true, any_disproved = false, all_disproved = true;
    for (const auto& e : g.children(v)) {
        Label l = label_of(e.child);
        any_solved |= (l == Label::Solved);
        all_solved &= (l == Label::Solved);
        any_disproved |= (l == Label::Disproved);
        all_disproved &= (l == Label::Disproved);
    }
    if (g.node(v).kind == NodeKind::Or) {
        if (any_solved) return Label::Solved;
        if (all_disproved) return Label::Disproved;
    } else {
        if (all_solved) return Label::Solved;
        if (any_disproved) return Label::Disproved;
    }
    return Label::Unknown;
}

struct FKernel {
    using Table = FTable;
    CostScheme psi;

    static std::size_t size(const FTable& t) { return t.f.size(); }
    static void resize(FTable& t, std::size_t n)
    {
        t.f.resize(n, 0.0);
        t.label.resize(n, Label::Unknown);
        t.marked.resize(n, kNoMark);
    }

    // Returns true when value or label changed.
    bool eval(const ExplicitGraph& g, NodeId v, FTable& t) const
    {
        const auto& r = g.node(v);
        Cost f;
        Label label;
        NodeId mark = kNoMark;
        if (g.is_leaf(v)) {
            f = r.h; // terminals carry 0 / inf
            label = leaf_label(r);
        } else if (r.kind == NodeKind::Or) {
            f = kInfinity;
            for (const auto& e : g.children(v)) {
                Cost x = e.cost + t.f[e.child];
                if (mark == kNoMark || x < f) {
                    f = x;
                    mark = e.child;
                }
            }
            label = interior_label(g, v, [&](NodeId c) { return t.label[c]; });
        } else {
            f = 0.0;
            for (const auto& e : g.children(v)) f = combine(psi, f, e.cost + t.f[e.child]);
            label = interior_label(g, v, [&](NodeId c) { return t.label[c]; });
        }
        bool changed = f != t.f[v] || label != t.label[v];
        t.f[v] = f;
        t.label[v] = label;
        t.marked[v] = mark;
        return changed;
    }
};

struct PdKernel {
    using Table = PdTable;
    CostScheme psi;
    bool unit = false;

    static std::size_t size(const PdTable& t) { return t.pd.size(); }
    static void resize(PdTable& t, std::size_t n)
    {
        t.pd.resize(n, PdValue{});
        t.label.resize(n, Label::Unknown);
    }

    bool eval(const ExplicitGraph& g, NodeId v, PdTable& t) const
    {
        const auto& r = g.node(v);
        PdValue pd;
        Label label;
        if (g.is_leaf(v)) {
            pd = (unit && !r.is_terminal()) ? PdValue{1.0, 1.0} : PdValue{r.h, r.hbar};
            label = leaf_label(r);
        } else {
            const CostScheme scheme = unit ? CostScheme::Sum : psi;
            Cost mins_side = kInfinity, psi_side = 0.0;
            const bool is_or = r.kind == NodeKind::Or;
            for (const auto& e : g.children(v)) {
                const Cost c = unit ? 0.0 : e.cost;
                const PdValue& k = t.pd[e.child];
                // OR: p minimises, d combines. AND: the reverse.
                mins_side = std::min(mins_side, c + (is_or ? k.p : k.d));
                psi_side = combine(scheme, psi_side, c + (is_or ? k.d : k.p));
            }
            pd = is_or ? PdValue{mins_side, psi_side} : PdValue{psi_side, mins_side};
            label = interior_label(g, v, [&](NodeId c) { return t.label[c]; });
        }
        bool changed = !(pd == t.pd[v]) || label != t.label[v];
        t.pd[v] = pd;
        t.label[v] = label;
        return changed;
    }
};

template <class Kernel>
typename Kernel::Table full_pass(const ExplicitGraph& g, const Kernel& k)
{
    typename Kernel::Table t;
    Kernel::resize(t, g.size());
    for (NodeId v : reverse_topological_order(g)) k.eval(g, v, t);
    return t;
}

template <class Kernel, class ShouldNotify>
std::size_t incremental(const ExplicitGraph& g, typename Kernel::Table& t, NodeId changed,
                        const Kernel& k, ShouldNotify&& notify)
{
    const std::size_t old_size = Kernel::size(t);
    if (old_size > g.size() || !g.contains(changed) || changed >= old_size) {
        throw Error(ErrorCode::InconsistentTable, "value table does not match the graph");
    }
    Kernel::resize(t, g.size());
    for (NodeId v = static_cast<NodeId>(old_size); v < g.size(); ++v) {
        if (!g.is_leaf(v)) {
            throw Error(ErrorCode::InconsistentTable, "appended node " + std::to_string(v) + " is not a leaf");
        }
        k.eval(g, v, t);
    }

    // Ancestor closure of `changed`, then a Kahn order inside it so every node
    // is handled after all of its descendants in the closure.
    std::unordered_map<NodeId, std::size_t> pending;
    std::deque<NodeId> queue{changed};
    pending.emplace(changed, 0);
    while (!queue.empty()) {
        NodeId v = queue.front();
        queue.pop_front();
        for (NodeId p : g.parents(v)) {
            if (pending.emplace(p, 0).second) queue.push_back(p);
        }
    }
    for (auto& [v, count] : pending) {
        for (const auto& e : g.children(v)) count += pending.contains(e.child);
    }
    std::vector<NodeId> ready;
    for (const auto& [v, count] : pending) {
        if (count == 0) ready.push_back(v);
    }
    std::unordered_map<NodeId, bool> dirty{{changed, true}};
    std::size_t revisited = 0;
    while (!ready.empty()) {
        NodeId v = ready.back();
        ready.pop_back();
        if (dirty[v]) {
            ++revisited;
            if (k.eval(g, v, t)) {
                for (NodeId p : g.parents(v)) {
                    if (notify(p, v)) dirty[p] = true;
                }
            }
        }
        for (NodeId p : g.parents(v)) {
            std::size_t multiplicity = 0;
            for (const auto& e : g.children(p)) multiplicity += (e.child == v);
            if ((pending[p] -= multiplicity) == 0) ready.push_back(p);
        }
    }
    return revisited;
}

} // namespace

FTable revise_f(const ExplicitGraph& g, CostScheme psi) { return full_pass(g, FKernel{psi}); }

PdTable revise_pd(const ExplicitGraph& g, CostScheme psi) { return full_pass(g, PdKernel{psi, false}); }

PdTable phi_delta_unit(const ExplicitGraph& g) { return full_pass(g, PdKernel{CostScheme::Sum, true}); }

std::size_t incremental_update(const ExplicitGraph& g, FTable& table, NodeId changed, CostScheme psi,
                               UpdateRule rule)
{
    // Marks are read before the parent is re-evaluated, i.e. from the previous
    // revision, as in the edge-marking formulation.
    auto notify = [&](NodeId parent, NodeId child) {
        if (rule == UpdateRule::AllParents || g.node(parent).kind == NodeKind::And) return true;
        return table.marked[parent] == child;
    };
    return incremental(g, table, changed, FKernel{psi}, notify);
}

std::size_t incremental_update(const ExplicitGraph& g, PdTable& table, NodeId changed, CostScheme psi)
{
    return incremental(g, table, changed, PdKernel{psi, false}, [](NodeId, NodeId) { return true; });
}

} // namespace andor
