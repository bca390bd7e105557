// Proof number search with its own proof/disproof bookkeeping. The explicit
// graph only stores structure here; numbers live in pn_/dn_ and are backed up
// with a change-driven worklist instead of the cost_calculus passes.

#include <vector>

#include "andor/error.hpp"
#include "andor/search.hpp"
#include "growth.hpp"

namespace andor {

namespace {

class ProofNumberSearch {
public:
    ProofNumberSearch(const ImplicitGraph& world, const TieBreak& tie, SearchStats& stats)
        : grow_(world, unit_instantiation(), stats), tie_(tie), stats_(stats)
    {
        sync_new_nodes();
    }

    const ExplicitGraph& graph() const { return grow_.graph(); }
    detail::Growth& growth() { return grow_; }
    Cost pn(NodeId v) const { return pn_[v]; }
    Cost dn(NodeId v) const { return dn_[v]; }

    bool decided() const
    {
        NodeId r = graph().root();
        return pn_[r] == 0.0 || dn_[r] == 0.0;
    }

    NodeId most_proving() const
    {
        const auto& g = graph();
        NodeId v = g.root();
        while (!g.is_leaf(v)) {
            const bool is_or = g.node(v).kind == NodeKind::Or;
            Cost best = kInfinity;
            std::vector<NodeId> tied;
            for (const auto& e : g.children(v)) {
                Cost x = is_or ? pn_[e.child] : dn_[e.child];
                if (tied.empty() || x < best) {
                    best = x;
                    tied.assign(1, e.child);
                } else if (x == best) {
                    tied.push_back(e.child);
                }
            }
            v = tied[break_tie(tie_, g.node(v).key, tied.size())];
        }
        return v;
    }

    void expand_and_backup(NodeId leaf)
    {
        grow_.expand(leaf);
        sync_new_nodes();
        std::vector<NodeId> work{leaf};
        bool first = true;
        while (!work.empty()) {
            NodeId v = work.back();
            work.pop_back();
            ++stats_.ancestor_updates;
            if (recompute(v) || first) {
                for (NodeId p : graph().parents(v)) work.push_back(p);
            }
            first = false;
        }
    }

private:
    static detail::Instantiation unit_instantiation()
    {
        detail::Instantiation inst;
        inst.unit = true;
        inst.zero_costs = true;
        return inst;
    }

    void sync_new_nodes()
    {
        const auto& g = graph();
        for (NodeId v = static_cast<NodeId>(pn_.size()); v < g.size(); ++v) {
            switch (g.node(v).terminal) {
            case Terminal::Solvable:
                pn_.push_back(0.0);
                dn_.push_back(kInfinity);
                break;
            case Terminal::Unsolvable:
                pn_.push_back(kInfinity);
                dn_.push_back(0.0);
                break;
            case Terminal::Nonterminal:
                pn_.push_back(1.0);
                dn_.push_back(1.0);
                break;
            }
        }
    }

    bool recompute(NodeId v)
    {
        const auto& g = graph();
        Cost lo_pn = kInfinity, sum_pn = 0.0, lo_dn = kInfinity, sum_dn = 0.0;
        for (const auto& e : g.children(v)) {
            lo_pn = std::min(lo_pn, pn_[e.child]);
            sum_pn += pn_[e.child];
            lo_dn = std::min(lo_dn, dn_[e.child]);
            sum_dn += dn_[e.child];
        }
        Cost pn, dn;
        if (g.node(v).kind == NodeKind::Or) {
            pn = lo_pn;
            dn = sum_dn;
        } else {
            pn = sum_pn;
            dn = lo_dn;
        }
        bool changed = pn != pn_[v] || dn != dn_[v];
        pn_[v] = pn;
        dn_[v] = dn;
        return changed;
    }

    detail::Growth grow_;
    TieBreak tie_;
    SearchStats& stats_;
    std::vector<Cost> pn_, dn_;
};

bool matches_unit_pass(const ProofNumberSearch& search)
{
    const auto& g = search.graph();
    PdTable full = phi_delta_unit(g);
    for (NodeId v = 0; v < g.size(); ++v) {
        if (full.pd[v].p != search.pn(v) || full.pd[v].d != search.dn(v)) return false;
    }
    return true;
}

} // namespace

SearchOutcome pns(const ImplicitGraph& world, const TieBreak& tie, const Budget& budget,
                  const SearchOptions& options)
{
    SearchOutcome out;
    ProofNumberSearch search(world, tie, out.stats);
    auto root_value = [&] {
        NodeId r = search.graph().root();
        return RootValue{search.pn(r), search.dn(r)};
    };
    while (!search.decided()) {
        NodeId leaf = search.most_proving();
        if (search.growth().exhausted(budget)) break;
        ++out.stats.iterations;
        search.expand_and_backup(leaf);
        if (options.audit) {
            ++out.stats.audited_steps;
            if (!matches_unit_pass(search)) ++out.stats.audit_mismatches;
        }
        if (options.trace) {
            out.trace.push_back({out.stats.iterations, search.graph().node(leaf).key, root_value()});
        }
    }
    out.root_value = root_value();
    out.final_graph = std::move(search.growth().graph());
    const auto& g = out.final_graph;
    if (out.root_value.p != 0.0 && out.root_value.d != 0.0) {
        out.status = SearchStatus::ResourceExhausted;
        return out;
    }
    PdTable unit = phi_delta_unit(g);
    if (out.root_value.p == 0.0) {
        out.status = SearchStatus::ProvedSolvable;
        out.solution = detail::extract_certificate(g, unit.label, Polarity::Solvable, tie,
                                                   [&](const Edge& e) { return unit.pd[e.child].p; });
    } else {
        out.status = SearchStatus::ProvedUnsolvable;
        out.solution = detail::extract_certificate(g, unit.label, Polarity::Unsolvable, tie,
                                                   [&](const Edge& e) { return unit.pd[e.child].d; });
    }
    return out;
}

} // namespace andor
