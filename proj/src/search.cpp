#include "andor/search.hpp"

#include <algorithm>

#include "andor/error.hpp"
#include "andor/rng.hpp"
#include "growth.hpp"

namespace andor {

std::string_view to_string(SearchStatus s)
{
    switch (s) {
    case SearchStatus::ProvedSolvable: return "ProvedSolvable";
    case SearchStatus::ProvedUnsolvable: return "ProvedUnsolvable";
    case SearchStatus::ResourceExhausted: return "ResourceExhausted";
    }
    return "?";
}

std::string_view to_string(Algorithm a)
{
    switch (a) {
    case Algorithm::AoStar: return "ao-star";
    case Algorithm::Pns: return "pns";
    case Algorithm::PnsStar: return "pns-star";
    case Algorithm::BestFirstMinimax: return "bfmm";
    }
    return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name)
{
    for (Algorithm a : {Algorithm::AoStar, Algorithm::Pns, Algorithm::PnsStar, Algorithm::BestFirstMinimax}) {
        if (to_string(a) == name) return a;
    }
    return std::nullopt;
}

std::size_t break_tie(const TieBreak& tie, NodeKey parent_key, std::size_t tied)
{
    switch (tie.policy) {
    case TieBreak::Policy::FirstChild: return 0;
    case TieBreak::Policy::LastChild: return tied - 1;
    case TieBreak::Policy::RandomSeeded: return splitmix64(tie.seed ^ splitmix64(parent_key)) % tied;
    }
    return 0;
}

namespace detail {

Growth::Growth(const ImplicitGraph& world, Instantiation inst, SearchStats& stats)
    : world_(world), inst_(inst), stats_(stats)
{
    bool fresh = false;
    g_.set_root(intern(world_.root(), fresh));
}

NodeId Growth::intern(const WorldNode& w, bool& fresh)
{
    if (const NodeId* id = g_.find_key(w.key)) {
        fresh = false;
        return *id;
    }
    Cost h = w.h, hbar = w.hbar;
    if (w.terminal == Terminal::Nonterminal) {
        if (inst_.unit) h = hbar = 1.0;
        if (inst_.zero_hbar) hbar = 0.0;
        if (inst_.minimax_scale) {
            if (!(h >= 0.0 && h <= *inst_.minimax_scale)) {
                throw Error(ErrorCode::InvalidArgument,
                            "leaf estimate " + std::to_string(h) + " of node " + std::to_string(w.key) +
                                " lies outside [0, " + std::to_string(*inst_.minimax_scale) + "]");
            }
            hbar = *inst_.minimax_scale - h;
        }
    }
    fresh = true;
    ++stats_.nodes_generated;
    stamp_.push_back(0);
    return g_.add_node(w.kind, w.terminal, h, hbar, w.key);
}

bool Growth::reaches(NodeId from, NodeId target)
{
    ++epoch_;
    std::vector<NodeId> stack{from};
    while (!stack.empty()) {
        NodeId v = stack.back();
        stack.pop_back();
        if (v == target) return true;
        if (stamp_[v] == epoch_) continue;
        stamp_[v] = epoch_;
        for (const auto& e : g_.children(v)) stack.push_back(e.child);
    }
    return false;
}

void Growth::expand(NodeId leaf)
{
    const NodeKey key = g_.node(leaf).key;
    auto successors = world_.expand(key);
    if (successors.empty()) {
        throw Error(ErrorCode::DeadEnd, "world returned no successors for node " + std::to_string(key));
    }
    ++stats_.expansions;
    for (const auto& s : successors) {
        bool fresh = false;
        NodeId child = intern(s.node, fresh);
        if (!fresh && reaches(child, leaf)) {
            throw Error(ErrorCode::CyclicGraph, "expanding node " + std::to_string(key) + " closes a cycle");
        }
        g_.add_edge(leaf, child, inst_.zero_costs ? 0.0 : s.cost);
    }
}

bool Growth::exhausted(const Budget& budget) const
{
    if (budget.max_expansions && stats_.expansions >= *budget.max_expansions) return true;
    if (budget.max_nodes && stats_.nodes_generated >= *budget.max_nodes) return true;
    return false;
}

} // namespace detail

namespace {

using detail::Growth;
using detail::Instantiation;

struct Selection {
    bool done = false;
    NodeId leaf = 0;
};

// Single-heuristic value model (AO* / GBFS).
struct FModel {
    CostScheme psi;
    UpdateRule rule;
    FTable table;
    std::optional<SolutionGraph> base; // last selected base

    void init(const ExplicitGraph& g) { table = revise_f(g, psi); }
    void update(const ExplicitGraph& g, NodeId leaf, SearchStats& stats, bool audit)
    {
        stats.ancestor_updates += incremental_update(g, table, leaf, psi, rule);
        if (audit) {
            ++stats.audited_steps;
            if (!(revise_f(g, psi) == table)) ++stats.audit_mismatches;
        }
    }
    RootValue root_value(const ExplicitGraph& g) const { return {table.f[g.root()], std::nullopt}; }
    Label root_label(const ExplicitGraph& g) const { return table.label[g.root()]; }
};

struct PdModel {
    CostScheme psi;
    PdTable table;

    void init(const ExplicitGraph& g) { table = revise_pd(g, psi); }
    void update(const ExplicitGraph& g, NodeId leaf, SearchStats& stats, bool audit)
    {
        stats.ancestor_updates += incremental_update(g, table, leaf, psi);
        if (audit) {
            ++stats.audited_steps;
            if (!(revise_pd(g, psi) == table)) ++stats.audit_mismatches;
        }
    }
    RootValue root_value(const ExplicitGraph& g) const
    {
        const auto& pd = table.pd[g.root()];
        return {pd.p, pd.d};
    }
    Label root_label(const ExplicitGraph& g) const { return table.label[g.root()]; }
};

template <class Model, class Select>
SearchOutcome run(const ImplicitGraph& world, const Instantiation& inst, Model& model, Select&& select,
                  const Budget& budget, const SearchOptions& options)
{
    SearchOutcome out;
    Growth grow(world, inst, out.stats);
    model.init(grow.graph());
    for (;;) {
        Selection sel = select(grow.graph(), model);
        if (sel.done) break;
        if (grow.exhausted(budget)) {
            out.status = SearchStatus::ResourceExhausted;
            out.root_value = model.root_value(grow.graph());
            out.final_graph = std::move(grow.graph());
            return out;
        }
        ++out.stats.iterations;
        grow.expand(sel.leaf);
        model.update(grow.graph(), sel.leaf, out.stats, options.audit);
        if (options.trace) {
            out.trace.push_back({out.stats.iterations, grow.graph().node(sel.leaf).key,
                                 model.root_value(grow.graph())});
        }
    }
    out.root_value = model.root_value(grow.graph());
    out.final_graph = std::move(grow.graph());
    return out;
}

std::vector<NodeId> nonterminal_leaves(const ExplicitGraph& g, const SolutionGraph& base,
                                       std::vector<BaseLeaf>& all)
{
    all = certificate_leaves(g, base);
    std::vector<NodeId> out;
    for (const auto& l : all) {
        if (!g.node(l.id).is_terminal()) out.push_back(l.id);
    }
    return out;
}

class LeafPicker {
public:
    explicit LeafPicker(const LeafPick& pick) : pick_(pick), rng_(pick.seed) {}

    NodeId operator()(const ExplicitGraph& g, const std::vector<BaseLeaf>& leaves)
    {
        std::vector<BaseLeaf> open;
        for (const auto& l : leaves) {
            if (!g.node(l.id).is_terminal()) open.push_back(l);
        }
        switch (pick_.policy) {
        case LeafPick::Policy::AnyFirst: return open.front().id;
        case LeafPick::Policy::AnyRandom: return open[rng_.below(open.size())].id;
        case LeafPick::Policy::Deepest: {
            auto it = std::max_element(open.begin(), open.end(),
                                       [](const BaseLeaf& a, const BaseLeaf& b) { return a.depth < b.depth; });
            return it->id;
        }
        case LeafPick::Policy::HighestH: {
            auto it = std::max_element(open.begin(), open.end(), [&](const BaseLeaf& a, const BaseLeaf& b) {
                return g.node(a.id).h < g.node(b.id).h;
            });
            return it->id;
        }
        }
        return open.front().id;
    }

private:
    LeafPick pick_;
    Rng rng_;
};

SearchOutcome single_heuristic(const ImplicitGraph& world, const SolutionBasePolicy& f1, const LeafPick& f2,
                               CostScheme psi, const Budget& budget, const SearchOptions& options,
                               const TieBreak& cert_tie)
{
    FModel model{psi, options.strict_marking ? UpdateRule::MarkedParents : UpdateRule::AllParents, {}, {}};
    LeafPicker picker(f2);
    bool proved = false;
    auto select = [&](const ExplicitGraph& g, FModel& m) -> Selection {
        if (m.table.label[g.root()] == Label::Disproved) {
            proved = true;
            return {true, 0};
        }
        m.base = f1(g, m.table);
        std::vector<BaseLeaf> leaves;
        auto open = nonterminal_leaves(g, *m.base, leaves);
        if (open.empty()) {
            for (const auto& l : leaves) {
                if (g.node(l.id).terminal != Terminal::Solvable) {
                    throw Error(ErrorCode::InvalidArgument,
                                "solution base ends in an unsolvable terminal while the root is "
                                "undecided; heuristics must be finite");
                }
            }
            proved = true;
            return {true, 0};
        }
        return {false, picker(g, leaves)};
    };
    SearchOutcome out = run(world, Instantiation{}, model, select, budget, options);
    if (!proved) return out;
    const auto& g = out.final_graph;
    if (model.table.label[g.root()] == Label::Disproved) {
        out.status = SearchStatus::ProvedUnsolvable;
        out.solution = detail::extract_certificate(g, model.table.label, Polarity::Unsolvable, cert_tie,
                                                   [](const Edge&) { return 0.0; });
    } else {
        out.status = SearchStatus::ProvedSolvable;
        out.solution = std::move(model.base);
    }
    return out;
}

SearchOutcome dual_heuristic(const ImplicitGraph& world, const Instantiation& inst, CostScheme psi,
                             const TieBreak& tie, const Budget& budget, const SearchOptions& options)
{
    PdModel model{psi, {}};
    auto select = [&](const ExplicitGraph& g, PdModel& m) -> Selection {
        const auto& t = m.table;
        if (t.label[g.root()] != Label::Unknown) return {true, 0};
        NodeId v = g.root();
        while (!g.is_leaf(v)) {
            const bool is_or = g.node(v).kind == NodeKind::Or;
            Cost best = kInfinity;
            std::vector<NodeId> tied;
            for (const auto& e : g.children(v)) {
                if (t.label[e.child] != Label::Unknown) continue;
                const Cost r = e.cost + (is_or ? t.pd[e.child].p : t.pd[e.child].d);
                if (tied.empty() || r < best) {
                    best = r;
                    tied.assign(1, e.child);
                } else if (r == best) {
                    tied.push_back(e.child);
                }
            }
            if (tied.empty()) {
                throw Error(ErrorCode::InconsistentTable,
                            "undecided node " + std::to_string(v) + " has no undecided child");
            }
            v = tied[break_tie(tie, g.node(v).key, tied.size())];
        }
        if (options.observer) options.observer(g, t, v);
        return {false, v};
    };
    SearchOutcome out = run(world, inst, model, select, budget, options);
    const auto& g = out.final_graph;
    const Label root = model.table.label[g.root()];
    const auto& t = model.table;
    if (root == Label::Solved) {
        out.status = SearchStatus::ProvedSolvable;
        out.solution = detail::extract_certificate(g, t.label, Polarity::Solvable, tie,
                                                   [&](const Edge& e) { return e.cost + t.pd[e.child].p; });
    } else if (root == Label::Disproved) {
        out.status = SearchStatus::ProvedUnsolvable;
        out.solution = detail::extract_certificate(g, t.label, Polarity::Unsolvable, tie,
                                                   [&](const Edge& e) { return e.cost + t.pd[e.child].d; });
    }
    return out;
}

} // namespace

SolutionGraph select_solution_base(const ExplicitGraph& g, const FTable& table, const TieBreak& tie)
{
    if (table.f.size() != g.size() || table.label.size() != g.size()) {
        throw Error(ErrorCode::InconsistentTable, "value table does not match the graph");
    }
    SolutionGraph s;
    s.root = g.root();
    s.polarity = Polarity::Solvable;
    std::vector<NodeId> stack{g.root()};
    s.members.insert(g.root());
    while (!stack.empty()) {
        NodeId v = stack.back();
        stack.pop_back();
        if (g.is_leaf(v)) continue;
        auto visit = [&](NodeId w) {
            if (s.members.insert(w).second) stack.push_back(w);
        };
        if (g.node(v).kind == NodeKind::And) {
            for (const auto& e : g.children(v)) visit(e.child);
            continue;
        }
        Cost best = kInfinity;
        std::vector<NodeId> tied;
        for (const auto& e : g.children(v)) {
            const Cost r = e.cost + table.f[e.child];
            if (tied.empty() || r < best) {
                best = r;
                tied.assign(1, e.child);
            } else if (r == best) {
                tied.push_back(e.child);
            }
        }
        NodeId pick = tied[break_tie(tie, g.node(v).key, tied.size())];
        s.choice.emplace(v, pick);
        visit(pick);
    }
    return s;
}

SearchOutcome gbfs_run(const ImplicitGraph& world, const SolutionBasePolicy& f1, const LeafPick& f2,
                       CostScheme psi, const Budget& budget, const SearchOptions& options)
{
    return single_heuristic(world, f1, f2, psi, budget, options, TieBreak::first_child());
}

SearchOutcome ao_star(const ImplicitGraph& world, CostScheme psi, const TieBreak& tie, const LeafPick& pick,
                      const Budget& budget, const SearchOptions& options)
{
    auto f1 = [tie](const ExplicitGraph& g, const FTable& t) { return select_solution_base(g, t, tie); };
    return single_heuristic(world, f1, pick, psi, budget, options, tie);
}

SearchOutcome pns_star(const ImplicitGraph& world, CostScheme psi, const TieBreak& tie, const Budget& budget,
                       const SearchOptions& options)
{
    return dual_heuristic(world, Instantiation{}, psi, tie, budget, options);
}

SearchOutcome pns_star_blind_dual(const ImplicitGraph& world, CostScheme psi, const TieBreak& tie,
                                  const Budget& budget, const SearchOptions& options)
{
    Instantiation inst;
    inst.zero_hbar = true;
    return dual_heuristic(world, inst, psi, tie, budget, options);
}

SearchOutcome best_first_minimax(const ImplicitGraph& world, Cost scale, const Budget& budget,
                                 const SearchOptions& options)
{
    if (!(scale >= 0.0) || is_infinite(scale)) {
        throw Error(ErrorCode::InvalidArgument, "value scale must be finite and non-negative");
    }
    Instantiation inst;
    inst.zero_costs = true;
    inst.minimax_scale = scale;
    return dual_heuristic(world, inst, CostScheme::Max, TieBreak::first_child(), budget, options);
}

SearchOutcome solve(const ImplicitGraph& world, const RunConfig& config)
{
    switch (config.algorithm) {
    case Algorithm::AoStar:
        return ao_star(world, config.psi, config.tie, config.pick, config.budget, config.options);
    case Algorithm::Pns: return pns(world, config.tie, config.budget, config.options);
    case Algorithm::PnsStar: return pns_star(world, config.psi, config.tie, config.budget, config.options);
    case Algorithm::BestFirstMinimax:
        if (config.psi != CostScheme::Max) {
            throw Error(ErrorCode::InvalidArgument, "best-first minimax requires psi = max");
        }
        return best_first_minimax(world, config.value_scale, config.budget, config.options);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown algorithm");
}

} // namespace andor
