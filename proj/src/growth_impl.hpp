// Internal template definitions for growth.hpp.
#ifndef ANDOR_SRC_GROWTH_IMPL_HPP
#define ANDOR_SRC_GROWTH_IMPL_HPP

#include <deque>

#include "andor/error.hpp"

namespace andor::detail {

template <class Rank>
SolutionGraph extract_certificate(const ExplicitGraph& g, const std::vector<Label>& label,
                                  Polarity polarity, const TieBreak& tie, Rank&& rank)
{
    const Label wanted = polarity == Polarity::Solvable ? Label::Solved : Label::Disproved;
    const NodeKind chooser = polarity == Polarity::Solvable ? NodeKind::Or : NodeKind::And;
    SolutionGraph s;
    s.root = g.root();
    s.polarity = polarity;
    std::deque<NodeId> queue{g.root()};
    s.members.insert(g.root());
    while (!queue.empty()) {
        NodeId v = queue.front();
        queue.pop_front();
        if (g.is_leaf(v)) continue;
        auto visit = [&](NodeId w) {
            if (s.members.insert(w).second) queue.push_back(w);
        };
        if (g.node(v).kind != chooser) {
            for (const auto& e : g.children(v)) visit(e.child);
            continue;
        }
        Cost best = kInfinity;
        std::vector<NodeId> tied;
        for (const auto& e : g.children(v)) {
            if (label[e.child] != wanted) continue;
            Cost r = rank(e);
            if (tied.empty() || r < best) {
                best = r;
                tied.assign(1, e.child);
            } else if (r == best) {
                tied.push_back(e.child);
            }
        }
        if (tied.empty()) {
            throw Error(ErrorCode::InconsistentTable, "labelled node " + std::to_string(v) +
                                                          " has no child carrying its label");
        }
        NodeId pick = tied[break_tie(tie, g.node(v).key, tied.size())];
        s.choice.emplace(v, pick);
        visit(pick);
    }
    return s;
}

} // namespace andor::detail

#endif // ANDOR_SRC_GROWTH_IMPL_HPP
