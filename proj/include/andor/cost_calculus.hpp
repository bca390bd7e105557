#ifndef ANDOR_COST_CALCULUS_HPP
#define ANDOR_COST_CALCULUS_HPP

#include <cstdint>
#include <vector>

#include "andor/graph.hpp"

namespace andor {

enum class Label : std::uint8_t { Unknown, Solved, Disproved };

/// Estimated cost to prove (p) and to disprove (d) a node.
struct PdValue {
    Cost p = 0.0;
    Cost d = 0.0;
    friend bool operator==(const PdValue&, const PdValue&) = default;
};

inline constexpr NodeId kNoMark = static_cast<NodeId>(-1);

/// Single-heuristic values. `marked` holds, for OR nodes, the first child
/// attaining the minimum (the edge marking of classic AO*).
struct FTable {
    std::vector<Cost> f;
    std::vector<Label> label;
    std::vector<NodeId> marked;
    friend bool operator==(const FTable&, const FTable&) = default;
};

struct PdTable {
    std::vector<PdValue> pd;
    std::vector<Label> label;
    friend bool operator==(const PdTable&, const PdTable&) = default;
};

/// f over the whole graph: solvable terminal 0, unsolvable terminal inf,
/// nonterminal leaf h, OR min(c + f), AND psi(c + f). Throws CyclicGraph.
FTable revise_f(const ExplicitGraph& g, CostScheme psi);

/// (p, d) over the whole graph. p follows the f rules; d mirrors them with
/// hbar at leaves, min at AND nodes and psi at OR nodes. Shared descendants
/// are not de-duplicated, so on DAGs values can exceed true certificate sizes.
PdTable revise_pd(const ExplicitGraph& g, CostScheme psi);

/// Proof and disproof numbers: revise_pd with h = hbar = 1, zero edge costs
/// and psi = Sum, whatever the graph says.
PdTable phi_delta_unit(const ExplicitGraph& g);

enum class UpdateRule {
    AllParents,   // every parent of a changed node is revisited
    MarkedParents // literal AO*: only parents reaching the node via a marked edge
};

/// Brings `table` up to date after `changed` received children (the table may
/// be shorter than the graph; appended nodes must be leaves). Only ancestors
/// of `changed` are revisited, each after all its pending descendants, and
/// propagation stops where value and label are unchanged. Returns the number
/// of nodes re-evaluated. Throws InconsistentTable.
std::size_t incremental_update(const ExplicitGraph& g, FTable& table, NodeId changed, CostScheme psi,
                               UpdateRule rule = UpdateRule::AllParents);
std::size_t incremental_update(const ExplicitGraph& g, PdTable& table, NodeId changed, CostScheme psi);

} // namespace andor

#endif // ANDOR_COST_CALCULUS_HPP
