#ifndef ANDOR_ORACLE_HPP
#define ANDOR_ORACLE_HPP

#include <map>
#include <optional>
#include <vector>

#include "andor/graph.hpp"
#include "andor/solution.hpp"

// Ground truth on fully materialised graphs. Nothing in here calls into the
// search or cost_calculus code, so cross-checks against them are independent.
namespace andor::oracle {

struct OracleReport {
    std::vector<Cost> hstar;     // optimal proof cost per node
    std::vector<Cost> hbar_star; // optimal disproof cost (proof cost in the dual)
    std::vector<bool> solvable;
};

/// Optimal costs by memoised recursion. Every leaf must be terminal.
/// Throws NonterminalLeaf or CyclicGraph.
OracleReport exact_costs(const ExplicitGraph& g, CostScheme psi);

/// Boolean AND/OR evaluation of every node. Same preconditions as exact_costs.
std::vector<bool> solvability(const ExplicitGraph& g);

/// Smallest number of leaves that, assumed to carry the given polarity while
/// every other leaf stays unknown, force the root to that polarity. Leaf
/// statuses in `g` are ignored; only the structure matters. Exhaustive over
/// leaf subsets, so at most 20 leaves (TooManyLeaves otherwise).
int minimal_certificate(const ExplicitGraph& g, Polarity polarity);

/// Negamax value of the root: each node is the max over its children of the
/// negated child value; leaves take `leaf_values` (from the viewpoint of the
/// player to move there). OR and AND layers must alternate (NotAlternating).
double negamax(const ExplicitGraph& g, const std::map<NodeId, double>& leaf_values);

} // namespace andor::oracle

#endif // ANDOR_ORACLE_HPP
