#ifndef ANDOR_SOLUTION_HPP
#define ANDOR_SOLUTION_HPP

#include <map>
#include <set>

#include "andor/graph.hpp"

namespace andor {

enum class Polarity { Solvable, Unsolvable };

inline constexpr Polarity flip(Polarity p) noexcept
{
    return p == Polarity::Solvable ? Polarity::Unsolvable : Polarity::Solvable;
}

/// Certificate sub-graph. For Solvable polarity, OR members choose one child
/// and AND members take all; Unsolvable polarity is the same reading on the
/// dual graph (AND members choose, OR members take all). A solution base is a
/// SolutionGraph whose leaves may still be nonterminal.
struct SolutionGraph {
    NodeId root = 0;
    Polarity polarity = Polarity::Solvable;
    std::set<NodeId> members;
    std::map<NodeId, NodeId> choice;

    friend bool operator==(const SolutionGraph&, const SolutionGraph&) = default;
};

/// True iff `s` is a complete certificate of its polarity inside `g`.
/// Throws UnknownNode if `s` names a node outside `g`.
bool validate_solution_graph(const ExplicitGraph& g, const SolutionGraph& s);

/// Cost of a Solvable certificate evaluated over the certificate only. Shared
/// nodes are counted once per incoming certificate edge, matching the
/// recursive definition of h*. Throws InvalidSolutionGraph.
Cost solution_cost(const ExplicitGraph& g, const SolutionGraph& s, CostScheme psi);

/// Leaves of a (partial) certificate in depth-first preorder along child
/// order, each reported once with the depth of its first visit.
struct BaseLeaf {
    NodeId id;
    std::size_t depth;
};
std::vector<BaseLeaf> certificate_leaves(const ExplicitGraph& g, const SolutionGraph& s);

} // namespace andor

#endif // ANDOR_SOLUTION_HPP
