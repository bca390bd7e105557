// Internal: explicit-graph growth shared by the engines.
#ifndef ANDOR_SRC_GROWTH_HPP
#define ANDOR_SRC_GROWTH_HPP

#include <optional>
#include <vector>

#include "andor/search.hpp"

namespace andor::detail {

/// How world estimates are rewritten as nodes enter the explicit graph.
struct Instantiation {
    bool unit = false;       // h = hbar = 1
    bool zero_costs = false; // every edge cost 0
    bool zero_hbar = false;  // hbar = 0
    std::optional<Cost> minimax_scale; // hbar = scale - h
};

class Growth {
public:
    Growth(const ImplicitGraph& world, Instantiation inst, SearchStats& stats);

    ExplicitGraph& graph() noexcept { return g_; }
    const ExplicitGraph& graph() const noexcept { return g_; }

    /// Expands a nonterminal leaf; transpositions merge by key. Throws
    /// CyclicGraph if an edge would close a cycle.
    void expand(NodeId leaf);

    bool exhausted(const Budget& budget) const;

private:
    NodeId intern(const WorldNode& w, bool& fresh);
    bool reaches(NodeId from, NodeId target);

    const ImplicitGraph& world_;
    Instantiation inst_;
    SearchStats& stats_;
    ExplicitGraph g_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t epoch_ = 0;
};

/// Certificate built from labels: choosing nodes take, among children carrying
/// the wanted label, the one with the smallest rank (ties per `tie`).
template <class Rank>
SolutionGraph extract_certificate(const ExplicitGraph& g, const std::vector<Label>& label,
                                  Polarity polarity, const TieBreak& tie, Rank&& rank);

} // namespace andor::detail

#include "growth_impl.hpp"

#endif // ANDOR_SRC_GROWTH_HPP
