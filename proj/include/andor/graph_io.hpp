#ifndef ANDOR_GRAPH_IO_HPP
#define ANDOR_GRAPH_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "andor/graph.hpp"
#include "andor/solution.hpp"

namespace andor {

/// Parses the graph JSON format:
///   {"root": 0,
///    "nodes": [{"id": 0, "kind": "or", "terminal": null, "h": 4.0, "hbar": 4.0}, ...],
///    "edges": [{"from": 0, "to": 1, "cost": 4.0}, ...]}
/// h/hbar default to 1, cost to 0. Edge order is the child order. The result
/// is built strictly and validated; throws ParseError or ValidationError.
ExplicitGraph parse_graph_json(std::string_view text);

/// Throws IoError (naming the path), ParseError or ValidationError.
ExplicitGraph load_graph_file(const std::filesystem::path& path);

/// Deterministic serialisation: nodes by id, edges grouped by source in child
/// order, two-space indentation. Terminals carry no h/hbar.
std::string graph_to_json(const ExplicitGraph& g);

void save_graph_file(const ExplicitGraph& g, const std::filesystem::path& path);

/// Certificate as JSON; node references are the graph keys.
std::string solution_to_json(const ExplicitGraph& g, const SolutionGraph& s);

} // namespace andor

#endif // ANDOR_GRAPH_IO_HPP
