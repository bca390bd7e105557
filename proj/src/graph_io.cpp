#include "andor/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "andor/error.hpp"

namespace andor {

using nlohmann::json;

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

double number_or(const json& obj, const char* field, double fallback)
{
    auto it = obj.find(field);
    if (it == obj.end() || it->is_null()) return fallback;
    if (!it->is_number()) parse_error(std::string("field '") + field + "' must be a number");
    return it->get<double>();
}

NodeId node_id(const json& obj, const char* field)
{
    auto it = obj.find(field);
    if (it == obj.end() || !it->is_number_integer() || it->get<std::int64_t>() < 0 ||
        it->get<std::int64_t>() > std::numeric_limits<NodeId>::max())
        parse_error(std::string("field '") + field + "' must be a non-negative integer");
    return it->get<NodeId>();
}

} // namespace

ExplicitGraph parse_graph_json(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        parse_error(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) parse_error("top level must be an object");
    if (!doc.contains("nodes") || !doc["nodes"].is_array()) parse_error("'nodes' must be an array");
    if (doc.contains("edges") && !doc["edges"].is_array()) parse_error("'edges' must be an array");

    std::vector<NodeRecord> nodes;
    for (const auto& n : doc["nodes"]) {
        if (!n.is_object()) parse_error("each node must be an object");
        NodeRecord r;
        r.id = node_id(n, "id");
        const std::string kind = n.value("kind", "");
        if (kind == "or") r.kind = NodeKind::Or;
        else if (kind == "and") r.kind = NodeKind::And;
        else parse_error("node " + std::to_string(r.id) + ": kind must be \"and\" or \"or\"");
        auto t = n.find("terminal");
        if (t == n.end() || t->is_null()) r.terminal = Terminal::Nonterminal;
        else if (*t == "solvable") r.terminal = Terminal::Solvable;
        else if (*t == "unsolvable") r.terminal = Terminal::Unsolvable;
        else parse_error("node " + std::to_string(r.id) + ": terminal must be null, \"solvable\" or \"unsolvable\"");
        r.h = number_or(n, "h", 1.0);
        r.hbar = number_or(n, "hbar", 1.0);
        nodes.push_back(r);
    }
    if (nodes.empty()) parse_error("graph has no nodes");
    std::vector<EdgeSpec> edges;
    if (doc.contains("edges")) {
        for (const auto& e : doc["edges"]) {
            if (!e.is_object()) parse_error("each edge must be an object");
            edges.push_back({node_id(e, "from"), node_id(e, "to"), number_or(e, "cost", 0.0)});
        }
    }
    const NodeId root = node_id(doc, "root");

    ExplicitGraph g;
    try {
        g = build_graph(std::move(nodes), edges, root, BuildMode::Strict);
    } catch (const Error& e) {
        throw Error(ErrorCode::ValidationError, std::string(to_string(e.code())) + ": " + e.what());
    }
    auto violations = validate(g);
    if (!violations.empty()) throw Error(ErrorCode::ValidationError, violations.front().message);
    return g;
}

ExplicitGraph load_graph_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot open graph file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_graph_json(buf.str());
    } catch (const Error& e) {
        throw Error(e.code(), path.string() + ": " + e.what());
    }
}

std::string graph_to_json(const ExplicitGraph& g)
{
    json nodes = json::array();
    json edges = json::array();
    for (NodeId v = 0; v < g.size(); ++v) {
        const auto& r = g.node(v);
        json n = {{"id", v}, {"kind", r.kind == NodeKind::Or ? "or" : "and"}};
        switch (r.terminal) {
        case Terminal::Nonterminal:
            n["terminal"] = nullptr;
            n["h"] = r.h;
            n["hbar"] = r.hbar;
            break;
        case Terminal::Solvable: n["terminal"] = "solvable"; break;
        case Terminal::Unsolvable: n["terminal"] = "unsolvable"; break;
        }
        nodes.push_back(std::move(n));
        for (const auto& e : g.children(v)) edges.push_back({{"from", v}, {"to", e.child}, {"cost", e.cost}});
    }
    json doc = {{"root", g.root()}, {"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
    return doc.dump(2) + "\n";
}

void save_graph_file(const ExplicitGraph& g, const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path.string() + "'");
    out << graph_to_json(g);
    if (!out) throw Error(ErrorCode::IoError, "write to '" + path.string() + "' failed");
}

std::string solution_to_json(const ExplicitGraph& g, const SolutionGraph& s)
{
    json members = json::array();
    for (NodeId v : s.members) members.push_back(g.node(v).key);
    json choice = json::array();
    for (auto [from, to] : s.choice) choice.push_back({{"node", g.node(from).key}, {"child", g.node(to).key}});
    json doc = {{"root", g.node(s.root).key},
                {"polarity", s.polarity == Polarity::Solvable ? "solvable" : "unsolvable"},
                {"members", std::move(members)},
                {"choice", std::move(choice)}};
    return doc.dump(2) + "\n";
}

} // namespace andor
