#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "andor/error.hpp"
#include "andor/generators.hpp"
#include "andor/graph.hpp"
#include "andor/graph_io.hpp"
#include "andor/solution.hpp"
#include "support.hpp"

using namespace andor;
using namespace andor::testing;

namespace {

ErrorCode code_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an andor::Error");
    return ErrorCode::InvalidArgument;
}

NodeRecord rec(NodeId id, NodeKind kind, Terminal t = Terminal::Nonterminal)
{
    NodeRecord r;
    r.id = id;
    r.kind = kind;
    r.terminal = t;
    return r;
}

SolutionGraph sg(NodeId root, Polarity pol, std::set<NodeId> members, std::map<NodeId, NodeId> choice)
{
    return SolutionGraph{root, pol, std::move(members), std::move(choice)};
}

} // namespace

TEST_CASE("build_graph: fig1 is a six-node DAG with E shared")
{
    auto g = fixture(Fixture::Fig1);
    CHECK(g.size() == 6);
    CHECK(g.edge_count() == 6);
    CHECK(g.root() == A);
    auto ep = g.parents(E);
    CHECK(std::vector<NodeId>(ep.begin(), ep.end()) == std::vector<NodeId>{B, C});
    CHECK(g.node(A).kind == NodeKind::Or);
    CHECK(g.node(B).kind == NodeKind::And);
    CHECK(g.node(C).kind == NodeKind::Or);
    CHECK(validate(g).empty());
}

TEST_CASE("build_graph: single solvable terminal root")
{
    auto g = build_graph({rec(0, NodeKind::Or, Terminal::Solvable)}, {}, 0);
    CHECK(g.size() == 1);
    CHECK(validate(g).empty());
    CHECK(g.node(0).h == 0.0);
    CHECK(is_infinite(g.node(0).hbar));
}

TEST_CASE("build_graph: contract violations")
{
    std::vector<NodeRecord> two{rec(0, NodeKind::Or), rec(1, NodeKind::Or, Terminal::Solvable)};
    CHECK(code_of([&] { build_graph(two, {{0, 99, 0.0}}, 0); }) == ErrorCode::DanglingEdge);
    CHECK(code_of([&] { build_graph({rec(0, NodeKind::Or), rec(0, NodeKind::And)}, {}, 0); }) ==
          ErrorCode::DuplicateId);
    CHECK(code_of([&] { build_graph({rec(0, NodeKind::Or), rec(2, NodeKind::And)}, {}, 0); }) ==
          ErrorCode::SparseIds);
    CHECK(code_of([&] { build_graph(two, {{0, 1, -1.0}}, 0); }) == ErrorCode::NegativeCost);
    CHECK(code_of([&] { build_graph(two, {{1, 0, 0.0}}, 0); }) == ErrorCode::TerminalWithChildren);
    CHECK(code_of([&] { build_graph(two, {}, 7); }) == ErrorCode::UnknownNode);
}

TEST_CASE("build_graph: child order follows edge order")
{
    std::vector<NodeRecord> nodes{rec(0, NodeKind::Or), rec(1, NodeKind::Or), rec(2, NodeKind::Or)};
    auto g = build_graph(nodes, {{0, 2, 1.0}, {0, 1, 2.0}}, 0);
    REQUIRE(g.children(0).size() == 2);
    CHECK(g.children(0)[0].child == 2);
    CHECK(g.children(0)[1].child == 1);
    CHECK(g.children(0)[1].cost == 2.0);
}

TEST_CASE("validate: cycles and negative costs are reported, not thrown")
{
    std::vector<NodeRecord> nodes{rec(0, NodeKind::Or), rec(1, NodeKind::And)};
    auto cyc = build_graph(nodes, {{0, 1, 0.0}, {1, 0, 0.0}}, 0, BuildMode::Permissive);
    auto v = validate(cyc);
    REQUIRE(v.size() == 1);
    CHECK(v[0].kind == Violation::Kind::Cycle);

    auto neg = build_graph(nodes, {{0, 1, -1.0}}, 0, BuildMode::Permissive);
    v = validate(neg);
    REQUIRE(v.size() == 1);
    CHECK(v[0].kind == Violation::Kind::NegativeCost);

    std::vector<NodeRecord> term{rec(0, NodeKind::Or, Terminal::Unsolvable), rec(1, NodeKind::And)};
    auto tc = build_graph(term, {{0, 1, 0.0}}, 0, BuildMode::Permissive);
    v = validate(tc);
    REQUIRE(v.size() == 1);
    CHECK(v[0].kind == Violation::Kind::TerminalWithChildren);

    CHECK(code_of([&] { reverse_topological_order(cyc); }) == ErrorCode::CyclicGraph);
}

TEST_CASE("reverse_topological_order puts children first")
{
    auto g = fixture(Fixture::Fig1);
    auto order = reverse_topological_order(g);
    REQUIRE(order.size() == g.size());
    std::vector<std::size_t> pos(g.size());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    for (NodeId v = 0; v < g.size(); ++v) {
        for (const auto& e : g.children(v)) CHECK(pos[e.child] < pos[v]);
    }
}

TEST_CASE("dual: fig1 swaps kinds and keeps edges")
{
    auto g = fixture(Fixture::Fig1);
    auto d = dual(g);
    CHECK(d.node(A).kind == NodeKind::And);
    CHECK(d.node(B).kind == NodeKind::Or);
    CHECK(d.node(C).kind == NodeKind::And);
    CHECK(edge_specs(d).size() == edge_specs(g).size());
    for (NodeId v = 0; v < g.size(); ++v) {
        auto a = g.children(v);
        auto b = d.children(v);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].child == b[i].child);
            CHECK(a[i].cost == b[i].cost);
        }
    }
    CHECK(d.root() == g.root());
}

TEST_CASE("dual: terminal polarity and heuristics swap")
{
    auto g = fixture(Fixture::Fig4);
    auto d = dual(g);
    for (NodeId v = 0; v < g.size(); ++v) {
        CHECK(d.node(v).h == g.node(v).hbar);
        CHECK(d.node(v).hbar == g.node(v).h);
        if (g.node(v).terminal == Terminal::Solvable) CHECK(d.node(v).terminal == Terminal::Unsolvable);
        if (g.node(v).terminal == Terminal::Unsolvable) CHECK(d.node(v).terminal == Terminal::Solvable);
    }
}

TEST_CASE("dual: pure OR tree becomes pure AND tree")
{
    ExplicitGraph g;
    g.add_node(NodeKind::Or, Terminal::Nonterminal);
    g.add_node(NodeKind::Or, Terminal::Solvable);
    g.add_node(NodeKind::Or, Terminal::Unsolvable);
    g.add_edge(0, 1, 1.0);
    g.add_edge(0, 2, 2.0);
    auto d = dual(g);
    for (NodeId v = 0; v < d.size(); ++v) CHECK(d.node(v).kind == NodeKind::And);
    CHECK(d.children(0).size() == 2);
}

TEST_CASE("dual is an involution and generators emit valid graphs")
{
    for (std::size_t i = 0; i < 200; ++i) {
        auto g = random_andor_dag(dag_suite(i, i % 2 ? HeuristicMode::OracleAdmissible : HeuristicMode::Unit));
        CHECK(validate(g).empty());
        CHECK(dual(dual(g)) == g);
        CHECK(dual(g).root() == g.root());
        CHECK(dual(g).edge_count() == g.edge_count());
    }
    for (std::size_t i = 0; i < 100; ++i) {
        auto t = alternating_tree(tree_suite(i));
        CHECK(validate(t).empty());
        CHECK(dual(dual(t)) == t);
    }
}

TEST_CASE("validate_solution_graph: fig1 certificates")
{
    auto fig1 = fixture(Fixture::Fig1);

    SUBCASE("A->C->E proves A when E is solvable")
    {
        auto g = with_terminals(fig1, {{E, Terminal::Solvable}});
        CHECK(validate_solution_graph(g, sg(A, Polarity::Solvable, {A, C, E}, {{A, C}, {C, E}})));
    }
    SUBCASE("disproof with E and F unsolvable must cover both branches of A")
    {
        auto g = with_terminals(fig1, {{E, Terminal::Unsolvable}, {F, Terminal::Unsolvable}});
        // Only the C branch: A is an AND node in the dual and B is missing.
        CHECK_FALSE(validate_solution_graph(g, sg(A, Polarity::Unsolvable, {A, C, E, F}, {})));
        CHECK(validate_solution_graph(g, sg(A, Polarity::Unsolvable, {A, B, C, E, F}, {{B, E}})));
    }
    SUBCASE("A->B->D misses E under the AND node")
    {
        auto g = with_terminals(fig1, {{D, Terminal::Solvable}, {E, Terminal::Solvable}});
        CHECK_FALSE(validate_solution_graph(g, sg(A, Polarity::Solvable, {A, B, D}, {{A, B}})));
        CHECK(validate_solution_graph(g, sg(A, Polarity::Solvable, {A, B, D, E}, {{A, B}})));
    }
    SUBCASE("leaf status must match polarity")
    {
        auto g = with_terminals(fig1, {{E, Terminal::Unsolvable}});
        CHECK_FALSE(validate_solution_graph(g, sg(A, Polarity::Solvable, {A, C, E}, {{A, C}, {C, E}})));
        CHECK_FALSE(validate_solution_graph(fig1, sg(A, Polarity::Solvable, {A, C, E}, {{A, C}, {C, E}})));
    }
    SUBCASE("disconnected members and wrong choices are rejected")
    {
        auto g = with_terminals(fig1, {{E, Terminal::Solvable}, {F, Terminal::Solvable}});
        CHECK_FALSE(validate_solution_graph(g, sg(A, Polarity::Solvable, {A, C, E, F}, {{A, C}, {C, E}})));
        CHECK_FALSE(validate_solution_graph(g, sg(A, Polarity::Solvable, {A, C, E}, {{A, C}, {C, D}})));
        CHECK_FALSE(validate_solution_graph(g, sg(B, Polarity::Solvable, {A, C, E}, {{A, C}, {C, E}})));
    }
    SUBCASE("unknown nodes throw")
    {
        CHECK(code_of([&] { validate_solution_graph(fig1, sg(A, Polarity::Solvable, {A, 42}, {{A, 42}})); }) ==
              ErrorCode::UnknownNode);
    }
}

TEST_CASE("validate_solution_graph agrees with the dual reading")
{
    auto fig1 = fixture(Fixture::Fig1);
    auto g = with_terminals(fig1, {{D, Terminal::Solvable}, {E, Terminal::Unsolvable}, {F, Terminal::Unsolvable}});
    std::vector<SolutionGraph> candidates{
        sg(A, Polarity::Unsolvable, {A, B, C, E, F}, {{B, E}}),
        sg(A, Polarity::Unsolvable, {A, B, C, D, E, F}, {{B, D}}),
        sg(A, Polarity::Solvable, {A, C, E}, {{A, C}, {C, E}}),
        sg(A, Polarity::Solvable, {A, B, D, E}, {{A, B}}),
    };
    for (auto s : candidates) {
        const bool here = validate_solution_graph(g, s);
        s.polarity = flip(s.polarity);
        CHECK(here == validate_solution_graph(dual(g), s));
    }
}

TEST_CASE("solution_cost")
{
    auto fig1 = with_costs(fixture(Fixture::Fig1), 4.0);
    SUBCASE("A->C->E with costs 4 is 8")
    {
        auto g = with_terminals(fig1, {{E, Terminal::Solvable}});
        CHECK(solution_cost(g, sg(A, Polarity::Solvable, {A, C, E}, {{A, C}, {C, E}}), CostScheme::Sum) == 8.0);
    }
    SUBCASE("A->B->{D,E} with costs 4 is 12")
    {
        auto g = with_terminals(fig1, {{D, Terminal::Solvable}, {E, Terminal::Solvable}});
        auto s = sg(A, Polarity::Solvable, {A, B, D, E}, {{A, B}});
        CHECK(solution_cost(g, s, CostScheme::Sum) == 12.0);
        CHECK(solution_cost(g, s, CostScheme::Max) == 8.0);
    }
    SUBCASE("single solvable root costs 0")
    {
        auto g = build_graph({rec(0, NodeKind::Or, Terminal::Solvable)}, {}, 0);
        CHECK(solution_cost(g, sg(0, Polarity::Solvable, {0}, {}), CostScheme::Sum) == 0.0);
    }
    SUBCASE("invalid certificates throw")
    {
        auto g = with_terminals(fig1, {{D, Terminal::Solvable}, {E, Terminal::Solvable}});
        CHECK(code_of([&] { solution_cost(g, sg(A, Polarity::Solvable, {A, B, D}, {{A, B}}), CostScheme::Sum); }) ==
              ErrorCode::InvalidSolutionGraph);
    }
    SUBCASE("a shared node reached twice is paid twice")
    {
        // A:AND -> {B, C}, B:OR -> E, C:OR -> E, E solvable; all costs 1.
        ExplicitGraph g;
        g.add_node(NodeKind::And, Terminal::Nonterminal);
        g.add_node(NodeKind::Or, Terminal::Nonterminal);
        g.add_node(NodeKind::Or, Terminal::Nonterminal);
        g.add_node(NodeKind::Or, Terminal::Solvable);
        g.add_edge(0, 1, 1.0);
        g.add_edge(0, 2, 1.0);
        g.add_edge(1, 3, 1.0);
        g.add_edge(2, 3, 1.0);
        CHECK(solution_cost(g, sg(0, Polarity::Solvable, {0, 1, 2, 3}, {{1, 3}, {2, 3}}), CostScheme::Sum) == 4.0);
    }
}

TEST_CASE("certificate_leaves lists each leaf once in preorder")
{
    auto g = with_terminals(fixture(Fixture::Fig1), {{D, Terminal::Solvable}, {E, Terminal::Solvable}});
    auto leaves = certificate_leaves(g, sg(A, Polarity::Solvable, {A, B, D, E}, {{A, B}}));
    REQUIRE(leaves.size() == 2);
    CHECK(leaves[0].id == D);
    CHECK(leaves[1].id == E);
    CHECK(leaves[0].depth == 2);
}

TEST_CASE("JSON: round trip and defaults")
{
    for (std::size_t i = 0; i < 50; ++i) {
        auto g = random_andor_dag(dag_suite(i, HeuristicMode::OracleAdmissible));
        CHECK(parse_graph_json(graph_to_json(g)) == g);
    }
    auto g = parse_graph_json(R"({"root": 0,
        "nodes": [{"id": 1, "kind": "and", "terminal": "solvable"}, {"id": 0, "kind": "or"}],
        "edges": [{"from": 0, "to": 1}]})");
    CHECK(g.node(0).h == 1.0);
    CHECK(g.node(0).hbar == 1.0);
    CHECK(g.children(0)[0].cost == 0.0);
    CHECK(g.node(1).terminal == Terminal::Solvable);
}

TEST_CASE("JSON: serialisation never writes infinity")
{
    auto text = graph_to_json(fixture(Fixture::Fig6));
    CHECK(text.find("inf") == std::string::npos);
    CHECK(text.find("null") != std::string::npos);
}

TEST_CASE("JSON: errors")
{
    CHECK(code_of([] { parse_graph_json("{"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { parse_graph_json(R"({"root":0,"nodes":[{"id":0,"kind":"xor"}]})"); }) ==
          ErrorCode::ParseError);
    CHECK(code_of([] { parse_graph_json(R"({"root":0,"nodes":[{"id":0,"kind":"or","terminal":"maybe"}]})"); }) ==
          ErrorCode::ParseError);
    CHECK(code_of([] {
              parse_graph_json(R"({"root":0,"nodes":[{"id":0,"kind":"or"},{"id":1,"kind":"or"}],
                                   "edges":[{"from":0,"to":1},{"from":1,"to":0}]})");
          }) == ErrorCode::ValidationError);
    CHECK(code_of([] {
              parse_graph_json(R"({"root":0,"nodes":[{"id":0,"kind":"or"}],"edges":[{"from":0,"to":5}]})");
          }) == ErrorCode::ValidationError);
    CHECK(code_of([] { load_graph_file("/nonexistent/graph.json"); }) == ErrorCode::IoError);
    try {
        load_graph_file("/nonexistent/graph.json");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("/nonexistent/graph.json") != std::string::npos);
    }
}

TEST_CASE("JSON: save and load")
{
    auto path = std::filesystem::temp_directory_path() / "andor_graph_model_roundtrip.json";
    auto g = fixture(Fixture::Fig4);
    save_graph_file(g, path);
    CHECK(load_graph_file(path) == g);
    std::filesystem::remove(path);
}

TEST_CASE("shipped fixture files match the constructors")
{
    for (auto f : {Fixture::Fig1, Fixture::Fig1Terminalized, Fixture::Fig3, Fixture::Fig4, Fixture::Fig6}) {
        auto path = std::filesystem::path(ANDOR_FIXTURE_DIR) / (std::string(fixture_name(f)) + ".json");
        INFO(path.string());
        CHECK(load_graph_file(path) == fixture(f));
    }
}

TEST_CASE("ExplicitWorld serves the graph and refuses dead ends")
{
    auto g = fixture(Fixture::Fig6);
    ExplicitWorld world(g);
    CHECK(world.root().key == g.root());
    auto kids = world.expand(0);
    REQUIRE(kids.size() == 2);
    CHECK(kids[0].node.key == 1);
    CHECK(kids[0].node.kind == NodeKind::And);
    CHECK(materialize(world) == g);

    ExplicitWorld open(fixture(Fixture::Fig1));
    CHECK(code_of([&] { open.expand(E); }) == ErrorCode::DeadEnd);
}

TEST_CASE("materialize merges transpositions")
{
    TicTacToe game;
    auto g = materialize(game);
    CHECK(g.size() == 5478);
    CHECK(validate(g).empty());
    CHECK(code_of([&] { materialize(game, 100); }) == ErrorCode::InvalidParams);
}
