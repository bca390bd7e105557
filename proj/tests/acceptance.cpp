// Acceptance run: one PASS/FAIL line per criterion. Exits non-zero when any
// criterion fails. Usage: acceptance [CSV_PATH]
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "andor/compare.hpp"
#include "andor/cost_calculus.hpp"
#include "andor/error.hpp"
#include "andor/generators.hpp"
#include "andor/oracle.hpp"
#include "andor/search.hpp"
#include "support.hpp"

using namespace andor;
using namespace andor::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

// Audit totals from every search run in criteria 2 to 7.
std::uint64_t audit_mismatches = 0;
std::uint64_t audited_steps = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail)
{
    if (!ok) ++failures;
    std::printf("%s %d %s (%s)\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
    std::fflush(stdout);
}

SearchOptions audited()
{
    SearchOptions o;
    o.audit = true;
    return o;
}

void tally(const SearchOutcome& out)
{
    audit_mismatches += out.stats.audit_mismatches;
    audited_steps += out.stats.audited_steps;
}

std::vector<NodeKey> leaf_keys(const SearchOutcome& out)
{
    std::vector<NodeKey> keys;
    for (const auto& t : out.trace) keys.push_back(t.leaf);
    return keys;
}

std::string fmt(double x)
{
    std::ostringstream s;
    s << x;
    return s.str();
}

constexpr std::size_t kTrees = 1000;

void certificate_sizes()
{
    const auto t0 = Clock::now();
    const auto g = fixture(Fixture::Fig1Terminalized);
    const int prove = oracle::minimal_certificate(g, Polarity::Solvable);
    const int disprove = oracle::minimal_certificate(g, Polarity::Unsolvable);
    const double dt = seconds_since(t0);
    report(1, prove == 1 && disprove == 2 && dt < 1.0, "fig1 certificate sizes",
           "prove " + std::to_string(prove) + ", disprove " + std::to_string(disprove) + ", " + fmt(dt) + " s");
}

void pns_specialisation()
{
    const auto t0 = Clock::now();
    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < kTrees; ++i) {
        ExplicitWorld world(alternating_tree(tree_suite(i)));
        const auto tie = TieBreak::first_child();
        auto a = pns(world, tie, Budget::unlimited(), audited());
        auto b = pns_star(world, CostScheme::Sum, tie, Budget::unlimited(), audited());
        tally(a);
        tally(b);
        if (leaf_keys(a) != leaf_keys(b) || a.status != b.status) ++mismatches;
    }
    const double dt = seconds_since(t0);
    report(2, mismatches == 0 && dt < 60.0, "pns equals unit pns-star on trees",
           std::to_string(kTrees) + " trees, " + std::to_string(mismatches) + " mismatches, " + fmt(dt) + " s");
}

void ao_star_optimality()
{
    const auto t0 = Clock::now();
    std::size_t solved = 0, wrong = 0, invalid = 0;
    for (std::size_t i = 0; solved < 100 && i < 10'000; ++i) {
        const auto g = random_andor_dag(dag_suite(i, HeuristicMode::OracleAdmissible));
        const auto ref = oracle::exact_costs(g, CostScheme::Sum);
        if (!ref.solvable[g.root()]) continue;
        ++solved;
        ExplicitWorld world(g);
        auto out = ao_star(world, CostScheme::Sum, TieBreak::first_child(), {}, Budget::unlimited(), audited());
        tally(out);
        if (!out.solution || !validate_solution_graph(out.final_graph, *out.solution)) {
            ++invalid;
            continue;
        }
        if (solution_cost(out.final_graph, *out.solution, CostScheme::Sum) != ref.hstar[g.root()]) ++wrong;
    }
    const double dt = seconds_since(t0);
    report(3, solved == 100 && wrong == 0 && invalid == 0 && dt < 60.0, "AO* cost equals the optimum",
           std::to_string(solved) + " solvable dags, " + std::to_string(wrong) + " suboptimal, " +
               std::to_string(invalid) + " invalid, " + fmt(dt) + " s");
}

void descent_in_base()
{
    std::size_t steps = 0, violations = 0;
    for (std::size_t i = 0; i < kTrees; ++i) {
        ExplicitWorld world(alternating_tree(tree_suite(i)));
        const auto tie = TieBreak::first_child();
        SearchOptions opts = audited();
        opts.observer = [&](const ExplicitGraph& g, const PdTable&, NodeId leaf) {
            ++steps;
            auto base = select_solution_base(g, revise_f(g, CostScheme::Sum), tie);
            if (!base.members.contains(leaf) || !g.is_leaf(leaf)) ++violations;
        };
        tally(pns_star(world, CostScheme::Sum, tie, Budget::unlimited(), opts));
    }
    report(4, violations == 0 && steps > 0, "pns-star descent leaf lies in the AO* base",
           std::to_string(steps) + " steps, " + std::to_string(violations) + " violations");
}

void negamax_identity()
{
    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < 500; ++i) {
        TreeParams p;
        p.depth = 1 + i % 6;
        p.branching = 1 + (i / 6) % 3;
        p.terminal_prob = 0.0;
        p.leaf_value_max = static_cast<std::uint32_t>(1 + i % 20);
        p.seed = 7000 + i;
        const auto g = alternating_tree(p);
        std::map<NodeId, double> values;
        for (NodeId v = 0; v < g.size(); ++v) {
            if (!g.is_leaf(v)) continue;
            const double h = g.node(v).h;
            values[v] = g.node(v).kind == NodeKind::Or ? -h : h;
        }
        const auto t = revise_pd(g, CostScheme::Max);
        const auto& r = t.pd[g.root()];
        if (oracle::negamax(g, values) != -r.p || r.p + r.d != p.leaf_value_max) ++mismatches;
    }
    report(5, mismatches == 0, "max-scheme values reproduce negamax",
           "500 trees, " + std::to_string(mismatches) + " mismatches");
}

void reference_traces()
{
    constexpr NodeKey kC = 2, kD = 3, kE = 4;
    auto has = [](const std::vector<NodeKey>& keys, NodeKey k, std::size_t upto) {
        return std::find(keys.begin(), keys.begin() + static_cast<std::ptrdiff_t>(upto), k) !=
               keys.begin() + static_cast<std::ptrdiff_t>(upto);
    };
    auto both_before_c = [&](const std::vector<NodeKey>& keys) {
        const auto c = static_cast<std::size_t>(std::find(keys.begin(), keys.end(), kC) - keys.begin());
        return has(keys, kD, c) && has(keys, kE, c);
    };
    ExplicitWorld fig3(fixture(Fixture::Fig3));
    ExplicitWorld fig4(fixture(Fixture::Fig4));
    auto highest = ao_star(fig3, CostScheme::Sum, TieBreak::first_child(), {LeafPick::Policy::HighestH, 0},
                           Budget::unlimited(), audited());
    auto random = ao_star(fig3, CostScheme::Sum, TieBreak::first_child(), {LeafPick::Policy::AnyRandom, 0},
                          Budget::unlimited(), audited());
    auto dual = pns_star(fig4, CostScheme::Sum, TieBreak::first_child(), Budget::unlimited(), audited());
    for (const auto* o : {&highest, &random, &dual}) tally(*o);
    const auto dk = leaf_keys(dual);
    const bool ok = both_before_c(leaf_keys(highest)) && both_before_c(leaf_keys(random)) &&
                    has(dk, kD, dk.size()) && !has(dk, kE, dk.size()) &&
                    dual.status == SearchStatus::ProvedSolvable;
    report(6, ok, "fig3 adversarial AO* and fig4 pns-star traces",
           "ao-star highest-h " + std::to_string(highest.stats.expansions) + " exp, any-random " +
               std::to_string(random.stats.expansions) + " exp, pns-star " + std::to_string(dual.stats.expansions) +
               " exp without E");
}

void tictactoe()
{
    const auto t0 = Clock::now();
    TicTacToe game;
    auto out = pns(game, TieBreak::first_child(), Budget::expansions(100'000), audited());
    const double dt = seconds_since(t0);
    tally(out);
    const auto full = materialize(game);
    const bool oracle_win = oracle::solvability(full)[full.root()];
    const bool ok = out.status == SearchStatus::ProvedUnsolvable && !oracle_win &&
                    out.stats.expansions <= 100'000 && dt < 30.0;
    report(7, ok, "tic-tac-toe is not a first-player win",
           std::string(to_string(out.status)) + ", oracle " + (oracle_win ? "win" : "no win") + ", " +
               std::to_string(out.stats.expansions) + " exp, " + fmt(dt) + " s");
}

void audit_total()
{
    report(8, audit_mismatches == 0 && audited_steps > 0, "incremental tables equal full recomputation",
           std::to_string(audited_steps) + " audited steps, " + std::to_string(audit_mismatches) + " mismatches");
}

/// Fraction of PNS* steps on DAGs where the descent leaf is not the single
/// leaf shared by the proof and disproof bases. Informational only.
std::string dag_meeting_point(const std::vector<ExplicitGraph>& dags)
{
    std::size_t steps = 0, off = 0;
    for (std::size_t i = 0; i < 100 && i < dags.size(); ++i) {
        ExplicitWorld world(dags[i]);
        SearchOptions opts;
        opts.trace = false;
        opts.observer = [&](const ExplicitGraph& g, const PdTable&, NodeId leaf) {
            ++steps;
            auto proof = select_solution_base(g, revise_f(g, CostScheme::Sum), TieBreak::first_child());
            auto gd = dual(g);
            auto disproof = select_solution_base(gd, revise_f(gd, CostScheme::Sum), TieBreak::first_child());
            std::vector<NodeId> common;
            for (NodeId v : proof.members) {
                if (g.is_leaf(v) && disproof.members.contains(v)) common.push_back(v);
            }
            if (common != std::vector<NodeId>{leaf}) ++off;
        };
        pns_star(world, CostScheme::Sum, TieBreak::first_child(), Budget::unlimited(), opts);
    }
    return std::to_string(off) + " of " + std::to_string(steps) + " steps off the meeting point";
}

void compare_report(const std::string& csv_path)
{
    std::vector<ExplicitGraph> dags;
    std::vector<NamedWorld> worlds;
    for (std::uint64_t s = 0; s < 500; ++s) {
        DagParams p;
        p.heuristic_mode = HeuristicMode::OracleAdmissible;
        p.seed = s;
        dags.push_back(random_andor_dag(p));
        worlds.push_back({"dag" + std::to_string(s), std::make_shared<ExplicitWorld>(dags.back())});
    }
    RunConfig ao;
    ao.algorithm = Algorithm::AoStar;
    RunConfig ps;
    const auto rows = compare(worlds, {{"ao-star", ao}, {"pns-star", ps}}, 4);
    std::ofstream csv(csv_path);
    write_compare_csv(csv, rows);
    csv.close();
    const bool written = static_cast<bool>(csv) && rows.size() == 1000;
    const auto summary = summarize(rows);
    write_summary(std::cout, summary);
    std::cout.flush();
    std::string detail = "csv " + csv_path;
    for (const auto& s : summary) detail += ", " + s.algorithm + " mean " + fmt(s.mean_expansions);
    detail += "; dags: " + dag_meeting_point(dags);
    report(9, written, "ao-star vs pns-star report over 500 dags", detail);
}

template <class F>
void guarded(int id, const char* what, F&& f)
{
    try {
        f();
    } catch (const std::exception& e) {
        report(id, false, what, std::string("threw: ") + e.what());
    }
}

} // namespace

int main(int argc, char** argv)
{
    const std::string csv = argc > 1 ? argv[1] : "acceptance_compare.csv";
    guarded(1, "fig1 certificate sizes", certificate_sizes);
    guarded(2, "pns equals unit pns-star on trees", pns_specialisation);
    guarded(3, "AO* cost equals the optimum", ao_star_optimality);
    guarded(4, "pns-star descent leaf lies in the AO* base", descent_in_base);
    guarded(5, "max-scheme values reproduce negamax", negamax_identity);
    guarded(6, "fig3 adversarial AO* and fig4 pns-star traces", reference_traces);
    guarded(7, "tic-tac-toe is not a first-player win", tictactoe);
    guarded(8, "incremental tables equal full recomputation", audit_total);
    guarded(9, "ao-star vs pns-star report over 500 dags", [&] { compare_report(csv); });
    std::printf("%d failed\n", failures);
    return failures == 0 ? 0 : 1;
}
