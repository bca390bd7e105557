#include "andor/compare.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <iomanip>
#include <ostream>
#include <thread>

namespace andor {

std::vector<CompareRow> compare(const std::vector<NamedWorld>& worlds, const std::vector<AlgorithmSpec>& algorithms,
                                unsigned threads)
{
    const std::size_t total = worlds.size() * algorithms.size();
    std::vector<CompareRow> rows(total);
    std::vector<std::exception_ptr> errors(total);

    auto run_one = [&](std::size_t i) {
        const auto& w = worlds[i / algorithms.size()];
        const auto& a = algorithms[i % algorithms.size()];
        CompareRow& row = rows[i];
        row.instance = w.name;
        row.algorithm = a.label;
        try {
            RunConfig cfg = a.config;
            cfg.options.trace = false;
            auto out = solve(*w.world, cfg);
            row.status = out.status;
            row.expansions = out.stats.expansions;
            row.nodes_generated = out.stats.nodes_generated;
            row.iterations = out.stats.iterations;
        } catch (...) {
            errors[i] = std::current_exception();
        }
    };

    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(total, 1))));
    if (threads == 1) {
        for (std::size_t i = 0; i < total; ++i) run_one(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < total; i = next++) run_one(i);
            });
        }
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return rows;
}

void write_compare_csv(std::ostream& out, const std::vector<CompareRow>& rows)
{
    out << kCompareCsvHeader << '\n';
    for (const auto& r : rows) {
        out << r.instance << ',' << r.algorithm << ',' << to_string(r.status) << ',' << r.expansions << ','
            << r.nodes_generated << ',' << r.iterations << '\n';
    }
}

std::vector<CompareSummary> summarize(const std::vector<CompareRow>& rows)
{
    std::vector<CompareSummary> out;
    for (const auto& r : rows) {
        auto it = std::find_if(out.begin(), out.end(), [&](const auto& s) { return s.algorithm == r.algorithm; });
        if (it == out.end()) {
            out.push_back({r.algorithm, 0, 0, 0.0});
            it = std::prev(out.end());
        }
        ++it->runs;
        if (r.status != SearchStatus::ResourceExhausted) ++it->proved;
        it->mean_expansions += static_cast<double>(r.expansions);
    }
    for (auto& s : out) s.mean_expansions /= static_cast<double>(s.runs);
    return out;
}

void write_summary(std::ostream& out, const std::vector<CompareSummary>& summary)
{
    out << std::left << std::setw(14) << "algorithm" << std::right << std::setw(8) << "runs" << std::setw(8)
        << "proved" << std::setw(16) << "mean_expansions" << '\n';
    for (const auto& s : summary) {
        out << std::left << std::setw(14) << s.algorithm << std::right << std::setw(8) << s.runs << std::setw(8)
            << s.proved << std::setw(16) << std::fixed << std::setprecision(3) << s.mean_expansions << '\n';
    }
    out.unsetf(std::ios::floatfield);
}

} // namespace andor
