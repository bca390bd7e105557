#ifndef ANDOR_COMPARE_HPP
#define ANDOR_COMPARE_HPP

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "andor/search.hpp"

namespace andor {

struct NamedWorld {
    std::string name;
    std::shared_ptr<const ImplicitGraph> world;
};

struct AlgorithmSpec {
    std::string label; // CSV "algorithm" column
    RunConfig config;
};

struct CompareRow {
    std::string instance;
    std::string algorithm;
    SearchStatus status = SearchStatus::ResourceExhausted;
    std::uint64_t expansions = 0;
    std::uint64_t nodes_generated = 0;
    std::uint64_t iterations = 0;
    friend bool operator==(const CompareRow&, const CompareRow&) = default;
};

/// Runs every algorithm on every world. Rows come back in (instance, algorithm)
/// order whatever `threads` is; each run owns its engine. Traces are switched
/// off. The first failing run (in row order) has its error rethrown.
std::vector<CompareRow> compare(const std::vector<NamedWorld>& worlds, const std::vector<AlgorithmSpec>& algorithms,
                                unsigned threads = 1);

inline constexpr const char* kCompareCsvHeader = "instance,algorithm,status,expansions,nodes_generated,iterations";

void write_compare_csv(std::ostream& out, const std::vector<CompareRow>& rows);

struct CompareSummary {
    std::string algorithm;
    std::size_t runs = 0;
    std::size_t proved = 0;
    double mean_expansions = 0.0;
};

/// One entry per algorithm label, in first-appearance order.
std::vector<CompareSummary> summarize(const std::vector<CompareRow>& rows);

void write_summary(std::ostream& out, const std::vector<CompareSummary>& summary);

} // namespace andor

#endif // ANDOR_COMPARE_HPP
