#pragma once

// Batch checks over the grid 0 <= a1, a2 <= bound, run on a worker pool.

#include "qgreedy/bases.hpp"
#include "qgreedy/serialize.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qgreedy {

enum class Check {
    GreedyPositivity,  // greedy-positivity
    Divisibility,      // divisibility
    Support,           // support
    TieConsistency,    // tie-consistency
    RPositivity,       // r-positivity
    TriangularSupport, // triangular-support
    Domination,        // domination: C[a] - X[a] has nonnegative coefficients
};

std::string to_string(Check check);
std::optional<Check> parse_check(const std::string& name);
const std::vector<Check>& all_checks();

struct ScanOptions {
    int b = 1;
    int c = 1;
    int bound = 0;
    std::vector<Check> checks;
    /// Positivity is checked in the clusters -cluster_range <= m <= cluster_range
    /// as well as the initial cluster m = 1.
    int cluster_range = 0;
    /// 0 = hardware concurrency.
    unsigned threads = 0;
};

struct ScanEntry {
    IndexVector a;
    Check check = Check::GreedyPositivity;
    bool pass = true;
    Json witness = Json::object();
};

struct ScanReport {
    int b = 1;
    int c = 1;
    int bound = 0;
    std::vector<Check> checks;
    /// Sorted by (a1, a2), then by the order of checks.
    std::vector<ScanEntry> results;
    std::vector<int> clusters_covered;

    [[nodiscard]] std::vector<IndexVector> failures(Check check) const;
    [[nodiscard]] bool all_pass() const;
};

/// Runs the checks for one pointing vector; options.bound is ignored.
std::vector<ScanEntry> run_checks(const ScanOptions& options, IndexVector a,
                                  ClusterCache& cache = ClusterCache::process_default());

/// Never throws for a failing cell: errors raised inside a cell become failing
/// entries whose witness carries the message.
ScanReport scan(const ScanOptions& options, ClusterCache& cache = ClusterCache::process_default());

Json to_json(const ScanReport& report);
ScanReport scan_report_from_json(const Json& j);

} // namespace qgreedy
