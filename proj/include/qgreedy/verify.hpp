#pragma once

// Named verification suites with machine-readable results.

#include "qgreedy/scan.hpp"

#include <string>
#include <vector>

namespace qgreedy {

struct VerifyItem {
    std::string name;
    bool pass = true;
    /// Evidence items record observations and never fail the suite.
    bool evidence = false;
    Json witness = Json::object();
};

struct VerifyResult {
    std::string suite;
    std::vector<VerifyItem> items;

    [[nodiscard]] bool pass() const;
    /// First failing non-evidence item, if any.
    [[nodiscard]] const VerifyItem* first_failure() const;
};

/// paper-examples, finite-type, axioms, triangular, conjecture-evidence
const std::vector<std::string>& verify_suites();

/// Throws InvalidArgument for an unknown suite name.
VerifyResult verify(const std::string& suite, ClusterCache& cache = ClusterCache::process_default(),
                    unsigned threads = 0);

Json to_json(const VerifyResult& result);

} // namespace qgreedy
