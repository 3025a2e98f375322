#pragma once

// Quantum cluster variables by mutation, cluster monomials, and standard monomials.

#include "qgreedy/torus.hpp"

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <tuple>

namespace qgreedy {

/// Cluster variables keyed by (b, c, m): always in memory, and on disk when a
/// directory is configured (one JSON file per entry, written atomically).
class ClusterCache {
public:
    ClusterCache() = default;
    explicit ClusterCache(std::filesystem::path directory);

    ClusterCache(const ClusterCache&) = delete;
    ClusterCache& operator=(const ClusterCache&) = delete;

    std::optional<TorusElement> find(int b, int c, int m);
    void store(int b, int c, int m, const TorusElement& x);

    /// Entries on disk when a directory is set, otherwise entries in memory.
    [[nodiscard]] std::size_t size() const;
    void clear();

    [[nodiscard]] const std::optional<std::filesystem::path>& directory() const noexcept { return dir_; }
    [[nodiscard]] std::filesystem::path entry_path(int b, int c, int m) const;

    /// In-memory cache shared by calls that do not name one.
    static ClusterCache& process_default();

private:
    std::optional<std::filesystem::path> dir_;
    mutable std::mutex mutex_;
    std::map<std::tuple<int, int, int>, TorusElement> memory_;
};

/// X_m expanded in the initial torus, by iterated mutation from (X1, X2).
/// Throws InternalInconsistency if a mutation step is not an exact division.
TorusElement cluster_variable(int b, int c, int m, ClusterCache& cache = ClusterCache::process_default());

/// Neighboring cluster variables, both expanded in the initial torus.
struct ClusterPair {
    ClusterIndex m;
    TorusElement first;  // X_m
    TorusElement second; // X_{m+1}

    /// second * first == v^2 first * second
    [[nodiscard]] bool quasi_commutes() const;
};

ClusterPair cluster_pair(int b, int c, ClusterIndex m, ClusterCache& cache = ClusterCache::process_default());

/// v^{a1 a2} X_m^{a1} X_{m+1}^{a2} for a1, a2 >= 0, expanded in the initial torus.
TorusElement quantum_cluster_monomial(int b, int c, int m, int a1, int a2,
                                      ClusterCache& cache = ClusterCache::process_default());

/// M[a1,a2] = v^{a1 a2} X3^{[a1]+} X1^{[-a1]+} X2^{[-a2]+} X0^{[a2]+}, multiplied in that order.
TorusElement standard_monomial(int b, int c, int a1, int a2, ClusterCache& cache = ClusterCache::process_default());

/// Cluster monomial X_m^{(alpha, beta)} pointed at a given vector.
struct ClusterMonomialIndex {
    int m = 1;
    int alpha = 0;
    int beta = 0;
};

/// Searches clusters m in [1 - radius, 1 + radius] for a cluster monomial pointed
/// at (a1, a2), using the pointing vectors of the mutated cluster variables.
std::optional<ClusterMonomialIndex> find_cluster_monomial(int b, int c, int a1, int a2, int radius,
                                                          ClusterCache& cache = ClusterCache::process_default());

} // namespace qgreedy
