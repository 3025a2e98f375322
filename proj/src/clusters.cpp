#include "qgreedy/clusters.hpp"

#include "qgreedy/errors.hpp"
#include "qgreedy/pointed.hpp"
#include "qgreedy/serialize.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <system_error>
#include <thread>

namespace qgreedy {

namespace fs = std::filesystem;

namespace {

void require_params(int b, int c) {
    if (b < 1 || c < 1) throw InvalidArgument("b and c must be positive");
}

// v^d X^d + 1
TorusElement exchange_numerator(const TorusElement& x, int d) {
    return LaurentV::monomial(d) * te_pow(x, d) + 1;
}

std::string params_dir(int b, int c) { return "b" + std::to_string(b) + "_c" + std::to_string(c); }

} // namespace

ClusterCache::ClusterCache(fs::path directory) : dir_(std::move(directory)) {}

fs::path ClusterCache::entry_path(int b, int c, int m) const {
    if (!dir_) throw InvalidArgument("cluster cache has no directory");
    return *dir_ / params_dir(b, c) / ("m" + std::to_string(m) + ".json");
}

std::optional<TorusElement> ClusterCache::find(int b, int c, int m) {
    std::lock_guard lock(mutex_);
    if (auto it = memory_.find({b, c, m}); it != memory_.end()) return it->second;
    if (!dir_) return std::nullopt;
    const fs::path path = entry_path(b, c, m);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    TorusElement x;
    try {
        x = torus_from_json(Json::parse(in));
    } catch (const std::exception& e) {
        throw Error("corrupted cluster cache entry " + path.string() + ": " + e.what());
    }
    memory_.emplace(std::tuple{b, c, m}, x);
    return x;
}

void ClusterCache::store(int b, int c, int m, const TorusElement& x) {
    std::lock_guard lock(mutex_);
    memory_.insert_or_assign(std::tuple{b, c, m}, x);
    if (!dir_) return;
    const fs::path path = entry_path(b, c, m);
    fs::create_directories(path.parent_path());
    std::ostringstream suffix;
    suffix << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id());
    const fs::path tmp = path.string() + suffix.str();
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw Error("cannot write cluster cache entry " + tmp.string());
        out << to_json(x).dump() << '\n';
        if (!out) throw Error("cannot write cluster cache entry " + tmp.string());
    }
    fs::rename(tmp, path);
}

std::size_t ClusterCache::size() const {
    std::lock_guard lock(mutex_);
    if (!dir_) return memory_.size();
    if (!fs::exists(*dir_)) return 0;
    std::size_t n = 0;
    for (const auto& entry : fs::recursive_directory_iterator(*dir_))
        if (entry.is_regular_file() && entry.path().extension() == ".json") ++n;
    return n;
}

void ClusterCache::clear() {
    std::lock_guard lock(mutex_);
    memory_.clear();
    if (!dir_ || !fs::exists(*dir_)) return;
    for (const auto& entry : fs::directory_iterator(*dir_)) fs::remove_all(entry.path());
}

ClusterCache& ClusterCache::process_default() {
    static ClusterCache cache;
    return cache;
}

TorusElement cluster_variable(int b, int c, int m, ClusterCache& cache) {
    require_params(b, c);
    if (auto hit = cache.find(b, c, m)) return std::move(*hit);
    if (m == 1 || m == 2) {
        TorusElement x = m == 1 ? TorusElement::monomial(1, 0) : TorusElement::monomial(0, 1);
        cache.store(b, c, m, x);
        return x;
    }
    TorusElement x;
    if (m >= 3) {
        // X_m = (v^d X_{m-1}^d + 1) X_{m-2}^-1 with d from the parity of m - 1
        const TorusElement prev = cluster_variable(b, c, m - 1, cache);
        const TorusElement prev2 = cluster_variable(b, c, m - 2, cache);
        auto q = exact_divide(exchange_numerator(prev, exchange_exponent(m - 1, b, c)), prev2);
        if (!q) throw InternalInconsistency("mutation to X_" + std::to_string(m) + " is not an exact division");
        x = std::move(*q);
    } else {
        // X_m = X_{m+2}^-1 (v^d X_{m+1}^d + 1) with d from the parity of m + 1
        const TorusElement next = cluster_variable(b, c, m + 1, cache);
        const TorusElement next2 = cluster_variable(b, c, m + 2, cache);
        auto q = exact_left_divide(exchange_numerator(next, exchange_exponent(m + 1, b, c)), next2);
        if (!q) throw InternalInconsistency("mutation to X_" + std::to_string(m) + " is not an exact division");
        x = std::move(*q);
    }
    cache.store(b, c, m, x);
    return x;
}

bool ClusterPair::quasi_commutes() const { return second * first == LaurentV::monomial(2) * (first * second); }

ClusterPair cluster_pair(int b, int c, ClusterIndex m, ClusterCache& cache) {
    return ClusterPair{m, cluster_variable(b, c, m.m, cache), cluster_variable(b, c, m.m + 1, cache)};
}

TorusElement quantum_cluster_monomial(int b, int c, int m, int a1, int a2, ClusterCache& cache) {
    if (a1 < 0 || a2 < 0) throw InvalidArgument("quantum_cluster_monomial: exponents must be nonnegative");
    TorusElement out = TorusElement(LaurentV::monomial(a1 * a2));
    if (a1 > 0) out = out * te_pow(cluster_variable(b, c, m, cache), a1);
    if (a2 > 0) out = out * te_pow(cluster_variable(b, c, m + 1, cache), a2);
    return out;
}

TorusElement standard_monomial(int b, int c, int a1, int a2, ClusterCache& cache) {
    require_params(b, c);
    TorusElement out = TorusElement(LaurentV::monomial(a1 * a2));
    if (a1 > 0) out = out * te_pow(cluster_variable(b, c, 3, cache), a1);
    if (a1 < 0) out = out * TorusElement::monomial(-a1, 0);
    if (a2 < 0) out = out * TorusElement::monomial(0, -a2);
    if (a2 > 0) out = out * te_pow(cluster_variable(b, c, 0, cache), a2);
    return out;
}

std::optional<ClusterMonomialIndex> find_cluster_monomial(int b, int c, int a1, int a2, int radius,
                                                          ClusterCache& cache) {
    if (a1 == 0 && a2 == 0) return ClusterMonomialIndex{1, 0, 0};
    auto pointing = [&](int m) {
        const PointedElement x = to_pointed(cluster_variable(b, c, m, cache), b, c);
        return std::pair{static_cast<long long>(x.a1()), static_cast<long long>(x.a2())};
    };
    for (int m = 1 - radius; m <= 1 + radius; ++m) {
        const auto [g1, g2] = pointing(m);
        const auto [h1, h2] = pointing(m + 1);
        const long long det = g1 * h2 - g2 * h1;
        if (det == 0) continue;
        const long long an = static_cast<long long>(a1) * h2 - static_cast<long long>(a2) * h1;
        const long long bn = g1 * a2 - g2 * static_cast<long long>(a1);
        if (an % det != 0 || bn % det != 0) continue;
        const long long alpha = an / det;
        const long long beta = bn / det;
        if (alpha >= 0 && beta >= 0) return ClusterMonomialIndex{m, static_cast<int>(alpha), static_cast<int>(beta)};
    }
    return std::nullopt;
}

} // namespace qgreedy
