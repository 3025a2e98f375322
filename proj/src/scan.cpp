#include "qgreedy/scan.hpp"

#include "qgreedy/errors.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace qgreedy {

namespace {

constexpr std::pair<Check, const char*> kCheckNames[] = {
    {Check::GreedyPositivity, "greedy-positivity"},
    {Check::Divisibility, "divisibility"},
    {Check::Support, "support"},
    {Check::TieConsistency, "tie-consistency"},
    {Check::RPositivity, "r-positivity"},
    {Check::TriangularSupport, "triangular-support"},
    {Check::Domination, "domination"},
};

Json not_applicable() { return Json{{"applicable", false}}; }

Json error_witness(const std::exception& e) { return Json{{"error", e.what()}}; }

std::optional<Json> first_negative(const TorusElement& f) {
    for (const auto& [e, coeff] : f.terms())
        if (!coeff.is_nonnegative())
            return Json{{"exponent", Json::array({e.i, e.j})}, {"coefficient", to_string(coeff)}};
    return std::nullopt;
}

Json axiom_witness(const AxiomVerdict& v) {
    Json w = Json::object();
    if (v.point) w["point"] = Json::array({v.point->p, v.point->q});
    if (v.row) w["row"] = *v.row;
    if (v.column) w["column"] = *v.column;
    if (!v.detail.empty()) w["detail"] = v.detail;
    return w;
}

class Cell {
public:
    Cell(BasesContext& ctx, const ScanOptions& opts, const std::vector<int>& clusters, IndexVector a)
        : ctx_(ctx), opts_(opts), clusters_(clusters), a_(a) {
        try {
            greedy_.emplace(quantum_greedy(opts.b, opts.c, a.a1, a.a2, &trace_));
        } catch (const std::exception& e) {
            greedy_error_ = error_witness(e);
            tie_failure_ = dynamic_cast<const InternalInconsistency*>(&e) != nullptr;
        }
        imaginary_ = is_imaginary_root(opts.b, opts.c, a.a1, a.a2);
    }

    ScanEntry run(Check check) {
        ScanEntry entry{a_, check, true, Json::object()};
        try {
            evaluate(entry);
        } catch (const std::exception& e) {
            entry.pass = false;
            entry.witness = error_witness(e);
        }
        if (trace_.margin_retries > 0) entry.witness["margin_retries"] = trace_.margin_retries;
        return entry;
    }

private:
    void evaluate(ScanEntry& entry) {
        if (check_needs_greedy(entry.check) && !greedy_) {
            entry.pass = false;
            entry.witness = greedy_error_;
            return;
        }
        switch (entry.check) {
        case Check::GreedyPositivity: return positivity(entry);
        case Check::Divisibility:
        case Check::Support: {
            if (!imaginary_) {
                entry.witness = not_applicable();
                return;
            }
            const AxiomVerdict v = entry.check == Check::Support ? check_support_axiom(*greedy_)
                                                                 : check_divisibility_axiom(*greedy_);
            entry.pass = v.pass;
            if (!v.pass) entry.witness = axiom_witness(v);
            return;
        }
        case Check::TieConsistency:
            if (tie_failure_) {
                entry.pass = false;
                entry.witness = greedy_error_;
            } else if (!greedy_) {
                entry.witness = not_applicable();
            } else {
                entry.witness = Json{{"tie_points", trace_.tie_points}};
            }
            return;
        case Check::RPositivity: {
            const BasisExpansion& r = ctx_.r_table(a_);
            entry.witness = Json{{"off_diagonal", r.coeffs.size() - 1}};
            for (const auto& [idx, coeff] : r.coeffs) {
                if (coeff.is_nonnegative()) continue;
                entry.pass = false;
                entry.witness = Json{{"index", Json::array({idx.a1, idx.a2})}, {"coefficient", to_string(coeff)}};
                return;
            }
            return;
        }
        case Check::TriangularSupport: {
            if (!imaginary_) {
                entry.witness = not_applicable();
                return;
            }
            const TriangularSupportVerdict v = check_triangular_support_conjecture(ctx_, a_.a1, a_.a2);
            entry.pass = v.consistent();
            entry.witness = Json{{"agreements", v.agreements}};
            if (!v.consistent()) {
                Json list = Json::array();
                for (const SupportMismatch& m : v.mismatches)
                    list.push_back(Json{{"point", Json::array({m.point.p, m.point.q})},
                                        {"nonzero_outside", m.nonzero_outside}});
                entry.witness["mismatches"] = std::move(list);
            }
            return;
        }
        case Check::Domination: {
            const TorusElement diff = ctx_.triangular(a_) - ctx_.greedy_torus(a_);
            if (auto neg = first_negative(diff)) {
                entry.pass = false;
                entry.witness = std::move(*neg);
            }
            return;
        }
        }
    }

    static bool check_needs_greedy(Check check) {
        return check == Check::GreedyPositivity || check == Check::Divisibility || check == Check::Support;
    }

    void positivity(ScanEntry& entry) {
        if (auto pt = first_negative_entry(*greedy_)) {
            entry.pass = false;
            entry.witness = Json{{"cluster", 1},
                                 {"p", pt->p},
                                 {"q", pt->q},
                                 {"coefficient", to_string(greedy_->coefficient(pt->p, pt->q))}};
            return;
        }
        const TorusElement x = greedy_->to_torus();
        for (int m : clusters_) {
            if (m == 1) continue;
            TorusElement y;
            try {
                y = expand_in_cluster(x, ClusterIndex{m}, opts_.b, opts_.c);
            } catch (const NotLaurent& e) {
                entry.pass = false;
                entry.witness = Json{{"cluster", m}, {"error", e.what()}};
                return;
            }
            if (auto neg = first_negative(y)) {
                entry.pass = false;
                entry.witness = std::move(*neg);
                entry.witness["cluster"] = m;
                return;
            }
        }
    }

    BasesContext& ctx_;
    const ScanOptions& opts_;
    const std::vector<int>& clusters_;
    IndexVector a_;
    GreedyTrace trace_;
    std::optional<PointedElement> greedy_;
    Json greedy_error_;
    bool tie_failure_ = false;
    bool imaginary_ = false;
};

std::vector<int> covered_clusters(const ScanOptions& options) {
    if (options.cluster_range < 0) throw InvalidArgument("cluster range must be nonnegative");
    if (options.cluster_range == 0) return {1};
    std::vector<int> out;
    for (int m = -options.cluster_range; m <= options.cluster_range; ++m) out.push_back(m);
    return out;
}

} // namespace

std::vector<ScanEntry> run_checks(const ScanOptions& options, IndexVector a, ClusterCache& cache) {
    if (options.b < 1 || options.c < 1) throw InvalidArgument("b and c must be positive");
    const std::vector<int> clusters = covered_clusters(options);
    BasesContext ctx(options.b, options.c, cache);
    Cell cell(ctx, options, clusters, a);
    std::vector<ScanEntry> out;
    for (Check check : options.checks) out.push_back(cell.run(check));
    return out;
}

std::string to_string(Check check) {
    for (auto [c, name] : kCheckNames)
        if (c == check) return name;
    return "unknown";
}

std::optional<Check> parse_check(const std::string& name) {
    for (auto [c, n] : kCheckNames)
        if (name == n) return c;
    return std::nullopt;
}

const std::vector<Check>& all_checks() {
    static const std::vector<Check> checks = [] {
        std::vector<Check> out;
        for (auto [c, name] : kCheckNames) out.push_back(c);
        return out;
    }();
    return checks;
}

std::vector<IndexVector> ScanReport::failures(Check check) const {
    std::vector<IndexVector> out;
    for (const ScanEntry& e : results)
        if (e.check == check && !e.pass) out.push_back(e.a);
    return out;
}

bool ScanReport::all_pass() const {
    return std::all_of(results.begin(), results.end(), [](const ScanEntry& e) { return e.pass; });
}

ScanReport scan(const ScanOptions& options, ClusterCache& cache) {
    if (options.b < 1 || options.c < 1) throw InvalidArgument("b and c must be positive");
    if (options.bound < 0) throw InvalidArgument("bound must be nonnegative");

    ScanReport report;
    report.b = options.b;
    report.c = options.c;
    report.bound = options.bound;
    report.checks = options.checks;
    report.clusters_covered = covered_clusters(options);

    std::vector<IndexVector> cells;
    for (int a1 = 0; a1 <= options.bound; ++a1)
        for (int a2 = 0; a2 <= options.bound; ++a2) cells.push_back({a1, a2});

    BasesContext ctx(options.b, options.c, cache);
    std::vector<std::vector<ScanEntry>> per_cell(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            Cell cell(ctx, options, report.clusters_covered, cells[i]);
            for (Check check : options.checks) per_cell[i].push_back(cell.run(check));
        }
    };

    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, cells.size()));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
    }

    for (auto& entries : per_cell)
        for (auto& e : entries) report.results.push_back(std::move(e));
    return report;
}

Json to_json(const ScanReport& report) {
    Json checks = Json::array();
    for (Check c : report.checks) checks.push_back(to_string(c));
    Json results = Json::array();
    for (const ScanEntry& e : report.results)
        results.push_back(Json{{"a", Json::array({e.a.a1, e.a.a2})},
                               {"check", to_string(e.check)},
                               {"pass", e.pass},
                               {"witness", e.witness}});
    return Json{{"b", report.b},
                {"c", report.c},
                {"bound", report.bound},
                {"checks", std::move(checks)},
                {"results", std::move(results)},
                {"clusters_covered", report.clusters_covered}};
}

ScanReport scan_report_from_json(const Json& j) {
    auto field = [](const Json& obj, const char* key) -> const Json& {
        if (!obj.is_object() || !obj.contains(key))
            throw InvalidArgument(std::string("missing field \"") + key + "\"");
        return obj.at(key);
    };
    auto integer = [](const Json& v, const char* what) {
        if (!v.is_number_integer()) throw InvalidArgument(std::string(what) + " must be an integer");
        return v.get<int>();
    };
    auto check = [](const Json& v) {
        if (!v.is_string()) throw InvalidArgument("check name must be a string");
        auto c = parse_check(v.get<std::string>());
        if (!c) throw InvalidArgument("unknown check \"" + v.get<std::string>() + "\"");
        return *c;
    };

    ScanReport r;
    r.b = integer(field(j, "b"), "b");
    r.c = integer(field(j, "c"), "c");
    r.bound = integer(field(j, "bound"), "bound");
    const Json& checks = field(j, "checks");
    if (!checks.is_array()) throw InvalidArgument("\"checks\" must be an array");
    for (const Json& c : checks) r.checks.push_back(check(c));
    const Json& results = field(j, "results");
    if (!results.is_array()) throw InvalidArgument("\"results\" must be an array");
    for (const Json& e : results) {
        const Json& a = field(e, "a");
        if (!a.is_array() || a.size() != 2) throw InvalidArgument("\"a\" must be [a1, a2]");
        const Json& pass = field(e, "pass");
        if (!pass.is_boolean()) throw InvalidArgument("\"pass\" must be a boolean");
        r.results.push_back(ScanEntry{IndexVector{integer(a[0], "a1"), integer(a[1], "a2")}, check(field(e, "check")),
                                      pass.get<bool>(), field(e, "witness")});
    }
    const Json& clusters = field(j, "clusters_covered");
    if (!clusters.is_array()) throw InvalidArgument("\"clusters_covered\" must be an array");
    for (const Json& m : clusters) r.clusters_covered.push_back(integer(m, "cluster index"));
    return r;
}

} // namespace qgreedy
