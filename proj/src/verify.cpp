#include "qgreedy/verify.hpp"

#include "qgreedy/errors.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace qgreedy {

namespace {

using Params = std::pair<int, int>;

std::string params_str(int b, int c) { return "(" + std::to_string(b) + "," + std::to_string(c) + ")"; }

Json index_json(IndexVector a) { return Json::array({a.a1, a.a2}); }

/// Runs body; an empty optional means pass, otherwise the witness of the failure.
class Suite {
public:
    explicit Suite(std::string name) { result_.suite = std::move(name); }

    void check(std::string name, const std::function<std::optional<Json>()>& body) {
        VerifyItem item{std::move(name), true, false, Json::object()};
        try {
            if (auto w = body()) {
                item.pass = false;
                item.witness = std::move(*w);
            }
        } catch (const std::exception& e) {
            item.pass = false;
            item.witness = Json{{"error", e.what()}};
        }
        result_.items.push_back(std::move(item));
    }

    void evidence(std::string name, const std::function<Json()>& body) {
        VerifyItem item{std::move(name), true, true, Json::object()};
        try {
            item.witness = body();
        } catch (const std::exception& e) {
            item.pass = false;
            item.evidence = false;
            item.witness = Json{{"error", e.what()}};
        }
        result_.items.push_back(std::move(item));
    }

    VerifyResult take() { return std::move(result_); }

private:
    VerifyResult result_;
};

LaurentV vpow(int e) { return LaurentV::monomial(e); }

std::optional<Json> expect_equal(const LaurentV& got, const LaurentV& want) {
    if (got == want) return std::nullopt;
    return Json{{"expected", to_string(want)}, {"got", to_string(got)}};
}

std::optional<Json> expect_equal(const Integer& got, long want) {
    if (got == want) return std::nullopt;
    return Json{{"expected", want}, {"got", got.str()}};
}

ScanReport positivity_scan(int b, int c, int bound, ClusterCache& cache, unsigned threads) {
    ScanOptions opts;
    opts.b = b;
    opts.c = c;
    opts.bound = bound;
    opts.checks = {Check::GreedyPositivity};
    opts.threads = threads;
    return scan(opts, cache);
}

Json index_list(const std::vector<IndexVector>& v) {
    Json out = Json::array();
    for (IndexVector a : v) out.push_back(index_json(a));
    return out;
}

VerifyResult worked_examples(ClusterCache& cache, unsigned threads) {
    Suite s("paper-examples");
    const PointedElement x = quantum_greedy(2, 3, 3, 4);
    const LaurentV e10 = vpow(6) + vpow(2) + vpow(-2) + vpow(-6);
    s.check("(2,3) X[3,4] e(1,0)", [&] { return expect_equal(x.coefficient(1, 0), e10); });
    s.check("(2,3) X[3,4] e(0,1)", [&] { return expect_equal(x.coefficient(0, 1), vpow(6) + 1 + vpow(-6)); });
    s.check("(2,3) X[3,4] e(1,1)", [&] { return expect_equal(x.coefficient(1, 1), e10); });
    s.check("(2,3) X[3,4] e(2,1)", [&] { return expect_equal(x.coefficient(2, 1), vpow(2) - 1 + vpow(-2)); });

    const IntegerPointedElement cl = classical_greedy(2, 3, 3, 4);
    s.check("(2,3) classical x[3,4] e(1,0)", [&] { return expect_equal(cl.coefficient(1, 0), 4); });
    s.check("(2,3) classical x[3,4] e(0,1)", [&] { return expect_equal(cl.coefficient(0, 1), 3); });
    s.check("(2,3) classical x[3,4] e(2,1)", [&] { return expect_equal(cl.coefficient(2, 1), 1); });

    s.check("(2,3) non-positive greedy elements within bound 11", [&]() -> std::optional<Json> {
        const std::vector<IndexVector> listed = {{3, 4}, {3, 5}, {5, 4}, {5, 7}, {5, 8}, {7, 5}, {7, 10}, {7, 11}};
        const std::vector<IndexVector> failures = positivity_scan(2, 3, 11, cache, threads).failures(Check::GreedyPositivity);
        std::vector<IndexVector> missing;
        for (IndexVector a : listed)
            if (std::find(failures.begin(), failures.end(), a) == failures.end()) missing.push_back(a);
        if (missing.empty()) return std::nullopt;
        return Json{{"missing", index_list(missing)}, {"failures", index_list(failures)}};
    });

    for (auto [b, c] : {Params{1, 5}, {1, 6}, {2, 4}, {2, 6}, {3, 3}, {3, 6}}) {
        s.check("no positivity failure for " + params_str(b, c) + " within bound 8", [&]() -> std::optional<Json> {
            const auto failures = positivity_scan(b, c, 8, cache, threads).failures(Check::GreedyPositivity);
            if (failures.empty()) return std::nullopt;
            return Json{{"failures", index_list(failures)}};
        });
    }
    for (auto [b, c] : {Params{2, 5}, {3, 4}, {4, 6}}) {
        s.check("positivity fails for " + params_str(b, c) + " within bound 8", [&]() -> std::optional<Json> {
            if (!positivity_scan(b, c, 8, cache, threads).failures(Check::GreedyPositivity).empty()) return std::nullopt;
            return Json{{"failures", Json::array()}};
        });
    }
    return s.take();
}

std::optional<Json> period_check(int b, int c, int period, ClusterCache& cache) {
    for (int m = -2; m <= 3; ++m)
        if (cluster_variable(b, c, m + period, cache) != cluster_variable(b, c, m, cache))
            return Json{{"m", m}, {"period", period}};
    for (int d = 1; d < period; ++d)
        if (cluster_variable(b, c, 1 + d, cache) == cluster_variable(b, c, 1, cache) &&
            cluster_variable(b, c, 2 + d, cache) == cluster_variable(b, c, 2, cache))
            return Json{{"shorter_period", d}};
    return std::nullopt;
}

VerifyResult finite_type(ClusterCache& cache) {
    Suite s("finite-type");
    for (auto [b, c, period] : {std::tuple{1, 1, 5}, {1, 2, 6}, {2, 1, 6}, {1, 3, 8}, {3, 1, 8}})
        s.check("mutation period " + std::to_string(period) + " for " + params_str(b, c),
                [&] { return period_check(b, c, period, cache); });

    for (auto [b, c] : {Params{1, 1}, {1, 2}, {1, 3}}) {
        BasesContext ctx(b, c, cache);
        s.check("greedy elements are cluster monomials for " + params_str(b, c) + ", |a| <= 4",
                [&]() -> std::optional<Json> {
                    for (int a1 = -4; a1 <= 4; ++a1)
                        for (int a2 = -4; a2 <= 4; ++a2) {
                            const auto idx = find_cluster_monomial(b, c, a1, a2, 8, cache);
                            if (!idx) return Json{{"a", Json::array({a1, a2})}, {"detail", "no cluster monomial"}};
                            if (quantum_cluster_monomial(b, c, idx->m, idx->alpha, idx->beta, cache) !=
                                ctx.greedy_torus({a1, a2}))
                                return Json{{"a", Json::array({a1, a2})}, {"cluster", idx->m}};
                        }
                    return std::nullopt;
                });
        s.check("triangular equals greedy for " + params_str(b, c) + ", |a| <= 4", [&]() -> std::optional<Json> {
            for (int a1 = -4; a1 <= 4; ++a1)
                for (int a2 = -4; a2 <= 4; ++a2) {
                    const BasisExpansion& r = ctx.r_table({a1, a2});
                    if (r.coeffs.size() != 1)
                        return Json{{"a", Json::array({a1, a2})}, {"off_diagonal", r.coeffs.size() - 1}};
                    if (ctx.triangular({a1, a2}) != ctx.greedy_torus({a1, a2}))
                        return Json{{"a", Json::array({a1, a2})}};
                }
            return std::nullopt;
        });
    }
    return s.take();
}

std::optional<Json> cached_variables_check(int b, int c, ClusterCache& cache) {
    for (int m = -3; m <= 4; ++m) {
        const TorusElement prev = cluster_variable(b, c, m - 1, cache);
        const TorusElement cur = cluster_variable(b, c, m, cache);
        const TorusElement next = cluster_variable(b, c, m + 1, cache);
        const int d = exchange_exponent(m, b, c);
        if (next * prev != LaurentV::monomial(d) * te_pow(cur, d) + 1)
            return Json{{"m", m}, {"detail", "exchange relation fails"}};
        if (!is_bar_invariant(cur)) return Json{{"m", m}, {"detail", "not bar-invariant"}};
        if (next * cur != LaurentV::monomial(2) * (cur * next)) return Json{{"m", m}, {"detail", "no quasi-commutation"}};
    }
    return std::nullopt;
}

std::optional<Json> grid_axioms(int b, int c) {
    for (int a1 = 0; a1 <= 8; ++a1)
        for (int a2 = 0; a2 <= 8; ++a2) {
            const Json where = Json::array({a1, a2});
            PointedElement x = [&] {
                try {
                    return quantum_greedy(b, c, a1, a2);
                } catch (const InternalInconsistency& e) {
                    throw InternalInconsistency("tie-line trap at (" + std::to_string(a1) + "," + std::to_string(a2) +
                                                "): " + e.what());
                }
            }();
            if (specialize_at_one(x) != classical_greedy(b, c, a1, a2))
                return Json{{"a", where}, {"detail", "specialization at v = 1 differs from the classical greedy element"}};
            if (!is_bar_invariant(x.to_torus())) return Json{{"a", where}, {"detail", "not bar-invariant"}};
            if (!is_imaginary_root(b, c, a1, a2)) continue;
            if (const AxiomVerdict v = check_support_axiom(x); !v.pass)
                return Json{{"a", where}, {"detail", "support axiom: " + v.detail}};
            if (const AxiomVerdict v = check_divisibility_axiom(x); !v.pass)
                return Json{{"a", where}, {"detail", "divisibility axiom: " + v.detail}};
        }
    return std::nullopt;
}

std::optional<Json> laurent_everywhere(const TorusElement& f, int b, int c, IndexVector a) {
    try {
        check_laurent_in_clusters(f, -4, 4, b, c);
    } catch (const NotLaurent& e) {
        return Json{{"a", index_json(a)}, {"error", e.what()}};
    }
    return std::nullopt;
}

VerifyResult axioms(ClusterCache& cache) {
    Suite s("axioms");
    for (auto [b, c] : {Params{1, 1}, {2, 2}, {2, 3}, {1, 4}}) {
        s.check("cached cluster variables of " + params_str(b, c) + " satisfy the exchange relations",
                [&] { return cached_variables_check(b, c, cache); });
        s.check("greedy axioms on 0 <= a <= 8 for " + params_str(b, c), [&] { return grid_axioms(b, c); });
    }
    for (auto [b, c] : {Params{1, 1}, {2, 2}, {2, 3}}) {
        s.check("greedy elements are Laurent in clusters |m| <= 4 for " + params_str(b, c),
                [&]() -> std::optional<Json> {
                    for (int a1 = 0; a1 <= 4; ++a1)
                        for (int a2 = 0; a2 <= 4; ++a2)
                            if (auto w = laurent_everywhere(quantum_greedy(b, c, a1, a2).to_torus(), b, c, {a1, a2}))
                                return w;
                    return std::nullopt;
                });
    }
    return s.take();
}

VerifyResult triangular(ClusterCache& cache) {
    Suite s("triangular");
    for (auto [b, c] : {Params{1, 1}, {2, 2}, {2, 3}}) {
        BasesContext ctx(b, c, cache);
        s.check("(P1) and (P2) on 0 <= a <= 4 for " + params_str(b, c), [&]() -> std::optional<Json> {
            for (int a1 = 0; a1 <= 4; ++a1)
                for (int a2 = 0; a2 <= 4; ++a2) {
                    try {
                        (void)ctx.triangular({a1, a2});
                    } catch (const P1Violation& e) {
                        return Json{{"a", Json::array({a1, a2})}, {"error", e.what()}};
                    } catch (const P2Violation& e) {
                        return Json{{"a", Json::array({a1, a2})}, {"error", e.what()}};
                    }
                }
            return std::nullopt;
        });
        s.check("r-coefficients are bar-invariant for " + params_str(b, c), [&]() -> std::optional<Json> {
            for (int a1 = 0; a1 <= 4; ++a1)
                for (int a2 = 0; a2 <= 4; ++a2)
                    for (const auto& [idx, r] : ctx.r_table({a1, a2}).coeffs)
                        if (!r.is_bar_invariant())
                            return Json{{"a", Json::array({a1, a2})}, {"index", index_json(idx)}};
            return std::nullopt;
        });
        s.check("triangular elements are Laurent in clusters |m| <= 4 for " + params_str(b, c),
                [&]() -> std::optional<Json> {
                    for (int a1 = 0; a1 <= 4; ++a1)
                        for (int a2 = 0; a2 <= 4; ++a2)
                            if (auto w = laurent_everywhere(ctx.triangular({a1, a2}), b, c, {a1, a2})) return w;
                    return std::nullopt;
                });
        if (b * c <= 3)
            s.check("off-diagonal r vanish for " + params_str(b, c), [&]() -> std::optional<Json> {
                for (int a1 = 0; a1 <= 4; ++a1)
                    for (int a2 = 0; a2 <= 4; ++a2)
                        if (ctx.r_table({a1, a2}).coeffs.size() != 1) return Json{{"a", Json::array({a1, a2})}};
                return std::nullopt;
            });
    }
    return s.take();
}

VerifyResult conjecture_evidence(ClusterCache& cache, unsigned threads) {
    Suite s("conjecture-evidence");
    for (auto [b, c, bound] : {std::tuple{2, 2, 5}, {2, 3, 4}, {3, 3, 4}, {1, 4, 5}}) {
        ScanOptions opts;
        opts.b = b;
        opts.c = c;
        opts.bound = bound;
        opts.checks = {Check::RPositivity, Check::TriangularSupport, Check::Domination};
        opts.threads = threads;
        std::optional<ScanReport> report;
        s.check("evidence scan for " + params_str(b, c) + " to bound " + std::to_string(bound),
                [&]() -> std::optional<Json> {
                    report = scan(opts, cache);
                    for (const ScanEntry& e : report->results)
                        if (!e.pass && e.witness.contains("error"))
                            return Json{{"a", index_json(e.a)}, {"check", to_string(e.check)}, {"witness", e.witness}};
                    return std::nullopt;
                });
        if (!report) continue;
        for (Check check : opts.checks) {
            s.evidence(to_string(check) + " counterexamples for " + params_str(b, c), [&] {
                Json list = Json::array();
                for (const ScanEntry& e : report->results)
                    if (e.check == check && !e.pass) list.push_back(Json{{"a", index_json(e.a)}, {"witness", e.witness}});
                return Json{{"counterexamples", std::move(list)}};
            });
        }
    }
    return s.take();
}

} // namespace

bool VerifyResult::pass() const { return first_failure() == nullptr; }

const VerifyItem* VerifyResult::first_failure() const {
    for (const VerifyItem& item : items)
        if (!item.pass && !item.evidence) return &item;
    return nullptr;
}

const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> suites = {"paper-examples", "finite-type", "axioms", "triangular",
                                                    "conjecture-evidence"};
    return suites;
}

VerifyResult verify(const std::string& suite, ClusterCache& cache, unsigned threads) {
    if (suite == "paper-examples") return worked_examples(cache, threads);
    if (suite == "finite-type") return finite_type(cache);
    if (suite == "axioms") return axioms(cache);
    if (suite == "triangular") return triangular(cache);
    if (suite == "conjecture-evidence") return conjecture_evidence(cache, threads);
    throw InvalidArgument("unknown verification suite \"" + suite + "\"");
}

Json to_json(const VerifyResult& result) {
    Json items = Json::array();
    for (const VerifyItem& item : result.items) {
        Json j{{"name", item.name}, {"pass", item.pass}};
        if (item.evidence) j["evidence"] = true;
        if (!item.witness.empty()) j["witness"] = item.witness;
        items.push_back(std::move(j));
    }
    return Json{{"suite", result.suite}, {"pass", result.pass()}, {"items", std::move(items)}};
}

} // namespace qgreedy
