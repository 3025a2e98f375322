#include "qgreedy/bases.hpp"

#include "qgreedy/errors.hpp"

#include <algorithm>
#include <set>

namespace qgreedy {

namespace {

// Safety net for the reachable-index closure; real tables stay far below this.
constexpr std::size_t kMaxCandidates = 200000;

std::string idx_str(IndexVector a) { return "(" + std::to_string(a.a1) + "," + std::to_string(a.a2) + ")"; }

} // namespace

std::string to_string(BasisTag tag) { return tag == BasisTag::Standard ? "standard" : "greedy"; }

LaurentV BasisExpansion::coefficient(IndexVector a) const {
    auto it = coeffs.find(a);
    return it == coeffs.end() ? LaurentV{} : it->second;
}

bool in_v_positive_lattice(const LaurentV& f) { return f.is_zero() || f.min_exponent() >= 1; }

BasesContext::BasesContext(int b, int c, ClusterCache& cache) : b_(b), c_(c), cache_(cache) {
    if (b < 1 || c < 1) throw InvalidArgument("b and c must be positive");
}

template <class T, class Make>
const T& BasesContext::memo(std::map<IndexVector, std::unique_ptr<T>>& table, IndexVector a, Make&& make) {
    {
        std::lock_guard lock(mutex_);
        if (auto it = table.find(a); it != table.end()) return *it->second;
    }
    auto value = std::make_unique<T>(make());
    std::lock_guard lock(mutex_);
    auto [it, inserted] = table.try_emplace(a, std::move(value));
    return *it->second;
}

const TorusElement& BasesContext::standard(IndexVector a) {
    return memo(standard_, a, [&] { return standard_monomial(b_, c_, a.a1, a.a2, cache_); });
}

const PointedElement& BasesContext::greedy(IndexVector a) {
    return memo(greedy_, a, [&] { return quantum_greedy(b_, c_, a.a1, a.a2); });
}

const TorusElement& BasesContext::greedy_torus(IndexVector a) {
    return memo(greedy_torus_, a, [&] { return greedy(a).to_torus(); });
}

const BasisExpansion& BasesContext::q_table(IndexVector a) {
    return memo(q_, a, [&] {
        BasisExpansion q = expand_in_standard_basis(greedy_torus(a), *this);
        if (q.pointing != a || q.coefficient(a) != LaurentV(1))
            throw OrderViolation("q-table of X" + idx_str(a) + " does not lead with M" + idx_str(a));
        for (const auto& [idx, coeff] : q.coeffs)
            if (idx != a && !strictly_below(idx, a))
                throw OrderViolation("q-table of X" + idx_str(a) + " has index " + idx_str(idx) +
                                     " not strictly below the pointing vector");
        return q;
    });
}

const BasisExpansion& BasesContext::r_table(IndexVector a) {
    return memo(r_, a, [&] {
        std::set<IndexVector> reachable{a};
        std::vector<IndexVector> pending{a};
        while (!pending.empty()) {
            const IndexVector x = pending.back();
            pending.pop_back();
            for (const auto& [idx, coeff] : q_table(x).coeffs) {
                if (reachable.insert(idx).second) pending.push_back(idx);
                if (reachable.size() > kMaxCandidates)
                    throw NonTermination("r-recursion for C" + idx_str(a) + ": index closure does not close");
            }
        }

        std::vector<IndexVector> order(reachable.begin(), reachable.end());
        std::sort(order.begin(), order.end(), [](IndexVector x, IndexVector y) {
            const int sx = x.a1 + x.a2;
            const int sy = y.a1 + y.a2;
            return sx != sy ? sx > sy : x.a1 > y.a1;
        });

        BasisExpansion r{BasisTag::Greedy, a, {{a, LaurentV(1)}}};
        for (const IndexVector y : order) {
            if (y == a) continue;
            LaurentV acc;
            for (const auto& [x, rx] : r.coeffs) {
                if (!strictly_below(y, x)) continue;
                const LaurentV qxy = q_table(x).coefficient(y);
                if (qxy.is_zero()) continue;
                acc += nonpositive_part(rx * qxy);
            }
            LaurentV ry = symmetrize_from_nonpositive(-acc);
            if (!ry.is_zero()) r.coeffs.emplace(y, std::move(ry));
        }
        return r;
    });
}

const TorusElement& BasesContext::triangular(IndexVector a) {
    return memo(triangular_, a, [&] {
        TorusElement sum;
        for (const auto& [x, rx] : r_table(a).coeffs) sum += rx * greedy_torus(x);

        if (!is_bar_invariant(sum)) throw P1Violation("C" + idx_str(a) + " is not bar-invariant");
        const BasisExpansion m = expand_in_standard_basis(sum, *this);
        if (m.coefficient(a) != LaurentV(1))
            throw P2Violation("C" + idx_str(a) + " has M" + idx_str(a) + "-coefficient " + to_string(m.coefficient(a)));
        for (const auto& [idx, coeff] : m.coeffs)
            if (idx != a && !in_v_positive_lattice(coeff))
                throw P2Violation("C" + idx_str(a) + " - M" + idx_str(a) + " has coefficient " + to_string(coeff) +
                                  " at M" + idx_str(idx) + ", outside vZ[v]");
        return sum;
    });
}

BasisExpansion expand_in_standard_basis(const TorusElement& f, BasesContext& ctx) {
    BasisExpansion out;
    out.target = BasisTag::Standard;
    if (f.is_zero()) return out;

    // (d1 + d2, d1) -> coefficient of X1^d1 X2^d2
    std::map<std::pair<int, int>, LaurentV> rem;
    auto key = [](Exponent e) { return std::pair{e.i + e.j, e.i}; };
    for (const auto& [e, coeff] : f.terms()) rem.emplace(key(e), coeff);

    const std::size_t cap = 4 * f.size();
    std::size_t steps = 0;
    while (!rem.empty()) {
        if (++steps > cap) throw NonTermination("standard-basis peeling exceeded " + std::to_string(cap) + " steps");
        auto lowest = rem.begin();
        const auto [sum, d1] = lowest->first;
        const int d2 = sum - d1;
        const LaurentV kappa = lowest->second.shifted(-d1 * d2);
        const IndexVector idx{-d1, -d2};
        if (out.coeffs.empty()) out.pointing = idx;
        out.coeffs.emplace(idx, kappa);

        for (const auto& [e, mc] : ctx.standard(idx).terms()) {
            LaurentV delta = kappa * mc;
            auto [it, inserted] = rem.try_emplace(key(e), -delta);
            if (!inserted) {
                it->second -= delta;
                if (it->second.is_zero()) rem.erase(it);
            }
        }
        if (rem.contains({sum, d1}))
            throw InternalInconsistency("standard monomial M" + idx_str(idx) + " is not pointed at its index");
    }
    return out;
}

BasisExpansion expand_in_standard_basis(const TorusElement& f, int b, int c) {
    BasesContext ctx(b, c);
    return expand_in_standard_basis(f, ctx);
}

BasisExpansion greedy_to_standard_q(int b, int c, int a1, int a2) {
    BasesContext ctx(b, c);
    return ctx.q_table({a1, a2});
}

BasisExpansion triangular_r_coeffs(int b, int c, int a1, int a2) {
    BasesContext ctx(b, c);
    return ctx.r_table({a1, a2});
}

TorusElement triangular_element(int b, int c, int a1, int a2) {
    BasesContext ctx(b, c);
    return ctx.triangular({a1, a2});
}

TriangularSupportVerdict check_triangular_support_conjecture(BasesContext& ctx, int a1, int a2) {
    const int b = ctx.b();
    const int c = ctx.c();
    if (!is_imaginary_root(b, c, a1, a2))
        throw InvalidArgument("check_triangular_support_conjecture: " + idx_str({a1, a2}) +
                              " is not a positive imaginary root");
    const PointedElement x = to_pointed(ctx.triangular({a1, a2}), b, c);
    if (x.a1() != a1 || x.a2() != a2)
        throw InternalInconsistency("C" + idx_str({a1, a2}) + " is pointed at " + idx_str({x.a1(), x.a2()}));

    TriangularSupportVerdict verdict;
    for (int p = 0; p <= a2; ++p) {
        for (int q = 0; q <= a1; ++q) {
            const long long P = p, Q = q;
            const bool predicted = b * P * P + static_cast<long long>(b) * c * P * Q + c * Q * Q <=
                                   static_cast<long long>(c) * a1 * Q + static_cast<long long>(b) * a2 * P;
            const bool nonzero = !x.coefficient(p, q).is_zero();
            if (predicted == nonzero)
                ++verdict.agreements;
            else
                verdict.mismatches.push_back({GridPoint{p, q}, nonzero});
        }
    }
    return verdict;
}

TriangularSupportVerdict check_triangular_support_conjecture(int b, int c, int a1, int a2) {
    BasesContext ctx(b, c);
    return check_triangular_support_conjecture(ctx, a1, a2);
}

} // namespace qgreedy
