#include "qgreedy/greedy.hpp"

#include "qgreedy/errors.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace qgreedy {

namespace {

constexpr int kMaxMarginRetries = 6;

std::string vec_str(int a1, int a2) { return "(" + std::to_string(a1) + "," + std::to_string(a2) + ")"; }

void require_params(int b, int c) {
    if (b < 1 || c < 1) throw InvalidArgument("b and c must be positive");
}

void require_imaginary(int b, int c, int a1, int a2, const char* what) {
    if (!is_imaginary_root(b, c, a1, a2))
        throw InvalidArgument(std::string(what) + ": " + vec_str(a1, a2) + " is not a positive imaginary root");
}

class BinomialMemo {
public:
    explicit BinomialMemo(int d) : d_(d) {}

    const LaurentV& get(int n, int k) {
        auto [it, inserted] = memo_.try_emplace({n, k});
        if (inserted) it->second = quantum_binomial(n, k, d_);
        return it->second;
    }

private:
    int d_;
    std::map<std::pair<int, int>, LaurentV> memo_;
};

// Coefficient ring operations the recurrence needs.
struct QuantumRing {
    using Value = LaurentV;
    BinomialMemo first;  // at w = v^b
    BinomialMemo second; // at w = v^c
    QuantumRing(int b, int c) : first(b), second(c) {}
    static Value one() { return 1; }
    static bool is_zero(const Value& x) { return x.is_zero(); }
};

struct ClassicalRing {
    using Value = Integer;
    std::map<std::pair<int, int>, Integer> memo;
    const Integer& binom(int n, int k) {
        auto [it, inserted] = memo.try_emplace({n, k});
        if (inserted) it->second = binomial(n, k);
        return it->second;
    }
    static Value one() { return 1; }
    static bool is_zero(const Value& x) { return x.is_zero(); }
};

LaurentV first_branch(QuantumRing& r, const std::vector<std::vector<LaurentV>>& e, int p, int q, int n0) {
    LaurentV sum;
    for (int k = 1; k <= p; ++k) {
        const LaurentV& prev = e[p - k][q];
        if (prev.is_zero()) continue;
        const LaurentV& bin = r.first.get(n0 + k - 1, k);
        if (bin.is_zero()) continue;
        if (k % 2 == 1)
            sum += prev * bin;
        else
            sum -= prev * bin;
    }
    return sum;
}

LaurentV second_branch(QuantumRing& r, const std::vector<std::vector<LaurentV>>& e, int p, int q, int n0) {
    LaurentV sum;
    for (int l = 1; l <= q; ++l) {
        const LaurentV& prev = e[p][q - l];
        if (prev.is_zero()) continue;
        const LaurentV& bin = r.second.get(n0 + l - 1, l);
        if (bin.is_zero()) continue;
        if (l % 2 == 1)
            sum += prev * bin;
        else
            sum -= prev * bin;
    }
    return sum;
}

Integer first_branch(ClassicalRing& r, const std::vector<std::vector<Integer>>& e, int p, int q, int n0) {
    Integer sum = 0;
    for (int k = 1; k <= p; ++k) {
        Integer term = e[p - k][q] * r.binom(n0 + k - 1, k);
        if (k % 2 == 1)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

Integer second_branch(ClassicalRing& r, const std::vector<std::vector<Integer>>& e, int p, int q, int n0) {
    Integer sum = 0;
    for (int l = 1; l <= q; ++l) {
        Integer term = e[p][q - l] * r.binom(n0 + l - 1, l);
        if (l % 2 == 1)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

template <class Ring>
std::map<GridPoint, typename Ring::Value> run_recurrence(Ring& ring, int b, int c, int a1, int a2,
                                                         GreedyTrace* trace) {
    using Value = typename Ring::Value;
    require_params(b, c);
    int pmax = std::max(a2, 0);
    int qmax = std::max(a1, 0);
    GreedyTrace local;
    for (int attempt = 0; attempt <= kMaxMarginRetries; ++attempt) {
        const int pm = pmax + 1;
        const int qm = qmax + 1;
        std::vector<std::vector<Value>> e(static_cast<std::size_t>(pm + 1),
                                          std::vector<Value>(static_cast<std::size_t>(qm + 1)));
        e[0][0] = Ring::one();
        local.tie_points = 0;
        for (int s = 1; s <= pm + qm; ++s) {
            for (int p = std::max(0, s - qm); p <= std::min(s, pm); ++p) {
                const int q = s - p;
                const long long lhs = static_cast<long long>(c) * a1 * q;
                const long long rhs = static_cast<long long>(b) * a2 * p;
                const int row_n = std::max(a2 - c * q, 0);
                const int col_n = std::max(a1 - b * p, 0);
                Value value;
                if (lhs <= rhs) value = first_branch(ring, e, p, q, row_n);
                if (lhs >= rhs) {
                    Value other = second_branch(ring, e, p, q, col_n);
                    if (lhs == rhs) {
                        ++local.tie_points;
                        if (other != value)
                            throw InternalInconsistency("greedy recurrence branches disagree at (p,q)=" +
                                                        vec_str(p, q) + " for a=" + vec_str(a1, a2) +
                                                        ", (b,c)=" + vec_str(b, c));
                    } else {
                        value = std::move(other);
                    }
                }
                e[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = std::move(value);
            }
        }

        bool margin_clear = true;
        for (int p = 0; p <= pm && margin_clear; ++p) margin_clear = Ring::is_zero(e[p][qm]);
        for (int q = 0; q <= qm && margin_clear; ++q) margin_clear = Ring::is_zero(e[pm][q]);
        if (margin_clear) {
            std::map<GridPoint, Value> grid;
            for (int p = 0; p <= pmax; ++p)
                for (int q = 0; q <= qmax; ++q)
                    if (!Ring::is_zero(e[p][q])) grid.emplace(GridPoint{p, q}, std::move(e[p][q]));
            if (trace) *trace = local;
            return grid;
        }
        ++local.margin_retries;
        pmax = std::max(2 * pmax, 1);
        qmax = std::max(2 * qmax, 1);
    }
    throw InternalInconsistency("greedy recurrence: no vanishing margin found for a=" + vec_str(a1, a2));
}

// Divides poly (ascending powers of t) by divisor, whose leading coefficient is a unit.
bool divides(const std::vector<LaurentV>& divisor, std::vector<LaurentV> poly) {
    while (!poly.empty() && poly.back().is_zero()) poly.pop_back();
    const std::size_t dn = divisor.size() - 1;
    const LaurentV& lead = divisor.back();
    while (poly.size() > dn) {
        const std::size_t shift = poly.size() - 1 - dn;
        auto factor = poly.back().divide_exact(lead);
        if (!factor) return false;
        for (std::size_t i = 0; i <= dn; ++i) poly[shift + i] -= divisor[i] * *factor;
        while (!poly.empty() && poly.back().is_zero()) poly.pop_back();
    }
    return poly.empty();
}

// prod_{j=1}^{n} (1 + v^{d(n+1-2j)} t), ascending in t.
std::vector<LaurentV> divisor_product(int n, int d) {
    std::vector<LaurentV> prod{LaurentV(1)};
    for (int j = 1; j <= n; ++j) {
        const LaurentV root = LaurentV::monomial(d * (n + 1 - 2 * j));
        std::vector<LaurentV> next(prod.size() + 1);
        for (std::size_t i = 0; i < prod.size(); ++i) {
            next[i] += prod[i];
            next[i + 1] += prod[i] * root;
        }
        prod = std::move(next);
    }
    return prod;
}

} // namespace

bool is_imaginary_root(int b, int c, int a1, int a2) {
    require_params(b, c);
    if (a1 <= 0 || a2 <= 0) return false;
    const long long x = a1;
    const long long y = a2;
    return c * x * x - static_cast<long long>(b) * c * x * y + b * y * y <= 0;
}

bool greedy_region_contains(int b, int c, int a1, int a2, int p, int q) {
    require_imaginary(b, c, a1, a2, "greedy_region_contains");
    if (p < 0 || q < 0) return false;
    if ((p == 0 && q == a1) || (p == a2 && q == 0)) return true;
    const long long B = b, C = c, x = a1, y = a2, P = p, Q = q;
    // q + (b - b a2 / (c a1)) p < a1, scaled by c a1 > 0
    const bool below_first = C * x * Q + (B * C * x - B * y) * P < C * x * x;
    // p + (c - c a1 / (b a2)) q < a2, scaled by b a2 > 0
    const bool below_second = B * y * P + (B * C * y - C * x) * Q < B * y * y;
    return below_first || below_second;
}

PointedElement quantum_greedy(int b, int c, int a1, int a2, GreedyTrace* trace) {
    QuantumRing ring(b, c);
    return PointedElement(b, c, a1, a2, run_recurrence(ring, b, c, a1, a2, trace));
}

IntegerPointedElement classical_greedy(int b, int c, int a1, int a2, GreedyTrace* trace) {
    ClassicalRing ring;
    return IntegerPointedElement{b, c, a1, a2, run_recurrence(ring, b, c, a1, a2, trace)};
}

AxiomVerdict check_support_axiom(const PointedElement& x) {
    require_imaginary(x.b(), x.c(), x.a1(), x.a2(), "check_support_axiom");
    for (const auto& [pt, coeff] : x.grid()) {
        if (!greedy_region_contains(x.b(), x.c(), x.a1(), x.a2(), pt.p, pt.q)) {
            AxiomVerdict v;
            v.pass = false;
            v.point = pt;
            v.detail = "e" + vec_str(pt.p, pt.q) + " = " + to_string(coeff) + " lies outside the greedy region";
            return v;
        }
    }
    return {};
}

AxiomVerdict check_divisibility_axiom(const PointedElement& x) {
    require_imaginary(x.b(), x.c(), x.a1(), x.a2(), "check_divisibility_axiom");
    int pmax = 0;
    int qmax = 0;
    for (const auto& [pt, coeff] : x.grid()) {
        pmax = std::max(pmax, pt.p);
        qmax = std::max(qmax, pt.q);
    }
    for (int q = 0; x.a2() - x.c() * q > 0; ++q) {
        std::vector<LaurentV> row(static_cast<std::size_t>(pmax + 1));
        for (int p = 0; p <= pmax; ++p) row[static_cast<std::size_t>(p)] = x.coefficient(p, q);
        const int n = x.a2() - x.c() * q;
        if (!divides(divisor_product(n, x.b()), std::move(row))) {
            AxiomVerdict v;
            v.pass = false;
            v.row = q;
            v.detail = "row q=" + std::to_string(q) + " is not divisible by the degree-" + std::to_string(n) + " product";
            return v;
        }
    }
    for (int p = 0; x.a1() - x.b() * p > 0; ++p) {
        std::vector<LaurentV> col(static_cast<std::size_t>(qmax + 1));
        for (int q = 0; q <= qmax; ++q) col[static_cast<std::size_t>(q)] = x.coefficient(p, q);
        const int n = x.a1() - x.b() * p;
        if (!divides(divisor_product(n, x.c()), std::move(col))) {
            AxiomVerdict v;
            v.pass = false;
            v.column = p;
            v.detail = "column p=" + std::to_string(p) + " is not divisible by the degree-" + std::to_string(n) + " product";
            return v;
        }
    }
    return {};
}

std::optional<GridPoint> first_negative_entry(const PointedElement& x) {
    for (const auto& [pt, coeff] : x.grid())
        if (!coeff.is_nonnegative()) return pt;
    return std::nullopt;
}

} // namespace qgreedy
