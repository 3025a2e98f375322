#include "qgreedy/errors.hpp"
#include "qgreedy/torus.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace qgreedy {

namespace {

// Laurent polynomial in one cluster variable x with coefficients in Z[v^{+-1}],
// stored densely from x^lo.
struct Univariate {
    int lo = 0;
    std::vector<LaurentV> coeffs;

    void add(int deg, const LaurentV& c) {
        if (coeffs.empty()) lo = deg;
        if (deg < lo) {
            coeffs.insert(coeffs.begin(), static_cast<std::size_t>(lo - deg), LaurentV{});
            lo = deg;
        }
        const auto idx = static_cast<std::size_t>(deg - lo);
        if (idx >= coeffs.size()) coeffs.resize(idx + 1);
        coeffs[idx] += c;
    }

    // *= (1 + v^e x^d)
    void multiply_binomial(int e, int d) {
        std::vector<LaurentV> out(coeffs.size() + static_cast<std::size_t>(d));
        for (std::size_t n = 0; n < coeffs.size(); ++n) {
            out[n] += coeffs[n];
            out[n + static_cast<std::size_t>(d)] += coeffs[n].shifted(e);
        }
        coeffs = std::move(out);
    }

    // /= (1 + v^e x^d), false if the division is not exact
    bool divide_binomial(int e, int d) {
        const auto sd = static_cast<std::size_t>(d);
        if (coeffs.size() < sd) return std::all_of(coeffs.begin(), coeffs.end(), [](const LaurentV& c) { return c.is_zero(); });
        std::vector<LaurentV> rem = std::move(coeffs);
        coeffs.assign(rem.size() - sd, LaurentV{});
        for (std::size_t n = 0; n + sd < rem.size(); ++n) {
            coeffs[n] = rem[n];
            rem[n + sd] -= rem[n].shifted(e);
        }
        for (std::size_t n = rem.size() - sd; n < rem.size(); ++n)
            if (!rem[n].is_zero()) return false;
        return true;
    }
};

// Groups the terms of f by one exponent: key -> polynomial in the other variable,
// with an optional v-twist per term.
template <class KeyOf, class DegOf, class Twist>
std::map<int, Univariate> group(const TorusElement& f, KeyOf key, DegOf deg, Twist twist) {
    std::map<int, Univariate> out;
    for (const auto& [e, c] : f.terms()) out[key(e)].add(deg(e), c.shifted(twist(e)));
    return out;
}

std::string not_laurent(int from, int to) {
    return "expansion from cluster " + std::to_string(from) + " to " + std::to_string(to) + " is not Laurent";
}

// f lives in T_k = <X_k, X_{k+1}>; returns it in T_{k+1} = <X_{k+1}, X_{k+2}>.
// With x = X_{k+1}, Z = X_{k+2}^-1 and P(x) = v^d x^d + 1, X_k = Z P(x), Z x = v^-2 x Z, so
// X_k^i = prod_{t=1..i} P(v^-2t x) Z^i for i > 0 and prod_{t=0..|i|-1} P(v^2t x)^-1 Z^i for i < 0.
// With materialize = false only exactness is checked: nonnegative groups are
// polynomial after substitution and are skipped.
TorusElement step_up(TorusElement f, int k, int b, int c, bool materialize = true) {
    const int d = exchange_exponent(k + 1, b, c);
    std::vector<TorusElement::Term> out;
    auto groups = group(
        f, [](Exponent e) { return e.i; }, [](Exponent e) { return e.j; }, [](Exponent e) { return -2 * e.i * e.j; });
    f = TorusElement{};
    for (auto& [i, h] : groups) {
        if (!materialize && i >= 0) break;
        // P(v^s x) = 1 + v^(d + s d) x^d
        if (i > 0)
            for (int t = 1; t <= i; ++t) h.multiply_binomial(d - 2 * t * d, d);
        for (int t = 0; t < -i; ++t)
            if (!h.divide_binomial(d + 2 * t * d, d)) throw NotLaurent(not_laurent(k, k + 1));
        if (!materialize) continue;
        for (std::size_t n = 0; n < h.coeffs.size(); ++n)
            if (!h.coeffs[n].is_zero()) out.emplace_back(Exponent{h.lo + static_cast<int>(n), -i}, std::move(h.coeffs[n]));
        h = Univariate{};
    }
    return TorusElement::from_terms(std::move(out));
}

// f lives in T_k; returns it in T_{k-1} = <X_{k-1}, X_k>.
// With x = X_k, Y = X_{k-1}^-1 and P as above, X_{k+1} = P(x) Y, Y x = v^2 x Y, so
// X_{k+1}^j = prod_{t=0..j-1} P(v^2t x) Y^j for j > 0 and prod_{t=1..|j|} P(v^-2t x)^-1 Y^j for j < 0;
// finally x^s Y^j = v^(-2sj) X_{k-1}^-j x^s.
TorusElement step_down(TorusElement f, int k, int b, int c, bool materialize = true) {
    const int d = exchange_exponent(k, b, c);
    std::vector<TorusElement::Term> out;
    auto groups = group(
        f, [](Exponent e) { return e.j; }, [](Exponent e) { return e.i; }, [](Exponent) { return 0; });
    f = TorusElement{};
    for (auto& [j, h] : groups) {
        if (!materialize && j >= 0) break;
        for (int t = 0; t < j; ++t) h.multiply_binomial(d + 2 * t * d, d);
        for (int t = 1; t <= -j; ++t)
            if (!h.divide_binomial(d - 2 * t * d, d)) throw NotLaurent(not_laurent(k, k - 1));
        if (!materialize) continue;
        for (std::size_t n = 0; n < h.coeffs.size(); ++n) {
            if (h.coeffs[n].is_zero()) continue;
            const int s = h.lo + static_cast<int>(n);
            out.emplace_back(Exponent{-j, s}, h.coeffs[n].shifted(-2 * s * j));
        }
        h = Univariate{};
    }
    return TorusElement::from_terms(std::move(out));
}

} // namespace

TorusElement expand_in_cluster(const TorusElement& f, ClusterIndex m, int b, int c) {
    if (b < 1 || c < 1) throw InvalidArgument("expand_in_cluster: b and c must be positive");
    TorusElement g = f;
    for (int k = 1; k < m.m; ++k) g = step_up(std::move(g), k, b, c);
    for (int k = 1; k > m.m; --k) g = step_down(std::move(g), k, b, c);
    return g;
}

void check_laurent_in_clusters(const TorusElement& f, int lo, int hi, int b, int c) {
    if (b < 1 || c < 1) throw InvalidArgument("check_laurent_in_clusters: b and c must be positive");
    if (lo > 1 || hi < 1) throw InvalidArgument("check_laurent_in_clusters: the range must contain cluster 1");
    TorusElement g = f;
    for (int k = 1; k < hi; ++k) g = step_up(std::move(g), k, b, c, k + 1 < hi);
    g = f;
    for (int k = 1; k > lo; --k) g = step_down(std::move(g), k, b, c, k - 1 > lo);
}

} // namespace qgreedy
