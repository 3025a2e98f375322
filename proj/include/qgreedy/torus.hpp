#pragma once

// The rank-2 quantum torus Z[v^+-1]<X1^+-1, X2^+-1 : X2 X1 = v^2 X1 X2>.

#include "qgreedy/laurent.hpp"

#include <compare>
#include <optional>
#include <vector>

namespace qgreedy {

/// Exponent pair (i, j) of the normal-ordered monomial X1^i X2^j.
struct Exponent {
    int i = 0;
    int j = 0;
    friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

/// Finite sum of c_ij(v) X1^i X2^j, X1 powers always to the left.
/// Terms are sorted lexicographically by (i, j) and have nonzero coefficients.
class TorusElement {
public:
    using Term = std::pair<Exponent, LaurentV>;

    TorusElement() = default;
    TorusElement(int constant); // NOLINT(google-explicit-constructor)
    explicit TorusElement(LaurentV constant);

    static TorusElement monomial(int i, int j, LaurentV coeff = 1);
    static TorusElement from_terms(std::vector<Term> terms);

    [[nodiscard]] const std::vector<Term>& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
    [[nodiscard]] LaurentV coefficient(Exponent e) const;

    /// Smallest exponent in each coordinate; requires a nonzero element.
    [[nodiscard]] int min_i() const;
    [[nodiscard]] int min_j() const;

    /// Every coefficient lies in Z>=0[v^+-1].
    [[nodiscard]] bool is_nonnegative() const;

    TorusElement& operator+=(const TorusElement& rhs);
    TorusElement& operator-=(const TorusElement& rhs);

    friend TorusElement operator+(TorusElement lhs, const TorusElement& rhs) { return lhs += rhs; }
    friend TorusElement operator-(TorusElement lhs, const TorusElement& rhs) { return lhs -= rhs; }
    friend TorusElement operator-(TorusElement f);
    friend TorusElement operator*(const TorusElement& lhs, const TorusElement& rhs);
    friend TorusElement operator*(const LaurentV& scalar, TorusElement f);
    friend bool operator==(const TorusElement&, const TorusElement&) = default;

private:
    std::vector<Term> terms_;
};

/// Normal-ordered product; (X1^a X2^b)(X1^c X2^d) = v^{2bc} X1^{a+c} X2^{b+d}.
TorusElement te_mul(const TorusElement& f, const TorusElement& g);

/// f^n for n >= 0.
TorusElement te_pow(const TorusElement& f, int n);

/// The bar anti-involution: bar each coefficient and multiply the (i,j) term by v^{2ij}.
TorusElement te_bar(const TorusElement& f);

inline bool is_bar_invariant(const TorusElement& f) { return te_bar(f) == f; }

/// v^{a1 a2} X1^{a1} X2^{a2}.
TorusElement pointed_monomial(int a1, int a2);

/// Right quotient: q with q * g == f, or nullopt when no torus quotient exists.
std::optional<TorusElement> exact_divide(const TorusElement& f, const TorusElement& g);

/// Left quotient: q with g * q == f, or nullopt.
std::optional<TorusElement> exact_left_divide(const TorusElement& f, const TorusElement& g);

/// Replaces v by 1 coefficient-wise (the commutative specialization).
std::vector<std::pair<Exponent, Integer>> specialize_at_one(const TorusElement& f);

/// Index m of the cluster {X_m, X_{m+1}}.
struct ClusterIndex {
    int m = 1;
    friend auto operator<=>(const ClusterIndex&, const ClusterIndex&) = default;
};

/// Exponent d in the exchange relation X_{m+1} X_{m-1} = v^d X_m^d + 1.
constexpr int exchange_exponent(int m, int b, int c) noexcept { return (m % 2 != 0) ? b : c; }

/// Expansion of f (given in X1, X2) in the cluster {X_m, X_{m+1}}; the result's
/// variables are read as (X_m, X_{m+1}). Moves one cluster at a time, grouping
/// terms by the power of the departing variable; each group is a one-variable
/// Laurent polynomial that must be divisible by the product of shifted exchange
/// binomials its negative power introduces. Throws NotLaurent when one is not.
TorusElement expand_in_cluster(const TorusElement& f, ClusterIndex m, int b, int c);

/// Throws NotLaurent unless f is Laurent in every cluster lo <= m <= hi (lo <= 1 <= hi).
/// The expansions in the two outermost clusters are checked but never built.
void check_laurent_in_clusters(const TorusElement& f, int lo, int hi, int b, int c);

std::string to_string(const TorusElement& f);
std::string to_latex(const TorusElement& f);

} // namespace qgreedy
