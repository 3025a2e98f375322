#pragma once

// Conversions between the standard monomial, quantum greedy and triangular bases.

#include "qgreedy/clusters.hpp"
#include "qgreedy/greedy.hpp"

#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace qgreedy {

/// A pointing vector (a1, a2) used as a basis index.
struct IndexVector {
    int a1 = 0;
    int a2 = 0;
    friend auto operator<=>(const IndexVector&, const IndexVector&) = default;
};

/// Strict componentwise order: a1' < a1 and a2' < a2.
constexpr bool strictly_below(IndexVector lo, IndexVector hi) noexcept { return lo.a1 < hi.a1 && lo.a2 < hi.a2; }

enum class BasisTag { Standard, Greedy };

std::string to_string(BasisTag tag);

/// Finite expansion sum coeffs[a'] * B[a'] in the basis named by target.
struct BasisExpansion {
    BasisTag target = BasisTag::Standard;
    IndexVector pointing;
    std::map<IndexVector, LaurentV> coeffs;

    [[nodiscard]] LaurentV coefficient(IndexVector a) const;
};

/// Memoized per-(b, c) building blocks; safe to share between threads.
/// Returned references stay valid for the lifetime of the context.
class BasesContext {
public:
    BasesContext(int b, int c, ClusterCache& cache = ClusterCache::process_default());

    [[nodiscard]] int b() const noexcept { return b_; }
    [[nodiscard]] int c() const noexcept { return c_; }
    [[nodiscard]] ClusterCache& cluster_cache() const noexcept { return cache_; }

    const TorusElement& standard(IndexVector a);
    const PointedElement& greedy(IndexVector a);
    const TorusElement& greedy_torus(IndexVector a);
    /// Expansion of X[a] in standard monomials (validated).
    const BasisExpansion& q_table(IndexVector a);
    /// Expansion of C[a] in greedy elements.
    const BasisExpansion& r_table(IndexVector a);
    /// C[a] in the initial torus (P1 and P2 verified).
    const TorusElement& triangular(IndexVector a);

private:
    template <class T, class Make>
    const T& memo(std::map<IndexVector, std::unique_ptr<T>>& table, IndexVector a, Make&& make);

    int b_;
    int c_;
    ClusterCache& cache_;
    std::mutex mutex_;
    std::map<IndexVector, std::unique_ptr<TorusElement>> standard_;
    std::map<IndexVector, std::unique_ptr<PointedElement>> greedy_;
    std::map<IndexVector, std::unique_ptr<TorusElement>> greedy_torus_;
    std::map<IndexVector, std::unique_ptr<BasisExpansion>> q_;
    std::map<IndexVector, std::unique_ptr<BasisExpansion>> r_;
    std::map<IndexVector, std::unique_ptr<TorusElement>> triangular_;
};

/// Peels f into standard monomials: repeatedly take the remaining exponent d that
/// is smallest by (d1 + d2, then d1), record its pointed coefficient at index -d,
/// and subtract that multiple of M[-d]. Throws NonTermination after
/// 4 x (initial term count) steps.
BasisExpansion expand_in_standard_basis(const TorusElement& f, BasesContext& ctx);
BasisExpansion expand_in_standard_basis(const TorusElement& f, int b, int c);

/// q-coefficients of X[a1,a2]; throws OrderViolation unless the leading index is
/// (a1,a2) with coefficient 1 and every other index is strictly below it.
BasisExpansion greedy_to_standard_q(int b, int c, int a1, int a2);

/// r-coefficients of C[a1,a2] in the greedy basis, from the nonpositive-part
/// recursion over the q-tables of every index reachable below (a1, a2).
BasisExpansion triangular_r_coeffs(int b, int c, int a1, int a2);

/// C[a1,a2] = sum r * X[a']; throws P1Violation / P2Violation if the result is not
/// bar-invariant or not congruent to M[a1,a2] modulo the v-positive lattice.
TorusElement triangular_element(int b, int c, int a1, int a2);

struct SupportMismatch {
    GridPoint point;
    /// true: e(p,q) != 0 where the inequality fails; false: e(p,q) == 0 where it holds.
    bool nonzero_outside = false;
};

struct TriangularSupportVerdict {
    int agreements = 0;
    std::vector<SupportMismatch> mismatches;
    [[nodiscard]] bool consistent() const noexcept { return mismatches.empty(); }
};

/// Compares the support of C[a1,a2] on 0 <= p <= a2, 0 <= q <= a1 with
/// b p^2 + b c p q + c q^2 <= c a1 q + b a2 p. Requires an imaginary root.
TriangularSupportVerdict check_triangular_support_conjecture(BasesContext& ctx, int a1, int a2);
TriangularSupportVerdict check_triangular_support_conjecture(int b, int c, int a1, int a2);

/// True iff every coefficient lies in v Z[v].
bool in_v_positive_lattice(const LaurentV& f);

} // namespace qgreedy
