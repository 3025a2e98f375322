#pragma once

// Quantum and commutative greedy elements of the rank-2 cluster algebra with
// exchange exponents (b, c), and checkers for their support and divisibility
// characterization.

#include "qgreedy/pointed.hpp"

#include <optional>
#include <string>

namespace qgreedy {

/// (a1, a2) > 0 componentwise and c a1^2 - b c a1 a2 + b a2^2 <= 0.
bool is_imaginary_root(int b, int c, int a1, int a2);

/// Membership of the lattice point (p, q) in the greedy support region for an
/// imaginary root (a1, a2): strictly below one of the two lines through
/// (a1/b, a2/c), plus the axis segments up to (a2, 0) and (0, a1).
/// Throws InvalidArgument for a non-imaginary pointing vector.
bool greedy_region_contains(int b, int c, int a1, int a2, int p, int q);

/// Bookkeeping from one run of the greedy recurrence.
struct GreedyTrace {
    /// Times the grid bound was doubled because the margin did not vanish.
    int margin_retries = 0;
    /// Grid points evaluated by both branches.
    int tie_points = 0;
};

/// Quantum greedy element X[a1, a2]. The grid is evaluated on p <= [a2]_+,
/// q <= [a1]_+ plus a one-cell margin that must vanish; otherwise the bound
/// doubles and the run repeats. Points on the tie line c a1 q = b a2 p are
/// evaluated by both branches; a mismatch throws InternalInconsistency.
PointedElement quantum_greedy(int b, int c, int a1, int a2, GreedyTrace* trace = nullptr);

/// Commutative greedy element x[a1, a2] from the recurrence with ordinary binomials.
IntegerPointedElement classical_greedy(int b, int c, int a1, int a2, GreedyTrace* trace = nullptr);

struct AxiomVerdict {
    bool pass = true;
    /// Offending grid point (support axiom).
    std::optional<GridPoint> point;
    /// Offending row q or column p (divisibility axiom).
    std::optional<int> row;
    std::optional<int> column;
    std::string detail;
};

/// Every nonzero e(p,q) lies in the greedy region. Requires an imaginary pointing vector.
AxiomVerdict check_support_axiom(const PointedElement& x);

/// Row and column generating polynomials in a commuting variable t are divisible
/// by the products prod_j (1 + v^{b(n+1-2j)} t), n = a2 - cq (rows), and
/// prod_j (1 + v^{c(n+1-2j)} t), n = a1 - bp (columns).
/// Requires an imaginary pointing vector.
AxiomVerdict check_divisibility_axiom(const PointedElement& x);

/// First grid entry with a negative v-coefficient, if any.
std::optional<GridPoint> first_negative_entry(const PointedElement& x);

} // namespace qgreedy
