#include "generators.hpp"

#include "qgreedy/bases.hpp"
#include "qgreedy/errors.hpp"

#include <doctest.h>

using namespace qgreedy;
using qgreedy::testing::v;

namespace {

TorusElement resum(const BasisExpansion& q, BasesContext& ctx) {
    TorusElement sum;
    for (const auto& [idx, coeff] : q.coeffs) sum += coeff * ctx.standard(idx);
    return sum;
}

} // namespace

TEST_CASE("standard basis expansion examples") {
    BasesContext ctx(2, 3);
    const BasisExpansion m = expand_in_standard_basis(ctx.standard({3, -2}), ctx);
    CHECK(m.coeffs.size() == 1);
    CHECK(m.pointing == IndexVector{3, -2});
    CHECK(m.coefficient({3, -2}) == LaurentV(1));

    const BasisExpansion x = expand_in_standard_basis(quantum_greedy(2, 3, 1, 0).to_torus(), ctx);
    CHECK(x.coeffs.size() == 1);
    CHECK(x.coefficient({1, 0}) == LaurentV(1));

    CHECK(expand_in_standard_basis(TorusElement{}, ctx).coeffs.empty());
    CHECK(expand_in_standard_basis(v(3) * ctx.standard({2, 1}) + ctx.standard({1, -1}), ctx).coefficient({2, 1}) ==
          v(3));
}

TEST_CASE("q-tables have unitriangular shape") {
    CHECK(greedy_to_standard_q(2, 3, 0, 0).coeffs == std::map<IndexVector, LaurentV>{{{0, 0}, LaurentV(1)}});
    CHECK(greedy_to_standard_q(2, 3, -1, -1).coeffs == std::map<IndexVector, LaurentV>{{{-1, -1}, LaurentV(1)}});

    BasesContext ctx(2, 3);
    const BasisExpansion& q = ctx.q_table({3, 4});
    CHECK(q.pointing == IndexVector{3, 4});
    CHECK(q.coefficient({3, 4}) == LaurentV(1));
    CHECK(q.coeffs.size() > 1);
    for (const auto& [idx, coeff] : q.coeffs)
        if (idx != IndexVector{3, 4}) CHECK(strictly_below(idx, {3, 4}));
}

TEST_CASE("q-table round trip") {
    for (auto [b, c] : {std::pair{1, 1}, {2, 2}, {2, 3}}) {
        BasesContext ctx(b, c);
        for (int a1 = -2; a1 <= 5; ++a1)
            for (int a2 = -2; a2 <= 5; ++a2) {
                CAPTURE(b);
                CAPTURE(c);
                CAPTURE(a1);
                CAPTURE(a2);
                CHECK(resum(ctx.q_table({a1, a2}), ctx) == ctx.greedy_torus({a1, a2}));
            }
    }
}

TEST_CASE("finite type: triangular equals greedy") {
    for (auto [b, c] : {std::pair{1, 1}, {1, 2}, {2, 1}, {1, 3}}) {
        BasesContext ctx(b, c);
        for (int a1 = -4; a1 <= 4; ++a1)
            for (int a2 = -4; a2 <= 4; ++a2) {
                CAPTURE(b);
                CAPTURE(c);
                CAPTURE(a1);
                CAPTURE(a2);
                CHECK(ctx.r_table({a1, a2}).coeffs.size() == 1);
                CHECK(ctx.triangular({a1, a2}) == ctx.greedy_torus({a1, a2}));
            }
    }
    CHECK(triangular_element(1, 1, 1, 1) == quantum_greedy(1, 1, 1, 1).to_torus());
}

TEST_CASE("triangular elements for nonpositive vectors are pointed monomials") {
    CHECK(triangular_element(2, 3, -2, -3) == pointed_monomial(2, 3));
    CHECK(triangular_element(2, 2, 0, 0) == TorusElement(1));
}

TEST_CASE("triangular basis properties") {
    for (auto [b, c] : {std::pair{2, 2}, {2, 3}}) {
        BasesContext ctx(b, c);
        for (int a1 = 0; a1 <= 4; ++a1)
            for (int a2 = 0; a2 <= 4; ++a2) {
                CAPTURE(b);
                CAPTURE(c);
                CAPTURE(a1);
                CAPTURE(a2);
                const BasisExpansion& r = ctx.r_table({a1, a2});
                CHECK(r.coefficient({a1, a2}) == LaurentV(1));
                for (const auto& [idx, coeff] : r.coeffs) {
                    CHECK(coeff.is_bar_invariant());
                    if (idx != IndexVector{a1, a2}) CHECK(strictly_below(idx, {a1, a2}));
                }
                const TorusElement& cc = ctx.triangular({a1, a2});
                CHECK(is_bar_invariant(cc));
                const BasisExpansion m = expand_in_standard_basis(cc, ctx);
                CHECK(m.coefficient({a1, a2}) == LaurentV(1));
                for (const auto& [idx, coeff] : m.coeffs)
                    if (idx != IndexVector{a1, a2}) CHECK(in_v_positive_lattice(coeff));
            }
    }
}

TEST_CASE("affine (2,2): the r-table at (1,1)") {
    const BasisExpansion r = triangular_r_coeffs(2, 2, 1, 1);
    for (const auto& [idx, coeff] : r.coeffs) CHECK(bar(coeff) == coeff);
    const TorusElement cc = triangular_element(2, 2, 1, 1);
    CHECK(is_bar_invariant(cc));
}

TEST_CASE("triangular support conjecture checker") {
    const TriangularSupportVerdict verdict = check_triangular_support_conjecture(2, 2, 1, 1);
    CHECK(verdict.agreements + static_cast<int>(verdict.mismatches.size()) == 4);
    // Direct evaluation of 2p^2 + 4pq + 2q^2 <= 2q + 2p on the 2x2 box.
    const PointedElement x = to_pointed(triangular_element(2, 2, 1, 1), 2, 2);
    int expected_agreements = 0;
    for (int p = 0; p <= 1; ++p)
        for (int q = 0; q <= 1; ++q) {
            const bool inside = 2 * p * p + 4 * p * q + 2 * q * q <= 2 * q + 2 * p;
            if (inside == !x.coefficient(p, q).is_zero()) ++expected_agreements;
        }
    CHECK(verdict.agreements == expected_agreements);
    CHECK(check_triangular_support_conjecture(2, 3, 3, 4).agreements > 0);
    CHECK_THROWS_AS(check_triangular_support_conjecture(1, 1, 1, 1), InvalidArgument);
}

TEST_CASE("v-positive lattice") {
    CHECK(in_v_positive_lattice(LaurentV{}));
    CHECK(in_v_positive_lattice(v(1) + v(4)));
    CHECK_FALSE(in_v_positive_lattice(LaurentV(1)));
    CHECK_FALSE(in_v_positive_lattice(v(2) + v(-1)));
}
