#pragma once

#include "qgreedy/torus.hpp"

#include <compare>
#include <map>

namespace qgreedy {

struct GridPoint {
    int p = 0;
    int q = 0;
    friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

/// Element pointed at (a1, a2): sum over p, q >= 0 of e(p,q) X^{(bp - a1, cq - a2)},
/// where X^{(d1,d2)} = v^{d1 d2} X1^{d1} X2^{d2}. Only nonzero grid entries are
/// stored; e(0,0) = 1 always.
class PointedElement {
public:
    using Grid = std::map<GridPoint, LaurentV>;

    PointedElement(int b, int c, int a1, int a2, Grid grid);

    [[nodiscard]] int b() const noexcept { return b_; }
    [[nodiscard]] int c() const noexcept { return c_; }
    [[nodiscard]] int a1() const noexcept { return a1_; }
    [[nodiscard]] int a2() const noexcept { return a2_; }
    [[nodiscard]] const Grid& grid() const noexcept { return grid_; }
    [[nodiscard]] LaurentV coefficient(int p, int q) const;

    /// Copy with e(p,q) replaced; used to build deliberately broken inputs.
    [[nodiscard]] PointedElement with_coefficient(int p, int q, LaurentV value) const;

    [[nodiscard]] TorusElement to_torus() const;

    friend bool operator==(const PointedElement&, const PointedElement&) = default;

private:
    int b_;
    int c_;
    int a1_;
    int a2_;
    Grid grid_;
};

/// Commutative counterpart of PointedElement with integer coefficients.
struct IntegerPointedElement {
    int b = 1;
    int c = 1;
    int a1 = 0;
    int a2 = 0;
    std::map<GridPoint, Integer> grid;

    [[nodiscard]] Integer coefficient(int p, int q) const;
    friend bool operator==(const IntegerPointedElement&, const IntegerPointedElement&) = default;
};

/// v = 1 specialization of every grid entry.
IntegerPointedElement specialize_at_one(const PointedElement& x);

/// Reads f as a pointed element for the given (b, c). Throws NotPointed if an
/// exponent is off the shifted lattice, the corner term is missing, or the corner
/// coefficient is not 1.
PointedElement to_pointed(const TorusElement& f, int b, int c);

} // namespace qgreedy
