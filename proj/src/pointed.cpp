#include "qgreedy/pointed.hpp"

#include "qgreedy/errors.hpp"

#include <string>

namespace qgreedy {

PointedElement::PointedElement(int b, int c, int a1, int a2, Grid grid)
    : b_(b), c_(c), a1_(a1), a2_(a2), grid_(std::move(grid)) {
    if (b < 1 || c < 1) throw InvalidArgument("PointedElement: b and c must be positive");
    std::erase_if(grid_, [](const auto& kv) { return kv.second.is_zero(); });
    for (const auto& [pt, coeff] : grid_)
        if (pt.p < 0 || pt.q < 0) throw InvalidArgument("PointedElement: negative grid index");
    auto corner = grid_.find(GridPoint{0, 0});
    if (corner == grid_.end() || corner->second != LaurentV(1))
        throw InvalidArgument("PointedElement: e(0,0) must be 1");
}

LaurentV PointedElement::coefficient(int p, int q) const {
    auto it = grid_.find(GridPoint{p, q});
    return it == grid_.end() ? LaurentV{} : it->second;
}

PointedElement PointedElement::with_coefficient(int p, int q, LaurentV value) const {
    Grid g = grid_;
    g[GridPoint{p, q}] = std::move(value);
    return PointedElement(b_, c_, a1_, a2_, std::move(g));
}

TorusElement PointedElement::to_torus() const {
    std::vector<TorusElement::Term> terms;
    terms.reserve(grid_.size());
    for (const auto& [pt, coeff] : grid_) {
        const int i = b_ * pt.p - a1_;
        const int j = c_ * pt.q - a2_;
        terms.emplace_back(Exponent{i, j}, coeff.shifted(i * j));
    }
    return TorusElement::from_terms(std::move(terms));
}

Integer IntegerPointedElement::coefficient(int p, int q) const {
    auto it = grid.find(GridPoint{p, q});
    return it == grid.end() ? Integer(0) : it->second;
}

IntegerPointedElement specialize_at_one(const PointedElement& x) {
    IntegerPointedElement out{x.b(), x.c(), x.a1(), x.a2(), {}};
    for (const auto& [pt, coeff] : x.grid()) {
        Integer s = coeff.at_one();
        if (!s.is_zero()) out.grid.emplace(pt, std::move(s));
    }
    return out;
}

PointedElement to_pointed(const TorusElement& f, int b, int c) {
    if (b < 1 || c < 1) throw InvalidArgument("to_pointed: b and c must be positive");
    if (f.is_zero()) throw NotPointed("to_pointed: zero element");
    const int a1 = -f.min_i();
    const int a2 = -f.min_j();
    PointedElement::Grid grid;
    for (const auto& [e, coeff] : f.terms()) {
        const int di = e.i + a1;
        const int dj = e.j + a2;
        if (di % b != 0 || dj % c != 0)
            throw NotPointed("to_pointed: exponent (" + std::to_string(e.i) + "," + std::to_string(e.j) +
                             ") is off the lattice pointed at (" + std::to_string(a1) + "," +
                             std::to_string(a2) + ")");
        grid.emplace(GridPoint{di / b, dj / c}, coeff.shifted(-e.i * e.j));
    }
    auto corner = grid.find(GridPoint{0, 0});
    if (corner == grid.end()) throw NotPointed("to_pointed: no corner term");
    if (corner->second != LaurentV(1)) throw NotPointed("to_pointed: corner coefficient is " + to_string(corner->second));
    return PointedElement(b, c, a1, a2, std::move(grid));
}

} // namespace qgreedy
