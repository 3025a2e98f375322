#include "qgreedy/torus.hpp"

#include "qgreedy/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qgreedy {

namespace {

using TermMap = std::map<Exponent, LaurentV>;

TorusElement from_map(TermMap&& m) {
    std::vector<TorusElement::Term> terms;
    terms.reserve(m.size());
    for (auto& [e, c] : m)
        if (!c.is_zero()) terms.emplace_back(e, std::move(c));
    return TorusElement::from_terms(std::move(terms));
}

void accumulate(TermMap& acc, Exponent e, LaurentV c) {
    auto [it, inserted] = acc.try_emplace(e, std::move(c));
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

struct Box {
    int imin, imax, jmin, jmax;
};

Box newton_box(const TorusElement& f) {
    Box b{f.terms().front().first.i, f.terms().back().first.i, f.terms().front().first.j,
          f.terms().front().first.j};
    for (const auto& [e, c] : f.terms()) {
        b.jmin = std::min(b.jmin, e.j);
        b.jmax = std::max(b.jmax, e.j);
    }
    return b;
}

// Long division against the term of g that is largest with X2-degree dominant.
// The quotient's Newton box is fixed by the extreme degrees of f and g, which
// bounds the loop.
std::optional<TorusElement> divide(const TorusElement& f, const TorusElement& g, bool left) {
    if (g.is_zero()) throw InvalidArgument("exact_divide: division by zero");
    if (f.is_zero()) return TorusElement{};

    const Box fb = newton_box(f);
    const Box gb = newton_box(g);
    const Box qb{fb.imin - gb.imin, fb.imax - gb.imax, fb.jmin - gb.jmin, fb.jmax - gb.jmax};
    if (qb.imin > qb.imax || qb.jmin > qb.jmax) return std::nullopt;

    // Keyed (j, i) so the largest key is the X2-dominant leading term.
    auto key = [](Exponent e) { return std::pair{e.j, e.i}; };
    std::map<std::pair<int, int>, LaurentV> rem;
    for (const auto& [e, c] : f.terms()) rem.emplace(key(e), c);

    const TorusElement::Term* lead = &g.terms().front();
    for (const auto& t : g.terms())
        if (key(t.first) > key(lead->first)) lead = &t;
    const Exponent le = lead->first;

    std::vector<TorusElement::Term> quotient;
    while (!rem.empty()) {
        auto top = std::prev(rem.end());
        const Exponent re{top->first.second, top->first.first};
        const int alpha = re.i - le.i;
        const int beta = re.j - le.j;
        if (alpha < qb.imin || alpha > qb.imax || beta < qb.jmin || beta > qb.jmax) return std::nullopt;

        // Coefficient of v picked up when the quotient monomial passes the lead term.
        const int twist = left ? 2 * le.j * alpha : 2 * beta * le.i;
        auto kappa = top->second.divide_exact(lead->second.shifted(twist));
        if (!kappa) return std::nullopt;

        for (const auto& [ge, gc] : g.terms()) {
            const int tw = left ? 2 * ge.j * alpha : 2 * beta * ge.i;
            const auto k = std::pair{beta + ge.j, alpha + ge.i};
            LaurentV delta = (gc * *kappa).shifted(tw);
            auto [it, inserted] = rem.try_emplace(k, -delta);
            if (!inserted) {
                it->second -= delta;
                if (it->second.is_zero()) rem.erase(it);
            }
        }
        quotient.emplace_back(Exponent{alpha, beta}, std::move(*kappa));
    }
    return TorusElement::from_terms(std::move(quotient));
}

void append_monomial(std::ostringstream& os, Exponent e, bool latex) {
    auto var = [&](int idx, int p) {
        if (p == 0) return;
        os << (latex ? "X_{" : "X") << idx << (latex ? "}" : "");
        if (p != 1) {
            if (latex)
                os << "^{" << p << '}';
            else
                os << '^' << p;
        }
    };
    var(1, e.i);
    var(2, e.j);
}

std::string render(const TorusElement& f, bool latex) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        if (!first) os << (latex ? "+" : " + ");
        first = false;
        const bool bare = e.i == 0 && e.j == 0;
        if (bare) {
            os << (latex ? to_latex(c) : to_string(c));
            continue;
        }
        if (c == LaurentV(1)) {
        } else if (c == LaurentV(-1)) {
            os << '-';
        } else {
            os << '(' << (latex ? to_latex(c) : to_string(c)) << ')';
            if (!latex) os << ' ';
        }
        append_monomial(os, e, latex);
    }
    return os.str();
}

} // namespace

TorusElement::TorusElement(int constant) : TorusElement(LaurentV(constant)) {}

TorusElement::TorusElement(LaurentV constant) {
    if (!constant.is_zero()) terms_.emplace_back(Exponent{0, 0}, std::move(constant));
}

TorusElement TorusElement::monomial(int i, int j, LaurentV coeff) {
    TorusElement f;
    if (!coeff.is_zero()) f.terms_.emplace_back(Exponent{i, j}, std::move(coeff));
    return f;
}

TorusElement TorusElement::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
    TorusElement f;
    for (auto& [e, c] : terms) {
        if (!f.terms_.empty() && f.terms_.back().first == e) {
            f.terms_.back().second += c;
            if (f.terms_.back().second.is_zero()) f.terms_.pop_back();
        } else if (!c.is_zero()) {
            f.terms_.emplace_back(e, std::move(c));
        }
    }
    return f;
}

LaurentV TorusElement::coefficient(Exponent e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, Exponent x) { return t.first < x; });
    if (it != terms_.end() && it->first == e) return it->second;
    return {};
}

int TorusElement::min_i() const {
    if (terms_.empty()) throw InvalidArgument("min_i of zero torus element");
    return terms_.front().first.i;
}

int TorusElement::min_j() const {
    if (terms_.empty()) throw InvalidArgument("min_j of zero torus element");
    int m = terms_.front().first.j;
    for (const auto& t : terms_) m = std::min(m, t.first.j);
    return m;
}

bool TorusElement::is_nonnegative() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second.is_nonnegative(); });
}

TorusElement& TorusElement::operator+=(const TorusElement& rhs) {
    std::vector<Term> all = terms_;
    all.insert(all.end(), rhs.terms_.begin(), rhs.terms_.end());
    return *this = from_terms(std::move(all));
}

TorusElement& TorusElement::operator-=(const TorusElement& rhs) { return *this += -rhs; }

TorusElement operator-(TorusElement f) {
    for (auto& t : f.terms_) t.second = -t.second;
    return f;
}

TorusElement operator*(const LaurentV& scalar, TorusElement f) {
    if (scalar.is_zero()) return {};
    for (auto& t : f.terms_) t.second *= scalar;
    return f;
}

TorusElement operator*(const TorusElement& lhs, const TorusElement& rhs) {
    TermMap acc;
    for (const auto& [e1, c1] : lhs.terms_)
        for (const auto& [e2, c2] : rhs.terms_)
            accumulate(acc, Exponent{e1.i + e2.i, e1.j + e2.j}, (c1 * c2).shifted(2 * e1.j * e2.i));
    return from_map(std::move(acc));
}

TorusElement te_mul(const TorusElement& f, const TorusElement& g) { return f * g; }

TorusElement te_pow(const TorusElement& f, int n) {
    if (n < 0) throw InvalidArgument("te_pow: negative exponent");
    TorusElement result = 1;
    TorusElement base = f;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

TorusElement te_bar(const TorusElement& f) {
    std::vector<TorusElement::Term> terms;
    terms.reserve(f.size());
    for (const auto& [e, c] : f.terms()) terms.emplace_back(e, bar(c).shifted(2 * e.i * e.j));
    return TorusElement::from_terms(std::move(terms));
}

TorusElement pointed_monomial(int a1, int a2) { return TorusElement::monomial(a1, a2, LaurentV::monomial(a1 * a2)); }

std::optional<TorusElement> exact_divide(const TorusElement& f, const TorusElement& g) {
    return divide(f, g, false);
}

std::optional<TorusElement> exact_left_divide(const TorusElement& f, const TorusElement& g) {
    return divide(f, g, true);
}

std::vector<std::pair<Exponent, Integer>> specialize_at_one(const TorusElement& f) {
    std::vector<std::pair<Exponent, Integer>> out;
    for (const auto& [e, c] : f.terms()) {
        Integer s = c.at_one();
        if (!s.is_zero()) out.emplace_back(e, std::move(s));
    }
    return out;
}

std::string to_string(const TorusElement& f) { return render(f, false); }
std::string to_latex(const TorusElement& f) { return render(f, true); }

} // namespace qgreedy
