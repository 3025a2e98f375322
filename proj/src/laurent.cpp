#include "qgreedy/laurent.hpp"

#include "qgreedy/errors.hpp"

#include <algorithm>
#include <sstream>

namespace qgreedy {

namespace {

// Dense accumulation pays off unless the exponent span dwarfs the work.
constexpr std::size_t kDenseSlack = 64;

std::vector<LaurentV::Term> merge(const std::vector<LaurentV::Term>& a,
                                  const std::vector<LaurentV::Term>& b, bool subtract) {
    std::vector<LaurentV::Term> out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            out.push_back(*ia++);
        } else if (ia == a.end() || ib->first < ia->first) {
            out.emplace_back(ib->first, subtract ? Integer(-ib->second) : ib->second);
            ++ib;
        } else {
            Integer s = subtract ? Integer(ia->second - ib->second) : Integer(ia->second + ib->second);
            if (!s.is_zero()) out.emplace_back(ia->first, std::move(s));
            ++ia;
            ++ib;
        }
    }
    return out;
}

void append_power(std::ostringstream& os, int e, bool latex) {
    if (e == 0) return;
    os << 'v';
    if (e == 1) return;
    if (latex)
        os << "^{" << e << '}';
    else
        os << '^' << e;
}

} // namespace

LaurentV::LaurentV(int constant) {
    if (constant != 0) terms_.emplace_back(0, Integer(constant));
}

LaurentV::LaurentV(Integer constant) {
    if (!constant.is_zero()) terms_.emplace_back(0, std::move(constant));
}

LaurentV LaurentV::monomial(int exponent, Integer coeff) {
    LaurentV f;
    if (!coeff.is_zero()) f.terms_.emplace_back(exponent, std::move(coeff));
    return f;
}

LaurentV LaurentV::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& x, const Term& y) { return x.first < y.first; });
    LaurentV f;
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

int LaurentV::min_exponent() const {
    if (terms_.empty()) throw InvalidArgument("min_exponent of zero Laurent polynomial");
    return terms_.front().first;
}

int LaurentV::max_exponent() const {
    if (terms_.empty()) throw InvalidArgument("max_exponent of zero Laurent polynomial");
    return terms_.back().first;
}

Integer LaurentV::coefficient(int exponent) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const Term& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == exponent) return it->second;
    return 0;
}

Integer LaurentV::at_one() const {
    Integer s = 0;
    for (const auto& t : terms_) s += t.second;
    return s;
}

bool LaurentV::is_unit() const noexcept {
    return terms_.size() == 1 && (terms_[0].second == 1 || terms_[0].second == -1);
}

bool LaurentV::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

bool LaurentV::is_nonnegative() const noexcept {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second > 0; });
}

bool LaurentV::is_bar_invariant() const { return bar(*this) == *this; }

LaurentV LaurentV::shifted(int k) const {
    LaurentV f = *this;
    for (auto& t : f.terms_) t.first += k;
    return f;
}

LaurentV& LaurentV::operator+=(const LaurentV& rhs) {
    if (rhs.terms_.empty()) return *this;
    terms_ = merge(terms_, rhs.terms_, false);
    return *this;
}

LaurentV& LaurentV::operator-=(const LaurentV& rhs) {
    if (rhs.terms_.empty()) return *this;
    terms_ = merge(terms_, rhs.terms_, true);
    return *this;
}

LaurentV& LaurentV::operator*=(const LaurentV& rhs) { return *this = *this * rhs; }

LaurentV operator*(const LaurentV& lhs, const LaurentV& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    if (rhs.terms_.size() == 1) {
        LaurentV out = lhs;
        const auto& [e, c] = rhs.terms_.front();
        for (auto& t : out.terms_) {
            t.first += e;
            t.second *= c;
        }
        return out;
    }
    if (lhs.terms_.size() == 1) return rhs * lhs;

    const int lo = lhs.min_exponent() + rhs.min_exponent();
    const int hi = lhs.max_exponent() + rhs.max_exponent();
    const auto span = static_cast<std::size_t>(hi - lo + 1);
    const std::size_t work = lhs.terms_.size() * rhs.terms_.size();

    LaurentV out;
    if (span <= kDenseSlack * work) {
        std::vector<Integer> acc(span);
        for (const auto& [ea, ca] : lhs.terms_)
            for (const auto& [eb, cb] : rhs.terms_) acc[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
        for (std::size_t i = 0; i < span; ++i)
            if (!acc[i].is_zero()) out.terms_.emplace_back(lo + static_cast<int>(i), std::move(acc[i]));
        return out;
    }
    std::vector<LaurentV::Term> raw;
    raw.reserve(work);
    for (const auto& [ea, ca] : lhs.terms_)
        for (const auto& [eb, cb] : rhs.terms_) raw.emplace_back(ea + eb, ca * cb);
    return LaurentV::from_terms(std::move(raw));
}

LaurentV operator-(LaurentV f) {
    for (auto& t : f.terms_) t.second = -t.second;
    return f;
}

void LaurentV::add_scaled(const LaurentV& f, const LaurentV& coeff, int shift) {
    if (f.is_zero() || coeff.is_zero()) return;
    *this += (f * coeff).shifted(shift);
}

std::optional<LaurentV> LaurentV::divide_exact(const LaurentV& divisor) const {
    if (divisor.is_zero()) throw InvalidArgument("division by the zero Laurent polynomial");
    if (is_zero()) return LaurentV{};

    const int lo = min_exponent();
    const int hi = max_exponent();
    const int dlo = divisor.min_exponent();
    const int dhi = divisor.max_exponent();
    const Integer& lead = divisor.terms_.back().second;

    std::vector<Integer> rem(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& [e, c] : terms_) rem[static_cast<std::size_t>(e - lo)] = c;

    std::vector<Term> quotient;
    for (int e = hi; e >= lo; --e) {
        Integer& r = rem[static_cast<std::size_t>(e - lo)];
        if (r.is_zero()) continue;
        const int qe = e - dhi;
        if (qe + dlo < lo) return std::nullopt;
        Integer qc;
        Integer rc;
        divide_qr(r, lead, qc, rc);
        if (!rc.is_zero()) return std::nullopt;
        for (const auto& [de, dc] : divisor.terms_) rem[static_cast<std::size_t>(de + qe - lo)] -= qc * dc;
        quotient.emplace_back(qe, std::move(qc));
    }
    std::reverse(quotient.begin(), quotient.end());
    LaurentV q;
    q.terms_ = std::move(quotient);
    return q;
}

LaurentV bar(const LaurentV& f) {
    std::vector<LaurentV::Term> terms;
    terms.reserve(f.size());
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) terms.emplace_back(-it->first, it->second);
    return LaurentV::from_terms(std::move(terms));
}

LaurentV nonpositive_part(const LaurentV& f) {
    std::vector<LaurentV::Term> terms;
    for (const auto& t : f.terms())
        if (t.first <= 0) terms.push_back(t);
    return LaurentV::from_terms(std::move(terms));
}

LaurentV symmetrize_from_nonpositive(const LaurentV& g) {
    std::vector<LaurentV::Term> terms;
    for (const auto& [e, c] : g.terms()) {
        if (e > 0) throw InvalidArgument("symmetrize_from_nonpositive: input has a positive exponent");
        terms.emplace_back(e, c);
        if (e < 0) terms.emplace_back(-e, c);
    }
    return LaurentV::from_terms(std::move(terms));
}

LaurentV quantum_number(int n, int d) {
    if (n == 0) return {};
    const int m = n < 0 ? -n : n;
    const int sign = n < 0 ? -1 : 1;
    std::vector<LaurentV::Term> terms;
    terms.reserve(static_cast<std::size_t>(m));
    for (int e = -(m - 1); e <= m - 1; e += 2) terms.emplace_back(d * e, Integer(sign));
    return LaurentV::from_terms(std::move(terms));
}

LaurentV quantum_binomial(int n, int k, int d) {
    if (k < 0) throw InvalidArgument("quantum_binomial: k must be nonnegative");
    if (d <= 0) throw InvalidArgument("quantum_binomial: d must be positive");
    if (k == 0) return 1;
    if (n >= 0 && n < k) return {};
    LaurentV result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= quantum_number(n - i + 1, d);
        auto q = result.divide_exact(quantum_number(i, d));
        if (!q) throw InternalInconsistency("quantum_binomial: inexact division by [" + std::to_string(i) + "]");
        result = std::move(*q);
    }
    return result;
}

Integer binomial(int n, int k) {
    if (k < 0) return 0;
    if (n < 0) {
        Integer b = binomial(k - n - 1, k);
        return (k % 2 == 0) ? b : Integer(-b);
    }
    if (k > n) return 0;
    Integer r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

std::string to_string(const LaurentV& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        Integer mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (e == 0 || mag != 1) os << mag;
        append_power(os, e, false);
    }
    return os.str();
}

std::string to_latex(const LaurentV& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        Integer mag = abs(c);
        if (c < 0)
            os << '-';
        else if (!first)
            os << '+';
        first = false;
        if (e == 0 || mag != 1) os << mag;
        append_power(os, e, true);
    }
    return os.str();
}

} // namespace qgreedy
