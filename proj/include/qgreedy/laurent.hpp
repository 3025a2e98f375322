#pragma once

// Exact arithmetic in Z[v, v^-1].

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qgreedy {

using Integer = boost::multiprecision::cpp_int;

/// Laurent polynomial in one variable v with arbitrary-precision integer
/// coefficients. Terms are kept sorted by ascending exponent and no stored
/// coefficient is zero, so structural equality is mathematical equality.
class LaurentV {
public:
    using Term = std::pair<int, Integer>;

    LaurentV() = default;
    LaurentV(int constant); // NOLINT(google-explicit-constructor)
    explicit LaurentV(Integer constant);

    /// c * v^exponent
    static LaurentV monomial(int exponent, Integer coeff = 1);
    /// Builds a canonical value from arbitrary terms (duplicates summed, zeros dropped).
    static LaurentV from_terms(std::vector<Term> terms);

    [[nodiscard]] const std::vector<Term>& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
    [[nodiscard]] int min_exponent() const; // requires !is_zero()
    [[nodiscard]] int max_exponent() const; // requires !is_zero()
    [[nodiscard]] Integer coefficient(int exponent) const;

    /// Value at v = 1.
    [[nodiscard]] Integer at_one() const;
    /// True for +-v^k.
    [[nodiscard]] bool is_unit() const noexcept;
    [[nodiscard]] bool is_constant() const noexcept;
    /// All coefficients >= 0 (zero counts as nonnegative).
    [[nodiscard]] bool is_nonnegative() const noexcept;
    [[nodiscard]] bool is_bar_invariant() const;

    /// this * v^k
    [[nodiscard]] LaurentV shifted(int k) const;

    /// Quotient q with q * divisor == *this, if one exists in Z[v^+-1].
    [[nodiscard]] std::optional<LaurentV> divide_exact(const LaurentV& divisor) const;

    LaurentV& operator+=(const LaurentV& rhs);
    LaurentV& operator-=(const LaurentV& rhs);
    LaurentV& operator*=(const LaurentV& rhs);

    friend LaurentV operator+(LaurentV lhs, const LaurentV& rhs) { return lhs += rhs; }
    friend LaurentV operator-(LaurentV lhs, const LaurentV& rhs) { return lhs -= rhs; }
    friend LaurentV operator*(const LaurentV& lhs, const LaurentV& rhs);
    friend LaurentV operator-(LaurentV f);
    friend bool operator==(const LaurentV&, const LaurentV&) = default;

    /// Adds coeff * (f * v^shift) into this value.
    void add_scaled(const LaurentV& f, const LaurentV& coeff, int shift = 0);

private:
    std::vector<Term> terms_;
};

/// v -> v^-1.
LaurentV bar(const LaurentV& f);

/// Terms with exponent <= 0 (constant term included).
LaurentV nonpositive_part(const LaurentV& f);

/// The unique bar-invariant f whose nonpositive part is g. Throws
/// InvalidArgument if g has a positive exponent.
LaurentV symmetrize_from_nonpositive(const LaurentV& g);

/// Bar-invariant quantum number [n]_w at w = v^d.
LaurentV quantum_number(int n, int d);

/// Bar-invariant quantum binomial [n over k]_w at w = v^d, for any integer n
/// and k >= 0. Computed as a product of quantum numbers divided exactly by [k]_w!.
LaurentV quantum_binomial(int n, int k, int d);

/// Ordinary binomial coefficient, extended to negative n.
Integer binomial(int n, int k);

/// Plain text, ascending exponents: "v^-2 - 1 + v^2".
std::string to_string(const LaurentV& f);
/// LaTeX, descending exponents: "v^{2}-1+v^{-2}".
std::string to_latex(const LaurentV& f);

} // namespace qgreedy
