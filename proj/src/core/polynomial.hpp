#pragma once

#include "core/rational.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pfm {

// Dense univariate polynomial with integer coefficients; index = exponent.
// Trailing zeros are stripped, so the zero polynomial has no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Integer> coeffs);
    Polynomial(std::initializer_list<long> coeffs);

    static Polynomial monomial(const Integer& c, std::size_t power);

    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    Integer coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }
    Integer leading() const { return is_zero() ? Integer(0) : coeffs_.back(); }

    /// Non-negative gcd of the coefficients; 0 for the zero polynomial.
    Integer content() const;
    /// Number of leading factors of the variable: the lowest exponent with a nonzero coefficient.
    std::size_t valuation() const;

    Rational operator()(const Rational& x) const;

    /// Multiplies by x^k (k may be negative as long as the division is exact).
    Polynomial shifted(long k) const;
    Polynomial divided_exactly(const Integer& d) const;

    std::string to_string(std::string_view var) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Integer& c, const Polynomial& p);
    friend Polynomial operator-(const Polynomial& p);

private:
    void trim();
    std::vector<Integer> coeffs_;
};

/// Scales a rational vector to integers with gcd 1, preserving signs.
/// The zero vector maps to the zero vector.
std::vector<Integer> primitive_integers(std::span<const Rational> values);

}  // namespace pfm
