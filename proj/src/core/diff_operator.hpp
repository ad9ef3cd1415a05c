#pragma once

#include "core/polynomial.hpp"
#include "core/power_series.hpp"

#include <string>
#include <vector>

namespace pfm {

// sum_i A_i(x) D^i with D = x d/dx. Construction normalizes: trailing zero
// coefficients are dropped, the joint content of all A_i is divided out and
// the sign is fixed so the lowest nonzero coefficient of the leading A_r is
// positive. Two operators describing the same equation compare equal.
class DiffOperator {
public:
    explicit DiffOperator(std::vector<Polynomial> coeffs, std::string variable = "phi");

    const std::vector<Polynomial>& coeffs() const noexcept { return coeffs_; }
    const Polynomial& coeff(std::size_t i) const { return coeffs_.at(i); }
    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const std::string& variable() const noexcept { return variable_; }
    /// Largest degree among the A_i.
    int max_degree() const;

    /// One D-power per line, highest first; content and powers of the
    /// variable are pulled out of each coefficient.
    std::string to_text() const;

    friend bool operator==(const DiffOperator&, const DiffOperator&) = default;

private:
    std::vector<Polynomial> coeffs_;
    std::string variable_;
};

/// sum_i A_i D^i f. The result keeps order(f) - max_degree() coefficients.
PowerSeries apply(const DiffOperator& op, const PowerSeries& f);

/// Number of series coefficients fit_operator needs for the given shape.
std::size_t fit_series_length(std::size_t order, std::size_t max_deg);
inline constexpr std::size_t fit_surplus_terms = 5;

/// The unique (up to scale) operator of the given order with deg A_i <=
/// max_deg annihilating f. The last fit_surplus_terms coefficients of f are
/// held back from the solve and verified afterwards.
DiffOperator fit_operator(const PowerSeries& f, std::size_t order, std::size_t max_deg);

/// Substitutes x -> 1/x and D -> -D - twist, clears the smallest power of
/// the variable and renormalizes. The variable name toggles a trailing '~'.
DiffOperator invert_coordinate(const DiffOperator& op, long twist);

/// sum_i A_i(0) t^i.
Polynomial indicial_polynomial(const DiffOperator& op);
/// Rational roots of the indicial polynomial with multiplicity, ascending.
/// Throws Error(no_solution) naming the leftover factor if any root is irrational.
std::vector<Rational> indicial_roots(const DiffOperator& op);
/// Indicial roots are all zero with multiplicity equal to the order.
bool is_mum(const DiffOperator& op);

/// Power series solution with f(0) = 1 via the coefficient recurrence.
PowerSeries holomorphic_solution(const DiffOperator& op, std::size_t order);

struct FrobeniusPair {
    PowerSeries f0;
    /// f1 = f0 * (g + log x), g(0) = 0.
    PowerSeries g;
};

FrobeniusPair frobenius_log_solution(const DiffOperator& op, const PowerSeries& f0);

}  // namespace pfm
