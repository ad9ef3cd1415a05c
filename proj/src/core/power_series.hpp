#pragma once

#include "core/polynomial.hpp"
#include "core/rational.hpp"

#include <cstddef>
#include <vector>

namespace pfm {

// Truncated power series over Q in one variable. Coefficient k is valid for
// k < order(); the series carries no information beyond that. Binary
// operations truncate to the smaller order.
class PowerSeries {
public:
    PowerSeries() = default;
    explicit PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

    static PowerSeries zero(std::size_t order) { return PowerSeries(std::vector<Rational>(order)); }
    static PowerSeries constant(const Rational& c, std::size_t order);
    /// The identity series x, to the given order.
    static PowerSeries variable(std::size_t order);
    static PowerSeries from_polynomial(const Polynomial& p, std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size(); }
    const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    PowerSeries truncated(std::size_t order) const;

    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;
    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a);
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const Rational& c, const PowerSeries& a);

private:
    std::vector<Rational> coeffs_;
};

/// True when a and b agree on every coefficient below min(order(a), order(b)).
bool agree(const PowerSeries& a, const PowerSeries& b);
bool is_zero(const PowerSeries& f);

PowerSeries invert(const PowerSeries& f);
PowerSeries power(const PowerSeries& f, unsigned n);
PowerSeries log_series(const PowerSeries& f);
PowerSeries exp_series(const PowerSeries& f);

/// f(g(x)); requires g(0) = 0. Valid to min(order(f), order(g)).
PowerSeries compose(const PowerSeries& f, const PowerSeries& g);
/// Compositional inverse; requires f(0) = 0 and f'(0) != 0.
PowerSeries revert(const PowerSeries& f);

/// x d/dx: coefficient k is multiplied by k.
PowerSeries log_derivative(const PowerSeries& f);
/// d/dx; loses one order.
PowerSeries derivative(const PowerSeries& f);
/// x * f; gains one order.
PowerSeries shift_up(const PowerSeries& f);
/// f / x; requires f(0) = 0 and loses one order.
PowerSeries shift_down(const PowerSeries& f);

}  // namespace pfm
