#pragma once

#include "core/polynomial.hpp"
#include "core/power_series.hpp"

namespace pfm {

// P/Q with integer coefficients. Construction cancels common factors, makes
// the joint content of P and Q equal to 1 and makes Q(0) positive. Q(0) must
// be nonzero so the function has a power series at 0.
class RationalFunction {
public:
    RationalFunction(Polynomial numerator, Polynomial denominator);

    const Polynomial& numerator() const noexcept { return num_; }
    const Polynomial& denominator() const noexcept { return den_; }

    PowerSeries series(std::size_t order) const;
    Rational operator()(const Rational& x) const;

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

private:
    Polynomial num_;
    Polynomial den_;
};

/// Exact Padé recognition: finds P/Q with deg P <= num_deg, deg Q <= den_deg
/// matching every known coefficient of f. Requires order(f) >= num_deg +
/// den_deg + 2 so at least one coefficient is left over as a check.
RationalFunction pade(const PowerSeries& f, int num_deg, int den_deg);

/// Greatest common divisor over Q, scaled to a primitive integer polynomial
/// with positive leading coefficient.
Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b);

}  // namespace pfm
