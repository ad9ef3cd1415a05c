#pragma once

#include "core/diff_operator.hpp"
#include "core/power_series.hpp"
#include "core/rational_function.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pfm {

enum class Point { zero, infinity };

std::string to_string(Point p);
Point parse_point(std::string_view text);

struct MirrorMap {
    /// q = x exp(g); one order longer than g.
    PowerSeries q_of_phi;
    PowerSeries phi_of_q;
    /// (q / x(q)) dx/dq as a series in q.
    PowerSeries jacobian;
};

/// K(x) with K(0) = 1 and D log K = -A3 / (2 A4).
PowerSeries yukawa_phi(const DiffOperator& op, std::size_t order);

MirrorMap mirror_map(const PowerSeries& f0, const PowerSeries& g);

/// jacobian^3 * c1 K(x(q)) / f0(x(q))^2.
PowerSeries yukawa_q(const PowerSeries& K, const MirrorMap& map, const PowerSeries& f0, const Rational& c1);

struct InstantonSeries {
    Rational n0;
    std::vector<Rational> nd;  // nd[0] is n_1
    Rational m = 1;
    Point point = Point::zero;

    /// Every n_d / m (and n_0 / m) is an integer.
    bool integral() const;
    /// integral() and every entry positive.
    bool positive_integral() const;
    /// Same numbers divided by m.
    InstantonSeries per_unit() const;
};

/// Reads off n_0 and n_d from kappa = n0 + sum n_d d^3 q^d / (1 - q^d).
/// `m` only tags the result; kappa is taken as already scaled.
InstantonSeries extract_instantons(const PowerSeries& kappa, const Rational& m, Point point = Point::zero);

/// Inverse of extract_instantons.
PowerSeries lambert_roundtrip(const InstantonSeries& inst, std::size_t order);

/// Exact rational function matching f, searching total degree upward.
/// std::nullopt when nothing of total degree <= max_total fits.
std::optional<RationalFunction> recognize_rational(const PowerSeries& f, int max_total);

/// p(0) / q(0) after making numerator and denominator separately primitive:
/// the constant c with K = c * P / Q, P and Q primitive integer polynomials.
Rational classical_constant(const RationalFunction& k);

/// lim x^2 * r(x) as x -> infinity; throws when the limit is not finite and nonzero.
Rational limit_at_infinity_x2(const RationalFunction& r);

}  // namespace pfm
