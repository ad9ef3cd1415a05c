#pragma once

#include "core/model.hpp"
#include "core/power_series.hpp"

#include <string>

namespace pfm {

enum class PeriodMethod { closed_form, enumeration };

std::string to_string(PeriodMethod m);
PeriodMethod parse_period_method(std::string_view text);

struct PeriodSeries {
    PowerSeries series;
    std::string model;
    PeriodMethod method = PeriodMethod::closed_form;
};

/// Constant term of the expanded integrand, coefficient of phi^m summed over
/// all kernel points of y-degree phi_ydegree * m, weighted by sign and the
/// product of per-factor multinomials.
PeriodSeries period_enumeration(const MonomialModel& model, std::size_t order);

/// Four-index sum over (m1, m6, u1, u2) with inner alternating sums over
/// m2 + m4 = u1 and m3 + m5 = u2.
PeriodSeries period_closed_form_pfaffian(std::size_t order);

/// Same coefficients from the fully reduced binomial/multinomial form; an
/// independent algebraic route used to cross-check the four-index sum.
PowerSeries pfaffian_reduced_sum(std::size_t order);

/// Sum over (m1, m2, m3, m4) of two binomials, one shifted binomial and two
/// trinomial coefficients.
PeriodSeries period_closed_form_grassmannian(std::size_t order);

/// Closed form for a preset name, enumeration for anything else.
PeriodSeries compute_period(const MonomialModel& model, std::size_t order, PeriodMethod method);

/// Constant term 1 and every coefficient a positive integer.
bool is_positive_integral(const PowerSeries& f);

}  // namespace pfm
