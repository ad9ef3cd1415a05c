#pragma once

#include "core/power_series.hpp"
#include "core/polynomial.hpp"
#include "core/rational.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace pfm::testing {

inline constexpr int property_cases = 250;

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }

    Rational rational(long bound = 9, long den_bound = 4)
    {
        Rational r(integer(-bound, bound), integer(1, den_bound));
        r.canonicalize();
        return r;
    }

    Rational nonzero_rational(long bound = 9, long den_bound = 4)
    {
        Rational r = 0;
        while (r == 0) r = rational(bound, den_bound);
        return r;
    }

    /// Coefficients drawn from small rationals; `constant` fixes the first one.
    PowerSeries series(std::size_t order, const Rational* constant = nullptr)
    {
        std::vector<Rational> c(order);
        for (std::size_t k = 0; k < order; ++k) c[k] = rational();
        if (constant && order > 0) c[0] = *constant;
        return PowerSeries(std::move(c));
    }

    Polynomial polynomial(int degree, long bound = 6)
    {
        std::vector<Integer> c(static_cast<std::size_t>(degree) + 1);
        for (auto& x : c) x = integer(-bound, bound);
        return Polynomial(std::move(c));
    }

private:
    std::mt19937_64 rng_;
};

inline PowerSeries series_of(std::initializer_list<long> c)
{
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return PowerSeries(std::move(v));
}

inline PowerSeries series_of(const std::vector<std::string>& c)
{
    std::vector<Rational> v;
    for (const auto& x : c) v.push_back(parse_rational(x));
    return PowerSeries(std::move(v));
}

}  // namespace pfm::testing
