#include "core/power_series.hpp"

#include "core/error.hpp"

#include <algorithm>

namespace pfm {

PowerSeries PowerSeries::constant(const Rational& c, std::size_t order)
{
    auto f = zero(order);
    if (order > 0) f.coeffs_[0] = c;
    return f;
}

PowerSeries PowerSeries::variable(std::size_t order)
{
    auto f = zero(order);
    if (order > 1) f.coeffs_[1] = 1;
    return f;
}

PowerSeries PowerSeries::from_polynomial(const Polynomial& p, std::size_t order)
{
    auto f = zero(order);
    for (std::size_t k = 0; k < order; ++k) f.coeffs_[k] = p.coeff(k);
    return f;
}

PowerSeries PowerSeries::truncated(std::size_t order) const
{
    if (order > coeffs_.size()) fail(ErrorCode::invalid_argument, "cannot extend a series past its order");
    return PowerSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(order)));
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b)
{
    std::vector<Rational> v(std::min(a.order(), b.order()));
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = a[k] + b[k];
    return PowerSeries(std::move(v));
}

PowerSeries operator-(const PowerSeries& a)
{
    std::vector<Rational> v(a.coeffs_);
    for (auto& c : v) c = -c;
    return PowerSeries(std::move(v));
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) { return a + (-b); }

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b)
{
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Rational> v(n);
    Rational t;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j) {
            if (b[j] == 0) continue;
            mpq_mul(t.get_mpq_t(), a[i].get_mpq_t(), b[j].get_mpq_t());
            v[i + j] += t;
        }
    }
    return PowerSeries(std::move(v));
}

PowerSeries operator*(const Rational& c, const PowerSeries& a)
{
    std::vector<Rational> v(a.coeffs_);
    for (auto& x : v) x *= c;
    return PowerSeries(std::move(v));
}

bool agree(const PowerSeries& a, const PowerSeries& b)
{
    const std::size_t n = std::min(a.order(), b.order());
    for (std::size_t k = 0; k < n; ++k)
        if (a[k] != b[k]) return false;
    return true;
}

bool is_zero(const PowerSeries& f)
{
    return std::all_of(f.coeffs().begin(), f.coeffs().end(), [](const Rational& c) { return c == 0; });
}

PowerSeries invert(const PowerSeries& f)
{
    const std::size_t n = f.order();
    if (n == 0) return f;
    if (f[0] == 0) fail(ErrorCode::precondition, "not a unit: constant term is zero");
    std::vector<Rational> g(n);
    const Rational inv0 = 1 / f[0];
    g[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
        Rational acc = 0;
        for (std::size_t j = 1; j <= k; ++j)
            if (f[j] != 0) acc += f[j] * g[k - j];
        g[k] = -acc * inv0;
    }
    return PowerSeries(std::move(g));
}

PowerSeries power(const PowerSeries& f, unsigned n)
{
    auto result = PowerSeries::constant(1, f.order());
    auto base = f;
    while (n > 0) {
        if (n & 1u) result = result * base;
        n >>= 1u;
        if (n > 0) base = base * base;
    }
    return result;
}

PowerSeries log_series(const PowerSeries& f)
{
    const std::size_t n = f.order();
    if (n == 0) return f;
    if (f[0] != 1) fail(ErrorCode::precondition, "log requires constant term 1");
    // D log f = Df / f, solved coefficientwise.
    std::vector<Rational> l(n);
    for (std::size_t k = 1; k < n; ++k) {
        Rational acc = Rational(static_cast<long>(k)) * f[k];
        for (std::size_t j = 1; j < k; ++j)
            if (l[j] != 0) acc -= Rational(static_cast<long>(j)) * l[j] * f[k - j];
        l[k] = acc / static_cast<long>(k);
    }
    return PowerSeries(std::move(l));
}

PowerSeries exp_series(const PowerSeries& f)
{
    const std::size_t n = f.order();
    if (n == 0) return f;
    if (f[0] != 0) fail(ErrorCode::precondition, "exp requires constant term 0");
    // D e = e * Df.
    std::vector<Rational> e(n);
    e[0] = 1;
    for (std::size_t k = 1; k < n; ++k) {
        Rational acc = 0;
        for (std::size_t j = 1; j <= k; ++j)
            if (f[j] != 0) acc += Rational(static_cast<long>(j)) * f[j] * e[k - j];
        e[k] = acc / static_cast<long>(k);
    }
    return PowerSeries(std::move(e));
}

PowerSeries compose(const PowerSeries& f, const PowerSeries& g)
{
    if (g.order() > 0 && g[0] != 0) fail(ErrorCode::precondition, "composition requires g(0) = 0");
    const std::size_t n = std::min(f.order(), g.order());
    const auto inner = g.truncated(n);
    // Horner: f0 + g (f1 + g (f2 + ...)).
    auto acc = PowerSeries::zero(n);
    for (std::size_t k = n; k-- > 0;) acc = acc * inner + PowerSeries::constant(f[k], n);
    return acc;
}

PowerSeries revert(const PowerSeries& f)
{
    const std::size_t n = f.order();
    if (n < 2 || f[0] != 0 || f[1] == 0)
        fail(ErrorCode::precondition, "reversion requires f(0) = 0 and f'(0) != 0");
    // Lagrange inversion: [x^k] g = [w^(k-1)] (w / f(w))^k / k.
    const auto h = invert(shift_down(f));
    std::vector<Rational> g(n);
    auto hk = PowerSeries::constant(1, h.order());
    for (std::size_t k = 1; k < n; ++k) {
        hk = hk * h;
        g[k] = hk[k - 1] / static_cast<long>(k);
    }
    return PowerSeries(std::move(g));
}

PowerSeries log_derivative(const PowerSeries& f)
{
    std::vector<Rational> v(f.coeffs());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] *= static_cast<long>(k);
    return PowerSeries(std::move(v));
}

PowerSeries derivative(const PowerSeries& f)
{
    if (f.order() == 0) return f;
    std::vector<Rational> v(f.order() - 1);
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = f[k + 1] * static_cast<long>(k + 1);
    return PowerSeries(std::move(v));
}

PowerSeries shift_up(const PowerSeries& f)
{
    std::vector<Rational> v(f.order() + 1);
    std::copy(f.coeffs().begin(), f.coeffs().end(), v.begin() + 1);
    return PowerSeries(std::move(v));
}

PowerSeries shift_down(const PowerSeries& f)
{
    if (f.order() == 0) return f;
    if (f[0] != 0) fail(ErrorCode::precondition, "division by x requires a zero constant term");
    return PowerSeries(std::vector<Rational>(f.coeffs().begin() + 1, f.coeffs().end()));
}

}  // namespace pfm
