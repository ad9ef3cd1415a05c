#include "core/rational_function.hpp"

#include "core/error.hpp"
#include "core/linalg.hpp"

#include <string>

namespace pfm {

namespace {

using RationalPoly = std::vector<Rational>;

RationalPoly to_rational(const Polynomial& p)
{
    return RationalPoly(p.coeffs().begin(), p.coeffs().end());
}

void trim(RationalPoly& p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient and remainder of a / b over Q; b nonzero.
std::pair<RationalPoly, RationalPoly> divmod(RationalPoly a, const RationalPoly& b)
{
    trim(a);
    if (a.size() < b.size()) return {{}, a};
    RationalPoly q(a.size() - b.size() + 1);
    for (std::size_t k = q.size(); k-- > 0;) {
        const Rational c = a[k + b.size() - 1] / b.back();
        q[k] = c;
        for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
    }
    trim(a);
    return {q, a};
}

Polynomial to_primitive(const RationalPoly& p)
{
    auto ints = primitive_integers(p);
    return Polynomial(std::move(ints));
}

}  // namespace

Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b)
{
    RationalPoly x = to_rational(a), y = to_rational(b);
    while (!y.empty()) {
        auto r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    Polynomial g = to_primitive(x);
    if (g.leading() < 0) g = -g;
    return g;
}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
{
    if (denominator.is_zero()) fail(ErrorCode::invalid_argument, "rational function with zero denominator");
    const Polynomial g = polynomial_gcd(numerator, denominator);
    if (g.degree() > 0) {
        const auto gr = to_rational(g);
        auto nq = divmod(to_rational(numerator), gr).first;
        const auto dq = divmod(to_rational(denominator), gr).first;
        const std::size_t split = nq.size();
        nq.insert(nq.end(), dq.begin(), dq.end());
        auto ints = primitive_integers(nq);
        numerator = Polynomial(std::vector<Integer>(ints.begin(), ints.begin() + static_cast<long>(split)));
        denominator = Polynomial(std::vector<Integer>(ints.begin() + static_cast<long>(split), ints.end()));
    }
    if (denominator.coeff(0) == 0) fail(ErrorCode::invalid_argument, "denominator vanishes at 0");

    const Integer c = gcd(numerator.content(), denominator.content());
    num_ = numerator.divided_exactly(c);
    den_ = denominator.divided_exactly(c);
    if (den_.coeff(0) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

PowerSeries RationalFunction::series(std::size_t order) const
{
    return PowerSeries::from_polynomial(num_, order) * invert(PowerSeries::from_polynomial(den_, order));
}

Rational RationalFunction::operator()(const Rational& x) const
{
    const Rational d = den_(x);
    if (d == 0) fail(ErrorCode::precondition, "rational function evaluated at a pole");
    return num_(x) / d;
}

RationalFunction pade(const PowerSeries& f, int num_deg, int den_deg)
{
    if (num_deg < 0 || den_deg < 0) fail(ErrorCode::invalid_argument, "Padé degrees must be non-negative");
    const auto a = static_cast<std::size_t>(num_deg);
    const auto b = static_cast<std::size_t>(den_deg);
    if (f.order() < a + b + 2)
        fail(ErrorCode::precondition, "Padé [" + std::to_string(num_deg) + "/" + std::to_string(den_deg) +
                                          "] needs at least " + std::to_string(a + b + 2) + " coefficients");

    // Unknowns: p_0..p_a then q_0..q_b. Row k encodes [x^k](f Q - P) = 0.
    const std::size_t cols = a + b + 2;
    RationalMatrix m(f.order(), std::vector<Rational>(cols));
    for (std::size_t k = 0; k < f.order(); ++k) {
        if (k <= a) m[k][k] = -1;
        for (std::size_t j = 0; j <= b && j <= k; ++j) m[k][a + 1 + j] = f[k - j];
    }
    const auto basis = nullspace(std::move(m), cols);
    if (basis.empty()) fail(ErrorCode::no_solution, "not rational of given degrees");
    if (basis.size() > 1)
        fail(ErrorCode::underdetermined, "ambiguous Padé solution: a lower-degree representation exists");

    const auto ints = primitive_integers(basis.front());
    Polynomial p(std::vector<Integer>(ints.begin(), ints.begin() + static_cast<long>(a + 1)));
    Polynomial q(std::vector<Integer>(ints.begin() + static_cast<long>(a + 1), ints.end()));
    if (q.coeff(0) == 0) fail(ErrorCode::no_solution, "not rational of given degrees");
    return RationalFunction(std::move(p), std::move(q));
}

}  // namespace pfm
