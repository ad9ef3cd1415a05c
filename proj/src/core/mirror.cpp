#include "core/mirror.hpp"

#include "core/error.hpp"

namespace pfm {

std::string to_string(Point p)
{
    return p == Point::zero ? "zero" : "infinity";
}

Point parse_point(std::string_view text)
{
    if (text == "zero" || text == "0") return Point::zero;
    if (text == "infinity" || text == "inf") return Point::infinity;
    fail(ErrorCode::invalid_argument, "unknown point '" + std::string(text) + "' (expected zero or infinity)");
}

PowerSeries yukawa_phi(const DiffOperator& op, std::size_t order)
{
    if (op.order() != 4) fail(ErrorCode::precondition, "Yukawa equation needs an order-4 operator");
    const Polynomial& a4 = op.coeff(4);
    const Polynomial& a3 = op.coeff(3);
    if (a4.coeff(0) == 0) fail(ErrorCode::precondition, "A4(0) = 0");

    const auto ratio = Rational(-1, 2) * PowerSeries::from_polynomial(a3, order) *
                       invert(PowerSeries::from_polynomial(a4, order));
    if (order > 0 && ratio[0] != 0) fail(ErrorCode::no_solution, "non-integrable: operator not in expected form");
    std::vector<Rational> log_k(order);
    for (std::size_t k = 1; k < order; ++k) log_k[k] = ratio[k] / static_cast<long>(k);
    return exp_series(PowerSeries(std::move(log_k)));
}

MirrorMap mirror_map(const PowerSeries&, const PowerSeries& g)
{
    if (g.order() == 0 || g[0] != 0) fail(ErrorCode::precondition, "g must vanish at 0");
    MirrorMap m;
    m.q_of_phi = shift_up(exp_series(g));
    m.phi_of_q = revert(m.q_of_phi);
    m.jacobian = invert(shift_down(m.phi_of_q)) * derivative(m.phi_of_q);
    return m;
}

PowerSeries yukawa_q(const PowerSeries& K, const MirrorMap& map, const PowerSeries& f0, const Rational& c1)
{
    const PowerSeries k_q = compose(K, map.phi_of_q);
    const PowerSeries f_q = compose(f0, map.phi_of_q);
    const PowerSeries j3 = map.jacobian * map.jacobian * map.jacobian;
    return c1 * (j3 * k_q * invert(f_q * f_q));
}

bool InstantonSeries::integral() const
{
    if (!is_integer(n0 / m)) return false;
    for (const auto& n : nd)
        if (!is_integer(n / m)) return false;
    return true;
}

bool InstantonSeries::positive_integral() const
{
    if (!integral() || n0 * m <= 0) return false;
    for (const auto& n : nd)
        if (n * m <= 0) return false;
    return true;
}

InstantonSeries InstantonSeries::per_unit() const
{
    InstantonSeries out{n0 / m, {}, 1, point};
    for (const auto& n : nd) out.nd.push_back(n / m);
    return out;
}

InstantonSeries extract_instantons(const PowerSeries& kappa, const Rational& m, Point point)
{
    if (kappa.order() == 0) fail(ErrorCode::precondition, "empty Yukawa series");
    if (m == 0) fail(ErrorCode::invalid_argument, "m must be nonzero");
    InstantonSeries out{kappa[0], {}, m, point};
    for (std::size_t d = 1; d < kappa.order(); ++d) {
        Rational acc = kappa[d];
        for (std::size_t e = 1; e < d; ++e)
            if (d % e == 0) acc -= out.nd[e - 1] * static_cast<long>(e * e * e);
        out.nd.push_back(acc / static_cast<long>(d * d * d));
    }
    return out;
}

PowerSeries lambert_roundtrip(const InstantonSeries& inst, std::size_t order)
{
    std::vector<Rational> c(order);
    if (order > 0) c[0] = inst.n0;
    for (std::size_t e = 1; e <= inst.nd.size() && e < order; ++e) {
        const Rational w = inst.nd[e - 1] * static_cast<long>(e * e * e);
        for (std::size_t d = e; d < order; d += e) c[d] += w;
    }
    return PowerSeries(std::move(c));
}

std::optional<RationalFunction> recognize_rational(const PowerSeries& f, int max_total)
{
    for (int total = 0; total <= max_total; ++total) {
        if (f.order() < static_cast<std::size_t>(total) + 2) break;
        for (int a = 0; a <= total; ++a) {
            try {
                return pade(f, a, total - a);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::no_solution && e.code() != ErrorCode::underdetermined) throw;
            }
        }
    }
    return std::nullopt;
}

Rational classical_constant(const RationalFunction& k)
{
    const Polynomial& p = k.numerator();
    const Polynomial& q = k.denominator();
    Rational c(p.coeff(0) * q.content(), q.coeff(0) * p.content());
    c.canonicalize();
    return c;
}

Rational limit_at_infinity_x2(const RationalFunction& r)
{
    const Polynomial& p = r.numerator();
    const Polynomial& q = r.denominator();
    if (p.is_zero() || p.degree() + 2 != q.degree())
        fail(ErrorCode::no_solution, "x^2 * K has no finite nonzero limit at infinity");
    Rational c(p.leading(), q.leading());
    c.canonicalize();
    return c;
}

}  // namespace pfm
