#include "core/period.hpp"

#include "core/error.hpp"

#include <algorithm>

namespace pfm {

std::string to_string(PeriodMethod m) { return m == PeriodMethod::closed_form ? "closed_form" : "enumeration"; }

PeriodMethod parse_period_method(std::string_view text)
{
    if (text == "closed_form" || text == "closed-form") return PeriodMethod::closed_form;
    if (text == "enumeration") return PeriodMethod::enumeration;
    fail(ErrorCode::invalid_argument, "unknown period method \"" + std::string(text) + "\"");
}

namespace {

class Factorials {
public:
    explicit Factorials(std::size_t n) : table_(n + 1)
    {
        table_[0] = 1;
        for (std::size_t k = 1; k <= n; ++k) table_[k] = table_[k - 1] * static_cast<unsigned long>(k);
    }

    const Integer& operator()(long k) const { return table_.at(static_cast<std::size_t>(k)); }

    Integer binomial(long n, long k) const { return (*this)(n) / ((*this)(k) * (*this)(n - k)); }

    Integer multinomial(long n, long a, long b, long c) const
    {
        return (*this)(n) / ((*this)(a) * (*this)(b) * (*this)(c));
    }

private:
    std::vector<Integer> table_;
};

void require_order(std::size_t order)
{
    if (order < 1) fail(ErrorCode::precondition, "period order must be at least 1");
}

}  // namespace

PeriodSeries period_enumeration(const MonomialModel& model, std::size_t order)
{
    require_order(order);
    const auto a = model.exponent_matrix();
    const auto groups = model.factor_index();
    const std::size_t nfactors = model.factors.size();

    long max_total = 0;
    std::vector<Rational> coeffs(order);
    std::vector<std::vector<LatticeVector>> points(order);
    for (std::size_t m = 0; m < order; ++m) {
        points[m] = enumerate_kernel_points(a, model.phi_ydegree * static_cast<long>(m));
        for (const auto& p : points[m]) {
            long total = 0;
            for (long x : p) total += x;
            max_total = std::max(max_total, total);
        }
    }

    const Factorials fact(static_cast<std::size_t>(max_total));
    for (std::size_t m = 0; m < order; ++m) {
        Integer sum = 0;
        for (const auto& p : points[m]) {
            std::vector<long> row_total(nfactors, 0);
            for (std::size_t j = 0; j < p.size(); ++j) row_total[groups[j]] += p[j];
            Integer weight = 1;
            for (long t : row_total) weight *= fact(t);
            for (long x : p) weight /= fact(x);
            if (sign_of(a, p) < 0) sum -= weight;
            else sum += weight;
        }
        coeffs[m] = sum;
    }
    return {PowerSeries(std::move(coeffs)), model.name, PeriodMethod::enumeration};
}

PeriodSeries period_closed_form_pfaffian(std::size_t order)
{
    require_order(order);
    const long n = static_cast<long>(order);
    const Factorials fact(static_cast<std::size_t>(3 * n + 3));
    std::vector<Rational> coeffs(order);

    for (long m = 0; m < n; ++m) {
        // inner[u][k] = sum_{a + b = u} (-1)^a (m + b + k)! / (a! b! (b + k)!)
        std::vector<std::vector<Rational>> inner(static_cast<std::size_t>(m + 1),
                                                 std::vector<Rational>(static_cast<std::size_t>(m + 1)));
        for (long u = 0; u <= m; ++u) {
            for (long k = 0; k + u <= m; ++k) {
                Rational s = 0;
                for (long a = 0; a <= u; ++a) {
                    const long b = u - a;
                    Rational t(fact(m + b + k), fact(a) * fact(b) * fact(b + k));
                    t.canonicalize();
                    if (a % 2) s -= t;
                    else s += t;
                }
                inner[static_cast<std::size_t>(u)][static_cast<std::size_t>(k)] = s;
            }
        }

        Rational c = 0;
        for (long m1 = 0; m1 <= m; ++m1) {
            for (long m6 = 0; m1 + m6 <= m; ++m6) {
                for (long u1 = 0; m1 + m6 + u1 <= m; ++u1) {
                    const long u2 = m - m1 - m6 - u1;
                    Rational t(fact(m), fact(m1) * fact(m6) * fact(u1) * fact(u2) * fact(m - u1) * fact(m - u2));
                    t.canonicalize();
                    t *= inner[static_cast<std::size_t>(u1)][static_cast<std::size_t>(m6)];
                    t *= inner[static_cast<std::size_t>(u2)][static_cast<std::size_t>(m6)];
                    if (m1 % 2) c -= t;
                    else c += t;
                }
            }
        }
        coeffs[static_cast<std::size_t>(m)] = c;
    }
    return {PowerSeries(std::move(coeffs)), "pfaffian", PeriodMethod::closed_form};
}

PowerSeries pfaffian_reduced_sum(std::size_t order)
{
    require_order(order);
    const long n = static_cast<long>(order);
    const Factorials fact(static_cast<std::size_t>(2 * n + 2));
    std::vector<Rational> coeffs(order);
    for (long m = 0; m < n; ++m) {
        Integer c = 0;
        for (long m1 = 0; m1 <= m; ++m1) {
            for (long m6 = 0; m1 + m6 <= m; ++m6) {
                for (long u1 = 0; m1 + m6 + u1 <= m; ++u1) {
                    const long u2 = m - m1 - m6 - u1;
                    const Integer b1 = fact.binomial(m, u1), b2 = fact.binomial(m, u2);
                    Integer t = b1 * b1 * b2 * b2 * fact.binomial(m + m6, m) *
                                fact.multinomial(m + m6, m1, u1 + m6, u2 + m6);
                    if (m1 % 2) c -= t;
                    else c += t;
                }
            }
        }
        coeffs[static_cast<std::size_t>(m)] = c;
    }
    return PowerSeries(std::move(coeffs));
}

PeriodSeries period_closed_form_grassmannian(std::size_t order)
{
    require_order(order);
    const long n = static_cast<long>(order);
    const Factorials fact(static_cast<std::size_t>(3 * n + 3));
    std::vector<Rational> coeffs(order);
    for (long m = 0; m < n; ++m) {
        Integer c = 0;
        for (long m1 = 0; m1 <= m; ++m1) {
            for (long m2 = 0; m1 + m2 <= m; ++m2) {
                for (long m3 = 0; m1 + m2 + m3 <= m; ++m3) {
                    const long m4 = m - m1 - m2 - m3;
                    Integer t = fact.binomial(m, m2) * fact.binomial(m, m4) * fact.binomial(m + m3, m) *
                                fact.multinomial(m + m2 + m3, m1, m2 + m3, m2 + m3 + m4) *
                                fact.multinomial(m + m3 + m4, m1, m3 + m4, m2 + m3 + m4);
                    if ((m2 + m4) % 2) c -= t;
                    else c += t;
                }
            }
        }
        coeffs[static_cast<std::size_t>(m)] = c;
    }
    return {PowerSeries(std::move(coeffs)), "grassmannian", PeriodMethod::closed_form};
}

PeriodSeries compute_period(const MonomialModel& model, std::size_t order, PeriodMethod method)
{
    if (method == PeriodMethod::closed_form) {
        if (model == pfaffian_model()) return period_closed_form_pfaffian(order);
        if (model == grassmannian_model()) return period_closed_form_grassmannian(order);
    }
    return period_enumeration(model, order);
}

bool is_positive_integral(const PowerSeries& f)
{
    if (f.order() == 0 || f[0] != 1) return false;
    return std::all_of(f.coeffs().begin(), f.coeffs().end(),
                       [](const Rational& c) { return is_integer(c) && c > 0; });
}

}  // namespace pfm
