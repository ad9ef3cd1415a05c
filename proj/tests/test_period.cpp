#include "doctest.h"
#include "support.hpp"

#include "core/error.hpp"
#include "core/json_io.hpp"
#include "core/period.hpp"

using namespace pfm;
using namespace pfm::testing;

namespace {

const PowerSeries known = series_of({1, 5, 109, 3317, 121501, 4954505});

// Coefficient of phi^m in the pfaffian period, straight from the product of
// binomials and a trinomial (no inner alternating sums).
Integer reduced_term_sum(long m)
{
    auto binom = [](long n, long k) {
        Integer r;
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        return r;
    };
    Integer total = 0;
    for (long m1 = 0; m1 <= m; ++m1)
        for (long m6 = 0; m1 + m6 <= m; ++m6)
            for (long u1 = 0; m1 + m6 + u1 <= m; ++u1) {
                const long u2 = m - m1 - m6 - u1;
                const Integer tri = factorial(static_cast<unsigned>(m + m6)) /
                                    (factorial(static_cast<unsigned>(m1)) * factorial(static_cast<unsigned>(u1 + m6)) *
                                     factorial(static_cast<unsigned>(u2 + m6)));
                Integer t = binom(m, u1) * binom(m, u1) * binom(m, u2) * binom(m, u2) * binom(m + m6, m) * tri;
                total += (m1 % 2 ? -1 : 1) * t;
            }
    return total;
}

}  // namespace

TEST_CASE("pfaffian period")
{
    const auto p = period_closed_form_pfaffian(5);
    CHECK(p.series == known.truncated(5));
    CHECK(p.method == PeriodMethod::closed_form);
    CHECK(p.model == "pfaffian");
    CHECK(period_closed_form_pfaffian(1).series == series_of({1}));
}

TEST_CASE("grassmannian period")
{
    CHECK(period_closed_form_grassmannian(6).series == known);
    CHECK(period_closed_form_grassmannian(1).series == series_of({1}));
}

TEST_CASE("enumeration oracle")
{
    CHECK(period_enumeration(pfaffian_model(), 5).series == known.truncated(5));
    CHECK(period_enumeration(grassmannian_model(), 6).series == known);
    CHECK(period_enumeration(pfaffian_model(), 1).series == series_of({1}));
    CHECK(period_enumeration(grassmannian_model(), 1).series == series_of({1}));
    CHECK(period_enumeration(pfaffian_model(), 3).method == PeriodMethod::enumeration);
}

TEST_CASE("closed forms agree with the enumeration beyond the printed terms")
{
    const auto e7 = period_enumeration(pfaffian_model(), 7).series;
    CHECK(period_closed_form_pfaffian(7).series == e7);
    const auto g7 = period_enumeration(grassmannian_model(), 7).series;
    CHECK(period_closed_form_grassmannian(7).series == g7);
}

TEST_CASE("two pfaffian closed forms")
{
    const auto four_index = period_closed_form_pfaffian(20).series;
    CHECK(pfaffian_reduced_sum(20) == four_index);
    for (long m = 0; m < 12; ++m) CHECK(four_index[static_cast<std::size_t>(m)] == Rational(reduced_term_sum(m)));
}

TEST_CASE("families share the series")
{
    const auto a = period_closed_form_pfaffian(25).series;
    const auto b = period_closed_form_grassmannian(25).series;
    CHECK(a == b);
    CHECK(is_positive_integral(a));
    // log-convex growth
    for (std::size_t k = 1; k + 1 < a.order(); ++k) CHECK(a[k] * a[k] <= a[k - 1] * a[k + 1]);
}

TEST_CASE("compute_period dispatch")
{
    CHECK(compute_period(pfaffian_model(), 4, PeriodMethod::closed_form).method == PeriodMethod::closed_form);
    CHECK(compute_period(pfaffian_model(), 4, PeriodMethod::enumeration).method == PeriodMethod::enumeration);
    auto custom = pfaffian_model();
    custom.name = "copy";
    const auto p = compute_period(custom, 4, PeriodMethod::closed_form);
    CHECK(p.method == PeriodMethod::enumeration);
    CHECK(p.series == known.truncated(4));
    CHECK(parse_period_method("closed-form") == PeriodMethod::closed_form);
    CHECK(parse_period_method("enumeration") == PeriodMethod::enumeration);
    CHECK_THROWS_AS(parse_period_method("guess"), Error);
}

TEST_CASE("positivity predicate")
{
    CHECK(is_positive_integral(known));
    CHECK_FALSE(is_positive_integral(series_of({1, -5})));
    CHECK_FALSE(is_positive_integral(series_of({2, 5})));
    CHECK_FALSE(is_positive_integral(PowerSeries({Rational(1), Rational(1, 2)})));
}

TEST_CASE("model json roundtrip")
{
    for (const auto& m : {pfaffian_model(), grassmannian_model()}) {
        const auto back = model_from_json(parse_json(to_json(m).dump()));
        CHECK(back == m);
    }
    CHECK_THROWS_AS(model_from_json(parse_json("{}")), Error);
    CHECK_THROWS_AS(model_from_json(parse_json(R"({"variables": [], "factors": []})")), Error);
    CHECK_THROWS_AS(model_from_json(parse_json(R"({"variables": ["a"], "factors": [[{"sign": 1, "ydeg": 1, "exponents": {"b": 1}}]]})")),
                    Error);
    try {
        parse_json("{\n  \"variables\": [\n");
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::parse);
        CHECK(std::string(e.what()).rfind("line 3", 0) == 0);
    }
}

TEST_CASE("enumeration on a small custom model")
{
    // (1 - y x)^-1 (1 - y / x)^-1 with phi = y^2: constant terms are 1 each
    const auto m = model_from_json(parse_json(R"({
        "variables": ["x"],
        "phi_ydegree": 2,
        "factors": [[{"sign": 1, "ydeg": 1, "exponents": {"x": 1}}],
                    [{"sign": 1, "ydeg": 1, "exponents": {"x": -1}}]]})"));
    CHECK(period_enumeration(m, 5).series == series_of({1, 1, 1, 1, 1}));
}
