#include "core/rational.hpp"

#include "core/error.hpp"

#include <cctype>

namespace pfm {

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

namespace {

bool is_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!is_digits(num) || !is_digits(den))
        fail(ErrorCode::parse, "malformed rational \"" + std::string(text) + "\"");

    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0) fail(ErrorCode::parse, "zero denominator in \"" + std::string(text) + "\"");
    if (text.front() == '-') n = -n;
    Rational r(n, d);
    r.canonicalize();
    return r;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

Integer factorial(unsigned n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace pfm
