#include "core/polynomial.hpp"

#include "core/error.hpp"

#include <algorithm>
#include <sstream>

namespace pfm {

Polynomial::Polynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<long> coeffs)
{
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

Polynomial Polynomial::monomial(const Integer& c, std::size_t power)
{
    std::vector<Integer> v(power + 1);
    v[power] = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer Polynomial::content() const
{
    Integer g = 0;
    for (const auto& c : coeffs_) g = gcd(g, c);
    return g;
}

std::size_t Polynomial::valuation() const
{
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) return k;
    return 0;
}

Rational Polynomial::operator()(const Rational& x) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

Polynomial Polynomial::shifted(long k) const
{
    if (is_zero()) return {};
    if (k >= 0) {
        std::vector<Integer> v(static_cast<std::size_t>(k));
        v.insert(v.end(), coeffs_.begin(), coeffs_.end());
        return Polynomial(std::move(v));
    }
    auto drop = static_cast<std::size_t>(-k);
    if (valuation() < drop) fail(ErrorCode::invariant, "polynomial shift is not exact");
    return Polynomial(std::vector<Integer>(coeffs_.begin() + static_cast<long>(drop), coeffs_.end()));
}

Polynomial Polynomial::divided_exactly(const Integer& d) const
{
    std::vector<Integer> v = coeffs_;
    for (auto& c : v) {
        if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()))
            fail(ErrorCode::invariant, "polynomial division is not exact");
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    }
    return Polynomial(std::move(v));
}

std::string Polynomial::to_string(std::string_view var) const
{
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Integer& c = coeffs_[k];
        if (c == 0) continue;
        Integer mag = abs(c);
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            out << mag.get_str();
            continue;
        }
        if (mag != 1) out << mag.get_str() << '*';
        out << var;
        if (k > 1) out << '^' << k;
    }
    return out.str();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b)
{
    std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(k) + b.coeff(k);
    return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& p)
{
    std::vector<Integer> v = p.coeffs_;
    for (auto& c : v) c = -c;
    return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(v));
}

Polynomial operator*(const Integer& c, const Polynomial& p)
{
    std::vector<Integer> v = p.coeffs_;
    for (auto& x : v) x *= c;
    return Polynomial(std::move(v));
}

std::vector<Integer> primitive_integers(std::span<const Rational> values)
{
    Integer den = 1;
    for (const auto& v : values) den = lcm(den, Integer(v.get_den()));
    std::vector<Integer> out;
    out.reserve(values.size());
    Integer g = 0;
    for (const auto& v : values) {
        Integer z = v.get_num() * (den / v.get_den());
        g = gcd(g, z);
        out.push_back(std::move(z));
    }
    if (g > 1)
        for (auto& z : out) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
    return out;
}

}  // namespace pfm
