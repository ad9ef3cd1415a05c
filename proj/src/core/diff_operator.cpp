#include "core/diff_operator.hpp"

#include "core/error.hpp"
#include "core/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace pfm {

DiffOperator::DiffOperator(std::vector<Polynomial> coeffs, std::string variable) : variable_(std::move(variable))
{
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    if (coeffs.empty()) fail(ErrorCode::invalid_argument, "zero differential operator");

    Integer g = 0;
    for (const auto& p : coeffs) g = gcd(g, p.content());
    const auto& lead = coeffs.back();
    if (lead.coeff(lead.valuation()) < 0) g = -g;
    for (auto& p : coeffs) p = p.divided_exactly(g);
    coeffs_ = std::move(coeffs);
}

int DiffOperator::max_degree() const
{
    int d = 0;
    for (const auto& p : coeffs_) d = std::max(d, p.degree());
    return d;
}

namespace {

std::vector<Integer> positive_divisors(Integer n)
{
    n = abs(n);
    std::vector<Integer> small, large;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d * d != n) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// p / (t - root), exact over Q.
std::vector<Rational> deflate(const std::vector<Rational>& a, const Rational& root)
{
    std::vector<Rational> quot(a.size() - 1);
    Rational carry = 0;
    for (std::size_t k = a.size() - 1; k-- > 0;) {
        carry = a[k + 1] + carry * root;
        quot[k] = carry;
    }
    return quot;
}

// Rational roots of p with multiplicity, in discovery order, and the
// cofactor q with p = q * prod (den * t - num) exactly.
std::pair<std::vector<Rational>, Polynomial> split_rational_roots(const Polynomial& p)
{
    std::vector<Rational> roots;
    std::vector<Rational> cur(p.coeffs().begin(), p.coeffs().end());
    Rational scale = 1;  // p = scale * cur * prod (t - root)
    bool found = true;
    while (cur.size() > 1 && found) {
        found = false;
        if (cur.front() == 0) {
            roots.emplace_back(0);
            cur.erase(cur.begin());
            found = true;
            continue;
        }
        const auto ints = primitive_integers(cur);
        const Polynomial prim(ints);
        for (const auto& s : positive_divisors(prim.coeff(0))) {
            for (const auto& q : positive_divisors(prim.leading())) {
                for (int sign : {1, -1}) {
                    Rational root(s * sign, q);
                    root.canonicalize();
                    if (prim(root) != 0) continue;
                    roots.push_back(root);
                    cur = deflate(cur, root);
                    scale /= root.get_den();
                    found = true;
                    break;
                }
                if (found) break;
            }
            if (found) break;
        }
    }
    for (auto& c : cur) c *= scale;
    std::vector<Integer> ints;
    for (const auto& c : cur) {
        if (!is_integer(c)) fail(ErrorCode::invariant, "non-integral cofactor");
        ints.push_back(c.get_num());
    }
    return {roots, Polynomial(std::move(ints))};
}

// den * var - num, highest power first.
std::string linear_factor(const Rational& root, std::string_view var)
{
    std::string out = "(";
    if (root.get_den() != 1) out += root.get_den().get_str() + "*";
    out += var;
    if (root > 0) out += " - " + root.get_num().get_str();
    else out += " + " + Integer(-root.get_num()).get_str();
    return out + ")";
}

}  // namespace

std::string DiffOperator::to_text() const
{
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const auto& p = coeffs_[i];
        if (p.is_zero()) continue;
        Integer c = p.content();
        const std::size_t v = p.valuation();
        auto [roots, rest] = split_rational_roots(p.shifted(-static_cast<long>(v)).divided_exactly(c));
        if (rest.degree() == 0 || (rest.leading() < 0 && rest.coeff(0) < 0)) {
            if (rest.coeff(0) < 0) c = -c;
            if (rest.coeff(0) < 0) rest = -rest;
        }
        std::sort(roots.begin(), roots.end());

        std::vector<std::string> parts;
        if (c == -1) parts.push_back("-");
        else if (c != 1) parts.push_back(c.get_str());
        if (v == 1) parts.push_back(variable_);
        else if (v > 1) parts.push_back(variable_ + "^" + std::to_string(v));
        if (rest.degree() > 0) parts.push_back("(" + rest.to_string(variable_) + ")");
        for (std::size_t k = 0; k < roots.size();) {
            std::size_t e = k;
            while (e < roots.size() && roots[e] == roots[k]) ++e;
            parts.push_back(linear_factor(roots[k], variable_) + (e - k > 1 ? "^" + std::to_string(e - k) : ""));
            k = e;
        }

        std::string term;
        for (const auto& part : parts) {
            if (!term.empty() && term != "-") term += "*";
            term += part;
        }
        if (term.empty() || term == "-") term += "1";

        out << (first ? "  " : "+ ") << term;
        first = false;
        if (i > 0) out << " D" << (i > 1 ? "^" + std::to_string(i) : std::string());
        out << '\n';
    }
    return out.str();
}

PowerSeries apply(const DiffOperator& op, const PowerSeries& f)
{
    const long keep = static_cast<long>(f.order()) - op.max_degree();
    const std::size_t n = keep > 0 ? static_cast<std::size_t>(keep) : 0;
    auto acc = PowerSeries::zero(f.order());
    auto di = f;
    for (std::size_t i = 0; i <= op.order(); ++i) {
        if (i > 0) di = log_derivative(di);
        if (!op.coeff(i).is_zero()) acc = acc + PowerSeries::from_polynomial(op.coeff(i), f.order()) * di;
    }
    return acc.truncated(n);
}

namespace {

// P_l(s) = sum_i A_i[l] s^i: the shift-l part of the recurrence, so that
// [x^k] L f = sum_l P_l(k - l) f_{k-l}.
Rational shift_poly(const DiffOperator& op, std::size_t l, long s)
{
    Rational acc = 0;
    for (std::size_t i = op.order() + 1; i-- > 0;) acc = acc * s + Rational(op.coeff(i).coeff(l));
    return acc;
}

// [x^k] of sum_i i A_i D^(i-1) f, the operator's formal D-derivative.
Rational derived_term(const DiffOperator& op, std::size_t l, long s)
{
    Rational acc = 0;
    for (std::size_t i = op.order() + 1; i-- > 1;) acc = acc * s + Rational(op.coeff(i).coeff(l) * static_cast<long>(i));
    return acc;
}

}  // namespace

std::size_t fit_series_length(std::size_t order, std::size_t max_deg)
{
    return (order + 1) * (max_deg + 1) + max_deg + fit_surplus_terms;
}

DiffOperator fit_operator(const PowerSeries& f, std::size_t order, std::size_t max_deg)
{
    const std::size_t need = fit_series_length(order, max_deg);
    if (f.order() < need)
        fail(ErrorCode::precondition, "fit_operator needs at least " + std::to_string(need) +
                                          " series coefficients, got " + std::to_string(f.order()));

    // Unknown (i, l) is the coefficient of x^l in A_i; row k is [x^k] L f.
    const std::size_t cols = (order + 1) * (max_deg + 1);
    auto row = [&](std::size_t k) {
        std::vector<Rational> r(cols);
        for (std::size_t l = 0; l <= max_deg && l <= k; ++l) {
            const Rational& fk = f[k - l];
            if (fk == 0) continue;
            Rational pw = 1;
            const long s = static_cast<long>(k - l);
            for (std::size_t i = 0; i <= order; ++i) {
                r[i * (max_deg + 1) + l] = pw * fk;
                pw *= s;
            }
        }
        return r;
    };

    const std::size_t solve_rows = f.order() - fit_surplus_terms;
    RationalMatrix m;
    m.reserve(solve_rows);
    for (std::size_t k = 0; k < solve_rows; ++k) m.push_back(row(k));
    const auto basis = nullspace(std::move(m), cols);
    if (basis.empty()) fail(ErrorCode::no_solution, "no operator at this (order, degree)");
    if (basis.size() > 1) fail(ErrorCode::underdetermined, "underdetermined: increase series order");

    const auto& v = basis.front();
    for (std::size_t k = solve_rows; k < f.order(); ++k) {
        const auto r = row(k);
        Rational acc = 0;
        for (std::size_t c = 0; c < cols; ++c) acc += r[c] * v[c];
        if (acc != 0) fail(ErrorCode::no_solution, "no operator at this (order, degree): surplus check failed");
    }

    const auto ints = primitive_integers(v);
    std::vector<Polynomial> coeffs;
    for (std::size_t i = 0; i <= order; ++i)
        coeffs.emplace_back(std::vector<Integer>(ints.begin() + static_cast<long>(i * (max_deg + 1)),
                                                 ints.begin() + static_cast<long>((i + 1) * (max_deg + 1))));
    return DiffOperator(std::move(coeffs));
}

DiffOperator invert_coordinate(const DiffOperator& op, long twist)
{
    const std::size_t r = op.order();
    const int deg = op.max_degree();

    // (-D - twist)^i expanded in powers of D.
    std::vector<std::vector<Integer>> expansions;
    std::vector<Integer> cur{Integer(1)};
    for (std::size_t i = 0; i <= r; ++i) {
        expansions.push_back(cur);
        std::vector<Integer> next(cur.size() + 1);
        for (std::size_t k = 0; k < cur.size(); ++k) {
            next[k] -= cur[k] * twist;
            next[k + 1] -= cur[k];
        }
        cur = std::move(next);
    }

    std::vector<Polynomial> out(r + 1);
    for (std::size_t i = 0; i <= r; ++i) {
        // x^deg * A_i(1/x): coefficients reversed against deg.
        std::vector<Integer> rev(static_cast<std::size_t>(deg) + 1);
        const auto& a = op.coeff(i).coeffs();
        for (std::size_t l = 0; l < a.size(); ++l) rev[static_cast<std::size_t>(deg) - l] = a[l];
        const Polynomial flipped(std::move(rev));
        for (std::size_t k = 0; k <= i; ++k)
            if (expansions[i][k] != 0) out[k] = out[k] + expansions[i][k] * flipped;
    }

    std::size_t v = static_cast<std::size_t>(deg);
    for (const auto& p : out)
        if (!p.is_zero()) v = std::min(v, p.valuation());
    for (auto& p : out) p = p.shifted(-static_cast<long>(v));

    std::string name = op.variable();
    if (!name.empty() && name.back() == '~') name.pop_back();
    else name += '~';
    return DiffOperator(std::move(out), std::move(name));
}

Polynomial indicial_polynomial(const DiffOperator& op)
{
    std::vector<Integer> c;
    for (const auto& p : op.coeffs()) c.push_back(p.coeff(0));
    return Polynomial(std::move(c));
}


std::vector<Rational> indicial_roots(const DiffOperator& op)
{
    const Polynomial p = indicial_polynomial(op);
    if (p.is_zero()) fail(ErrorCode::no_solution, "indicial polynomial vanishes identically");
    auto [roots, rest] = split_rational_roots(p);
    if (rest.degree() > 0) {
        std::string coeffs;
        for (const auto& c : rest.coeffs()) coeffs += (coeffs.empty() ? "" : ", ") + c.get_str();
        fail(ErrorCode::no_solution, "non-rational factor: [" + coeffs + "]");
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

bool is_mum(const DiffOperator& op)
{
    const Polynomial p = indicial_polynomial(op);
    if (p.degree() != static_cast<int>(op.order())) return false;
    for (std::size_t i = 0; i < op.order(); ++i)
        if (p.coeff(i) != 0) return false;
    return true;
}

PowerSeries holomorphic_solution(const DiffOperator& op, std::size_t order)
{
    if (shift_poly(op, 0, 0) != 0) fail(ErrorCode::precondition, "constant is not a leading solution: I(0) != 0");
    const std::size_t deg = static_cast<std::size_t>(op.max_degree());
    std::vector<Rational> f(order);
    if (order > 0) f[0] = 1;
    for (std::size_t k = 1; k < order; ++k) {
        const long kk = static_cast<long>(k);
        const Rational lead = shift_poly(op, 0, kk);
        if (lead == 0) fail(ErrorCode::no_solution, "resonant recurrence at step " + std::to_string(k));
        Rational acc = 0;
        for (std::size_t l = 1; l <= deg && l <= k; ++l)
            if (f[k - l] != 0) acc += shift_poly(op, l, kk - static_cast<long>(l)) * f[k - l];
        f[k] = -acc / lead;
    }
    return PowerSeries(std::move(f));
}

FrobeniusPair frobenius_log_solution(const DiffOperator& op, const PowerSeries& f0)
{
    const std::size_t n = f0.order();
    if (n == 0 || f0[0] != 1) fail(ErrorCode::precondition, "f0 must have constant term 1");
    if (!is_zero(apply(op, f0))) fail(ErrorCode::precondition, "f0 is not annihilated by the operator");
    const std::size_t deg = static_cast<std::size_t>(op.max_degree());

    // L(f0 log x) = L(f0) log x + L'(f0) with L' = sum_i i A_i D^(i-1), so
    // h = f0 g solves L h = -L'(f0), h(0) = 0.
    std::vector<Rational> rhs(n);
    for (std::size_t k = 0; k < n; ++k) {
        Rational acc = 0;
        for (std::size_t l = 0; l <= deg && l <= k; ++l)
            if (f0[k - l] != 0) acc += derived_term(op, l, static_cast<long>(k - l)) * f0[k - l];
        rhs[k] = -acc;
    }
    if (rhs[0] != 0 || shift_poly(op, 0, 0) != 0)
        fail(ErrorCode::no_solution, "inconsistent logarithmic solution: 0 is not a double indicial root");

    std::vector<Rational> h(n);
    for (std::size_t k = 1; k < n; ++k) {
        const long kk = static_cast<long>(k);
        const Rational lead = shift_poly(op, 0, kk);
        if (lead == 0) fail(ErrorCode::no_solution, "resonant recurrence at step " + std::to_string(k));
        Rational acc = rhs[k];
        for (std::size_t l = 1; l <= deg && l <= k; ++l)
            if (h[k - l] != 0) acc -= shift_poly(op, l, kk - static_cast<long>(l)) * h[k - l];
        h[k] = acc / lead;
    }
    return {f0, PowerSeries(std::move(h)) * invert(f0)};
}

}  // namespace pfm
