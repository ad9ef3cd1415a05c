#include "doctest.h"
#include "support.hpp"

#include "core/error.hpp"
#include "core/lattice.hpp"
#include "core/model.hpp"

#include <algorithm>
#include <functional>
#include <set>

using namespace pfm;
using namespace pfm::testing;

namespace {

ExponentMatrix matrix(std::vector<LatticeVector> rows, std::vector<long> ygrades)
{
    ExponentMatrix a;
    a.variables = rows.empty() ? 0 : rows.front().size();
    a.entries = std::move(rows);
    a.signs.assign(a.entries.size(), 1);
    a.ygrades = std::move(ygrades);
    return a;
}

bool in_kernel(const ExponentMatrix& a, const LatticeVector& b)
{
    const auto x = x_exponents(a, b);
    return std::all_of(x.begin(), x.end(), [](long v) { return v == 0; });
}

// Plain depth-first search over every coordinate; monomials of y-grade 0 are
// capped at zero_cap.
std::vector<LatticeVector> naive_points(const ExponentMatrix& a, long ydegree, long zero_cap)
{
    std::vector<LatticeVector> out;
    LatticeVector b(a.monomials(), 0);
    std::function<void(std::size_t, long)> walk = [&](std::size_t j, long left) {
        if (j == b.size()) {
            if (left == 0 && in_kernel(a, b)) out.push_back(b);
            return;
        }
        const long cap = a.ygrades[j] == 0 ? zero_cap : left / a.ygrades[j];
        for (long v = 0; v <= cap; ++v) {
            b[j] = v;
            walk(j + 1, left - v * a.ygrades[j]);
        }
        b[j] = 0;
    };
    walk(0, ydegree);
    std::sort(out.begin(), out.end());
    return out;
}

bool decomposes(const LatticeVector& p, const std::vector<KernelGenerator>& gens)
{
    if (std::all_of(p.begin(), p.end(), [](long v) { return v == 0; })) return true;
    for (const auto& g : gens) {
        LatticeVector rest = p;
        bool fits = true;
        for (std::size_t j = 0; j < p.size(); ++j) {
            rest[j] -= g.exponents[j];
            fits = fits && rest[j] >= 0;
        }
        if (fits && decomposes(rest, gens)) return true;
    }
    return false;
}

LatticeVector from_labels(const MonomialModel& m, std::initializer_list<const char*> labels)
{
    LatticeVector b(m.exponent_matrix().monomials(), 0);
    for (const char* l : labels)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (m.label(j) == l) ++b[j];
    return b;
}

}  // namespace

TEST_CASE("integer kernel basis")
{
    const auto pf = pfaffian_model().exponent_matrix();
    const auto basis = integer_kernel_basis(pf);
    CHECK(basis.size() == 6);
    for (const auto& b : basis) CHECK(in_kernel(pf, b));

    const auto zero = matrix({{0, 0}, {0, 0}, {0, 0}}, {1, 1, 1});
    CHECK(integer_kernel_basis(zero) == std::vector<LatticeVector>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});

    const auto full = matrix({{2, 1}, {1, 1}}, {1, 1});
    CHECK(integer_kernel_basis(full).empty());
}

TEST_CASE("kernel basis spans the pfaffian generators")
{
    // every generator is an integer combination of the basis: the Hermite form
    // has a pivot of 1 per row, so back substitution stays integral
    const auto pf = pfaffian_model().exponent_matrix();
    const auto basis = integer_kernel_basis(pf);
    for (const auto& g : nonneg_kernel_generators(pf, 7)) {
        LatticeVector rest = g.exponents;
        for (const auto& b : basis) {
            const auto pivot = std::find_if(b.begin(), b.end(), [](long v) { return v != 0; }) - b.begin();
            REQUIRE(b[static_cast<std::size_t>(pivot)] != 0);
            const long c = rest[static_cast<std::size_t>(pivot)] / b[static_cast<std::size_t>(pivot)];
            CHECK(rest[static_cast<std::size_t>(pivot)] % b[static_cast<std::size_t>(pivot)] == 0);
            for (std::size_t j = 0; j < rest.size(); ++j) rest[j] -= c * b[j];
        }
        CHECK(std::all_of(rest.begin(), rest.end(), [](long v) { return v == 0; }));
    }
}

TEST_CASE("pfaffian generators")
{
    const auto model = pfaffian_model();
    const auto gens = nonneg_kernel_generators(model.exponent_matrix(), 14);
    REQUIRE(gens.size() == 6);
    const std::set<LatticeVector> expected = {
        from_labels(model, {"v[1,4]", "v[2,3]", "v[3,3]"}),
        from_labels(model, {"v[1,2]", "v[2,3]", "v[3,4]"}),
        from_labels(model, {"v[1,3]", "v[2,4]", "v[3,3]"}),
        from_labels(model, {"v[1,2]", "v[2,2]", "v[2,3]", "v[3,1]"}),
        from_labels(model, {"v[1,3]", "v[2,1]", "v[3,2]", "v[3,3]"}),
        from_labels(model, {"v[1,1]", "v[2,1]", "v[2,3]", "v[3,1]", "v[3,3]"}),
    };
    std::set<LatticeVector> got;
    int negative = 0;
    for (const auto& g : gens) {
        got.insert(g.exponents);
        CHECK(g.ydegree == 7);
        negative += g.sign < 0;
    }
    CHECK(got == expected);
    CHECK(negative == 3);
    CHECK(std::is_sorted(gens.begin(), gens.end(),
                         [](const auto& a, const auto& b) { return a.exponents < b.exponents; }));
}

TEST_CASE("grassmannian generators")
{
    const auto model = grassmannian_model();
    const auto gens = nonneg_kernel_generators(model.exponent_matrix(), 14);
    REQUIRE(gens.size() == 4);
    const std::vector<std::pair<LatticeVector, int>> expected = {
        {from_labels(model, {"v[1,1]", "v[2,1]", "v[3,1]", "v[4,2]", "v[5,2]", "v[6,2]", "v[7,1]"}), 1},
        {from_labels(model, {"v[1,2]", "v[2,1]", "v[3,1]", "v[4,3]", "v[5,2]", "v[6,1]", "v[6,3]", "v[7,1]"}), -1},
        {from_labels(model,
                     {"v[1,1]", "v[2,1]", "v[3,1]", "v[4,1]", "v[4,3]", "v[5,1]", "v[5,2]", "v[6,1]", "v[6,3]", "v[7,1]"}),
         1},
        {from_labels(model, {"v[1,1]", "v[2,2]", "v[3,1]", "v[4,1]", "v[4,3]", "v[5,2]", "v[6,3]", "v[7,1]"}), -1},
    };
    for (const auto& [b, sign] : expected) {
        auto it = std::find_if(gens.begin(), gens.end(), [&](const auto& g) { return g.exponents == b; });
        REQUIRE(it != gens.end());
        CHECK(it->sign == sign);
        CHECK(it->ydegree == 7);
    }
}

TEST_CASE("two opposite monomials")
{
    const auto a = matrix({{1}, {-1}}, {1, 1});
    const auto gens = nonneg_kernel_generators(a, 5);
    REQUIRE(gens.size() == 1);
    CHECK(gens.front().exponents == LatticeVector{1, 1});
    CHECK(gens.front().ydegree == 2);
    CHECK_THROWS_AS(nonneg_kernel_generators(a, 0), Error);
}

TEST_CASE("enumerate kernel points")
{
    const auto pf = pfaffian_model().exponent_matrix();
    CHECK(enumerate_kernel_points(pf, 0) == std::vector<LatticeVector>{LatticeVector(12, 0)});
    CHECK(enumerate_kernel_points(pf, 3).empty());
    const auto seven = enumerate_kernel_points(pf, 7);
    for (const auto& g : nonneg_kernel_generators(pf, 7))
        CHECK(std::find(seven.begin(), seven.end(), g.exponents) != seven.end());

    const auto gr = grassmannian_model().exponent_matrix();
    CHECK(enumerate_kernel_points(gr, 0) == std::vector<LatticeVector>{LatticeVector(gr.monomials(), 0)});
    CHECK(enumerate_kernel_points(gr, 5).empty());
}

TEST_CASE("enumeration matches a naive search on the pfaffian matrix")
{
    const auto pf = pfaffian_model().exponent_matrix();
    for (long d : {0L, 3L, 7L, 10L, 14L}) CHECK(enumerate_kernel_points(pf, d) == naive_points(pf, d, 0));
}

TEST_CASE("enumeration matches a capped naive search on the grassmannian matrix")
{
    // monomials without y are capped: each kernel point of y-degree 7k
    // uses them at most k times
    const auto gr = grassmannian_model().exponent_matrix();
    CHECK(enumerate_kernel_points(gr, 7) == naive_points(gr, 7, 2));
}

TEST_CASE("generators are complete and minimal up to y-degree 14")
{
    for (const auto& model : {pfaffian_model(), grassmannian_model()}) {
        const auto a = model.exponent_matrix();
        const auto gens = nonneg_kernel_generators(a, 14);
        for (const auto& g : gens) {
            CHECK(in_kernel(a, g.exponents));
            CHECK(std::all_of(g.exponents.begin(), g.exponents.end(), [](long v) { return v >= 0; }));
            CHECK(g.ydegree == 7);
            CHECK(g.sign == sign_of(a, g.exponents));
            std::vector<KernelGenerator> others;
            for (const auto& h : gens)
                if (!(h == g)) others.push_back(h);
            CHECK_FALSE(decomposes(g.exponents, others));
        }
        for (long d : {7L, 14L})
            for (const auto& p : enumerate_kernel_points(a, d)) CHECK(decomposes(p, gens));
    }
}

TEST_CASE("property: enumeration agrees with naive search on random matrices")
{
    Gen gen(21);
    for (int i = 0; i < property_cases; ++i) {
        const auto m = static_cast<std::size_t>(gen.integer(2, 6));
        const auto n = static_cast<std::size_t>(gen.integer(1, 3));
        std::vector<LatticeVector> rows(m, LatticeVector(n));
        std::vector<long> ygrades(m);
        for (std::size_t j = 0; j < m; ++j) {
            for (auto& e : rows[j]) e = gen.integer(-2, 2);
            ygrades[j] = gen.integer(1, 3);
        }
        const auto a = matrix(rows, ygrades);
        const long d = gen.integer(0, 8);
        const auto pts = enumerate_kernel_points(a, d);
        CHECK(pts == naive_points(a, d, 0));
        const auto gens = nonneg_kernel_generators(a, 8);
        for (const auto& g : gens) CHECK(in_kernel(a, g.exponents));
        for (const auto& p : pts) CHECK(decomposes(p, gens));
    }
}

TEST_CASE("invalid exponent data")
{
    auto a = matrix({{1}, {-1}}, {1, 1});
    a.signs = {1, 2};
    CHECK_THROWS_AS(a.validate(), Error);
    a = matrix({{1}, {-1}}, {1});
    CHECK_THROWS_AS(a.validate(), Error);
    a = matrix({{1}, {-1, 0}}, {1, 1});
    CHECK_THROWS_AS(a.validate(), Error);
}
