#include "core/model.hpp"

#include "core/error.hpp"

#include <set>

namespace pfm {

void MonomialModel::validate() const
{
    if (variables.empty()) fail(ErrorCode::schema, "model \"" + name + "\" has no variables");
    if (factors.empty()) fail(ErrorCode::schema, "model \"" + name + "\" has no factors");
    if (phi_ydegree <= 0) fail(ErrorCode::schema, "phi_ydegree must be positive");
    std::set<std::string> known;
    for (const auto& v : variables)
        if (!known.insert(v).second) fail(ErrorCode::schema, "duplicate variable \"" + v + "\"");
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].empty()) fail(ErrorCode::schema, "factor " + std::to_string(i + 1) + " is empty");
        for (const auto& m : factors[i]) {
            if (m.sign != 1 && m.sign != -1) fail(ErrorCode::schema, "monomial sign must be +1 or -1");
            if (m.ydeg < 0) fail(ErrorCode::schema, "monomial ydeg must be non-negative");
            for (const auto& [var, e] : m.exponents)
                if (!known.count(var)) fail(ErrorCode::schema, "undeclared variable \"" + var + "\"");
        }
    }
}

ExponentMatrix MonomialModel::exponent_matrix() const
{
    validate();
    ExponentMatrix a;
    a.variables = variables.size();
    for (const auto& factor : factors) {
        for (const auto& m : factor) {
            LatticeVector row(variables.size(), 0);
            for (std::size_t i = 0; i < variables.size(); ++i) {
                auto it = m.exponents.find(variables[i]);
                if (it != m.exponents.end()) row[i] = it->second;
            }
            a.entries.push_back(std::move(row));
            a.signs.push_back(m.sign);
            a.ygrades.push_back(m.ydeg);
        }
    }
    return a;
}

std::vector<std::size_t> MonomialModel::factor_index() const
{
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < factors.size(); ++i) idx.insert(idx.end(), factors[i].size(), i);
    return idx;
}

std::string MonomialModel::label(std::size_t row) const
{
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (row < factors[i].size()) return "v[" + std::to_string(i + 1) + "," + std::to_string(row + 1) + "]";
        row -= factors[i].size();
    }
    fail(ErrorCode::invalid_argument, "monomial index out of range");
}

namespace {

// sign * y^ydeg * prod(numerator) / prod(denominator)
Monomial mono(int sign, long ydeg, std::initializer_list<const char*> num, std::initializer_list<const char*> den)
{
    Monomial m{sign, ydeg, {}};
    for (const char* v : num) m.exponents[v] += 1;
    for (const char* v : den) m.exponents[v] -= 1;
    return m;
}

}  // namespace

MonomialModel pfaffian_model()
{
    MonomialModel m;
    m.name = "pfaffian";
    m.variables = {"x1", "x2", "x3", "x4", "x5", "x6"};
    m.factors = {
        {mono(1, 1, {"x2", "x5"}, {"x3", "x4"}), mono(1, 2, {"x4", "x6"}, {"x3"}), mono(1, 2, {"x1", "x3"}, {"x4"}),
         mono(-1, 3, {"x1", "x6"}, {"x3", "x4"})},
        {mono(1, 1, {"x1", "x4"}, {"x2", "x3"}), mono(1, 2, {"x2"}, {"x3", "x6"}), mono(1, 2, {"x3", "x5"}, {"x2", "x6"}),
         mono(-1, 3, {"x5"}, {"x2", "x3"})},
        {mono(1, 1, {"x3", "x6"}, {"x4", "x5"}), mono(1, 2, {"x5"}, {"x1", "x4"}), mono(1, 2, {"x2", "x4"}, {"x1", "x5"}),
         mono(-1, 3, {"x2"}, {"x4", "x5"})},
    };
    return m;
}

MonomialModel grassmannian_model()
{
    // Affine chart u1 = (1, u11, 0, u13, ..., u16), u2 = (0, u21, 1, u23, ..., u26).
    // Signs come from expanding the seven Plücker-type relations
    //   u1i u2(i+1) - u1(i+1) u2i - y (u1(i-2) u2(i+3) - u1(i+3) u2(i-2)),  i in Z/7,
    // each divided by its y-free leading monomial.
    MonomialModel m;
    m.name = "grassmannian";
    m.variables = {"u11", "u21", "u13", "u23", "u14", "u24", "u15", "u25", "u16", "u26"};
    m.factors = {
        {mono(1, 1, {"u15", "u23"}, {"u21"}), mono(-1, 1, {"u13", "u25"}, {"u21"})},
        {mono(1, 1, {"u16", "u24"}, {"u11"}), mono(-1, 1, {"u14", "u26"}, {"u11"})},
        {mono(-1, 1, {"u25"}, {"u13"})},
        {mono(1, 0, {"u13", "u24"}, {"u14", "u23"}), mono(-1, 1, {"u11", "u26"}, {"u14", "u23"}),
         mono(1, 1, {"u16", "u21"}, {"u14", "u23"})},
        {mono(1, 0, {"u14", "u25"}, {"u15", "u24"}), mono(1, 1, {}, {"u15", "u24"})},
        {mono(1, 0, {"u15", "u26"}, {"u16", "u25"}), mono(-1, 1, {"u13", "u21"}, {"u16", "u25"}),
         mono(1, 1, {"u11", "u23"}, {"u16", "u25"})},
        {mono(-1, 1, {"u14"}, {"u26"})},
    };
    return m;
}

MonomialModel preset_model(std::string_view name)
{
    if (name == "pfaffian") return pfaffian_model();
    if (name == "grassmannian") return grassmannian_model();
    fail(ErrorCode::invalid_argument, "unknown model preset \"" + std::string(name) + "\"");
}

}  // namespace pfm
