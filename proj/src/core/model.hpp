#pragma once

#include "core/lattice.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace pfm {

struct Monomial {
    int sign = 1;
    long ydeg = 0;
    std::map<std::string, long> exponents;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Residue integrand prod_i (1 - sum_j v_{i,j})^{-1} over the torus in the
// listed variables. `phi_ydegree` is the y-degree of one power of the
// natural parameter phi.
struct MonomialModel {
    std::string name;
    std::vector<std::string> variables;
    std::vector<std::vector<Monomial>> factors;
    long phi_ydegree = 7;

    /// Throws Error(schema) when the model is empty or references undeclared variables.
    void validate() const;

    /// Rows in factor-major order: v_{1,1}, v_{1,2}, ..., v_{2,1}, ...
    ExponentMatrix exponent_matrix() const;
    /// Factor index of each flattened row.
    std::vector<std::size_t> factor_index() const;
    /// "v[i,j]" with 1-based indices.
    std::string label(std::size_t row) const;

    friend bool operator==(const MonomialModel&, const MonomialModel&) = default;
};

MonomialModel pfaffian_model();
MonomialModel grassmannian_model();
/// "pfaffian" or "grassmannian"; Error(invalid_argument) otherwise.
MonomialModel preset_model(std::string_view name);

}  // namespace pfm
