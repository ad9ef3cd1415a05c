#pragma once

#include "core/rational.hpp"

#include <cstddef>
#include <vector>

namespace pfm {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Brings the matrix to reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& m, std::size_t cols);

/// Basis of {x : m x = 0}. One vector per free column, carrying a 1 at that
/// column, ordered by free column.
std::vector<std::vector<Rational>> nullspace(RationalMatrix m, std::size_t cols);

std::size_t rank(RationalMatrix m, std::size_t cols);

}  // namespace pfm
