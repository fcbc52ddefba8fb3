#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rmcoset/gf.hpp"

namespace rmcoset {

/// Dense row-major matrix over a field.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<gf::Value> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

    gf::Value& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    gf::Value at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    /// Selected columns, in the given order.
    Matrix columns(const std::vector<std::size_t>& idx) const;
};

/// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m, const gf::Field& f);

std::size_t rank(Matrix m, const gf::Field& f);

/// Some x with A x = b, or nullopt when inconsistent.
std::optional<std::vector<gf::Value>> solve(Matrix A, std::vector<gf::Value> b, const gf::Field& f);

}  // namespace rmcoset
