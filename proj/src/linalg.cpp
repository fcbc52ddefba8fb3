#include "rmcoset/linalg.hpp"

#include <utility>

namespace rmcoset {

Matrix Matrix::columns(const std::vector<std::size_t>& idx) const {
    Matrix out(rows, idx.size());
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < idx.size(); ++k) out.at(i, k) = at(i, idx[k]);
    return out;
}

std::vector<std::size_t> rref(Matrix& m, const gf::Field& f) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t p = row;
        while (p < m.rows && m.at(p, col) == 0) ++p;
        if (p == m.rows) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(row, j));
        const gf::Value inv = f.inv(m.at(row, col));
        for (std::size_t j = col; j < m.cols; ++j) m.at(row, j) = f.mul(m.at(row, j), inv);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == row) continue;
            const gf::Value c = m.at(i, col);
            if (c == 0) continue;
            for (std::size_t j = col; j < m.cols; ++j) m.at(i, j) = f.sub(m.at(i, j), f.mul(c, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(Matrix m, const gf::Field& f) { return rref(m, f).size(); }

std::optional<std::vector<gf::Value>> solve(Matrix A, std::vector<gf::Value> b, const gf::Field& f) {
    Matrix aug(A.rows, A.cols + 1);
    for (std::size_t i = 0; i < A.rows; ++i) {
        for (std::size_t j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols) = b[i];
    }
    const auto pivots = rref(aug, f);
    if (!pivots.empty() && pivots.back() == A.cols) return std::nullopt;
    std::vector<gf::Value> x(A.cols, 0);
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.at(k, A.cols);
    return x;
}

}  // namespace rmcoset
