#pragma once

#include <cstdint>
#include <vector>

#include "rmcoset/gf.hpp"
#include "rmcoset/linalg.hpp"
#include "rmcoset/monomials.hpp"

namespace rmcoset {

/// Evaluation points P_1..P_n of F_q^s in lexicographic order of their
/// coordinate tuples: point k (0-based) has x_i = digit i of k in base q,
/// x_1 most significant. Version tag written into share files.
inline constexpr const char* kPointOrderTag = "lex-v1";

class EvaluationSpace {
public:
    EvaluationSpace(gf::FieldPtr field, int s);

    const gf::FieldPtr& field() const noexcept { return field_; }
    int q() const noexcept { return static_cast<int>(field_->q()); }
    int s() const noexcept { return s_; }
    std::size_t n() const noexcept { return n_; }

    /// Coordinates of point k as field values.
    std::vector<gf::Value> point(std::size_t k) const;
    /// Index of the point with the given coordinates.
    std::size_t index_of(const std::vector<gf::Value>& x) const;

    /// X^a evaluated at point k (0^0 = 1).
    gf::Value monomial_at(const Exponent& a, std::size_t k) const;

    /// Rows φ(X^a) for each monomial in order.
    Matrix evaluation_matrix(const std::vector<Exponent>& monomials) const;

    /// Σ coeff_j φ(X^{a_j}).
    std::vector<gf::Value> evaluate(const std::vector<Exponent>& monomials, const std::vector<gf::Value>& coeff) const;

    /// Evaluation of an arbitrary polynomial given as (monomial, coefficient) pairs.
    std::vector<gf::Value> evaluate_poly(const std::vector<std::pair<Exponent, gf::Value>>& poly) const;

    /// True when the word lies in RM_q(u,s), tested against the parity checks of the dual code.
    bool in_rm(const std::vector<gf::Value>& word, int u) const;

private:
    gf::FieldPtr field_;
    int s_;
    std::size_t n_;
    std::vector<std::vector<gf::Value>> pow_;  // pow_[x][e] = x^e with 0^0 = 1
};

/// Monomial basis of RM_q(hi,s) restricted to degrees [lo,hi], anti-lex order.
std::vector<Exponent> monomial_basis(int q, int s, int lo, int hi);

}  // namespace rmcoset
