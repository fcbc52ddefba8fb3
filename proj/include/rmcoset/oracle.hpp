#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rmcoset/gf.hpp"
#include "rmcoset/linalg.hpp"
#include "rmcoset/monomials.hpp"
#include "rmcoset/random.hpp"
#include "rmcoset/rghw.hpp"

namespace rmcoset::oracle {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct ShadowResult {
    std::uint64_t value = 0;
    std::vector<Exponent> witness;
    std::uint64_t nodes = 0;
};

/// min |∇A| over m-subsets A of the window, by branch and bound.
ShadowResult brute_min_shadow(const Window& window, std::uint64_t m, std::uint64_t budget = kDefaultBudget);

using Polynomial = std::vector<std::pair<Exponent, gf::Value>>;

struct EvaluatedSubspace {
    std::vector<Polynomial> generators;
    Matrix evaluations;  // one row per generator, columns in point order

    std::size_t support_size() const;
};

/// G_i = ∏_t ∏_{j<a_{i,t}} (X_t − γ_j) for each a_i ∈ A, expanded and evaluated.
EvaluatedSubspace extremal_subspace(const std::vector<Exponent>& A, const gf::FieldPtr& field, int s);

/// Polynomials X^a + Σ_{b ≺_Lex a} c_b X^b with random c_b, one per a ∈ A.
EvaluatedSubspace random_subspace(const std::vector<Exponent>& A, const gf::FieldPtr& field, int s,
                                  RandomSource& rng);

/// min |supp D| over m-dimensional D ⊆ C_1 with D ∩ C_2 = {0}, enumerating
/// reduced echelon bases under the graded lex order.
std::uint64_t brute_min_support(const CodePair& pair, std::uint64_t m, std::uint64_t budget = kDefaultBudget);

/// min |J| with dim (C_1)_J − dim (C_2)_J >= m, over all position subsets.
std::uint64_t brute_min_shortened(const CodePair& pair, std::uint64_t m, std::uint64_t budget = kDefaultBudget);

/// Position subsets are bit masks over 0-based point indices (n <= 64) or index lists.
using PositionSet = std::vector<std::size_t>;

/// q-bits of the secret determined by the shares in J: rank G_1|_J − rank G_2|_J.
std::size_t leakage_dim(const PositionSet& J, const CodePair& pair);

/// dim (C_1)_J − dim (C_2)_J with (C)_J the codewords vanishing outside J.
std::size_t shortened_dim_difference(const PositionSet& J, const CodePair& pair);

struct Profile {
    std::vector<std::uint64_t> t;
    std::vector<std::uint64_t> r;
};

/// Exact thresholds from the leakage of every subset of positions.
Profile brute_profile(const CodePair& pair, std::uint64_t budget = kDefaultBudget);

}  // namespace rmcoset::oracle
