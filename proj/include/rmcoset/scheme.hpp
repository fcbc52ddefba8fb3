#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rmcoset/gf.hpp"
#include "rmcoset/random.hpp"
#include "rmcoset/rghw.hpp"
#include "rmcoset/rm_code.hpp"

namespace rmcoset {

struct LeakageProfile {
    CodePair pair;
    std::uint64_t ell = 0;
    std::vector<std::uint64_t> t, r;          // from RGHWs
    std::vector<std::uint64_t> t_ghw, r_ghw;  // the weaker bounds obtained from GHWs
};

/// t_m = M_m(C_2^⊥, C_1^⊥) − 1, r_m = n − M_{ℓ−m+1}(C_1,C_2) + 1,
/// t'_m = d_m(C_2^⊥) − 1, r'_m = n − d_{ℓ−m+1}(C_1) + 1.
LeakageProfile profile(const CodePair& pair);

/// Query counts of the two local decoders: u1+1 and q−1.
struct QueryCounts {
    std::uint64_t decoder_a = 0;
    std::uint64_t decoder_b = 0;
    bool a_applicable = false;  // u1 < q−1
};
QueryCounts query_counts(const CodePair& pair);

struct PartialInfo {
    std::size_t dim = 0;  // q-bits of the secret determined by the observed shares
};

using Secret = std::vector<gf::Value>;
using Shares = std::vector<gf::Value>;
/// Share vector with erasures marked as nullopt.
using PartialShares = std::vector<std::optional<gf::Value>>;
using ReconstructResult = std::variant<Secret, PartialInfo>;

/// Read access to a (possibly corrupted) share vector, one position at a time.
using WordAccess = std::function<gf::Value(std::size_t)>;

struct LineQuery {
    std::vector<gf::Value> direction;
    std::vector<gf::Value> lambdas;
    std::vector<std::size_t> points;  // indices of P_i + λ v
};

enum class Decoder { A, B };

class Scheme {
public:
    explicit Scheme(const CodePair& pair, std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

    const CodePair& pair() const noexcept { return pair_; }
    const gf::FieldPtr& field() const noexcept { return field_; }
    const EvaluationSpace& space() const noexcept { return space_; }
    std::size_t n() const noexcept { return space_.n(); }
    std::size_t ell() const noexcept { return secret_basis_.size(); }
    std::size_t randomness_dim() const noexcept { return random_basis_.size(); }
    /// W(u2+1,u1) in anti-lex order; secret coordinate j multiplies monomial j.
    const std::vector<Exponent>& secret_basis() const noexcept { return secret_basis_; }
    const std::vector<Exponent>& random_basis() const noexcept { return random_basis_; }

    /// ψ(secret) + c_2 with c_2 given by its coefficients on W(0,u2).
    Shares encode_with(const Secret& secret, const std::vector<gf::Value>& randomness) const;
    /// ψ(secret) + c_2 with c_2 uniform in C_2.
    Shares encode(const Secret& secret, RandomSource& rng) const;

    bool in_c1(const Shares& word) const;

    /// Erasure-only recovery. Throws InconsistentShares if no codeword of C_1 matches.
    ReconstructResult reconstruct(const PartialShares& shares) const;

    /// Random line through P_i with `count` nonzero parameters γ_1, γ_2, ….
    LineQuery sample_line(std::size_t i, std::size_t count, RandomSource& rng) const;

    /// Interpolates u1+1 points of a random line; requires u1 < q−1.
    gf::Value correct_a(const WordAccess& word, std::size_t i, RandomSource& rng) const;
    /// Decodes all q−1 points of a random line with errors; throws DecodingFailure.
    gf::Value correct_b(const WordAccess& word, std::size_t i, RandomSource& rng) const;

    gf::Value correct(Decoder d, const WordAccess& word, std::size_t i, RandomSource& rng) const;
    gf::Value correct(Decoder d, const Shares& word, std::size_t i, RandomSource& rng) const;

private:
    gf::Value value_at_zero(const LineQuery& line, const std::vector<gf::Value>& y) const;
    gf::Value berlekamp_welch_at_zero(const LineQuery& line, const std::vector<gf::Value>& y) const;

    CodePair pair_;
    gf::FieldPtr field_;
    EvaluationSpace space_;
    std::vector<Exponent> secret_basis_;
    std::vector<Exponent> random_basis_;
    Matrix g_secret_, g_random_;
};

struct SimulationConfig {
    Decoder decoder = Decoder::A;
    double delta = 0.0;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    std::optional<double> sigma;  // decoder B rate parameter, checked when given
};

struct SimulationResult {
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    std::uint64_t decoding_failures = 0;  // decoder B reported too many errors
    std::uint64_t errors_per_word = 0;    // ⌊δn⌋
    std::uint64_t queries = 0;
    double failure_rate = 0.0;
    double bound = 0.0;  // (u1+1)δ for A, 2δ/(1−σ) for B (σ = (u1+1)/(q−1) if not given)
    std::uint64_t t1 = 0, t2 = 0, r1 = 0;
    bool queries_exceed_t1 = false;
    bool queries_below_r1 = false;
    bool at_most_one_qbit = false;  // t_2 >= queries
};

SimulationResult simulate_correction(const CodePair& pair, const SimulationConfig& cfg);

std::string to_string(Decoder d);

}  // namespace rmcoset
