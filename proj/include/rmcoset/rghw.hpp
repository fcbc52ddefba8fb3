#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rmcoset/monomials.hpp"

namespace rmcoset {

using BigInt = boost::multiprecision::cpp_int;

/// ρ_q((a,b),s) = |F_q((a,b),s)|, evaluated by the alternating binomial sum.
/// Requires 0 <= a <= b <= s(q−1) and s >= 1; otherwise InvalidWindow.
BigInt rho(int a, int b, int s, int q);

/// ρ_q((a,b),(v,w),s) = Σ_{i=0}^{w−v} ρ_q((max{0,a−v−i}, b−v−i), s−1).
/// Slices whose degree range falls outside [0, (s−1)(q−1)] count as empty.
BigInt rho_clipped(int a, int b, int v, int w, int s, int q);

/// Counting helper that accepts any integers: empty ranges give 0 and s = 0
/// counts the empty vector when 0 lies in [a,b]. Requires q^s < 2^63.
std::uint64_t window_count(int a, int b, int s, int q);

struct VecaStep {
    int A, B, V, S;
    std::uint64_t M;
    bool reset;           // the V > B reset fired; r is meaningless
    std::uint64_t r;      // ρ((α, B−V), S−1)
};

/// The M-th element of F_q((A,B),(0,V),S) in anti-lex order, by the recursive
/// element finder. Throws PreconditionViolated unless A <= B <= S(q−1),
/// V <= q−1, S >= 1 and 1 <= M <= |F_q((A,B),(0,V),S)|.
Exponent veca(int A, int B, int V, int S, std::uint64_t M, int q, std::vector<VecaStep>* trace = nullptr);

/// 1-based anti-lex position of a inside F_q((lo,hi),s). Throws NotInWindow.
std::uint64_t rank_in_window(const Exponent& a, int lo, int hi, int q);

/// 1-based anti-lex position of a in Q^s_q: q^s − Σ a_i q^{i−1}.
std::uint64_t rank_in_cube(const Exponent& a, int q);

/// dim RM_q(u,s); 0 for u = −1.
std::uint64_t rm_dim(int u, int s, int q);

/// Order of the dual code: s(q−1) − u − 1.
int dual_order(int u, int s, int q);

/// C_2 = RM_q(u2,s) ⊊ C_1 = RM_q(u1,s); u2 = −1 is the zero code.
struct CodePair {
    int q = 0;
    int s = 0;
    int u1 = 0;
    int u2 = -1;

    void validate() const;
    std::uint64_t n() const;
    std::uint64_t ell() const;
    /// The pair of duals (C_2^⊥, C_1^⊥) as a CodePair.
    CodePair dual() const;
};

struct RghwExplain {
    Exponent a;
    std::uint64_t r = 0;  // position in F(0,u1)
    std::uint64_t t = 0;  // position in Q^s_q
    std::uint64_t m = 0;
    std::uint64_t value = 0;
};

/// M_m(C_1,C_2) = t − r + m.
std::uint64_t rghw(const CodePair& pair, std::uint64_t m, RghwExplain* explain = nullptr);

/// d_r(RM_q(u,s)) = position in Q^s_q of the r-th element of F(0,u).
std::uint64_t ghw(int u, int s, int q, std::uint64_t r);

/// M_1..M_ℓ. Work is spread over `threads` workers when greater than 1.
std::vector<std::uint64_t> hierarchy(const CodePair& pair, unsigned threads = 1);
std::vector<std::uint64_t> ghw_hierarchy(int u, int s, int q, unsigned threads = 1);

}  // namespace rmcoset
