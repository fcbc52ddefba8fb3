#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "rmcoset/errors.hpp"

namespace rmcoset {

/// Exponent vector (a_1, …, a_s); index 0 holds a_1.
using Exponent = std::vector<int>;

/// Materialization limit for window_members and enumerated shadows.
inline constexpr std::uint64_t kMaxMaterialized = 1ull << 22;

int degree(const Exponent& a);
bool in_cube(const Exponent& a, int q);

/// less means a ≺_A b: at the highest differing index a has the larger entry.
std::strong_ordering cmp_antilex(const Exponent& a, const Exponent& b);
/// less means a ≺_Lex b: at the lowest differing index a has the smaller entry.
std::strong_ordering cmp_lex(const Exponent& a, const Exponent& b);
/// Coordinatewise a ⪯_P b.
bool leq_poset(const Exponent& a, const Exponent& b);

/// μ(a_1,…,a_s) = (q−1−a_s, …, q−1−a_1).
Exponent mu(const Exponent& a, int q);

/// F_q((lo,hi),s), optionally clipped to v ≤ a_s ≤ w.
struct Window {
    int q = 0;
    int s = 0;
    int lo = 0;
    int hi = 0;
    std::optional<std::pair<int, int>> last;  // (v, w)

    void validate() const;
    bool contains(const Exponent& a) const;
};

/// All members in increasing anti-lex order. Throws WindowTooLarge past kMaxMaterialized.
std::vector<Exponent> window_members(const Window& w);

/// Members of F_q((lo,hi),s) in increasing lex order, obtained through μ.
std::vector<Exponent> window_members_lex(int q, int s, int lo, int hi);

/// |∇A| within Q^s_q.
std::uint64_t upward_shadow_size(const std::vector<Exponent>& A, int q, int s);
/// |ΔA| within Q^s_q.
std::uint64_t lower_shadow_size(const std::vector<Exponent>& A, int q, int s);

/// Explicit shadows, listed in increasing anti-lex order.
std::vector<Exponent> upward_shadow(const std::vector<Exponent>& A, int q, int s);
std::vector<Exponent> lower_shadow(const std::vector<Exponent>& A, int q, int s);

/// Every element of Q^s_q in increasing anti-lex order (position t has rank t).
std::vector<Exponent> cube_members(int q, int s);

/// Minimal elements of A under ⪯_P, duplicates removed.
std::vector<Exponent> minimal_elements(std::vector<Exponent> A);

std::uint64_t checked_cube_size(int q, int s);

}  // namespace rmcoset
