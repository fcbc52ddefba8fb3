#pragma once

#include <cstdint>

namespace rmcoset::closed2 {

/// Closed forms for C_1 = RM_q(u2+t,2), C_2 = RM_q(u2,2).
enum class Case { One, Two, Three };

struct TwoVarCase {
    int q = 0;
    int u2 = 0;
    int t = 0;
    Case tag = Case::One;
};

/// Case1 if u2−q+2 >= 0, else Case2 if u2−q+t+1 <= 0, else Case3.
TwoVarCase classify(int q, int u2, int t);

/// Codimension of the selected case.
std::int64_t codim2(int q, int u2, int t);

std::int64_t rghw2(int q, int u2, int t, std::int64_t m);

/// Dimension of RM_q(u,2) from the two GHW branches.
std::int64_t dim2(int q, int u);
std::int64_t ghw2(int q, int u, std::int64_t r);

/// m(2q−m+1)/2, the RGHW of RM_q(q−1,2)/RM_q(q−2,2).
std::int64_t special_rghw(int q, std::int64_t m);
/// M_m − d_m for u2 = q−2, t = 1, evaluated as rghw2 − ghw2.
std::int64_t rghw_minus_ghw_special(int q, std::int64_t m);

}  // namespace rmcoset::closed2
