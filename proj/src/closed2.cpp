#include "rmcoset/closed2.hpp"

#include <algorithm>
#include <string>

#include "rmcoset/errors.hpp"
#include "rmcoset/gf.hpp"

namespace rmcoset::closed2 {

namespace {

using i64 = std::int64_t;

void check_pair(int q, int u2, int t) {
    if (q < 2 || !gf::factor_prime_power(static_cast<std::uint32_t>(q)))
        fail(Errc::InvalidParameters, "q = " + std::to_string(q) + " is not a prime power");
    if (u2 < -1 || t < 1 || u2 + t > 2 * (q - 1))
        fail(Errc::InvalidParameters, "need u2 >= −1, t >= 1 and u2+t <= 2(q−1)");
}

void check_rank(i64 m, i64 ell) {
    if (m < 1 || m > ell) fail(Errc::RankOutOfRange, "index " + std::to_string(m) + " outside 1.." + std::to_string(ell));
}

/// Smallest a with before(a) + size(a) >= m; returns a and the residue m − before(a).
template <class Before, class Size>
std::pair<i64, i64> locate(i64 m, Before before, Size size) {
    i64 a = 0;
    while (before(a) + size(a) < m) ++a;
    return {a, m - before(a)};
}

// Third case with t > q. The staircase then has three bands: rows Y^{q−1}..Y^{u1−q+2}
// cut by the degree bound, full rows down to Y^{u2+1}, and the lower triangle where
// every new monomial enlarges the shadow by one.
i64 case3_wide(i64 Q, i64 U, i64 T, i64 m) {
    const i64 u1 = U + T;
    const i64 cut_rows = std::max<i64>(0, 2 * Q - 2 - u1);
    const i64 cut_total = cut_rows * (u1 - Q + 2) + cut_rows * (cut_rows - 1) / 2;
    if (m <= cut_total) {
        auto [a, b] = locate(
            m, [&](i64 a) { return a * (u1 - Q + 2) + a * (a - 1) / 2; }, [&](i64 a) { return u1 - Q + 2 + a; });
        return (a + 2) * (Q - 1) - u1 + b;
    }
    const i64 full_rows = T - Q + 1;
    if (m <= cut_total + full_rows * Q) {
        const i64 rest = m - cut_total;
        const i64 k = (rest - 1) / Q, b = rest - k * Q;
        return (cut_rows + k) * Q + b;
    }
    return (Q - 1 - U) * Q + (m - cut_total - full_rows * Q);
}

}  // namespace

TwoVarCase classify(int q, int u2, int t) {
    check_pair(q, u2, t);
    Case tag;
    if (u2 - q + 2 >= 0)
        tag = Case::One;
    else if (u2 - q + t + 1 <= 0)
        tag = Case::Two;
    else
        tag = Case::Three;
    return {q, u2, t, tag};
}

i64 codim2(int q, int u2, int t) {
    const i64 Q = q, U = u2, T = t;
    switch (classify(q, u2, t).tag) {
        case Case::One: return T * (2 * Q - U - T - 2) + T * (T + 1) / 2;
        case Case::Two: return T * (T + 1) / 2 + T * (U + 1);
        case Case::Three: return (2 * Q - U) * (U + T) + 3 * (Q - U) - Q * Q - 2 - T * (T + 3) / 2;
    }
    return 0;
}

i64 rghw2(int q, int u2, int t, i64 m) {
    const i64 Q = q, U = u2, T = t;
    const TwoVarCase c = classify(q, u2, t);
    check_rank(m, codim2(q, u2, t));
    switch (c.tag) {
        case Case::One: {
            const i64 head = T * (2 * Q - U - T - 2);
            if (m <= head) {
                const i64 a = (m - 1) / T, b = m - a * T;
                return (4 * Q - 4 - 2 * U - a) * (a + 1) / 2 + b - T;
            }
            const i64 cc = m - head;
            return (2 * Q - U - T - 2) * (2 * Q - U + T - 1) / 2 + cc;
        }
        case Case::Two: {
            const i64 tri = T * (T + 1) / 2;
            if (m <= tri) {
                auto [a, b] = locate(m, [](i64 a) { return a * (a + 1) / 2; }, [](i64 a) { return a + 1; });
                return Q * (Q - U - T + a) + b - a - 1;
            }
            const i64 rest = m - tri;
            const i64 a = (rest - 1) / T, b = rest - a * T;
            return Q * (Q + a - U) + b - T - 1 - a * (a + 3) / 2;
        }
        case Case::Three: {
            if (T > Q) return case3_wide(Q, U, T, m);
            const i64 X = (Q - U - 2) * (2 * T - Q + U + 1) / 2;
            if (m <= X + T) {
                auto [a, b] = locate(
                    m, [&](i64 a) { return a * (U + T - Q + 1) + a * (a + 1) / 2; },
                    [&](i64 a) { return U + T - Q + a + 2; });
                return (a + 2) * (Q - 1) - U - T + b;
            }
            if (m <= X + T * (Q - T)) {
                const i64 rest = m - X - T;
                const i64 a = (rest - 1) / T, b = rest - a * T;
                return Q * (Q - U + a) - a * (a + 3) / 2 - T + b - 1;
            }
            const i64 cc = m - X - T * (Q - T);
            return (3 * Q * Q - 2 * U * Q - 3 * Q - T * T - T) / 2 + cc;
        }
    }
    return 0;
}

i64 dim2(int q, int u) {
    check_pair(q, -1, u + 1);
    const i64 Q = q, U = u;
    if (U - Q + 1 <= 0) return (U + 1) * (U + 2) / 2;
    return Q * (2 * U - Q + 3) - U * (U + 3) / 2 - 1;
}

i64 ghw2(int q, int u, i64 r) {
    const i64 Q = q, U = u;
    check_rank(r, dim2(q, u));
    if (U - Q + 1 <= 0) {
        auto [a, b] = locate(r, [](i64 a) { return a * (a + 1) / 2; }, [](i64 a) { return a + 1; });
        return Q * (Q - U + a) + b - a - 1;
    }
    const i64 E = Q * (U + 2) - U * (U + 3) / 2 - 1;
    if (r <= E) {
        auto [a, b] = locate(
            r, [&](i64 a) { return a * (U - Q + 1) + a * (a + 1) / 2; }, [&](i64 a) { return U - Q + 2 + a; });
        return (a + 2) * (Q - 1) - U + b;
    }
    return Q * (2 * Q - U - 1) + (r - E);
}

i64 special_rghw(int q, i64 m) {
    check_pair(q, q - 2, 1);
    check_rank(m, q);
    return m * (2 * static_cast<i64>(q) - m + 1) / 2;
}

i64 rghw_minus_ghw_special(int q, i64 m) {
    check_pair(q, q - 2, 1);
    check_rank(m, q);
    return rghw2(q, q - 2, 1, m) - ghw2(q, q - 1, m);
}

}  // namespace rmcoset::closed2
