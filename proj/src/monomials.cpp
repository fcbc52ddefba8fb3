#include "rmcoset/monomials.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace rmcoset {

namespace {

void same_shape(const Exponent& a, const Exponent& b) {
    if (a.size() != b.size())
        fail(Errc::MixedShapes, "exponent vectors of length " + std::to_string(a.size()) + " and " +
                                    std::to_string(b.size()));
}

void check_members(const std::vector<Exponent>& A, int q, int s) {
    for (const auto& a : A) {
        if (static_cast<int>(a.size()) != s) fail(Errc::MixedShapes, "exponent vector has wrong length");
        if (!in_cube(a, q)) fail(Errc::InvalidParameters, "exponent entry outside [0, q−1]");
    }
}

// Sweep over the last coordinate; A must already be reduced to minimal elements.
std::uint64_t up_count(const std::vector<Exponent>& A, int q, int s) {
    if (A.empty()) return 0;
    if (s == 0) return 1;
    std::vector<int> cuts;
    for (const auto& a : A) cuts.push_back(a[s - 1]);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    cuts.push_back(q);
    std::uint64_t total = 0;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        std::vector<Exponent> active;
        for (const auto& a : A)
            if (a[s - 1] <= cuts[k]) active.emplace_back(a.begin(), a.end() - 1);
        // the projection can only reach minimal elements fine enough for this slab
        active = minimal_elements(std::move(active));
        total += up_count(active, q, s - 1) * static_cast<std::uint64_t>(cuts[k + 1] - cuts[k]);
    }
    return total;
}

std::vector<Exponent> complement_all(const std::vector<Exponent>& A, int q) {
    std::vector<Exponent> out;
    out.reserve(A.size());
    for (const auto& a : A) {
        Exponent c(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) c[i] = q - 1 - a[i];
        out.push_back(std::move(c));
    }
    return out;
}

Exponent from_weight(std::uint64_t w, int q, int s) {
    Exponent a(s);
    for (int i = 0; i < s; ++i) {
        a[i] = static_cast<int>(w % q);
        w /= q;
    }
    return a;
}

}  // namespace

int degree(const Exponent& a) { return std::accumulate(a.begin(), a.end(), 0); }

bool in_cube(const Exponent& a, int q) {
    return std::all_of(a.begin(), a.end(), [q](int x) { return x >= 0 && x < q; });
}

std::strong_ordering cmp_antilex(const Exponent& a, const Exponent& b) {
    same_shape(a, b);
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i] ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::strong_ordering cmp_lex(const Exponent& a, const Exponent& b) {
    same_shape(a, b);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

bool leq_poset(const Exponent& a, const Exponent& b) {
    same_shape(a, b);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponent mu(const Exponent& a, int q) {
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = q - 1 - a[a.size() - 1 - i];
    return r;
}

void Window::validate() const {
    if (q < 2 || s < 1) fail(Errc::InvalidWindow, "need q >= 2 and s >= 1");
    if (lo < 0 || lo > hi || hi > s * (q - 1))
        fail(Errc::InvalidWindow, "degree bounds must satisfy 0 <= lo <= hi <= s(q−1)");
    if (last && (last->first < 0 || last->first > last->second || last->second > q - 1))
        fail(Errc::InvalidWindow, "last-coordinate bounds must satisfy 0 <= v <= w <= q−1");
}

bool Window::contains(const Exponent& a) const {
    if (static_cast<int>(a.size()) != s || !in_cube(a, q)) return false;
    const int d = degree(a);
    if (d < lo || d > hi) return false;
    if (last && (a[s - 1] < last->first || a[s - 1] > last->second)) return false;
    return true;
}

std::vector<Exponent> window_members(const Window& w) {
    w.validate();
    std::vector<Exponent> out;
    Exponent cur(w.s, 0);
    const int top = w.q - 1;
    // fill coordinates from the last one down, larger values first
    auto rec = [&](auto&& self, int idx, int used) -> void {
        if (idx < 0) {
            if (used >= w.lo && used <= w.hi) {
                if (out.size() >= kMaxMaterialized) fail(Errc::WindowTooLarge, "window exceeds 2^22 members");
                out.push_back(cur);
            }
            return;
        }
        int hi_v = top, lo_v = 0;
        if (idx == w.s - 1 && w.last) {
            lo_v = w.last->first;
            hi_v = w.last->second;
        }
        const int room = idx * top;  // capacity of the coordinates below idx
        for (int v = std::min(hi_v, w.hi - used); v >= lo_v; --v) {
            if (used + v + room < w.lo) break;
            cur[idx] = v;
            self(self, idx - 1, used + v);
        }
        cur[idx] = 0;
    };
    rec(rec, w.s - 1, 0);
    return out;
}

std::vector<Exponent> window_members_lex(int q, int s, int lo, int hi) {
    const int top = s * (q - 1);
    Window w{q, s, top - hi, top - lo, std::nullopt};
    w.validate();
    auto members = window_members(w);
    for (auto& a : members) a = mu(a, q);
    return members;
}

std::vector<Exponent> minimal_elements(std::vector<Exponent> A) {
    std::sort(A.begin(), A.end(), [](const Exponent& x, const Exponent& y) {
        const int dx = degree(x), dy = degree(y);
        if (dx != dy) return dx < dy;
        return x < y;
    });
    A.erase(std::unique(A.begin(), A.end()), A.end());
    std::vector<Exponent> keep;
    for (auto& a : A) {
        bool dominated = false;
        for (const auto& k : keep)
            if (leq_poset(k, a)) {
                dominated = true;
                break;
            }
        if (!dominated) keep.push_back(std::move(a));
    }
    return keep;
}

std::uint64_t checked_cube_size(int q, int s) {
    if (q < 2 || s < 1) fail(Errc::InvalidParameters, "need q >= 2 and s >= 1");
    unsigned __int128 n = 1;
    for (int i = 0; i < s; ++i) {
        n *= static_cast<unsigned>(q);
        if (n >= (static_cast<unsigned __int128>(1) << 63)) fail(Errc::Overflow, "q^s must stay below 2^63");
    }
    return static_cast<std::uint64_t>(n);
}

std::uint64_t upward_shadow_size(const std::vector<Exponent>& A, int q, int s) {
    check_members(A, q, s);
    const std::uint64_t n = checked_cube_size(q, s);
    auto mins = minimal_elements(A);
    if (n <= kMaxMaterialized) {
        std::uint64_t count = 0;
        for (std::uint64_t w = 0; w < n; ++w) {
            const Exponent b = from_weight(w, q, s);
            for (const auto& a : mins)
                if (leq_poset(a, b)) {
                    ++count;
                    break;
                }
        }
        return count;
    }
    return up_count(mins, q, s);
}

std::uint64_t lower_shadow_size(const std::vector<Exponent>& A, int q, int s) {
    check_members(A, q, s);
    // b ⪯_P a iff (q−1−a) ⪯_P (q−1−b) coordinatewise
    return upward_shadow_size(complement_all(A, q), q, s);
}

std::vector<Exponent> cube_members(int q, int s) {
    const std::uint64_t n = checked_cube_size(q, s);
    if (n > kMaxMaterialized) fail(Errc::WindowTooLarge, "cube exceeds 2^22 members");
    std::vector<Exponent> out;
    out.reserve(n);
    for (std::uint64_t k = 0; k < n; ++k) out.push_back(from_weight(n - 1 - k, q, s));
    return out;
}

std::vector<Exponent> upward_shadow(const std::vector<Exponent>& A, int q, int s) {
    check_members(A, q, s);
    const auto mins = minimal_elements(A);
    std::vector<Exponent> out;
    for (auto& b : cube_members(q, s)) {
        for (const auto& a : mins)
            if (leq_poset(a, b)) {
                out.push_back(b);
                break;
            }
    }
    return out;
}

std::vector<Exponent> lower_shadow(const std::vector<Exponent>& A, int q, int s) {
    check_members(A, q, s);
    std::vector<Exponent> out;
    for (auto& b : cube_members(q, s)) {
        for (const auto& a : A)
            if (leq_poset(b, a)) {
                out.push_back(b);
                break;
            }
    }
    return out;
}

}  // namespace rmcoset
