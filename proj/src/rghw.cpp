#include "rmcoset/rghw.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <thread>

#include "rmcoset/gf.hpp"

namespace rmcoset {

namespace {

struct Levels {
    std::vector<BigInt> prefix;           // prefix[d] = #{a ∈ Q^s_q : deg a <= d}
    std::vector<std::uint64_t> prefix64;  // same, when q^s < 2^63
};

BigInt binom(int n, int k) {
    if (k < 0 || n < k) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

std::shared_ptr<const Levels> build_levels(int q, int s) {
    auto lv = std::make_shared<Levels>();
    const int top = s * (q - 1);
    lv->prefix.resize(top + 1);
    BigInt acc = 0;
    for (int i = 0; i <= top; ++i) {
        if (s == 0) {
            acc += 1;
        } else {
            BigInt level = 0;
            for (int j = 0; j <= i / q && j <= s; ++j) {
                BigInt term = binom(s, j) * binom(s - 1 + i - q * j, s - 1);
                if (j & 1)
                    level -= term;
                else
                    level += term;
            }
            acc += level;
        }
        lv->prefix[i] = acc;
    }
    if (acc < (BigInt(1) << 63)) {
        lv->prefix64.reserve(lv->prefix.size());
        for (const auto& v : lv->prefix) lv->prefix64.push_back(static_cast<std::uint64_t>(v));
    }
    return lv;
}

std::shared_ptr<const Levels> levels(int q, int s) {
    static std::mutex mtx;
    static std::map<std::pair<int, int>, std::shared_ptr<const Levels>> cache;
    std::lock_guard lock(mtx);
    auto& slot = cache[{q, s}];
    if (!slot) slot = build_levels(q, s);
    return slot;
}

BigInt big_count(int a, int b, int s, int q) {
    if (s < 0) return 0;
    a = std::max(a, 0);
    b = std::min(b, s * (q - 1));
    if (a > b) return 0;
    const auto lv = levels(q, s);
    return lv->prefix[b] - (a > 0 ? lv->prefix[a - 1] : BigInt(0));
}

/// Per-call view of the memoized prefix tables for 0..s variables.
class Counter {
public:
    Counter(int q, int s) : q_(q) {
        checked_cube_size(q, std::max(s, 1));
        for (int k = 0; k <= s; ++k) tables_.push_back(levels(q, k));
    }
    std::uint64_t operator()(int a, int b, int s) const {
        if (s < 0) return 0;
        a = std::max(a, 0);
        b = std::min(b, s * (q_ - 1));
        if (a > b) return 0;
        const auto& p = tables_[s]->prefix64;
        return p[b] - (a > 0 ? p[a - 1] : 0);
    }

private:
    int q_;
    std::vector<std::shared_ptr<const Levels>> tables_;
};

void check_q(int q) {
    if (q < 2 || !gf::factor_prime_power(static_cast<std::uint32_t>(q)))
        fail(Errc::InvalidParameters, "q = " + std::to_string(q) + " is not a prime power");
}

Exponent veca_impl(const Counter& count, int A, int B, int V, int S, std::uint64_t M, int q,
                   std::vector<VecaStep>* trace) {
    std::vector<int> tail;  // coordinates fixed so far, last coordinate first
    Exponent head;
    while (true) {
        if (V > B) {
            if (trace) trace->push_back({A, B, V, S, M, true, 0});
            V = B;
            continue;
        }
        if (S != 1) {
            const int alpha = std::max(A - V, 0);
            const std::uint64_t r = count(alpha, B - V, S - 1);
            if (trace) trace->push_back({A, B, V, S, M, false, r});
            if (M > r) {
                V -= 1;
                M -= r;
                continue;
            }
            if (M < r) {
                tail.push_back(V);
                A = alpha;
                B = B - V;
                V = q - 1;
                S -= 1;
                continue;
            }
            const int theta1 = alpha % (q - 1);
            const int theta2 = (alpha - theta1) / (q - 1);
            head.assign(theta2, q - 1);
            if (theta2 < S - 1) {
                head.push_back(theta1);
                head.insert(head.end(), S - theta2 - 2, 0);
            }
            head.push_back(V);
            break;
        }
        head = {V - static_cast<int>(M) + 1};
        break;
    }
    head.insert(head.end(), tail.rbegin(), tail.rend());
    return head;
}

std::uint64_t rank_impl(const Counter& count, const Exponent& a, int lo, int hi, int q) {
    const int s = static_cast<int>(a.size());
    std::uint64_t r = 1;
    int fixed = 0;  // Σ_{t=0}^{j} a_{s−t}
    for (int j = 0; j < s; ++j) {
        const int aj = a[s - 1 - j];
        fixed += aj;
        for (int i = 0; i <= q - aj - 2; ++i) {
            const int shift = fixed + i + 1;
            r += count(std::max(0, lo - shift), hi - shift, s - j - 1);
        }
    }
    return r;
}

}  // namespace

BigInt rho(int a, int b, int s, int q) {
    check_q(q);
    if (s < 1 || a < 0 || a > b || b > s * (q - 1))
        fail(Errc::InvalidWindow, "rho needs 0 <= a <= b <= s(q−1) and s >= 1");
    return big_count(a, b, s, q);
}

BigInt rho_clipped(int a, int b, int v, int w, int s, int q) {
    check_q(q);
    if (s < 1 || a < 0 || a > b || b > s * (q - 1))
        fail(Errc::InvalidWindow, "rho_clipped needs 0 <= a <= b <= s(q−1) and s >= 1");
    if (v < 0 || v > w || w > q - 1) fail(Errc::InvalidWindow, "rho_clipped needs 0 <= v <= w <= q−1");
    BigInt total = 0;
    for (int i = 0; i <= w - v; ++i) total += big_count(std::max(0, a - v - i), b - v - i, s - 1, q);
    return total;
}

std::uint64_t window_count(int a, int b, int s, int q) {
    check_q(q);
    if (s < 0) return 0;
    if (s == 0) return (a <= 0 && 0 <= b) ? 1 : 0;
    return Counter(q, s)(a, b, s);
}

Exponent veca(int A, int B, int V, int S, std::uint64_t M, int q, std::vector<VecaStep>* trace) {
    check_q(q);
    if (S < 1 || A < 0 || A > B || B > S * (q - 1) || V < 0 || V > q - 1 || M < 1)
        fail(Errc::PreconditionViolated, "VECA needs A <= B <= S(q−1), 0 <= V <= q−1, S >= 1, M >= 1");
    const Counter count(q, S);
    std::uint64_t size = 0;
    for (int x = 0; x <= std::min(V, B); ++x) size += count(std::max(A - x, 0), B - x, S - 1);
    if (M > size)
        fail(Errc::PreconditionViolated,
             "M = " + std::to_string(M) + " exceeds |F_q((A,B),(0,V),S)| = " + std::to_string(size));
    return veca_impl(count, A, B, V, S, M, q, trace);
}

std::uint64_t rank_in_window(const Exponent& a, int lo, int hi, int q) {
    check_q(q);
    const int s = static_cast<int>(a.size());
    Window w{q, s, lo, hi, std::nullopt};
    w.validate();
    if (!w.contains(a)) fail(Errc::NotInWindow, "exponent vector is not in the window");
    return rank_impl(Counter(q, s), a, lo, hi, q);
}

std::uint64_t rank_in_cube(const Exponent& a, int q) {
    const int s = static_cast<int>(a.size());
    if (!in_cube(a, q)) fail(Errc::InvalidParameters, "exponent vector outside Q^s_q");
    const std::uint64_t n = checked_cube_size(q, s);
    std::uint64_t weight = 0, scale = 1;
    for (int i = 0; i < s; ++i) {
        weight += static_cast<std::uint64_t>(a[i]) * scale;
        scale *= static_cast<std::uint64_t>(q);
    }
    return n - weight;
}

std::uint64_t rm_dim(int u, int s, int q) {
    check_q(q);
    if (s < 1 || u < -1 || u > s * (q - 1)) fail(Errc::InvalidParameters, "rm_dim needs −1 <= u <= s(q−1)");
    if (u == -1) return 0;
    return Counter(q, s)(0, u, s);
}

int dual_order(int u, int s, int q) {
    if (s < 1 || u < -1 || u > s * (q - 1)) fail(Errc::InvalidParameters, "dual_order needs −1 <= u <= s(q−1)");
    return s * (q - 1) - u - 1;
}

void CodePair::validate() const {
    check_q(q);
    if (s < 1) fail(Errc::InvalidParameters, "s must be >= 1");
    if (u2 < -1 || u2 >= u1) fail(Errc::InvalidParameters, "need −1 <= u2 < u1");
    if (u1 > s * (q - 1)) fail(Errc::InvalidParameters, "u1 exceeds s(q−1) = " + std::to_string(s * (q - 1)));
    checked_cube_size(q, s);
}

std::uint64_t CodePair::n() const {
    validate();
    return checked_cube_size(q, s);
}

std::uint64_t CodePair::ell() const {
    validate();
    return window_count(u2 + 1, u1, s, q);
}

CodePair CodePair::dual() const {
    validate();
    return {q, s, dual_order(u2, s, q), dual_order(u1, s, q)};
}

std::uint64_t rghw(const CodePair& pair, std::uint64_t m, RghwExplain* explain) {
    const std::uint64_t ell = pair.ell();
    if (m < 1 || m > ell)
        fail(Errc::RankOutOfRange, "m = " + std::to_string(m) + " outside 1.." + std::to_string(ell));
    const Counter count(pair.q, pair.s);
    const Exponent a = veca_impl(count, pair.u2 + 1, pair.u1, pair.q - 1, pair.s, m, pair.q, nullptr);
    const std::uint64_t r = rank_impl(count, a, 0, pair.u1, pair.q);
    const std::uint64_t t = rank_in_cube(a, pair.q);
    const std::uint64_t value = t - r + m;
    if (explain) *explain = {a, r, t, m, value};
    return value;
}

std::uint64_t ghw(int u, int s, int q, std::uint64_t r) {
    const std::uint64_t k = rm_dim(u, s, q);
    if (r < 1 || r > k) fail(Errc::RankOutOfRange, "r = " + std::to_string(r) + " outside 1.." + std::to_string(k));
    const Counter count(q, s);
    return rank_in_cube(veca_impl(count, 0, u, q - 1, s, r, q, nullptr), q);
}

std::vector<std::uint64_t> hierarchy(const CodePair& pair, unsigned threads) {
    const std::uint64_t ell = pair.ell();
    std::vector<std::uint64_t> out(ell);
    const Counter count(pair.q, pair.s);
    auto work = [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t m = begin + 1; m <= end; ++m) {
            const Exponent a = veca_impl(count, pair.u2 + 1, pair.u1, pair.q - 1, pair.s, m, pair.q, nullptr);
            out[m - 1] = rank_in_cube(a, pair.q) - rank_impl(count, a, 0, pair.u1, pair.q) + m;
        }
    };
    threads = std::max(1u, threads);
    if (threads == 1 || ell < 2 * threads) {
        work(0, ell);
        return out;
    }
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(work, ell * k / threads, ell * (k + 1) / threads);
    for (auto& th : pool) th.join();
    return out;
}

std::vector<std::uint64_t> ghw_hierarchy(int u, int s, int q, unsigned threads) {
    if (u == -1) return {};
    return hierarchy(CodePair{q, s, u, -1}, threads);
}

}  // namespace rmcoset
