#include <doctest.h>

#include <random>

#include "rmcoset/rghw.hpp"
#include "support.hpp"

using namespace rmcoset;

namespace {

std::uint64_t ref_rghw(const CodePair& p, std::uint64_t m) {
    // |∇ N(m)| via brute enumeration of the window prefix
    const auto W = ref::window(p.q, p.s, p.u2 + 1, p.u1);
    return ref::up_size({W.begin(), W.begin() + static_cast<std::ptrdiff_t>(m)}, p.q, p.s);
}

std::uint64_t ref_dim(int u, int s, int q) { return static_cast<std::uint64_t>(ref::count(0, u, s, q)); }

}  // namespace

TEST_CASE("rho worked values") {
    CHECK(rho(14, 16, 6, 7) == 23415);
    CHECK(rho(1, 3, 3, 7) == 19);
    CHECK(rho(0, 2, 3, 7) == 10);
    // the direct count of F_7((2,4),4) is 65
    CHECK(ref::count(2, 4, 4, 7) == 65);
    CHECK(rho(2, 4, 4, 7) == 65);
    for (int q : {2, 3, 4, 5, 7, 8, 9})
        for (int s = 1; s <= 4; ++s) CHECK(rho(0, s * (q - 1), s, q) == ref::ipow(q, s));
}

TEST_CASE("rho agrees with the convolution count") {
    std::mt19937_64 rng(10);
    for (int k = 0; k < 3000; ++k) {
        const int q = ref::random_prime_power(rng, 2, 31), s = 1 + static_cast<int>(rng() % 12);
        const int top = s * (q - 1);
        int a = static_cast<int>(rng() % static_cast<unsigned>(top + 1)), b = static_cast<int>(rng() % static_cast<unsigned>(top + 1));
        if (a > b) std::swap(a, b);
        CHECK(rho(a, b, s, q) == ref::count(a, b, s, q));
    }
    // arbitrary precision: 256^40 overflows 64 bits
    CHECK(rho(0, 40 * 255, 40, 256) == ref::Big(1) << 320);
    CHECK(rho(5000, 5100, 40, 256) == ref::count(5000, 5100, 40, 256));
}

TEST_CASE("rho rejects invalid windows") {
    CHECK_THROWS_AS(rho(3, 2, 2, 5), Error);
    CHECK_THROWS_AS(rho(-1, 2, 2, 5), Error);
    CHECK_THROWS_AS(rho(0, 9, 2, 5), Error);
    CHECK_THROWS_AS(rho(0, 1, 0, 5), Error);
}

TEST_CASE("rho_clipped") {
    CHECK(rho_clipped(4, 5, 4, 4, 2, 5) == 2);
    std::mt19937_64 rng(11);
    for (int k = 0; k < 2000; ++k) {
        const int q = ref::random_prime_power(rng, 2, 7), s = 2 + static_cast<int>(rng() % 3);
        const int top = s * (q - 1);
        int a = static_cast<int>(rng() % static_cast<unsigned>(top + 1)), b = static_cast<int>(rng() % static_cast<unsigned>(top + 1));
        if (a > b) std::swap(a, b);
        int v = static_cast<int>(rng() % static_cast<unsigned>(q)), w = static_cast<int>(rng() % static_cast<unsigned>(q));
        if (v > w) std::swap(v, w);
        CAPTURE(q);
        CAPTURE(s);
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(v);
        CAPTURE(w);
        CHECK(rho_clipped(a, b, v, w, s, q) == ref::window(q, s, a, b, v, w).size());
        CHECK(rho_clipped(a, b, 0, q - 1, s, q) == rho(a, b, s, q));
        BigInt slices = 0;
        for (int x = 0; x < q; ++x) slices += rho_clipped(a, b, x, x, s, q);
        CHECK(slices == rho(a, b, s, q));
    }
}

TEST_CASE("veca worked example") {
    std::vector<VecaStep> trace;
    CHECK(veca(20, 22, 6, 7, 34, 7, &trace) == Exponent{1, 0, 0, 1, 6, 6, 6});
    std::vector<std::uint64_t> rs;
    int resets = 0;
    for (const auto& st : trace) {
        if (st.reset)
            ++resets;
        else
            rs.push_back(st.r);
    }
    CHECK(rs == std::vector<std::uint64_t>{23415, 1936, 65, 1, 4, 10, 19});
    CHECK(resets == 1);
}

TEST_CASE("veca returns the M-th element of the clipped window") {
    for (int q = 2; q <= 4; ++q)
        for (int S = 1; S <= 3; ++S)
            for (int A = 0; A <= S * (q - 1); ++A)
                for (int B = A; B <= S * (q - 1); ++B)
                    for (int V = 0; V < q; ++V) {
                        const auto W = ref::window(q, S, A, B, 0, V);
                        for (std::size_t M = 1; M <= W.size(); ++M) CHECK(veca(A, B, V, S, M, q) == W[M - 1]);
                        CHECK_THROWS_AS(veca(A, B, V, S, W.size() + 1, q), Error);
                    }
    CHECK_THROWS_AS(veca(3, 2, 1, 2, 1, 3), Error);
    CHECK_THROWS_AS(veca(0, 2, 1, 2, 0, 3), Error);
    CHECK_THROWS_AS(veca(0, 2, 3, 2, 1, 3), Error);
}

TEST_CASE("veca at scale matches rank") {
    std::mt19937_64 rng(12);
    for (int k = 0; k < 300; ++k) {
        const int q = 16, s = 7;
        const auto total = static_cast<std::uint64_t>(rho(88, 90, s, q));
        const std::uint64_t M = 1 + rng() % total;
        const auto a = veca(88, 90, q - 1, s, M, q);
        CHECK(degree(a) >= 88);
        CHECK(degree(a) <= 90);
        CHECK(rank_in_window(a, 88, 90, q) == M);
    }
}

TEST_CASE("ranks") {
    CHECK(rank_in_window({3, 1}, 0, 5, 5) == 11);
    CHECK(rank_in_window({3, 1}, 4, 5, 5) == 8);
    CHECK(rank_in_cube({3, 1}, 5) == 17);
    for (int q = 2; q <= 5; ++q)
        for (int s = 1; s <= 3; ++s) {
            auto all = ref::cube(q, s);
            std::sort(all.begin(), all.end(), ref::antilex_less);
            for (std::size_t i = 0; i < all.size(); ++i) CHECK(rank_in_cube(all[i], q) == i + 1);
            for (int lo = 0; lo <= s * (q - 1); ++lo)
                for (int hi = lo; hi <= s * (q - 1); ++hi) {
                    const auto W = ref::window(q, s, lo, hi);
                    for (std::size_t i = 0; i < W.size(); ++i) CHECK(rank_in_window(W[i], lo, hi, q) == i + 1);
                }
        }
    CHECK_THROWS_AS(rank_in_window({0, 0}, 1, 3, 5), Error);
}

TEST_CASE("rghw worked examples") {
    RghwExplain ex;
    CHECK(rghw({5, 2, 5, 3}, 8, &ex) == 14);
    CHECK(ex.a == Exponent{3, 1});
    CHECK(ex.r == 11);
    CHECK(ex.t == 17);
    CHECK(rghw({16, 7, 90, 88}, 1000, &ex) == 3170);
    CHECK(ex.r == 14557);
    CHECK(ex.t == 16727);
    CHECK(ghw(90, 7, 16, 1000) == 1515);
}

TEST_CASE("hierarchies of the q = 5 bivariate pairs") {
    using V = std::vector<std::uint64_t>;
    CHECK(hierarchy({5, 2, 2, 1}) == V{15, 19, 22});
    CHECK(hierarchy({5, 2, 3, 2}) == V{10, 14, 17, 19});
    CHECK(hierarchy({5, 2, 4, 3}) == V{5, 9, 12, 14, 15});
    CHECK(hierarchy({5, 2, 5, 4}) == V{4, 7, 9, 10});
    CHECK(hierarchy({5, 2, 6, 5}) == V{3, 5, 6});
    auto d = [](int u, std::size_t k) {
        V out;
        for (std::uint64_t r = 1; r <= k; ++r) out.push_back(ghw(u, 2, 5, r));
        return out;
    };
    CHECK(d(2, 3) == V{15, 19, 20});
    CHECK(d(3, 4) == V{10, 14, 15, 18});
    CHECK(d(4, 5) == V{5, 9, 10, 13, 14});
    CHECK(d(5, 4) == V{4, 5, 8, 9});
    CHECK(d(6, 3) == V{3, 4, 5});
    CHECK(hierarchy({5, 2, 5, 3}) == V{4, 5, 8, 9, 11, 12, 13, 14, 15});
}

TEST_CASE("rghw equals the prefix shadow") {
    for (int q = 2; q <= 5; ++q)
        for (int s = 1; s <= 3; ++s)
            for (int u1 = 0; u1 <= s * (q - 1); ++u1)
                for (int u2 = -1; u2 < u1; ++u2) {
                    const CodePair p{q, s, u1, u2};
                    const auto M = hierarchy(p);
                    REQUIRE(M.size() == p.ell());
                    for (std::uint64_t m = 1; m <= M.size(); ++m) CHECK(M[m - 1] == ref_rghw(p, m));
                }
}

TEST_CASE("hierarchy invariants") {
    std::mt19937_64 rng(13);
    for (int k = 0; k < 300; ++k) {
        const int q = ref::random_prime_power(rng, 2, 9), s = 1 + static_cast<int>(rng() % 3);
        const int top = s * (q - 1);
        const int u1 = static_cast<int>(rng() % static_cast<unsigned>(top + 1));
        const int u2 = static_cast<int>(rng() % static_cast<unsigned>(u1 + 1)) - 1;
        const CodePair p{q, s, u1, u2};
        const auto M = hierarchy(p);
        REQUIRE(!M.empty());
        for (std::size_t i = 0; i + 1 < M.size(); ++i) CHECK(M[i] < M[i + 1]);
        CHECK(M.front() == ghw(u1, s, q, 1));
        CHECK(M.back() == p.n() - rm_dim(u2, s, q));
        const auto d = ghw_hierarchy(u1, s, q);
        for (std::size_t i = 0; i < M.size(); ++i) CHECK(M[i] >= d[i]);
        CHECK(hierarchy(p, 3) == M);
        CHECK(p.ell() == rm_dim(u1, s, q) - rm_dim(u2, s, q));
    }
}

TEST_CASE("dimension and duality") {
    for (int q : {2, 3, 4, 5, 7, 8, 9})
        for (int s = 1; s <= 4; ++s)
            for (int u = -1; u <= s * (q - 1); ++u) {
                CHECK(rm_dim(u, s, q) == (u < 0 ? 0 : ref_dim(u, s, q)));
                if (u >= 0 && q > 2) {
                    const int du = dual_order(u, s, q);
                    CHECK(du == s * (q - 1) - u - 1);
                    CHECK(rm_dim(u, s, q) + rm_dim(du, s, q) == ref::ipow(q, s));
                }
            }
    const CodePair p{8, 2, 6, 5};
    const CodePair d = p.dual();
    CHECK(d.u1 == 8);
    CHECK(d.u2 == 7);
    CHECK(d.ell() == p.ell());
}

TEST_CASE("code pair validation") {
    CHECK_THROWS_AS(CodePair({5, 2, 3, 3}).validate(), Error);
    CHECK_THROWS_AS(CodePair({5, 2, 3, -2}).validate(), Error);
    CHECK_THROWS_AS(CodePair({6, 2, 3, 2}).validate(), Error);
    CHECK_THROWS_AS(CodePair({5, 0, 3, 2}).validate(), Error);
    CHECK_THROWS_AS(rghw({5, 2, 3, 2}, 0), Error);
    CHECK_THROWS_AS(rghw({5, 2, 3, 2}, 5), Error);
    CHECK_THROWS_AS(ghw(3, 2, 5, 11), Error);
}

TEST_CASE("window_count") {
    CHECK(window_count(3, 2, 2, 5) == 0);
    CHECK(window_count(0, 0, 0, 5) == 1);
    CHECK(window_count(-4, 100, 2, 5) == 25);
    CHECK(window_count(14, 16, 6, 7) == 23415);
}
