#include <doctest.h>

#include "rmcoset/closed2.hpp"
#include "rmcoset/rghw.hpp"

using namespace rmcoset;
using closed2::Case;

namespace {

const int kQs[] = {3, 4, 5, 7, 8, 9, 11, 13, 16};

}  // namespace

TEST_CASE("bivariate RGHW examples") {
    auto seq = [](int q, int u2, int t) {
        std::vector<std::int64_t> out;
        for (std::int64_t m = 1; m <= closed2::codim2(q, u2, t); ++m) out.push_back(closed2::rghw2(q, u2, t, m));
        return out;
    };
    CHECK(closed2::classify(5, 4, 1).tag == Case::One);
    CHECK(seq(5, 4, 1) == std::vector<std::int64_t>{4, 7, 9, 10});
    CHECK(closed2::classify(5, 1, 1).tag == Case::Two);
    CHECK(seq(5, 1, 1) == std::vector<std::int64_t>{15, 19, 22});
    CHECK(seq(5, 2, 1) == std::vector<std::int64_t>{10, 14, 17, 19});
    CHECK(seq(5, 3, 1) == std::vector<std::int64_t>{5, 9, 12, 14, 15});
    CHECK(seq(5, 5, 1) == std::vector<std::int64_t>{3, 5, 6});
    CHECK(closed2::classify(5, 2, 3).tag == Case::Three);
}

TEST_CASE("bivariate GHW examples") {
    auto seq = [](int q, int u, std::int64_t k) {
        std::vector<std::int64_t> out;
        for (std::int64_t r = 1; r <= k; ++r) out.push_back(closed2::ghw2(q, u, r));
        return out;
    };
    CHECK(seq(5, 4, 5) == std::vector<std::int64_t>{5, 9, 10, 13, 14});
    CHECK(seq(5, 6, 3) == std::vector<std::int64_t>{3, 4, 5});
    CHECK(closed2::ghw2(16, 15, 1) == 16);
}

TEST_CASE("special case u2 = q-2, t = 1") {
    CHECK(closed2::rghw_minus_ghw_special(16, 1) == 0);
    CHECK(closed2::rghw_minus_ghw_special(16, 2) == 0);
    CHECK(closed2::rghw_minus_ghw_special(16, 3) == 13);
    CHECK(closed2::special_rghw(16, 3) == 45);
    CHECK(closed2::special_rghw(16, 16) == 136);
    for (int q : kQs)
        for (std::int64_t m = 1; m <= q; ++m) {
            CHECK(closed2::special_rghw(q, m) == closed2::rghw2(q, q - 2, 1, m));
            CHECK(closed2::rghw_minus_ghw_special(q, m) ==
                  static_cast<std::int64_t>(rghw({q, 2, q - 1, q - 2}, m) - ghw(q - 1, 2, q, m)));
        }
}

TEST_CASE("closed forms equal the engine") {
    for (int q : kQs) {
        const int top = 2 * (q - 1);
        for (int u2 = -1; u2 < top; ++u2)
            for (int t = 1; u2 + t <= top; ++t) {
                CAPTURE(q);
                CAPTURE(u2);
                CAPTURE(t);
                const CodePair p{q, 2, u2 + t, u2};
                const auto M = hierarchy(p);
                REQUIRE(closed2::codim2(q, u2, t) == static_cast<std::int64_t>(M.size()));
                CHECK(closed2::codim2(q, u2, t) == static_cast<std::int64_t>(rho(u2 + 1, u2 + t, 2, q)));
                for (std::size_t m = 1; m <= M.size(); ++m)
                    CHECK(closed2::rghw2(q, u2, t, static_cast<std::int64_t>(m)) == static_cast<std::int64_t>(M[m - 1]));
            }
        for (int u = 0; u <= top; ++u) {
            const std::int64_t k = closed2::dim2(q, u);
            REQUIRE(k == static_cast<std::int64_t>(rm_dim(u, 2, q)));
            for (std::int64_t r = 1; r <= k; ++r)
                CHECK(closed2::ghw2(q, u, r) == static_cast<std::int64_t>(ghw(u, 2, q, static_cast<std::uint64_t>(r))));
        }
    }
}

TEST_CASE("case dispatch covers every input") {
    for (int q : kQs)
        for (int u2 = -1; u2 < 2 * (q - 1); ++u2)
            for (int t = 1; u2 + t <= 2 * (q - 1); ++t) {
                const auto c = closed2::classify(q, u2, t);
                if (u2 - q + 2 >= 0)
                    CHECK(c.tag == Case::One);
                else if (u2 - q + t + 1 <= 0)
                    CHECK(c.tag == Case::Two);
                else
                    CHECK(c.tag == Case::Three);
            }
}

TEST_CASE("range errors") {
    CHECK_THROWS_AS(closed2::rghw2(5, 2, 1, 0), Error);
    CHECK_THROWS_AS(closed2::rghw2(5, 2, 1, 5), Error);
    CHECK_THROWS_AS(closed2::ghw2(5, 4, 16), Error);
    CHECK_THROWS_AS(closed2::rghw2(5, 7, 2, 1), Error);
    CHECK_THROWS_AS(closed2::special_rghw(5, 6), Error);
}
