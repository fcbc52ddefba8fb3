#include <doctest.h>

#include <random>
#include <set>

#include "rmcoset/gf.hpp"
#include "support.hpp"

using namespace rmcoset;
using gf::Field;
using gf::Value;

namespace {

const std::vector<std::uint32_t> kSizes = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64};
const std::vector<std::uint32_t> kLarge = {81, 121, 125, 128, 243, 256, 343, 625, 1024, 2187, 4096, 6561, 65536};

Errc code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return Errc::Io;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
    auto f = Field::make(5, 1);
    CHECK(f->q() == 5);
    CHECK(f->add(3, 4) == 2);
    CHECK(f->mul(3, 4) == 2);
    CHECK(f->sub(1, 3) == 3);
    CHECK(f->neg(2) == 3);
    CHECK(f->inv(2) == 3);
    CHECK(f->div(1, 4) == 4);
    CHECK(f->elements() == std::vector<Value>{0, 1, 2, 3, 4});
    auto f7 = Field::make(7, 1);
    for (Value a = 0; a < 7; ++a)
        for (Value b = 0; b < 7; ++b) CHECK(f7->mul(a, b) == a * b % 7);
}

TEST_CASE("GF(4) under x^2+x+1") {
    auto f = Field::make(2, 2);
    CHECK(f->modulus() == std::vector<std::uint32_t>{1, 1, 1});
    // 2 encodes x, 3 encodes x+1
    CHECK(f->mul(2, 2) == 3);
    CHECK(f->mul(2, 3) == 1);
    CHECK(f->add(2, 1) == 3);
    CHECK(f->elements() == std::vector<Value>{0, 1, 2, 3});
    const auto els = gf::enumerate_elements(f);
    REQUIRE(els.size() == 4);
    CHECK(els[0].value() == 0);
    CHECK((els[2] * els[3]).value() == 1);
}

TEST_CASE("Conway moduli match the standard tables") {
    using P = std::vector<std::uint32_t>;
    CHECK(gf::conway_polynomial(2, 2) == P{1, 1, 1});
    CHECK(gf::conway_polynomial(2, 3) == P{1, 1, 0, 1});
    CHECK(gf::conway_polynomial(2, 4) == P{1, 1, 0, 0, 1});
    CHECK(gf::conway_polynomial(2, 5) == P{1, 0, 1, 0, 0, 1});
    CHECK(gf::conway_polynomial(2, 8) == P{1, 0, 1, 1, 1, 0, 0, 0, 1});
    CHECK(gf::conway_polynomial(3, 2) == P{2, 2, 1});
    CHECK(gf::conway_polynomial(3, 3) == P{1, 2, 0, 1});
    CHECK(gf::conway_polynomial(5, 2) == P{2, 4, 1});
    CHECK(gf::conway_polynomial(7, 2) == P{3, 6, 1});
}

TEST_CASE("field axioms hold exhaustively for q <= 64") {
    for (auto q : kSizes) {
        CAPTURE(q);
        auto f = Field::of_size(q);
        const auto els = f->elements();
        REQUIRE(els.size() == q);
        CHECK(els[0] == 0);
        CHECK(std::set<Value>(els.begin(), els.end()).size() == q);
        bool ok = true;
        for (Value a : els) {
            ok &= f->add(a, 0) == a && f->mul(a, 1) == a && f->add(a, f->neg(a)) == 0;
            ok &= f->pow(a, q) == a;
            if (a) ok &= f->mul(a, f->inv(a)) == 1;
            for (Value b : els) {
                ok &= f->add(a, b) == f->add(b, a) && f->mul(a, b) == f->mul(b, a);
                if (b) ok &= f->mul(f->div(a, b), b) == a;
                for (Value c : els) {
                    ok &= f->add(f->add(a, b), c) == f->add(a, f->add(b, c));
                    ok &= f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c));
                    ok &= f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c));
                }
            }
        }
        CHECK(ok);
    }
}

TEST_CASE("table arithmetic agrees with schoolbook polynomial arithmetic") {
    std::mt19937_64 rng(5);
    for (auto q : kSizes) {
        auto f = Field::of_size(q);
        if (f->e() == 1) continue;
        CAPTURE(q);
        bool ok = true;
        for (Value a = 0; a < q; ++a)
            for (Value b = 0; b < q; ++b) {
                ok &= f->mul(a, b) == ref::poly_mul(a, b, f->p(), f->modulus());
                ok &= f->add(a, b) == ref::poly_add(a, b, f->p(), f->e());
            }
        CHECK(ok);
    }
    for (auto q : kLarge) {
        auto f = Field::of_size(q);
        CAPTURE(q);
        bool ok = true;
        for (int k = 0; k < 20000; ++k) {
            const Value a = static_cast<Value>(rng() % q), b = static_cast<Value>(rng() % q),
                        c = static_cast<Value>(rng() % q);
            if (f->e() > 1) {
                ok &= f->mul(a, b) == ref::poly_mul(a, b, f->p(), f->modulus());
                ok &= f->add(a, b) == ref::poly_add(a, b, f->p(), f->e());
            }
            ok &= f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c));
            ok &= f->pow(a, q) == a;
            if (a) ok &= f->mul(a, f->inv(a)) == 1;
        }
        CHECK(ok);
    }
}

TEST_CASE("generator has order q-1") {
    for (auto q : kSizes) {
        auto f = Field::of_size(q);
        std::set<Value> seen;
        Value x = 1;
        for (std::uint32_t k = 0; k + 1 < q; ++k) {
            seen.insert(x);
            x = f->mul(x, f->generator());
        }
        CHECK(x == 1);
        CHECK(seen.size() == q - 1);
    }
}

TEST_CASE("custom reduction polynomial") {
    auto f = Field::make(2, 3, {1, 0, 1, 1});
    CHECK(f->modulus() == std::vector<std::uint32_t>{1, 0, 1, 1});
    // x * x^2 = x^3 = x^2 + 1
    CHECK(f->mul(2, 4) == 5);
    for (Value a = 0; a < 8; ++a)
        for (Value b = 0; b < 8; ++b) CHECK(f->mul(a, b) == ref::poly_mul(a, b, 2, {1, 0, 1, 1}));
    auto g = Field::of_size(8, std::vector<std::uint32_t>{1, 0, 1, 1});
    CHECK(g->mul(2, 4) == 5);
}

TEST_CASE("error reporting") {
    CHECK(code_of([] { Field::of_size(6); }) == Errc::NonPrimeCharacteristic);
    CHECK(code_of([] { Field::make(4, 1); }) == Errc::NonPrimeCharacteristic);
    CHECK(code_of([] { Field::of_size(1u << 17); }) == Errc::UnsupportedSize);
    CHECK(code_of([] { Field::make(2, 2, {1, 0, 1}); }) == Errc::ReducibleModulus);
    auto f = Field::make(5, 1);
    CHECK(code_of([&] { f->inv(0); }) == Errc::DivisionByZero);
    CHECK(code_of([&] { f->div(3, 0); }) == Errc::DivisionByZero);
    gf::FieldElement a(Field::make(5, 1), 2), b(Field::make(7, 1), 2);
    CHECK(code_of([&] { (void)(a + b); }) == Errc::MixedFields);
    CHECK(code_of([&] { (void)gf::FieldElement(Field::make(5, 1), 0).inverse(); }) == Errc::DivisionByZero);
}

TEST_CASE("typed elements") {
    auto f = Field::of_size(9);
    const auto els = gf::enumerate_elements(f);
    CHECK(els.size() == 9);
    for (const auto& a : els) {
        CHECK((a - a).value() == 0);
        CHECK((a + (-a)).value() == 0);
        if (a.value()) CHECK((a * a.inverse()).value() == 1);
        if (a.value()) CHECK((a / a).value() == 1);
    }
}

TEST_CASE("prime power helpers") {
    CHECK(gf::is_prime(65521));
    CHECK_FALSE(gf::is_prime(65535));
    CHECK_FALSE(gf::is_prime(1));
    CHECK(gf::factor_prime_power(729) == std::pair<std::uint32_t, std::uint32_t>{3, 6});
    CHECK_FALSE(gf::factor_prime_power(12).has_value());
    CHECK(Field::make(2, 16)->q() == 65536);
}
