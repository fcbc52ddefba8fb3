#pragma once

#include <cstdint>
#include <memory>
#include <random>

namespace rmcoset {

/// Source of 64-bit words. Simulations only ever draw through this seam.
class RandomSource {
public:
    virtual ~RandomSource() = default;
    virtual std::uint64_t next() = 0;

    /// Uniform in [0, n), n >= 1, by rejection (portable across standard libraries).
    std::uint64_t below(std::uint64_t n);
    /// Uniform in [0, 1) with 53 random bits.
    double unit();
};

/// std::mt19937_64, the documented default generator.
class Mt64Source final : public RandomSource {
public:
    explicit Mt64Source(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t next() override { return engine_(); }

private:
    std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Independent sub-seed for (purpose, index) under a master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t purpose, std::uint64_t index);

enum Stream : std::uint64_t {
    kStreamCodeword = 1,
    kStreamPositions = 2,
    kStreamValues = 3,
    kStreamDecoder = 4,
    kStreamTarget = 5,
    kStreamOracle = 6,
};

}  // namespace rmcoset
