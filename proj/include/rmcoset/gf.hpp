#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rmcoset/errors.hpp"

namespace rmcoset::gf {

/// Canonical integer encoding of a field element: the base-p digits of the
/// value are the coefficients of 1, α, α², … where α is a root of the
/// reduction polynomial. Element i of the canonical enumeration is the value i,
/// so γ_0 = 0 and γ_1 = 1.
using Value = std::uint32_t;

inline constexpr std::uint32_t kMaxFieldSize = 1u << 16;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// GF(p^e) for p^e <= 2^16, backed by log/antilog tables. Immutable once built.
class Field {
public:
    /// Field with the Conway polynomial as modulus (cached per p^e).
    static FieldPtr make(std::uint32_t p, std::uint32_t e);
    /// Field with a caller-supplied monic modulus, coefficients ascending
    /// c_0..c_e. Ignored for e = 1. Throws ReducibleModulus if not irreducible.
    static FieldPtr make(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus);
    /// Factor q = p^e and build; throws NonPrimeCharacteristic if q is not a prime power.
    static FieldPtr of_size(std::uint32_t q, std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t e() const noexcept { return e_; }
    std::uint32_t q() const noexcept { return q_; }
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    Value generator() const noexcept { return exp_[1]; }

    Value add(Value a, Value b) const noexcept {
        if (p_ == 2) return a ^ b;
        if (e_ == 1) {
            Value s = a + b;
            return s >= q_ ? s - q_ : s;
        }
        if (!add_.empty()) return add_[static_cast<std::size_t>(a) * q_ + b];
        return add_digits(a, b);
    }
    Value neg(Value a) const noexcept { return neg_[a]; }
    Value sub(Value a, Value b) const noexcept { return add(a, neg_[b]); }
    Value mul(Value a, Value b) const noexcept {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    Value inv(Value a) const {
        if (a == 0) fail(Errc::DivisionByZero, "inverse of zero");
        return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }
    Value div(Value a, Value b) const {
        if (b == 0) fail(Errc::DivisionByZero, "division by zero");
        if (a == 0) return 0;
        return exp_[log_[a] + (q_ - 1) - log_[b]];
    }
    Value pow(Value a, std::uint64_t k) const noexcept;
    /// Discrete log base generator(); a must be nonzero.
    std::uint32_t log(Value a) const noexcept { return log_[a]; }
    Value exp(std::uint64_t k) const noexcept { return exp_[k % (q_ - 1)]; }

    /// γ_0, …, γ_{q−1} in canonical order.
    std::vector<Value> elements() const;

    std::string describe() const;

private:
    Field() = default;
    void build_tables(Value primitive);
    Value add_digits(Value a, Value b) const noexcept;

    std::uint32_t p_ = 0, e_ = 0, q_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<Value> exp_;   // length 2(q−1)
    std::vector<std::uint32_t> log_;
    std::vector<Value> neg_;
    std::vector<std::uint16_t> add_;  // full table for small odd extension fields
};

/// Conway polynomial C_{p,e}, ascending coefficients, computed from its
/// defining conditions (primitive, subfield-compatible, least in Conway order).
std::vector<std::uint32_t> conway_polynomial(std::uint32_t p, std::uint32_t e);

bool is_prime(std::uint32_t n) noexcept;

/// (p, e) with q = p^e, or nullopt.
std::optional<std::pair<std::uint32_t, std::uint32_t>> factor_prime_power(std::uint32_t q) noexcept;

/// Typed element: arithmetic across different fields throws MixedFields.
class FieldElement {
public:
    FieldElement(FieldPtr field, Value value);

    const FieldPtr& field() const noexcept { return field_; }
    Value value() const noexcept { return value_; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    bool operator==(const FieldElement& o) const noexcept {
        return field_.get() == o.field_.get() && value_ == o.value_;
    }

private:
    const Field& same(const FieldElement& o) const;
    FieldPtr field_;
    Value value_;
};

/// All elements of the field as typed values, in canonical order.
std::vector<FieldElement> enumerate_elements(const FieldPtr& field);

}  // namespace rmcoset::gf
