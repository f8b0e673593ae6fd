#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace skolab {

// Residue in [0, p). Only a PrimeField knows which p.
struct FieldScalar {
    std::uint32_t value = 0;

    constexpr FieldScalar() = default;
    constexpr explicit FieldScalar(std::uint32_t v) : value(v) {}

    constexpr bool is_zero() const { return value == 0; }
    friend constexpr bool operator==(FieldScalar a, FieldScalar b) { return a.value == b.value; }
};

bool is_prime(std::uint64_t n);

class PrimeField {
public:
    // Throws std::invalid_argument unless p is prime and p > 3.
    explicit PrimeField(std::uint32_t p);

    std::uint32_t modulus() const { return p_; }

    FieldScalar from_int(std::int64_t v) const;
    FieldScalar one() const { return FieldScalar(1); }
    FieldScalar zero() const { return FieldScalar(0); }

    FieldScalar add(FieldScalar a, FieldScalar b) const
    {
        std::uint32_t s = a.value + b.value;
        return FieldScalar(s >= p_ ? s - p_ : s);
    }
    FieldScalar sub(FieldScalar a, FieldScalar b) const
    {
        return FieldScalar(a.value >= b.value ? a.value - b.value : a.value + p_ - b.value);
    }
    FieldScalar neg(FieldScalar a) const { return FieldScalar(a.value == 0 ? 0 : p_ - a.value); }
    FieldScalar mul(FieldScalar a, FieldScalar b) const
    {
        return FieldScalar(static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(a.value) * b.value % p_));
    }
    // std::domain_error on zero.
    FieldScalar inv(FieldScalar a) const;
    FieldScalar div(FieldScalar a, FieldScalar b) const { return mul(a, inv(b)); }
    FieldScalar pow(FieldScalar a, std::uint64_t e) const;

    // C(a, b) mod p by Lucas' theorem; zero when b > a.
    FieldScalar binom(std::uint64_t a, std::uint64_t b) const;
    // prod_i C(a_i, b_i). Throws std::invalid_argument on length mismatch.
    FieldScalar multi_binom(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) const;

private:
    std::uint32_t p_;
    std::vector<std::uint32_t> fact_;
    std::vector<std::uint32_t> inv_fact_;
};

enum class FieldOp { add, sub, mul, neg, inv };

// Single entry point used by the C layer. Binary ops need b.
FieldScalar field_arith(const PrimeField& f, FieldOp op, FieldScalar a,
                        std::optional<FieldScalar> b = std::nullopt);

} // namespace skolab
