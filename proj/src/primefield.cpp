#include "skolab/primefield.hpp"

#include <stdexcept>
#include <string>

namespace skolab {

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p)
{
    if (p <= 3 || !is_prime(p))
        throw std::invalid_argument("p must be an odd prime > 3 (got " + std::to_string(p) + ")");
    if (p > (1u << 20))
        throw std::invalid_argument("p too large for the factorial tables");
    fact_.resize(p);
    inv_fact_.resize(p);
    fact_[0] = 1;
    for (std::uint32_t i = 1; i < p; ++i)
        fact_[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(fact_[i - 1]) * i % p);
    inv_fact_[p - 1] = inv(FieldScalar(fact_[p - 1])).value;
    for (std::uint32_t i = p - 1; i > 0; --i)
        inv_fact_[i - 1] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(inv_fact_[i]) * i % p);
}

FieldScalar PrimeField::from_int(std::int64_t v) const
{
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return FieldScalar(static_cast<std::uint32_t>(r));
}

FieldScalar PrimeField::pow(FieldScalar a, std::uint64_t e) const
{
    FieldScalar r(1);
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

FieldScalar PrimeField::inv(FieldScalar a) const
{
    if (a.value % p_ == 0) throw std::domain_error("zero has no inverse");
    return pow(a, p_ - 2);
}

FieldScalar PrimeField::binom(std::uint64_t a, std::uint64_t b) const
{
    if (b > a) return FieldScalar(0);
    std::uint64_t r = 1;
    while (b > 0 || a > 0) {
        std::uint32_t ai = static_cast<std::uint32_t>(a % p_);
        std::uint32_t bi = static_cast<std::uint32_t>(b % p_);
        if (bi > ai) return FieldScalar(0);
        r = r * fact_[ai] % p_;
        r = r * inv_fact_[bi] % p_;
        r = r * inv_fact_[ai - bi] % p_;
        a /= p_;
        b /= p_;
    }
    return FieldScalar(static_cast<std::uint32_t>(r));
}

FieldScalar PrimeField::multi_binom(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) const
{
    if (a.size() != b.size())
        throw std::invalid_argument("multi_binom: length mismatch");
    FieldScalar r(1);
    for (std::size_t i = 0; i < a.size() && !r.is_zero(); ++i)
        r = mul(r, binom(a[i], b[i]));
    return r;
}

FieldScalar field_arith(const PrimeField& f, FieldOp op, FieldScalar a, std::optional<FieldScalar> b)
{
    auto need_b = [&]() {
        if (!b) throw std::invalid_argument("binary field operation needs two operands");
        return *b;
    };
    switch (op) {
    case FieldOp::add: return f.add(a, need_b());
    case FieldOp::sub: return f.sub(a, need_b());
    case FieldOp::mul: return f.mul(a, need_b());
    case FieldOp::neg: return f.neg(a);
    case FieldOp::inv: return f.inv(a);
    }
    throw std::invalid_argument("unknown field operation");
}

} // namespace skolab
