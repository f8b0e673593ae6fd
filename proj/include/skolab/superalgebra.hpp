#pragma once

#include "skolab/primefield.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace skolab {

struct AlgebraParams {
    std::uint32_t p = 5;
    std::uint32_t n = 3;
    std::vector<std::uint32_t> t{1, 1, 1};
    std::uint32_t lambda = 0;  // element of GF(p)
};

// x^(alpha) x^u x_{2n+1}^eps. Odd indices in u are n+1..2n, ascending.
struct Monomial {
    std::vector<std::uint32_t> alpha;
    std::vector<std::uint32_t> u;
    bool eps = false;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

enum class Parity { even, odd, mixed };

// Key of a block of the multigrading preserved by the bracket and div:
// contact degree, weight vector, parity.
struct BlockKey {
    int cdeg = 0;
    int parity = 0;
    std::vector<int> w;

    friend bool operator==(const BlockKey&, const BlockKey&) = default;
};

struct MonoTerm {
    std::uint32_t index;
    FieldScalar coeff;
};

class AlgebraContext {
public:
    explicit AlgebraContext(AlgebraParams params);

    const PrimeField& field() const { return field_; }
    const AlgebraParams& params() const { return params_; }
    std::uint32_t n() const { return params_.n; }
    std::uint32_t p() const { return params_.p; }
    FieldScalar lambda() const { return FieldScalar(params_.lambda); }
    FieldScalar n_lambda() const { return nl_; }
    // pi_i = p^{t_i} - 1, i in 1..n
    std::uint32_t pi(std::uint32_t i) const { return pi_[i - 1]; }
    const std::vector<std::uint32_t>& pis() const { return pi_; }

    std::size_t dimension() const { return dim_; }

    // Per-basis-index data. alpha() points at n entries.
    const std::uint16_t* alpha(std::uint32_t idx) const { return &alpha_[std::size_t(idx) * params_.n]; }
    std::uint32_t odd_mask(std::uint32_t idx) const { return mask_[idx]; }
    std::uint32_t zdeg(std::uint32_t idx) const { return zdeg_[idx]; }
    std::uint32_t cdeg(std::uint32_t idx) const { return zdeg_[idx] + 2 * ((mask_[idx] >> params_.n) & 1u); }
    int gdeg(std::uint32_t idx) const { return int(cdeg(idx)) - 2; }
    int parity(std::uint32_t idx) const { return __builtin_popcount(mask_[idx]) & 1; }
    std::uint32_t block(std::uint32_t idx) const { return block_[idx]; }

    Monomial monomial(std::uint32_t idx) const;
    std::optional<std::uint32_t> find(const Monomial& m) const;
    // Throws std::invalid_argument if m is not a basis monomial.
    std::uint32_t index_of(const Monomial& m) const;
    std::optional<std::uint32_t> find_raw(const std::uint32_t* alpha, std::uint32_t mask) const;
    std::string render_monomial(std::uint32_t idx) const;

    std::size_t block_count() const { return block_keys_.size(); }
    const BlockKey& block_key(std::uint32_t b) const { return block_keys_[b]; }
    std::optional<std::uint32_t> find_block(const BlockKey& k) const;
    // Block receiving [block b1, block b2], if it exists.
    std::optional<std::uint32_t> bracket_block(std::uint32_t b1, std::uint32_t b2) const;
    std::span<const std::uint32_t> block_members(std::uint32_t b) const;

    // r in 1..2n+1. Left superderivative of a basis monomial.
    std::optional<MonoTerm> partial_mono(std::uint32_t r, std::uint32_t idx) const;
    std::optional<MonoTerm> mul_mono(std::uint32_t a, std::uint32_t b) const;
    // Sign (+1/-1) of x^u1 * x^u2 for disjoint masks.
    static int mask_product_sign(std::uint32_t m1, std::uint32_t m2);

    std::uint32_t unit_index() const { return 0; }

private:
    std::uint64_t raw_key(const std::uint32_t* alpha, std::uint32_t mask) const;

    AlgebraParams params_;
    PrimeField field_;
    FieldScalar nl_;
    std::vector<std::uint32_t> pi_;
    std::vector<std::uint64_t> stride_;  // raw-key stride of alpha_i
    std::size_t dim_ = 0;
    std::vector<std::uint16_t> alpha_;
    std::vector<std::uint32_t> mask_;
    std::vector<std::uint32_t> zdeg_;
    std::vector<std::uint32_t> block_;
    std::vector<std::uint32_t> raw_to_index_;
    std::vector<std::uint64_t> index_to_raw_;
    std::vector<BlockKey> block_keys_;
    std::unordered_map<std::string, std::uint32_t> block_lookup_;
    std::vector<std::uint32_t> block_start_;
    std::vector<std::uint32_t> block_sorted_;
};

// Sparse vector of the divided power superalgebra. Terms are sorted by basis
// index with nonzero coefficients. A default constructed element is zero and
// has no context.
class SuperElement {
public:
    SuperElement() = default;
    explicit SuperElement(const AlgebraContext& ctx) : ctx_(&ctx) {}

    static SuperElement unit(const AlgebraContext& ctx);
    static SuperElement basis(const AlgebraContext& ctx, std::uint32_t idx, FieldScalar c = FieldScalar(1));
    static SuperElement of(const AlgebraContext& ctx, const Monomial& m, FieldScalar c = FieldScalar(1));
    // Takes unsorted terms, merges duplicates and drops zeros.
    static SuperElement from_terms(const AlgebraContext& ctx, std::vector<MonoTerm> terms);

    const AlgebraContext* context() const { return ctx_; }
    const std::vector<MonoTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    FieldScalar coefficient(std::uint32_t idx) const;
    std::optional<std::uint32_t> leading_index() const;

    SuperElement operator+(const SuperElement& o) const;
    SuperElement operator-(const SuperElement& o) const;
    SuperElement operator-() const;
    SuperElement scaled(FieldScalar c) const;
    SuperElement scaled(std::int64_t c) const;
    // this + c * o
    SuperElement axpy(FieldScalar c, const SuperElement& o) const;

    friend bool operator==(const SuperElement& a, const SuperElement& b);

    std::string render() const;

private:
    friend class TermAccumulator;
    const AlgebraContext* ctx_ = nullptr;
    std::vector<MonoTerm> terms_;
};

// Collects terms in any order and produces a normalized element.
class TermAccumulator {
public:
    explicit TermAccumulator(const AlgebraContext& ctx) : ctx_(&ctx) {}
    void add(std::uint32_t idx, FieldScalar c)
    {
        if (!c.is_zero()) raw_.push_back({idx, c});
    }
    void add(const SuperElement& e, FieldScalar c);
    SuperElement take();

private:
    const AlgebraContext* ctx_;
    std::vector<MonoTerm> raw_;
};

// Shared context of a set of operands; throws std::invalid_argument when two
// nonzero operands come from different contexts. Null if all are zero.
const AlgebraContext* common_context(std::initializer_list<const SuperElement*> xs);

SuperElement multiply(const SuperElement& a, const SuperElement& b);
// r in 1..2n+1
SuperElement partial(std::uint32_t r, const SuperElement& a);
Parity parity(const SuperElement& a);
// (even part, odd part)
std::pair<SuperElement, SuperElement> split_by_parity(const SuperElement& a);

struct MonomialDegrees {
    std::uint32_t zd;
    std::uint32_t cdeg;
};
MonomialDegrees degrees(const AlgebraContext& ctx, const Monomial& m);

// Basis in the fixed degree-lexicographic order (contact degree, alpha, u, eps).
std::vector<Monomial> enumerate_basis(const AlgebraContext& ctx,
                                      const std::function<bool(const Monomial&)>& filter = {});

} // namespace skolab
