#pragma once

#include "skolab/superalgebra.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace skolab {

using SparseRow = std::vector<MonoTerm>;  // sorted by column, nonzero

// Reduced row echelon form over GF(p) with sparse rows. Pivots are leading
// (smallest) columns, normalized to 1, and every other row is zero there.
class Echelon {
public:
    explicit Echelon(const PrimeField& f) : f_(&f) {}

    std::size_t rank() const { return rows_.size(); }
    // Residual of v modulo the row space; zero iff v is in it.
    SparseRow reduce(const SparseRow& v) const;
    // v must be a nonzero output of reduce().
    void insert_reduced(SparseRow v);
    bool insert(const SparseRow& v);

    // Row ids are stable; sorted_ids() lists them by pivot.
    const SparseRow& row(std::size_t id) const { return rows_[id]; }
    std::uint32_t pivot(std::size_t id) const { return rows_[id].front().index; }
    std::optional<std::size_t> row_of_pivot(std::uint32_t col) const;
    const std::vector<std::size_t>& sorted_ids() const;

    const PrimeField& field() const { return *f_; }

private:
    const PrimeField* f_;
    std::vector<SparseRow> rows_;
    std::unordered_map<std::uint32_t, std::size_t> pivot_row_;
    mutable std::vector<std::size_t> sorted_;
    mutable bool sorted_valid_ = true;
};

SparseRow sparse_axpy(const PrimeField& f, const SparseRow& a, FieldScalar c, const SparseRow& b);

class Subspace {
public:
    explicit Subspace(const AlgebraContext& ctx) : ctx_(&ctx), ech_(ctx.field()) {}
    static Subspace span_of(const AlgebraContext& ctx, const std::vector<SuperElement>& vs);

    const AlgebraContext& context() const { return *ctx_; }
    std::size_t dim() const { return ech_.rank(); }

    bool insert(const SuperElement& v);
    SuperElement reduce(const SuperElement& v) const;
    bool contains(const SuperElement& v) const;
    bool includes(const Subspace& other) const;

    // Basis sorted by pivot index.
    std::vector<SuperElement> basis() const;
    SuperElement basis_vector(std::size_t k) const;
    std::vector<std::uint32_t> pivots() const;
    // Coordinates in basis() order. Throws std::invalid_argument when v is not a member.
    std::vector<std::pair<std::size_t, FieldScalar>> coordinates(const SuperElement& v) const;

    // Number of basis vectors whose pivot lies in each block.
    std::vector<std::size_t> block_dims() const;
    // Every basis vector lies in a single block.
    bool block_homogeneous() const;
    std::uint32_t block_of(std::size_t k) const;

    const Echelon& echelon() const { return ech_; }

private:
    void check_ctx(const SuperElement& v) const;

    const AlgebraContext* ctx_;
    Echelon ech_;
};

std::size_t rank_of(const AlgebraContext& ctx, const std::vector<SuperElement>& vs);

// Kernel of a linear map given on domain vectors. Images are sparse rows over
// an arbitrary column space (column ids < 2^31).
Subspace kernel_of(const AlgebraContext& ctx, const std::vector<SuperElement>& domain,
                   const std::function<SparseRow(const SuperElement&)>& image);

// Same, with the domain given as basis monomials grouped by block. The map
// must send a block into a single block so groups can be solved separately.
Subspace kernel_by_block(const AlgebraContext& ctx, const std::function<SparseRow(std::uint32_t idx)>& image,
                         const std::function<bool(std::uint32_t idx)>& in_domain = {});

class ClosureError : public std::runtime_error {
public:
    ClosureError(const std::string& what, std::size_t i, std::size_t j)
        : std::runtime_error(what), first(i), second(j) {}
    std::size_t first, second;
};

struct ClosureOptions {
    bool parallel = false;
    // Random pairs checked for closure of the input before the computation.
    std::size_t closure_samples = 64;
    std::uint64_t seed = 1;
};

// [h, h]. Throws ClosureError if h fails a sampled closure check.
Subspace derived_subalgebra(const Subspace& h, const ClosureOptions& opt = {});
// Smallest subalgebra containing gens.
Subspace generated_closure(const AlgebraContext& ctx, const std::vector<SuperElement>& gens);
// Ideal of the subalgebra `ambient` generated by seed. The ambient algebra
// acts through `generators` (must generate ambient); defaults to its basis.
// Throws std::invalid_argument if seed is not in ambient.
Subspace ideal_closure(const SuperElement& seed, const Subspace& ambient,
                       const std::vector<SuperElement>* generators = nullptr);

} // namespace skolab
