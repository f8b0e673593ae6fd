#include "skolab/linalg.hpp"

#include "skolab/contact_ops.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <thread>

namespace skolab {

namespace {

void sort_merge(const PrimeField& f, SparseRow& v)
{
    std::sort(v.begin(), v.end(), [](const MonoTerm& a, const MonoTerm& b) { return a.index < b.index; });
    std::size_t w = 0;
    for (std::size_t i = 0; i < v.size();) {
        std::uint32_t idx = v[i].index;
        FieldScalar c(0);
        for (; i < v.size() && v[i].index == idx; ++i) c = f.add(c, v[i].coeff);
        if (!c.is_zero()) v[w++] = {idx, c};
    }
    v.resize(w);
}

FieldScalar entry(const SparseRow& r, std::uint32_t col)
{
    auto it = std::lower_bound(r.begin(), r.end(), col, [](const MonoTerm& t, std::uint32_t c) { return t.index < c; });
    if (it != r.end() && it->index == col) return it->coeff;
    return FieldScalar(0);
}

SparseRow to_row(const SuperElement& v) { return v.terms(); }

SuperElement to_element(const AlgebraContext& ctx, const SparseRow& r)
{
    return SuperElement::from_terms(ctx, r);
}

} // namespace

SparseRow sparse_axpy(const PrimeField& f, const SparseRow& a, FieldScalar c, const SparseRow& b)
{
    SparseRow r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].index < b[j].index)) {
            r.push_back(a[i++]);
        } else if (i == a.size() || b[j].index < a[i].index) {
            FieldScalar v = f.mul(c, b[j].coeff);
            if (!v.is_zero()) r.push_back({b[j].index, v});
            ++j;
        } else {
            FieldScalar v = f.add(a[i].coeff, f.mul(c, b[j].coeff));
            if (!v.is_zero()) r.push_back({a[i].index, v});
            ++i;
            ++j;
        }
    }
    return r;
}

// ---- Echelon

SparseRow Echelon::reduce(const SparseRow& v) const
{
    SparseRow all = v;
    for (const auto& t : v) {
        auto it = pivot_row_.find(t.index);
        if (it == pivot_row_.end()) continue;
        FieldScalar c = f_->neg(t.coeff);
        for (const auto& r : rows_[it->second]) all.push_back({r.index, f_->mul(c, r.coeff)});
    }
    if (all.size() != v.size()) sort_merge(*f_, all);
    return all;
}

void Echelon::insert_reduced(SparseRow v)
{
    FieldScalar lead_inv = f_->inv(v.front().coeff);
    for (auto& t : v) t.coeff = f_->mul(t.coeff, lead_inv);
    std::uint32_t piv = v.front().index;
    for (auto& r : rows_) {
        FieldScalar c = entry(r, piv);
        if (!c.is_zero()) r = sparse_axpy(*f_, r, f_->neg(c), v);
    }
    pivot_row_.emplace(piv, rows_.size());
    rows_.push_back(std::move(v));
    sorted_valid_ = false;
}

bool Echelon::insert(const SparseRow& v)
{
    SparseRow r = reduce(v);
    if (r.empty()) return false;
    insert_reduced(std::move(r));
    return true;
}

std::optional<std::size_t> Echelon::row_of_pivot(std::uint32_t col) const
{
    auto it = pivot_row_.find(col);
    if (it == pivot_row_.end()) return std::nullopt;
    return it->second;
}

const std::vector<std::size_t>& Echelon::sorted_ids() const
{
    if (!sorted_valid_ || sorted_.size() != rows_.size()) {
        sorted_.resize(rows_.size());
        for (std::size_t i = 0; i < rows_.size(); ++i) sorted_[i] = i;
        std::sort(sorted_.begin(), sorted_.end(), [&](std::size_t a, std::size_t b) { return pivot(a) < pivot(b); });
        sorted_valid_ = true;
    }
    return sorted_;
}

// ---- Subspace

void Subspace::check_ctx(const SuperElement& v) const
{
    if (v.context() && v.context() != ctx_ && !v.is_zero())
        throw std::invalid_argument("element belongs to a different algebra context");
}

Subspace Subspace::span_of(const AlgebraContext& ctx, const std::vector<SuperElement>& vs)
{
    Subspace s(ctx);
    for (const auto& v : vs) s.insert(v);
    return s;
}

bool Subspace::insert(const SuperElement& v)
{
    check_ctx(v);
    if (v.is_zero()) return false;
    return ech_.insert(to_row(v));
}

SuperElement Subspace::reduce(const SuperElement& v) const
{
    check_ctx(v);
    return to_element(*ctx_, ech_.reduce(to_row(v)));
}

bool Subspace::contains(const SuperElement& v) const
{
    check_ctx(v);
    if (v.is_zero()) return true;
    return ech_.reduce(to_row(v)).empty();
}

bool Subspace::includes(const Subspace& other) const
{
    for (std::size_t id = 0; id < other.ech_.rank(); ++id)
        if (!ech_.reduce(other.ech_.row(id)).empty()) return false;
    return true;
}

std::vector<SuperElement> Subspace::basis() const
{
    std::vector<SuperElement> out;
    out.reserve(dim());
    for (std::size_t id : ech_.sorted_ids()) out.push_back(to_element(*ctx_, ech_.row(id)));
    return out;
}

SuperElement Subspace::basis_vector(std::size_t k) const
{
    return to_element(*ctx_, ech_.row(ech_.sorted_ids().at(k)));
}

std::vector<std::uint32_t> Subspace::pivots() const
{
    std::vector<std::uint32_t> out;
    for (std::size_t id : ech_.sorted_ids()) out.push_back(ech_.pivot(id));
    return out;
}

std::vector<std::pair<std::size_t, FieldScalar>> Subspace::coordinates(const SuperElement& v) const
{
    check_ctx(v);
    if (!contains(v)) throw std::invalid_argument("element is not in the subspace");
    const auto& ids = ech_.sorted_ids();
    std::vector<std::pair<std::size_t, FieldScalar>> out;
    // position of each pivot in sorted order
    for (const auto& t : v.terms()) {
        auto id = ech_.row_of_pivot(t.index);
        if (!id) continue;
        std::uint32_t piv = t.index;
        auto it = std::lower_bound(ids.begin(), ids.end(), piv,
                                   [&](std::size_t a, std::uint32_t c) { return ech_.pivot(a) < c; });
        out.push_back({std::size_t(it - ids.begin()), t.coeff});
    }
    return out;
}

std::vector<std::size_t> Subspace::block_dims() const
{
    std::vector<std::size_t> out(ctx_->block_count(), 0);
    for (std::size_t id = 0; id < ech_.rank(); ++id) ++out[ctx_->block(ech_.pivot(id))];
    return out;
}

bool Subspace::block_homogeneous() const
{
    for (std::size_t id = 0; id < ech_.rank(); ++id) {
        const auto& r = ech_.row(id);
        std::uint32_t b = ctx_->block(r.front().index);
        for (const auto& t : r)
            if (ctx_->block(t.index) != b) return false;
    }
    return true;
}

std::uint32_t Subspace::block_of(std::size_t k) const
{
    return ctx_->block(ech_.pivot(ech_.sorted_ids().at(k)));
}

std::size_t rank_of(const AlgebraContext& ctx, const std::vector<SuperElement>& vs)
{
    return Subspace::span_of(ctx, vs).dim();
}

// ---- kernels

Subspace kernel_of(const AlgebraContext& ctx, const std::vector<SuperElement>& domain,
                   const std::function<SparseRow(const SuperElement&)>& image)
{
    // Augmented rows: image columns first, then a tag column per domain vector.
    // A row whose residual starts in the tag part records a kernel vector.
    const PrimeField& f = ctx.field();
    SparseRow probe;
    std::vector<SparseRow> imgs;
    imgs.reserve(domain.size());
    std::uint32_t width = 0;
    for (const auto& d : domain) {
        imgs.push_back(image(d));
        if (!imgs.back().empty()) width = std::max(width, imgs.back().back().index + 1);
    }
    Echelon ech(f);
    std::vector<SparseRow> tags;
    for (std::size_t k = 0; k < domain.size(); ++k) {
        SparseRow v = imgs[k];
        v.push_back({width + static_cast<std::uint32_t>(k), FieldScalar(1)});
        SparseRow r = ech.reduce(v);
        if (r.empty()) continue;
        bool kernel = r.front().index >= width;
        if (kernel) tags.push_back(r);
        ech.insert_reduced(std::move(r));
    }
    Subspace out(ctx);
    for (const auto& t : tags) {
        TermAccumulator acc(ctx);
        for (const auto& e : t) acc.add(domain[e.index - width], e.coeff);
        out.insert(acc.take());
    }
    return out;
}

Subspace kernel_by_block(const AlgebraContext& ctx, const std::function<SparseRow(std::uint32_t)>& image,
                         const std::function<bool(std::uint32_t)>& in_domain)
{
    Subspace out(ctx);
    for (std::uint32_t b = 0; b < ctx.block_count(); ++b) {
        std::vector<SuperElement> dom;
        for (std::uint32_t idx : ctx.block_members(b))
            if (!in_domain || in_domain(idx)) dom.push_back(SuperElement::basis(ctx, idx));
        if (dom.empty()) continue;
        Subspace k = kernel_of(ctx, dom, [&](const SuperElement& e) { return image(e.terms().front().index); });
        for (const auto& v : k.basis()) out.insert(v);
    }
    return out;
}

// ---- closures

namespace {

void check_closure_sampled(const Subspace& h, const std::vector<SuperElement>& basis, const ClosureOptions& opt)
{
    if (basis.empty() || opt.closure_samples == 0) return;
    std::mt19937_64 rng(opt.seed);
    for (std::size_t s = 0; s < opt.closure_samples; ++s) {
        std::size_t i = rng() % basis.size(), j = rng() % basis.size();
        if (!h.contains(bracket(basis[i], basis[j])))
            throw ClosureError("subspace is not closed under the bracket", i, j);
    }
}

template <class Job>
void run_batch(std::vector<Job>& jobs, bool parallel)
{
    unsigned hw = parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1u;
    if (hw <= 1 || jobs.size() < 64) {
        for (auto& j : jobs) j();
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < hw; ++w)
        pool.emplace_back([&, w]() {
            for (std::size_t k = w; k < jobs.size(); k += hw) jobs[k]();
        });
    for (auto& t : pool) t.join();
}

} // namespace

Subspace derived_subalgebra(const Subspace& h, const ClosureOptions& opt)
{
    const AlgebraContext& ctx = h.context();
    std::vector<SuperElement> basis = h.basis();
    check_closure_sampled(h, basis, opt);
    Subspace out(ctx);

    if (!h.block_homogeneous()) {
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = i; j < basis.size(); ++j) out.insert(bracket(basis[i], basis[j]));
        return out;
    }

    std::vector<std::size_t> cap = h.block_dims();
    std::vector<std::size_t> have(ctx.block_count(), 0);
    std::map<std::uint32_t, std::vector<std::size_t>> by_block;
    for (std::size_t k = 0; k < basis.size(); ++k) by_block[ctx.block(basis[k].terms().front().index)].push_back(k);
    std::vector<std::uint32_t> blocks;
    for (auto& [b, _] : by_block) blocks.push_back(b);

    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
        for (std::size_t bj = bi; bj < blocks.size(); ++bj) {
            auto tgt = ctx.bracket_block(blocks[bi], blocks[bj]);
            if (!tgt || have[*tgt] >= cap[*tgt]) continue;
            const auto& ri = by_block[blocks[bi]];
            const auto& rj = by_block[blocks[bj]];
            std::vector<std::pair<std::size_t, std::size_t>> pairs;
            for (std::size_t a = 0; a < ri.size(); ++a)
                for (std::size_t b = (bi == bj ? a : 0); b < rj.size(); ++b) pairs.push_back({ri[a], rj[b]});
            // chunks keep the early exit effective while allowing threads
            const std::size_t chunk = opt.parallel ? 256 : 1;
            for (std::size_t s = 0; s < pairs.size() && have[*tgt] < cap[*tgt]; s += chunk) {
                std::size_t e = std::min(pairs.size(), s + chunk);
                std::vector<SuperElement> res(e - s);
                std::vector<std::function<void()>> jobs;
                for (std::size_t k = s; k < e; ++k)
                    jobs.push_back([&, k]() { res[k - s] = bracket(basis[pairs[k].first], basis[pairs[k].second]); });
                run_batch(jobs, opt.parallel);
                for (auto& v : res) {
                    if (have[*tgt] >= cap[*tgt]) break;
                    if (out.insert(v)) ++have[*tgt];
                }
            }
        }
    }
    return out;
}

Subspace generated_closure(const AlgebraContext& ctx, const std::vector<SuperElement>& gens)
{
    Subspace out(ctx);
    std::vector<SuperElement> queue;
    for (const auto& g : gens)
        if (out.insert(g)) queue.push_back(g);
    std::vector<SuperElement> usable = queue;
    for (std::size_t k = 0; k < queue.size(); ++k) {
        for (const auto& g : usable) {
            SuperElement v = bracket(g, queue[k]);
            if (out.insert(v)) queue.push_back(std::move(v));
        }
    }
    return out;
}

Subspace ideal_closure(const SuperElement& seed, const Subspace& ambient, const std::vector<SuperElement>* generators)
{
    const AlgebraContext& ctx = ambient.context();
    if (!ambient.contains(seed)) throw std::invalid_argument("seed is not in the ambient subalgebra");
    std::vector<SuperElement> own;
    if (!generators) {
        own = ambient.basis();
        generators = &own;
    }
    Subspace out(ctx);
    if (seed.is_zero()) return out;
    // sparse vectors first; the result does not depend on the order
    auto cmp = [](const std::pair<std::size_t, std::size_t>& a, const std::pair<std::size_t, std::size_t>& b) {
        return a > b;
    };
    std::priority_queue<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, std::size_t>>,
                        decltype(cmp)>
        pq(cmp);
    std::vector<SuperElement> store;
    auto push = [&](SuperElement v) {
        if (out.insert(v)) {
            pq.push({v.size(), store.size()});
            store.push_back(std::move(v));
        }
    };
    push(seed);
    while (!pq.empty() && out.dim() < ambient.dim()) {
        std::size_t k = pq.top().second;
        pq.pop();
        SuperElement q = store[k];
        for (const auto& y : *generators) {
            push(bracket(y, q));
            if (out.dim() >= ambient.dim()) break;
        }
    }
    return out;
}

} // namespace skolab
