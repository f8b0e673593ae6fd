#include "skolab/contact_ops.hpp"

#include <stdexcept>
#include <string>

namespace skolab {

std::uint32_t prime_index(std::uint32_t n, std::uint32_t i)
{
    if (i < 1 || i > 2 * n) throw std::out_of_range("prime_index: i must be in 1..2n");
    return i <= n ? i + n : i - n;
}

int mu(std::uint32_t n, std::uint32_t i)
{
    if (i < 1 || i > 2 * n + 1) throw std::out_of_range("mu: i must be in 1..2n+1");
    return i <= n ? 0 : 1;
}

namespace {

FieldScalar sign_of(const PrimeField& f, bool negative)
{
    return negative ? f.neg(FieldScalar(1)) : FieldScalar(1);
}

template <class Fn>
SuperElement map_terms(const SuperElement& a, Fn&& fn)
{
    const AlgebraContext* ctx = a.context();
    if (!ctx) return SuperElement();
    TermAccumulator acc(*ctx);
    for (const auto& t : a.terms()) fn(t.index, t.coeff, acc);
    return acc.take();
}

// c * m1 * m2 where m1 and m2 are optional monomial terms
void add_product(const AlgebraContext& ctx, const std::optional<MonoTerm>& x, const std::optional<MonoTerm>& y,
                 FieldScalar c, TermAccumulator& acc)
{
    if (!x || !y || c.is_zero()) return;
    if (auto m = ctx.mul_mono(x->index, y->index)) {
        const PrimeField& f = ctx.field();
        acc.add(m->index, f.mul(c, f.mul(m->coeff, f.mul(x->coeff, y->coeff))));
    }
}

void t_h_monomials(const AlgebraContext& ctx, std::uint32_t ia, std::uint32_t ib, FieldScalar c,
                   TermAccumulator& acc)
{
    const std::uint32_t n = ctx.n();
    const PrimeField& f = ctx.field();
    const bool odd_a = ctx.parity(ia);
    for (std::uint32_t i = 1; i <= 2 * n; ++i) {
        std::uint32_t ip = i <= n ? i + n : i - n;
        auto db = ctx.partial_mono(i, ib);
        if (!db) continue;
        auto da = ctx.partial_mono(ip, ia);
        if (!da) continue;
        bool neg = mu(n, ip) && odd_a;
        add_product(ctx, da, db, f.mul(c, sign_of(f, neg)), acc);
    }
}

} // namespace

SuperElement euler(const SuperElement& a)
{
    return map_terms(a, [&](std::uint32_t idx, FieldScalar c, TermAccumulator& acc) {
        const PrimeField& f = a.context()->field();
        acc.add(idx, f.mul(c, f.from_int(a.context()->zdeg(idx))));
    });
}

SuperElement laplacian_i(std::uint32_t i, const SuperElement& a)
{
    if (!a.context()) return SuperElement();
    std::uint32_t n = a.context()->n();
    if (i < 1 || i > n) throw std::out_of_range("laplacian_i: i must be in 1..n");
    return partial(i, partial(i + n, a));
}

SuperElement laplacian(const SuperElement& a)
{
    if (!a.context()) return SuperElement();
    TermAccumulator acc(*a.context());
    for (std::uint32_t i = 1; i <= a.context()->n(); ++i) acc.add(laplacian_i(i, a), FieldScalar(1));
    return acc.take();
}

SuperElement t_h_apply(const SuperElement& a, const SuperElement& b)
{
    const AlgebraContext* ctx = common_context({&a, &b});
    if (!ctx || a.is_zero() || b.is_zero()) return ctx ? SuperElement(*ctx) : SuperElement();
    TermAccumulator acc(*ctx);
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms())
            t_h_monomials(*ctx, ta.index, tb.index, ctx->field().mul(ta.coeff, tb.coeff), acc);
    return acc.take();
}

SuperElement d_ko_apply(const SuperElement& a, const SuperElement& b)
{
    const AlgebraContext* ctx = common_context({&a, &b});
    if (!ctx || a.is_zero() || b.is_zero()) return ctx ? SuperElement(*ctx) : SuperElement();
    const PrimeField& f = ctx->field();
    const std::uint32_t last = 2 * ctx->n() + 1;
    TermAccumulator acc(*ctx);
    for (const auto& ta : a.terms()) {
        auto da = ctx->partial_mono(last, ta.index);
        FieldScalar zda = f.from_int(ctx->zdeg(ta.index));
        for (const auto& tb : b.terms()) {
            FieldScalar c = f.mul(ta.coeff, tb.coeff);
            t_h_monomials(*ctx, ta.index, tb.index, c, acc);
            // (-1)^{p(a)} d(a) * Euler(b)
            FieldScalar c2 = f.mul(c, f.from_int(ctx->zdeg(tb.index)));
            if (ctx->parity(ta.index)) c2 = f.neg(c2);
            add_product(*ctx, da, MonoTerm{tb.index, FieldScalar(1)}, c2, acc);
            // (Euler(a) - 2a) * d(b)
            auto db = ctx->partial_mono(last, tb.index);
            add_product(*ctx, MonoTerm{ta.index, FieldScalar(1)}, db, f.mul(c, f.sub(zda, FieldScalar(2))), acc);
        }
    }
    return acc.take();
}

void bracket_monomials(const AlgebraContext& ctx, std::uint32_t ia, std::uint32_t ib, FieldScalar c,
                       TermAccumulator& acc)
{
    const PrimeField& f = ctx.field();
    const std::uint32_t last = 2 * ctx.n() + 1;
    t_h_monomials(ctx, ia, ib, c, acc);
    if (auto da = ctx.partial_mono(last, ia)) {
        FieldScalar k = f.mul(c, f.sub(f.from_int(ctx.zdeg(ib)), FieldScalar(2)));
        if (ctx.parity(ia)) k = f.neg(k);
        add_product(ctx, da, MonoTerm{ib, FieldScalar(1)}, k, acc);
    }
    if (auto db = ctx.partial_mono(last, ib)) {
        FieldScalar k = f.mul(c, f.sub(f.from_int(ctx.zdeg(ia)), FieldScalar(2)));
        add_product(ctx, MonoTerm{ia, FieldScalar(1)}, db, k, acc);
    }
}

SuperElement bracket(const SuperElement& a, const SuperElement& b)
{
    const AlgebraContext* ctx = common_context({&a, &b});
    if (!ctx || a.is_zero() || b.is_zero()) return ctx ? SuperElement(*ctx) : SuperElement();
    TermAccumulator acc(*ctx);
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms())
            bracket_monomials(*ctx, ta.index, tb.index, ctx->field().mul(ta.coeff, tb.coeff), acc);
    return acc.take();
}

SuperElement div_lambda(const SuperElement& a)
{
    const AlgebraContext* ctx = a.context();
    if (!ctx) return SuperElement();
    const PrimeField& f = ctx->field();
    const std::uint32_t n = ctx->n();
    return map_terms(a, [&](std::uint32_t idx, FieldScalar c, TermAccumulator& acc) {
        FieldScalar k = f.mul(c, FieldScalar(2));
        if (ctx->parity(idx)) k = f.neg(k);
        for (std::uint32_t i = 1; i <= n; ++i) {
            auto d1 = ctx->partial_mono(i + n, idx);
            if (!d1) continue;
            auto d2 = ctx->partial_mono(i, d1->index);
            if (!d2) continue;
            acc.add(d2->index, f.mul(k, f.mul(d1->coeff, d2->coeff)));
        }
        if (auto d = ctx->partial_mono(2 * n + 1, idx)) {
            FieldScalar e = f.sub(f.from_int(ctx->zdeg(d->index)), ctx->n_lambda());
            acc.add(d->index, f.mul(k, f.mul(e, d->coeff)));
        }
    });
}

SuperElement nabla(std::uint32_t i, const SuperElement& a)
{
    const AlgebraContext* ctx = a.context();
    if (!ctx) return SuperElement();
    const std::uint32_t n = ctx->n();
    if (i < 1 || i > n) throw std::out_of_range("nabla: i must be in 1..n");
    return map_terms(a, [&](std::uint32_t idx, FieldScalar c, TermAccumulator& acc) {
        std::uint32_t bit = 1u << (i - 1);
        std::uint32_t m = ctx->odd_mask(idx);
        if (m & bit) return;
        std::vector<std::uint32_t> al(ctx->alpha(idx), ctx->alpha(idx) + n);
        if (al[i - 1] >= ctx->pi(i)) return;
        ++al[i - 1];
        auto r = ctx->find_raw(al.data(), m | bit);
        if (!r) return;
        bool neg = AlgebraContext::mask_product_sign(bit, m) < 0;
        acc.add(*r, neg ? ctx->field().neg(c) : c);
    });
}

SuperElement gamma(std::uint32_t i, std::uint32_t j, const SuperElement& a)
{
    return nabla(j, laplacian_i(i, a));
}

FieldScalar zd(const AlgebraContext& ctx, const Monomial& m)
{
    if (m.eps) throw std::invalid_argument("zd is only defined on monomials without x_{2n+1}");
    return ctx.field().from_int(ctx.zdeg(ctx.index_of(m)));
}

IndexReport index_report(const AlgebraContext& ctx, const Monomial& m)
{
    const std::uint32_t n = ctx.n();
    if (m.alpha.size() != n) throw std::invalid_argument("index_report: alpha must have n entries");
    IndexReport r;
    for (std::uint32_t i = 1; i <= n; ++i) {
        bool has_odd = false;
        for (std::uint32_t j : m.u) has_odd |= (j == i + n);
        if (m.alpha[i - 1] >= 1 && has_odd) r.I.push_back(i);
        if (m.alpha[i - 1] < ctx.pi(i) && !has_odd) r.Itilde.push_back(i);
    }
    if (!r.Itilde.empty()) r.qmin = r.Itilde.front();
    return r;
}

std::pair<SuperElement, SuperElement> xj_decompose(const SuperElement& a, std::uint32_t j)
{
    const AlgebraContext* ctx = a.context();
    if (!ctx) return {};
    const std::uint32_t n = ctx->n();
    if (j < n + 1 || j > 2 * n + 1) throw std::invalid_argument("xj_decompose: j must be an odd index in n+1..2n+1");
    std::uint32_t bit = 1u << (j - n - 1);
    TermAccumulator a0(*ctx), a1(*ctx);
    for (const auto& t : a.terms()) {
        std::uint32_t m = ctx->odd_mask(t.index);
        if (!(m & bit)) {
            a1.add(t.index, t.coeff);
            continue;
        }
        std::vector<std::uint32_t> al(ctx->alpha(t.index), ctx->alpha(t.index) + n);
        std::uint32_t rest = m & ~bit;
        // x^rest * x_j = sign * x^m
        bool neg = AlgebraContext::mask_product_sign(rest, bit) < 0;
        a0.add(*ctx->find_raw(al.data(), rest), neg ? ctx->field().neg(t.coeff) : t.coeff);
    }
    return {a0.take(), a1.take()};
}

int lie_parity_bit(const AlgebraContext& ctx, std::uint32_t idx) { return ctx.parity(idx) ^ 1; }

Parity lie_parity(const SuperElement& a)
{
    Parity p = parity(a);
    if (p == Parity::mixed) return p;
    if (a.is_zero()) return Parity::even;
    return p == Parity::even ? Parity::odd : Parity::even;
}

} // namespace skolab
