#include "skolab/spanning.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace skolab {

const char* span_kind_name(SpanKind k)
{
    switch (k) {
    case SpanKind::S1: return "S1";
    case SpanKind::S2: return "S2";
    case SpanKind::S3: return "S3";
    case SpanKind::S4: return "S4";
    case SpanKind::S5: return "S5";
    case SpanKind::X: return "X";
    case SpanKind::G: return "G";
    case SpanKind::unit: return "unit";
    }
    return "?";
}

namespace {

std::string join(const std::vector<std::uint32_t>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::vector<std::uint32_t> sorted_u(std::vector<std::uint32_t> u)
{
    std::sort(u.begin(), u.end());
    return u;
}

} // namespace

std::string SpanningLabel::render() const
{
    std::string s = span_kind_name(kind);
    s += "(alpha=[" + join(alpha) + "], u=[" + join(u) + "]";
    if (q) s += ", q=" + std::to_string(*q);
    if (!tuple.empty() || kind == SpanKind::X) s += ", tuple=(" + join(tuple) + ")";
    return s + ")";
}

SuperElement monomial_element(const AlgebraContext& ctx, const std::vector<std::uint32_t>& alpha,
                              const std::vector<std::uint32_t>& u, bool eps)
{
    const std::uint32_t n = ctx.n();
    if (alpha.size() != n) throw std::invalid_argument("alpha must have n entries");
    for (std::uint32_t i = 0; i < n; ++i)
        if (alpha[i] > ctx.pi(i + 1)) throw std::invalid_argument("alpha outside the divided power range");
    std::uint32_t mask = 0;
    int inv = 0;
    for (std::size_t a = 0; a < u.size(); ++a) {
        if (u[a] < n + 1 || u[a] > 2 * n) throw std::invalid_argument("odd index out of range in u");
        std::uint32_t bit = 1u << (u[a] - n - 1);
        if (mask & bit) throw std::invalid_argument("repeated odd index in u");
        mask |= bit;
        for (std::size_t b = a + 1; b < u.size(); ++b) inv += u[b] < u[a];
    }
    if (eps) mask |= 1u << n;
    std::uint32_t idx = *ctx.find_raw(alpha.data(), mask);
    FieldScalar c = (inv & 1) ? ctx.field().neg(FieldScalar(1)) : FieldScalar(1);
    return SuperElement::basis(ctx, idx, c);
}

SuperElement build_A(const AlgebraContext& ctx, const std::vector<std::uint32_t>& alpha,
                     const std::vector<std::uint32_t>& u, std::uint32_t q)
{
    SuperElement m = monomial_element(ctx, alpha, u);
    Monomial mm{alpha, sorted_u(u), false};
    IndexReport rep = index_report(ctx, mm);
    SuperElement out = m;
    for (std::uint32_t i : rep.I) out = out - gamma(i, q, m);
    return out;
}

SuperElement build_B(const AlgebraContext& ctx, const std::vector<std::uint32_t>& alpha,
                     const std::vector<std::uint32_t>& u, std::uint32_t q)
{
    SuperElement m = monomial_element(ctx, alpha, u);
    Monomial mm{alpha, sorted_u(u), false};
    const PrimeField& f = ctx.field();
    FieldScalar c = f.sub(ctx.n_lambda(), zd(ctx, mm));
    if (u.size() & 1) c = f.neg(c);
    return nabla(q, m).scaled(c);
}

SuperElement build_E(const AlgebraContext& ctx, EVariant v, const std::vector<std::uint32_t>& alpha,
                     const std::vector<std::uint32_t>& u, std::optional<std::uint32_t> q)
{
    auto need_q = [&]() {
        if (!q || *q < 1 || *q > ctx.n()) throw std::invalid_argument("this variant needs q in 1..n");
        return *q;
    };
    SuperElement last = SuperElement::basis(ctx, *ctx.find(Monomial{std::vector<std::uint32_t>(ctx.n(), 0), {}, true}));
    switch (v) {
    case EVariant::E: return monomial_element(ctx, alpha, u);
    case EVariant::Eq: return build_A(ctx, alpha, u, need_q());
    case EVariant::E2n1: return monomial_element(ctx, alpha, u, true);
    case EVariant::E2n1q: {
        std::uint32_t qq = need_q();
        return monomial_element(ctx, alpha, u, true) + build_B(ctx, alpha, u, qq);
    }
    case EVariant::G2n1q: {
        std::uint32_t qq = need_q();
        return multiply(build_A(ctx, alpha, u, qq), last) + build_B(ctx, alpha, u, qq);
    }
    }
    throw std::invalid_argument("unknown element variant");
}

std::vector<std::uint32_t> sigma_set(std::uint32_t p, std::uint32_t n, std::uint32_t lambda, int l)
{
    std::vector<std::uint32_t> out;
    std::int64_t P = p;
    for (std::uint32_t k = 0; k <= n; ++k) {
        std::int64_t v = (std::int64_t(n) * lambda - n + 2 * std::int64_t(k) + l) % P;
        if (v == 0) out.push_back(k);
    }
    return out;
}

std::vector<std::uint32_t> sigma_set(const AlgebraContext& ctx, int l)
{
    return sigma_set(ctx.p(), ctx.n(), ctx.params().lambda, l);
}

std::vector<std::vector<std::uint32_t>> tuples_J(std::uint32_t n, std::uint32_t r)
{
    std::vector<std::vector<std::uint32_t>> out;
    if (r > n) return out;
    std::vector<std::uint32_t> cur;
    auto rec = [&](auto&& self, std::uint32_t start) -> void {
        if (cur.size() == r) {
            out.push_back(cur);
            return;
        }
        for (std::uint32_t i = start; i <= n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

SuperElement build_X(const AlgebraContext& ctx, const std::vector<std::uint32_t>& tuple)
{
    const std::uint32_t n = ctx.n();
    std::vector<std::uint32_t> alpha(n, 0), u;
    for (std::size_t a = 0; a < tuple.size(); ++a) {
        if (tuple[a] < 1 || tuple[a] > n) throw std::invalid_argument("X: index out of range");
        if (a > 0 && tuple[a] <= tuple[a - 1]) throw std::invalid_argument("X: tuple must be strictly increasing");
        alpha[tuple[a] - 1] = ctx.pi(tuple[a]);
    }
    for (std::uint32_t i = 1; i <= n; ++i)
        if (alpha[i - 1] == 0) u.push_back(i + n);
    return monomial_element(ctx, alpha, u);
}

SuperElement exceptional_G(const AlgebraContext& ctx)
{
    const std::uint32_t n = ctx.n();
    std::vector<std::uint32_t> alpha = ctx.pis();
    alpha[0] -= 1;
    std::vector<std::uint32_t> u;
    for (std::uint32_t i = 2; i <= n; ++i) u.push_back(i + n);
    return build_E(ctx, EVariant::G2n1q, alpha, u, 1);
}

SuperElement build_Y(const SuperElement& f, std::uint32_t q)
{
    const AlgebraContext* ctx = f.context();
    if (!ctx || f.is_zero()) throw std::invalid_argument("Y: f must be nonzero");
    Parity par = parity(f);
    if (par == Parity::mixed) throw std::invalid_argument("Y: f must be parity homogeneous");
    std::uint32_t z = ctx->zdeg(f.terms().front().index);
    for (const auto& t : f.terms()) {
        if (ctx->odd_mask(t.index) >> ctx->n()) throw std::invalid_argument("Y: f must not involve x_{2n+1}");
        if (ctx->zdeg(t.index) != z) throw std::invalid_argument("Y: f must be Z-degree homogeneous");
    }
    SuperElement nq = nabla(q, f);
    if (nq.is_zero()) throw std::invalid_argument("Y: f is not q-integral");
    const PrimeField& fl = ctx->field();
    SuperElement last = SuperElement::basis(*ctx, *ctx->find(Monomial{std::vector<std::uint32_t>(ctx->n(), 0), {}, true}));
    FieldScalar c = fl.sub(ctx->n_lambda(), fl.from_int(z));
    if (par == Parity::odd) c = fl.neg(c);
    return multiply(f, last) + nq.scaled(c);
}

SpanningSets build_S_sets(const AlgebraContext& ctx)
{
    SpanningSets out;
    for (SpanKind k : {SpanKind::S1, SpanKind::S2, SpanKind::S3, SpanKind::S4, SpanKind::S5}) out.sets[k];
    const PrimeField& f = ctx.field();
    for (std::uint32_t idx = 0; idx < ctx.dimension(); ++idx) {
        Monomial m = ctx.monomial(idx);
        if (m.eps) continue;
        IndexReport rep = index_report(ctx, m);
        auto label = [&](SpanKind k, std::optional<std::uint32_t> q) { return SpanningLabel{k, m.alpha, m.u, q, {}}; };
        bool zero = idx == ctx.unit_index();
        if (rep.I.empty() && !zero)
            out.sets[SpanKind::S1].push_back({label(SpanKind::S1, {}), build_E(ctx, EVariant::E, m.alpha, m.u)});
        if (rep.in_dstar())
            for (std::uint32_t q : rep.Itilde)
                out.sets[SpanKind::S2].push_back({label(SpanKind::S2, q), build_E(ctx, EVariant::Eq, m.alpha, m.u, q)});
        if (rep.I.empty() && rep.qmin)
            out.sets[SpanKind::S3].push_back(
                {label(SpanKind::S3, rep.qmin), build_E(ctx, EVariant::E2n1q, m.alpha, m.u, rep.qmin)});
        if (rep.in_dstar())
            for (std::uint32_t q : rep.Itilde)
                out.sets[SpanKind::S4].push_back({label(SpanKind::S4, q), build_E(ctx, EVariant::G2n1q, m.alpha, m.u, q)});
        if (rep.I.empty() && rep.Itilde.empty() && f.sub(ctx.n_lambda(), zd(ctx, m)).is_zero())
            out.sets[SpanKind::S5].push_back({label(SpanKind::S5, {}), build_E(ctx, EVariant::E2n1, m.alpha, m.u)});
    }
    out.unit = {SpanningLabel{SpanKind::unit, std::vector<std::uint32_t>(ctx.n(), 0), {}, {}, {}},
                SuperElement::unit(ctx)};
    return out;
}

GeneratorSets generator_sets(const AlgebraContext& ctx)
{
    const std::uint32_t n = ctx.n();
    GeneratorSets out;
    std::vector<SuperElement> seen;
    for (std::uint32_t i = 1; i <= n; ++i) {
        for (std::uint32_t k = 0; k <= ctx.pi(i); ++k) {
            std::vector<std::uint32_t> alpha(n, 0);
            alpha[i - 1] = k;
            IndexReport rep = index_report(ctx, Monomial{alpha, {}, false});
            for (std::uint32_t q : rep.Itilde) {
                SuperElement e = build_E(ctx, EVariant::E2n1q, alpha, {}, q);
                if (std::find(seen.begin(), seen.end(), e) == seen.end()) seen.push_back(e);
                out.T.push_back({SpanningLabel{SpanKind::S3, alpha, {}, q, {}}, e});
            }
        }
    }
    out.distinct_T = seen.size();
    for (std::uint32_t i = 1; i <= n; ++i) {
        std::vector<std::uint32_t> alpha(n, 0);
        std::vector<std::uint32_t> u{i + n};
        IndexReport rep = index_report(ctx, Monomial{alpha, u, false});
        for (std::uint32_t q : rep.Itilde)
            out.S.push_back({SpanningLabel{SpanKind::S3, alpha, u, q, {}}, build_E(ctx, EVariant::E2n1q, alpha, u, q)});
    }
    return out;
}

std::vector<SuperElement> generator_elements(const AlgebraContext& ctx)
{
    GeneratorSets gs = generator_sets(ctx);
    std::vector<SuperElement> out;
    auto add = [&](const SuperElement& e) {
        if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
    };
    for (const auto& t : gs.T) add(t.element);
    for (const auto& s : gs.S) add(s.element);
    add(SuperElement::unit(ctx));
    return out;
}

} // namespace skolab
