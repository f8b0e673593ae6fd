#include "skolab/superalgebra.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace skolab {

namespace {

constexpr std::size_t kMaxBasis = std::size_t(1) << 22;

std::string encode_block(const BlockKey& k)
{
    std::string s;
    s.reserve(4 * (k.w.size() + 2));
    auto put = [&](int v) { s.append(reinterpret_cast<const char*>(&v), sizeof v); };
    put(k.cdeg);
    put(k.parity);
    for (int x : k.w) put(x);
    return s;
}

std::vector<std::uint32_t> mask_to_u(std::uint32_t mask, std::uint32_t n)
{
    std::vector<std::uint32_t> u;
    for (std::uint32_t b = 0; b < n; ++b)
        if (mask >> b & 1u) u.push_back(n + 1 + b);
    return u;
}

} // namespace

AlgebraContext::AlgebraContext(AlgebraParams params)
    : params_(std::move(params)), field_(params_.p)
{
    const std::uint32_t n = params_.n;
    if (n < 1 || n > 16) throw std::invalid_argument("n must be in 1..16");
    if (params_.t.size() != n)
        throw std::invalid_argument("t must have exactly n = " + std::to_string(n) + " entries");
    if (params_.lambda >= params_.p)
        throw std::invalid_argument("lambda must be a residue in 0..p-1");

    std::uint64_t total = std::uint64_t(1) << (n + 1);
    for (std::uint32_t ti : params_.t) {
        if (ti < 1) throw std::invalid_argument("every t_i must be >= 1");
        std::uint64_t q = 1;
        for (std::uint32_t k = 0; k < ti; ++k) {
            q *= params_.p;
            if (q > kMaxBasis) throw std::invalid_argument("basis too large");
        }
        pi_.push_back(static_cast<std::uint32_t>(q - 1));
        total *= q;
        if (total > kMaxBasis) throw std::invalid_argument("basis too large");
    }
    dim_ = static_cast<std::size_t>(total);
    nl_ = field_.mul(field_.from_int(n), FieldScalar(params_.lambda));

    stride_.assign(n, 0);
    std::uint64_t s = std::uint64_t(1) << (n + 1);
    for (std::uint32_t i = n; i-- > 0;) {
        stride_[i] = s;
        s *= pi_[i] + 1;
    }

    // decode raw keys, then sort into the degree-lex order
    std::vector<std::uint16_t> ra(dim_ * n);
    std::vector<std::uint32_t> rm(dim_), rz(dim_);
    for (std::uint64_t key = 0; key < dim_; ++key) {
        rm[key] = static_cast<std::uint32_t>(key & ((std::uint64_t(1) << (n + 1)) - 1));
        std::uint32_t z = __builtin_popcount(rm[key] & ((1u << n) - 1));
        for (std::uint32_t i = 0; i < n; ++i) {
            std::uint32_t a = static_cast<std::uint32_t>(key / stride_[i] % (pi_[i] + 1));
            ra[key * n + i] = static_cast<std::uint16_t>(a);
            z += a;
        }
        rz[key] = z;
    }
    std::vector<std::uint64_t> order(dim_);
    std::iota(order.begin(), order.end(), 0);
    auto cdeg_of = [&](std::uint64_t k) { return rz[k] + 2 * ((rm[k] >> n) & 1u); };
    std::sort(order.begin(), order.end(), [&](std::uint64_t a, std::uint64_t b) {
        std::uint32_t ca = cdeg_of(a), cb = cdeg_of(b);
        if (ca != cb) return ca < cb;
        for (std::uint32_t i = 0; i < n; ++i) {
            if (ra[a * n + i] != ra[b * n + i]) return ra[a * n + i] < ra[b * n + i];
        }
        std::uint32_t ua = rm[a] & ((1u << n) - 1), ub = rm[b] & ((1u << n) - 1);
        if (ua != ub) {
            // lexicographic on ascending index lists
            auto la = mask_to_u(ua, n), lb = mask_to_u(ub, n);
            return std::lexicographical_compare(la.begin(), la.end(), lb.begin(), lb.end());
        }
        return (rm[a] >> n) < (rm[b] >> n);
    });

    alpha_.resize(dim_ * n);
    mask_.resize(dim_);
    zdeg_.resize(dim_);
    raw_to_index_.resize(dim_);
    index_to_raw_ = order;
    for (std::size_t i = 0; i < dim_; ++i) {
        std::uint64_t k = order[i];
        raw_to_index_[k] = static_cast<std::uint32_t>(i);
        std::copy_n(&ra[k * n], n, &alpha_[i * n]);
        mask_[i] = rm[k];
        zdeg_[i] = rz[k];
    }

    block_.resize(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        BlockKey bk;
        bk.cdeg = static_cast<int>(cdeg(static_cast<std::uint32_t>(i)));
        bk.parity = parity(static_cast<std::uint32_t>(i));
        bk.w.resize(n);
        for (std::uint32_t j = 0; j < n; ++j)
            bk.w[j] = int(alpha_[i * n + j]) - int((mask_[i] >> j) & 1u);
        auto code = encode_block(bk);
        auto it = block_lookup_.find(code);
        if (it == block_lookup_.end()) {
            it = block_lookup_.emplace(code, static_cast<std::uint32_t>(block_keys_.size())).first;
            block_keys_.push_back(std::move(bk));
        }
        block_[i] = it->second;
    }
    block_start_.assign(block_keys_.size() + 1, 0);
    for (std::size_t i = 0; i < dim_; ++i) ++block_start_[block_[i] + 1];
    for (std::size_t b = 0; b < block_keys_.size(); ++b) block_start_[b + 1] += block_start_[b];
    block_sorted_.resize(dim_);
    std::vector<std::uint32_t> fill(block_start_.begin(), block_start_.end() - 1);
    for (std::size_t i = 0; i < dim_; ++i) block_sorted_[fill[block_[i]]++] = static_cast<std::uint32_t>(i);
}

std::uint64_t AlgebraContext::raw_key(const std::uint32_t* alpha, std::uint32_t mask) const
{
    std::uint64_t k = mask;
    for (std::uint32_t i = 0; i < params_.n; ++i) k += stride_[i] * alpha[i];
    return k;
}

Monomial AlgebraContext::monomial(std::uint32_t idx) const
{
    if (idx >= dim_) throw std::out_of_range("basis index out of range");
    Monomial m;
    const std::uint32_t n = params_.n;
    m.alpha.assign(alpha(idx), alpha(idx) + n);
    m.u = mask_to_u(mask_[idx], n);
    m.eps = (mask_[idx] >> n) & 1u;
    return m;
}

std::optional<std::uint32_t> AlgebraContext::find_raw(const std::uint32_t* alpha, std::uint32_t mask) const
{
    for (std::uint32_t i = 0; i < params_.n; ++i)
        if (alpha[i] > pi_[i]) return std::nullopt;
    if (mask >> (params_.n + 1)) return std::nullopt;
    return raw_to_index_[raw_key(alpha, mask)];
}

std::optional<std::uint32_t> AlgebraContext::find(const Monomial& m) const
{
    const std::uint32_t n = params_.n;
    if (m.alpha.size() != n) return std::nullopt;
    std::uint32_t mask = 0;
    std::uint32_t prev = 0;
    for (std::uint32_t j : m.u) {
        if (j < n + 1 || j > 2 * n || j <= prev) return std::nullopt;
        mask |= 1u << (j - n - 1);
        prev = j;
    }
    if (m.eps) mask |= 1u << n;
    return find_raw(m.alpha.data(), mask);
}

std::uint32_t AlgebraContext::index_of(const Monomial& m) const
{
    auto r = find(m);
    if (!r) throw std::invalid_argument("monomial outside the divided power range or malformed");
    return *r;
}

std::string AlgebraContext::render_monomial(std::uint32_t idx) const
{
    const std::uint32_t n = params_.n;
    std::string s;
    auto sep = [&]() {
        if (!s.empty()) s += '*';
    };
    for (std::uint32_t i = 0; i < n; ++i) {
        std::uint32_t a = alpha(idx)[i];
        if (a == 0) continue;
        sep();
        s += 'x' + std::to_string(i + 1);
        if (a > 1) s += "^(" + std::to_string(a) + ")";
    }
    for (std::uint32_t b = 0; b <= n; ++b) {
        if (mask_[idx] >> b & 1u) {
            sep();
            s += 'x' + std::to_string(n + 1 + b);
        }
    }
    return s.empty() ? "1" : s;
}

std::optional<std::uint32_t> AlgebraContext::find_block(const BlockKey& k) const
{
    auto it = block_lookup_.find(encode_block(k));
    if (it == block_lookup_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::uint32_t> AlgebraContext::bracket_block(std::uint32_t b1, std::uint32_t b2) const
{
    const BlockKey& k1 = block_keys_[b1];
    const BlockKey& k2 = block_keys_[b2];
    BlockKey k;
    k.cdeg = k1.cdeg + k2.cdeg - 2;
    k.parity = (k1.parity + k2.parity + 1) & 1;
    k.w.resize(k1.w.size());
    for (std::size_t i = 0; i < k.w.size(); ++i) k.w[i] = k1.w[i] + k2.w[i];
    return find_block(k);
}

std::span<const std::uint32_t> AlgebraContext::block_members(std::uint32_t b) const
{
    return {block_sorted_.data() + block_start_[b], block_start_[b + 1] - block_start_[b]};
}

int AlgebraContext::mask_product_sign(std::uint32_t m1, std::uint32_t m2)
{
    // each odd factor of m2 passes every factor of m1 with a larger index
    int inv = 0;
    while (m2) {
        int b = __builtin_ctz(m2);
        m2 &= m2 - 1;
        inv += __builtin_popcount(m1 >> (b + 1));
    }
    return (inv & 1) ? -1 : 1;
}

std::optional<MonoTerm> AlgebraContext::partial_mono(std::uint32_t r, std::uint32_t idx) const
{
    const std::uint32_t n = params_.n;
    if (r < 1 || r > 2 * n + 1) throw std::invalid_argument("derivative index out of range");
    std::uint64_t key = index_to_raw_[idx];
    if (r <= n) {
        if (alpha(idx)[r - 1] == 0) return std::nullopt;
        return MonoTerm{raw_to_index_[key - stride_[r - 1]], FieldScalar(1)};
    }
    std::uint32_t b = r - n - 1;
    std::uint32_t m = mask_[idx];
    if (!(m >> b & 1u)) return std::nullopt;
    int before = __builtin_popcount(m & ((1u << b) - 1));
    FieldScalar c = (before & 1) ? field_.neg(FieldScalar(1)) : FieldScalar(1);
    return MonoTerm{raw_to_index_[key - (std::uint64_t(1) << b)], c};
}

std::optional<MonoTerm> AlgebraContext::mul_mono(std::uint32_t a, std::uint32_t b) const
{
    std::uint32_t ma = mask_[a], mb = mask_[b];
    if (ma & mb) return std::nullopt;
    const std::uint32_t n = params_.n;
    const std::uint16_t* aa = alpha(a);
    const std::uint16_t* ab = alpha(b);
    std::uint64_t key = ma | mb;
    FieldScalar c(1);
    for (std::uint32_t i = 0; i < n; ++i) {
        std::uint32_t s = std::uint32_t(aa[i]) + ab[i];
        if (s > pi_[i]) return std::nullopt;
        if (aa[i] && ab[i]) {
            c = field_.mul(c, field_.binom(s, aa[i]));
            if (c.is_zero()) return std::nullopt;
        }
        key += stride_[i] * s;
    }
    if (mask_product_sign(ma, mb) < 0) c = field_.neg(c);
    return MonoTerm{raw_to_index_[key], c};
}

// ---- SuperElement

SuperElement SuperElement::unit(const AlgebraContext& ctx) { return basis(ctx, ctx.unit_index()); }

SuperElement SuperElement::basis(const AlgebraContext& ctx, std::uint32_t idx, FieldScalar c)
{
    if (idx >= ctx.dimension()) throw std::out_of_range("basis index out of range");
    SuperElement e(ctx);
    if (!c.is_zero()) e.terms_.push_back({idx, c});
    return e;
}

SuperElement SuperElement::of(const AlgebraContext& ctx, const Monomial& m, FieldScalar c)
{
    return basis(ctx, ctx.index_of(m), c);
}

SuperElement SuperElement::from_terms(const AlgebraContext& ctx, std::vector<MonoTerm> terms)
{
    TermAccumulator acc(ctx);
    for (auto& t : terms) acc.add(t.index, t.coeff);
    return acc.take();
}

FieldScalar SuperElement::coefficient(std::uint32_t idx) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), idx,
                               [](const MonoTerm& t, std::uint32_t i) { return t.index < i; });
    if (it != terms_.end() && it->index == idx) return it->coeff;
    return FieldScalar(0);
}

std::optional<std::uint32_t> SuperElement::leading_index() const
{
    if (terms_.empty()) return std::nullopt;
    return terms_.front().index;
}

const AlgebraContext* common_context(std::initializer_list<const SuperElement*> xs)
{
    const AlgebraContext* c = nullptr;
    for (const SuperElement* x : xs) {
        if (!x->context() || x->is_zero()) continue;
        if (c && c != x->context())
            throw std::invalid_argument("operands belong to different algebra contexts");
        c = x->context();
    }
    if (!c) {
        for (const SuperElement* x : xs)
            if (x->context()) return x->context();
    }
    return c;
}

SuperElement SuperElement::axpy(FieldScalar c, const SuperElement& o) const
{
    const AlgebraContext* ctx = common_context({this, &o});
    if (!ctx) return SuperElement();
    const PrimeField& f = ctx->field();
    SuperElement r(*ctx);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].index < o.terms_[j].index)) {
            r.terms_.push_back(terms_[i++]);
        } else if (i == terms_.size() || o.terms_[j].index < terms_[i].index) {
            FieldScalar v = f.mul(c, o.terms_[j].coeff);
            if (!v.is_zero()) r.terms_.push_back({o.terms_[j].index, v});
            ++j;
        } else {
            FieldScalar v = f.add(terms_[i].coeff, f.mul(c, o.terms_[j].coeff));
            if (!v.is_zero()) r.terms_.push_back({terms_[i].index, v});
            ++i;
            ++j;
        }
    }
    return r;
}

SuperElement SuperElement::operator+(const SuperElement& o) const { return axpy(FieldScalar(1), o); }

SuperElement SuperElement::operator-(const SuperElement& o) const
{
    const AlgebraContext* ctx = common_context({this, &o});
    if (!ctx) return SuperElement();
    return axpy(ctx->field().neg(FieldScalar(1)), o);
}

SuperElement SuperElement::operator-() const { return scaled(std::int64_t(-1)); }

SuperElement SuperElement::scaled(FieldScalar c) const
{
    if (!ctx_ || c.is_zero()) return ctx_ ? SuperElement(*ctx_) : SuperElement();
    SuperElement r(*ctx_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.index, ctx_->field().mul(c, t.coeff)});
    return r;
}

SuperElement SuperElement::scaled(std::int64_t c) const
{
    if (!ctx_) return SuperElement();
    return scaled(ctx_->field().from_int(c));
}

bool operator==(const SuperElement& a, const SuperElement& b)
{
    if (a.terms_.size() != b.terms_.size()) return false;
    if (!a.terms_.empty() && a.ctx_ != b.ctx_) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].index != b.terms_[i].index || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
    return true;
}

std::string SuperElement::render() const
{
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& t : terms_) {
        if (!s.empty()) s += " + ";
        std::string m = ctx_->render_monomial(t.index);
        if (t.coeff.value == 1)
            s += m;
        else if (m == "1")
            s += std::to_string(t.coeff.value);
        else
            s += std::to_string(t.coeff.value) + "*" + m;
    }
    return s;
}

void TermAccumulator::add(const SuperElement& e, FieldScalar c)
{
    if (c.is_zero()) return;
    if (e.context() && e.context() != ctx_ && !e.is_zero())
        throw std::invalid_argument("operands belong to different algebra contexts");
    for (const auto& t : e.terms()) add(t.index, ctx_->field().mul(c, t.coeff));
}

SuperElement TermAccumulator::take()
{
    std::sort(raw_.begin(), raw_.end(), [](const MonoTerm& a, const MonoTerm& b) { return a.index < b.index; });
    SuperElement r(*ctx_);
    const PrimeField& f = ctx_->field();
    for (std::size_t i = 0; i < raw_.size();) {
        std::uint32_t idx = raw_[i].index;
        FieldScalar c(0);
        for (; i < raw_.size() && raw_[i].index == idx; ++i) c = f.add(c, raw_[i].coeff);
        if (!c.is_zero()) r.terms_.push_back({idx, c});
    }
    raw_.clear();
    return r;
}

// ---- operations

SuperElement multiply(const SuperElement& a, const SuperElement& b)
{
    const AlgebraContext* ctx = common_context({&a, &b});
    if (!ctx) return SuperElement();
    TermAccumulator acc(*ctx);
    const PrimeField& f = ctx->field();
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms())
            if (auto m = ctx->mul_mono(ta.index, tb.index))
                acc.add(m->index, f.mul(m->coeff, f.mul(ta.coeff, tb.coeff)));
    return acc.take();
}

SuperElement partial(std::uint32_t r, const SuperElement& a)
{
    const AlgebraContext* ctx = a.context();
    if (!ctx) return SuperElement();
    TermAccumulator acc(*ctx);
    for (const auto& t : a.terms())
        if (auto m = ctx->partial_mono(r, t.index))
            acc.add(m->index, ctx->field().mul(m->coeff, t.coeff));
    return acc.take();
}

Parity parity(const SuperElement& a)
{
    bool ev = false, od = false;
    for (const auto& t : a.terms()) (a.context()->parity(t.index) ? od : ev) = true;
    if (ev && od) return Parity::mixed;
    return od ? Parity::odd : Parity::even;
}

std::pair<SuperElement, SuperElement> split_by_parity(const SuperElement& a)
{
    if (!a.context()) return {};
    TermAccumulator ev(*a.context()), od(*a.context());
    for (const auto& t : a.terms()) (a.context()->parity(t.index) ? od : ev).add(t.index, t.coeff);
    return {ev.take(), od.take()};
}

MonomialDegrees degrees(const AlgebraContext& ctx, const Monomial& m)
{
    std::uint32_t idx = ctx.index_of(m);
    return {ctx.zdeg(idx), ctx.cdeg(idx)};
}

std::vector<Monomial> enumerate_basis(const AlgebraContext& ctx, const std::function<bool(const Monomial&)>& filter)
{
    std::vector<Monomial> out;
    for (std::uint32_t i = 0; i < ctx.dimension(); ++i) {
        Monomial m = ctx.monomial(i);
        if (!filter || filter(m)) out.push_back(std::move(m));
    }
    return out;
}

} // namespace skolab
