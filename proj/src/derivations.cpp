#include "skolab/derivations.hpp"

#include "skolab/formulas.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace skolab {

std::string BlockShift::render() const
{
    std::ostringstream os;
    os << "(" << dcdeg << ";";
    for (std::size_t i = 0; i < dw.size(); ++i) os << (i ? "," : "") << dw[i];
    os << ";" << dpar << ")";
    return os.str();
}

BlockShift ad_shift(const AlgebraContext& ctx, std::uint32_t block)
{
    const BlockKey& k = ctx.block_key(block);
    return BlockShift{k.cdeg - 2, k.w, (k.parity + 1) % 2};
}

std::optional<std::uint32_t> shifted_block(const AlgebraContext& ctx, std::uint32_t from, const BlockShift& s)
{
    BlockKey k = ctx.block_key(from);
    k.cdeg += s.dcdeg;
    k.parity = (k.parity + s.dpar) % 2;
    for (std::size_t i = 0; i < k.w.size(); ++i) k.w[i] += s.dw[i];
    return ctx.find_block(k);
}

namespace {

std::optional<std::uint32_t> single_block(const SuperElement& f)
{
    if (f.is_zero()) return std::nullopt;
    const AlgebraContext& ctx = *f.context();
    std::uint32_t b = ctx.block(f.terms().front().index);
    for (const auto& t : f.terms())
        if (ctx.block(t.index) != b) return std::nullopt;
    return b;
}

int lie_bit(const SuperElement& a)
{
    Parity p = lie_parity(a);
    if (p == Parity::mixed) throw std::logic_error("basis vector of mixed parity");
    return p == Parity::odd ? 1 : 0;
}

void check_images(const std::string& name, const Subspace& g, const std::vector<SuperElement>& basis,
                  const std::vector<SuperElement>& images)
{
    for (std::size_t k = 0; k < images.size(); ++k)
        if (!g.contains(images[k]))
            throw DerivationError(name + " does not map g into g",
                                  "basis vector " + basis[k].render() + " -> " + images[k].render());
}

} // namespace

SuperElement EndoMap::operator()(const SuperElement& v) const
{
    if (apply) return apply(v);
    SuperElement out(domain->context());
    for (const auto& [k, c] : domain->coordinates(v)) out = out.axpy(c, images[k]);
    return out;
}

EndoMap endo_from_images(std::string name, const Subspace& g, std::vector<SuperElement> images, int parity,
                         std::optional<BlockShift> shift)
{
    auto basis = g.basis();
    if (images.size() != basis.size()) throw std::invalid_argument("endo_from_images: one image per basis vector");
    check_images(name, g, basis, images);
    EndoMap m;
    m.name = std::move(name);
    m.domain = &g;
    m.images = std::move(images);
    m.parity = parity;
    m.shift = std::move(shift);
    return m;
}

EndoMap endo_from_operator(std::string name, const Subspace& g, std::function<SuperElement(const SuperElement&)> op,
                           int parity, std::optional<BlockShift> shift)
{
    auto basis = g.basis();
    std::vector<SuperElement> images;
    images.reserve(basis.size());
    for (const auto& b : basis) images.push_back(op(b));
    check_images(name, g, basis, images);
    EndoMap m;
    m.name = std::move(name);
    m.domain = &g;
    m.images = std::move(images);
    m.parity = parity;
    m.shift = std::move(shift);
    m.apply = std::move(op);
    return m;
}

EndoMap ad_endo(const Subspace& g, const SuperElement& f)
{
    Parity lp = lie_parity(f);
    if (lp == Parity::mixed) throw std::invalid_argument("ad_endo needs a parity homogeneous element");
    std::optional<BlockShift> shift;
    if (auto b = single_block(f)) shift = ad_shift(g.context(), *b);
    return endo_from_operator("ad " + f.render(), g, [f](const SuperElement& v) { return bracket(f, v); },
                              lp == Parity::odd ? 1 : 0, shift);
}

EndoMap partial_power_endo(const Subspace& g, std::uint32_t i, std::uint32_t d)
{
    const AlgebraContext& ctx = g.context();
    if (i < 1 || i > ctx.n()) throw std::out_of_range("partial_power_endo: i must lie in 1..n");
    std::uint32_t ti = ctx.params().t[i - 1];
    if (d < 1 || d + 1 > ti)
        throw std::invalid_argument("partial_power_endo: d must lie in 1..t_i-1 (t_" + std::to_string(i) + " = " +
                                    std::to_string(ti) + ")");
    std::uint32_t k = 1;
    for (std::uint32_t s = 0; s < d; ++s) k *= ctx.p();
    BlockShift shift{-int(k), std::vector<int>(ctx.n(), 0), 0};
    shift.dw[i - 1] = -int(k);
    auto op = [i, k](const SuperElement& a) {
        SuperElement r = a;
        for (std::uint32_t s = 0; s < k && !r.is_zero(); ++s) r = partial(i, r);
        return r;
    };
    return endo_from_operator("d" + std::to_string(i) + "^" + std::to_string(k), g, op, 0, shift);
}

EndoMap degree_endo(const Subspace& g)
{
    const AlgebraContext& ctx = g.context();
    auto op = [&ctx](const SuperElement& a) {
        TermAccumulator acc(ctx);
        for (const auto& t : a.terms()) acc.add(t.index, ctx.field().mul(t.coeff, ctx.field().from_int(ctx.gdeg(t.index))));
        return acc.take();
    };
    return endo_from_operator("deg", g, op, 0, BlockShift{0, std::vector<int>(ctx.n(), 0), 0});
}

// ---- derivation law

DerivationCheck is_superderivation(const EndoMap& phi, std::size_t samples, std::uint64_t seed, bool parallel)
{
    const Subspace& g = *phi.domain;
    auto basis = g.basis();
    const std::size_t B = basis.size();
    std::vector<int> par(B);
    for (std::size_t k = 0; k < B; ++k) par[k] = lie_bit(basis[k]);

    auto law = [&](std::size_t i, std::size_t j) {
        SuperElement lhs = phi(bracket(basis[i], basis[j]));
        SuperElement rhs = bracket(phi.images[i], basis[j]);
        SuperElement second = bracket(basis[i], phi.images[j]);
        rhs = (phi.parity & par[i]) ? rhs - second : rhs + second;
        return lhs == rhs;
    };
    auto describe = [&](std::size_t i, std::size_t j) {
        return phi.name + " fails on (" + basis[i].render() + ", " + basis[j].render() + ")";
    };

    DerivationCheck out;
    if (samples > 0) {
        std::mt19937_64 rng(seed);
        for (std::size_t s = 0; s < samples; ++s) {
            std::size_t i = rng() % B, j = rng() % B;
            ++out.pairs;
            if (!law(i, j)) {
                out.ok = false;
                out.witness = describe(i, j);
                return out;
            }
        }
        return out;
    }

    unsigned workers = parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1u;
    std::atomic<bool> failed{false};
    std::atomic<std::size_t> pairs{0};
    std::mutex mu;
    std::size_t wi = B, wj = B;
    auto run = [&](unsigned w) {
        std::size_t local = 0;
        for (std::size_t i = w; i < B && !failed.load(std::memory_order_relaxed); i += workers) {
            for (std::size_t j = i; j < B; ++j) {
                ++local;
                if (!law(i, j)) {
                    std::lock_guard<std::mutex> lock(mu);
                    if (i < wi) wi = i, wj = j;
                    failed = true;
                    break;
                }
            }
        }
        pairs += local;
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    out.pairs = pairs;
    if (failed) {
        out.ok = false;
        out.witness = describe(wi, wj);
    }
    return out;
}

// ---- rank modulo inner derivations

namespace {

SparseRow flatten(const AlgebraContext& ctx, const std::vector<SuperElement>& images)
{
    const std::uint64_t D = ctx.dimension();
    if (D * images.size() >= (1ull << 31)) throw std::length_error("Hom(g, O) coordinates exceed 2^31");
    SparseRow row;
    for (std::size_t j = 0; j < images.size(); ++j)
        for (const auto& t : images[j].terms()) row.push_back({std::uint32_t(j * D + t.index), t.coeff});
    return row;
}

} // namespace

std::size_t rank_modulo_inner(const Subspace& g, const std::vector<const EndoMap*>& maps)
{
    const AlgebraContext& ctx = g.context();
    auto basis = g.basis();
    std::map<BlockShift, std::vector<const EndoMap*>> groups;
    for (const EndoMap* m : maps) {
        if (!m->shift) throw std::invalid_argument("rank_modulo_inner: map without multidegree: " + m->name);
        groups[*m->shift].push_back(m);
    }
    std::size_t total = 0;
    for (const auto& [s, ms] : groups) {
        Echelon e(ctx.field());
        BlockKey key{s.dcdeg + 2, (s.dpar + 1) % 2, s.dw};
        if (auto blk = ctx.find_block(key)) {
            for (std::size_t k = 0; k < basis.size(); ++k) {
                if (g.block_of(k) != *blk) continue;
                std::vector<SuperElement> images;
                images.reserve(basis.size());
                for (const auto& b : basis) images.push_back(bracket(basis[k], b));
                e.insert(flatten(ctx, images));
            }
        }
        std::size_t base = e.rank();
        for (const EndoMap* m : ms) e.insert(flatten(ctx, m->images));
        total += e.rank() - base;
    }
    return total;
}

// ---- outer derivations

bool OuterReport::all_derivations() const
{
    return std::all_of(law.begin(), law.end(), [](const DerivationCheck& c) { return c.ok; });
}

namespace {

std::string tuple_str(const std::vector<std::uint32_t>& t)
{
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
    return s + ")";
}

struct Named {
    std::string label;
    SuperElement e;
    std::vector<std::uint32_t> full;  // indices i with alpha_i = pi_i
};

} // namespace

OuterReport outer_der_suite(const Instance& inst, const OuterOptions& opt)
{
    const AlgebraContext& ctx = inst.context();
    const Subspace& g = *inst.g;
    const PrimeField& f = ctx.field();
    const std::uint32_t n = ctx.n();
    const int delta = delta_prime(ctx.p(), n, ctx.params().lambda);

    std::vector<Named> xs, ys;
    for (std::uint32_t r : sigma_set(ctx, 2))
        for (const auto& tup : tuples_J(n, r)) xs.push_back({"X" + tuple_str(tup), build_X(ctx, tup), tup});
    SpanningSets spans = build_S_sets(ctx);
    for (const auto& le : spans.sets.at(SpanKind::S5)) {
        std::vector<std::uint32_t> full;
        for (std::uint32_t i = 1; i <= n; ++i)
            if (le.label.alpha[i - 1] == ctx.pi(i)) full.push_back(i);
        ys.push_back({le.label.render(), le.element, full});
    }
    std::vector<std::uint32_t> a1(n, 0);
    a1[0] = 1;
    SuperElement h1 = monomial_element(ctx, a1, {n + 1});
    SuperElement G = exceptional_G(ctx);

    OuterReport rep;
    auto add = [&](const std::function<EndoMap()>& make, const std::string& label) {
        try {
            EndoMap m = make();
            rep.law.push_back(is_superderivation(m, opt.samples, opt.seed, opt.parallel));
            rep.family.push_back(std::move(m));
        } catch (const DerivationError& e) {
            EndoMap stub;
            stub.name = label;
            rep.family.push_back(std::move(stub));
            rep.law.push_back(DerivationCheck{false, 0, std::string(e.what()) + ": " + e.witness});
        }
    };
    for (const auto& x : xs) add([&] { return ad_endo(g, x.e); }, "ad " + x.label);
    for (const auto& y : ys) add([&] { return ad_endo(g, y.e); }, "ad " + y.label);
    add([&] { return ad_endo(g, h1); }, "ad h1");
    for (std::uint32_t i = 1; i <= n; ++i)
        for (std::uint32_t d = 1; d < ctx.params().t[i - 1]; ++d)
            add([&] { return partial_power_endo(g, i, d); }, "d" + std::to_string(i) + "^p^" + std::to_string(d));
    if (delta) add([&] { return ad_endo(g, G); }, "ad G");

    std::vector<const EndoMap*> ok;
    for (std::size_t k = 0; k < rep.family.size(); ++k)
        if (rep.law[k].ok) ok.push_back(&rep.family[k]);
    rep.rank = rank_modulo_inner(g, ok);
    rep.formula = static_cast<std::size_t>(dim_der_out(ctx.p(), n, ctx.params().t, ctx.params().lambda));

    auto inside = [&](const SuperElement& v) { return g.contains(v); };
    auto counted = [&](const std::string& claim, std::size_t good, std::size_t total, std::string first_bad) {
        Relation r{claim, good == total, std::to_string(good) + "/" + std::to_string(total)};
        if (!first_bad.empty()) r.computed += "; first failure " + first_bad;
        rep.relations.push_back(std::move(r));
    };

    {
        std::size_t good = 0, total = 0;
        std::string bad;
        for (const auto* set : {&xs, &ys})
            for (const auto& a : *set) {
                ++total;
                if (inside(bracket(h1, a.e) - a.e))
                    ++good;
                else if (bad.empty())
                    bad = a.label;
            }
        counted("[h1, a] = a mod g for a in X and S5", good, total, bad);
    }
    if (delta) counted("[h1, G] = 2G mod g", inside(bracket(h1, G) - G.scaled(2)) ? 1 : 0, 1, "");
    {
        std::size_t good = 0, total = 0;
        std::string bad;
        for (const auto* set : {&xs, &ys})
            for (const auto& a : *set)
                for (const auto& b : *set) {
                    ++total;
                    if (inside(bracket(a.e, b.e)))
                        ++good;
                    else if (bad.empty())
                        bad = "[" + a.label + ", " + b.label + "]";
                }
        counted("[X, X] and [S5, S5] lie in g", good, total, bad);
    }
    if (delta) {
        std::size_t good = 0, total = 0;
        std::string bad;
        for (const auto* set : {&xs, &ys})
            for (const auto& a : *set) {
                ++total;
                if (inside(bracket(a.e, G)))
                    ++good;
                else if (bad.empty())
                    bad = a.label;
            }
        counted("[a, G] lies in g for a in X and S5", good, total, bad);
    }
    for (std::uint32_t i = 1; i <= n; ++i)
        for (std::uint32_t d = 1; d < ctx.params().t[i - 1]; ++d) {
            std::uint32_t k = 1;
            for (std::uint32_t s = 0; s < d; ++s) k *= ctx.p();
            std::size_t good = 0, total = 0;
            std::string bad;
            std::vector<const SuperElement*> all{&h1};
            for (const auto* set : {&xs, &ys})
                for (const auto& a : *set) all.push_back(&a.e);
            if (delta) all.push_back(&G);
            for (const SuperElement* a : all) {
                SuperElement r = *a;
                for (std::uint32_t s = 0; s < k && !r.is_zero(); ++s) r = partial(i, r);
                ++total;
                if (inside(r))
                    ++good;
                else if (bad.empty())
                    bad = a->render();
            }
            counted("d" + std::to_string(i) + "^" + std::to_string(k) + " maps the outer family into g", good, total,
                    bad);
        }

    // X/S5 pairing. Nonzero modulo g exactly when delta' = 1 and the index
    // tuple of X is the complement of the full indices of the S5 element.
    // Signs: i_{r+1..n} is read as the complement of (i_1..i_r), ascending.
    {
        SuperElement rg = g.reduce(G);
        std::size_t good = 0, total = 0, nonzero = 0, printed_ok = 0, first_ok = 0, skew_ok = 0;
        std::string bad, coeffs, printed_bad, skew_bad;
        auto as_int = [&](FieldScalar c) {
            return c.value > ctx.p() / 2 ? std::int64_t(c.value) - ctx.p() : std::int64_t(c.value);
        };
        for (const auto& x : xs)
            for (const auto& y : ys) {
                std::vector<std::uint32_t> comp;
                for (std::uint32_t i = 1; i <= n; ++i)
                    if (!std::binary_search(y.full.begin(), y.full.end(), i)) comp.push_back(i);
                bool match = delta == 1 && comp == x.full;
                SuperElement xy = bracket(x.e, y.e);
                SuperElement r = g.reduce(xy);
                ++total;
                std::uint32_t rr = std::uint32_t(x.full.size());
                int skew = (rr * (n - rr + 1)) % 2 ? -1 : 1;
                if (g.contains(xy - bracket(y.e, x.e).scaled(skew)))
                    ++skew_ok;
                else if (skew_bad.empty())
                    skew_bad = "[" + x.label + ", " + y.label + "]";
                bool pass = false;
                if (!match) {
                    pass = r.is_zero();
                } else if (!r.is_zero() && !rg.is_zero()) {
                    std::uint32_t lead = *rg.leading_index();
                    FieldScalar c = f.div(r.coefficient(lead), rg.coefficient(lead));
                    if (!c.is_zero() && r == rg.scaled(c)) {
                        pass = true;
                        ++nonzero;
                        std::int64_t sc = as_int(c);
                        coeffs += (coeffs.empty() ? "" : ", ") + x.label + "*" + y.label + " -> " +
                                  std::to_string(sc) + "G";
                        // complement of X's tuple = the S5 full indices
                        std::vector<std::int64_t> printed(y.full.begin(), y.full.end()), with_first = printed;
                        for (std::size_t a = 0; a < x.full.size(); ++a) {
                            with_first.push_back(x.full[a]);
                            if (a > 0) printed.push_back(x.full[a]);
                        }
                        if (sgn(printed) == sc)
                            ++printed_ok;
                        else if (printed_bad.empty())
                            printed_bad = x.label + " (printed sign " + std::to_string(sgn(printed)) + ", computed " +
                                          std::to_string(sc) + ")";
                        if (sgn(with_first) == sc) ++first_ok;
                    }
                }
                if (pass)
                    ++good;
                else if (bad.empty())
                    bad = "[" + x.label + ", " + y.label + "]";
            }
        Relation r{"[X, Y] is a nonzero multiple of G mod g exactly for complementary pairs when delta' = 1, else in g",
                   good == total, std::to_string(good) + "/" + std::to_string(total) + " (" +
                                      std::to_string(nonzero) + " nonzero)"};
        if (!coeffs.empty()) r.computed += "; " + coeffs;
        if (!bad.empty()) r.computed += "; first failure " + bad;
        rep.relations.push_back(std::move(r));
        counted("[X, Y] = (-1)^{r(n-r+1)} [Y, X] mod g", skew_ok, total, skew_bad);
        if (nonzero > 0) {
            counted("pairing coefficient = sgn(i'_{r+1},...,i'_n,i'_2,...,i'_r)", printed_ok, nonzero, printed_bad);
            counted("pairing coefficient = sgn(i'_{r+1},...,i'_n,i'_1,...,i'_r)", first_ok, nonzero, "");
        }
    }
    return rep;
}

// ---- normalizer and centralizer

NormalizerReport normalizer_centralizer(const Instance& inst, std::size_t samples, std::uint64_t seed)
{
    const AlgebraContext& ctx = inst.context();
    const Subspace& g = *inst.g;
    const auto& gens = inst.generators;
    const std::uint64_t D = ctx.dimension();
    if (D * gens.size() >= (1ull << 31)) throw std::length_error("normalizer: column space too large");

    auto stacked = [&](std::uint32_t idx, bool modulo_g) {
        SparseRow row;
        SuperElement f = SuperElement::basis(ctx, idx);
        for (std::size_t k = 0; k < gens.size(); ++k) {
            SuperElement r = bracket(f, gens[k]);
            if (modulo_g) r = g.reduce(r);
            for (const auto& t : r.terms()) row.push_back({std::uint32_t(k * D + t.index), t.coeff});
        }
        return row;
    };
    Subspace nor = kernel_by_block(ctx, [&](std::uint32_t idx) { return stacked(idx, true); });
    Subspace cen = kernel_by_block(ctx, [&](std::uint32_t idx) { return stacked(idx, false); });

    NormalizerReport rep;
    rep.nor_dim = nor.dim();
    rep.cen_dim = cen.dim();
    rep.g2_dim = inst.g2->dim();
    rep.g2_inside = nor.includes(*inst.g2);
    rep.h_inside = true;
    for (std::uint32_t i = 1; i <= ctx.n(); ++i) {
        std::vector<std::uint32_t> a(ctx.n(), 0);
        a[i - 1] = 1;
        if (!nor.contains(monomial_element(ctx, a, {i + ctx.n()}))) rep.h_inside = false;
    }
    auto nb = nor.basis();
    auto gb = g.basis();
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < samples && !nb.empty() && !gb.empty(); ++s) {
        const SuperElement& a = nb[rng() % nb.size()];
        const SuperElement& b = gb[rng() % gb.size()];
        ++rep.sampled;
        if (g.contains(bracket(a, b))) ++rep.sampled_ok;
    }
    rep.nor = std::move(nor);
    return rep;
}

// ---- graded derivations

namespace {

// [F, v] or [v, F] for a tagged row F: columns D + u*D + m carry the
// component of unknown u at monomial m.
SparseRow tagged_bracket(const AlgebraContext& ctx, const SparseRow& tag, const SuperElement& v, bool tag_left)
{
    const std::uint64_t D = ctx.dimension();
    SparseRow out;
    std::size_t a = 0;
    while (a < tag.size()) {
        std::uint64_t u = (tag[a].index - D) / D;
        std::size_t b = a;
        TermAccumulator acc(ctx);
        while (b < tag.size() && (tag[b].index - D) / D == u) {
            std::uint32_t m = std::uint32_t((tag[b].index - D) % D);
            for (const auto& t : v.terms()) {
                FieldScalar c = ctx.field().mul(tag[b].coeff, t.coeff);
                if (tag_left)
                    bracket_monomials(ctx, m, t.index, c, acc);
                else
                    bracket_monomials(ctx, t.index, m, c, acc);
            }
            ++b;
        }
        SuperElement r = acc.take();
        for (const auto& t : r.terms()) out.push_back({std::uint32_t(D + u * D + t.index), t.coeff});
        a = b;
    }
    return out;
}

std::size_t solve_piece(const Instance& inst, const std::vector<SuperElement>& basis,
                        const std::vector<std::uint32_t>& basis_block, const std::vector<std::uint32_t>& gen_block,
                        const BlockShift& s)
{
    const AlgebraContext& ctx = inst.context();
    const PrimeField& f = ctx.field();
    const auto& gens = inst.generators;
    const std::uint64_t D = ctx.dimension();

    std::vector<SparseRow> gen_tag(gens.size());
    std::uint32_t U = 0;
    for (std::size_t k = 0; k < gens.size(); ++k) {
        auto target = shifted_block(ctx, gen_block[k], s);
        if (!target) continue;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (basis_block[j] != *target) continue;
            for (const auto& t : basis[j].terms()) gen_tag[k].push_back({std::uint32_t(D + U * D + t.index), t.coeff});
            ++U;
        }
    }
    if (U == 0) return 0;
    if (D * (U + 1) >= (1ull << 32)) throw std::length_error("graded_der_dimension: too many unknowns");

    std::vector<int> gen_par(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) gen_par[k] = lie_bit(gens[k]);

    Echelon comb(f), eqs(f);
    std::vector<std::pair<SuperElement, SparseRow>> items;
    auto add_item = [&](SuperElement v, SparseRow tag) {
        SparseRow row = v.terms();
        row.insert(row.end(), tag.begin(), tag.end());
        SparseRow res = comb.reduce(row);
        if (res.empty()) return;
        if (res.front().index < D) {
            comb.insert_reduced(std::move(res));
            items.emplace_back(std::move(v), std::move(tag));
            return;
        }
        std::map<std::uint32_t, SparseRow> by_mono;
        for (const auto& t : res) {
            std::uint32_t u = std::uint32_t((t.index - D) / D), m = std::uint32_t((t.index - D) % D);
            by_mono[m].push_back({u, t.coeff});
        }
        for (auto& [m, r] : by_mono) eqs.insert(r);
    };

    for (std::size_t k = 0; k < gens.size(); ++k) add_item(gens[k], gen_tag[k]);
    for (std::size_t it = 0; it < items.size() && eqs.rank() < U; ++it) {
        const SuperElement v = items[it].first;
        const SparseRow vtag = items[it].second;
        for (std::size_t k = 0; k < gens.size() && eqs.rank() < U; ++k) {
            SuperElement w = bracket(gens[k], v);
            SparseRow first = tagged_bracket(ctx, gen_tag[k], v, true);
            SparseRow second = tagged_bracket(ctx, vtag, gens[k], false);
            FieldScalar sign = (s.dpar & gen_par[k]) ? f.neg(FieldScalar(1)) : FieldScalar(1);
            add_item(std::move(w), sparse_axpy(f, first, sign, second));
        }
    }
    return U - eqs.rank();
}

} // namespace

GradedDerReport graded_der_dimension(const Instance& inst, int shift)
{
    const AlgebraContext& ctx = inst.context();
    const Subspace& g = *inst.g;
    auto basis = g.basis();
    std::vector<std::uint32_t> basis_block(basis.size());
    std::set<std::uint32_t> g_blocks;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        basis_block[j] = g.block_of(j);
        g_blocks.insert(basis_block[j]);
    }
    std::vector<std::uint32_t> gen_block;
    for (const auto& y : inst.generators) {
        auto b = single_block(y);
        if (!b) throw std::logic_error("graded_der_dimension: generator is not homogeneous");
        gen_block.push_back(*b);
    }

    std::set<BlockShift> cands;
    for (std::uint32_t gb : gen_block) {
        const BlockKey& k0 = ctx.block_key(gb);
        for (std::uint32_t b : g_blocks) {
            const BlockKey& k1 = ctx.block_key(b);
            if (k1.cdeg - k0.cdeg != shift) continue;
            BlockShift s{shift, std::vector<int>(ctx.n()), ((k1.parity - k0.parity) % 2 + 2) % 2};
            for (std::size_t i = 0; i < ctx.n(); ++i) s.dw[i] = k1.w[i] - k0.w[i];
            cands.insert(s);
        }
    }

    GradedDerReport rep;
    rep.shift = shift;
    for (const auto& s : cands) {
        ++rep.multidegrees;
        std::size_t d = solve_piece(inst, basis, basis_block, gen_block, s);
        if (d) rep.pieces.emplace_back(s, d);
        rep.dim += d;
    }
    return rep;
}

} // namespace skolab
