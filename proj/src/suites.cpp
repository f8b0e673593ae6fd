#include "skolab/suites.hpp"

#include "skolab/derivations.hpp"
#include "skolab/formulas.hpp"
#include "skolab/instance.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

namespace skolab {

namespace {

using json = nlohmann::ordered_json;

const std::vector<std::string> kSuites{"algebra-axioms", "bracket-identities", "spanning", "derived-series",
                                       "simplicity", "normalizer", "derivations", "formulas", "comparison"};

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) {
        cur.erase(0, cur.find_first_not_of(" \t"));
        cur.erase(cur.find_last_not_of(" \t") + 1);
        out.push_back(cur);
    }
    return out;
}

std::uint64_t parse_uint(const std::string& s, const std::string& what)
{
    if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw ConfigError(what + ": expected a non-negative integer, got '" + s + "'");
    return std::stoull(s);
}

std::string join(const std::vector<std::uint32_t>& v, const char* sep = ",")
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

std::string ratio(std::size_t a, std::size_t b) { return std::to_string(a) + "/" + std::to_string(b); }

std::string big(const BigInt& v) { return v.str(); }

// ---- recording

struct Outcome {
    std::string expected;
    std::string computed;
    bool pass = false;
};

Outcome counted(std::size_t good, std::size_t total, const std::string& witness = {})
{
    Outcome o{ratio(total, total), ratio(good, total), good == total};
    if (!witness.empty()) o.computed += "; first failure " + witness;
    return o;
}

Outcome equal(const std::string& expected, const std::string& computed)
{
    return Outcome{expected, computed, expected == computed};
}

class Recorder {
public:
    explicit Recorder(SuiteResult& s) : s_(s) {}

    void check(std::string claim, std::string anchor, const std::function<Outcome()>& fn)
    {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o = fn();
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        s_.checks.push_back(
            CheckRecord{std::move(claim), std::move(anchor), std::move(o.expected), std::move(o.computed), o.pass, ms});
    }

private:
    SuiteResult& s_;
};

// ---- deterministic sampling

class Sampler {
public:
    Sampler(std::uint64_t seed, std::uint32_t lambda, std::size_t suite)
    {
        std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32), lambda, std::uint32_t(suite)};
        eng_.seed(seq);
    }

    std::uint64_t below(std::uint64_t k) { return eng_() % k; }
    std::uint64_t raw() { return eng_(); }

    // Random element with `terms` basis monomials of O-parity `par` (-1: any).
    SuperElement element(const AlgebraContext& ctx, int par, std::size_t terms, bool with_eps = true)
    {
        TermAccumulator acc(ctx);
        std::size_t got = 0;
        while (got < terms) {
            auto idx = std::uint32_t(below(ctx.dimension()));
            if (par >= 0 && ctx.parity(idx) != par) continue;
            if (!with_eps && ctx.monomial(idx).eps) continue;
            acc.add(idx, FieldScalar(std::uint32_t(1 + below(ctx.p() - 1))));
            ++got;
        }
        SuperElement e = acc.take();
        return e.is_zero() ? element(ctx, par, terms, with_eps) : e;
    }

    SuperElement member(const std::vector<SuperElement>& basis, const PrimeField& f, std::size_t terms)
    {
        for (;;) {
            SuperElement v = basis[below(basis.size())].scaled(FieldScalar(std::uint32_t(1 + below(f.modulus() - 1))));
            for (std::size_t k = 1; k < terms; ++k)
                v = v.axpy(FieldScalar(std::uint32_t(1 + below(f.modulus() - 1))), basis[below(basis.size())]);
            if (!v.is_zero()) return v;
        }
    }

private:
    std::mt19937_64 eng_;
};

int sign_of(int a, int b) { return (a & b & 1) ? -1 : 1; }

// ---- per-lambda state

struct LambdaState {
    const RunConfig& cfg;
    std::uint32_t lambda;
    std::shared_ptr<const Instance> inst;
    std::unique_ptr<AlgebraContext> light;

    // Context alone, without the derived series.
    const AlgebraContext& context()
    {
        if (inst) return inst->context();
        if (!light) light = std::make_unique<AlgebraContext>(AlgebraParams{cfg.p, cfg.n, cfg.t, lambda});
        return *light;
    }

    const Instance& instance()
    {
        if (!inst) {
            ClosureOptions opt;
            opt.parallel = cfg.parallel;
            opt.seed = cfg.seed;
            inst = build_instance(AlgebraParams{cfg.p, cfg.n, cfg.t, lambda}, opt);
        }
        return *inst;
    }
};

std::uint32_t sum_binom(std::uint32_t n, const std::vector<std::uint32_t>& rs)
{
    std::uint32_t s = 0;
    for (std::uint32_t r : rs) s += static_cast<std::uint32_t>(binomial(n, r));
    return s;
}

bool exceptional_case(const AlgebraContext& ctx)
{
    return delta_prime(ctx.p(), ctx.n(), ctx.params().lambda) == 1 && sigma_set(ctx, 0).empty();
}

// ---- suites

void suite_axioms(LambdaState& st, Sampler& rng, Recorder& rec)
{
    const AlgebraContext& ctx = st.context();
    const std::uint32_t n = ctx.n();

    rec.check("x(yz) = (xy)z in O", "divided power superalgebra", [&] {
        std::size_t ok = 0, total = 200;
        std::string bad;
        for (std::size_t s = 0; s < total; ++s) {
            SuperElement x = rng.element(ctx, -1, 3), y = rng.element(ctx, -1, 3), z = rng.element(ctx, -1, 3);
            if (multiply(x, multiply(y, z)) == multiply(multiply(x, y), z))
                ++ok;
            else if (bad.empty())
                bad = x.render() + " | " + y.render() + " | " + z.render();
        }
        return counted(ok, total, bad);
    });
    rec.check("xy = (-1)^{|x||y|} yx in O", "divided power superalgebra", [&] {
        std::size_t ok = 0, total = 200;
        std::string bad;
        for (std::size_t s = 0; s < total; ++s) {
            int px = int(rng.below(2)), py = int(rng.below(2));
            SuperElement x = rng.element(ctx, px, 3), y = rng.element(ctx, py, 3);
            if (multiply(x, y) == multiply(y, x).scaled(std::int64_t(sign_of(px, py))))
                ++ok;
            else if (bad.empty())
                bad = x.render() + " | " + y.render();
        }
        return counted(ok, total, bad);
    });
    rec.check("d_r(ab) = d_r(a) b + (-1)^{|x_r||a|} a d_r(b) for every r in 1..2n+1", "superderivation law", [&] {
        std::size_t ok = 0, total = 0;
        std::string bad;
        for (std::size_t s = 0; s < 200; ++s) {
            int pa = int(rng.below(2));
            SuperElement a = rng.element(ctx, pa, 3), b = rng.element(ctx, -1, 3);
            SuperElement ab = multiply(a, b);
            for (std::uint32_t r = 1; r <= 2 * n + 1; ++r) {
                ++total;
                SuperElement rhs = multiply(partial(r, a), b) +
                                   multiply(a, partial(r, b)).scaled(std::int64_t(sign_of(mu(n, r), pa)));
                if (partial(r, ab) == rhs)
                    ++ok;
                else if (bad.empty())
                    bad = "r=" + std::to_string(r) + " a=" + a.render() + " b=" + b.render();
            }
        }
        return counted(ok, total, bad);
    });
    rec.check("D(a)D(b) - (-1)^{|a||b|} D(b)D(a) = D([a,b]) on probes, Lie parities", "operator identity of D_KO", [&] {
        std::size_t ok = 0, total = 0;
        std::string bad;
        for (std::size_t s = 0; s < 100; ++s) {
            int pa = int(rng.below(2)), pb = int(rng.below(2));
            SuperElement a = rng.element(ctx, pa, 2), b = rng.element(ctx, pb, 2);
            int sg = sign_of(pa + 1, pb + 1);
            SuperElement ab = bracket(a, b);
            for (std::size_t k = 0; k < 10; ++k) {
                SuperElement c = rng.element(ctx, -1, 2);
                ++total;
                SuperElement lhs = d_ko_apply(a, d_ko_apply(b, c)) - d_ko_apply(b, d_ko_apply(a, c)).scaled(std::int64_t(sg));
                SuperElement rhs = ab.is_zero() ? SuperElement(ctx) : d_ko_apply(ab, c);
                if (lhs == rhs)
                    ++ok;
                else if (bad.empty())
                    bad = "a=" + a.render() + " b=" + b.render() + " c=" + c.render();
            }
        }
        return counted(ok, total, bad);
    });
    rec.check("[a,b] = -(-1)^{|a||b|}[b,a], Lie parities", "KO bracket", [&] {
        std::size_t ok = 0, total = 200;
        std::string bad;
        for (std::size_t s = 0; s < total; ++s) {
            int pa = int(rng.below(2)), pb = int(rng.below(2));
            SuperElement a = rng.element(ctx, pa, 3), b = rng.element(ctx, pb, 3);
            if (bracket(a, b) == -bracket(b, a).scaled(std::int64_t(sign_of(pa + 1, pb + 1))))
                ++ok;
            else if (bad.empty())
                bad = a.render() + " | " + b.render();
        }
        return counted(ok, total, bad);
    });
    rec.check("[a,[b,c]] = [[a,b],c] + (-1)^{|a||b|}[b,[a,c]], Lie parities", "KO bracket", [&] {
        std::size_t ok = 0, total = 200;
        std::string bad;
        for (std::size_t s = 0; s < total; ++s) {
            int pa = int(rng.below(2)), pb = int(rng.below(2)), pc = int(rng.below(2));
            SuperElement a = rng.element(ctx, pa, 2), b = rng.element(ctx, pb, 2), c = rng.element(ctx, pc, 2);
            SuperElement lhs = bracket(a, bracket(b, c));
            SuperElement rhs =
                bracket(bracket(a, b), c) + bracket(b, bracket(a, c)).scaled(std::int64_t(sign_of(pa + 1, pb + 1)));
            if (lhs == rhs)
                ++ok;
            else if (bad.empty())
                bad = a.render() + " | " + b.render() + " | " + c.render();
        }
        return counted(ok, total, bad);
    });
    rec.check("[O_i, O_j] lies in O_{i+j} for the Z-grading", "Z-grading", [&] {
        std::size_t ok = 0, total = 200;
        std::string bad;
        for (std::size_t s = 0; s < total; ++s) {
            auto ia = std::uint32_t(rng.below(ctx.dimension())), ib = std::uint32_t(rng.below(ctx.dimension()));
            SuperElement r = bracket(SuperElement::basis(ctx, ia), SuperElement::basis(ctx, ib));
            int want = ctx.gdeg(ia) + ctx.gdeg(ib);
            bool good = std::all_of(r.terms().begin(), r.terms().end(),
                                    [&](const MonoTerm& t) { return ctx.gdeg(t.index) == want; });
            if (good)
                ++ok;
            else if (bad.empty())
                bad = ctx.render_monomial(ia) + " | " + ctx.render_monomial(ib);
        }
        return counted(ok, total, bad);
    });
}

void suite_identities(LambdaState& st, Recorder& rec)
{
    const AlgebraContext& ctx = st.context();
    const std::uint32_t n = ctx.n();
    for (const IdentityResult& r : check_bracket_identities(ctx)) {
        rec.check("identity " + r.name, "spanning-set bracket identities", [&] {
            Outcome o = counted(r.matched, r.admissible, r.witness);
            if (r.admissible == 0) o.computed += " (no admissible index choice)";
            if (!r.note.empty()) o.computed += "; " + r.note;
            return o;
        });
    }
    rec.check("splitting identity: [x^(a1)x^u1, x^(a2)x^u2 x_{2n+1}] term gamma with u = u1 u2, one global sign",
              "spanning-set bracket identities", [&] {
                  SplittingResult s = check_splitting_identity(ctx);
                  Outcome o;
                  o.expected = ratio(s.admissible, s.admissible) + ", single global sign";
                  o.computed = ratio(s.matched, s.admissible) + ", +gamma " + std::to_string(s.sign_plus) +
                               ", -gamma " + std::to_string(s.sign_minus) + ", gamma=0 " +
                               std::to_string(s.gamma_zero) + ", global sign " + std::to_string(s.global_sign);
                  if (!s.witness.empty()) o.computed += "; first failure " + s.witness;
                  o.pass = s.matched == s.admissible && s.global_sign != 0;
                  return o;
              });

    // [x_i x_{i'}, f] on basis monomials f = f_0 x_{2n+1} or f_1
    auto h_check = [&](bool printed) {
        std::size_t ok = 0, total = 0;
        std::string bad;
        for (std::uint32_t i = 1; i <= n; ++i) {
            std::vector<std::uint32_t> a(n, 0);
            a[i - 1] = 1;
            SuperElement h = monomial_element(ctx, a, {i + n});
            for (std::uint32_t idx = 0; idx < ctx.dimension(); ++idx) {
                Monomial m = ctx.monomial(idx);
                std::int64_t al = m.alpha[i - 1];
                std::int64_t di = al > 0 ? 1 : 0;
                std::int64_t dip = std::count(m.u.begin(), m.u.end(), i + n) ? 1 : 0;
                std::int64_t c = dip - al;
                if (printed) c = m.eps ? dip - di * al : dip - di * (al + dip);
                SuperElement fm = SuperElement::basis(ctx, idx);
                ++total;
                if (bracket(h, fm) == fm.scaled(c))
                    ++ok;
                else if (bad.empty())
                    bad = "i=" + std::to_string(i) + " f=" + fm.render();
            }
        }
        return counted(ok, total, bad);
    };
    rec.check("[x_i x_{i'}, f] = d_{i'f0} f0 x_{2n+1} - d_{if0} a_i f0 x_{2n+1} + d_{i'f1} f1 - d_{if1}(a_i + d_{i'f1}) f1 "
              "on every basis monomial",
              "normalizer lemma", [&] { return h_check(true); });
    rec.check("[x_i x_{i'}, f] = (d_{i'f} - a_i) f on every basis monomial", "normalizer lemma",
              [&] { return h_check(false); });
}

void suite_spanning(LambdaState& st, Recorder& rec)
{
    const Instance& inst = st.instance();
    const AlgebraContext& ctx = inst.context();
    SpanningSets spans = build_S_sets(ctx);
    std::vector<SuperElement> all;
    std::string sizes;
    for (const auto& [k, v] : spans.sets) {
        sizes += std::string(sizes.empty() ? "" : ", ") + span_kind_name(k) + "=" + std::to_string(v.size());
        for (const auto& le : v) all.push_back(le.element);
    }
    all.push_back(spans.unit.element);

    rec.check("div_lambda vanishes on S1..S5 and 1", "spanning theorem", [&] {
        std::size_t ok = 0;
        std::string bad;
        for (const auto& e : all)
            if (div_lambda(e).is_zero())
                ++ok;
            else if (bad.empty())
                bad = e.render();
        return counted(ok, all.size(), bad);
    });
    rec.check("rank(S1..S5 ∪ {1}) == nullity(div_lambda)", "spanning theorem", [&] {
        Outcome o = equal(std::to_string(inst.g2->dim()), std::to_string(rank_of(ctx, all)));
        o.computed += " (" + sizes + ")";
        return o;
    });
    rec.check("span S_i ∩ span(union of S_j, j != i) = 0 for i = 1..5", "spanning theorem", [&] {
        std::vector<std::vector<SuperElement>> parts;
        std::vector<SuperElement> union_all;
        for (const auto& [k, v] : spans.sets) {
            parts.emplace_back();
            for (const auto& le : v) parts.back().push_back(le.element);
            union_all.insert(union_all.end(), parts.back().begin(), parts.back().end());
        }
        const std::size_t r_all = rank_of(ctx, union_all);
        std::size_t ok = 0;
        std::string bad;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            std::vector<SuperElement> rest;
            for (std::size_t j = 0; j < parts.size(); ++j)
                if (j != i) rest.insert(rest.end(), parts[j].begin(), parts[j].end());
            std::size_t meet = rank_of(ctx, parts[i]) + rank_of(ctx, rest) - r_all;
            if (meet == 0)
                ++ok;
            else if (bad.empty())
                bad = "S" + std::to_string(i + 1) + " meets the others in dim " + std::to_string(meet);
        }
        return counted(ok, parts.size(), bad);
    });
    rec.check("|S5| = sum over r in S_0 of C(n,r)", "counting identity", [&] {
        return equal(std::to_string(sum_binom(ctx.n(), sigma_set(ctx, 0))),
                     std::to_string(spans.sets.at(SpanKind::S5).size()));
    });
}

void suite_derived(LambdaState& st, Sampler& rng, const RunConfig& cfg, Recorder& rec)
{
    const Instance& inst = st.instance();
    const AlgebraContext& ctx = inst.context();
    const std::uint32_t n = ctx.n();
    const int delta = delta_prime(ctx.p(), n, st.lambda);
    const bool case2 = exceptional_case(ctx);
    auto g2b = inst.g2->basis();

    rec.check("[ker div_lambda, ker div_lambda] lies in ker div_lambda", "divergence", [&] {
        std::size_t ok = 0, total = 200;
        std::string bad;
        for (std::size_t s = 0; s < total; ++s) {
            const SuperElement& a = g2b[rng.below(g2b.size())];
            const SuperElement& b = g2b[rng.below(g2b.size())];
            if (div_lambda(bracket(a, b)).is_zero())
                ++ok;
            else if (bad.empty())
                bad = a.render() + " | " + b.render();
        }
        return counted(ok, total, bad);
    });

    SpanningSets spans = build_S_sets(ctx);
    std::vector<SuperElement> xs;
    for (std::uint32_t r : sigma_set(ctx, 2))
        for (const auto& tup : tuples_J(n, r)) xs.push_back(build_X(ctx, tup));
    const auto& s5 = spans.sets.at(SpanKind::S5);
    const std::size_t extra = s5.size() + xs.size() + (case2 ? 1 : 0);

    rec.check("dim g'' - dim g' = |S5| + sum over r in S_2 of C(n,r) (+1 when n lambda + 1 = 0 and S_0 is empty)",
              "derived series decomposition", [&] {
                  Outcome o = equal(std::to_string(extra), std::to_string(inst.g2->dim() - inst.g1->dim()));
                  o.computed += " (dim g''=" + std::to_string(inst.g2->dim()) +
                                ", dim g'=" + std::to_string(inst.g1->dim()) + ")";
                  return o;
              });
    rec.check("g'' = g' + span(S5, X(J(r)) for r in S_2, G in the exceptional case) as a direct sum",
              "derived series decomposition", [&] {
                  std::vector<SuperElement> vs = inst.g1->basis();
                  for (const auto& le : s5) vs.push_back(le.element);
                  for (const auto& x : xs) vs.push_back(x);
                  if (case2) vs.push_back(exceptional_G(ctx));
                  std::size_t r = rank_of(ctx, vs);
                  bool inside = true;
                  for (std::size_t k = inst.g1->dim(); k < vs.size(); ++k) inside = inside && inst.g2->contains(vs[k]);
                  Outcome o;
                  o.expected = "rank " + std::to_string(inst.g2->dim()) + " from " + std::to_string(vs.size()) +
                               " vectors inside g''";
                  o.computed = "rank " + std::to_string(r) + " from " + std::to_string(vs.size()) + " vectors, " +
                               (inside ? "inside" : "not inside") + " g''";
                  o.pass = inside && r == vs.size() && r == inst.g2->dim();
                  return o;
              });
    rec.check("dim g' - dim g = delta'(n lambda, -1)", "derived series decomposition", [&] {
        return equal(std::to_string(delta), std::to_string(inst.g1->dim() - inst.g->dim()));
    });
    rec.check("g' = g + delta' F G", "derived series decomposition", [&] {
        SuperElement G = exceptional_G(ctx);
        Outcome o;
        if (delta) {
            bool in1 = inst.g1->contains(G), in0 = inst.g->contains(G);
            o.expected = "G in g', G not in g, dim g' = dim g + 1";
            o.computed = std::string("G ") + (in1 ? "in" : "not in") + " g', " + (in0 ? "in" : "not in") +
                         " g, dim g' - dim g = " + std::to_string(inst.g1->dim() - inst.g->dim());
            o.pass = in1 && !in0 && inst.g1->dim() == inst.g->dim() + 1;
        } else {
            o.expected = "g' = g";
            bool same = inst.g1->includes(*inst.g) && inst.g->includes(*inst.g1);
            o.computed = same ? "g' = g" : "g' != g";
            o.pass = same;
        }
        return o;
    });
    rec.check("[g, g] = g", "simplicity theorem", [&] {
        ClosureOptions opt;
        opt.parallel = cfg.parallel;
        opt.seed = cfg.seed;
        Subspace d = derived_subalgebra(*inst.g, opt);
        return equal(std::to_string(inst.g->dim()), std::to_string(d.dim()));
    });
    rec.check("g is generated by T ∪ S ∪ {1}", "generator theorem", [&] {
        Subspace c = generated_closure(ctx, inst.generators);
        Outcome o;
        o.expected = "closure = g (dim " + std::to_string(inst.g->dim()) + ")";
        bool same = inst.g->includes(c) && c.dim() == inst.g->dim();
        o.computed = std::string(same ? "closure = g" : "closure != g") + " (dim " + std::to_string(c.dim()) + ", " +
                     std::to_string(inst.generators.size()) + " generators)";
        o.pass = same;
        return o;
    });
}

void suite_simplicity(LambdaState& st, Sampler& rng, Recorder& rec)
{
    const Instance& inst = st.instance();
    const AlgebraContext& ctx = inst.context();
    auto gb = inst.g->basis();
    rec.check("the ideal generated by any nonzero v in g is g (20 random v)", "simplicity theorem", [&] {
        std::size_t ok = 0, total = 20;
        std::string bad;
        for (std::size_t s = 0; s < total; ++s) {
            SuperElement v = rng.member(gb, ctx.field(), 1 + rng.below(3));
            Subspace id = ideal_closure(v, *inst.g, &inst.generators);
            if (id.dim() == inst.g->dim())
                ++ok;
            else if (bad.empty())
                bad = v.render() + " -> dim " + std::to_string(id.dim());
        }
        return counted(ok, total, bad);
    });
    rec.check("the ideal generated by 1 is g", "simplicity theorem", [&] {
        Subspace id = ideal_closure(SuperElement::unit(ctx), *inst.g, &inst.generators);
        return equal(std::to_string(inst.g->dim()), std::to_string(id.dim()));
    });
}

void suite_normalizer(LambdaState& st, const RunConfig& cfg, Recorder& rec)
{
    const Instance& inst = st.instance();
    const AlgebraContext& ctx = inst.context();
    const std::uint32_t n = ctx.n();
    NormalizerReport nr = normalizer_centralizer(inst, 64, cfg.seed);

    std::vector<SuperElement> span = inst.g2->basis();
    for (std::uint32_t i = 1; i <= n; ++i) {
        std::vector<std::uint32_t> a(n, 0);
        a[i - 1] = 1;
        span.push_back(monomial_element(ctx, a, {i + n}));
    }
    Subspace g2T = Subspace::span_of(ctx, span);

    rec.check("dim Nor = dim g'' + n", "normalizer lemma", [&] {
        return equal(std::to_string(nr.g2_dim + n), std::to_string(nr.nor_dim));
    });
    rec.check("Nor = g'' + T as subspaces", "normalizer lemma", [&] {
        bool same = nr.nor->includes(g2T) && g2T.includes(*nr.nor);
        Outcome o{"equal", same ? "equal" : "different", same};
        o.computed += " (dim Nor " + std::to_string(nr.nor_dim) + ", dim(g''+T) " + std::to_string(g2T.dim()) +
                      ", dim(g'' ∩ T) " + std::to_string(nr.g2_dim + n - g2T.dim()) + ")";
        return o;
    });
    rec.check("C(g) = 0 in O", "centralizer lemma", [&] { return equal("0", std::to_string(nr.cen_dim)); });
    rec.check("g'' and T lie in Nor", "normalizer lemma", [&] {
        return Outcome{"both inside",
                       std::string(nr.g2_inside ? "g'' inside" : "g'' not inside") + ", " +
                           (nr.h_inside ? "T inside" : "T not inside"),
                       nr.g2_inside && nr.h_inside};
    });
    rec.check("[f, y] in g for random f in Nor, y in g", "normalizer lemma",
              [&] { return counted(nr.sampled_ok, nr.sampled); });
    rec.check("ad f is rejected as an endomorphism of g for f outside Nor", "normalizer lemma", [&] {
        for (std::uint32_t idx = std::uint32_t(ctx.dimension()); idx-- > 0;) {
            SuperElement fm = SuperElement::basis(ctx, idx);
            if (nr.nor->contains(fm)) continue;
            try {
                ad_endo(*inst.g, fm);
                return Outcome{"rejected", "accepted " + fm.render(), false};
            } catch (const DerivationError&) {
                return Outcome{"rejected", "rejected " + fm.render(), true};
            }
        }
        return Outcome{"rejected", "no monomial outside Nor", false};
    });
}

void suite_derivations(LambdaState& st, Sampler& rng, const RunConfig& cfg, Recorder& rec)
{
    const Instance& inst = st.instance();
    const AlgebraContext& ctx = inst.context();
    const Subspace& g = *inst.g;
    const std::uint32_t n = ctx.n();
    const std::size_t samples = cfg.derivation_samples;
    const std::string mode = samples ? std::to_string(samples) + " sampled pairs" : "all basis pairs";

    rec.check("ad x_{2n+1} = -(degree derivation) on g", "graded derivations", [&] {
        EndoMap x = ad_endo(g, SuperElement::of(ctx, Monomial{std::vector<std::uint32_t>(n, 0), {}, true}));
        EndoMap d = degree_endo(g);
        std::size_t ok = 0;
        for (std::size_t k = 0; k < x.images.size(); ++k)
            if (x.images[k] == -d.images[k]) ++ok;
        return counted(ok, x.images.size());
    });
    rec.check("ad v is a superderivation for random basis vectors v of g (" + mode + ")", "inner derivations", [&] {
        auto gb = g.basis();
        std::size_t ok = 0, total = 2;
        std::string bad;
        for (std::size_t s = 0; s < total; ++s) {
            const SuperElement& v = gb[rng.below(gb.size())];
            DerivationCheck c = is_superderivation(ad_endo(g, v), samples, cfg.seed + s, cfg.parallel);
            if (c.ok)
                ++ok;
            else if (bad.empty())
                bad = v.render() + ": " + c.witness;
        }
        return counted(ok, total, bad);
    });
    rec.check("the identity map of g is not a superderivation", "superderivation law", [&] {
        EndoMap id = endo_from_images("id", g, g.basis(), 0);
        DerivationCheck c = is_superderivation(id, samples ? samples : 0, cfg.seed, cfg.parallel);
        return Outcome{"law fails", c.ok ? "law holds" : "law fails", !c.ok};
    });

    OuterOptions oo;
    oo.samples = samples;
    oo.seed = cfg.seed;
    oo.parallel = cfg.parallel;
    OuterReport rep = outer_der_suite(inst, oo);
    for (std::size_t k = 0; k < rep.family.size(); ++k) {
        const DerivationCheck& c = rep.law[k];
        rec.check(rep.family[k].name + " is a superderivation of g (" + mode + ")", "outer derivation theorem", [&] {
            Outcome o{"law holds", c.ok ? "law holds on " + std::to_string(c.pairs) + " pairs" : "law fails", c.ok};
            if (!c.ok) o.computed += ": " + c.witness;
            return o;
        });
    }
    rec.check("rank of the outer family modulo ad g = dim Der_out formula", "outer derivation theorem", [&] {
        Outcome o = equal(std::to_string(rep.formula), std::to_string(rep.rank));
        o.computed += " (" + std::to_string(rep.family.size()) + " maps)";
        return o;
    });
    for (const Relation& r : rep.relations)
        rec.check(r.claim, "outer derivation theorem", [&] { return Outcome{"holds", r.computed, r.pass}; });

    std::vector<std::uint32_t> shifts{2, 3, 4};
    std::uint32_t tmax = *std::max_element(ctx.params().t.begin(), ctx.params().t.end());
    for (std::uint32_t d = 1, q = ctx.p(); d <= std::max<std::uint32_t>(tmax - 1, 1); ++d, q *= ctx.p())
        if (std::find(shifts.begin(), shifts.end(), q) == shifts.end()) shifts.push_back(q);
    for (std::uint32_t s : shifts) {
        std::size_t expected = 0;
        if (s == 2) expected = 1;
        for (std::uint32_t d = 1, q = ctx.p(); d < 32 && q <= s; ++d, q *= ctx.p())
            if (q == s)
                for (std::uint32_t t : ctx.params().t)
                    if (d <= t - 1) ++expected;
        rec.check("dim Der_{-" + std::to_string(s) + "} g", "graded derivations", [&] {
            GradedDerReport g = graded_der_dimension(inst, -int(s));
            Outcome o = equal(std::to_string(expected), std::to_string(g.dim));
            for (const auto& [b, d] : g.pieces) o.computed += "; " + b.render() + ":" + std::to_string(d);
            return o;
        });
    }
}

void suite_formulas(LambdaState& st, Recorder& rec)
{
    const Instance& inst = st.instance();
    const AlgebraContext& ctx = inst.context();
    const auto& prm = ctx.params();
    const std::uint32_t n = ctx.n();
    const int delta = delta_prime(prm.p, n, prm.lambda);
    const BigInt dim = dim_sko(prm.p, n, prm.t, prm.lambda);

    rec.check("dim g by the closed form = dim g by brute force", "dimension theorem",
              [&] { return equal(big(dim), std::to_string(inst.g->dim())); });
    rec.check("dim g''(brute) - dim g(formula) = delta' + sum over S_0 + sum over S_2 of C(n,r) (+1 exceptional case)",
              "dimension theorem", [&] {
                  BigInt want = BigInt(delta) + sum_binom(n, sigma_set(ctx, 0)) + sum_binom(n, sigma_set(ctx, 2)) +
                                (exceptional_case(ctx) ? 1 : 0);
                  return equal(big(want), big(BigInt(inst.g2->dim()) - dim));
              });
    rec.check("l_0 + l_1 + |t| - n + 1 + delta' = dim Der_out formula", "outer derivation theorem", [&] {
        std::int64_t tt = 0;
        for (auto v : prm.t) tt += v;
        BigInt lhs = l_even(prm.p, n, prm.lambda) + l_odd(prm.p, n, prm.lambda) + tt - std::int64_t(n) + 1 + delta;
        return equal(big(lhs), big(dim_der_out(prm.p, n, prm.t, prm.lambda)));
    });
    rec.check("sgn(1,2,3) = 1, sgn(2,1) = -1, sgn(3,1,2) = 1", "sign of a tuple", [&] {
        std::string c = std::to_string(sgn({1, 2, 3})) + "," + std::to_string(sgn({2, 1})) + "," +
                        std::to_string(sgn({3, 1, 2}));
        return equal("1,-1,1", c);
    });
}

void suite_comparison(const RunConfig& cfg, Recorder& rec)
{
    CorollaryReport cr = corollary_parity_check(cfg.p);
    const std::string inst = "SKO(" + std::to_string(cr.n) + "," + std::to_string(cr.n + 1) + ";" +
                             std::to_string(cr.lambda) + ",t)";
    rec.check("dim " + inst + " is odd for every t in {1,2}^" + std::to_string(cr.n), "non-isomorphism corollary", [&] {
        Outcome o{ratio(cr.sko_samples, cr.sko_samples) + " odd", ratio(cr.sko_odd, cr.sko_samples) + " odd",
                  cr.sko_all_odd()};
        o.computed += "; t=(1,...,1) gives " + big(cr.unit_t_dim) + "; without the S_2 sum " +
                      ratio(cr.reduced_odd, cr.sko_samples) + " odd; S_2={" + join(cr.sigma2) + "}";
        return o;
    });
    rec.check("dim W, H, KO, SHO over the parameter grid are even", "non-isomorphism corollary", [&] {
        Outcome o{ratio(cr.family_samples, cr.family_samples) + " even",
                  ratio(cr.family_even, cr.family_samples) + " even", cr.families_all_even()};
        if (!cr.first_even_family.empty()) o.computed += "; first odd " + cr.first_even_family;
        return o;
    });
    rec.check("Der_out of " + inst + " is non-abelian (delta' = 1, S_0 and S_2 nonempty)",
              "outer derivation corollary", [&] {
                  Outcome o{"delta'=1, |S_0|>0, S_2 nonempty",
                            "delta'=" + std::to_string(cr.delta) + ", |S_0|=" + std::to_string(cr.sigma0_size) +
                                ", S_2={" + join(cr.sigma2) + "}, dim Der_out=" + big(cr.der_out_dim),
                            cr.der_out_nonabelian()};
                  return o;
              });
    if (cfg.p == 5) {
        rec.check("W(3,4;(1,1,1)) = 14000, H(3,4;(1,1,1)) = 1998, K(3,4;(1,1,1)) = 2000, KO(3,4;(1,1,1)) = 2000",
                  "cartan type dimensions", [&] {
                      std::vector<std::string> c;
                      for (Family fm : {Family::W, Family::H, Family::K, Family::KO})
                          c.push_back(big(dim_family(FamilyParams{fm, 5, 3, 4, {1, 1, 1}, {}})));
                      return equal("14000,1998,2000,2000", c[0] + "," + c[1] + "," + c[2] + "," + c[3]);
                  });
    }
    // SHO(n,n;t) against the second derived algebra of ker Delta on O(n,n), modulo constants
    rec.check("dim SHO(n,n;t) formula = dim [[ker Delta, ker Delta], ...] - 1 on O(n,n)", "cartan type dimensions", [&] {
        AlgebraContext ctx(AlgebraParams{cfg.p, cfg.n, cfg.t, 0});
        Subspace k = kernel_by_block(
            ctx, [&](std::uint32_t idx) { return laplacian(SuperElement::basis(ctx, idx)).terms(); },
            [&](std::uint32_t idx) { return !ctx.monomial(idx).eps; });
        ClosureOptions opt;
        opt.parallel = cfg.parallel;
        opt.seed = cfg.seed;
        Subspace d1 = derived_subalgebra(k, opt);
        Subspace d2 = derived_subalgebra(d1, opt);
        bool has1 = d2.contains(SuperElement::unit(ctx));
        BigInt formula = dim_family(FamilyParams{Family::SHO, cfg.p, cfg.n, cfg.n, cfg.t, {}});
        Outcome o = equal(big(formula), std::to_string(d2.dim() - (has1 ? 1 : 0)));
        o.computed += " (ker Delta " + std::to_string(k.dim()) + ", derived " + std::to_string(d1.dim()) + ", " +
                      std::to_string(d2.dim()) + (has1 ? ", contains 1)" : ")");
        return o;
    });
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string millis_str(double ms)
{
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(1);
    os << ms;
    return os.str();
}

} // namespace

const std::vector<std::string>& suite_names() { return kSuites; }

std::vector<std::uint32_t> parse_t(const std::string& s)
{
    std::vector<std::uint32_t> t;
    for (const auto& part : split(s, ',')) {
        auto v = parse_uint(part, "t");
        if (v == 0) throw ConfigError("t entries must be positive");
        t.push_back(std::uint32_t(v));
    }
    if (t.empty()) throw ConfigError("t must be a comma list of positive integers");
    return t;
}

std::vector<std::uint32_t> parse_lambda(const std::string& s, std::uint32_t p, bool* all)
{
    if (all) *all = false;
    if (s == "all") {
        if (all) *all = true;
        std::vector<std::uint32_t> v(p);
        for (std::uint32_t i = 0; i < p; ++i) v[i] = i;
        return v;
    }
    return {std::uint32_t(parse_uint(s, "lambda"))};
}

std::vector<std::string> parse_suites(const std::string& s)
{
    if (s.empty() || s == "all") return {};
    std::vector<std::string> out;
    for (const auto& name : split(s, ',')) {
        if (name == "all") return {};
        if (std::find(kSuites.begin(), kSuites.end(), name) == kSuites.end())
            throw ConfigError("unknown suite '" + name + "'");
        if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
    }
    return out;
}

ReportFormat parse_format(const std::string& s)
{
    if (s == "json") return ReportFormat::json;
    if (s == "csv") return ReportFormat::csv;
    if (s == "text") return ReportFormat::text;
    throw ConfigError("format must be json, csv or text");
}

void validate(const RunConfig& cfg)
{
    if (cfg.p <= 3 || !is_prime(cfg.p)) throw ConfigError("p must be an odd prime > 3");
    if (cfg.n < 3) throw ConfigError("n must be at least 3");
    if (cfg.t.size() != cfg.n) throw ConfigError("t must have n entries");
    for (auto v : cfg.t)
        if (v == 0) throw ConfigError("t entries must be positive");
    if (cfg.lambdas.empty()) throw ConfigError("lambda is required");
    for (auto l : cfg.lambdas)
        if (l >= cfg.p) throw ConfigError("lambda must lie in 0..p-1");
    for (const auto& s : cfg.suites)
        if (std::find(kSuites.begin(), kSuites.end(), s) == kSuites.end())
            throw ConfigError("unknown suite '" + s + "'");
    // 2^{2n+1} p^{|t|} monomials; the dense per-block solves stop being practical well before 2^22
    double size = std::pow(2.0, 2.0 * cfg.n + 1);
    for (auto v : cfg.t) size *= std::pow(double(cfg.p), double(v));
    if (size > double(1u << 22)) throw ConfigError("instance too large: O has more than 2^22 basis monomials");
}

bool SuiteResult::pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

bool Report::all_pass() const
{
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.pass(); });
}

Report run_suites(const RunConfig& cfg)
{
    validate(cfg);
    Report rep;
    rep.config = cfg;
    auto wanted = [&](const std::string& s) {
        return cfg.suites.empty() || std::find(cfg.suites.begin(), cfg.suites.end(), s) != cfg.suites.end();
    };
    for (std::uint32_t lambda : cfg.lambdas) {
        LambdaState st{cfg, lambda, nullptr, nullptr};
        for (std::size_t si = 0; si < kSuites.size(); ++si) {
            const std::string& name = kSuites[si];
            if (name == "comparison" || !wanted(name)) continue;
            SuiteResult res;
            res.name = name;
            res.lambda = lambda;
            Recorder rec(res);
            Sampler rng(cfg.seed, lambda, si);
            if (name == "algebra-axioms") suite_axioms(st, rng, rec);
            else if (name == "bracket-identities") suite_identities(st, rec);
            else if (name == "spanning") suite_spanning(st, rec);
            else if (name == "derived-series") suite_derived(st, rng, cfg, rec);
            else if (name == "simplicity") suite_simplicity(st, rng, rec);
            else if (name == "normalizer") suite_normalizer(st, cfg, rec);
            else if (name == "derivations") suite_derivations(st, rng, cfg, rec);
            else if (name == "formulas") suite_formulas(st, rec);
            rep.suites.push_back(std::move(res));
        }
    }
    if (wanted("comparison")) {
        SuiteResult res;
        res.name = "comparison";
        Recorder rec(res);
        suite_comparison(cfg, rec);
        rep.suites.push_back(std::move(res));
    }
    return rep;
}

std::string report_json(const Report& r, bool timings)
{
    const RunConfig& c = r.config;
    json params;
    params["p"] = c.p;
    params["n"] = c.n;
    params["t"] = c.t;
    params["lambda"] = c.lambdas;
    params["seed"] = c.seed;
    params["suites"] = c.suites.empty() ? kSuites : c.suites;
    if (c.derivation_samples) params["derivation_samples"] = c.derivation_samples;
    json suites = json::array();
    for (const auto& s : r.suites) {
        json js;
        js["name"] = s.name;
        js["lambda"] = s.lambda ? json(*s.lambda) : json(nullptr);
        js["pass"] = s.pass();
        json checks = json::array();
        for (const auto& ch : s.checks) {
            json jc;
            jc["claim"] = ch.claim;
            jc["anchor"] = ch.anchor;
            jc["expected"] = ch.expected;
            jc["computed"] = ch.computed;
            jc["pass"] = ch.pass;
            if (timings) jc["millis"] = std::round(ch.millis * 10) / 10;
            checks.push_back(std::move(jc));
        }
        js["checks"] = std::move(checks);
        suites.push_back(std::move(js));
    }
    json root;
    root["params"] = std::move(params);
    root["suites"] = std::move(suites);
    root["all_pass"] = r.all_pass();
    return root.dump(2) + "\n";
}

std::string report_csv(const Report& r, bool timings)
{
    std::string out = "suite,lambda,claim,anchor,expected,computed,pass";
    out += timings ? ",millis\n" : "\n";
    for (const auto& s : r.suites)
        for (const auto& ch : s.checks) {
            out += csv_field(s.name) + "," + (s.lambda ? std::to_string(*s.lambda) : "") + "," + csv_field(ch.claim) +
                   "," + csv_field(ch.anchor) + "," + csv_field(ch.expected) + "," + csv_field(ch.computed) + "," +
                   (ch.pass ? "true" : "false");
            if (timings) out += "," + millis_str(ch.millis);
            out += "\n";
        }
    return out;
}

std::string report_text(const Report& r, bool timings)
{
    std::ostringstream os;
    const RunConfig& c = r.config;
    os << "p=" << c.p << " n=" << c.n << " t=" << join(c.t) << " seed=" << c.seed << "\n";
    std::size_t total = 0, failed = 0;
    for (const auto& s : r.suites) {
        os << "== " << s.name;
        if (s.lambda) os << " (lambda=" << *s.lambda << ")";
        os << "\n";
        for (const auto& ch : s.checks) {
            ++total;
            if (!ch.pass) ++failed;
            os << (ch.pass ? "  PASS " : "  FAIL ") << ch.claim << "\n      expected: " << ch.expected
               << "\n      computed: " << ch.computed;
            if (timings) os << "\n      millis: " << millis_str(ch.millis);
            os << "\n";
        }
    }
    os << total << " checks, " << failed << " failed\n";
    return os.str();
}

std::string render_report(const Report& r, ReportFormat f, bool timings)
{
    switch (f) {
    case ReportFormat::json: return report_json(r, timings);
    case ReportFormat::csv: return report_csv(r, timings);
    case ReportFormat::text: return report_text(r, timings);
    }
    return {};
}

std::string spanning_json(const AlgebraContext& ctx)
{
    SpanningSets spans = build_S_sets(ctx);
    json root;
    const auto& prm = ctx.params();
    root["p"] = prm.p;
    root["n"] = prm.n;
    root["t"] = prm.t;
    root["lambda"] = prm.lambda;
    json sets = json::object();
    json counts = json::object();
    std::vector<SuperElement> all;
    for (const auto& [k, v] : spans.sets) {
        json arr = json::array();
        for (const auto& le : v) {
            arr.push_back(json{{"label", le.label.render()}, {"element", le.element.render()}});
            all.push_back(le.element);
        }
        counts[span_kind_name(k)] = v.size();
        sets[span_kind_name(k)] = std::move(arr);
    }
    all.push_back(spans.unit.element);
    sets["unit"] = json::array({json{{"label", spans.unit.label.render()}, {"element", spans.unit.element.render()}}});
    root["sets"] = std::move(sets);
    root["counts"] = std::move(counts);
    root["rank"] = rank_of(ctx, all);
    root["nullity"] = divergence_kernel(ctx).dim();
    return root.dump(2) + "\n";
}

} // namespace skolab
