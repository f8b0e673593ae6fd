#include "skolab/spanning.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace skolab {

namespace {

using Vec = std::vector<std::uint32_t>;

// A labelled symbol of the spanning apparatus. It is admissible when alpha is
// in range, u has no repeats, and a q-label satisfies q in Itilde(alpha, u).
struct Sym {
    EVariant v;
    Vec alpha;
    Vec u;  // ordered
    std::optional<std::uint32_t> q;
};

bool has_q(EVariant v) { return v == EVariant::Eq || v == EVariant::E2n1q || v == EVariant::G2n1q; }

bool admissible(const AlgebraContext& ctx, const Sym& s)
{
    for (std::uint32_t i = 0; i < ctx.n(); ++i)
        if (s.alpha[i] > ctx.pi(i + 1)) return false;
    Vec su = s.u;
    std::sort(su.begin(), su.end());
    if (std::adjacent_find(su.begin(), su.end()) != su.end()) return false;
    if (has_q(s.v)) {
        IndexReport r = index_report(ctx, Monomial{s.alpha, su, false});
        if (std::find(r.Itilde.begin(), r.Itilde.end(), *s.q) == r.Itilde.end()) return false;
    }
    return true;
}

SuperElement eval(const AlgebraContext& ctx, const Sym& s) { return build_E(ctx, s.v, s.alpha, s.u, s.q); }

struct Term {
    std::int64_t c;
    Sym s;
};

class Checker {
public:
    Checker(const AlgebraContext& ctx, std::string name, std::string rule) : ctx_(ctx)
    {
        res_.name = std::move(name);
        res_.rule = std::move(rule);
    }

    void check(const Sym& a, const Sym& b, const std::vector<Term>& rhs, const std::string& where)
    {
        if (!admissible(ctx_, a) || !admissible(ctx_, b)) return;
        for (const auto& t : rhs)
            if (!admissible(ctx_, t.s)) return;
        ++res_.admissible;
        SuperElement lhs = bracket(eval(ctx_, a), eval(ctx_, b));
        SuperElement r(ctx_);
        for (const auto& t : rhs) r = r + eval(ctx_, t.s).scaled(t.c);
        if (lhs == r) {
            ++res_.matched;
            return;
        }
        if (res_.witness.empty()) res_.witness = where + ": lhs=" + lhs.render() + " rhs=" + r.render();
        // record whether the mismatch is only a scalar factor
        std::optional<FieldScalar> ratio;
        if (!r.is_zero()) {
            std::uint32_t lead = *r.leading_index();
            FieldScalar c = ctx_.field().div(lhs.coefficient(lead), r.coefficient(lead));
            if (lhs == r.scaled(c)) ratio = c;
        }
        if (ratio)
            ++ratios_[ratio->value];
        else
            ++other_;
    }

    IdentityResult result() const
    {
        IdentityResult out = res_;
        if (!ratios_.empty() || other_) {
            std::string s = "mismatches:";
            for (const auto& [c, cnt] : ratios_)
                s += " " + std::to_string(cnt) + " with lhs = " + std::to_string(c) + "*rhs;";
            if (other_) s += " " + std::to_string(other_) + " not proportional;";
            s.pop_back();
            out.note = s;
        }
        return out;
    }

private:
    const AlgebraContext& ctx_;
    IdentityResult res_;
    std::map<std::uint32_t, std::size_t> ratios_;
    std::size_t other_ = 0;
};

Vec unit_vec(std::uint32_t n, std::uint32_t i, std::uint32_t k = 1)
{
    Vec v(n, 0);
    v[i - 1] = k;
    return v;
}

Vec plus(Vec a, const Vec& b)
{
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

std::string at(std::uint32_t i, std::uint32_t j, std::uint32_t k, std::uint32_t q)
{
    return "i=" + std::to_string(i) + " j=" + std::to_string(j) + " k=" + std::to_string(k) + " q=" + std::to_string(q);
}

} // namespace

std::vector<IdentityResult> check_bracket_identities(const AlgebraContext& ctx)
{
    const std::uint32_t n = ctx.n();
    if (n < 3) throw std::invalid_argument("bracket identities need n >= 3");
    const std::int64_t nl = ctx.n_lambda().value;
    const Vec z(n, 0);
    auto P = [&](std::uint32_t i) { return i + n; };
    auto pi = [&](std::uint32_t i) { return std::int64_t(ctx.pi(i)); };
    const std::string base = "i,j,k distinct; every q-labelled symbol has q in Itilde of its own (alpha,u)";
    const std::string usage = base + "; q distinct from i and j";

    Checker c23(ctx, "[E(k e_i,2n+1,q), E(l e_j,2n+1,q)]", usage);
    Checker c24(ctx, "[E(a,2n+1,q), E(<j'>,2n+1,q)]", usage);
    Checker c25(ctx, "[E(pi_i e_i+(pi_j-1) e_j,2n+1,q), E(e_j,2n+1,q)]", usage);
    Checker c26(ctx, "[E(a), E(<j'>,2n+1,i)]", base);
    Checker c27(ctx, "[E(2e_k,2n+1,q), E(<i'>,2n+1,q)]", base);
    Checker c28(ctx, "[E(2e_k,<i'>,2n+1,q), E(<k'>,2n+1,q)]", base);
    Checker c29(ctx, "[G(2e_k,<k'i'>,2n+1,q), E(<j'>)]", base);
    Checker c210p(ctx, "[E(2e_k,<k'i'j'>,q), E(e_j)]", base);
    Checker c210(ctx, "[E(2e_k,<k'i'j'>,q), E(<k'>)]", base);
    Checker c211(ctx, "[E(2e_k,<i'>,2n+1,q), E(<k'>)]", base);
    Checker c212(ctx, "[E(e_k,<i'>,2n+1,q), E(<j'>)]", base + "; q != j");
    Checker c214(ctx, "[E(e_k,<i'j'>), E(<k'>,2n+1,q)]", base);

    for (std::uint32_t i = 1; i <= n; ++i) {
        for (std::uint32_t j = 1; j <= n; ++j) {
            if (i == j) continue;
            // two-index identities
            for (std::uint32_t q = 1; q <= n; ++q) {
                bool q_free = q != i && q != j;
                for (std::uint32_t ki = 0; ki <= ctx.pi(i); ++ki) {
                    for (std::uint32_t kj = 0; kj <= ctx.pi(j); ++kj) {
                        std::string w = at(i, j, 0, q) + " ki=" + std::to_string(ki) + " kj=" + std::to_string(kj);
                        Vec ai = unit_vec(n, i, ki), aj = unit_vec(n, j, kj);
                        if (q_free)
                            c23.check({EVariant::E2n1q, ai, {}, q}, {EVariant::E2n1q, aj, {}, q},
                                      {{std::int64_t(ki) - std::int64_t(kj), {EVariant::E2n1q, plus(ai, aj), {}, q}}}, w);
                        Vec a4 = plus(ai, unit_vec(n, j, kj + 1));
                        if (q_free)
                            c24.check({EVariant::E2n1q, a4, {}, q}, {EVariant::E2n1q, z, {P(j)}, q},
                                      {{std::int64_t(ki) + kj, {EVariant::G2n1q, a4, {P(j)}, q}}}, w);
                        if (q == 1)  // q is fixed by the identity itself
                            c26.check({EVariant::E, a4, {}, {}}, {EVariant::E2n1q, z, {P(j)}, i},
                                      {{1, {EVariant::E2n1q, plus(ai, aj), {}, j}},
                                       {(std::int64_t(ki) + 1) * (nl - 1),
                                        {EVariant::Eq, plus(unit_vec(n, i, ki + 1), aj), {P(i)}, j}}},
                                      w);
                    }
                }
                if (q_free) {
                    Vec a5 = plus(unit_vec(n, i, ctx.pi(i)), unit_vec(n, j, ctx.pi(j) - 1));
                    c25.check({EVariant::E2n1q, a5, {}, q}, {EVariant::E2n1q, unit_vec(n, j), {}, q},
                              {{pi(j) * (pi(i) + pi(j) - 2), {EVariant::E2n1q, plus(a5, unit_vec(n, j)), {}, q}}},
                              at(i, j, 0, q));
                }
            }
            // three-index identities
            for (std::uint32_t k = 1; k <= n; ++k) {
                if (k == i || k == j) continue;
                for (std::uint32_t q = 1; q <= n; ++q) {
                    std::string w = at(i, j, k, q);
                    Vec k2 = unit_vec(n, k, 2), k1 = unit_vec(n, k, 1);
                    c27.check({EVariant::E2n1q, k2, {}, q}, {EVariant::E2n1q, z, {P(i)}, q},
                              {{1, {EVariant::E2n1q, k2, {P(i)}, q}}}, w);
                    c28.check({EVariant::E2n1q, k2, {P(i)}, q}, {EVariant::E2n1q, z, {P(k)}, q},
                              {{-2, {EVariant::G2n1q, k2, {P(k), P(i)}, q}}}, w);
                    c29.check({EVariant::G2n1q, k2, {P(k), P(i)}, q}, {EVariant::E, z, {P(j)}, {}},
                              {{1, {EVariant::Eq, k2, {P(k), P(i), P(j)}, q}}}, w);
                    c210p.check({EVariant::Eq, k2, {P(k), P(i), P(j)}, q}, {EVariant::E, unit_vec(n, j), {}, {}},
                                {{-1, {EVariant::Eq, k2, {P(k), P(i)}, q}}}, w);
                    c210.check({EVariant::Eq, k2, {P(k), P(i), P(j)}, q}, {EVariant::E, z, {P(k)}, {}},
                               {{1, {EVariant::Eq, k1, {P(k), P(i), P(j)}, q}}}, w);
                    c211.check({EVariant::E2n1q, k2, {P(i)}, q}, {EVariant::E, z, {P(k)}, {}},
                               {{1, {EVariant::E2n1q, k1, {P(i)}, q}}, {-1, {EVariant::Eq, k2, {P(k), P(i)}, q}}}, w);
                    if (q != j)
                        c212.check({EVariant::E2n1q, k1, {P(i)}, q}, {EVariant::E, z, {P(j)}, {}},
                                   {{-1, {EVariant::E, k1, {P(i), P(j)}, {}}}}, w);
                    c214.check({EVariant::E, k1, {P(i), P(j)}, {}}, {EVariant::E2n1q, z, {P(k)}, q},
                               {{1, {EVariant::E2n1q, z, {P(i), P(j)}, q}}, {-1, {EVariant::Eq, k1, {P(k), P(i), P(j)}, q}}},
                               w);
                }
            }
        }
    }
    std::vector<IdentityResult> out;
    for (Checker* c : {&c23, &c24, &c25, &c26, &c27, &c28, &c29, &c210p, &c210, &c211, &c212, &c214})
        out.push_back(c->result());
    return out;
}

SplittingResult check_splitting_identity(const AlgebraContext& ctx)
{
    const std::uint32_t n = ctx.n();
    const PrimeField& f = ctx.field();
    SplittingResult res;
    bool plus_ok = true, minus_ok = true;
    // C(alpha, beta) = prod C(alpha_i, beta_i), zero when beta leaves [0, alpha]
    auto cbin = [&](const Vec& alpha, const std::vector<std::int64_t>& beta) {
        FieldScalar r(1);
        for (std::uint32_t i = 0; i < n; ++i) {
            if (beta[i] < 0 || beta[i] > std::int64_t(alpha[i])) return FieldScalar(0);
            r = f.mul(r, f.binom(alpha[i], std::uint64_t(beta[i])));
        }
        return r;
    };
    auto zdv = [&](const Vec& a, const Vec& u) {
        std::int64_t s = std::int64_t(u.size());
        for (auto x : a) s += x;
        return f.from_int(s);
    };
    for (std::uint32_t idx = 0; idx < ctx.dimension(); ++idx) {
        Monomial m = ctx.monomial(idx);
        if (m.eps) continue;
        IndexReport rep = index_report(ctx, m);
        if (rep.Itilde.empty()) continue;
        const bool has_I = !rep.I.empty();
        // enumerate alpha1 <= alpha and u1 subset of u
        Vec a1(n, 0);
        const std::uint32_t usz = static_cast<std::uint32_t>(m.u.size());
        while (true) {
            Vec a2(n);
            for (std::uint32_t i = 0; i < n; ++i) a2[i] = m.alpha[i] - a1[i];
            for (std::uint32_t sub = 0; sub < (1u << usz); ++sub) {
                Vec u1, u2;
                for (std::uint32_t b = 0; b < usz; ++b) ((sub >> b & 1u) ? u1 : u2).push_back(m.u[b]);
                if (!index_report(ctx, Monomial{a1, u1, false}).I.empty()) continue;
                if (!index_report(ctx, Monomial{a2, u2, false}).I.empty()) continue;
                for (std::uint32_t q : rep.Itilde) {
                    ++res.admissible;
                    SuperElement lhs = bracket(build_E(ctx, EVariant::E2n1q, a1, u1, q),
                                               build_E(ctx, EVariant::E2n1q, a2, u2, q));
                    // u on the right is the ordered concatenation u1 u2
                    Vec u12 = u1;
                    u12.insert(u12.end(), u2.begin(), u2.end());
                    SuperElement target =
                        build_E(ctx, has_I ? EVariant::G2n1q : EVariant::E2n1q, m.alpha, u12, q);
                    std::vector<std::int64_t> b0(a1.begin(), a1.end()), bm = b0, bp = b0;
                    bm[q - 1] -= 1;
                    bp[q - 1] += 1;
                    FieldScalar z1 = zdv(a1, u1), z2 = zdv(a2, u2), nl = ctx.n_lambda();
                    FieldScalar g = f.mul(f.sub(nl, z2), cbin(m.alpha, bm));
                    g = f.add(g, f.mul(f.sub(z1, z2), cbin(m.alpha, b0)));
                    g = f.sub(g, f.mul(f.sub(nl, z1), cbin(m.alpha, bp)));
                    SuperElement pos = target.scaled(g);
                    bool p = lhs == pos, q_ = lhs == -pos;
                    if (p && q_) {
                        ++res.gamma_zero;
                        ++res.matched;
                    } else if (p) {
                        ++res.sign_plus;
                        ++res.matched;
                        minus_ok = false;
                    } else if (q_) {
                        ++res.sign_minus;
                        ++res.matched;
                        plus_ok = false;
                    } else {
                        plus_ok = minus_ok = false;
                        if (res.witness.empty())
                            res.witness = "(" + ctx.render_monomial(idx) + ") split " +
                                          monomial_element(ctx, a1, u1).render() + " | " +
                                          monomial_element(ctx, a2, u2).render() + " q=" + std::to_string(q) +
                                          ": lhs=" + lhs.render() + " gamma*rhs=" + pos.render();
                    }
                }
            }
            std::uint32_t i = 0;
            while (i < n && a1[i] == m.alpha[i]) a1[i++] = 0;
            if (i == n) break;
            ++a1[i];
        }
    }
    res.global_sign = plus_ok ? 1 : (minus_ok ? -1 : 0);
    return res;
}

} // namespace skolab
