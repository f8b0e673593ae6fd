#include "skolab/contact_ops.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace skolab;

namespace {

struct Ops : ::testing::Test {
    AlgebraContext ctx{AlgebraParams{5, 3, {1, 1, 1}, 2}};

    SuperElement m(std::vector<std::uint32_t> a, std::vector<std::uint32_t> u = {}, bool eps = false, std::int64_t c = 1)
    {
        return SuperElement::of(ctx, Monomial{a, u, eps}, ctx.field().from_int(c));
    }
    SuperElement one() { return SuperElement::unit(ctx); }
    SuperElement x7() { return m({0, 0, 0}, {}, true); }

    SuperElement random_homogeneous(std::mt19937_64& rng, int par, int terms)
    {
        SuperElement e(ctx);
        while (e.is_zero())
            for (int k = 0; k < terms;) {
                auto i = std::uint32_t(rng() % ctx.dimension());
                if (ctx.parity(i) != par) continue;
                e = e + SuperElement::basis(ctx, i, FieldScalar(std::uint32_t(1 + rng() % 4)));
                ++k;
            }
        return e;
    }
};

} // namespace

TEST_F(Ops, IndexConventions)
{
    EXPECT_EQ(prime_index(3, 1), 4u);
    EXPECT_EQ(prime_index(3, 5), 2u);
    EXPECT_EQ(mu(3, 7), 1);
    EXPECT_EQ(mu(3, 3), 0);
    EXPECT_EQ(mu(3, 4), 1);
}

TEST_F(Ops, EulerLaplacianNabla)
{
    EXPECT_EQ(euler(m({2, 0, 0})), m({2, 0, 0}, {}, false, 2));
    EXPECT_TRUE(euler(x7()).is_zero());
    EXPECT_TRUE(euler(one()).is_zero());
    // Euler multiplies by |alpha| + |u|
    for (std::uint32_t i = 0; i < ctx.dimension(); ++i) {
        Monomial x = ctx.monomial(i);
        std::int64_t d = x.u.size();
        for (auto a : x.alpha) d += a;
        ASSERT_EQ(euler(SuperElement::basis(ctx, i)), SuperElement::basis(ctx, i).scaled(d));
    }
    EXPECT_EQ(laplacian(m({1, 0, 0}, {4})), one());
    EXPECT_TRUE(laplacian(m({2, 0, 0})).is_zero());
    EXPECT_EQ(laplacian_i(1, m({1, 0, 0}, {4})), one());
    EXPECT_EQ(nabla(1, m({1, 0, 0})), m({2, 0, 0}, {4}));
    EXPECT_TRUE(nabla(1, m({1, 0, 0}, {4})).is_zero());
    EXPECT_EQ(gamma(1, 2, m({1, 0, 0}, {4})), m({0, 1, 0}, {5}));
}

TEST_F(Ops, HamiltonianAndContactOperators)
{
    EXPECT_EQ(t_h_apply(m({1, 0, 0}), m({0, 0, 0}, {4})), one());
    EXPECT_TRUE(t_h_apply(one(), m({2, 1, 0}, {5})).is_zero());
    EXPECT_EQ(t_h_apply(m({1, 0, 0}, {4}), m({1, 0, 0})), m({1, 0, 0}, {}, false, -1));
    EXPECT_EQ(d_ko_apply(one(), x7()), one().scaled(std::int64_t(-2)));
    EXPECT_TRUE(d_ko_apply(one(), m({1, 0, 0})).is_zero());
    EXPECT_EQ(d_ko_apply(x7(), m({1, 0, 0})), m({1, 0, 0}, {}, false, -1));
    // D_KO(1) = -2 d_{2n+1}
    std::mt19937_64 rng(5);
    for (int s = 0; s < 50; ++s) {
        auto b = SuperElement::basis(ctx, std::uint32_t(rng() % ctx.dimension()));
        EXPECT_EQ(d_ko_apply(one(), b), partial(7, b).scaled(std::int64_t(-2)));
    }
}

TEST_F(Ops, Divergence)
{
    EXPECT_TRUE(div_lambda(one()).is_zero());
    EXPECT_EQ(div_lambda(x7()), one().scaled(std::int64_t(2)));
    // n lambda = 6 = 1
    EXPECT_TRUE(div_lambda(x7() + m({1, 0, 0}, {4})).is_zero());
}

TEST_F(Ops, ZdAndIndexReport)
{
    EXPECT_EQ(zd(ctx, Monomial{{2, 0, 0}, {4}, false}).value, 3u);
    EXPECT_EQ(zd(ctx, Monomial{{0, 0, 0}, {}, false}).value, 0u);
    EXPECT_EQ(zd(ctx, Monomial{{4, 0, 0}, {5, 6}, false}).value, 1u);
    EXPECT_THROW(zd(ctx, Monomial{{0, 0, 0}, {}, true}), std::invalid_argument);

    auto r = index_report(ctx, Monomial{{1, 0, 0}, {4}, false});
    EXPECT_EQ(r.I, (std::vector<std::uint32_t>{1}));
    EXPECT_EQ(r.Itilde, (std::vector<std::uint32_t>{2, 3}));
    EXPECT_EQ(r.qmin, 2u);
    auto r1 = index_report(ctx, Monomial{{0, 0, 0}, {}, false});
    EXPECT_TRUE(r1.I.empty());
    EXPECT_EQ(r1.Itilde, (std::vector<std::uint32_t>{1, 2, 3}));
    EXPECT_EQ(r1.qmin, 1u);
    auto r2 = index_report(ctx, Monomial{{4, 0, 0}, {5, 6}, false});
    EXPECT_TRUE(r2.I.empty());
    EXPECT_TRUE(r2.Itilde.empty());
    EXPECT_FALSE(r2.qmin);
}

TEST_F(Ops, Decomposition)
{
    auto [a0, a1] = xj_decompose(m({1, 0, 0}, {}, true) + m({0, 1, 0}), 7);
    EXPECT_EQ(a0, m({1, 0, 0}));
    EXPECT_EQ(a1, m({0, 1, 0}));
    auto [b0, b1] = xj_decompose(m({2, 0, 0}), 7);
    EXPECT_TRUE(b0.is_zero());
    EXPECT_EQ(b1, m({2, 0, 0}));
    auto [c0, c1] = xj_decompose(m({0, 0, 0}, {4}, true), 7);
    EXPECT_EQ(c0, m({0, 0, 0}, {4}));
    EXPECT_TRUE(c1.is_zero());
    // reassembly a0 x_j + a1 for an odd variable in the middle
    SuperElement f = m({1, 0, 0}, {4, 5, 6}) + m({0, 2, 0}, {4, 6}, true) + m({1, 1, 0}, {6});
    auto [f0, f1] = xj_decompose(f, 5);
    EXPECT_EQ(multiply(f0, m({0, 0, 0}, {5})) + f1, f);
    EXPECT_TRUE(partial(5, f0).is_zero());
    EXPECT_TRUE(partial(5, f1).is_zero());
}

TEST_F(Ops, BracketExamples)
{
    EXPECT_EQ(bracket(m({1, 0, 0}, {}, true), one()), m({1, 0, 0}, {}, false, 2));
    EXPECT_TRUE(bracket(one(), one()).is_zero());
    EXPECT_EQ(bracket(x7() + m({1, 0, 0}, {4}), one()), one().scaled(std::int64_t(2)));
    EXPECT_EQ(lie_parity(one()), Parity::odd);
    EXPECT_EQ(lie_parity(m({0, 0, 0}, {4})), Parity::even);
    // [f, 1] = 2 f_0 whenever f = f_0 x_{2n+1} + f_1 lies in ker div
    std::mt19937_64 rng(9);
    for (int s = 0; s < 100; ++s) {
        auto f = SuperElement::basis(ctx, std::uint32_t(rng() % ctx.dimension()));
        auto [f0, f1] = xj_decompose(f, 7);
        if (!div_lambda(f).is_zero()) continue;
        EXPECT_EQ(bracket(f, one()), f0.scaled(std::int64_t(2)));
    }
}

TEST_F(Ops, BracketIsLieSuperalgebra)
{
    std::mt19937_64 rng(13);
    for (int s = 0; s < 200; ++s) {
        int pa = int(rng() % 2), pb = int(rng() % 2), pc = int(rng() % 2);
        auto a = random_homogeneous(rng, pa, 2), b = random_homogeneous(rng, pb, 2), c = random_homogeneous(rng, pc, 2);
        // Lie parity is O-parity + 1
        std::int64_t sab = ((pa + 1) & (pb + 1) & 1) ? -1 : 1;
        EXPECT_EQ(bracket(a, b), -bracket(b, a).scaled(sab));
        EXPECT_EQ(bracket(a, bracket(b, c)), bracket(bracket(a, b), c) + bracket(b, bracket(a, c)).scaled(sab));
    }
}

TEST_F(Ops, OperatorIdentity)
{
    // D(a)D(b) - (-1)^{|a||b|} D(b)D(a) = D([a,b]) with Lie parities
    std::mt19937_64 rng(17);
    for (int s = 0; s < 60; ++s) {
        int pa = int(rng() % 2), pb = int(rng() % 2);
        auto a = random_homogeneous(rng, pa, 2), b = random_homogeneous(rng, pb, 2);
        std::int64_t sab = ((pa + 1) & (pb + 1) & 1) ? -1 : 1;
        auto ab = bracket(a, b);
        for (int k = 0; k < 5; ++k) {
            auto c = SuperElement::basis(ctx, std::uint32_t(rng() % ctx.dimension()));
            SuperElement lhs = d_ko_apply(a, d_ko_apply(b, c)) - d_ko_apply(b, d_ko_apply(a, c)).scaled(sab);
            SuperElement rhs = ab.is_zero() ? SuperElement(ctx) : d_ko_apply(ab, c);
            EXPECT_EQ(lhs, rhs);
        }
    }
}

TEST_F(Ops, HBracketIsWeight)
{
    // [x_i x_{i'}, f] = (d_{i'f} - alpha_i) f
    for (std::uint32_t i = 1; i <= 3; ++i) {
        std::vector<std::uint32_t> a(3, 0);
        a[i - 1] = 1;
        SuperElement h = m(a, {i + 3});
        for (std::uint32_t idx = 0; idx < ctx.dimension(); ++idx) {
            Monomial x = ctx.monomial(idx);
            std::int64_t w = std::int64_t(std::count(x.u.begin(), x.u.end(), i + 3)) - std::int64_t(x.alpha[i - 1]);
            ASSERT_EQ(bracket(h, SuperElement::basis(ctx, idx)), SuperElement::basis(ctx, idx).scaled(w));
        }
    }
}

TEST_F(Ops, BracketMonomialsAgreesWithBracket)
{
    std::mt19937_64 rng(21);
    for (int s = 0; s < 300; ++s) {
        auto i = std::uint32_t(rng() % ctx.dimension()), j = std::uint32_t(rng() % ctx.dimension());
        TermAccumulator acc(ctx);
        bracket_monomials(ctx, i, j, FieldScalar(3), acc);
        EXPECT_EQ(acc.take(), bracket(SuperElement::basis(ctx, i), SuperElement::basis(ctx, j)).scaled(std::int64_t(3)));
    }
}
