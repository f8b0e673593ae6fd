#include "skolab/contact_ops.hpp"
#include "skolab/instance.hpp"
#include "skolab/linalg.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace skolab;

namespace {

// plain dense elimination mod p
std::size_t dense_rank(std::vector<std::vector<std::int64_t>> a, std::int64_t p)
{
    std::size_t rank = 0;
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
        std::size_t piv = rank;
        while (piv < a.size() && a[piv][c] % p == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[rank]);
        std::int64_t inv = 1;
        for (std::int64_t e = p - 2, b = a[rank][c] % p; e; e >>= 1, b = b * b % p)
            if (e & 1) inv = inv * b % p;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == rank || a[r][c] % p == 0) continue;
            std::int64_t f = a[r][c] * inv % p;
            for (std::size_t k = 0; k < cols; ++k) a[r][k] = ((a[r][k] - f * a[rank][k]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

struct LA : ::testing::Test {
    AlgebraContext ctx{AlgebraParams{5, 3, {1, 1, 1}, 2}};
    SuperElement m(std::vector<std::uint32_t> a, std::vector<std::uint32_t> u = {}, bool eps = false, std::int64_t c = 1)
    {
        return SuperElement::of(ctx, Monomial{a, u, eps}, ctx.field().from_int(c));
    }
};

} // namespace

TEST_F(LA, SpanExamples)
{
    EXPECT_EQ(Subspace::span_of(ctx, {m({1, 0, 0}), m({1, 0, 0}, {}, false, 2)}).dim(), 1u);
    EXPECT_EQ(Subspace::span_of(ctx, {}).dim(), 0u);
    Subspace s = Subspace::span_of(ctx, {m({1, 0, 0}) + m({0, 1, 0}), m({0, 1, 0})});
    EXPECT_TRUE(s.contains(m({1, 0, 0})));
    EXPECT_FALSE(s.contains(m({0, 0, 1})));
    auto co = s.coordinates(m({1, 0, 0}, {}, false, 3) + m({0, 1, 0}));
    SuperElement back(ctx);
    for (auto [k, c] : co) back = back.axpy(c, s.basis_vector(k));
    EXPECT_EQ(back, m({1, 0, 0}, {}, false, 3) + m({0, 1, 0}));
    EXPECT_THROW(s.coordinates(m({0, 0, 1})), std::invalid_argument);
}

TEST_F(LA, RankMatchesDenseOracle)
{
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t rows = 5 + rng() % 30, cols = 40;
        std::vector<std::vector<std::int64_t>> dense(rows, std::vector<std::int64_t>(cols, 0));
        std::vector<SuperElement> vs;
        for (std::size_t r = 0; r < rows; ++r) {
            SuperElement v(ctx);
            for (int k = 0; k < 4; ++k) {
                std::uint32_t c = std::uint32_t(rng() % cols);
                std::int64_t val = std::int64_t(rng() % 5);
                dense[r][c] = (dense[r][c] + val) % 5;
                v = v + SuperElement::basis(ctx, c, FieldScalar(std::uint32_t(val)));
            }
            // a few exact combinations to force dependencies
            if (r >= 2 && rng() % 3 == 0) {
                v = vs[r - 1] + vs[r - 2].scaled(std::int64_t(2));
                for (std::size_t c = 0; c < cols; ++c) dense[r][c] = (dense[r - 1][c] + 2 * dense[r - 2][c]) % 5;
            }
            vs.push_back(v);
        }
        EXPECT_EQ(rank_of(ctx, vs), dense_rank(dense, 5));
    }
}

TEST_F(LA, EchelonInvariants)
{
    std::mt19937_64 rng(2);
    Echelon e(ctx.field());
    for (int k = 0; k < 200; ++k) {
        SuperElement v(ctx);
        for (int j = 0; j < 3; ++j)
            v = v + SuperElement::basis(ctx, std::uint32_t(rng() % 300), FieldScalar(std::uint32_t(1 + rng() % 4)));
        e.insert(v.terms());
    }
    std::uint32_t last = 0;
    bool first = true;
    for (std::size_t id : e.sorted_ids()) {
        const SparseRow& r = e.row(id);
        ASSERT_FALSE(r.empty());
        EXPECT_EQ(r.front().coeff.value, 1u);
        if (!first) EXPECT_LT(last, r.front().index);
        first = false;
        last = r.front().index;
        for (std::size_t other : e.sorted_ids()) {
            if (other == id) continue;
            for (const auto& t : e.row(other)) EXPECT_NE(t.index, r.front().index);
        }
    }
}

TEST_F(LA, KernelOfDivergence)
{
    std::vector<SuperElement> dom;
    for (std::uint32_t i = 0; i < ctx.dimension(); ++i) dom.push_back(SuperElement::basis(ctx, i));
    Subspace k1 = kernel_of(ctx, dom, [](const SuperElement& v) { return div_lambda(v).terms(); });
    Subspace k2 = divergence_kernel(ctx);
    EXPECT_EQ(k1.dim(), k2.dim());
    EXPECT_TRUE(k1.includes(k2));
    // rank-nullity against the image
    std::vector<SuperElement> img;
    for (const auto& v : dom) img.push_back(div_lambda(v));
    EXPECT_EQ(k1.dim() + rank_of(ctx, img), ctx.dimension());
    for (const auto& v : k1.basis()) EXPECT_TRUE(div_lambda(v).is_zero());
    Subspace whole = kernel_of(ctx, dom, [](const SuperElement&) { return SparseRow{}; });
    EXPECT_EQ(whole.dim(), 2000u);
}

TEST_F(LA, Closures)
{
    // products of odd variables only: T_H needs an even partner and zdeg 2 kills the x7 terms
    Subspace ab = Subspace::span_of(ctx, {m({0, 0, 0}, {4, 5}), m({0, 0, 0}, {4, 6}), m({0, 0, 0}, {5, 6})});
    EXPECT_EQ(derived_subalgebra(ab).dim(), 0u);
    EXPECT_EQ(generated_closure(ctx, {SuperElement::unit(ctx)}).dim(), 1u);
    Subspace two = generated_closure(ctx, {SuperElement::unit(ctx), m({0, 0, 0}, {}, true)});
    EXPECT_TRUE(two.contains(SuperElement::unit(ctx)));
    EXPECT_EQ(two.dim(), 2u);
    // not closed: x1 and x4 bracket to a multiple of 1 outside the span
    Subspace open = Subspace::span_of(ctx, {m({1, 0, 0}), m({0, 0, 0}, {4})});
    ClosureOptions opt;
    opt.closure_samples = 16;
    EXPECT_THROW(derived_subalgebra(open, opt), ClosureError);
}

TEST(LinalgInstance, DerivedSeriesAtReference)
{
    auto inst = build_instance(AlgebraParams{5, 3, {1, 1, 1}, 2});
    EXPECT_EQ(inst->g2->dim(), 1003u);
    EXPECT_EQ(inst->g1->dim(), 999u);
    EXPECT_EQ(inst->g->dim(), 999u);
    EXPECT_TRUE(inst->g->block_homogeneous());
    EXPECT_EQ(derived_subalgebra(*inst->g).dim(), 999u);
    Subspace c = generated_closure(inst->context(), inst->g->basis());
    EXPECT_EQ(c.dim(), 999u);
    Subspace gen = generated_closure(inst->context(), inst->generators);
    EXPECT_TRUE(gen.includes(*inst->g));
    EXPECT_EQ(gen.dim(), 999u);
    Subspace id = ideal_closure(SuperElement::unit(inst->context()), *inst->g, &inst->generators);
    EXPECT_EQ(id.dim(), 999u);
    SuperElement outside = SuperElement::of(inst->context(), Monomial{{0, 0, 0}, {}, true});
    EXPECT_THROW(ideal_closure(outside, *inst->g), std::invalid_argument);
}

TEST(LinalgInstance, ExceptionalLambda)
{
    // n lambda + 1 = 0 at lambda = 3: g' = g + F G
    auto inst = build_instance(AlgebraParams{5, 3, {1, 1, 1}, 3});
    EXPECT_EQ(inst->g1->dim(), inst->g->dim() + 1);
    EXPECT_EQ(inst->g->dim(), 996u);
    EXPECT_TRUE(inst->g1->contains(exceptional_G(inst->context())));
    EXPECT_FALSE(inst->g->contains(exceptional_G(inst->context())));
}
