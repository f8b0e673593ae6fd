#include "skolab/formulas.hpp"
#include "skolab/instance.hpp"
#include "skolab/spanning.hpp"

#include <gtest/gtest.h>

using namespace skolab;

namespace {

struct Sp : ::testing::Test {
    AlgebraContext ctx{AlgebraParams{5, 3, {1, 1, 1}, 2}};
    SuperElement m(std::vector<std::uint32_t> a, std::vector<std::uint32_t> u = {}, bool eps = false, std::int64_t c = 1)
    {
        return SuperElement::of(ctx, Monomial{a, u, eps}, ctx.field().from_int(c));
    }
};

} // namespace

TEST_F(Sp, MonomialElementSorts)
{
    EXPECT_EQ(monomial_element(ctx, {0, 0, 0}, {5, 4}), m({0, 0, 0}, {4, 5}, false, -1));
    EXPECT_EQ(monomial_element(ctx, {0, 0, 0}, {6, 4, 5}), m({0, 0, 0}, {4, 5, 6}));
    EXPECT_THROW(monomial_element(ctx, {0, 0, 0}, {4, 4}), std::invalid_argument);
    EXPECT_THROW(monomial_element(ctx, {5, 0, 0}, {}), std::invalid_argument);
    EXPECT_THROW(monomial_element(ctx, {0, 0}, {}), std::invalid_argument);
}

TEST_F(Sp, BuildingBlocks)
{
    EXPECT_EQ(build_A(ctx, {1, 0, 0}, {4}, 2), m({1, 0, 0}, {4}) - m({0, 1, 0}, {5}));
    EXPECT_EQ(build_A(ctx, {2, 0, 0}, {5}, 3), m({2, 0, 0}, {5}));
    // (-1)^0 (n lambda - zd) nabla_3(x^(2e1)), n lambda - 2 = 4
    EXPECT_EQ(build_B(ctx, {2, 0, 0}, {}, 3), m({2, 0, 1}, {6}, false, 4));
    EXPECT_EQ(build_E(ctx, EVariant::E2n1q, {2, 0, 0}, {}, 3), m({2, 0, 0}, {}, true) + m({2, 0, 1}, {6}, false, 4));
    EXPECT_EQ(build_E(ctx, EVariant::E, {0, 0, 0}, {4}), m({0, 0, 0}, {4}));
    EXPECT_THROW(build_E(ctx, EVariant::Eq, {1, 0, 0}, {4}), std::invalid_argument);
    EXPECT_EQ(build_Y(m({2, 0, 0}), 3), build_E(ctx, EVariant::E2n1q, {2, 0, 0}, {}, 3));
    EXPECT_THROW(build_Y(m({4, 0, 0}), 1), std::invalid_argument);
    EXPECT_THROW(build_Y(m({1, 0, 0}) + m({0, 0, 0}, {4}), 2), std::invalid_argument);
    SuperElement G = exceptional_G(ctx);
    EXPECT_EQ(G, build_E(ctx, EVariant::G2n1q, {3, 4, 4}, {5, 6}, 1));
}

TEST_F(Sp, SigmaSets)
{
    EXPECT_EQ(sigma_set(5, 3, 2, 2), (std::vector<std::uint32_t>{0}));
    EXPECT_EQ(sigma_set(5, 3, 2, 0), (std::vector<std::uint32_t>{1}));
    EXPECT_TRUE(sigma_set(5, 3, 1, 2).empty());
    // brute force against the defining congruence
    for (std::uint32_t lam = 0; lam < 7; ++lam)
        for (int l : {0, 2}) {
            std::vector<std::uint32_t> want;
            for (std::uint32_t k = 0; k <= 4; ++k)
                if (((4 * lam) + 7 * 10 - 4 + 2 * k + l) % 7 == 0) want.push_back(k);
            EXPECT_EQ(sigma_set(7, 4, lam, l), want);
        }
}

TEST_F(Sp, XElements)
{
    EXPECT_EQ(build_X(ctx, {1}), m({4, 0, 0}, {5, 6}));
    EXPECT_EQ(build_X(ctx, {}), m({0, 0, 0}, {4, 5, 6}));
    EXPECT_EQ(build_X(ctx, {1, 2, 3}), m({4, 4, 4}));
    EXPECT_THROW(build_X(ctx, {2, 1}), std::invalid_argument);
    EXPECT_EQ(tuples_J(3, 2).size(), 3u);
    EXPECT_EQ(tuples_J(4, 0).size(), 1u);
}

TEST_F(Sp, SetsAtReference)
{
    SpanningSets s = build_S_sets(ctx);
    EXPECT_EQ(s.sets.at(SpanKind::S5).size(), 3u);
    std::vector<SuperElement> all{s.unit.element};
    for (const auto& [k, v] : s.sets)
        for (const auto& le : v) {
            EXPECT_TRUE(div_lambda(le.element).is_zero()) << le.label.render();
            all.push_back(le.element);
        }
    EXPECT_EQ(rank_of(ctx, all), divergence_kernel(ctx).dim());
}

TEST_F(Sp, RankEqualsNullityForAllLambda)
{
    for (std::uint32_t lam = 0; lam < 5; ++lam) {
        AlgebraContext c(AlgebraParams{5, 3, {1, 1, 1}, lam});
        SpanningSets s = build_S_sets(c);
        std::vector<SuperElement> all{s.unit.element};
        for (const auto& [k, v] : s.sets)
            for (const auto& le : v) all.push_back(le.element);
        EXPECT_EQ(rank_of(c, all), divergence_kernel(c).dim()) << lam;
        std::uint32_t want = 0;
        for (auto r : sigma_set(c, 0)) want += std::uint32_t(binomial(3, r));
        EXPECT_EQ(s.sets.at(SpanKind::S5).size(), want) << lam;
    }
}

TEST_F(Sp, GeneratorSets)
{
    GeneratorSets g = generator_sets(ctx);
    EXPECT_EQ(g.S.size(), 6u);
    SpanningSets s = build_S_sets(ctx);
    const auto& s3 = s.sets.at(SpanKind::S3);
    auto in_s3 = [&](const SuperElement& e) {
        for (const auto& le : s3)
            if (le.element == e) return true;
        return false;
    };
    // S3 keeps only q = q_min; the generators run over all q in I~
    std::size_t hits = 0;
    for (const auto* set : {&g.T, &g.S})
        for (const auto& t : *set) {
            EXPECT_TRUE(div_lambda(t.element).is_zero()) << t.label.render();
            auto q = index_report(ctx, Monomial{t.label.alpha, t.label.u, false}).qmin;
            if (q && *q == *t.label.q) {
                EXPECT_TRUE(in_s3(t.element)) << t.label.render();
                ++hits;
            }
        }
    EXPECT_GT(hits, 0u);
    EXPECT_LT(g.distinct_T, g.T.size());
    auto gens = generator_elements(ctx);
    // duplicates across T and S are merged too
    EXPECT_LE(gens.size(), g.distinct_T + g.S.size() + 1);
    EXPECT_NE(std::find(gens.begin(), gens.end(), SuperElement::unit(ctx)), gens.end());
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = a + 1; b < gens.size(); ++b) EXPECT_FALSE(gens[a] == gens[b]);
}

TEST_F(Sp, SplittingIdentitySign)
{
    SplittingResult r = check_splitting_identity(ctx);
    EXPECT_GT(r.admissible, 0u);
    EXPECT_EQ(r.matched, r.admissible);
    EXPECT_EQ(r.global_sign, 1);
}

TEST_F(Sp, BracketIdentities)
{
    auto res = check_bracket_identities(ctx);
    ASSERT_EQ(res.size(), 12u);
    for (const auto& r : res) {
        if (r.name == "[E(e_k,<i'>,2n+1,q), E(<j'>)]") {
            // the bracket comes out as +1 times the printed right side's element, not -1
            EXPECT_EQ(r.matched, 0u);
            EXPECT_NE(r.note.find("lhs = 4*rhs"), std::string::npos);
            continue;
        }
        EXPECT_TRUE(r.pass()) << r.name << " " << r.witness;
    }
}

TEST(SpanningN4, IdentitiesNonVacuous)
{
    AlgebraContext c(AlgebraParams{5, 4, {1, 1, 1, 1}, 2});
    for (const auto& r : check_bracket_identities(c)) EXPECT_GT(r.admissible, 0u) << r.name;
}
