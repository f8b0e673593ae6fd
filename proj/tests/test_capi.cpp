#include "skolab/skolab.h"

#include <gtest/gtest.h>

#include <string>

namespace {

std::string take(char* s)
{
    std::string out = s ? s : "";
    skolab_string_free(s);
    return out;
}

} // namespace

TEST(CApi, ContextLifecycle)
{
    const uint32_t t[] = {1, 1, 1};
    skolab_context* ctx = nullptr;
    ASSERT_EQ(skolab_context_create(5, 3, t, 3, 2, &ctx), SKOLAB_OK);
    uint64_t n = 0;
    EXPECT_EQ(skolab_basis_size(ctx, &n), SKOLAB_OK);
    EXPECT_EQ(n, 2000u);
    uint64_t g2 = 0, g1 = 0, g = 0;
    EXPECT_EQ(skolab_derived_dims(ctx, &g2, &g1, &g), SKOLAB_OK);
    EXPECT_EQ(g2, 1003u);
    EXPECT_EQ(g1, 999u);
    EXPECT_EQ(g, 999u);
    char* js = nullptr;
    EXPECT_EQ(skolab_spanning_json(ctx, &js), SKOLAB_OK);
    EXPECT_NE(take(js).find("\"rank\": 1003"), std::string::npos);
    skolab_context_destroy(ctx);
    skolab_context_destroy(nullptr);
}

TEST(CApi, Errors)
{
    const uint32_t t[] = {1, 1, 1};
    skolab_context* ctx = nullptr;
    EXPECT_EQ(skolab_context_create(4, 3, t, 3, 2, &ctx), SKOLAB_INVALID_ARGUMENT);
    EXPECT_EQ(ctx, nullptr);
    EXPECT_NE(std::string(skolab_last_error()).find("prime"), std::string::npos);
    EXPECT_EQ(skolab_context_create(5, 3, t, 2, 2, &ctx), SKOLAB_INVALID_ARGUMENT);
    EXPECT_EQ(skolab_context_create(5, 3, t, 3, 2, nullptr), SKOLAB_NULL_POINTER);
    EXPECT_EQ(skolab_basis_size(nullptr, nullptr), SKOLAB_NULL_POINTER);
    char* out = nullptr;
    EXPECT_EQ(skolab_dim_family("XYZ", 5, 3, 3, t, 3, -1, &out), SKOLAB_INVALID_ARGUMENT);
    EXPECT_EQ(out, nullptr);
    EXPECT_EQ(skolab_compare_csv(9, &out), SKOLAB_INVALID_ARGUMENT);
    EXPECT_FALSE(std::string(skolab_version()).empty());
}

TEST(CApi, Formulas)
{
    const uint32_t t[] = {1, 1, 1};
    char* out = nullptr;
    ASSERT_EQ(skolab_dim_family("SKO", 5, 3, 4, t, 3, 2, &out), SKOLAB_OK);
    EXPECT_EQ(take(out), "999");
    ASSERT_EQ(skolab_dim_family("W", 5, 3, 4, t, 3, -1, &out), SKOLAB_OK);
    EXPECT_EQ(take(out), "14000");
    EXPECT_EQ(skolab_dim_family("SKO", 5, 3, 4, t, 3, -1, &out), SKOLAB_INVALID_ARGUMENT);
    ASSERT_EQ(skolab_compare_csv(5, &out), SKOLAB_OK);
    EXPECT_EQ(take(out).rfind("family,p,m,n,t,lambda,dim", 0), 0u);
}

TEST(CApi, RunSuites)
{
    skolab_run_options o;
    skolab_run_options_init(&o);
    EXPECT_EQ(o.p, 5u);
    o.suites = "algebra-axioms";
    o.format = "text";
    char* rep = nullptr;
    int ok = -1;
    ASSERT_EQ(skolab_run_suites(&o, &rep, &ok), SKOLAB_OK);
    EXPECT_EQ(ok, 1);
    EXPECT_NE(take(rep).find(" 0 failed"), std::string::npos);
    o.lambda = "7";
    EXPECT_EQ(skolab_run_suites(&o, &rep, &ok), SKOLAB_INVALID_ARGUMENT);
    EXPECT_EQ(std::string(skolab_last_error()), "lambda must lie in 0..p-1");
    o.lambda = "2";
    o.suites = "nope";
    EXPECT_EQ(skolab_run_suites(&o, &rep, &ok), SKOLAB_INVALID_ARGUMENT);
    EXPECT_EQ(skolab_run_suites(nullptr, &rep, &ok), SKOLAB_NULL_POINTER);
}
