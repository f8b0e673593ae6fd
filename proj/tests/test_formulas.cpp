#include "skolab/formulas.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace skolab;

namespace {

BigInt fam(Family f, std::uint32_t m, std::uint32_t n, std::optional<std::uint32_t> lam = std::nullopt)
{
    return dim_family(FamilyParams{f, 5, m, n, std::vector<std::uint32_t>(m, 1), lam});
}

} // namespace

TEST(Formulas, SkoAtReference)
{
    EXPECT_EQ(dim_sko(5, 3, {1, 1, 1}, 2), 999);
    EXPECT_EQ(dim_sko(5, 3, {1, 1, 1}, 3), 996);
    EXPECT_EQ(dim_sko(5, 3, {1, 1, 1}, 1), 1000);
    EXPECT_EQ(dim_sko(5, 3, {1, 1, 1}, 4), 997);
    EXPECT_EQ(fam(Family::SKO, 3, 4, 2), dim_sko(5, 3, {1, 1, 1}, 2));
    EXPECT_THROW(dim_sko(5, 2, {1, 1}, 0), std::invalid_argument);
    EXPECT_THROW(dim_sko(4, 3, {1, 1, 1}, 0), std::invalid_argument);
    EXPECT_THROW(dim_sko(5, 3, {1, 1}, 0), std::invalid_argument);
}

TEST(Formulas, OtherFamilies)
{
    EXPECT_EQ(fam(Family::W, 3, 4), 14000);
    EXPECT_EQ(fam(Family::H, 3, 4), 1998);
    EXPECT_EQ(fam(Family::K, 3, 4), 2000);
    EXPECT_EQ(fam(Family::KO, 3, 4), 2000);
    EXPECT_EQ(fam(Family::W, 3, 3), 6000);
    EXPECT_THROW(fam(Family::HO, 3, 4), std::invalid_argument);
    EXPECT_THROW(fam(Family::SKO, 3, 4), std::invalid_argument);
    EXPECT_THROW(fam(Family::W, 2, 3), std::invalid_argument);
}

TEST(Formulas, DerOut)
{
    EXPECT_EQ(dim_der_out(5, 3, {1, 1, 1}, 2), 5);
    EXPECT_EQ(dim_der_out(5, 3, {1, 1, 1}, 3), 8);
    for (std::uint32_t lam = 0; lam < 5; ++lam) {
        BigInt lhs = l_even(5, 3, lam) + l_odd(5, 3, lam) + 3 - 3 + 1 + delta_prime(5, 3, lam);
        EXPECT_EQ(lhs, dim_der_out(5, 3, {1, 1, 1}, lam)) << lam;
    }
    // each extra t_i - 1 adds one partial power
    EXPECT_EQ(dim_der_out(5, 3, {2, 1, 1}, 2), dim_der_out(5, 3, {1, 1, 1}, 2) + 1);
}

TEST(Formulas, SignOfTuple)
{
    EXPECT_EQ(sgn({1, 2, 3}), 1);
    EXPECT_EQ(sgn({2, 1}), -1);
    EXPECT_EQ(sgn({3, 1, 2}), 1);
    EXPECT_EQ(sgn({}), 1);
    EXPECT_THROW(sgn({1, 1}), std::invalid_argument);
}

TEST(Formulas, SymmetricAndBinomial)
{
    std::vector<BigInt> xs{2, 3, 5};
    EXPECT_EQ(elementary_symmetric(xs, 0), 1);
    EXPECT_EQ(elementary_symmetric(xs, 1), 10);
    EXPECT_EQ(elementary_symmetric(xs, 2), 31);
    EXPECT_EQ(elementary_symmetric(xs, 3), 30);
    EXPECT_EQ(elementary_symmetric(xs, 4), 0);
    EXPECT_EQ(binomial(7, 3), 35);
    EXPECT_EQ(binomial(3, 4), 0);
}

TEST(Formulas, ParseFamily)
{
    EXPECT_EQ(parse_family("SHO"), Family::SHO);
    EXPECT_STREQ(family_name(Family::KO), "KO");
    EXPECT_THROW(parse_family("XYZ"), std::invalid_argument);
}

TEST(Formulas, CorollaryFields)
{
    CorollaryReport r = corollary_parity_check(5);
    EXPECT_EQ(r.n, 7u);
    EXPECT_EQ(r.lambda, 2u);
    EXPECT_GT(r.sko_samples, 0u);
    EXPECT_TRUE(r.families_all_even()) << r.first_even_family;
    EXPECT_TRUE(r.der_out_nonabelian());
    // the printed sum over S_2 breaks oddness; without it every sample is odd
    EXPECT_EQ(r.sko_odd, 0u);
    EXPECT_EQ(r.reduced_odd, r.sko_samples);
    EXPECT_EQ(r.unit_t_dim, 9999964);
    EXPECT_THROW(corollary_parity_check(9), std::invalid_argument);
}

TEST(Formulas, ComparisonCsv)
{
    std::string csv = comparison_csv(5);
    std::istringstream is(csv);
    std::string line;
    std::getline(is, line);
    EXPECT_EQ(line, "family,p,m,n,t,lambda,dim");
    for (const char* row : {"W,5,3,3,1;1;1,,6000", "S,5,3,3,1;1;1,,4998", "H,5,3,3,1;1;1,,998",
                            "K,5,3,3,1;1;1,,1000", "HO,5,3,3,1;1;1,,999", "SHO,5,3,3,1;1;1,,494",
                            "KO,5,3,4,1;1;1,,2000", "SKO,5,3,4,1;1;1,2,999"})
        EXPECT_NE(csv.find(std::string(row) + "\n"), std::string::npos) << row;
    EXPECT_THROW(comparison_csv(4), std::invalid_argument);
}
