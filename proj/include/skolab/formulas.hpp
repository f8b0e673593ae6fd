#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace skolab {

using BigInt = boost::multiprecision::cpp_int;

enum class Family { W, S, H, K, HO, KO, SHO, SKO };
const char* family_name(Family f);
// Throws std::invalid_argument for unknown names.
Family parse_family(const std::string& name);

// Family X(m, n; t). m counts even variables and t has m entries. HO and SHO
// need n = m, KO and SKO need n = m + 1; SKO also needs lambda.
struct FamilyParams {
    Family family = Family::W;
    std::uint32_t p = 5;
    std::uint32_t m = 3;
    std::uint32_t n = 3;
    std::vector<std::uint32_t> t;
    std::optional<std::uint32_t> lambda;
};

// Elementary symmetric polynomial e_l of the values.
BigInt elementary_symmetric(const std::vector<BigInt>& xs, std::size_t l);

BigInt dim_sko(std::uint32_t p, std::uint32_t n, const std::vector<std::uint32_t>& t, std::uint32_t lambda);
BigInt dim_family(const FamilyParams& fp);

int delta_prime(std::uint32_t p, std::uint32_t n, std::uint32_t lambda);
BigInt l_even(std::uint32_t p, std::uint32_t n, std::uint32_t lambda);
BigInt l_odd(std::uint32_t p, std::uint32_t n, std::uint32_t lambda);
BigInt dim_der_out(std::uint32_t p, std::uint32_t n, const std::vector<std::uint32_t>& t, std::uint32_t lambda);
// Sign of prod_{j<l} (i_l - i_j). Throws std::invalid_argument on repeats.
int sgn(const std::vector<std::int64_t>& tuple);
BigInt binomial(std::uint32_t n, std::uint32_t k);

struct CorollaryReport {
    std::uint32_t p = 0;
    std::uint32_t n = 0;         // p + 2
    std::uint32_t lambda = 0;    // (p - 1) / 2
    std::vector<std::uint32_t> sigma2;
    std::size_t sko_samples = 0;
    std::size_t sko_odd = 0;
    // the same expression with the sigma_2 sum dropped
    std::size_t reduced_odd = 0;
    BigInt unit_t_dim;           // t = (1, ..., 1)
    std::size_t family_samples = 0;
    std::size_t family_even = 0;
    std::string first_even_family;  // first family sample that is odd, if any
    int delta = 0;
    std::size_t sigma0_size = 0;
    BigInt der_out_dim;

    bool sko_all_odd() const { return sko_odd == sko_samples; }
    bool families_all_even() const { return family_even == family_samples; }
    // Der_out contains a nonzero bracket V_X x V_Y -> V_03
    bool der_out_nonabelian() const { return delta == 1 && !sigma2.empty() && sigma0_size > 0; }
};
CorollaryReport corollary_parity_check(std::uint32_t p);

// One row per (family, params, dim).
std::string comparison_csv(std::uint32_t p);

} // namespace skolab
