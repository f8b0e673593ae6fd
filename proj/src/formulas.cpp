#include "skolab/formulas.hpp"

#include "skolab/primefield.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace skolab {

namespace {

BigInt pow_big(std::uint64_t b, std::uint64_t e)
{
    BigInt r = 1;
    for (std::uint64_t i = 0; i < e; ++i) r *= b;
    return r;
}

std::vector<BigInt> pis(std::uint32_t p, const std::vector<std::uint32_t>& t)
{
    std::vector<BigInt> out;
    for (std::uint32_t ti : t) out.push_back(pow_big(p, ti) - 1);
    return out;
}

std::uint64_t sum_t(const std::vector<std::uint32_t>& t)
{
    std::uint64_t s = 0;
    for (auto x : t) s += x;
    return s;
}

std::vector<std::uint32_t> sigma(std::uint32_t p, std::uint32_t n, std::uint32_t lambda, int l)
{
    std::vector<std::uint32_t> out;
    for (std::uint32_t k = 0; k <= n; ++k) {
        std::int64_t v = (std::int64_t(n) * lambda - n + 2 * std::int64_t(k) + l) % std::int64_t(p);
        if (v == 0) out.push_back(k);
    }
    return out;
}

void check_common(std::uint32_t p, std::uint32_t n, const std::vector<std::uint32_t>& t)
{
    if (p <= 3 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime > 3");
    if (t.size() != n) throw std::invalid_argument("t must have n entries");
    for (auto x : t)
        if (x < 1) throw std::invalid_argument("every t_i must be >= 1");
}

// 2 sum_{l=2}^n (2^{n-1} - 2^{n-l}) e_l(pi) + prod (pi_j + 2), without the factor 2
BigInt sho_core(std::uint32_t p, std::uint32_t n, const std::vector<std::uint32_t>& t)
{
    auto pi = pis(p, t);
    BigInt s = 0;
    for (std::uint32_t l = 2; l <= n; ++l)
        s += (pow_big(2, n - 1) - pow_big(2, n - l)) * elementary_symmetric(pi, l);
    BigInt prod = 1;
    for (const auto& x : pi) prod *= x + 2;
    return s + prod;
}

} // namespace

const char* family_name(Family f)
{
    switch (f) {
    case Family::W: return "W";
    case Family::S: return "S";
    case Family::H: return "H";
    case Family::K: return "K";
    case Family::HO: return "HO";
    case Family::KO: return "KO";
    case Family::SHO: return "SHO";
    case Family::SKO: return "SKO";
    }
    return "?";
}

Family parse_family(const std::string& name)
{
    for (Family f : {Family::W, Family::S, Family::H, Family::K, Family::HO, Family::KO, Family::SHO, Family::SKO})
        if (name == family_name(f)) return f;
    throw std::invalid_argument("unknown family '" + name + "' (expected W, S, H, K, HO, KO, SHO or SKO)");
}

BigInt binomial(std::uint32_t n, std::uint32_t k)
{
    if (k > n) return 0;
    BigInt r = 1;
    for (std::uint32_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

BigInt elementary_symmetric(const std::vector<BigInt>& xs, std::size_t l)
{
    std::vector<BigInt> e(l + 1, 0);
    e[0] = 1;
    for (const auto& x : xs)
        for (std::size_t k = l; k >= 1; --k) e[k] += e[k - 1] * x;
    return e[l];
}

int delta_prime(std::uint32_t p, std::uint32_t n, std::uint32_t lambda)
{
    return (std::uint64_t(n) * lambda + 1) % p == 0 ? 1 : 0;
}

BigInt dim_sko(std::uint32_t p, std::uint32_t n, const std::vector<std::uint32_t>& t, std::uint32_t lambda)
{
    check_common(p, n, t);
    if (n < 3) throw std::invalid_argument("dim_sko needs n >= 3");
    BigInt d = 2 * sho_core(p, n, t);
    for (std::uint32_t k : sigma(p, n, lambda, 2)) d -= binomial(n, k);
    d -= pow_big(2, n);
    d -= delta_prime(p, n, lambda);
    return d;
}

BigInt dim_family(const FamilyParams& fp)
{
    const std::uint32_t p = fp.p, m = fp.m, n = fp.n;
    check_common(p, m, fp.t);
    if (m <= 2 || n <= 2) throw std::invalid_argument("family formulas need m, n > 2");
    BigInt pt = pow_big(p, sum_t(fp.t));
    BigInt two_n = pow_big(2, n);
    auto need = [&](bool ok, const char* what) {
        if (!ok) throw std::invalid_argument(what);
    };
    switch (fp.family) {
    case Family::W: return BigInt(m + n) * two_n * pt;
    case Family::H: return two_n * pt - 2;
    case Family::K: {
        std::int64_t r = (std::int64_t(n) - m - 3) % std::int64_t(p);
        BigInt d = two_n * pt;
        return r == 0 ? BigInt(d - 1) : d;
    }
    case Family::S: return BigInt(m + n - 1) * two_n * pt - m + 1;
    case Family::HO:
        need(n == m, "HO(m,m) needs n = m");
        return pow_big(2, m) * pt - 1;
    case Family::SHO:
        need(n == m, "SHO(n,n) needs n = m");
        return sho_core(p, m, fp.t) - pow_big(2, m) - 2;
    case Family::KO:
        need(n == m + 1, "KO(n,n+1) needs n = m + 1");
        return pow_big(2, m + 1) * pt;
    case Family::SKO:
        need(n == m + 1, "SKO(n,n+1) needs n = m + 1");
        need(fp.lambda.has_value(), "SKO needs lambda");
        return dim_sko(p, m, fp.t, *fp.lambda % p);
    }
    throw std::invalid_argument("unknown family");
}

BigInt l_even(std::uint32_t p, std::uint32_t n, std::uint32_t lambda)
{
    BigInt s = 0;
    for (std::uint32_t k : sigma(p, n, lambda, 0))
        if ((n - k) % 2 == 0) s += binomial(n, k);
    for (std::uint32_t k : sigma(p, n, lambda, 2))
        if ((n - k) % 2 == 1) s += binomial(n, k);
    return s;
}

BigInt l_odd(std::uint32_t p, std::uint32_t n, std::uint32_t lambda)
{
    BigInt s = 0;
    for (std::uint32_t k : sigma(p, n, lambda, 0))
        if ((n - k) % 2 == 1) s += binomial(n, k);
    for (std::uint32_t k : sigma(p, n, lambda, 2))
        if ((n - k) % 2 == 0) s += binomial(n, k);
    return s;
}

BigInt dim_der_out(std::uint32_t p, std::uint32_t n, const std::vector<std::uint32_t>& t, std::uint32_t lambda)
{
    check_common(p, n, t);
    BigInt d = 0;
    for (std::uint32_t k : sigma(p, n, lambda, 0)) d += binomial(n, k);
    for (std::uint32_t k : sigma(p, n, lambda, 2)) d += binomial(n, k);
    d += BigInt(sum_t(t));
    d -= n;
    d += 1 + delta_prime(p, n, lambda);
    return d;
}

int sgn(const std::vector<std::int64_t>& tuple)
{
    int s = 1;
    for (std::size_t j = 0; j < tuple.size(); ++j)
        for (std::size_t l = j + 1; l < tuple.size(); ++l) {
            if (tuple[l] == tuple[j]) throw std::invalid_argument("sgn: repeated entry");
            if (tuple[l] < tuple[j]) s = -s;
        }
    return s;
}

namespace {

// all t in {1,2}^len
std::vector<std::vector<std::uint32_t>> t_grid(std::uint32_t len)
{
    std::vector<std::vector<std::uint32_t>> out;
    for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
        std::vector<std::uint32_t> t(len);
        for (std::uint32_t i = 0; i < len; ++i) t[i] = 1 + (mask >> i & 1u);
        out.push_back(t);
    }
    return out;
}

std::string join_t(const std::vector<std::uint32_t>& t)
{
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? ";" : "") + std::to_string(t[i]);
    return s;
}

} // namespace

CorollaryReport corollary_parity_check(std::uint32_t p)
{
    if (p <= 3 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime > 3");
    CorollaryReport r;
    r.p = p;
    r.n = p + 2;
    r.lambda = (p - 1) / 2;
    r.sigma2 = sigma(p, r.n, r.lambda, 2);
    for (const auto& t : t_grid(r.n)) {
        BigInt d = dim_sko(p, r.n, t, r.lambda);
        ++r.sko_samples;
        if (d % 2 == 1) ++r.sko_odd;
        BigInt reduced = d;
        for (std::uint32_t k : r.sigma2) reduced += binomial(r.n, k);
        if (reduced % 2 == 1) ++r.reduced_odd;
    }
    r.unit_t_dim = dim_sko(p, r.n, std::vector<std::uint32_t>(r.n, 1), r.lambda);

    for (std::uint32_t m = 3; m <= 5; ++m) {
        for (const auto& t : t_grid(m)) {
            std::vector<FamilyParams> ps;
            for (std::uint32_t n = 3; n <= 5; ++n) {
                ps.push_back({Family::W, p, m, n, t, {}});
                ps.push_back({Family::H, p, m, n, t, {}});
            }
            ps.push_back({Family::KO, p, m, m + 1, t, {}});
            ps.push_back({Family::SHO, p, m, m, t, {}});
            for (const auto& fp : ps) {
                ++r.family_samples;
                BigInt d = dim_family(fp);
                if (d % 2 == 0)
                    ++r.family_even;
                else if (r.first_even_family.empty())
                    r.first_even_family = std::string(family_name(fp.family)) + "(" + std::to_string(fp.m) + "," +
                                          std::to_string(fp.n) + ";" + join_t(t) + ")";
            }
        }
    }
    r.delta = delta_prime(p, r.n, r.lambda);
    r.sigma0_size = sigma(p, r.n, r.lambda, 0).size();
    r.der_out_dim = dim_der_out(p, r.n, std::vector<std::uint32_t>(r.n, 1), r.lambda);
    return r;
}

std::string comparison_csv(std::uint32_t p)
{
    if (p <= 3 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime > 3");
    std::ostringstream os;
    os << "family,p,m,n,t,lambda,dim\n";
    auto row = [&](const FamilyParams& fp) {
        os << family_name(fp.family) << ',' << fp.p << ',' << fp.m << ',' << fp.n << ',' << join_t(fp.t) << ',';
        if (fp.lambda) os << *fp.lambda;
        os << ',' << dim_family(fp) << '\n';
    };
    std::vector<std::vector<std::uint32_t>> ts{{1, 1, 1}, {2, 1, 1}, {1, 1, 1, 1}};
    for (const auto& t : ts) {
        std::uint32_t m = static_cast<std::uint32_t>(t.size());
        for (std::uint32_t n = 3; n <= 4; ++n)
            for (Family f : {Family::W, Family::S, Family::H, Family::K}) row({f, p, m, n, t, {}});
        row({Family::HO, p, m, m, t, {}});
        row({Family::SHO, p, m, m, t, {}});
        row({Family::KO, p, m, m + 1, t, {}});
        for (std::uint32_t lam = 0; lam < p; ++lam) row({Family::SKO, p, m, m + 1, t, lam});
    }
    std::vector<std::uint32_t> unit(p + 2, 1);
    row({Family::SKO, p, p + 2, p + 3, unit, (p - 1) / 2});
    return os.str();
}

} // namespace skolab
