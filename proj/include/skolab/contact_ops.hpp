#pragma once

#include "skolab/superalgebra.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace skolab {

// i' for i in 1..2n
std::uint32_t prime_index(std::uint32_t n, std::uint32_t i);
// parity of x_i, i in 1..2n+1
int mu(std::uint32_t n, std::uint32_t i);

SuperElement euler(const SuperElement& a);
SuperElement laplacian(const SuperElement& a);
// Delta_i = d_i d_{i'} (inner d_{i'} first)
SuperElement laplacian_i(std::uint32_t i, const SuperElement& a);
SuperElement t_h_apply(const SuperElement& a, const SuperElement& b);
SuperElement d_ko_apply(const SuperElement& a, const SuperElement& b);
SuperElement div_lambda(const SuperElement& a);
SuperElement nabla(std::uint32_t i, const SuperElement& a);
// Gamma_i^j = nabla_j Delta_i
SuperElement gamma(std::uint32_t i, std::uint32_t j, const SuperElement& a);

// |alpha| + |u| mod p. Throws when m carries x_{2n+1}.
FieldScalar zd(const AlgebraContext& ctx, const Monomial& m);

struct IndexReport {
    std::vector<std::uint32_t> I;
    std::vector<std::uint32_t> Itilde;
    std::optional<std::uint32_t> qmin;

    bool in_dstar() const { return !I.empty() && !Itilde.empty(); }
};
// x_{2n+1} is ignored.
IndexReport index_report(const AlgebraContext& ctx, const Monomial& m);

// a = a0 * x_j + a1 with d_j a0 = d_j a1 = 0; j odd index in n+1..2n+1.
std::pair<SuperElement, SuperElement> xj_decompose(const SuperElement& a, std::uint32_t j);

SuperElement bracket(const SuperElement& a, const SuperElement& b);
// [m_a, m_b] for basis monomials, scaled by c, appended to acc.
void bracket_monomials(const AlgebraContext& ctx, std::uint32_t ia, std::uint32_t ib, FieldScalar c,
                       TermAccumulator& acc);

// Parity of a as an element of the Lie superalgebra: shifted by one from the
// parity in O, since the bracket has odd degree on O.
Parity lie_parity(const SuperElement& a);
int lie_parity_bit(const AlgebraContext& ctx, std::uint32_t idx);

} // namespace skolab
