#pragma once

#include "skolab/contact_ops.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace skolab {

enum class SpanKind { S1, S2, S3, S4, S5, X, G, unit };
const char* span_kind_name(SpanKind k);

struct SpanningLabel {
    SpanKind kind = SpanKind::unit;
    std::vector<std::uint32_t> alpha;
    std::vector<std::uint32_t> u;
    std::optional<std::uint32_t> q;
    std::vector<std::uint32_t> tuple;

    std::string render() const;
};

struct LabelledElement {
    SpanningLabel label;
    SuperElement element;
};

// x^(alpha) x^u as an element. u is read as an ordered product of odd
// variables, so an unsorted u picks up the sign of its sorting permutation.
// Throws on repeated odd indices or alpha out of range.
SuperElement monomial_element(const AlgebraContext& ctx, const std::vector<std::uint32_t>& alpha,
                              const std::vector<std::uint32_t>& u, bool eps = false);

SuperElement build_A(const AlgebraContext& ctx, const std::vector<std::uint32_t>& alpha,
                     const std::vector<std::uint32_t>& u, std::uint32_t q);
SuperElement build_B(const AlgebraContext& ctx, const std::vector<std::uint32_t>& alpha,
                     const std::vector<std::uint32_t>& u, std::uint32_t q);

enum class EVariant { E, Eq, E2n1, E2n1q, G2n1q };
// E(a,u), E(a,u,q), E(a,u,2n+1), E(a,u,2n+1,q), G(a,u,2n+1,q) as elements of O.
SuperElement build_E(const AlgebraContext& ctx, EVariant v, const std::vector<std::uint32_t>& alpha,
                     const std::vector<std::uint32_t>& u, std::optional<std::uint32_t> q = std::nullopt);

// k in 0..n with n*lambda - n + 2k + l = 0 in GF(p)
std::vector<std::uint32_t> sigma_set(std::uint32_t p, std::uint32_t n, std::uint32_t lambda, int l);
std::vector<std::uint32_t> sigma_set(const AlgebraContext& ctx, int l);

// Strictly increasing r-tuples from 1..n.
std::vector<std::vector<std::uint32_t>> tuples_J(std::uint32_t n, std::uint32_t r);
SuperElement build_X(const AlgebraContext& ctx, const std::vector<std::uint32_t>& tuple);
// G(pi - e_1, <2',...,n'>, 2n+1, 1)
SuperElement exceptional_G(const AlgebraContext& ctx);

// Y(f, q) for parity and degree homogeneous f without x_{2n+1}.
SuperElement build_Y(const SuperElement& f, std::uint32_t q);

struct SpanningSets {
    std::map<SpanKind, std::vector<LabelledElement>> sets;  // S1..S5
    LabelledElement unit;
};
SpanningSets build_S_sets(const AlgebraContext& ctx);

struct GeneratorSets {
    std::vector<LabelledElement> T;
    std::vector<LabelledElement> S;
    std::size_t distinct_T = 0;  // after merging the k_i = 0 duplicates
};
GeneratorSets generator_sets(const AlgebraContext& ctx);
// T, S and the unit, duplicates removed.
std::vector<SuperElement> generator_elements(const AlgebraContext& ctx);

// ---- bracket identities of the spanning apparatus

struct IdentityResult {
    std::string name;
    std::size_t admissible = 0;
    std::size_t matched = 0;
    std::string rule;      // admissibility rule in words
    std::string witness;   // first mismatch, if any
    std::string note;

    bool pass() const { return matched == admissible; }
};

// Checks the closed-form bracket identities by direct computation over all
// admissible index choices. Needs n >= 3.
std::vector<IdentityResult> check_bracket_identities(const AlgebraContext& ctx);

struct SplittingResult {
    std::size_t admissible = 0;
    std::size_t matched = 0;
    int global_sign = 0;          // +1/-1 if one sign fits every instance, 0 otherwise
    std::size_t sign_plus = 0;    // instances matching with +gamma
    std::size_t sign_minus = 0;   // instances matching with -gamma
    std::size_t gamma_zero = 0;   // instances with gamma = 0 and vanishing bracket
    std::string witness;
};
// Enumerates all splittings (alpha1 + alpha2, u1 + u2) of every (alpha, u). The
// right hand side carries u as the ordered product u1 u2.
SplittingResult check_splitting_identity(const AlgebraContext& ctx);

} // namespace skolab
