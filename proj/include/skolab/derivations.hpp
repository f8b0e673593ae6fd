#pragma once

#include "skolab/instance.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace skolab {

// Multidegree of a homogeneous linear map: change of contact degree, of the
// weight vector and of parity.
struct BlockShift {
    int dcdeg = 0;
    std::vector<int> dw;
    int dpar = 0;

    friend bool operator==(const BlockShift&, const BlockShift&) = default;
    friend bool operator<(const BlockShift& a, const BlockShift& b)
    {
        if (a.dcdeg != b.dcdeg) return a.dcdeg < b.dcdeg;
        if (a.dpar != b.dpar) return a.dpar < b.dpar;
        return a.dw < b.dw;
    }
    std::string render() const;
};

// Shift of ad f for f inside the block b.
BlockShift ad_shift(const AlgebraContext& ctx, std::uint32_t block);
// Block reached from `from` by s, if it exists.
std::optional<std::uint32_t> shifted_block(const AlgebraContext& ctx, std::uint32_t from, const BlockShift& s);

class DerivationError : public std::runtime_error {
public:
    DerivationError(const std::string& what, std::string w) : std::runtime_error(what), witness(std::move(w)) {}
    std::string witness;
};

// Linear endomorphism of g, given by images of the basis of g.
struct EndoMap {
    std::string name;
    const Subspace* domain = nullptr;
    std::vector<SuperElement> images;  // one per domain->basis() vector
    int parity = 0;                    // parity as a map on the Lie superalgebra
    std::optional<BlockShift> shift;
    // Extension to arbitrary members of g. Defaults to going through coordinates.
    std::function<SuperElement(const SuperElement&)> apply;

    SuperElement operator()(const SuperElement& v) const;
    std::optional<int> gdeg_shift() const
    {
        if (!shift) return std::nullopt;
        return shift->dcdeg;
    }
};

// Images must lie in g. Throws DerivationError otherwise.
EndoMap endo_from_images(std::string name, const Subspace& g, std::vector<SuperElement> images, int parity,
                         std::optional<BlockShift> shift = std::nullopt);
// Map given by an operator on O that sends g into g.
EndoMap endo_from_operator(std::string name, const Subspace& g, std::function<SuperElement(const SuperElement&)> op,
                           int parity, std::optional<BlockShift> shift = std::nullopt);

// b -> [f, b]. f must be parity homogeneous and normalize g.
EndoMap ad_endo(const Subspace& g, const SuperElement& f);
// a -> d_i^{p^d}(a); 1 <= d <= t_i - 1.
EndoMap partial_power_endo(const Subspace& g, std::uint32_t i, std::uint32_t d);
// b -> gdeg(b) b
EndoMap degree_endo(const Subspace& g);

struct DerivationCheck {
    bool ok = true;
    std::size_t pairs = 0;
    std::string witness;
};
// Superderivation law on basis pairs of g: all unordered pairs when samples
// is 0, otherwise that many random pairs.
DerivationCheck is_superderivation(const EndoMap& phi, std::size_t samples = 0, std::uint64_t seed = 1,
                                   bool parallel = false);

// Rank of the maps modulo ad g, computed shift by shift in Hom(g, O)
// coordinates. Every map needs a shift.
std::size_t rank_modulo_inner(const Subspace& g, const std::vector<const EndoMap*>& maps);

struct Relation {
    std::string claim;
    bool pass = false;
    std::string computed;
};

struct OuterReport {
    std::vector<EndoMap> family;
    std::vector<DerivationCheck> law;
    std::size_t rank = 0;
    std::size_t formula = 0;
    std::vector<Relation> relations;

    bool all_derivations() const;
};

struct OuterOptions {
    std::size_t samples = 0;  // 0: exhaustive law check
    std::uint64_t seed = 1;
    bool parallel = false;
};
OuterReport outer_der_suite(const Instance& inst, const OuterOptions& opt = {});

struct NormalizerReport {
    std::size_t nor_dim = 0;
    std::size_t cen_dim = 0;
    std::size_t g2_dim = 0;
    bool g2_inside = false;
    bool h_inside = false;
    std::size_t sampled = 0;
    std::size_t sampled_ok = 0;
    std::optional<Subspace> nor;
};
// Nor = {f in O : [f, y] in g for all generators y}, Cen = {f in O : [f, y] = 0
// for all generators y}. Random pairs (f in Nor, y in g) are checked on top.
NormalizerReport normalizer_centralizer(const Instance& inst, std::size_t samples = 64, std::uint64_t seed = 1);

struct GradedDerReport {
    int shift = 0;
    std::size_t dim = 0;
    std::size_t multidegrees = 0;  // multidegrees with at least one unknown
    std::vector<std::pair<BlockShift, std::size_t>> pieces;  // nonzero pieces
};
// Dimension of the space of superderivations of g of Z-degree `shift`,
// solved per multidegree from the values on the generators.
GradedDerReport graded_der_dimension(const Instance& inst, int shift);

} // namespace skolab
