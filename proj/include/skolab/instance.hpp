#pragma once

#include "skolab/linalg.hpp"
#include "skolab/spanning.hpp"

#include <memory>

namespace skolab {

// The derived series g'' > g' > g of one parameter choice, plus the
// generating set. Built once and shared by the suites.
struct Instance {
    std::unique_ptr<AlgebraContext> ctx;
    std::unique_ptr<Subspace> g2;  // ker div_lambda
    std::unique_ptr<Subspace> g1;  // [g'', g'']
    std::unique_ptr<Subspace> g;   // [g', g']
    std::vector<SuperElement> generators;

    const AlgebraContext& context() const { return *ctx; }
};

std::shared_ptr<const Instance> build_instance(const AlgebraParams& params, const ClosureOptions& opt = {});

Subspace divergence_kernel(const AlgebraContext& ctx);

} // namespace skolab
