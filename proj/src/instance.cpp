#include "skolab/instance.hpp"

namespace skolab {

Subspace divergence_kernel(const AlgebraContext& ctx)
{
    return kernel_by_block(ctx, [&](std::uint32_t idx) { return div_lambda(SuperElement::basis(ctx, idx)).terms(); });
}

std::shared_ptr<const Instance> build_instance(const AlgebraParams& params, const ClosureOptions& opt)
{
    auto inst = std::make_shared<Instance>();
    inst->ctx = std::make_unique<AlgebraContext>(params);
    const AlgebraContext& ctx = *inst->ctx;
    inst->g2 = std::make_unique<Subspace>(divergence_kernel(ctx));
    inst->g1 = std::make_unique<Subspace>(derived_subalgebra(*inst->g2, opt));
    inst->g = std::make_unique<Subspace>(derived_subalgebra(*inst->g1, opt));
    inst->generators = generator_elements(ctx);
    return inst;
}

} // namespace skolab
