#include "skolab/skolab.h"

#include "skolab/formulas.hpp"
#include "skolab/instance.hpp"
#include "skolab/suites.hpp"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <mutex>
#include <new>
#include <string>

struct skolab_context {
    std::unique_ptr<skolab::AlgebraContext> ctx;
    std::shared_ptr<const skolab::Instance> inst;
    std::mutex mu;
};

namespace {

thread_local std::string g_last_error;

skolab_status fail(skolab_status s, std::string msg)
{
    g_last_error = std::move(msg);
    return s;
}

char* dup(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class F>
skolab_status guarded(F&& f)
{
    try {
        g_last_error.clear();
        return f();
    } catch (const std::invalid_argument& e) {
        return fail(SKOLAB_INVALID_ARGUMENT, e.what());
    } catch (const std::out_of_range& e) {
        return fail(SKOLAB_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(SKOLAB_INTERNAL, e.what());
    } catch (...) {
        return fail(SKOLAB_INTERNAL, "unknown error");
    }
}

std::vector<std::uint32_t> to_vec(const uint32_t* t, size_t len)
{
    if (len && !t) throw std::invalid_argument("t is null");
    return std::vector<std::uint32_t>(t, t + len);
}

} // namespace

extern "C" {

const char* skolab_version(void) { return "0.1.0"; }

const char* skolab_last_error(void) { return g_last_error.c_str(); }

void skolab_string_free(char* s) { std::free(s); }

skolab_status skolab_context_create(uint32_t p, uint32_t n, const uint32_t* t, size_t t_len, uint32_t lambda,
                                    skolab_context** out)
{
    if (!out) return fail(SKOLAB_NULL_POINTER, "out is null");
    *out = nullptr;
    return guarded([&] {
        skolab::RunConfig cfg;
        cfg.p = p;
        cfg.n = n;
        cfg.t = to_vec(t, t_len);
        cfg.lambdas = {lambda};
        skolab::validate(cfg);
        auto c = std::make_unique<skolab_context>();
        c->ctx = std::make_unique<skolab::AlgebraContext>(skolab::AlgebraParams{p, n, cfg.t, lambda});
        *out = c.release();
        return SKOLAB_OK;
    });
}

void skolab_context_destroy(skolab_context* ctx) { delete ctx; }

skolab_status skolab_basis_size(const skolab_context* ctx, uint64_t* out)
{
    if (!ctx || !out) return fail(SKOLAB_NULL_POINTER, "null argument");
    *out = ctx->ctx->dimension();
    return SKOLAB_OK;
}

skolab_status skolab_derived_dims(skolab_context* ctx, uint64_t* g2, uint64_t* g1, uint64_t* g)
{
    if (!ctx) return fail(SKOLAB_NULL_POINTER, "null context");
    return guarded([&] {
        std::lock_guard<std::mutex> lock(ctx->mu);
        if (!ctx->inst) ctx->inst = skolab::build_instance(ctx->ctx->params());
        if (g2) *g2 = ctx->inst->g2->dim();
        if (g1) *g1 = ctx->inst->g1->dim();
        if (g) *g = ctx->inst->g->dim();
        return SKOLAB_OK;
    });
}

skolab_status skolab_spanning_json(const skolab_context* ctx, char** out)
{
    if (!ctx || !out) return fail(SKOLAB_NULL_POINTER, "null argument");
    *out = nullptr;
    return guarded([&] {
        *out = dup(skolab::spanning_json(*ctx->ctx));
        return SKOLAB_OK;
    });
}

skolab_status skolab_dim_family(const char* family, uint32_t p, uint32_t m, uint32_t n, const uint32_t* t,
                                size_t t_len, int32_t lambda, char** out)
{
    if (!family || !out) return fail(SKOLAB_NULL_POINTER, "null argument");
    *out = nullptr;
    return guarded([&] {
        if (p <= 3 || !skolab::is_prime(p)) throw std::invalid_argument("p must be an odd prime > 3");
        skolab::FamilyParams fp;
        fp.family = skolab::parse_family(family);
        fp.p = p;
        fp.m = m;
        fp.n = n;
        fp.t = to_vec(t, t_len);
        if (lambda >= 0) fp.lambda = std::uint32_t(lambda);
        *out = dup(skolab::dim_family(fp).str());
        return SKOLAB_OK;
    });
}

skolab_status skolab_compare_csv(uint32_t p, char** out)
{
    if (!out) return fail(SKOLAB_NULL_POINTER, "out is null");
    *out = nullptr;
    return guarded([&] {
        if (p <= 3 || !skolab::is_prime(p)) throw std::invalid_argument("p must be an odd prime > 3");
        *out = dup(skolab::comparison_csv(p));
        return SKOLAB_OK;
    });
}

void skolab_run_options_init(skolab_run_options* o)
{
    if (!o) return;
    *o = skolab_run_options{5, 3, "1,1,1", "2", 1, nullptr, nullptr, 0, 0, 0};
}

skolab_status skolab_run_suites(const skolab_run_options* o, char** report, int* all_pass)
{
    if (!o || !report) return fail(SKOLAB_NULL_POINTER, "null argument");
    *report = nullptr;
    return guarded([&] {
        skolab::RunConfig cfg;
        cfg.p = o->p;
        cfg.n = o->n;
        cfg.t = skolab::parse_t(o->t ? o->t : "");
        cfg.lambdas = skolab::parse_lambda(o->lambda ? o->lambda : "", o->p, &cfg.all_lambdas);
        cfg.seed = o->seed;
        cfg.suites = skolab::parse_suites(o->suites ? o->suites : "all");
        cfg.parallel = o->parallel != 0;
        cfg.timings = o->timings != 0;
        cfg.derivation_samples = o->derivation_samples;
        auto fmt = skolab::parse_format(o->format ? o->format : "json");
        skolab::validate(cfg);
        skolab::Report r = skolab::run_suites(cfg);
        *report = dup(skolab::render_report(r, fmt, cfg.timings));
        if (all_pass) *all_pass = r.all_pass() ? 1 : 0;
        return SKOLAB_OK;
    });
}

} // extern "C"
