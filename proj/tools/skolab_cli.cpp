// skolab command line front end. Talks to the core only through skolab.h.
#include "skolab/skolab.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

// exit codes: 0 all claims hold, 1 a claim failed, 2 internal error, 64 usage error
constexpr int kClaimFailed = 1;
constexpr int kInternal = 2;
constexpr int kUsage = 64;

struct Owned {
    char* s = nullptr;
    ~Owned() { skolab_string_free(s); }
};

int report_error(skolab_status st)
{
    std::cerr << "skolab: " << skolab_last_error() << "\n";
    return st == SKOLAB_INVALID_ARGUMENT ? kUsage : kInternal;
}

bool emit(const std::string& text, const std::string& out)
{
    if (out.empty() || out == "-") {
        std::cout << text;
        return true;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) {
        std::cerr << "skolab: cannot write " << out << "\n";
        return false;
    }
    f << text;
    return bool(f);
}

std::vector<uint32_t> parse_list(const std::string& s)
{
    std::vector<uint32_t> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 9)
            throw CLI::ValidationError("--t", "expected a comma list of positive integers, got '" + s + "'");
        v.push_back(uint32_t(std::stoul(item)));
    }
    return v;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Verification suites and dimension formulas for the special odd contact superalgebras "
                 "SKO(n,n+1;lambda,t) over GF(p)"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(skolab_version()));

    // verify
    skolab_run_options ro;
    skolab_run_options_init(&ro);
    std::string v_t = "1,1,1", v_lambda = "2", v_suite = "all", v_format = "json", v_out;
    bool v_parallel = false, v_timings = false;
    auto* verify = app.add_subcommand("verify", "run verification suites and print a report");
    verify->add_option("--p", ro.p, "field characteristic, prime > 3")->capture_default_str();
    verify->add_option("--n", ro.n, "n (2n+1 variables), n >= 3")->capture_default_str();
    verify->add_option("--t", v_t, "comma list of n heights")->capture_default_str();
    verify->add_option("--lambda", v_lambda, "0..p-1, or all")->capture_default_str();
    verify->add_option("--seed", ro.seed, "seed for sampled checks")->capture_default_str();
    verify->add_option("--suite", v_suite, "comma list of suites, or all")->capture_default_str();
    verify->add_option("--format", v_format, "json, csv or text")->capture_default_str();
    verify->add_option("--out", v_out, "write the report here instead of stdout");
    verify->add_option("--samples", ro.derivation_samples,
                       "random basis pairs per derivation-law check (0: all pairs)")
        ->capture_default_str();
    verify->add_flag("--parallel", v_parallel, "use worker threads for pair checks");
    verify->add_flag("--timings", v_timings, "include per-check milliseconds");

    // dim
    std::string d_family = "SKO", d_t = "1,1,1";
    uint32_t d_p = 5, d_n = 0;
    int32_t d_lambda = 2;
    auto* dim = app.add_subcommand("dim", "closed-form dimension of X(m,n;t); m is the length of t");
    dim->add_option("--family", d_family, "W, S, H, K, HO, KO, SHO or SKO")->capture_default_str();
    dim->add_option("--p", d_p)->capture_default_str();
    dim->add_option("--t", d_t, "heights of the m even variables")->capture_default_str();
    dim->add_option("--n", d_n, "odd variables (default m, or m+1 for KO and SKO)");
    dim->add_option("--lambda", d_lambda, "SKO only")->capture_default_str();

    // spanning
    uint32_t s_p = 5, s_n = 3, s_lambda = 2;
    std::string s_t = "1,1,1", s_out;
    auto* span = app.add_subcommand("spanning", "list the spanning sets S1..S5 as JSON");
    span->add_option("--p", s_p)->capture_default_str();
    span->add_option("--n", s_n)->capture_default_str();
    span->add_option("--t", s_t)->capture_default_str();
    span->add_option("--lambda", s_lambda)->capture_default_str();
    span->add_option("--out", s_out);

    // compare
    uint32_t c_p = 5;
    std::string c_out;
    auto* cmp = app.add_subcommand("compare", "CSV of Cartan type dimensions next to SKO");
    cmp->add_option("--p", c_p)->capture_default_str();
    cmp->add_option("--out", c_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    }

    if (*verify) {
        ro.t = v_t.c_str();
        ro.lambda = v_lambda.c_str();
        ro.suites = v_suite.c_str();
        ro.format = v_format.c_str();
        ro.parallel = v_parallel;
        ro.timings = v_timings;
        Owned rep;
        int all_pass = 0;
        skolab_status st = skolab_run_suites(&ro, &rep.s, &all_pass);
        if (st != SKOLAB_OK) return report_error(st);
        if (!emit(rep.s, v_out)) return kInternal;
        if (!v_out.empty() && v_out != "-")
            std::cout << (all_pass ? "all claims hold" : "some claims fail") << "; report written to " << v_out << "\n";
        return all_pass ? 0 : kClaimFailed;
    }
    if (*dim) {
        std::vector<uint32_t> t;
        try {
            t = parse_list(d_t);
        } catch (const CLI::ParseError& e) {
            return app.exit(e), kUsage;
        }
        uint32_t m = uint32_t(t.size());
        uint32_t n = d_n;
        bool sko = d_family == "SKO" || d_family == "sko", ko = d_family == "KO" || d_family == "ko";
        if (!n) n = (sko || ko) ? m + 1 : m;
        Owned out;
        skolab_status st = skolab_dim_family(d_family.c_str(), d_p, m, n, t.data(), t.size(), sko ? d_lambda : -1,
                                             &out.s);
        if (st != SKOLAB_OK) return report_error(st);
        std::cout << out.s << "\n";
        return 0;
    }
    if (*span) {
        std::vector<uint32_t> t;
        try {
            t = parse_list(s_t);
        } catch (const CLI::ParseError& e) {
            return app.exit(e), kUsage;
        }
        skolab_context* ctx = nullptr;
        skolab_status st = skolab_context_create(s_p, s_n, t.data(), t.size(), s_lambda, &ctx);
        if (st != SKOLAB_OK) return report_error(st);
        std::unique_ptr<skolab_context, void (*)(skolab_context*)> guard(ctx, skolab_context_destroy);
        Owned out;
        st = skolab_spanning_json(ctx, &out.s);
        if (st != SKOLAB_OK) return report_error(st);
        return emit(out.s, s_out) ? 0 : kInternal;
    }
    if (*cmp) {
        Owned out;
        skolab_status st = skolab_compare_csv(c_p, &out.s);
        if (st != SKOLAB_OK) return report_error(st);
        if (!emit(out.s, c_out)) return kInternal;
        if (!c_out.empty() && c_out != "-") std::cout << "wrote " << c_out << "\n";
        return 0;
    }
    return kUsage;
}
