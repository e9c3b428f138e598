/* cphi6: exact q-series verification for the 6-colored Frobenius congruence
 * family.  Subcommands: expand (eta quotient heads), verify (named suites),
 * report (schema sample).  Exit codes: 0 pass, 1 verification failure,
 * 2 usage or configuration error. */

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "cphi6/config.hpp"
#include "cphi6/etaq.hpp"
#include "cphi6/report.hpp"
#include "cphi6/suites.hpp"

namespace {

int cmd_expand(const std::string &quotient, long n, bool poch) {
    using namespace cphi6;
    const ExactRing Z;
    try {
        const EtaQuotient eq = parse_eta_quotient(quotient);
        Series<ExactRing> f(Z, 0);
        if (poch) {
            f = expand_mantissa(eq, Z, n);
        } else {
            const Rational qo = q_order(eq);
            if (!qo.is_integer()) {
                std::cerr << "error: non-integral q-prefactor " << qo.num << "/" << qo.den
                          << "; pass --poch to expand the mantissa product instead\n";
                return 2;
            }
            f = expand_eta(eq, Z, qo.num + n);
        }
        for (long i = f.ord(); i < f.prec(); ++i)
            std::cout << i << ": " << f.coeff(i) << "\n";
        return 0;
    } catch (const series_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_verify(const std::string &suite, const cphi6::Config &cfg) {
    cphi6::Report rep;
    try {
        rep = cphi6::run_suite(suite, cfg);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cout << (cfg.json ? cphi6::to_json(rep) : cphi6::to_text(rep)) << "\n";
    return rep.pass ? 0 : 1;
}

int cmd_report(bool json) {
    cphi6::Report rep;
    rep.suite = "empty";
    std::cout << (json ? cphi6::to_json(rep) : cphi6::to_text(rep)) << "\n";
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"exact q-series verification for the cphi6 congruence family"};
    app.require_subcommand(1);

    std::string quotient;
    long head_n = 200;
    bool poch = false;
    CLI::App *expand = app.add_subcommand("expand", "expand an eta quotient as a q-series");
    expand->add_option("quotient", quotient, "factor list n:e[,n:e...], e.g. 12:4,2:2,6:-2,4:-4")
        ->required();
    expand->add_option("--n", head_n, "number of coefficients to print")
        ->check(CLI::Range(1L, 1000000L));
    expand->add_flag("--poch", poch,
                     "expand the mantissa product prod (q^n;q^n)^e, dropping the q-prefactor");

    std::string suite;
    cphi6::Config cfg;
    CLI::App *verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "one of: group1 appendix modeq tower arrays lemma theorem known all")
        ->required()
        ->check(CLI::IsMember(cphi6::suite_names()));
    verify->add_option("--precision", cfg.N, "base q-precision of the identity suites")
        ->check(CLI::Range(32L, 1000000L));
    verify->add_option("--mod-exp", cfg.K, "congruence scans run mod 3^K")
        ->check(CLI::Range(4, 38));
    verify->add_option("--alpha-max", cfg.alpha_max, "highest alpha in the theorem scan")
        ->check(CLI::Range(1, 10));
    verify->add_option("--n-max", cfg.n_max, "residue classes scanned per alpha")
        ->check(CLI::Range(0L, 1000000L));
    verify->add_option("--m-max", cfg.m_max, "array rows scanned per k")
        ->check(CLI::Range(0L, 2000L));
    verify->add_option("--cache-dir", cfg.cache_dir,
                       "array row cache directory (default $CPHI6_CACHE_DIR or .cphi6-cache; "
                       "empty disables)");
    verify->add_flag("--json", cfg.json, "emit the JSON report");

    bool report_json = false;
    CLI::App *report = app.add_subcommand("report", "emit an empty report");
    report->add_flag("--json", report_json, "emit the JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    if (*expand) return cmd_expand(quotient, head_n, poch);
    if (*verify) {
        if (verify->count("--cache-dir") == 0) {
            const char *env = std::getenv("CPHI6_CACHE_DIR");
            cfg.cache_dir = env ? env : ".cphi6-cache";
        }
        if (cfg.K < cfg.alpha_max / 2 + 2) {
            std::cerr << "error: --mod-exp " << cfg.K << " is too small for --alpha-max "
                      << cfg.alpha_max << " (needs K >= floor(alpha/2) + 2)\n";
            return 2;
        }
        return cmd_verify(suite, cfg);
    }
    if (*report) return cmd_report(report_json);
    return 2;
}
