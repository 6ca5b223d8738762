#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bnq/version.hpp"
#include "bnqcli/cache.hpp"
#include "bnqcli/commands.hpp"

namespace {

void add_common(CLI::App* sub, bnqcli::CommonArgs& c, bool with_seed = false) {
    sub->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"tsv", "json"}));
    sub->add_option("--cache", c.cache_flag,
                    "count cache file (falls back to $" + std::string(bnqcli::cache_env_var) + ")");
    sub->add_flag("--recheck", c.recheck, "recompute cached counts and compare");
    sub->add_option("--threads", c.threads, "worker threads for the point count")
        ->check(CLI::PositiveNumber);
    if (with_seed) sub->add_option("--seed", c.seed, "sampler seed");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"point counts and modularity checks for the Barth-Nieto quintic"};
    app.set_version_flag("--version", std::string("bnq ") + bnq::tool_version);
    app.require_subcommand(1);

    bnqcli::CountArgs count_args;
    std::int64_t count_single = 0;
    auto* count = app.add_subcommand("count", "count points of U and Y over F_p");
    auto* count_list = count->add_option("--primes", count_args.primes,
                                         "primes, e.g. 5,7,11 or 5..31 or a mix");
    count->add_option("--prime", count_single, "a single prime")->excludes(count_list);
    count->add_flag("--twisted", count_args.twisted,
                    "also report the double cover counts n_Utilde, n_Ytilde");
    add_common(count, count_args.common);

    bnqcli::QexpArgs qexp_args;
    auto* qexp = app.add_subcommand("qexp", "q-expansion of the weight 4 level 6 form");
    qexp->add_option("-N,--terms", qexp_args.n, "number of coefficients");
    qexp->add_flag("--check", qexp_args.check,
                   "verify Hecke multiplicativity and the coefficient bound");
    add_common(qexp, qexp_args.common);

    bnqcli::VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "full finite-prime modularity verification");
    verify->add_option("--livne-s", verify_args.livne_s, "bad prime set S (must contain 2)");
    verify->add_option("--restrict-t", verify_args.restrict_t,
                       "check only these members of the effective set T");
    verify->add_option("--hodge-prime", verify_args.hodge_prime,
                       "prime for the Hodge number solve (must be 1 mod 4)");
    verify->add_option("--k-range", verify_args.k_range,
                       "prime range for the h^2 eigenvalue scan at p = 3 mod 4");
    verify->add_option("--trace-limit", verify_args.trace_limit,
                       "also compare traces at every good prime up to this bound");
    add_common(verify, verify_args.common);

    bnqcli::MapsArgs maps_args;
    auto* maps = app.add_subcommand("maps", "roundtrip the birational maps on U");
    maps->add_option("--prime", maps_args.prime, "field characteristic");
    maps->add_option("--samples", maps_args.samples, "random points to roundtrip");
    maps->add_flag("--exhaustive", maps_args.exhaustive, "roundtrip every point of U");
    add_common(maps, maps_args.common, /*with_seed=*/true);

    bnqcli::CayleyArgs cayley_args;
    std::int64_t cayley_single = 0;
    auto* cayley = app.add_subcommand("cayley", "Cayley cubic counts vs closed formulas");
    auto* cayley_list = cayley->add_option("--primes", cayley_args.primes,
                                           "primes, list or range syntax");
    cayley->add_option("--prime", cayley_single, "a single prime")->excludes(cayley_list);
    add_common(cayley, cayley_args.common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : bnqcli::exit_usage;
    }

    if (count_single != 0) count_args.primes = std::to_string(count_single);
    if (cayley_single != 0) cayley_args.primes = std::to_string(cayley_single);

    if (*count) return bnqcli::cmd_count(count_args, std::cout, std::cerr);
    if (*qexp) return bnqcli::cmd_qexp(qexp_args, std::cout, std::cerr);
    if (*verify) return bnqcli::cmd_verify(verify_args, std::cout, std::cerr);
    if (*maps) return bnqcli::cmd_maps(maps_args, std::cout, std::cerr);
    if (*cayley) return bnqcli::cmd_cayley(cayley_args, std::cout, std::cerr);
    return bnqcli::exit_usage;
}
