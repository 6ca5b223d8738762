#include "bnqcli/commands.hpp"

#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "bnq/maps.hpp"
#include "bnq/modularity.hpp"
#include "bnq/qseries.hpp"
#include "bnq/varieties.hpp"
#include "bnq/version.hpp"
#include "bnqcli/cache.hpp"
#include "bnqcli/report_json.hpp"

namespace bnqcli {

using nlohmann::json;

namespace {

std::int64_t parse_int(const std::string& tok) {
    std::size_t pos = 0;
    const std::int64_t v = std::stoll(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("malformed number '" + tok + "'");
    return v;
}

void require_format(const CommonArgs& c) {
    if (c.format != "tsv" && c.format != "json")
        throw std::invalid_argument("unknown format '" + c.format + "'");
}

// Cache-aware computation scope for one command invocation.
struct CacheSession {
    std::optional<std::string> path;
    CountCache cache;
    bool recheck = false;
    bool dirty = false;
    std::vector<std::string> recheck_failures;

    static CacheSession open(const CommonArgs& c) {
        CacheSession s;
        s.path = resolve_cache_path(c.cache_flag);
        s.recheck = c.recheck;
        if (s.path) s.cache = CountCache::load(*s.path);
        return s;
    }

    std::int64_t fetch(const std::string& variety, std::int64_t p, const char* method,
                       const std::function<std::int64_t()>& compute) {
        if (!path) return compute();
        if (auto hit = cache.lookup(variety, p)) {
            if (!recheck) return hit->count;
            const std::int64_t fresh = compute();
            if (fresh != hit->count)
                recheck_failures.push_back("recheck mismatch for (" + variety +
                                           ", p=" + std::to_string(p) + "): cached " +
                                           std::to_string(hit->count) + ", recomputed " +
                                           std::to_string(fresh));
            return fresh;
        }
        const std::int64_t fresh = compute();
        cache.insert({variety, p, fresh, method, bnq::tool_version});
        dirty = true;
        return fresh;
    }

    bnq::CountRecord record(std::int64_t p, int threads) {
        if (!path) return bnq::count_record(bnq::PrimeField(p), threads);
        const auto hu = cache.lookup("U", p);
        const auto hs = cache.lookup("U_square", p);
        if (hu && hs && !recheck)
            return bnq::derive_record(p, hu->count, hs->count, "cache");
        const auto rec = bnq::count_record(bnq::PrimeField(p), threads);
        if (hu && hu->count != rec.n_U)
            recheck_failures.push_back("recheck mismatch for (U, p=" + std::to_string(p) +
                                       "): cached " + std::to_string(hu->count) +
                                       ", recomputed " + std::to_string(rec.n_U));
        if (hs && hs->count != rec.n_U_square)
            recheck_failures.push_back(
                "recheck mismatch for (U_square, p=" + std::to_string(p) + "): cached " +
                std::to_string(hs->count) + ", recomputed " + std::to_string(rec.n_U_square));
        if (!hu) {
            cache.insert({"U", p, rec.n_U, rec.method, bnq::tool_version});
            dirty = true;
        }
        if (!hs) {
            cache.insert({"U_square", p, rec.n_U_square, rec.method, bnq::tool_version});
            dirty = true;
        }
        return rec;
    }

    void close() {
        if (path && dirty) cache.save(*path);
    }
};

int flush_recheck(const CacheSession& s, std::ostream& err) {
    for (const auto& msg : s.recheck_failures) err << msg << '\n';
    return s.recheck_failures.empty() ? exit_ok : exit_check_failed;
}

}  // namespace

std::vector<std::int64_t> parse_primes(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        const auto dots = tok.find("..");
        if (dots == std::string::npos) {
            out.push_back(parse_int(tok));
        } else {
            const std::int64_t lo = parse_int(tok.substr(0, dots));
            const std::int64_t hi = parse_int(tok.substr(dots + 2));
            if (lo > hi) throw std::invalid_argument("empty range '" + tok + "'");
            for (std::int64_t q = lo; q <= hi; ++q)
                if (bnq::is_prime(q)) out.push_back(q);
        }
    }
    return out;
}

int cmd_count(const CountArgs& args, std::ostream& out, std::ostream& err) {
    try {
        require_format(args.common);
        const auto primes = parse_primes(args.primes);
        if (primes.empty()) {
            err << "count: no primes requested (use --primes or --prime)\n";
            return exit_usage;
        }
        CacheSession session = CacheSession::open(args.common);
        std::vector<bnq::CountRecord> recs;
        recs.reserve(primes.size());
        for (auto p : primes) recs.push_back(session.record(p, args.common.threads));
        session.close();

        if (args.common.format == "json") {
            json j;
            j["tool_version"] = bnq::tool_version;
            j["rows"] = json::array();
            for (const auto& r : recs) j["rows"].push_back(count_row_to_json(r, args.twisted));
            out << j.dump(2) << '\n';
        } else {
            out << "p\tn_U\tn_Y\tt3";
            if (args.twisted) out << "\tn_Utilde\tn_Ytilde\tytilde_branch";
            out << '\n';
            for (const auto& r : recs) {
                out << r.p << '\t' << r.n_U << '\t' << r.n_Y << '\t' << r.t3;
                if (args.twisted)
                    out << '\t' << r.n_Utilde << '\t' << r.n_Ytilde << '\t' << r.ytilde_branch;
                out << '\n';
            }
        }
        return flush_recheck(session, err);
    } catch (const std::invalid_argument& e) {
        err << "count: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::domain_error& e) {
        err << "count: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "count: " << e.what() << '\n';
        return exit_check_failed;
    }
}

int cmd_qexp(const QexpArgs& args, std::ostream& out, std::ostream& err) {
    try {
        require_format(args.common);
        if (args.n < 1) {
            err << "qexp: need at least one coefficient\n";
            return exit_usage;
        }
        const bnq::QExpansion f = bnq::f_coefficients(args.n);
        bnq::HeckeReport hecke;
        bnq::DeligneReport deligne;
        if (args.check) {
            hecke = bnq::hecke_check(f);
            deligne = bnq::deligne_bound_check(f);
        }

        if (args.common.format == "json") {
            json j;
            j["tool_version"] = bnq::tool_version;
            j["label"] = f.label;
            j["level"] = f.level;
            j["weight"] = f.weight;
            j["coefficients"] = std::vector<std::int64_t>(f.a.begin() + 1, f.a.end());
            if (args.check) {
                j["hecke_ok"] = hecke.ok;
                j["hecke_violations"] = hecke.violations;
                j["deligne_ok"] = deligne.ok;
                j["deligne_primes_checked"] = deligne.primes_checked;
            }
            out << j.dump(2) << '\n';
        } else {
            out << "n\ta_n\n";
            for (std::int64_t n = 1; n <= f.N(); ++n) out << n << '\t' << f.at(n) << '\n';
            if (args.check) {
                out << "hecke\t" << (hecke.ok ? "ok" : "FAILED") << '\n';
                out << "deligne\t" << (deligne.ok ? "ok" : "FAILED") << '\t'
                    << deligne.primes_checked << " primes\n";
            }
        }
        if (args.check && (!hecke.ok || !deligne.ok)) {
            for (const auto& v : hecke.violations) err << "hecke: " << v << '\n';
            for (auto p : deligne.violations) err << "deligne bound fails at p=" << p << '\n';
            return exit_check_failed;
        }
        return exit_ok;
    } catch (const std::invalid_argument& e) {
        err << "qexp: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "qexp: " << e.what() << '\n';
        return exit_check_failed;
    }
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
    try {
        require_format(args.common);
        bnq::VerifyConfig cfg;
        cfg.livne_S = parse_primes(args.livne_s);
        if (!args.restrict_t.empty()) cfg.restrict_T = parse_primes(args.restrict_t);
        cfg.hodge_prime = args.hodge_prime;
        cfg.trace_limit = args.trace_limit;
        const auto range = parse_primes(args.k_range);
        if (range.empty()) {
            cfg.k_lo = 1;
            cfg.k_hi = 0;  // empty scan
        } else {
            cfg.k_lo = range.front();
            cfg.k_hi = range.back();
        }
        cfg.threads = args.common.threads;

        CacheSession session = CacheSession::open(args.common);
        cfg.counts = [&session, &args](std::int64_t p) {
            return session.record(p, args.common.threads);
        };
        const bnq::VerificationReport rep = bnq::full_verification(cfg);
        session.close();

        if (args.common.format == "json") {
            out << report_to_json(rep).dump(2) << '\n';
        } else {
            out << "p\tn_U\tn_Y\tt3\ta_p\tmatch\n";
            for (const auto& r : rep.rows)
                out << r.p << '\t' << r.n_U << '\t' << r.n_Y << '\t' << r.t3 << '\t'
                    << r.a_p << '\t' << (r.match ? "yes" : "NO") << '\n';
            out << "verdict\t" << rep.verdict << '\n';
        }
        const int recheck_rc = flush_recheck(session, err);
        if (!rep.verified()) {
            err << "verify: " << rep.verdict << '\n';
            return exit_check_failed;
        }
        return recheck_rc;
    } catch (const std::invalid_argument& e) {
        err << "verify: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::domain_error& e) {
        err << "verify: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "verify: " << e.what() << '\n';
        return exit_check_failed;
    }
}

int cmd_maps(const MapsArgs& args, std::ostream& out, std::ostream& err) {
    try {
        require_format(args.common);
        if (args.samples < 0) {
            err << "maps: sample count must be >= 0\n";
            return exit_usage;
        }
        const bnq::PrimeField F(args.prime);
        const bnq::RoundtripReport rep =
            args.exhaustive
                ? bnq::roundtrip_check_exhaustive(F)
                : bnq::roundtrip_check(F, static_cast<std::size_t>(args.samples),
                                       args.common.seed);

        if (args.common.format == "json") {
            json j = roundtrip_to_json(rep);
            j["seed"] = args.common.seed;  // reports must be reproducible from their output
            out << j.dump(2) << '\n';
        } else {
            out << "p\tsamples\tmode\tseed\tb_ok\tb_indet\tb_fail\tv_ok\tv_indet\tv_fail\n";
            out << rep.p << '\t' << rep.samples << '\t'
                << (rep.exhaustive ? "exhaustive" : "sampled") << '\t' << args.common.seed
                << '\t' << rep.beauville.ok << '\t' << rep.beauville.indeterminate << '\t'
                << rep.beauville.failed << '\t' << rep.verrill.ok << '\t'
                << rep.verrill.indeterminate << '\t' << rep.verrill.failed << '\n';
        }
        if (!rep.clean()) {
            for (const auto& fmsg : rep.failures) err << "maps: " << fmsg << '\n';
            return exit_check_failed;
        }
        return exit_ok;
    } catch (const std::invalid_argument& e) {
        err << "maps: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::domain_error& e) {
        err << "maps: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "maps: " << e.what() << '\n';
        return exit_check_failed;
    }
}

int cmd_cayley(const CayleyArgs& args, std::ostream& out, std::ostream& err) {
    try {
        require_format(args.common);
        const auto primes = parse_primes(args.primes);
        if (primes.empty()) {
            err << "cayley: no primes requested\n";
            return exit_usage;
        }
        CacheSession session = CacheSession::open(args.common);
        bool all_match = true;
        json jrows = json::array();
        std::ostringstream tsv;
        tsv << "p\tc1\tc2\tcover_open\tcover\tcover_formula\tmatch\n";
        for (auto p : primes) {
            const bnq::PrimeField F(p);
            bnq::CayleyCount c;
            c.p = p;
            c.c1 = session.fetch("cayley_c1", p, "enumeration",
                                 [&F] { return bnq::count_cayley_c1(F); });
            c.cover_open = session.fetch("cayley_cover_open", p, "enumeration",
                                         [&F] { return bnq::count_cayley_resolved_cover(F).cover_open; });
            c.cover = c.cover_open + 10 * p - 2;
            const std::int64_t c2 = c.c1 + 4 * p;
            const bool match = c.cover == c.cover_formula() && c2 == 1 + 7 * p + p * p;
            all_match = all_match && match;
            jrows.push_back(cayley_to_json(c, c2));
            tsv << p << '\t' << c.c1 << '\t' << c2 << '\t' << c.cover_open << '\t'
                << c.cover << '\t' << c.cover_formula() << '\t' << (match ? "yes" : "NO")
                << '\n';
        }
        session.close();

        if (args.common.format == "json") {
            json j;
            j["tool_version"] = bnq::tool_version;
            j["rows"] = jrows;
            out << j.dump(2) << '\n';
        } else {
            out << tsv.str();
        }
        const int recheck_rc = flush_recheck(session, err);
        if (!all_match) {
            err << "cayley: enumerated cover disagrees with the closed formula\n";
            return exit_check_failed;
        }
        return recheck_rc;
    } catch (const std::invalid_argument& e) {
        err << "cayley: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::domain_error& e) {
        err << "cayley: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "cayley: " << e.what() << '\n';
        return exit_check_failed;
    }
}

}  // namespace bnqcli
