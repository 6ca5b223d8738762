#include <doctest.h>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "bnqcli/cache.hpp"
#include "bnqcli/commands.hpp"
#include "bnqcli/report_json.hpp"

using json = nlohmann::json;
using namespace bnqcli;

namespace {

std::filesystem::path temp_json(const char* tag) {
    return std::filesystem::temp_directory_path() /
           (std::string("bnq_test_") + tag + "_" + std::to_string(::getpid()) + ".json");
}

struct RunResult {
    int rc;
    std::string out;
    std::string err;
};

template <typename Args, typename Fn>
RunResult run(Fn fn, const Args& args) {
    std::ostringstream out, err;
    const int rc = fn(args, out, err);
    return {rc, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("parse_primes accepts lists, ranges, and mixtures") {
    CHECK(parse_primes("5,7,11") == std::vector<std::int64_t>{5, 7, 11});
    CHECK(parse_primes("5..31") == std::vector<std::int64_t>{5, 7, 11, 13, 17, 19, 23, 29, 31});
    CHECK(parse_primes("5,7..19,73") ==
          std::vector<std::int64_t>{5, 7, 11, 13, 17, 19, 73});
    CHECK(parse_primes("24..28").empty());  // no primes inside
    CHECK(parse_primes("5,,7") == std::vector<std::int64_t>{5, 7});  // empty tokens skipped
    CHECK(parse_primes("").empty());
    // Explicit list members are not filtered; validation happens downstream.
    CHECK(parse_primes("4") == std::vector<std::int64_t>{4});
    CHECK_THROWS_AS(parse_primes("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_primes("5..y"), std::invalid_argument);
    CHECK_THROWS_AS(parse_primes("7..5"), std::invalid_argument);
}

TEST_CASE("count writes the golden tsv table") {
    CountArgs args;
    args.primes = "5,7";
    const auto r = run(cmd_count, args);
    CHECK(r.rc == exit_ok);
    CHECK(r.out == "p\tn_U\tn_Y\tt3\n5\t100\t1620\t6\n7\t340\t3160\t-16\n");
    CHECK(r.err.empty());
}

TEST_CASE("count json carries the twisted columns on demand") {
    CountArgs args;
    args.primes = "13";
    args.twisted = true;
    args.common.format = "json";
    const auto r = run(cmd_count, args);
    REQUIRE(r.rc == exit_ok);
    const json j = json::parse(r.out);
    REQUIRE(j["rows"].size() == 1);
    const json& row = j["rows"][0];
    CHECK(row["p"] == 13);
    CHECK(row["n_U"] == 2140);
    CHECK(row["n_Y"] == 11260);
    CHECK(row["t3"] == 38);
    CHECK(row["n_Utilde"] == 3440);
    CHECK(row["n_Ytilde"] == 13080);
    CHECK(row["ytilde_branch"] == "theorem");
}

TEST_CASE("count usage errors exit with code 2") {
    CountArgs args;
    args.primes = "4";
    CHECK(run(cmd_count, args).rc == exit_usage);  // composite
    args.primes = "3";
    CHECK(run(cmd_count, args).rc == exit_usage);  // bad reduction
    args.primes = "";
    CHECK(run(cmd_count, args).rc == exit_usage);  // nothing requested
    args.primes = "5";
    args.common.format = "xml";
    CHECK(run(cmd_count, args).rc == exit_usage);  // unknown format
}

TEST_CASE("count caches raw counts and replays them") {
    const auto path = temp_json("cache");
    std::filesystem::remove(path);

    CountArgs args;
    args.primes = "5,7";
    args.common.cache_flag = path.string();
    REQUIRE(run(cmd_count, args).rc == exit_ok);

    CountCache cache = CountCache::load(path.string());
    CHECK(cache.size() == 4);  // (U, U_square) x two primes
    REQUIRE(cache.lookup("U", 5).has_value());
    CHECK(cache.lookup("U", 5)->count == 100);
    CHECK(cache.lookup("U_square", 7)->count == 30);
    CHECK_FALSE(cache.lookup("U", 11).has_value());

    // Replay marks rows as cache-derived.
    args.common.format = "json";
    const auto replay = run(cmd_count, args);
    CHECK(replay.rc == exit_ok);
    CHECK(json::parse(replay.out)["rows"][0]["method"] == "cache");

    std::filesystem::remove(path);
}

TEST_CASE("recheck detects a tampered cache") {
    const auto path = temp_json("tamper");
    std::filesystem::remove(path);

    CountArgs args;
    args.primes = "5";
    args.common.cache_flag = path.string();
    REQUIRE(run(cmd_count, args).rc == exit_ok);

    json raw = json::parse(std::ifstream(path));
    for (auto& e : raw["entries"])
        if (e["variety"] == "U") e["count"] = 101;
    std::ofstream(path) << raw.dump(2);

    const auto quiet = run(cmd_count, args);
    CHECK(quiet.rc == exit_ok);  // without --recheck the lie goes unnoticed

    args.common.recheck = true;
    const auto checked = run(cmd_count, args);
    CHECK(checked.rc == exit_check_failed);
    CHECK(checked.err.find("recheck mismatch") != std::string::npos);

    std::filesystem::remove(path);
}

TEST_CASE("cache inserts refuse conflicting rewrites") {
    CountCache cache;
    cache.insert({"U", 5, 100, "fast", "0.1.0"});
    CHECK(cache.lookup("U", 5)->count == 100);
    CHECK_NOTHROW(cache.insert({"U", 7, 340, "fast", "0.1.0"}));
    CHECK_THROWS_AS(cache.insert({"U", 5, 101, "fast", "0.1.0"}), std::runtime_error);
}

TEST_CASE("cache path resolution prefers the flag over the environment") {
    ::setenv(cache_env_var, "/tmp/from_env.json", 1);
    CHECK(resolve_cache_path("/tmp/from_flag.json") == std::string("/tmp/from_flag.json"));
    CHECK(resolve_cache_path("") == std::string("/tmp/from_env.json"));
    ::unsetenv(cache_env_var);
    CHECK_FALSE(resolve_cache_path("").has_value());
}

TEST_CASE("qexp lists coefficients and validates them") {
    QexpArgs args;
    const auto r = run(cmd_qexp, args);
    REQUIRE(r.rc == exit_ok);
    CHECK(r.out.find("n\ta_n\n1\t1\n2\t-2\n") == 0);
    CHECK(r.out.find("13\t38\n") != std::string::npos);

    QexpArgs checked;
    checked.n = 200;
    checked.check = true;
    checked.common.format = "json";
    const auto rc = run(cmd_qexp, checked);
    REQUIRE(rc.rc == exit_ok);
    const json j = json::parse(rc.out);
    CHECK(j["label"] == "f");
    CHECK(j["level"] == 6);
    CHECK(j["weight"] == 4);
    CHECK(j["coefficients"].size() == 200);
    CHECK(j["coefficients"][0] == 1);
    CHECK(j["hecke_ok"] == true);
    CHECK(j["deligne_ok"] == true);

    QexpArgs bad;
    bad.n = 0;
    CHECK(run(cmd_qexp, bad).rc == exit_usage);
}

TEST_CASE("verify emits the stable report schema and exits by verdict") {
    VerifyArgs args;
    args.common.threads = 2;
    const auto r = run(cmd_verify, args);
    REQUIRE(r.rc == exit_ok);
    const json j = json::parse(r.out);
    CHECK(j["tool_version"].is_string());
    CHECK(j["verdict"] == "verified");
    CHECK(j["bad_euler_factors"] == "undetermined");
    CHECK(j["livne"]["m"] == 24);
    CHECK(j["livne"]["S"] == json::array({2, 3}));
    CHECK(j["livne"]["T"] == json::array({5, 7, 11, 13, 17, 19, 23, 73}));
    CHECK(j["primes"].size() == 23);
    REQUIRE(j["rows"].size() == 23);
    for (const char* key : {"p", "n_U", "n_Y", "t3", "a_p", "match", "det_ok", "parity_ok"})
        CHECK(j["rows"][0].contains(key));
    REQUIRE(j["hodge"].size() == 2);
    CHECK(j["hodge"][0]["base"] == 50);
    CHECK(j["hodge"][0]["admissible"] == json::array({0}));
    CHECK(j["hodge"][0]["h11"] == 50);
    CHECK(j["hodge"][1]["h11_cy"] == 40);
    CHECK(j["k_values"].size() == 8);
    CHECK(j["k_values"][0]["k"] == 40);

    // The parsed report round-trips through the typed struct.
    const bnq::VerificationReport rep = report_from_json(j);
    CHECK(rep.verified());
    CHECK(report_to_json(rep)["rows"].size() == j["rows"].size());
}

TEST_CASE("verify degrades to exit 1 when coverage is incomplete") {
    VerifyArgs args;
    args.restrict_t = "5,7";
    args.trace_limit = 7;
    const auto r = run(cmd_verify, args);
    CHECK(r.rc == exit_check_failed);
    const json j = json::parse(r.out);
    CHECK(j["verdict"].get<std::string>().substr(0, 10) == "incomplete");
}

TEST_CASE("verify rejects a hodge prime in the wrong residue class") {
    VerifyArgs args;
    args.hodge_prime = 7;
    CHECK(run(cmd_verify, args).rc == exit_usage);
}

TEST_CASE("maps roundtrips cleanly, sampled and exhaustive") {
    MapsArgs args;
    args.prime = 5;
    args.exhaustive = true;
    const auto r = run(cmd_maps, args);
    CHECK(r.rc == exit_ok);
    CHECK(r.out.find("5\t100\texhaustive\t0\t91\t9\t0\t64\t36\t0\n") != std::string::npos);

    MapsArgs sampled;
    sampled.prime = 17;
    sampled.samples = 300;
    sampled.common.seed = 11;
    sampled.common.format = "json";
    const auto rs = run(cmd_maps, sampled);
    REQUIRE(rs.rc == exit_ok);
    const json j = json::parse(rs.out);
    CHECK(j["p"] == 17);
    CHECK(j["samples"] == 300);
    CHECK(j["seed"] == 11);
    CHECK(j["beauville"]["failed"] == 0);
    CHECK(j["verrill"]["failed"] == 0);

    MapsArgs bad;
    bad.samples = -1;
    CHECK(run(cmd_maps, bad).rc == exit_usage);
    bad.samples = 10;
    bad.prime = 6;
    CHECK(run(cmd_maps, bad).rc == exit_usage);
}

TEST_CASE("cayley compares enumeration against the closed formulas") {
    CayleyArgs args;
    args.primes = "5..13";
    const auto r = run(cmd_cayley, args);
    CHECK(r.rc == exit_ok);
    CHECK(r.out.find("5\t41\t61\t18\t66\t66\tyes\n") != std::string::npos);
    CHECK(r.out.find("13\t209\t261\t146\t274\t274\tyes\n") != std::string::npos);

    CayleyArgs jsoned;
    jsoned.primes = "5,7";
    jsoned.common.format = "json";
    const auto rj = run(cmd_cayley, jsoned);
    REQUIRE(rj.rc == exit_ok);
    const json j = json::parse(rj.out);
    REQUIRE(j["rows"].size() == 2);
    CHECK(j["rows"][0]["match"] == true);
    CHECK(j["rows"][1]["c2"] == 99);
}

}  // TEST_SUITE
