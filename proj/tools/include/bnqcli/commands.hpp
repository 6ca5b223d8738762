#pragma once

// Subcommand drivers behind the bnq binary. Pure functions of their argument
// structs and streams so tests can drive them directly; main() only parses
// flags into these structs.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace bnqcli {

// Process exit codes: 0 success, 1 a verification check failed, 2 bad usage
// (malformed flags, composite or out-of-range primes).
inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_usage = 2;

// Comma lists and inclusive ranges: "5,7,11", "5..41", "5,7..19,73".
// Range endpoints need not be prime; the range keeps only primes.
std::vector<std::int64_t> parse_primes(const std::string& text);

struct CommonArgs {
    std::string format = "tsv";  // "tsv" | "json"
    std::string cache_flag;      // --cache PATH; empty consults BNQ_COUNT_CACHE
    bool recheck = false;        // recompute cache hits and compare
    int threads = 1;
    std::uint64_t seed = 0;
};

struct CountArgs {
    CommonArgs common;
    std::string primes;    // required
    bool twisted = false;  // add n_Utilde / n_Ytilde columns
};

struct QexpArgs {
    CommonArgs common;
    std::int64_t n = 13;
    bool check = false;  // Hecke identities + Deligne bound over the range
};

inline CommonArgs json_default_common() {
    CommonArgs c;
    c.format = "json";
    return c;
}

struct VerifyArgs {
    CommonArgs common = json_default_common();  // reports default to JSON
    std::string livne_s = "2,3";
    std::string restrict_t;  // optional comma list replacing the witness set
    std::int64_t hodge_prime = 13;
    std::string k_range = "7..59";
    std::int64_t trace_limit = 100;
};

struct MapsArgs {
    CommonArgs common;
    std::int64_t prime = 13;
    std::int64_t samples = 1000;
    bool exhaustive = false;
};

struct CayleyArgs {
    CommonArgs common;
    std::string primes = "5..41";
};

int cmd_count(const CountArgs& args, std::ostream& out, std::ostream& err);
int cmd_qexp(const QexpArgs& args, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);
int cmd_maps(const MapsArgs& args, std::ostream& out, std::ostream& err);
int cmd_cayley(const CayleyArgs& args, std::ostream& out, std::ostream& err);

}  // namespace bnqcli
