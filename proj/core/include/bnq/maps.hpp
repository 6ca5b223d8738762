#pragma once

// Executable birational maps from the open Barth-Nieto part U to the
// Beauville pencil (X+Y)(Y+Z)(Z+X) + tXYZ = 0 and to the Verrill threefold
// (1 + x + xy + xyz)(1 + z + yz + xyz) = ((t+1)^2 / t) xyz, with inverses.
//
// Indeterminacy (a base locus hit) is a first-class result status, not an
// exception: the loci are honest geometry, and the roundtrip reports tally
// them separately from genuine failures.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "bnq/arith.hpp"
#include "bnq/varieties.hpp"

namespace bnq {

enum class MapStatus { ok, indeterminate, failed };

template <typename T>
struct MapResult {
    MapStatus status = MapStatus::failed;
    T value{};
    std::string note;  // reason when not ok
    bool ok() const { return status == MapStatus::ok; }
    bool indeterminate() const { return status == MapStatus::indeterminate; }
};

// e_j of the given residues, j = 0..size.
std::int64_t elementary_symmetric(const PrimeField& F,
                                  const std::vector<std::int64_t>& vals, int j);

// A fibre coordinate t and the two plane cubic points over it.
struct BeauvillePoint {
    std::array<std::int64_t, 3> P{};  // (x0 : x1 : x2)
    std::array<std::int64_t, 3> Q{};  // (x3 : x4 : x5)
    std::int64_t t = 0;
};

// (X+Y)(Y+Z)(Z+X) + t XYZ at a point of P_2.
std::int64_t beauville_residual(const PrimeField& F,
                                const std::array<std::int64_t, 3>& P, std::int64_t t);

// x in U maps to (P, t, Q) with t = 1 - (x0+x1+x2)(1/x0+1/x1+1/x2). Both
// halves land on the same fibre; the residuals vanish identically on U.
MapResult<BeauvillePoint> to_beauville(const PrimeField& F, const NPoint& x);

// Rescales Q by lambda = -(sum P)/(sum Q) and glues. Indeterminate when
// either coordinate sum vanishes; fails when the input is not on the pencil
// or the glued point misses N.
MapResult<NPoint> from_beauville(const PrimeField& F, const BeauvillePoint& b);

struct VerrillPoint {
    std::int64_t t = 0;
    std::int64_t x = 0, y = 0, z = 0;
};

// t(1+x+xy+xyz)(1+z+yz+xyz) - (t+1)^2 xyz; zero exactly on the fibre.
std::int64_t verrill_residual(const PrimeField& F, const VerrillPoint& v);

// Cremona chart (x2:x3:x4:x5) = (1 : x : xy : xyz), t = x0/x1. Indeterminate
// at t in {0, -1}; on U only t = -1 can occur.
MapResult<VerrillPoint> to_verrill(const PrimeField& F, const NPoint& x);

// x1 = -e1(x2..x5)/(t+1), x0 = t x1, then verify sigma_5 = 0. Indeterminate
// at t in {0, -1} and when e1 vanishes.
MapResult<NPoint> from_verrill(const PrimeField& F, const VerrillPoint& v);

struct RoundtripTally {
    std::int64_t ok = 0;
    std::int64_t indeterminate = 0;
    std::int64_t failed = 0;
};

struct RoundtripReport {
    std::int64_t p = 0;
    std::int64_t samples = 0;
    bool exhaustive = false;
    RoundtripTally beauville;
    RoundtripTally verrill;
    std::vector<std::string> failures;  // descriptions, empty on success
    bool clean() const { return beauville.failed == 0 && verrill.failed == 0; }
};

// Forward map, residual checks, inverse map, projective comparison with the
// start point, for both map pairs. n = 0 gives an empty report.
RoundtripReport roundtrip_check(const PrimeField& F, std::size_t n, std::uint64_t seed);

// Same but over every point of U(F_p).
RoundtripReport roundtrip_check_exhaustive(const PrimeField& F);

}  // namespace bnq
