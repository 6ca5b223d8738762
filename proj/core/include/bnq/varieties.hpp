#pragma once

// Point counts over F_p for the Barth-Nieto quintic N in P_5
//
//     x0 + x1 + x2 + x3 + x4 + x5 = 0,   sigma_5(x0, ..., x5) = 0,
//
// its open part U (all coordinates nonzero), the double cover of U classified
// by the square class of x0*...*x5, the Calabi-Yau models built on top of
// them, and the Cayley cubic family that carries the boundary strata.
//
// Two independent counting routes exist for U on purpose: count_U solves for
// the last coordinate pair in closed form (cubic in p), count_U_bruteforce
// enumerates a full affine chart (quartic in p). They must agree; tests
// enforce it for every p <= 31.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "bnq/arith.hpp"

namespace bnq {

// Projective point of N, stored as canonical residues with a fixed
// representative. Coordinates sum to 0 mod p; on U all are nonzero.
struct NPoint {
    std::array<std::int64_t, 6> x{};
};

std::int64_t sigma5(const PrimeField& F, const NPoint& pt);
bool on_N(const PrimeField& F, const NPoint& pt);
bool in_U(const PrimeField& F, const NPoint& pt);
bool projective_eq(const PrimeField& F, const NPoint& a, const NPoint& b);

// One pass over the fast enumeration yields every headline count.
struct CountRecord {
    std::int64_t p = 0;
    std::int64_t n_U = 0;         // #U(F_p)
    std::int64_t n_U_square = 0;  // points of U with x0*...*x5 a square
    std::int64_t n_Utilde = 0;    // 2 * n_U_square
    std::int64_t n_Y = 0;         // n_U + 50p^2 + 50p + 20
    std::int64_t n_Ytilde = 0;    // n_Utilde + 50p^2 + 90p + 20  (p = 1 mod 4)
                                  // n_Utilde + 50p^2 + 10p + 20  (p = 3 mod 4)
    std::int64_t t3 = 0;          // p^3 - 19 - n_U
    std::string ytilde_branch;    // "theorem" (p = 1 mod 4) or "remark" (p = 3 mod 4)
    std::string method;           // "fast" or "brute"
};

// Fast path: normalize x5 = 1, iterate (x0, x1, x2) over (F_p^*)^3 and count
// solutions (x3, x4) of x3 + x4 = S, x3 x4 = S/R in closed form. O(p^3).
// threads partitions the outer loop; totals are sums of per-slice counts and
// do not depend on the partition.
std::int64_t count_U(const PrimeField& F, int threads = 1);
std::int64_t count_U_square(const PrimeField& F, int threads = 1);
CountRecord count_record(const PrimeField& F, int threads = 1);

// Oracle path: enumerate (x0, .., x3) over (F_p^*)^4 with x5 = 1, solve the
// hyperplane for x4 and test both equations. O(p^4).
std::int64_t count_U_bruteforce(const PrimeField& F);
CountRecord count_record_bruteforce(const PrimeField& F);

// Rebuild the derived fields from raw counts (cache replay, fault injection).
CountRecord derive_record(std::int64_t p, std::int64_t n_U, std::int64_t n_U_square,
                          std::string method);

std::int64_t count_Y(const PrimeField& F, int threads = 1);
std::int64_t count_Ytilde(const PrimeField& F, int threads = 1);
std::int64_t trace_t3(const PrimeField& F, int threads = 1);

// Boundary strata of Y \ U. Closed forms in p; their sum is 50p^2 + 50p + 20.
struct StratumBreakdown {
    std::int64_t p = 0;
    std::int64_t u = 0;       // #U(F_p)
    std::int64_t segre = 0;   // 10p   (exceptional curves over the Segre points)
    std::int64_t r0 = 0;      // 15(p^2 - 3p + 3)
    std::int64_t l0 = 0;      // 20(p - 2)(p + 1)
    std::int64_t cubics = 0;  // 15(p^2 + 7p + 1)
    std::int64_t boundary_total() const { return segre + r0 + l0 + cubics; }
    std::int64_t total() const { return u + boundary_total(); }
};

StratumBreakdown strata_breakdown(const PrimeField& F, int threads = 1);

// Cayley cubic e3(y0..y3) = 0 in P_3 and its resolved double cover.
struct CayleyCount {
    std::int64_t p = 0;
    std::int64_t c1 = 0;          // #C1(F_p), direct projective enumeration
    std::int64_t cover_open = 0;  // sum of 1 + chi(-y0 y1 y2 y3) over C1, all y_i != 0
    std::int64_t cover = 0;       // cover_open + 10p - 2 (boundary strata, see .cpp)
    std::int64_t cover_formula() const {  // p^2 + 8p + 1 or p^2 + 6p + 1 by p mod 4
        return p * p + (p % 4 == 1 ? 8 : 6) * p + 1;
    }
};

std::int64_t count_cayley_c1(const PrimeField& F);
std::int64_t count_c2(const PrimeField& F);  // 1 + 7p + p^2, cross-checked as c1 + 4p
CayleyCount count_cayley_resolved_cover(const PrimeField& F);

// Ytilde assembled stratum by stratum from enumerated pieces, against the
// collapsed formula. Valid for both residue classes of p mod 4.
struct YtildeAssembly {
    std::int64_t p = 0;
    std::int64_t n_Utilde = 0;
    std::int64_t segre = 0;             // 20p if p = 1 mod 4, else 0
    std::int64_t branch_quadrics = 0;   // 20(p + 1)^2
    std::int64_t cayley_open = 0;       // 15 (cover - 4(p + 1))
    std::int64_t plane_unramified = 0;  // 15 (cover - (10p - 2))
    std::int64_t total() const {
        return n_Utilde + segre + branch_quadrics + cayley_open + plane_unramified;
    }
};

YtildeAssembly ytilde_assembled(const PrimeField& F, int threads = 1);

// The 10 Segre points: coordinates +-1, three of each sign, first coordinate
// normalized to +1. They are fixed by x -> x^{-1} and lie on N for every p.
std::vector<NPoint> segre_points(const PrimeField& F);

// Exhaustive scan of U for fixpoints of the coordinatewise-inverse involution
// (projective equality). Returns exactly the Segre points.
std::vector<NPoint> involution_fixpoints(const PrimeField& F);

// Deterministic rejection sampler over U, x5 = 1. Same (p, n, seed) gives the
// same points. n = 0 yields an empty vector.
std::vector<NPoint> sample_points_U(const PrimeField& F, std::size_t n, std::uint64_t seed);

// Every point of U with x5 = 1, in a fixed deterministic order.
std::vector<NPoint> enumerate_U(const PrimeField& F);

}  // namespace bnq
