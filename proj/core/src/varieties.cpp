#include "bnq/varieties.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <random>
#include <stdexcept>

namespace bnq {

namespace {

void require_good(const PrimeField& F) {
    if (F.p() < 5)
        throw std::domain_error("bad prime " + std::to_string(F.p()) +
                                ": counts need good reduction, p >= 5");
}

struct UCounts {
    std::int64_t total = 0;
    std::int64_t square = 0;
    UCounts operator+(const UCounts& o) const { return {total + o.total, square + o.square}; }
};

// Core kernel: x5 = 1, x0 restricted to [x0_lo, x0_hi), x1 and x2 over F_p^*.
// With S = -(1 + x0 + x1 + x2) and R = -(1 + 1/x0 + 1/x1 + 1/x2) the closing
// pair satisfies x3 + x4 = S and x3 x4 = S/R:
//   S = R = 0:        x4 = -x3 free, p - 1 ordered pairs, product -x3^2
//   exactly one zero: no solution
//   otherwise:        roots of T^2 - S T + S/R, count 1 + chi(S^2 - 4 S/R)
// The square tally classifies x0*...*x5 = x0 x1 x2 * (x3 x4).
UCounts count_U_slice(const PrimeField& F, std::int64_t x0_lo, std::int64_t x0_hi) {
    const std::int64_t p = F.p();
    UCounts c;
    for (std::int64_t x0 = x0_lo; x0 < x0_hi; ++x0) {
        const std::int64_t i0 = F.inv(x0);
        for (std::int64_t x1 = 1; x1 < p; ++x1) {
            const std::int64_t s01 = F.add(F.add(x0, x1), 1);
            const std::int64_t i01 = F.add(F.add(i0, F.inv(x1)), 1);
            const std::int64_t m01 = F.mul(x0, x1);
            for (std::int64_t x2 = 1; x2 < p; ++x2) {
                const std::int64_t S = F.neg(F.add(s01, x2));
                const std::int64_t R = F.neg(F.add(i01, F.inv(x2)));
                const std::int64_t m012 = F.mul(m01, x2);
                if (S == 0 && R == 0) {
                    c.total += p - 1;
                    if (F.legendre(F.neg(m012)) == 1) c.square += p - 1;
                } else if (S != 0 && R != 0) {
                    const std::int64_t prod = F.mul(S, F.inv(R));
                    const std::int64_t disc = F.sub(F.mul(S, S), F.mul(4, prod));
                    const int n = 1 + F.legendre(disc);
                    if (n > 0) {
                        c.total += n;
                        if (F.legendre(F.mul(m012, prod)) == 1) c.square += n;
                    }
                }
            }
        }
    }
    return c;
}

// Contiguous slices of [lo, hi); the grand total is a sum of per-slice sums,
// so it cannot depend on the slice count.
UCounts partitioned_count(const PrimeField& F, int threads) {
    const std::int64_t lo = 1, hi = F.p();
    int k = std::max(1, threads);
    k = static_cast<int>(std::min<std::int64_t>(k, hi - lo));
    if (k == 1) return count_U_slice(F, lo, hi);
    std::vector<std::future<UCounts>> parts;
    parts.reserve(static_cast<std::size_t>(k));
    const std::int64_t n = hi - lo;
    for (int i = 0; i < k; ++i) {
        const std::int64_t a = lo + n * i / k;
        const std::int64_t b = lo + n * (i + 1) / k;
        parts.push_back(std::async(std::launch::async,
                                   [&F, a, b] { return count_U_slice(F, a, b); }));
    }
    UCounts total;
    for (auto& f : parts) total = total + f.get();
    return total;
}

CountRecord make_record(const PrimeField& F, const UCounts& c, const char* method) {
    return derive_record(F.p(), c.total, c.square, method);
}

// Smallest square root per nonzero square, for enumerating the closing pair.
std::vector<std::int32_t> sqrt_table(const PrimeField& F) {
    const std::int64_t p = F.p();
    std::vector<std::int32_t> sq(static_cast<std::size_t>(p), -1);
    for (std::int64_t b = 1; b < p; ++b) {
        auto s = static_cast<std::size_t>(F.mul(b, b));
        if (sq[s] < 0) sq[s] = static_cast<std::int32_t>(b);
    }
    return sq;
}

void for_each_U(const PrimeField& F, const std::function<void(const NPoint&)>& fn) {
    require_good(F);
    const std::int64_t p = F.p();
    const auto sq = sqrt_table(F);
    const std::int64_t inv2 = F.inv(2);
    for (std::int64_t x0 = 1; x0 < p; ++x0)
        for (std::int64_t x1 = 1; x1 < p; ++x1)
            for (std::int64_t x2 = 1; x2 < p; ++x2) {
                const std::int64_t S = F.neg(F.add(F.add(F.add(x0, x1), x2), 1));
                const std::int64_t R =
                    F.neg(F.add(F.add(F.add(F.inv(x0), F.inv(x1)), F.inv(x2)), 1));
                if (S == 0 && R == 0) {
                    for (std::int64_t x3 = 1; x3 < p; ++x3)
                        fn(NPoint{{x0, x1, x2, x3, F.neg(x3), 1}});
                } else if (S != 0 && R != 0) {
                    const std::int64_t prod = F.mul(S, F.inv(R));
                    const std::int64_t disc = F.sub(F.mul(S, S), F.mul(4, prod));
                    if (disc == 0) {
                        const std::int64_t r = F.mul(S, inv2);
                        fn(NPoint{{x0, x1, x2, r, r, 1}});
                    } else if (F.legendre(disc) == 1) {
                        const std::int64_t rt = sq[static_cast<std::size_t>(disc)];
                        const std::int64_t a = F.mul(F.add(S, rt), inv2);
                        const std::int64_t b = F.mul(F.sub(S, rt), inv2);
                        fn(NPoint{{x0, x1, x2, a, b, 1}});
                        fn(NPoint{{x0, x1, x2, b, a, 1}});
                    }
                }
            }
}

}  // namespace

std::int64_t sigma5(const PrimeField& F, const NPoint& pt) {
    std::int64_t s = 0;
    for (int i = 0; i < 6; ++i) {
        std::int64_t term = 1;
        for (int j = 0; j < 6; ++j)
            if (j != i) term = F.mul(term, pt.x[static_cast<std::size_t>(j)]);
        s = F.add(s, term);
    }
    return s;
}

bool on_N(const PrimeField& F, const NPoint& pt) {
    std::int64_t s = 0;
    bool nonzero = false;
    for (auto xi : pt.x) {
        s = F.add(s, xi);
        nonzero |= xi != 0;
    }
    return nonzero && s == 0 && sigma5(F, pt) == 0;
}

bool in_U(const PrimeField& F, const NPoint& pt) {
    for (auto xi : pt.x)
        if (xi == 0) return false;
    return on_N(F, pt);
}

bool projective_eq(const PrimeField& F, const NPoint& a, const NPoint& b) {
    int pivot = -1;
    for (int i = 0; i < 6; ++i) {
        const bool za = a.x[static_cast<std::size_t>(i)] == 0;
        const bool zb = b.x[static_cast<std::size_t>(i)] == 0;
        if (za != zb) return false;
        if (!za && pivot < 0) pivot = i;
    }
    if (pivot < 0) return false;  // both zero vectors: not points
    const std::int64_t lam =
        F.mul(b.x[static_cast<std::size_t>(pivot)], F.inv(a.x[static_cast<std::size_t>(pivot)]));
    for (int i = 0; i < 6; ++i)
        if (F.mul(lam, a.x[static_cast<std::size_t>(i)]) != b.x[static_cast<std::size_t>(i)])
            return false;
    return true;
}

CountRecord derive_record(std::int64_t p, std::int64_t n_U, std::int64_t n_U_square,
                          std::string method) {
    CountRecord r;
    r.p = p;
    r.n_U = n_U;
    r.n_U_square = n_U_square;
    r.n_Utilde = 2 * n_U_square;
    r.n_Y = n_U + 50 * p * p + 50 * p + 20;
    if (p % 4 == 1) {
        r.n_Ytilde = r.n_Utilde + 50 * p * p + 90 * p + 20;
        r.ytilde_branch = "theorem";
    } else {
        r.n_Ytilde = r.n_Utilde + 50 * p * p + 10 * p + 20;
        r.ytilde_branch = "remark";
    }
    r.t3 = p * p * p - 19 - n_U;
    r.method = std::move(method);
    return r;
}

std::int64_t count_U(const PrimeField& F, int threads) {
    require_good(F);
    return partitioned_count(F, threads).total;
}

std::int64_t count_U_square(const PrimeField& F, int threads) {
    require_good(F);
    return partitioned_count(F, threads).square;
}

CountRecord count_record(const PrimeField& F, int threads) {
    require_good(F);
    return make_record(F, partitioned_count(F, threads), "fast");
}

std::int64_t count_U_bruteforce(const PrimeField& F) {
    return count_record_bruteforce(F).n_U;
}

CountRecord count_record_bruteforce(const PrimeField& F) {
    require_good(F);
    const std::int64_t p = F.p();
    UCounts c;
    for (std::int64_t x0 = 1; x0 < p; ++x0)
        for (std::int64_t x1 = 1; x1 < p; ++x1)
            for (std::int64_t x2 = 1; x2 < p; ++x2)
                for (std::int64_t x3 = 1; x3 < p; ++x3) {
                    const std::int64_t x4 =
                        F.neg(F.add(F.add(F.add(F.add(x0, x1), x2), x3), 1));
                    if (x4 == 0) continue;
                    const std::int64_t isum =
                        F.add(F.add(F.add(F.add(F.add(F.inv(x0), F.inv(x1)), F.inv(x2)),
                                          F.inv(x3)),
                                    F.inv(x4)),
                              1);
                    if (isum != 0) continue;
                    c.total += 1;
                    const std::int64_t m =
                        F.mul(F.mul(F.mul(F.mul(x0, x1), x2), x3), x4);
                    if (F.legendre(m) == 1) c.square += 1;
                }
    return make_record(F, c, "brute");
}

std::int64_t count_Y(const PrimeField& F, int threads) {
    return count_record(F, threads).n_Y;
}

std::int64_t count_Ytilde(const PrimeField& F, int threads) {
    return count_record(F, threads).n_Ytilde;
}

std::int64_t trace_t3(const PrimeField& F, int threads) {
    return count_record(F, threads).t3;
}

StratumBreakdown strata_breakdown(const PrimeField& F, int threads) {
    require_good(F);
    const std::int64_t p = F.p();
    StratumBreakdown s;
    s.p = p;
    s.u = count_U(F, threads);
    s.segre = 10 * p;
    s.r0 = 15 * (p * p - 3 * p + 3);
    s.l0 = 20 * (p - 2) * (p + 1);
    s.cubics = 15 * (p * p + 7 * p + 1);
    return s;
}

std::int64_t count_cayley_c1(const PrimeField& F) {
    require_good(F);
    const std::int64_t p = F.p();
    auto e3 = [&F](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
        const std::int64_t ab = F.mul(a, b), cd = F.mul(c, d);
        // e3 = ab(c + d) + cd(a + b)
        return F.add(F.mul(ab, F.add(c, d)), F.mul(cd, F.add(a, b)));
    };
    std::int64_t cnt = 0;
    // Charts by first nonzero coordinate.
    for (std::int64_t y1 = 0; y1 < p; ++y1)
        for (std::int64_t y2 = 0; y2 < p; ++y2)
            for (std::int64_t y3 = 0; y3 < p; ++y3)
                if (e3(1, y1, y2, y3) == 0) ++cnt;
    for (std::int64_t y2 = 0; y2 < p; ++y2)
        for (std::int64_t y3 = 0; y3 < p; ++y3)
            if (e3(0, 1, y2, y3) == 0) ++cnt;
    for (std::int64_t y3 = 0; y3 < p; ++y3)
        if (e3(0, 0, 1, y3) == 0) ++cnt;
    if (e3(0, 0, 0, 1) == 0) ++cnt;
    return cnt;
}

std::int64_t count_c2(const PrimeField& F) {
    // Blowing up the four rational nodes replaces each point by a P^1.
    return count_cayley_c1(F) + 4 * F.p();
}

CayleyCount count_cayley_resolved_cover(const PrimeField& F) {
    require_good(F);
    const std::int64_t p = F.p();
    CayleyCount out;
    out.p = p;
    out.c1 = count_cayley_c1(F);

    // Open part, all y_i != 0, normalized y3 = 1. Dividing e3 by y0 y1 y2
    // turns membership into 1/y0 + 1/y1 + 1/y2 + 1 = 0. Each base point has
    // 1 + chi(-y0 y1 y2) preimages on the double cover w^2 = -y0 y1 y2 y3.
    std::int64_t open = 0;
    for (std::int64_t y0 = 1; y0 < p; ++y0)
        for (std::int64_t y1 = 1; y1 < p; ++y1)
            for (std::int64_t y2 = 1; y2 < p; ++y2) {
                if (F.add(F.add(F.add(F.inv(y0), F.inv(y1)), F.inv(y2)), 1) != 0) continue;
                open += 1 + F.legendre(F.neg(F.mul(F.mul(y0, y1), y2)));
            }
    out.cover_open = open;

    // Boundary of the cover, stratified over the blown-up cubic:
    //   4(p-2)  the four nodal curves minus their 12 crossings, ramified 1:1
    //   12      the crossings themselves, on the ramification divisor
    //   6(p-1)  over each of the six lines the preimage is one rational curve
    //           mapping 2:1, branched exactly at the 2 crossings it meets,
    //           so p+1 points minus the 2 already counted
    // Total 10p - 2, independent of p mod 4; the residue class only enters
    // through the character sum in the open part.
    out.cover = open + 10 * p - 2;
    return out;
}

YtildeAssembly ytilde_assembled(const PrimeField& F, int threads) {
    require_good(F);
    const std::int64_t p = F.p();
    const CountRecord rec = count_record(F, threads);
    const CayleyCount cov = count_cayley_resolved_cover(F);
    YtildeAssembly a;
    a.p = p;
    a.n_Utilde = rec.n_Utilde;
    // Over a Segre point the cover is w^2 = -1: rational only for p = 1 mod 4.
    a.segre = (p % 4 == 1) ? 20 * p : 0;
    a.branch_quadrics = 20 * (p + 1) * (p + 1);
    a.cayley_open = 15 * (cov.cover - 4 * (p + 1));
    a.plane_unramified = 15 * (cov.cover - (10 * p - 2));
    return a;
}

std::vector<NPoint> segre_points(const PrimeField& F) {
    require_good(F);
    const std::int64_t m1 = F.p() - 1;
    std::vector<NPoint> out;
    out.reserve(10);
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 5; ++j) {
            NPoint pt;
            pt.x.fill(m1);
            pt.x[0] = 1;
            pt.x[static_cast<std::size_t>(i)] = 1;
            pt.x[static_cast<std::size_t>(j)] = 1;
            out.push_back(pt);
        }
    return out;
}

std::vector<NPoint> involution_fixpoints(const PrimeField& F) {
    std::vector<NPoint> out;
    for_each_U(F, [&](const NPoint& pt) {
        NPoint y;
        for (int i = 0; i < 6; ++i)
            y.x[static_cast<std::size_t>(i)] = F.inv(pt.x[static_cast<std::size_t>(i)]);
        if (projective_eq(F, y, pt)) out.push_back(pt);
    });
    return out;
}

std::vector<NPoint> sample_points_U(const PrimeField& F, std::size_t n, std::uint64_t seed) {
    require_good(F);
    const std::int64_t p = F.p();
    const auto sq = sqrt_table(F);
    const std::int64_t inv2 = F.inv(2);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> unit(1, p - 1);

    std::vector<NPoint> out;
    out.reserve(n);
    while (out.size() < n) {
        const std::int64_t x0 = unit(rng), x1 = unit(rng), x2 = unit(rng);
        const std::int64_t S = F.neg(F.add(F.add(F.add(x0, x1), x2), 1));
        const std::int64_t R =
            F.neg(F.add(F.add(F.add(F.inv(x0), F.inv(x1)), F.inv(x2)), 1));
        if (S == 0 && R == 0) {
            const std::int64_t x3 = unit(rng);
            out.push_back(NPoint{{x0, x1, x2, x3, F.neg(x3), 1}});
        } else if (S != 0 && R != 0) {
            const std::int64_t prod = F.mul(S, F.inv(R));
            const std::int64_t disc = F.sub(F.mul(S, S), F.mul(4, prod));
            if (disc == 0) {
                const std::int64_t r = F.mul(S, inv2);
                out.push_back(NPoint{{x0, x1, x2, r, r, 1}});
            } else if (F.legendre(disc) == 1) {
                const std::int64_t rt = sq[static_cast<std::size_t>(disc)];
                const std::int64_t a = F.mul(F.add(S, rt), inv2);
                const std::int64_t b = F.mul(F.sub(S, rt), inv2);
                if (rng() & 1u)
                    out.push_back(NPoint{{x0, x1, x2, a, b, 1}});
                else
                    out.push_back(NPoint{{x0, x1, x2, b, a, 1}});
            }
            // chi(disc) = -1: no closing pair, resample
        }
    }
    return out;
}

std::vector<NPoint> enumerate_U(const PrimeField& F) {
    std::vector<NPoint> out;
    for_each_U(F, [&](const NPoint& pt) { out.push_back(pt); });
    return out;
}

}  // namespace bnq
