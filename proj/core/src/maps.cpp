#include "bnq/maps.hpp"

#include <stdexcept>

namespace bnq {

namespace {

std::int64_t sum3(const PrimeField& F, const std::array<std::int64_t, 3>& v) {
    return F.add(F.add(v[0], v[1]), v[2]);
}

template <typename T>
MapResult<T> ok(T v) {
    return {MapStatus::ok, std::move(v), ""};
}

template <typename T>
MapResult<T> indet(std::string why) {
    return {MapStatus::indeterminate, T{}, std::move(why)};
}

template <typename T>
MapResult<T> failed(std::string why) {
    return {MapStatus::failed, T{}, std::move(why)};
}

}  // namespace

std::int64_t elementary_symmetric(const PrimeField& F,
                                  const std::vector<std::int64_t>& vals, int j) {
    const int n = static_cast<int>(vals.size());
    if (j < 0 || j > n) throw std::invalid_argument("elementary symmetric index out of range");
    // e[k] updated one variable at a time, highest degree first.
    std::vector<std::int64_t> e(static_cast<std::size_t>(j) + 1, 0);
    e[0] = 1;
    for (int i = 0; i < n; ++i) {
        const std::int64_t xi = F.reduce(vals[static_cast<std::size_t>(i)]);
        for (int k = std::min(j, i + 1); k >= 1; --k)
            e[static_cast<std::size_t>(k)] =
                F.add(e[static_cast<std::size_t>(k)],
                      F.mul(e[static_cast<std::size_t>(k - 1)], xi));
    }
    return e[static_cast<std::size_t>(j)];
}

std::int64_t beauville_residual(const PrimeField& F,
                                const std::array<std::int64_t, 3>& P, std::int64_t t) {
    const std::int64_t X = F.reduce(P[0]), Y = F.reduce(P[1]), Z = F.reduce(P[2]);
    const std::int64_t cubic =
        F.mul(F.mul(F.add(X, Y), F.add(Y, Z)), F.add(Z, X));
    return F.add(cubic, F.mul(F.reduce(t), F.mul(F.mul(X, Y), Z)));
}

MapResult<BeauvillePoint> to_beauville(const PrimeField& F, const NPoint& x) {
    if (!in_U(F, x)) return failed<BeauvillePoint>("input not in U");
    BeauvillePoint b;
    b.P = {x.x[0], x.x[1], x.x[2]};
    b.Q = {x.x[3], x.x[4], x.x[5]};
    // t = 1 - (x0+x1+x2)(1/x0+1/x1+1/x2); the defining equations make the
    // same value come out of the Q half, and both cubics then vanish.
    const std::int64_t sP = sum3(F, b.P);
    const std::int64_t hP = F.add(F.add(F.inv(x.x[0]), F.inv(x.x[1])), F.inv(x.x[2]));
    b.t = F.sub(1, F.mul(sP, hP));

    const std::int64_t sQ = sum3(F, b.Q);
    const std::int64_t hQ = F.add(F.add(F.inv(x.x[3]), F.inv(x.x[4])), F.inv(x.x[5]));
    if (F.sub(1, F.mul(sQ, hQ)) != b.t)
        return failed<BeauvillePoint>("halves disagree on t");
    if (beauville_residual(F, b.P, b.t) != 0 || beauville_residual(F, b.Q, b.t) != 0)
        return failed<BeauvillePoint>("image misses the pencil");
    return ok(b);
}

MapResult<NPoint> from_beauville(const PrimeField& F, const BeauvillePoint& in) {
    BeauvillePoint b;
    for (int i = 0; i < 3; ++i) {
        b.P[static_cast<std::size_t>(i)] = F.reduce(in.P[static_cast<std::size_t>(i)]);
        b.Q[static_cast<std::size_t>(i)] = F.reduce(in.Q[static_cast<std::size_t>(i)]);
    }
    b.t = F.reduce(in.t);
    if (beauville_residual(F, b.P, b.t) != 0 || beauville_residual(F, b.Q, b.t) != 0)
        return failed<NPoint>("not on the pencil");
    const std::int64_t sP = sum3(F, b.P);
    const std::int64_t sQ = sum3(F, b.Q);
    if (sP == 0 || sQ == 0)
        return indet<NPoint>("coordinate sum vanishes, gluing scale undefined");
    // Rescale Q so the six coordinates sum to zero.
    const std::int64_t lam = F.mul(F.neg(sP), F.inv(sQ));
    NPoint x{{b.P[0], b.P[1], b.P[2],
              F.mul(lam, b.Q[0]), F.mul(lam, b.Q[1]), F.mul(lam, b.Q[2])}};
    if (!on_N(F, x)) return failed<NPoint>("glued point misses N");
    return ok(x);
}

std::int64_t verrill_residual(const PrimeField& F, const VerrillPoint& in) {
    const VerrillPoint v{F.reduce(in.t), F.reduce(in.x), F.reduce(in.y), F.reduce(in.z)};
    const std::int64_t xy = F.mul(v.x, v.y);
    const std::int64_t xyz = F.mul(xy, v.z);
    const std::int64_t lhs1 = F.add(F.add(F.add(1, v.x), xy), xyz);
    const std::int64_t lhs2 = F.add(F.add(F.add(1, v.z), F.mul(v.y, v.z)), xyz);
    const std::int64_t t1 = F.add(v.t, 1);
    // t (1+x+xy+xyz)(1+z+yz+xyz) - (t+1)^2 xyz, the fibre equation cleared
    // of denominators.
    return F.sub(F.mul(v.t, F.mul(lhs1, lhs2)), F.mul(F.mul(t1, t1), xyz));
}

MapResult<VerrillPoint> to_verrill(const PrimeField& F, const NPoint& pt) {
    if (!in_U(F, pt)) return failed<VerrillPoint>("input not in U");
    VerrillPoint v;
    v.t = F.mul(pt.x[0], F.inv(pt.x[1]));
    if (v.t == 0 || v.t == F.p() - 1)
        return indet<VerrillPoint>("t in {0, -1}, base locus of the fibration");
    // Cremona chart (x2 : x3 : x4 : x5) = (1 : x : xy : xyz).
    v.x = F.mul(pt.x[3], F.inv(pt.x[2]));
    v.y = F.mul(pt.x[4], F.inv(pt.x[3]));
    v.z = F.mul(pt.x[5], F.inv(pt.x[4]));
    if (verrill_residual(F, v) != 0)
        return failed<VerrillPoint>("image misses the Verrill fibre");
    return ok(v);
}

MapResult<NPoint> from_verrill(const PrimeField& F, const VerrillPoint& in) {
    const VerrillPoint v{F.reduce(in.t), F.reduce(in.x), F.reduce(in.y), F.reduce(in.z)};
    if (v.t == 0 || v.t == F.p() - 1)
        return indet<NPoint>("t in {0, -1}, base locus of the fibration");
    if (v.x == 0 || v.y == 0 || v.z == 0)
        return failed<NPoint>("chart coordinates must be nonzero");
    if (verrill_residual(F, v) != 0)
        return failed<NPoint>("not on the Verrill fibre");
    const std::int64_t c2 = 1;
    const std::int64_t c3 = v.x;
    const std::int64_t c4 = F.mul(v.x, v.y);
    const std::int64_t c5 = F.mul(c4, v.z);
    const std::int64_t e1 = F.add(F.add(F.add(c2, c3), c4), c5);
    if (e1 == 0) return indet<NPoint>("e1(x2..x5) = 0, inverse undefined");
    // x1 = -e1/(t+1), x0 = t x1; the hyperplane equation then holds by
    // construction and sigma_5 = 0 is equivalent to the fibre equation.
    const std::int64_t x1 = F.mul(F.neg(e1), F.inv(F.add(v.t, 1)));
    const std::int64_t x0 = F.mul(v.t, x1);
    NPoint x{{x0, x1, c2, c3, c4, c5}};
    if (!on_N(F, x)) return failed<NPoint>("reconstructed point misses N");
    return ok(x);
}

namespace {

void roundtrip_one(const PrimeField& F, const NPoint& pt, RoundtripReport& rep) {
    ++rep.samples;

    const auto b = to_beauville(F, pt);
    if (!b.ok()) {
        ++rep.beauville.failed;
        rep.failures.push_back("to_beauville: " + b.note);
    } else {
        const auto back = from_beauville(F, b.value);
        if (back.indeterminate()) {
            ++rep.beauville.indeterminate;
        } else if (back.ok() && projective_eq(F, back.value, pt)) {
            ++rep.beauville.ok;
        } else {
            ++rep.beauville.failed;
            rep.failures.push_back("beauville roundtrip lost the point: " + back.note);
        }
    }

    const auto v = to_verrill(F, pt);
    if (v.indeterminate()) {
        ++rep.verrill.indeterminate;
    } else if (!v.ok()) {
        ++rep.verrill.failed;
        rep.failures.push_back("to_verrill: " + v.note);
    } else {
        const auto back = from_verrill(F, v.value);
        if (back.indeterminate()) {
            ++rep.verrill.indeterminate;
        } else if (back.ok() && projective_eq(F, back.value, pt)) {
            ++rep.verrill.ok;
        } else {
            ++rep.verrill.failed;
            rep.failures.push_back("verrill roundtrip lost the point: " + back.note);
        }
    }
}

}  // namespace

RoundtripReport roundtrip_check(const PrimeField& F, std::size_t n, std::uint64_t seed) {
    RoundtripReport rep;
    rep.p = F.p();
    if (n == 0) return rep;
    for (const NPoint& pt : sample_points_U(F, n, seed)) roundtrip_one(F, pt, rep);
    return rep;
}

RoundtripReport roundtrip_check_exhaustive(const PrimeField& F) {
    RoundtripReport rep;
    rep.p = F.p();
    rep.exhaustive = true;
    for (const NPoint& pt : enumerate_U(F)) roundtrip_one(F, pt, rep);
    return rep;
}

}  // namespace bnq
