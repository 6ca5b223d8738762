#include <doctest.h>

#include <stdexcept>

#include "bnq/modularity.hpp"

using bnq::VerifyConfig;

TEST_SUITE("modularity") {

TEST_CASE("livne prime set for S = {2, 3}") {
    const bnq::LivneSet L = bnq::livne_prime_set({2, 3});
    CHECK(L.m == 24);
    CHECK(L.T == std::vector<std::int64_t>{5, 7, 11, 13, 17, 19, 23, 73});
    CHECK_FALSE(L.beyond_standard);
    // Order and duplicates in S must not matter.
    const bnq::LivneSet L2 = bnq::livne_prime_set({3, 2, 3});
    CHECK(L2.m == L.m);
    CHECK(L2.T == L.T);
}

TEST_CASE("livne prime set beyond the standard bad set") {
    const bnq::LivneSet L = bnq::livne_prime_set({2, 3, 5});
    CHECK(L.m == 120);
    CHECK(L.beyond_standard);
    CHECK(L.T.size() == 32);  // phi(120) = 32 residue classes, one witness each
    CHECK(L.T.front() == 7);
    CHECK(L.T.back() == 409);
}

TEST_CASE("livne prime set input validation") {
    CHECK_THROWS_AS(bnq::livne_prime_set({3, 5}), std::invalid_argument);   // missing 2
    CHECK_THROWS_AS(bnq::livne_prime_set({2, 9}), std::invalid_argument);   // composite
    CHECK_THROWS_AS(bnq::livne_prime_set({}), std::invalid_argument);
}

TEST_CASE("hodge solver pins h21 = 0 at p = 13") {
    const bnq::HodgeSolution y = bnq::hodge_solver(13, 11260, 50);
    REQUIRE(y.determined());
    CHECK(y.h21() == 0);
    CHECK(y.h11() == 50);
    CHECK(y.h11_cy() == 50);
    CHECK(y.euler() == 100);

    const bnq::HodgeSolution z = bnq::hodge_solver(13, 13080, 60);
    REQUIRE(z.determined());
    CHECK(z.h21() == 0);
    CHECK(z.h11() == 60);
    CHECK(z.h11_cy() == 40);
    CHECK(z.euler() == 80);
}

TEST_CASE("hodge solver at p = 5 is inconclusive on purpose") {
    // The bound is too loose at small p: three candidates survive.
    const bnq::HodgeSolution s = bnq::hodge_solver(5, 1620, 50);
    CHECK_FALSE(s.determined());
    CHECK(s.admissible == std::vector<std::int64_t>{0, 1, 2});
    const bnq::HodgeSolution t = bnq::hodge_solver(5, 1920, 60);
    CHECK(t.admissible == std::vector<std::int64_t>{0, 1, 2});
}

TEST_CASE("h2 eigenvalue multiplicity k at p = 3 mod 4") {
    struct Row {
        std::int64_t p, n_Ytilde;
    };
    // n_Ytilde frozen from the quartic enumeration.
    const Row rows[] = {{7, 2600},   {11, 6600},  {19, 22040}, {23, 34080},
                        {31, 69560}, {43, 155240}, {47, 194160}, {59, 347640}};
    for (const auto& r : rows) {
        const bnq::KSolution k = bnq::h2_eigenvalue_k_solver(r.p, r.n_Ytilde);
        CHECK(k.k == 40);
        CHECK(k.p == r.p);
    }
}

TEST_CASE("k solver refuses ambiguous inputs") {
    // 540 = 1 + 343 + 56k + 28 sits exactly between two lattice points at
    // p = 7, where the strict Weil window is wider than the lattice spacing.
    CHECK_THROWS_AS(bnq::h2_eigenvalue_k_solver(7, 540), std::runtime_error);
}

TEST_CASE("trace comparison rows carry both sides") {
    const bnq::QExpansion f = bnq::f_coefficients(73);
    const auto rows = bnq::compare_traces({5, 7, 73}, f, bnq::direct_counts(2));
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].t3 == 6);
    CHECK(rows[0].a_p == 6);
    CHECK(rows[1].t3 == -16);
    CHECK(rows[2].p == 73);
    CHECK(rows[2].t3 == 218);
    CHECK(rows[2].a_p == 218);
    for (const auto& r : rows) CHECK(r.match);
}

TEST_CASE("determinant and parity side conditions") {
    const bnq::QExpansion f = bnq::f_coefficients(23);
    auto rows = bnq::compare_traces({5, 7, 11, 13, 17, 19, 23}, f, bnq::direct_counts());
    CHECK(bnq::determinant_check(rows));
    CHECK(bnq::parity_check(rows));
    for (const auto& r : rows) {
        CHECK(r.det_ok);
        CHECK(r.parity_ok);
        CHECK(r.t3 % 2 == 0);
    }
}

TEST_CASE("full verification with defaults") {
    VerifyConfig cfg;
    cfg.threads = 2;
    const bnq::VerificationReport rep = bnq::full_verification(cfg);
    CHECK(rep.verified());
    CHECK(rep.verdict == "verified");
    CHECK(rep.rows.size() == 23);  // good primes up to 100; T is a subset
    CHECK(rep.livne.m == 24);
    REQUIRE(rep.hodge.size() == 2);
    CHECK(rep.hodge[0].base == 50);
    CHECK(rep.hodge[0].determined());
    CHECK(rep.hodge[1].base == 60);
    CHECK(rep.hodge[1].determined());
    CHECK(rep.k_values.size() == 8);
    for (const auto& k : rep.k_values) CHECK(k.k == 40);
    CHECK(rep.bad_euler_factors == "undetermined");
}

TEST_CASE("restricting the witness set degrades the verdict to incomplete") {
    VerifyConfig cfg;
    cfg.restrict_T = std::vector<std::int64_t>{5, 7};
    cfg.trace_limit = 7;  // don't let the sweep fill the coverage back in
    const auto rep = bnq::full_verification(cfg);
    CHECK_FALSE(rep.verified());
    CHECK(rep.verdict.substr(0, 10) == "incomplete");
}

TEST_CASE("a planted count discrepancy is reported as a trace mismatch") {
    VerifyConfig cfg;
    cfg.counts = [](std::int64_t p) {
        bnq::CountRecord rec = bnq::count_record(bnq::PrimeField(p));
        if (p == 11) return bnq::derive_record(p, rec.n_U + 2, rec.n_U_square, rec.method);
        return rec;
    };
    const auto rep = bnq::full_verification(cfg);
    CHECK_FALSE(rep.verified());
    CHECK(rep.verdict == "failed: trace mismatch at p=11");
}

TEST_CASE("the hodge prime must split both base cases") {
    VerifyConfig cfg;
    cfg.hodge_prime = 7;  // 3 mod 4
    CHECK_THROWS_AS(bnq::full_verification(cfg), std::invalid_argument);
}

}  // TEST_SUITE
