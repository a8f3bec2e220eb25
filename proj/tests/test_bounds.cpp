// Bound computations: Gilbert-Varshamov in both evaluation paths, the
// achievable/converse sandwich, Singleton, and the two cosine certificates.

#include <catch2/catch_amalgamated.hpp>

#include "spherecode/bounds.hpp"

using namespace spherecode;

TEST_CASE("gilbert-varshamov largest distance") {
    CHECK(gv_largest_dmin(3, 1) == 3);   // 2^2 = 4 > C(2,0) + C(2,1) = 3
    CHECK(gv_largest_dmin(4, 2) == 2);   // d=3 fails: 1 + 3 = 4 is not < 4
    CHECK(gv_largest_dmin(4, 4) == 1);
    CHECK(gv_largest_dmin(1023, 10) == 466);  // log-domain path, no overflow (big-integer oracle value)

    SECTION("log-domain equals the exact path on a sample grid") {
        for (int n = 1; n <= 48; ++n)
            for (int k = 1; k <= n; ++k)
                REQUIRE(gv_largest_dmin_logdomain(n, k) == gv_largest_dmin_exact(n, k));
    }
    SECTION("exact ties stay strict") {
        // structural ties: the partial binomial sum hits 2^(n-k) exactly
        CHECK(gv_largest_dmin_exact(4, 2) == 2);   // tie at d=3 (1+3 = 4 = 2^2)
        CHECK(gv_largest_dmin_logdomain(4, 2) == 2);
        CHECK(gv_largest_dmin_exact(10, 2) == 5);  // tie at d=6 (half sum 256 = 2^8)
        CHECK(gv_largest_dmin_logdomain(10, 2) == 5);
    }
    CHECK_THROWS_AS(gv_largest_dmin_exact(128, 1), std::invalid_argument);
    CHECK_THROWS_AS(gv_largest_dmin(4, 5), std::invalid_argument);
}

TEST_CASE("achievable bound") {
    CHECK(achievable_max_cosine(3, 2) == -1.0);
    CHECK(achievable_max_cosine(4, 4) == 0.0);
    CHECK_THROWS_WITH(achievable_max_cosine(1, 100), "dimension below message length");

    SECTION("the feasible GV distance never shrinks as n grows") {
        // Note the cosine bound 1 - 2 d_GV / n itself is NOT monotone in n:
        // d_GV can stay flat while n grows (k=2: both n=5 and n=6 give
        // d_GV = 3, so the bound moves from -0.2 up to 0).
        for (std::uint64_t K : {2ull, 5ull, 64ull, 100ull}) {
            const int k = ceil_log2(K);
            int prev = 1;
            for (int n = k; n <= 160; ++n) {
                const int d = gv_largest_dmin(n, k);
                REQUIRE(d >= prev);
                prev = d;
            }
        }
    }
}

TEST_CASE("rankin converse") {
    CHECK(rankin_converse(2) == -1.0);
    CHECK(rankin_converse(4) == Catch::Approx(-1.0 / 3.0).margin(1e-16));
    CHECK(rankin_converse(100) == -1.0 / 99.0);
    CHECK_THROWS_AS(rankin_converse(1), std::invalid_argument);
}

TEST_CASE("sandwich: converse never exceeds achievable") {
    for (std::uint64_t K = 2; K <= 256; K += 7) {
        const int k = ceil_log2(K);
        for (int n = k; n <= 300; n += 11)
            REQUIRE(rankin_converse(K) <= achievable_max_cosine(n, K) + 1e-15);
    }
}

TEST_CASE("singleton bound") {
    CHECK(singleton_dmin_upper(4, 2) == 3);
    CHECK(singleton_dmin_upper(9, 1) == 9);
    CHECK(singleton_dmin_upper(9, 9) == 1);
    CHECK_THROWS_AS(singleton_dmin_upper(3, 4), std::invalid_argument);
}

TEST_CASE("binary cosine certificate") {
    CHECK(binary_code_cosine_bound(reed_muller_code(1, 6)) == 0.0);
    CHECK(binary_code_cosine_bound(repetition_code(3)) == -1.0);
    CHECK(binary_code_cosine_bound(bch_code(3, 3)) == Catch::Approx(1.0 / 7.0).margin(1e-15));
    CHECK_THROWS_AS(binary_code_cosine_bound(reed_solomon_code(4, 2)), std::invalid_argument);
}

TEST_CASE("composite cosine certificate") {
    // RS q=4, k=2: d=3, n_q=4, component distance^2 = 8/3
    CHECK(composite_code_cosine_bound(3, 4, simplex_component_min_distance_sq(4)) == Catch::Approx(0.0).margin(1e-15));
    // q = 2 reduction: component distance^2 = 4 makes it the binary certificate
    for (int n = 2; n <= 9; ++n)
        for (int d = 1; d <= n; ++d)
            CHECK(composite_code_cosine_bound(d, n, simplex_component_min_distance_sq(2)) ==
                  Catch::Approx(cosine_from_hamming(d, n)).margin(1e-15));
    // k_q = 1, n_q = 1: the bare simplex component is already optimal
    for (int q : {4, 8, 100})
        CHECK(composite_code_cosine_bound(1, 1, simplex_component_min_distance_sq(q)) ==
              Catch::Approx(-1.0 / (q - 1.0)).margin(1e-15));
    CHECK_THROWS_AS(composite_code_cosine_bound(0, 4, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(composite_code_cosine_bound(1, 1, 4.5), std::invalid_argument);
}

TEST_CASE("bounds report") {
    const BoundsReport r = bounds_report(100, 99);
    CHECK(r.converse_min_of_max_cosine == -1.0 / 99.0);
    CHECK_FALSE(r.onehot_reference.has_value());
    CHECK(r.tightened_achievable() == r.achievable_max_cosine);

    const BoundsReport tight = bounds_report(100, 128);
    REQUIRE(tight.onehot_reference.has_value());
    CHECK(*tight.onehot_reference == 0.0);
    CHECK(tight.tightened_achievable() <= 0.0);

    CHECK_THROWS_AS(bounds_report(100, 1), infeasible_error);
}

TEST_CASE("measured codebooks respect their certificates") {
    const LinearCode rm = reed_muller_code(1, 4);
    const Codebook cb = codebook_from_code(rm, 20);
    CHECK(separation_stats(cb).max_cosine <= binary_code_cosine_bound(rm) + 1e-15);

    // with all codewords selected, a minimum-distance pair is present: equality
    const Codebook full = codebook_from_code(rm, rm.num_codewords());
    CHECK(separation_stats(full).max_cosine == Catch::Approx(binary_code_cosine_bound(rm)).margin(1e-12));
}
