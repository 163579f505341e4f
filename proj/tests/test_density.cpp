#include <doctest.h>

#include <cmath>
#include <numeric>
#include <set>

#include "ppt/density.hpp"
#include "ppt/triple.hpp"

using namespace ppt;

namespace {

std::uint32_t phi_by_gcd(std::uint64_t n)
{
    std::uint32_t count = 0;
    for (std::uint64_t k = 1; k <= n; ++k)
        count += std::gcd(k, n) == 1;
    return count;
}

int mu_by_factoring(std::uint64_t n)
{
    int mu = 1;
    for (const PrimePower& pp : factor_u64(n)) {
        if (pp.t > 1)
            return 0;
        mu = -mu;
    }
    return mu;
}

struct PairCounts {
    std::uint64_t pool = 0, go = 0, gee = 0, geo = 0;
};

// Coprime pairs 0 < m < k <= B by parity class, counted cumulatively.
std::vector<PairCounts> brute_pair_counts(std::uint64_t bound)
{
    std::vector<PairCounts> out(bound + 1);
    PairCounts run;
    for (std::uint64_t k = 1; k <= bound; ++k) {
        for (std::uint64_t m = 1; m < k; ++m) {
            if (std::gcd(m, k) != 1)
                continue;
            ++run.pool;
            const bool mo = m % 2 == 1, ko = k % 2 == 1;
            if (mo && ko)
                ++run.go;
            else if (!mo && ko)
                ++run.gee;
            else if (mo && !ko)
                ++run.geo;
        }
        out[k] = run;
    }
    return out;
}

}  // namespace

TEST_CASE("sieve examples")
{
    const auto s = TotientSieve::build(30);
    const std::vector<std::uint32_t> table{1, 1, 2, 2, 4, 2, 6, 4, 6, 4};
    for (std::uint64_t n = 1; n <= 10; ++n)
        CHECK(s.phi(n) == table[n - 1]);
    CHECK(s.mu(12) == 0);
    CHECK(s.mu(1) == 1);
    CHECK(s.mu(30) == -1);
    CHECK_THROWS_AS(s.phi(31), std::out_of_range);
    CHECK_THROWS_AS(s.phi(0), std::out_of_range);
    CHECK_THROWS_AS(TotientSieve::build(0), std::invalid_argument);
}

TEST_CASE("sieve matches direct phi and mu, n <= 10^4")
{
    const auto s = TotientSieve::build(10'000);
    for (std::uint64_t n = 1; n <= 10'000; ++n) {
        REQUIRE(s.phi(n) == phi_by_gcd(n));
        REQUIRE(s.mu(n) == mu_by_factoring(n));
    }
}

TEST_CASE("phi2 and its divisor sum")
{
    const auto s = TotientSieve::build(100);
    CHECK(phi2(9, s) == 6);
    CHECK(phi2(8, s) == 0);
    CHECK(phi2(1, s) == 1);
    CHECK(phi2_divisor_sum(12) == 3);
    CHECK(phi2_divisor_sum(9) == 9);
    CHECK(phi2_divisor_sum(1) == 1);
    CHECK_THROWS_AS(phi2_divisor_sum(0), std::invalid_argument);
}

TEST_CASE("divisor sum of phi2 is the odd part, and Moebius inverts it, n <= 10^4")
{
    const auto s = TotientSieve::build(10'000);
    for (std::uint64_t n = 1; n <= 10'000; ++n) {
        REQUIRE(phi2_divisor_sum(n) == odd_part(n));
        REQUIRE(moebius_inversion_check(n, s));
    }
    CHECK(moebius_inversion_check(9, s));
    CHECK(moebius_inversion_check(8, s));
    CHECK(moebius_inversion_check(1, s));
}

TEST_CASE("an odd N has phi(N)/2 odd coprime residues below it")
{
    for (std::uint64_t N = 3; N <= 5001; N += 2) {
        std::uint64_t odd_coprime = 0;
        for (std::uint64_t m = 1; m < N; m += 2)
            odd_coprime += std::gcd(m, N) == 1;
        REQUIRE(2 * odd_coprime == euler_phi_u64(N));
    }
}

TEST_CASE("summatory and count examples")
{
    const auto s = TotientSieve::build(10);
    CHECK(sum_phi(10, s) == 32);
    CHECK(sum_phi2(10, s) == 19);
    CHECK(sum_phi(1, s) == 1);
    CHECK(count_pool(10, s) == 31);
    CHECK(count_pool(2, s) == 1);
    CHECK(count_pool(1, s) == 0);
    CHECK(count_GO(10, s) == 9);
    CHECK(count_GEO(10, s) == 13);
    CHECK(count_GEE(10, s) == 9);
    CHECK(count_G1(10) == 9);
    CHECK(count_G1(1) == 0);
    CHECK_THROWS_AS(sum_phi(11, s), SieveBudgetExceeded);
}

TEST_CASE("formula counts against pair enumeration, B <= 2000")
{
    const std::uint64_t bound = 2000;
    const auto s = TotientSieve::build(bound);
    const auto brute = brute_pair_counts(bound);
    for (std::uint64_t B = 1; B <= bound; ++B) {
        INFO("B = " << B);
        REQUIRE(count_pool(B, s) == brute[B].pool);
        REQUIRE(count_GO(B, s) == brute[B].go);
        REQUIRE(count_GEE(B, s) == brute[B].gee);
        REQUIRE(count_GEO(B, s) == brute[B].geo);
    }
}

TEST_CASE("density_report")
{
    const auto s = TotientSieve::build(100'000);
    const auto go = density_report(Family::GO, {10}, s);
    REQUIRE(go.size() == 1);
    CHECK(go[0].family_count == 9);
    CHECK(go[0].pool_count == 31);
    CHECK(go[0].ratio == Rational(9, 31));
    CHECK(format_fixed(go[0].ratio, 6) == "0.290323");
    CHECK(go[0].predicted == doctest::Approx(1.0 / 3));

    const auto g1 = density_report(Family::G1, {10, 1000, 100'000}, s);
    CHECK(g1[0].ratio == Rational(9, 31));
    CHECK(g1[0].predicted == 0.0);
    CHECK(g1[1].ratio < g1[0].ratio);
    CHECK(g1[2].ratio < Rational(1, 10'000));

    CHECK(density_report(Family::GEO, {10}, s)[0].family_count == 13);
    CHECK(density_report(Family::GEE, {1}, s)[0].ratio == 0);

    CHECK(predicted_density(Family::GEE) == Rational(1, 3));
    CHECK(predicted_density(Family::G1) == 0);

    CHECK_THROWS_AS(density_report(Family::GO, {100, 10}, s), std::invalid_argument);
    CHECK_THROWS_AS(density_report(Family::GO, {10, 10}, s), std::invalid_argument);
    CHECK_THROWS_AS(density_report(Family::GO, {0}, s), std::invalid_argument);
    CHECK_THROWS_AS(density_report(Family::GO, {200'000}, s), SieveBudgetExceeded);
}

TEST_CASE("family names")
{
    for (Family f : {Family::GO, Family::GEE, Family::GEO, Family::G1})
        CHECK(parse_family(to_string(f)) == f);
    CHECK_FALSE(parse_family("go").has_value());
    CHECK_FALSE(parse_family("").has_value());
}

TEST_CASE("sieve budget")
{
    CHECK_THROWS_AS(TotientSieve::build(1001, 1000), SieveBudgetExceeded);
    CHECK_NOTHROW(TotientSieve::build(1000, 1000));
}

TEST_CASE("asymptotic fit, B from 10^3 to 10^6")
{
    const auto s = TotientSieve::build(1'000'000);
    const std::vector<std::uint64_t> grid{1000, 10'000, 100'000, 1'000'000};
    for (Summatory which : {Summatory::Phi, Summatory::Phi2}) {
        const AsymptoticFit fit = fit_asymptotic(which, grid, s);
        REQUIRE(fit.points.size() == grid.size());
        for (const auto& p : fit.points) {
            CHECK(p.rel_error == doctest::Approx(std::abs(p.normalized - 1.0)));
            CHECK(p.c_log == doctest::Approx(p.rel_error * p.B / std::log(double(p.B))));
            CHECK(p.c_log <= fit.c_log);
        }
        MESSAGE(std::string(which == Summatory::Phi ? "sum phi" : "sum phi2") << ": C_log = " << fit.c_log
                << ", C_log2 = " << fit.c_log2 << ", monotone = " << fit.monotone);
        CHECK(fit.points.back().rel_error < 1e-3);
        // The error constant stays bounded along the grid.
        CHECK(fit.c_log < 10.0);
    }
    CHECK_THROWS_AS(fit_asymptotic(Summatory::Phi, {1}, s), std::invalid_argument);
}

TEST_CASE("geometric images of the families, B = 500")
{
    const std::uint64_t B = 500;
    // Oracle bound: r <= B means c = r^2 + s^2 < 2 B^2.
    const auto oracle = enumerate_ppts(2 * B * B);
    std::set<Triple> r_plus_s, r_only;
    for (const Triple& t : oracle) {
        const ParamPair p = to_params(t);
        if (p.r() + p.s() <= B)
            r_plus_s.insert(t);
        if (p.r() <= B)
            r_only.insert(t);
    }

    // Odd coprime m < k: r = (k + m)/2, s = (k - m)/2.
    std::set<Triple> go_image;
    std::uint64_t go_pairs = 0;
    for (std::uint64_t k = 3; k <= B; k += 2) {
        for (std::uint64_t m = 1; m < k; m += 2) {
            if (std::gcd(m, k) != 1)
                continue;
            ++go_pairs;
            const Triple t = from_params(ParamPair((k + m) / 2, (k - m) / 2)).normalized();
            CHECK(to_params(t).r() <= B);
            go_image.insert(t);
        }
    }
    const auto s = TotientSieve::build(B);
    CHECK(go_pairs == count_GO(B, s));
    CHECK(go_image.size() == go_pairs);
    CHECK(go_image == r_plus_s);

    // Opposite-parity coprime pairs used directly as (r, s).
    std::set<Triple> mixed_image;
    for (std::uint64_t k = 2; k <= B; ++k)
        for (std::uint64_t m = 1; m < k; ++m)
            if ((k + m) % 2 == 1 && std::gcd(m, k) == 1)
                mixed_image.insert(from_params(ParamPair(k, m)).normalized());
    CHECK(mixed_image.size() == count_GEE(B, s) + count_GEO(B, s));
    CHECK(mixed_image == r_only);
}
