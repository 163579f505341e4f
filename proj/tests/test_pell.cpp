#include <doctest.h>

#include <random>
#include <set>

#include "ppt/pell.hpp"

using namespace ppt;

namespace {

QuadInt Q(long x, long y)
{
    return QuadInt(Int(x), Int(y));
}

}  // namespace

TEST_CASE("recurrence coefficients")
{
    auto rc = [](std::uint64_t n) { return recurrence_coeffs(n); };
    CHECK(rc(0).A == 1);
    CHECK(rc(0).B == 0);
    CHECK(rc(1).A == 3);
    CHECK(rc(1).B == 2);
    CHECK(rc(2).A == 17);
    CHECK(rc(2).B == 12);
    CHECK(rc(7).n == 7);
}

TEST_CASE("apply_delta_power examples")
{
    CHECK(apply_delta_power(Q(1, 1), 1) == Q(7, 5));
    CHECK(apply_delta_power(Q(1, 1), 2) == Q(41, 29));
    CHECK(apply_delta_power(Q(-13, 8), 0) == Q(-13, 8));
}

TEST_CASE("recurrence equals repeated multiplication, n <= 50")
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> d(-10'000, 10'000);
    for (int i = 0; i < 20; ++i) {
        const QuadInt t = Q(d(rng), d(rng));
        QuadInt power = t;
        QuadInt inverse = t;
        for (std::uint64_t n = 0; n <= 50; ++n) {
            REQUIRE(apply_delta_power(t, n) == power);
            REQUIRE(apply_conj_delta_power(t, n) == inverse);
            REQUIRE(apply_delta_power_signed(t, static_cast<std::int64_t>(n)) == power);
            REQUIRE(apply_delta_power_signed(t, -static_cast<std::int64_t>(n)) == inverse);
            power = power * delta();
            inverse = inverse * conjugate(delta());
        }
    }
}

TEST_CASE("neg_pell_solution examples")
{
    const auto s0 = neg_pell_solution(0);
    CHECK(s0.x == 1);
    CHECK(s0.y == 1);
    const auto s1 = neg_pell_solution(1);
    CHECK(s1.x == 7);
    CHECK(s1.y == 5);
    const auto sm1 = neg_pell_solution(-1);
    CHECK(sm1.x == -1);
    CHECK(sm1.y == 1);
    CHECK(sm1.m == -1);
}

TEST_CASE("negative Pell identity for |m| <= 50")
{
    for (std::int64_t m = -50; m <= 50; ++m) {
        const auto s = neg_pell_solution(m);
        REQUIRE(s.x * s.x - 2 * s.y * s.y == -1);
    }
}

TEST_CASE("gamma delta^m through the coefficients, m <= 30")
{
    QuadInt direct = fundamental_unit();
    for (std::uint64_t m = 0; m <= 30; ++m) {
        const auto rc = recurrence_coeffs(m);
        REQUIRE(QuadInt(Int(rc.A + 2 * rc.B), Int(rc.A + rc.B)) == direct);
        direct = direct * delta();
    }
}

TEST_CASE("every solution of x^2 - 2y^2 = -1 with y <= 10^5 is +-gamma delta^m")
{
    std::set<std::pair<long, long>> from_units;
    for (std::int64_t m = -10; m <= 10; ++m) {
        const auto s = neg_pell_solution(m);
        if (abs(s.y) <= 100'000 && abs(s.x) <= 1'000'000)
            from_units.emplace(Int(abs(s.x)).get_si(), Int(abs(s.y)).get_si());
    }
    std::set<std::pair<long, long>> scanned;
    for (long y = 1; y <= 100'000; ++y) {
        const Int x2 = Int(2) * y * y - 1;
        if (is_square(x2))
            scanned.emplace(exact_sqrt(x2)->get_si(), y);
    }
    CHECK(scanned == from_units);
    CHECK(scanned.size() == 7);  // y = 1, 5, 29, 169, 985, 5741, 33461
}
