#include <doctest.h>

#include <numeric>
#include <set>
#include <tuple>

#include "ppt/triple.hpp"

using namespace ppt;

namespace {

Triple T(long a, long b, long c)
{
    return Triple(Int(a), Int(b), Int(c));
}

}  // namespace

TEST_CASE("Triple construction validates eagerly")
{
    CHECK_NOTHROW(T(3, 4, 5));
    CHECK_THROWS_AS(T(1, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(T(0, 5, 5), std::invalid_argument);
    CHECK_THROWS_AS(T(-3, 4, 5), std::invalid_argument);
    CHECK(T(4, 3, 5).normalized() == T(3, 4, 5));
    CHECK(T(15, 8, 17).normalized() == T(15, 8, 17));
    CHECK(T(8, 6, 10).normalized() == T(6, 8, 10));
}

TEST_CASE("from_params")
{
    CHECK(from_params(ParamPair(2, 1)) == T(3, 4, 5));
    CHECK(from_params(ParamPair(4, 1)) == T(15, 8, 17));
    CHECK_THROWS_AS(ParamPair(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(ParamPair(2, 5), std::invalid_argument);
    CHECK_THROWS_AS(ParamPair(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(ParamPair(-1, -2), std::invalid_argument);
}

TEST_CASE("is_primitive")
{
    CHECK(is_primitive(T(3, 4, 5)));
    CHECK_FALSE(is_primitive(T(6, 8, 10)));
    CHECK(is_primitive(T(15, 8, 17)));
}

TEST_CASE("primitive_from_params")
{
    CHECK(primitive_from_params(ParamPair(2, 1)));
    CHECK_FALSE(primitive_from_params(ParamPair(3, 1)));
    CHECK(from_params(ParamPair(3, 1)) == T(8, 6, 10));
    CHECK_FALSE(primitive_from_params(ParamPair(9, 6)));

    for (long r = 2; r <= 80; ++r) {
        for (long s = 1; s < r; ++s) {
            const ParamPair p(r, s);
            REQUIRE(primitive_from_params(p) == is_primitive(from_params(p)));
        }
    }
}

TEST_CASE("to_params")
{
    CHECK(to_params(T(3, 4, 5)) == ParamPair(2, 1));
    CHECK(to_params(T(4, 3, 5)) == ParamPair(2, 1));
    CHECK(to_params(T(15, 8, 17)) == ParamPair(4, 1));
    CHECK_THROWS_AS(to_params(T(6, 8, 10)), std::invalid_argument);
}

TEST_CASE("round trip through the parametrization, r <= 200")
{
    for (long r = 2; r <= 200; ++r) {
        for (long s = 1; s < r; ++s) {
            if (std::gcd(r, s) != 1 || (r - s) % 2 == 0)
                continue;
            const ParamPair p(r, s);
            REQUIRE(to_params(from_params(p)) == p);
        }
    }
}

TEST_CASE("classify")
{
    const TripleClass tc = classify(T(15, 8, 17));
    CHECK(tc.primitive);
    CHECK(tc.even_leg == EvenLeg::B);
    CHECK(tc.g == 2);
    CHECK(tc.f == 7);
    CHECK(classify(T(6, 8, 10)).even_leg == EvenLeg::Both);
    CHECK(classify(T(4, 3, 5)).even_leg == EvenLeg::A);
}

TEST_CASE("enumerate_ppts examples")
{
    CHECK(enumerate_ppts(5) == std::vector<Triple>{T(3, 4, 5)});
    CHECK(enumerate_ppts(17) == std::vector<Triple>{T(3, 4, 5), T(5, 12, 13), T(15, 8, 17)});
    CHECK(enumerate_ppts(4).empty());
    CHECK(enumerate_ppts(1).empty());
}

TEST_CASE("enumerate_ppts against a naive (a, b) double loop, c <= 100")
{
    std::set<std::tuple<long, long, long>> naive;
    for (long a = 1; a < 100; ++a) {
        for (long b = a + 1; b < 100; ++b) {
            const long cc = a * a + b * b;
            long c = 1;
            while (c * c < cc)
                ++c;
            if (c * c == cc && c <= 100 && std::gcd(a, b) == 1)
                naive.emplace(a, b, c);
        }
    }
    std::set<std::tuple<long, long, long>> oracle;
    for (const Triple& t : enumerate_ppts(100)) {
        const long a = t.a().get_si(), b = t.b().get_si();
        oracle.emplace(std::min(a, b), std::max(a, b), t.c().get_si());
    }
    CHECK(naive.size() == 16);
    CHECK(oracle == naive);
}

TEST_CASE("enumerate_ppts invariants, c <= 20000")
{
    const auto all = enumerate_ppts(20'000);
    std::set<Triple> seen(all.begin(), all.end());
    CHECK(seen.size() == all.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        const Triple& t = all[i];
        CHECK(is_primitive(t));
        CHECK(is_odd(t.a()));
        CHECK_FALSE(is_odd(t.b()));
        CHECK(is_odd(t.c()));
        if (i > 0)
            CHECK(all[i - 1] < t);
    }
}
