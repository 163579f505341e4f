#include "ppt/verify.hpp"

#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "ppt/density.hpp"
#include "ppt/f_family.hpp"
#include "ppt/g_family.hpp"
#include "ppt/pell.hpp"
#include "ppt/triple.hpp"

namespace ppt {

void VerifyReport::fail(std::string what)
{
    ++failed;
    if (!counterexample)
        counterexample = std::move(what);
}

namespace {

template <typename T>
std::string show(const T& v)
{
    std::ostringstream os;
    os << v;
    return os.str();
}

std::uint64_t isqrt_u64(std::uint64_t v)
{
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
    while (r * r > v)
        --r;
    while ((r + 1) * (r + 1) <= v)
        ++r;
    return r;
}

}  // namespace

VerifyReport verify_g_coverage(std::uint64_t c_max)
{
    VerifyReport rep{"g-coverage"};
    for (const Triple& t : enumerate_ppts(c_max)) {
        for (const Triple& oriented : {t, t.swapped()}) {
            ++rep.checked;
            try {
                const FamilyCoordinates fc = invert_to_family(oriented);
                const bool g_odd = is_odd(fc.gclass.g);
                const bool kind_ok = g_odd ? fc.gclass.kind == GKind::OddSquare
                                           : fc.gclass.kind != GKind::OddSquare;
                auto item = family_item(fc.gclass, fc.n);
                if (!kind_ok || !item || !(item->triple == oriented))
                    rep.fail("triple " + show(oriented) + " not regenerated at g=" + fc.gclass.g.get_str() +
                             " n=" + std::to_string(fc.n));
            } catch (const std::exception& e) {
                rep.fail("triple " + show(oriented) + ": " + e.what());
            }
        }
    }
    return rep;
}

VerifyReport verify_f_coverage(std::uint64_t c_max, const std::vector<std::uint64_t>& fs, std::int64_t m_max)
{
    VerifyReport rep{"f-coverage"};
    const auto oracle = enumerate_ppts(c_max);
    for (std::uint64_t f : fs) {
        const FSpec spec = admissible_f(from_u64(f));
        std::set<Triple> generated;
        for (const FTriple& ft : generate_f_triples(spec, -m_max, m_max)) {
            ++rep.checked;
            if (!verify_f_triple(ft, spec))
                rep.fail("generated " + show(ft.triple) + " fails verification for f=" + std::to_string(f));
            generated.insert(ft.triple);
        }
        for (const Triple& t : oracle) {
            const Triple ordered = cmp(t.a(), t.b()) < 0 ? t : t.swapped();
            if (ordered.b() - ordered.a() != f)
                continue;
            ++rep.checked;
            if (!generated.count(ordered))
                rep.fail("oracle triple " + show(ordered) + " missing from the f=" + std::to_string(f) + " sweep");
        }
    }
    return rep;
}

VerifyReport verify_nonexistence(std::uint64_t c_max)
{
    VerifyReport rep{"nonexistence"};
    if (c_max > (std::uint64_t{1} << 30))
        throw UnsupportedRange("nonexistence scan limited to c_max <= 2^30");
    const std::set<std::uint64_t> bad_g(kInadmissibleGSample.begin(), kInadmissibleGSample.end());
    const std::set<std::uint64_t> bad_f(kInadmissibleFSample.begin(), kInadmissibleFSample.end());

    for (const Triple& t : enumerate_ppts(c_max)) {
        ++rep.checked;
        const std::uint64_t a = to_u64(t.a()), b = to_u64(t.b()), c = to_u64(t.c());
        if (bad_g.count(c - a) || bad_g.count(c - b))
            rep.fail("oracle triple " + show(t) + " has an inadmissible g");
        if (bad_f.count(a > b ? a - b : b - a))
            rep.fail("oracle triple " + show(t) + " has an inadmissible f");
    }

    // a^2 = g (2b + g) for a triple (a, b, b + g).
    for (std::uint64_t g : kInadmissibleGSample) {
        for (std::uint64_t b = 1; b + g <= c_max; ++b) {
            ++rep.checked;
            const std::uint64_t sq = g * (2 * b + g);
            const std::uint64_t a = isqrt_u64(sq);
            if (a * a == sq && std::gcd(a, b) == 1)
                rep.fail("direct scan: (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                         std::to_string(b + g) + ")");
        }
    }
    // c^2 = a^2 + (a + f)^2.
    for (std::uint64_t f : kInadmissibleFSample) {
        for (std::uint64_t a = 1;; ++a) {
            const std::uint64_t sq = a * a + (a + f) * (a + f);
            if (sq > c_max * c_max)
                break;
            ++rep.checked;
            const std::uint64_t c = isqrt_u64(sq);
            if (c * c == sq && std::gcd(a, a + f) == 1)
                rep.fail("direct scan: (" + std::to_string(a) + ", " + std::to_string(a + f) + ", " +
                         std::to_string(c) + ")");
        }
    }
    return rep;
}

VerifyReport verify_pell(std::int64_t m_max, std::uint64_t y_max)
{
    VerifyReport rep{"pell"};
    const QuadInt gamma = fundamental_unit();
    const QuadInt d = delta();
    const QuadInt d_inv = conjugate(d);

    std::set<std::pair<Int, Int>> known;
    QuadInt up = gamma, down = gamma;
    for (std::int64_t m = 0; m <= m_max; ++m) {
        for (std::int64_t signed_m : {m, -m}) {
            const PellSolution sol = neg_pell_solution(signed_m);
            const QuadInt& direct = signed_m >= 0 ? up : down;
            ++rep.checked;
            if (sol.x * sol.x - 2 * sol.y * sol.y != -1)
                rep.fail("x^2 - 2y^2 != -1 at m=" + std::to_string(signed_m));
            if (sol.x != direct.x || sol.y != direct.y)
                rep.fail("gamma*delta^m mismatch at m=" + std::to_string(signed_m));
            known.emplace(sol.x, sol.y);
            known.emplace(-sol.x, -sol.y);
        }
        up = up * d;
        down = down * d_inv;
    }
    // The converse scan below reaches y_max whatever m_max is.
    while (abs(up.y) <= from_u64(y_max) || abs(down.y) <= from_u64(y_max)) {
        for (const QuadInt* q : {&up, &down}) {
            known.emplace(q->x, q->y);
            known.emplace(-q->x, -q->y);
        }
        up = up * d;
        down = down * d_inv;
    }

    // Recurrence against repeated multiplication on a fixed spread of t.
    const std::vector<QuadInt> probes{{1, 1}, {2, -3}, {-7, 5}, {11, 0}, {0, 4}, {123456789, -987654321}};
    for (const QuadInt& t : probes) {
        QuadInt power = t;
        for (std::int64_t n = 0; n <= m_max; ++n) {
            ++rep.checked;
            if (!(apply_delta_power(t, static_cast<std::uint64_t>(n)) == power))
                rep.fail("recurrence mismatch for t=" + show(t) + " n=" + std::to_string(n));
            power = power * d;
        }
    }

    for (std::uint64_t y = 1; y <= y_max; ++y) {
        const Int yy = from_u64(y);
        auto x = exact_sqrt(Int(2 * yy * yy - 1));
        if (!x)
            continue;
        for (const Int& xs : {*x, Int(-*x)}) {
            ++rep.checked;
            if (!known.count({xs, yy}))
                rep.fail("solution (" + xs.get_str() + ", " + yy.get_str() + ") is not +-gamma*delta^m");
        }
    }
    return rep;
}

VerifyReport verify_density_cross(std::uint64_t bound)
{
    VerifyReport rep{"density-cross"};
    const TotientSieve sieve = TotientSieve::build(std::max<std::uint64_t>(bound, 1));
    std::uint64_t pool = 0, go = 0, gee = 0, geo = 0;
    for (std::uint64_t k = 1; k <= bound; ++k) {
        for (std::uint64_t m = 1; m < k; ++m) {
            if (std::gcd(k, m) != 1)
                continue;
            ++pool;
            const bool k_odd = k & 1u, m_odd = m & 1u;
            go += k_odd && m_odd;
            gee += k_odd && !m_odd;
            geo += !k_odd && m_odd;
        }
        rep.checked += 4;
        auto expect = [&](const char* name, std::uint64_t formula, std::uint64_t brute) {
            if (formula != brute)
                rep.fail(std::string(name) + "(" + std::to_string(k) + ") = " + std::to_string(formula) +
                         ", enumeration gives " + std::to_string(brute));
        };
        expect("count_pool", count_pool(k, sieve), pool);
        expect("count_GO", count_GO(k, sieve), go);
        expect("count_GEE", count_GEE(k, sieve), gee);
        expect("count_GEO", count_GEO(k, sieve), geo);
    }
    return rep;
}

}  // namespace ppt
