#include "ppt/zsqrt2.hpp"

#include <stdexcept>
#include <tuple>

namespace ppt {

QuadInt operator+(const QuadInt& l, const QuadInt& r)
{
    return {l.x + r.x, l.y + r.y};
}

QuadInt operator-(const QuadInt& l, const QuadInt& r)
{
    return {l.x - r.x, l.y - r.y};
}

QuadInt operator*(const QuadInt& l, const QuadInt& r)
{
    return {l.x * r.x + 2 * l.y * r.y, l.x * r.y + l.y * r.x};
}

QuadInt operator-(const QuadInt& q)
{
    return {-q.x, -q.y};
}

std::ostream& operator<<(std::ostream& os, const QuadInt& q)
{
    os << q.x << (sgn(q.y) < 0 ? "-" : "+") << abs(q.y) << "*sqrt2";
    return os;
}

QuadInt conjugate(const QuadInt& q)
{
    return {q.x, -q.y};
}

Int norm(const QuadInt& q)
{
    return q.x * q.x - 2 * q.y * q.y;
}

QuadInt pow(QuadInt base, unsigned exp)
{
    QuadInt result(1);
    while (exp) {
        if (exp & 1u)
            result = result * base;
        base = base * base;
        exp >>= 1;
    }
    return result;
}

QuadInt fundamental_unit()
{
    return {1, 1};
}

QuadInt delta()
{
    return {3, 2};
}

DivResult euclid_div(const QuadInt& alpha, const QuadInt& beta)
{
    if (beta.is_zero())
        throw std::domain_error("euclid_div: division by zero");
    const Int n = norm(beta);
    const QuadInt scaled = alpha * conjugate(beta);
    QuadInt q{round_half_toward_zero(scaled.x, n), round_half_toward_zero(scaled.y, n)};
    QuadInt r = alpha - beta * q;
    return {std::move(q), std::move(r)};
}

bool is_unit(const QuadInt& q)
{
    return abs(norm(q)) == 1;
}

bool divides(const QuadInt& d, const QuadInt& q)
{
    if (d.is_zero())
        return q.is_zero();
    const Int n = norm(d);
    const QuadInt scaled = q * conjugate(d);
    return mpz_divisible_p(scaled.x.get_mpz_t(), n.get_mpz_t()) &&
           mpz_divisible_p(scaled.y.get_mpz_t(), n.get_mpz_t());
}

bool is_associate(const QuadInt& p, const QuadInt& q)
{
    return divides(p, q) && divides(q, p);
}

namespace {

// x^2 + 2y^2: strictly convex along the orbit u * gamma^k, so greedy
// descent finds its minimizing k.
Int orbit_size(const QuadInt& q)
{
    return q.x * q.x + 2 * q.y * q.y;
}

bool canonical_less(const QuadInt& l, const QuadInt& r)
{
    const auto key = [](const QuadInt& q) {
        return std::make_tuple(abs(q.x), abs(q.y), sgn(q.x) > 0 ? 0 : 1, sgn(q.y) >= 0 ? 0 : 1);
    };
    return key(l) < key(r);
}

}  // namespace

QuadInt normalize_associate(const QuadInt& q)
{
    if (q.is_zero())
        return q;
    const QuadInt up = fundamental_unit();
    const QuadInt down{-1, 1};  // inverse of 1 + sqrt(2)

    QuadInt cur = q;
    for (;;) {
        QuadInt a = cur * up;
        QuadInt b = cur * down;
        const Int here = orbit_size(cur);
        if (orbit_size(a) < here)
            cur = std::move(a);
        else if (orbit_size(b) < here)
            cur = std::move(b);
        else
            break;
    }

    // The |x| minimizer sits within a few steps of the size minimizer.
    QuadInt lo = cur;
    for (int i = 0; i < 4; ++i)
        lo = lo * down;
    QuadInt best = cur;
    QuadInt probe = lo;
    for (int i = 0; i <= 8; ++i) {
        for (const QuadInt& cand : {probe, -probe}) {
            if (canonical_less(cand, best))
                best = cand;
        }
        probe = probe * up;
    }
    return best;
}

QuadInt gcd(const QuadInt& alpha, const QuadInt& beta)
{
    if (alpha.is_zero() && beta.is_zero())
        throw std::invalid_argument("gcd(0, 0) is undefined");
    QuadInt a = alpha;
    QuadInt b = beta;
    while (!b.is_zero()) {
        QuadInt r = euclid_div(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return normalize_associate(a);
}

bool splits(const Int& p)
{
    const std::uint64_t v = to_u64(p);
    if (!is_prime_u64(v))
        throw std::invalid_argument(p.get_str() + " is not a prime");
    const std::uint64_t r = v % 8;
    return r == 1 || r == 7;
}

QuadInt ideal_generator(const Int& p)
{
    if (!splits(p))
        throw std::domain_error("prime " + p.get_str() + " does not split in Z[sqrt2]");
    Int bound;
    mpz_sqrt(bound.get_mpz_t(), p.get_mpz_t());
    bound = 2 * (bound + 1);
    for (Int y = 1; y <= bound; ++y) {
        const Int twice = 2 * y * y;
        if (auto x = exact_sqrt(Int(p + twice)))
            return {*x, y};
        if (auto x = exact_sqrt(Int(twice - p)))
            return {*x, y};
    }
    throw std::logic_error("no generator of norm +-" + p.get_str() + " within the search bound");
}

}  // namespace ppt
