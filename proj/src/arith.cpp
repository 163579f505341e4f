#include "ppt/arith.hpp"

#include <algorithm>
#include <numeric>

namespace ppt {

static_assert(sizeof(unsigned long) == sizeof(std::uint64_t), "LP64 target expected");

bool fits_u64(const Int& v)
{
    return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_u64(const Int& v)
{
    if (!fits_u64(v))
        throw UnsupportedRange("value " + v.get_str() + " outside [0, 2^64)");
    return mpz_get_ui(v.get_mpz_t());
}

Int from_u64(std::uint64_t v)
{
    Int out;
    mpz_set_ui(out.get_mpz_t(), static_cast<unsigned long>(v));
    return out;
}

Int parse_int(const std::string& text)
{
    std::string_view body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+'))
        body.remove_prefix(1);
    if (body.empty() || !std::all_of(body.begin(), body.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
        throw std::invalid_argument("not a decimal integer: '" + text + "'");
    Int out;
    std::string normalized = text.front() == '+' ? text.substr(1) : text;
    if (out.set_str(normalized, 10) != 0)
        throw std::invalid_argument("not a decimal integer: '" + text + "'");
    return out;
}

std::string to_string(const Int& v)
{
    return v.get_str();
}

std::optional<Int> exact_sqrt(const Int& v)
{
    if (sgn(v) < 0 || !mpz_perfect_square_p(v.get_mpz_t()))
        return std::nullopt;
    Int root;
    mpz_sqrt(root.get_mpz_t(), v.get_mpz_t());
    return root;
}

bool is_square(const Int& v)
{
    return sgn(v) >= 0 && mpz_perfect_square_p(v.get_mpz_t()) != 0;
}

Int gcd(const Int& a, const Int& b)
{
    Int out;
    mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

bool is_odd(const Int& v)
{
    return mpz_odd_p(v.get_mpz_t()) != 0;
}

std::uint64_t odd_part(std::uint64_t n)
{
    if (n == 0)
        return 0;
    while ((n & 1u) == 0)
        n >>= 1;
    return n;
}

Int round_half_toward_zero(const Int& num, const Int& den)
{
    if (sgn(den) == 0)
        throw std::domain_error("round_half_toward_zero: zero denominator");
    Int n = num;
    Int d = den;
    if (sgn(d) < 0) {
        n = -n;
        d = -d;
    }
    Int floor_q;
    Int rem;
    mpz_fdiv_qr(floor_q.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    const int side = cmp(Int(2 * rem), d);
    if (side > 0)
        return floor_q + 1;
    if (side < 0)
        return floor_q;
    // num/den = floor_q + 1/2
    return sgn(floor_q) >= 0 ? floor_q : Int(floor_q + 1);
}

namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1u)
            result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

std::uint64_t pollard_brent(std::uint64_t n)
{
    if (n % 2 == 0)
        return 2;
    for (std::uint64_t c = 1;; ++c) {
        auto step = [&](std::uint64_t x) { return (mul_mod(x, x, n) + c) % n; };
        std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
        const std::uint64_t block = 128;
        std::uint64_t r = 1;
        do {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i)
                y = step(y);
            std::uint64_t k = 0;
            do {
                ys = y;
                for (std::uint64_t i = 0; i < std::min(block, r - k); ++i) {
                    y = step(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += block;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = step(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
}

void collect_factors(std::uint64_t n, std::vector<std::uint64_t>& out)
{
    if (n == 1)
        return;
    if (is_prime_u64(n)) {
        out.push_back(n);
        return;
    }
    const std::uint64_t d = pollard_brent(n);
    collect_factors(d, out);
    collect_factors(n / d, out);
}

}  // namespace

bool is_prime_u64(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0)
            return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1u) == 0) {
        d >>= 1;
        ++s;
    }
    // Witness set proven sufficient below 2^64 (Jim Sinclair).
    for (std::uint64_t a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
        std::uint64_t x = pow_mod(a % n, d, n);
        if (a % n == 0 || x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

std::vector<PrimePower> factor_u64(std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("factor_u64: zero has no factorization");
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 2; p < 1000 && p * p <= n; ++p) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    collect_factors(n, primes);
    std::sort(primes.begin(), primes.end());

    std::vector<PrimePower> out;
    for (std::uint64_t p : primes) {
        if (!out.empty() && out.back().p == p)
            ++out.back().t;
        else
            out.push_back({p, 1});
    }
    return out;
}

std::uint64_t euler_phi_u64(std::uint64_t n)
{
    if (n == 0)
        return 0;
    std::uint64_t result = n;
    for (const auto& pp : factor_u64(n))
        result = result / pp.p * (pp.p - 1);
    return result;
}

std::string format_fixed(const Rational& q, unsigned digits)
{
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    const Int num = q.get_num() * scale;
    const Int& den = q.get_den();
    Int mag = abs(num);
    Int whole;
    Int rem;
    mpz_fdiv_qr(whole.get_mpz_t(), rem.get_mpz_t(), mag.get_mpz_t(), den.get_mpz_t());
    if (2 * rem >= den)
        whole += 1;

    std::string body = whole.get_str();
    if (digits > 0) {
        if (body.size() <= digits)
            body.insert(0, digits + 1 - body.size(), '0');
        body.insert(body.size() - digits, ".");
    }
    return (sgn(num) < 0 && sgn(whole) != 0 ? "-" : "") + body;
}

}  // namespace ppt
