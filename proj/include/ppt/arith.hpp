#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ppt {

using Int = mpz_class;
using Rational = mpq_class;

/// Raised when an input lies beyond the range the exact primality and
/// factorization routines support (2^64 and above).
class UnsupportedRange : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

struct PrimePower {
    std::uint64_t p;
    unsigned t;

    bool operator==(const PrimePower&) const = default;
};

bool fits_u64(const Int& v);
std::uint64_t to_u64(const Int& v);
Int from_u64(std::uint64_t v);

Int parse_int(const std::string& text);
std::string to_string(const Int& v);

/// Exact square root when v is a perfect square (v >= 0).
std::optional<Int> exact_sqrt(const Int& v);
bool is_square(const Int& v);
Int gcd(const Int& a, const Int& b);
bool is_odd(const Int& v);

/// The odd part u of n = 2^e u.
std::uint64_t odd_part(std::uint64_t n);

/// Nearest integer to num/den; exact halves go toward zero.
Int round_half_toward_zero(const Int& num, const Int& den);

/// Deterministic Miller-Rabin, valid on the whole 64-bit range.
bool is_prime_u64(std::uint64_t n);

/// Prime factorization in ascending order of p. n = 1 gives an empty list.
std::vector<PrimePower> factor_u64(std::uint64_t n);

/// Euler's totient by trial factorization.
std::uint64_t euler_phi_u64(std::uint64_t n);

/// Renders num/den rounded half-up to `digits` places, computed exactly.
std::string format_fixed(const Rational& q, unsigned digits);

}  // namespace ppt
