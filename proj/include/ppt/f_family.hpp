#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ppt/triple.hpp"
#include "ppt/zsqrt2.hpp"

namespace ppt {

struct PrimeRejection {
    std::uint64_t p;
    std::string reason;
};

/// A leg gap f = b - a with its factorization. Admissible exactly when
/// every prime factor is +-1 mod 8, which also forces f odd.
struct FSpec {
    Int f;
    std::vector<PrimePower> factorization;
    bool admissible = false;
    std::vector<PrimeRejection> rejections;
};

/// u = prod q_i^t_i with q_i the chosen generator of a prime over p_i or
/// its conjugate; |N(u)| = f.
struct CfElement {
    QuadInt u;
    std::vector<bool> conjugated;  // per factorization position

    std::string label() const;
};

struct PellPoint {
    Int X;
    Int Y;

    bool operator==(const PellPoint&) const = default;
};

/// One generated (a, a+f, c), tagged with the first branch that produced
/// it. X = 2a + f, Y = c.
struct FTriple {
    Triple triple;
    std::int64_t m;
    int sign;
    CfElement cf_choice;
    Int X;
    Int Y;
    std::size_t hits = 1;  // branches (m, sign, u) that yielded this triple
};

/// Throws std::invalid_argument for f = 0 and UnsupportedRange for f >= 2^64.
FSpec admissible_f(const Int& f);

/// (2a + f, c) for a triple whose legs differ by f. Throws when they don't.
PellPoint pell_recast(const Triple& t, const Int& f);

/// All 2^(#distinct primes) elements; f = 1 gives {1}.
std::vector<CfElement> cf_elements(const FSpec& spec);

/// Every (m, u, sign) with m in [m_lo, m_hi]: X + Y sqrt2 = +-gamma delta^m u^2,
/// absolute values taken, kept when X > f. Deduplicated, sorted by (c, a).
std::vector<FTriple> generate_f_triples(const FSpec& spec, std::int64_t m_lo, std::int64_t m_hi);

/// Same sweep restricted to the given subset of C_f.
std::vector<FTriple> generate_f_triples(const FSpec& spec, std::int64_t m_lo, std::int64_t m_hi,
                                        const std::vector<CfElement>& elements);

bool verify_f_triple(const FTriple& ft, const FSpec& spec);

/// Raw-component form of the same checks, for candidates that need not be
/// Pythagorean at all.
bool verify_f_candidate(const Int& a, const Int& b, const Int& c, const Int& X, const Int& Y, const Int& f);

}  // namespace ppt
