#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "ppt/arith.hpp"

namespace ppt {

/// Largest sieve bound accepted unless overridden (PPT_SIEVE_BUDGET).
inline constexpr std::uint64_t kDefaultSieveBudget = 10'000'000;

/// Decimal approximation of pi^2 used for every asymptotic prediction.
inline constexpr double kPiSquared = 9.869604401089358;

class SieveBudgetExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Reads PPT_SIEVE_BUDGET, falling back to kDefaultSieveBudget.
std::uint64_t sieve_budget_from_env();

/// phi and mu on 1..B from a linear sieve.
class TotientSieve {
public:
    static TotientSieve build(std::uint64_t bound, std::uint64_t budget = kDefaultSieveBudget);

    std::uint64_t bound() const { return bound_; }
    std::uint32_t phi(std::uint64_t n) const;
    int mu(std::uint64_t n) const;

private:
    explicit TotientSieve(std::uint64_t bound);

    std::uint64_t bound_;
    std::vector<std::uint32_t> phi_;
    std::vector<std::int8_t> mu_;
};

std::uint64_t phi2(std::uint64_t n, const TotientSieve& sieve);

/// sum over d | n of phi2(d), by direct divisor enumeration.
std::uint64_t phi2_divisor_sum(std::uint64_t n);

std::uint64_t sum_phi(std::uint64_t bound, const TotientSieve& sieve);
std::uint64_t sum_phi2(std::uint64_t bound, const TotientSieve& sieve);

/// #{(r, s) : gcd(r, s) = 1, 0 < s < r <= B}. Excludes the r = 1 term.
std::uint64_t count_pool(std::uint64_t bound, const TotientSieve& sieve);
/// Odd coprime 0 < m < k <= B.
std::uint64_t count_GO(std::uint64_t bound, const TotientSieve& sieve);
/// Even m, odd k, coprime, 0 < m < k <= B.
std::uint64_t count_GEE(std::uint64_t bound, const TotientSieve& sieve);
/// Odd m, even k, coprime, 0 < m < k <= B.
std::uint64_t count_GEO(std::uint64_t bound, const TotientSieve& sieve);
/// {(n+1, n) : n + 1 <= B}.
std::uint64_t count_G1(std::uint64_t bound);

enum class Family { GO, GEE, GEO, G1 };

std::string_view to_string(Family family);
std::optional<Family> parse_family(std::string_view text);

struct DensityRow {
    std::uint64_t B;
    std::uint64_t family_count;
    std::uint64_t pool_count;
    Rational ratio;  // 0 when the pool is empty
    double predicted;
};

/// Limiting share of the family inside the pool.
Rational predicted_density(Family family);

/// Throws std::invalid_argument for a non-ascending grid and
/// SieveBudgetExceeded when the grid outruns the sieve.
std::vector<DensityRow> density_report(Family family, const std::vector<std::uint64_t>& grid,
                                       const TotientSieve& sieve);

/// sum over d | n of mu(d) * oddpart(n/d) == phi2(n).
bool moebius_inversion_check(std::uint64_t n, const TotientSieve& sieve);

/// Relative error of a summatory function against c * B^2, scaled by the
/// two candidate error shapes log B / B and log2 B / B.
struct AsymptoticPoint {
    std::uint64_t B;
    double normalized;  // sum / (c B^2)
    double rel_error;   // |normalized - 1|
    double c_log;       // rel_error * B / ln B
    double c_log2;      // rel_error * B / log2 B
};

struct AsymptoticFit {
    std::vector<AsymptoticPoint> points;
    double c_log;   // max over points
    double c_log2;
    bool monotone;  // rel_error non-increasing along the grid
};

enum class Summatory { Phi, Phi2 };

AsymptoticFit fit_asymptotic(Summatory which, const std::vector<std::uint64_t>& grid, const TotientSieve& sieve);

}  // namespace ppt
