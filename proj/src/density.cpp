#include "ppt/density.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace ppt {

std::uint64_t sieve_budget_from_env()
{
    const char* raw = std::getenv("PPT_SIEVE_BUDGET");
    if (raw == nullptr || *raw == '\0')
        return kDefaultSieveBudget;
    return to_u64(parse_int(raw));
}

TotientSieve::TotientSieve(std::uint64_t bound) : bound_(bound), phi_(bound + 1, 0), mu_(bound + 1, 0) {}

TotientSieve TotientSieve::build(std::uint64_t bound, std::uint64_t budget)
{
    if (bound < 1)
        throw std::invalid_argument("sieve bound must be >= 1");
    if (bound > budget)
        throw SieveBudgetExceeded("sieve bound " + std::to_string(bound) + " exceeds budget " +
                                  std::to_string(budget));
    if (bound >= (std::uint64_t{1} << 32))
        throw SieveBudgetExceeded("sieve bound must stay below 2^32");

    TotientSieve s(bound);
    std::vector<std::uint32_t> primes;
    s.phi_[1] = 1;
    s.mu_[1] = 1;
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (s.phi_[i] == 0) {
            s.phi_[i] = static_cast<std::uint32_t>(i - 1);
            s.mu_[i] = -1;
            primes.push_back(static_cast<std::uint32_t>(i));
        }
        for (std::uint32_t p : primes) {
            const std::uint64_t ip = i * p;
            if (ip > bound)
                break;
            if (i % p == 0) {
                s.phi_[ip] = s.phi_[i] * p;
                s.mu_[ip] = 0;
                break;
            }
            s.phi_[ip] = s.phi_[i] * (p - 1);
            s.mu_[ip] = static_cast<std::int8_t>(-s.mu_[i]);
        }
    }
    return s;
}

std::uint32_t TotientSieve::phi(std::uint64_t n) const
{
    if (n < 1 || n > bound_)
        throw std::out_of_range("phi(" + std::to_string(n) + ") outside sieve");
    return phi_[n];
}

int TotientSieve::mu(std::uint64_t n) const
{
    if (n < 1 || n > bound_)
        throw std::out_of_range("mu(" + std::to_string(n) + ") outside sieve");
    return mu_[n];
}

std::uint64_t phi2(std::uint64_t n, const TotientSieve& sieve)
{
    return (n & 1u) ? sieve.phi(n) : 0;
}

std::uint64_t phi2_divisor_sum(std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("phi2_divisor_sum needs n >= 1");
    auto term = [](std::uint64_t d) { return (d & 1u) ? euler_phi_u64(d) : 0; };
    std::uint64_t total = 0;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        total += term(d);
        if (d * d != n)
            total += term(n / d);
    }
    return total;
}

namespace {

void check_in_sieve(std::uint64_t bound, const TotientSieve& sieve)
{
    if (bound > sieve.bound())
        throw SieveBudgetExceeded("B = " + std::to_string(bound) + " exceeds sieve bound " +
                                  std::to_string(sieve.bound()));
}

}  // namespace

std::uint64_t sum_phi(std::uint64_t bound, const TotientSieve& sieve)
{
    check_in_sieve(bound, sieve);
    std::uint64_t total = 0;
    for (std::uint64_t n = 1; n <= bound; ++n)
        total += sieve.phi(n);
    return total;
}

std::uint64_t sum_phi2(std::uint64_t bound, const TotientSieve& sieve)
{
    check_in_sieve(bound, sieve);
    std::uint64_t total = 0;
    for (std::uint64_t n = 1; n <= bound; n += 2)
        total += sieve.phi(n);
    return total;
}

std::uint64_t count_pool(std::uint64_t bound, const TotientSieve& sieve)
{
    return bound == 0 ? 0 : sum_phi(bound, sieve) - 1;
}

std::uint64_t count_GO(std::uint64_t bound, const TotientSieve& sieve)
{
    check_in_sieve(bound, sieve);
    std::uint64_t total = 0;
    for (std::uint64_t k = 3; k <= bound; k += 2)
        total += sieve.phi(k) / 2;
    return total;
}

std::uint64_t count_GEE(std::uint64_t bound, const TotientSieve& sieve)
{
    // For odd k, coprime residues pair up as m <-> k - m across parities.
    return count_GO(bound, sieve);
}

std::uint64_t count_GEO(std::uint64_t bound, const TotientSieve& sieve)
{
    check_in_sieve(bound, sieve);
    std::uint64_t total = 0;
    for (std::uint64_t k = 2; k <= bound; k += 2)
        total += sieve.phi(k);
    return total;
}

std::uint64_t count_G1(std::uint64_t bound)
{
    return bound == 0 ? 0 : bound - 1;
}

std::string_view to_string(Family family)
{
    switch (family) {
    case Family::GO: return "GO";
    case Family::GEE: return "GEE";
    case Family::GEO: return "GEO";
    case Family::G1: return "G1";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view text)
{
    for (Family f : {Family::GO, Family::GEE, Family::GEO, Family::G1}) {
        if (text == to_string(f))
            return f;
    }
    return std::nullopt;
}

Rational predicted_density(Family family)
{
    return family == Family::G1 ? Rational(0) : Rational(1, 3);
}

std::vector<DensityRow> density_report(Family family, const std::vector<std::uint64_t>& grid,
                                       const TotientSieve& sieve)
{
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i] < 1 || (i > 0 && grid[i] <= grid[i - 1]))
            throw std::invalid_argument("density grid must be strictly ascending positive integers");
    }
    if (!grid.empty())
        check_in_sieve(grid.back(), sieve);

    const double predicted = predicted_density(family).get_d();
    std::vector<DensityRow> rows;
    rows.reserve(grid.size());

    // One pass over k, snapshotting at each grid point.
    std::uint64_t phi_sum = 0, go = 0, geo = 0;
    std::uint64_t k = 0;
    for (std::uint64_t B : grid) {
        while (k < B) {
            ++k;
            const std::uint64_t ph = sieve.phi(k);
            phi_sum += ph;
            if (k % 2 == 0)
                geo += ph;
            else if (k >= 3)
                go += ph / 2;
        }
        std::uint64_t fam = 0;
        switch (family) {
        case Family::GO:
        case Family::GEE: fam = go; break;
        case Family::GEO: fam = geo; break;
        case Family::G1: fam = count_G1(B); break;
        }
        const std::uint64_t pool = phi_sum - 1;
        Rational ratio = pool == 0 ? Rational(0) : Rational(from_u64(fam), from_u64(pool));
        ratio.canonicalize();
        rows.push_back({B, fam, pool, std::move(ratio), predicted});
    }
    return rows;
}

bool moebius_inversion_check(std::uint64_t n, const TotientSieve& sieve)
{
    check_in_sieve(n, sieve);
    std::int64_t total = 0;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        const std::uint64_t e = n / d;
        total += sieve.mu(d) * static_cast<std::int64_t>(odd_part(e));
        if (e != d)
            total += sieve.mu(e) * static_cast<std::int64_t>(odd_part(d));
    }
    return total == static_cast<std::int64_t>(phi2(n, sieve));
}

AsymptoticFit fit_asymptotic(Summatory which, const std::vector<std::uint64_t>& grid, const TotientSieve& sieve)
{
    const double coefficient = (which == Summatory::Phi ? 3.0 : 2.0) / kPiSquared;
    AsymptoticFit fit{{}, 0.0, 0.0, true};
    for (std::uint64_t B : grid) {
        if (B < 2)
            throw std::invalid_argument("asymptotic fit needs B >= 2");
        const std::uint64_t sum = which == Summatory::Phi ? sum_phi(B, sieve) : sum_phi2(B, sieve);
        const double b = static_cast<double>(B);
        const double normalized = static_cast<double>(sum) / (coefficient * b * b);
        const double err = std::fabs(normalized - 1.0);
        AsymptoticPoint pt{B, normalized, err, err * b / std::log(b), err * b / std::log2(b)};
        if (!fit.points.empty() && err > fit.points.back().rel_error)
            fit.monotone = false;
        fit.c_log = std::max(fit.c_log, pt.c_log);
        fit.c_log2 = std::max(fit.c_log2, pt.c_log2);
        fit.points.push_back(pt);
    }
    return fit;
}

}  // namespace ppt
