#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ppt {

/// Outcome of one oracle-equivalence suite.
struct VerifyReport {
    VerifyReport() = default;
    explicit VerifyReport(std::string scope_) : scope(std::move(scope_)) {}

    std::string scope;
    std::uint64_t checked = 0;
    std::uint64_t failed = 0;
    std::optional<std::string> counterexample;  // first failure

    bool ok() const { return failed == 0; }
    void fail(std::string what);
};

/// Gaps with no primitive (a, b, b+g), sampled for the nonexistence suite.
inline const std::vector<std::uint64_t> kInadmissibleGSample{3, 5, 6, 7, 10, 11, 12};
/// Leg gaps with a prime factor not +-1 mod 8.
inline const std::vector<std::uint64_t> kInadmissibleFSample{3, 5, 11, 13, 19, 21};

/// Every oracle PPT with c <= c_max inverts to its gap family in both leg
/// orientations and regenerates from (g, n).
VerifyReport verify_g_coverage(std::uint64_t c_max);

/// Every oracle PPT with |b - a| = f and c <= c_max appears in the Pell
/// sweep over m in [-m_max, m_max], and every swept triple verifies.
VerifyReport verify_f_coverage(std::uint64_t c_max, const std::vector<std::uint64_t>& fs = {1, 7, 17},
                               std::int64_t m_max = 12);

/// No PPT with c <= c_max has a gap from the inadmissible samples, both in
/// the oracle and in a direct scan that does not use the (r, s) map.
VerifyReport verify_nonexistence(std::uint64_t c_max);

/// Negative-Pell identity for |m| <= m_max, recurrence vs repeated
/// multiplication for n <= m_max, and the converse for y <= y_max.
VerifyReport verify_pell(std::int64_t m_max, std::uint64_t y_max = 100'000);

/// Totient-formula counts against pair enumeration for every B <= bound.
VerifyReport verify_density_cross(std::uint64_t bound);

}  // namespace ppt
