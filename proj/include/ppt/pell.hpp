#pragma once

#include <cstdint>

#include "ppt/zsqrt2.hpp"

namespace ppt {

/// Components of gamma * delta^m, a solution of x^2 - 2y^2 = -1.
struct PellSolution {
    Int x;
    Int y;
    std::int64_t m;
};

/// t * delta^n = A_n t + B_n (2k + j sqrt2) for every t = j + k sqrt2.
struct RecurrencePair {
    std::uint64_t n;
    Int A;
    Int B;
};

/// A_n = 6A_{n-1} - A_{n-2} from (1, 3); B_n = 6B_{n-1} - B_{n-2} from (0, 2).
RecurrencePair recurrence_coeffs(std::uint64_t n);

/// t * delta^n through the (A_n, B_n) recurrence.
QuadInt apply_delta_power(const QuadInt& t, std::uint64_t n);

/// t * conj(delta)^n = t * delta^-n. Since conj(delta) = 3 - 2 sqrt2 the
/// same coefficients apply with B_n negated: A_n t - B_n (2k + j sqrt2).
QuadInt apply_conj_delta_power(const QuadInt& t, std::uint64_t n);

/// t * delta^m for any signed m.
QuadInt apply_delta_power_signed(const QuadInt& t, std::int64_t m);

PellSolution neg_pell_solution(std::int64_t m);

}  // namespace ppt
