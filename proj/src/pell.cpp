#include "ppt/pell.hpp"

namespace ppt {

RecurrencePair recurrence_coeffs(std::uint64_t n)
{
    Int a_prev = 1, a_cur = 3;
    Int b_prev = 0, b_cur = 2;
    if (n == 0)
        return {0, a_prev, b_prev};
    for (std::uint64_t i = 2; i <= n; ++i) {
        Int a_next = 6 * a_cur - a_prev;
        Int b_next = 6 * b_cur - b_prev;
        a_prev = std::move(a_cur);
        a_cur = std::move(a_next);
        b_prev = std::move(b_cur);
        b_cur = std::move(b_next);
    }
    return {n, a_cur, b_cur};
}

namespace {

// 2k + j sqrt2 for t = j + k sqrt2, i.e. t * sqrt2.
QuadInt companion(const QuadInt& t)
{
    return {2 * t.y, t.x};
}

QuadInt scale(const QuadInt& q, const Int& s)
{
    return {q.x * s, q.y * s};
}

}  // namespace

QuadInt apply_delta_power(const QuadInt& t, std::uint64_t n)
{
    const RecurrencePair c = recurrence_coeffs(n);
    return scale(t, c.A) + scale(companion(t), c.B);
}

QuadInt apply_conj_delta_power(const QuadInt& t, std::uint64_t n)
{
    const RecurrencePair c = recurrence_coeffs(n);
    return scale(t, c.A) - scale(companion(t), c.B);
}

QuadInt apply_delta_power_signed(const QuadInt& t, std::int64_t m)
{
    if (m >= 0)
        return apply_delta_power(t, static_cast<std::uint64_t>(m));
    return apply_conj_delta_power(t, static_cast<std::uint64_t>(-(m + 1)) + 1);
}

PellSolution neg_pell_solution(std::int64_t m)
{
    QuadInt v = apply_delta_power_signed(fundamental_unit(), m);
    return {std::move(v.x), std::move(v.y), m};
}

}  // namespace ppt
