#pragma once

#include <ostream>

#include "ppt/arith.hpp"

namespace ppt {

/// x + y*sqrt(2) in the ring Z[sqrt 2].
struct QuadInt {
    Int x;
    Int y;

    QuadInt() = default;
    QuadInt(Int x_, Int y_) : x(std::move(x_)), y(std::move(y_)) {}
    QuadInt(long x_) : x(x_), y(0) {}  // NOLINT: integers embed into the ring

    bool is_zero() const { return sgn(x) == 0 && sgn(y) == 0; }

    friend bool operator==(const QuadInt& l, const QuadInt& r) { return l.x == r.x && l.y == r.y; }
};

QuadInt operator+(const QuadInt& l, const QuadInt& r);
QuadInt operator-(const QuadInt& l, const QuadInt& r);
QuadInt operator*(const QuadInt& l, const QuadInt& r);
QuadInt operator-(const QuadInt& q);

std::ostream& operator<<(std::ostream& os, const QuadInt& q);

QuadInt conjugate(const QuadInt& q);
Int norm(const QuadInt& q);
QuadInt pow(QuadInt base, unsigned exp);

/// 1 + sqrt(2), the fundamental unit (norm -1).
QuadInt fundamental_unit();
/// (1 + sqrt(2))^2 = 3 + 2 sqrt(2) (norm +1).
QuadInt delta();

struct DivResult {
    QuadInt quotient;
    QuadInt remainder;
};

/// alpha = beta * quotient + remainder with |N(remainder)| < |N(beta)|.
/// The quotient rounds alpha * conj(beta) / N(beta) componentwise to the
/// nearest integer, halves toward zero.
DivResult euclid_div(const QuadInt& alpha, const QuadInt& beta);

bool is_unit(const QuadInt& q);
bool divides(const QuadInt& d, const QuadInt& q);
bool is_associate(const QuadInt& p, const QuadInt& q);

/// Canonical associate: minimal |x|, then minimal |y|, then x > 0
/// (y > 0 when x = 0).
QuadInt normalize_associate(const QuadInt& q);

/// Normalized greatest common divisor. Throws for (0, 0).
QuadInt gcd(const QuadInt& alpha, const QuadInt& beta);

/// Whether the rational prime p splits in Z[sqrt 2] (p = +-1 mod 8).
/// Throws std::invalid_argument for composite p or p < 2, and
/// UnsupportedRange for p >= 2^64.
bool splits(const Int& p);

/// u with |N(u)| = p, from the smallest y >= 1 for which p + 2y^2 or
/// 2y^2 - p is a perfect square (in that order). Requires splits(p).
QuadInt ideal_generator(const Int& p);

}  // namespace ppt
