#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <vector>

#include "ppt/arith.hpp"

namespace ppt {

/// A Pythagorean triple a^2 + b^2 = c^2 with positive entries. The
/// constructor validates eagerly, so every live value is well formed.
class Triple {
public:
    Triple(Int a, Int b, Int c);

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }

    /// Same triple with the legs exchanged.
    Triple swapped() const;

    /// (odd leg, even leg, c) when exactly one leg is even; otherwise the
    /// smaller leg first.
    Triple normalized() const;

    bool operator==(const Triple& other) const;
    std::strong_ordering operator<=>(const Triple& other) const;

private:
    Int a_, b_, c_;
};

std::ostream& operator<<(std::ostream& os, const Triple& t);

/// Parameters of the classical map (r, s) -> (r^2 - s^2, 2rs, r^2 + s^2).
class ParamPair {
public:
    ParamPair(Int r, Int s);

    const Int& r() const { return r_; }
    const Int& s() const { return s_; }

    bool operator==(const ParamPair&) const = default;

private:
    Int r_, s_;
};

std::ostream& operator<<(std::ostream& os, const ParamPair& p);

enum class EvenLeg { A, B, Both };

struct TripleClass {
    bool primitive;
    EvenLeg even_leg;
    Int g;  // c - larger leg
    Int f;  // |b - a|
};

Triple from_params(const ParamPair& p);

bool is_primitive(const Triple& t);

/// gcd(r, s) = 1 with r, s of opposite parity; agrees with
/// is_primitive(from_params(p)).
bool primitive_from_params(const ParamPair& p);

/// Inverse of from_params on primitive triples, with the odd leg playing
/// the role of r^2 - s^2. Throws std::invalid_argument for non-primitive
/// input.
ParamPair to_params(const Triple& t);

TripleClass classify(const Triple& t);

/// Every primitive triple with c <= c_max, as (odd leg, even leg, c),
/// ordered by c then a. Built from coprime opposite-parity (r, s).
std::vector<Triple> enumerate_ppts(std::uint64_t c_max);

}  // namespace ppt
