#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ppt/triple.hpp"

namespace ppt {

/// Which family a hypotenuse-to-leg gap g = c - b belongs to. Odd squares
/// pair with an even b; twice squares pair with an odd b.
enum class GKind { OddSquare, TwiceSquareOddM, TwiceSquareEvenM, Inadmissible };

std::string_view to_string(GKind kind);

struct GClass {
    GKind kind = GKind::Inadmissible;
    std::optional<Int> m;
    Int g;
    std::string reason;  // populated only for Inadmissible

    bool admissible() const { return kind != GKind::Inadmissible; }
    bool operator==(const GClass& other) const { return kind == other.kind && m == other.m && g == other.g; }
};

struct GFamilyItem {
    std::uint64_t n;
    Int k;  // 2n+1 for the odd-m rows of the table, n for the odd-m twice-square row
    ParamPair params;
    Triple triple;
    Int stride;  // a_n = stride * n + offset
    Int offset;
};

struct FamilyCoordinates {
    GClass gclass;
    std::uint64_t n;
};

/// Throws std::invalid_argument for g < 1.
GClass classify_g(const Int& g);

/// b = (a^2 - g^2) / (2g) when that is a positive integer.
std::optional<Int> leg_from_gap(const Int& a, const Int& g);

/// (r_n, s_n) for family index n >= 1, or nullopt when n fails the
/// coprimality/parity filter or gives s_n <= 0.
std::optional<ParamPair> family_params(const GClass& gc, std::uint64_t n);

/// Family item at index n, oriented so c - b = g.
std::optional<GFamilyItem> family_item(const GClass& gc, std::uint64_t n);

/// First `count` admissible indices n = 1, 2, ... with their triples.
/// Throws std::domain_error for an inadmissible g.
std::vector<GFamilyItem> generate_g_family(const Int& g, std::size_t count);

/// Recovers the family and index of t using the gap c - t.b().
/// Throws std::invalid_argument for non-primitive t.
FamilyCoordinates invert_to_family(const Triple& t);

}  // namespace ppt
