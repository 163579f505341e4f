#include "ppt/g_family.hpp"

#include <algorithm>
#include <stdexcept>

namespace ppt {

std::string_view to_string(GKind kind)
{
    switch (kind) {
    case GKind::OddSquare: return "OddSquare";
    case GKind::TwiceSquareOddM: return "TwiceSquareOddM";
    case GKind::TwiceSquareEvenM: return "TwiceSquareEvenM";
    case GKind::Inadmissible: return "Inadmissible";
    }
    return "?";
}

GClass classify_g(const Int& g)
{
    if (sgn(g) <= 0)
        throw std::invalid_argument("gap g must be >= 1, got " + g.get_str());
    GClass out;
    out.g = g;
    if (is_odd(g)) {
        if (auto m = exact_sqrt(g)) {
            out.kind = GKind::OddSquare;
            out.m = *m;
            return out;
        }
        out.reason = "g = " + g.get_str() + " is odd but not a perfect square; not m^2 (m odd) nor 2m^2";
        return out;
    }
    if (auto m = exact_sqrt(Int(g / 2))) {
        out.kind = is_odd(*m) ? GKind::TwiceSquareOddM : GKind::TwiceSquareEvenM;
        out.m = *m;
        return out;
    }
    out.reason = "g = " + g.get_str() + " is even but g/2 is not a perfect square; not m^2 (m odd) nor 2m^2";
    return out;
}

std::optional<Int> leg_from_gap(const Int& a, const Int& g)
{
    if (sgn(g) <= 0)
        throw std::invalid_argument("gap g must be >= 1");
    const Int num = a * a - g * g;
    const Int den = 2 * g;
    if (sgn(num) <= 0 || !mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        return std::nullopt;
    return Int(num / den);
}

std::optional<ParamPair> family_params(const GClass& gc, std::uint64_t n)
{
    if (!gc.admissible())
        throw std::domain_error("family_params: " + gc.reason);
    if (n == 0)
        throw std::invalid_argument("family index n starts at 1");
    const Int& m = *gc.m;
    const Int nn = from_u64(n);
    const Int k = 2 * nn + 1;

    switch (gc.kind) {
    case GKind::OddSquare:
        if (gcd(k, m) != 1 || cmp(k, m) <= 0)
            return std::nullopt;
        return ParamPair(Int((k + m) / 2), Int((k - m) / 2));
    case GKind::TwiceSquareOddM:
        // r = n, s = m: both odd would make every entry even.
        if (gcd(nn, m) != 1 || is_odd(nn) || cmp(nn, m) <= 0)
            return std::nullopt;
        return ParamPair(nn, m);
    case GKind::TwiceSquareEvenM:
        if (gcd(k, m) != 1 || cmp(k, m) <= 0)
            return std::nullopt;
        return ParamPair(k, m);
    case GKind::Inadmissible:
        break;
    }
    return std::nullopt;
}

std::optional<GFamilyItem> family_item(const GClass& gc, std::uint64_t n)
{
    auto params = family_params(gc, n);
    if (!params)
        return std::nullopt;
    const Int& m = *gc.m;
    const Int nn = from_u64(n);
    Triple base = from_params(*params);

    switch (gc.kind) {
    case GKind::OddSquare:
        return GFamilyItem{n, 2 * nn + 1, *params, base, 2 * m, m};
    case GKind::TwiceSquareOddM:
        return GFamilyItem{n, nn, *params, base.swapped(), 2 * m, 0};
    case GKind::TwiceSquareEvenM:
        return GFamilyItem{n, 2 * nn + 1, *params, base.swapped(), 4 * m, 2 * m};
    case GKind::Inadmissible:
        break;
    }
    return std::nullopt;
}

namespace {

// Smallest n with s_n > 0; indices below it are all filtered out.
std::uint64_t first_index(const GClass& gc)
{
    const Int& m = *gc.m;
    switch (gc.kind) {
    case GKind::OddSquare: return to_u64(Int((m + 1) / 2));
    case GKind::TwiceSquareOddM: return to_u64(Int(m + 1));
    case GKind::TwiceSquareEvenM: return to_u64(Int(m / 2));
    case GKind::Inadmissible: break;
    }
    return 1;
}

}  // namespace

std::vector<GFamilyItem> generate_g_family(const Int& g, std::size_t count)
{
    const GClass gc = classify_g(g);
    if (!gc.admissible())
        throw std::domain_error("no primitive triples (a, b, b+g) exist: " + gc.reason);
    std::vector<GFamilyItem> out;
    out.reserve(count);
    for (std::uint64_t n = std::max<std::uint64_t>(1, first_index(gc)); out.size() < count; ++n) {
        if (auto item = family_item(gc, n))
            out.push_back(std::move(*item));
    }
    return out;
}

FamilyCoordinates invert_to_family(const Triple& t)
{
    if (!is_primitive(t))
        throw std::invalid_argument("invert_to_family: triple is not primitive");
    GClass gc = classify_g(Int(t.c() - t.b()));
    if (!gc.admissible())
        throw std::logic_error("primitive triple with inadmissible gap: " + gc.reason);
    const Int& m = *gc.m;
    const Int& a = t.a();

    auto exact_div = [](const Int& num, const Int& den) -> std::optional<Int> {
        if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
            return std::nullopt;
        return Int(num / den);
    };

    std::optional<Int> n;
    switch (gc.kind) {
    case GKind::OddSquare:
        if (auto k = exact_div(a, m); k && is_odd(*k))
            n = (*k - 1) / 2;
        break;
    case GKind::TwiceSquareOddM:
        n = exact_div(a, Int(2 * m));
        break;
    case GKind::TwiceSquareEvenM:
        if (auto k = exact_div(a, Int(2 * m)); k && is_odd(*k))
            n = (*k - 1) / 2;
        break;
    case GKind::Inadmissible:
        break;
    }
    if (!n || sgn(*n) <= 0)
        throw std::logic_error("primitive triple not covered by its gap family");

    FamilyCoordinates out{std::move(gc), to_u64(*n)};
    auto item = family_item(out.gclass, out.n);
    if (!item || !(item->triple == t))
        throw std::logic_error("family index does not regenerate the triple");
    return out;
}

}  // namespace ppt
