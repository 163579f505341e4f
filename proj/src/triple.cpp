#include "ppt/triple.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ppt {

Triple::Triple(Int a, Int b, Int c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c))
{
    if (sgn(a_) <= 0 || sgn(b_) <= 0 || sgn(c_) <= 0)
        throw std::invalid_argument("triple entries must be positive");
    if (a_ * a_ + b_ * b_ != c_ * c_)
        throw std::invalid_argument("not a Pythagorean triple: " + a_.get_str() + "^2 + " + b_.get_str() +
                                    "^2 != " + c_.get_str() + "^2");
}

Triple Triple::swapped() const
{
    return Triple(b_, a_, c_);
}

Triple Triple::normalized() const
{
    const bool a_odd = is_odd(a_);
    const bool b_odd = is_odd(b_);
    if (a_odd != b_odd)
        return a_odd ? *this : swapped();
    return a_ <= b_ ? *this : swapped();
}

bool Triple::operator==(const Triple& other) const
{
    return a_ == other.a_ && b_ == other.b_ && c_ == other.c_;
}

std::strong_ordering Triple::operator<=>(const Triple& other) const
{
    if (int r = cmp(c_, other.c_); r != 0)
        return r <=> 0;
    if (int r = cmp(a_, other.a_); r != 0)
        return r <=> 0;
    return cmp(b_, other.b_) <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Triple& t)
{
    return os << '(' << t.a() << ", " << t.b() << ", " << t.c() << ')';
}

ParamPair::ParamPair(Int r, Int s) : r_(std::move(r)), s_(std::move(s))
{
    if (sgn(s_) <= 0 || cmp(s_, r_) >= 0)
        throw std::invalid_argument("parameter pair needs 0 < s < r, got r=" + r_.get_str() + " s=" + s_.get_str());
}

std::ostream& operator<<(std::ostream& os, const ParamPair& p)
{
    return os << "(r=" << p.r() << ", s=" << p.s() << ')';
}

Triple from_params(const ParamPair& p)
{
    const Int rr = p.r() * p.r();
    const Int ss = p.s() * p.s();
    return Triple(rr - ss, 2 * p.r() * p.s(), rr + ss);
}

bool is_primitive(const Triple& t)
{
    return gcd(t.a(), t.b()) == 1;
}

bool primitive_from_params(const ParamPair& p)
{
    return gcd(p.r(), p.s()) == 1 && is_odd(p.r()) != is_odd(p.s());
}

ParamPair to_params(const Triple& t)
{
    if (!is_primitive(t))
        throw std::invalid_argument("to_params: " + t.a().get_str() + "," + t.b().get_str() + "," +
                                    t.c().get_str() + " is not primitive");
    const Int& odd = is_odd(t.a()) ? t.a() : t.b();
    const Int sum = t.c() + odd;
    const Int diff = t.c() - odd;
    auto r = exact_sqrt(Int(sum / 2));
    auto s = exact_sqrt(Int(diff / 2));
    if (is_odd(sum) || !r || !s)
        throw std::invalid_argument("to_params: no primitive preimage");
    return ParamPair(*r, *s);
}

TripleClass classify(const Triple& t)
{
    const bool a_even = !is_odd(t.a());
    const bool b_even = !is_odd(t.b());
    const EvenLeg leg = a_even && b_even ? EvenLeg::Both : (a_even ? EvenLeg::A : EvenLeg::B);
    const Int& larger = cmp(t.a(), t.b()) >= 0 ? t.a() : t.b();
    return TripleClass{is_primitive(t), leg, t.c() - larger, abs(Int(t.b() - t.a()))};
}

std::vector<Triple> enumerate_ppts(std::uint64_t c_max)
{
    struct Raw {
        std::uint64_t a, b, c;
    };
    if (c_max > (std::uint64_t{1} << 62))
        throw UnsupportedRange("enumerate_ppts: c_max too large");
    std::vector<Raw> raw;
    for (std::uint64_t r = 2; r * r + 1 <= c_max; ++r) {
        for (std::uint64_t s = 1 + (r & 1u); s < r; s += 2) {
            const std::uint64_t c = r * r + s * s;
            if (c > c_max)
                break;
            if (std::gcd(r, s) != 1)
                continue;
            raw.push_back({r * r - s * s, 2 * r * s, c});
        }
    }
    std::sort(raw.begin(), raw.end(), [](const Raw& x, const Raw& y) {
        return x.c != y.c ? x.c < y.c : x.a < y.a;
    });

    std::vector<Triple> out;
    out.reserve(raw.size());
    for (const auto& t : raw)
        out.emplace_back(from_u64(t.a), from_u64(t.b), from_u64(t.c));
    return out;
}

}  // namespace ppt
