#include "ppt/f_family.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ppt/pell.hpp"

namespace ppt {

std::string CfElement::label() const
{
    std::string out;
    for (bool c : conjugated)
        out += c ? 'c' : 'p';
    return out.empty() ? "1" : out;
}

FSpec admissible_f(const Int& f)
{
    if (sgn(f) <= 0)
        throw std::invalid_argument("leg gap f must be >= 1, got " + f.get_str());
    FSpec spec;
    spec.f = f;
    spec.factorization = factor_u64(to_u64(f));
    for (const auto& pp : spec.factorization) {
        const std::uint64_t r = pp.p % 8;
        if (r != 1 && r != 7) {
            spec.rejections.push_back(
                {pp.p, std::to_string(pp.p) + " = " + std::to_string(r) + " mod 8, not +-1 mod 8"});
        }
    }
    spec.admissible = spec.rejections.empty();
    return spec;
}

PellPoint pell_recast(const Triple& t, const Int& f)
{
    const bool ordered = cmp(t.a(), t.b()) <= 0;
    const Int& a = ordered ? t.a() : t.b();
    const Int& b = ordered ? t.b() : t.a();
    if (b - a != f)
        throw std::invalid_argument("pell_recast: legs differ by " + Int(b - a).get_str() + ", not " + f.get_str());
    return {2 * a + f, t.c()};
}

std::vector<CfElement> cf_elements(const FSpec& spec)
{
    if (!spec.admissible)
        throw std::domain_error("f = " + spec.f.get_str() + " has a prime factor not +-1 mod 8");

    std::vector<QuadInt> powers;
    for (const auto& pp : spec.factorization)
        powers.push_back(pow(ideal_generator(from_u64(pp.p)), pp.t));

    const std::size_t primes = powers.size();
    std::vector<CfElement> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << primes); ++mask) {
        CfElement e{QuadInt(1), std::vector<bool>(primes)};
        for (std::size_t i = 0; i < primes; ++i) {
            const bool conj = ((mask >> i) & 1u) != 0;
            e.conjugated[i] = conj;
            e.u = e.u * (conj ? conjugate(powers[i]) : powers[i]);
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<FTriple> generate_f_triples(const FSpec& spec, std::int64_t m_lo, std::int64_t m_hi)
{
    return generate_f_triples(spec, m_lo, m_hi, cf_elements(spec));
}

std::vector<FTriple> generate_f_triples(const FSpec& spec, std::int64_t m_lo, std::int64_t m_hi,
                                        const std::vector<CfElement>& elements)
{
    if (!spec.admissible)
        throw std::domain_error("f = " + spec.f.get_str() + " has a prime factor not +-1 mod 8");
    if (m_lo > m_hi)
        throw std::invalid_argument("empty m range");

    const Int& f = spec.f;
    std::map<Triple, FTriple> found;
    for (const CfElement& e : elements) {
        const QuadInt seed = fundamental_unit() * e.u * e.u;
        for (std::int64_t m = m_lo; m <= m_hi; ++m) {
            const QuadInt v = apply_delta_power_signed(seed, m);
            // Both signs normalize to the same (|X|, |Y|); the recorded sign
            // is the one giving X > 0 before normalization.
            const int positive_sign = sgn(v.x) >= 0 ? 1 : -1;
            for ([[maybe_unused]] int sign : {1, -1}) {
                Int X = abs(v.x);
                Int Y = abs(v.y);
                if (cmp(X, f) <= 0 || is_odd(Int(X - f)))
                    continue;
                Triple t(Int((X - f) / 2), Int((X + f) / 2), Y);
                auto [it, fresh] =
                    found.try_emplace(t, FTriple{t, m, positive_sign, e, std::move(X), std::move(Y)});
                if (!fresh)
                    ++it->second.hits;
            }
        }
    }

    std::vector<FTriple> out;
    out.reserve(found.size());
    for (auto& [key, ft] : found)
        out.push_back(std::move(ft));
    return out;
}

bool verify_f_candidate(const Int& a, const Int& b, const Int& c, const Int& X, const Int& Y, const Int& f)
{
    if (sgn(a) <= 0 || sgn(b) <= 0 || sgn(c) <= 0)
        return false;
    if (a * a + b * b != c * c)
        return false;
    if (b - a != f)
        return false;
    if (gcd(a, b) != 1)
        return false;
    if (X != 2 * a + f || Y != c)
        return false;
    return X * X - 2 * Y * Y == -(f * f);
}

bool verify_f_triple(const FTriple& ft, const FSpec& spec)
{
    return verify_f_candidate(ft.triple.a(), ft.triple.b(), ft.triple.c(), ft.X, ft.Y, spec.f);
}

}  // namespace ppt
