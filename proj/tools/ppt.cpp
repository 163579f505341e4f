// ppt: generate, classify and verify primitive Pythagorean triples of the
// forms (a, b, b+g) and (a, a+f, c), and sweep their parameter densities.
//
// Exit codes: 0 ok, 1 malformed input, 2 inadmissible gap, 3 f outside the
// supported factorization range, 4 `check` input is not a PPT, 5 sieve
// budget refusal, 6 verification failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ppt/density.hpp"
#include "ppt/f_family.hpp"
#include "ppt/g_family.hpp"
#include "ppt/output.hpp"
#include "ppt/triple.hpp"
#include "ppt/verify.hpp"

namespace {

using namespace ppt;

enum Exit : int {
    kOk = 0,
    kMalformed = 1,
    kInadmissible = 2,
    kUnsupported = 3,
    kNotPpt = 4,
    kBudget = 5,
    kVerifyFailed = 6,
};

struct MalformedInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

Int parse_positive(const std::string& text, const char* what)
{
    Int v;
    try {
        v = parse_int(text);
    } catch (const std::invalid_argument&) {
        throw MalformedInput(std::string(what) + ": '" + text + "' is not a decimal integer");
    }
    if (sgn(v) <= 0)
        throw MalformedInput(std::string(what) + " must be positive, got " + text);
    return v;
}

std::uint64_t parse_positive_u64(const std::string& text, const char* what)
{
    const Int v = parse_positive(text, what);
    if (!fits_u64(v))
        throw MalformedInput(std::string(what) + " = " + text + " exceeds 2^64 - 1");
    return to_u64(v);
}

std::int64_t parse_i64(const std::string& text, const char* what)
{
    Int v;
    try {
        v = parse_int(text);
    } catch (const std::invalid_argument&) {
        throw MalformedInput(std::string(what) + ": '" + text + "' is not a decimal integer");
    }
    if (!v.fits_slong_p())
        throw MalformedInput(std::string(what) + " = " + text + " out of range");
    return v.get_si();
}

Format parse_format_flag(const std::string& text)
{
    auto f = parse_format(text);
    if (!f)
        throw MalformedInput("--format must be csv or json");
    return *f;
}

// ---------------------------------------------------------------- gen-g

struct GenGArgs {
    std::string g;
    std::string count = "10";
    std::string format = "csv";
};

int run_gen_g(const GenGArgs& args)
{
    const Format fmt = parse_format_flag(args.format);
    const Int g = parse_positive(args.g, "--g");
    const std::uint64_t count = parse_positive_u64(args.count, "--count");

    RecordWriter out(std::cout, fmt);
    const GClass gc = classify_g(g);
    out.write(gclass_record(gc));
    if (!gc.admissible()) {
        std::cerr << "ppt: no primitive triples (a, b, b+" << g << "): " << gc.reason << '\n';
        return kInadmissible;
    }
    for (const GFamilyItem& item : generate_g_family(g, count))
        out.write(gfamily_record(item));
    return kOk;
}

// ---------------------------------------------------------------- gen-f

struct GenFArgs {
    std::string f;
    std::string m = "0..2";
    std::string format = "csv";
};

std::pair<std::int64_t, std::int64_t> parse_m_range(const std::string& text)
{
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const std::int64_t m = parse_i64(text, "--m");
        return {m, m};
    }
    const std::int64_t lo = parse_i64(text.substr(0, dots), "--m");
    const std::int64_t hi = parse_i64(text.substr(dots + 2), "--m");
    if (lo > hi)
        throw MalformedInput("--m range " + text + " is empty");
    if (hi - lo > 10'000)
        throw MalformedInput("--m range " + text + " is wider than 10000");
    return {lo, hi};
}

int run_gen_f(const GenFArgs& args)
{
    const Format fmt = parse_format_flag(args.format);
    const Int f = parse_positive(args.f, "--f");
    const auto [m_lo, m_hi] = parse_m_range(args.m);
    if (!fits_u64(f)) {
        std::cerr << "ppt: f = " << f << " is out of the supported factorization range (f < 2^64)\n";
        return kUnsupported;
    }

    RecordWriter out(std::cout, fmt);
    const FSpec spec = admissible_f(f);
    out.write(fspec_record(spec));
    if (!spec.admissible) {
        std::cerr << "ppt: no primitive triples (a, a+" << f << ", c): every prime factor of f must be +-1 mod 8";
        for (const auto& rj : spec.rejections)
            std::cerr << "; " << rj.reason;
        std::cerr << '\n';
        return kInadmissible;
    }
    const auto elements = cf_elements(spec);
    for (const CfElement& e : elements)
        out.write(cf_record(e));
    for (const FTriple& ft : generate_f_triples(spec, m_lo, m_hi, elements))
        out.write(ftriple_record(ft));
    return kOk;
}

// ---------------------------------------------------------------- check

struct CheckArgs {
    std::vector<std::string> entries;
    std::string format = "csv";
};

int run_check(const CheckArgs& args)
{
    const Format fmt = parse_format_flag(args.format);
    if (args.entries.size() != 3)
        throw MalformedInput("check needs exactly three integers a b c");
    const Int a = parse_positive(args.entries[0], "a");
    const Int b = parse_positive(args.entries[1], "b");
    const Int c = parse_positive(args.entries[2], "c");

    const bool pythagorean = a * a + b * b == c * c;
    const bool primitive = pythagorean && gcd(a, b) == 1;

    std::vector<Field> fields{Field::number("a", a), Field::number("b", b), Field::number("c", c),
                              Field::boolean("pythagorean", pythagorean), Field::boolean("primitive", primitive)};
    auto push_family = [&](const std::string& prefix, const std::optional<FamilyCoordinates>& fc) {
        if (!fc) {
            for (const char* suffix : {"", "_kind", "_m", "_n"})
                fields.push_back(Field::null(prefix + suffix));
            return;
        }
        fields.push_back(Field::number(prefix, fc->gclass.g));
        fields.push_back(Field::string(prefix + "_kind", std::string(to_string(fc->gclass.kind))));
        fields.push_back(Field::number(prefix + "_m", *fc->gclass.m));
        fields.push_back(Field::number(prefix + "_n", std::to_string(fc->n)));
    };

    if (primitive) {
        const Triple t(a, b, c);
        const ParamPair p = to_params(t);
        fields.push_back(Field::number("r", p.r()));
        fields.push_back(Field::number("s", p.s()));
        push_family("g", invert_to_family(t));
        push_family("g_alt", invert_to_family(t.swapped()));
    } else {
        fields.push_back(Field::null("r"));
        fields.push_back(Field::null("s"));
        push_family("g", std::nullopt);
        push_family("g_alt", std::nullopt);
    }
    fields.push_back(Field::number("f", abs(Int(b - a))));

    RecordWriter(std::cout, fmt).write({"check", std::move(fields)});
    if (!primitive) {
        std::cerr << "ppt: (" << a << ", " << b << ", " << c << ") is "
                  << (pythagorean ? "not primitive" : "not Pythagorean") << '\n';
        return kNotPpt;
    }
    return kOk;
}

// ---------------------------------------------------------------- density

struct DensityArgs {
    std::string family;
    std::string grid;
    std::string format = "csv";
    std::string out_path;
    std::string budget;
};

int run_density(const DensityArgs& args)
{
    const Format fmt = parse_format_flag(args.format);
    const auto family = parse_family(args.family);
    if (!family)
        throw MalformedInput("--family must be one of GO, GEE, GEO, G1");

    std::vector<Int> grid;
    std::stringstream ss(args.grid);
    for (std::string item; std::getline(ss, item, ',');)
        grid.push_back(parse_positive(item, "--grid"));
    if (grid.empty())
        throw MalformedInput("--grid is empty");
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (grid[i] <= grid[i - 1])
            throw MalformedInput("--grid must be strictly ascending");
    }

    const std::uint64_t budget =
        args.budget.empty() ? sieve_budget_from_env() : parse_positive_u64(args.budget, "--budget");
    if (!fits_u64(grid.back()) || to_u64(grid.back()) > budget) {
        std::cerr << "ppt: B = " << grid.back() << " exceeds the sieve budget " << budget
                  << " (raise PPT_SIEVE_BUDGET or --budget)\n";
        return kBudget;
    }
    std::vector<std::uint64_t> bounds;
    for (const Int& b : grid)
        bounds.push_back(to_u64(b));

    const TotientSieve sieve = TotientSieve::build(bounds.back(), budget);
    const auto rows = density_report(*family, bounds, sieve);

    std::ofstream file;
    if (!args.out_path.empty()) {
        file.open(args.out_path, std::ios::binary);
        if (!file)
            throw MalformedInput("cannot open --out " + args.out_path);
    }
    RecordWriter out(args.out_path.empty() ? std::cout : file, fmt);
    for (const DensityRow& row : rows)
        out.write(density_record(row));
    return kOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    std::string scope;
    std::string c_max;
    std::string m_max;
    std::string bound;
    std::string format = "csv";
};

int run_verify(const VerifyArgs& args)
{
    const Format fmt = parse_format_flag(args.format);
    auto or_default = [](const std::string& text, std::uint64_t fallback, const char* what) {
        return text.empty() ? fallback : parse_positive_u64(text, what);
    };

    VerifyReport rep;
    if (args.scope == "g-coverage") {
        rep = verify_g_coverage(or_default(args.c_max, 100'000, "--c-max"));
    } else if (args.scope == "f-coverage") {
        rep = verify_f_coverage(or_default(args.c_max, 1'000'000, "--c-max"), {1, 7, 17},
                                static_cast<std::int64_t>(or_default(args.m_max, 12, "--m-max")));
    } else if (args.scope == "nonexistence") {
        rep = verify_nonexistence(or_default(args.c_max, 1'000'000, "--c-max"));
    } else if (args.scope == "pell") {
        rep = verify_pell(static_cast<std::int64_t>(or_default(args.m_max, 50, "--m-max")));
    } else if (args.scope == "density-cross") {
        rep = verify_density_cross(or_default(args.bound, 2000, "--B"));
    } else {
        throw MalformedInput("unknown verify scope '" + args.scope +
                             "' (g-coverage, f-coverage, nonexistence, pell, density-cross)");
    }

    RecordWriter(std::cout, fmt).write(verify_record(rep));
    if (!rep.ok()) {
        std::cerr << "ppt: " << rep.scope << " failed " << rep.failed << " of " << rep.checked
                  << " checks; first counterexample: " << *rep.counterexample << '\n';
        return kVerifyFailed;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Primitive Pythagorean triples with fixed gaps"};
    app.require_subcommand(1);

    GenGArgs gen_g;
    auto* g_cmd = app.add_subcommand("gen-g", "Family of primitive triples (a, b, b+g)");
    g_cmd->add_option("--g", gen_g.g, "Gap c - b")->required();
    g_cmd->add_option("--count", gen_g.count, "Number of family items");
    g_cmd->add_option("--format", gen_g.format, "csv or json");

    GenFArgs gen_f;
    auto* f_cmd = app.add_subcommand("gen-f", "Primitive triples (a, a+f, c) from the Pell sweep");
    f_cmd->add_option("--f", gen_f.f, "Leg gap b - a")->required();
    f_cmd->add_option("--m", gen_f.m, "Exponent range lo..hi (or a single m)");
    f_cmd->add_option("--format", gen_f.format, "csv or json");

    CheckArgs check;
    auto* c_cmd = app.add_subcommand("check", "Classify a triple a b c");
    c_cmd->add_option("entries", check.entries, "a b c")->required()->expected(3);
    c_cmd->add_option("--format", check.format, "csv or json");

    DensityArgs density;
    auto* d_cmd = app.add_subcommand("density", "Family counts against the coprime-pair pool");
    d_cmd->add_option("--family", density.family, "GO, GEE, GEO or G1")->required();
    d_cmd->add_option("--grid", density.grid, "Comma-separated ascending bounds B")->required();
    d_cmd->add_option("--format", density.format, "csv or json");
    d_cmd->add_option("--out", density.out_path, "Write records to this file");
    d_cmd->add_option("--budget", density.budget, "Sieve bound limit (default PPT_SIEVE_BUDGET or 10^7)");

    VerifyArgs verify;
    auto* v_cmd = app.add_subcommand("verify", "Run an oracle-equivalence suite");
    v_cmd->add_option("scope", verify.scope, "g-coverage | f-coverage | nonexistence | pell | density-cross")
        ->required();
    v_cmd->add_option("--c-max", verify.c_max, "Hypotenuse bound");
    v_cmd->add_option("--m-max", verify.m_max, "Exponent bound");
    v_cmd->add_option("--B", verify.bound, "Parameter bound");
    v_cmd->add_option("--format", verify.format, "csv or json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kMalformed;
    }

    try {
        if (*g_cmd)
            return run_gen_g(gen_g);
        if (*f_cmd)
            return run_gen_f(gen_f);
        if (*c_cmd)
            return run_check(check);
        if (*d_cmd)
            return run_density(density);
        if (*v_cmd)
            return run_verify(verify);
    } catch (const MalformedInput& e) {
        std::cerr << "ppt: " << e.what() << '\n';
        return kMalformed;
    } catch (const UnsupportedRange& e) {
        std::cerr << "ppt: " << e.what() << '\n';
        return kUnsupported;
    } catch (const SieveBudgetExceeded& e) {
        std::cerr << "ppt: " << e.what() << '\n';
        return kBudget;
    }
    return kMalformed;
}
