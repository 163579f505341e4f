#include "ppt/output.hpp"

#include <json.hpp>

namespace ppt {

std::optional<Format> parse_format(std::string_view text)
{
    if (text == "csv")
        return Format::Csv;
    if (text == "json")
        return Format::Json;
    return std::nullopt;
}

Field Field::number(std::string name, std::string text)
{
    return {std::move(name), std::move(text), Kind::Number};
}

Field Field::number(std::string name, const Int& v)
{
    return {std::move(name), v.get_str(), Kind::Number};
}

Field Field::string(std::string name, std::string text)
{
    return {std::move(name), std::move(text), Kind::String};
}

Field Field::boolean(std::string name, bool v)
{
    return {std::move(name), v ? "true" : "false", Kind::Bool};
}

Field Field::null(std::string name)
{
    return {std::move(name), "", Kind::Null};
}

namespace {

std::string csv_cell(const std::string& text)
{
    if (text.find_first_of(",\"\n") == std::string::npos)
        return text;
    std::string out = "\"";
    for (char ch : text) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + '"';
}

std::string json_value(const Field& f)
{
    switch (f.kind) {
    case Field::Kind::Number:
    case Field::Kind::Bool: return f.text;
    case Field::Kind::Null: return "null";
    case Field::Kind::String: break;
    }
    return nlohmann::json(f.text).dump();
}

}  // namespace

void RecordWriter::write(const OutputRecord& rec)
{
    if (format_ == Format::Json) {
        os_ << "{\"record\":" << nlohmann::json(rec.schema).dump();
        for (const Field& f : rec.fields)
            os_ << ',' << nlohmann::json(f.name).dump() << ':' << json_value(f);
        os_ << "}\n";
        return;
    }
    if (rec.schema != last_schema_) {
        for (std::size_t i = 0; i < rec.fields.size(); ++i)
            os_ << (i ? "," : "") << rec.fields[i].name;
        os_ << '\n';
        last_schema_ = rec.schema;
    }
    for (std::size_t i = 0; i < rec.fields.size(); ++i)
        os_ << (i ? "," : "") << csv_cell(rec.fields[i].text);
    os_ << '\n';
}

OutputRecord gclass_record(const GClass& gc)
{
    return {"g-class",
            {Field::number("g", gc.g), Field::string("kind", std::string(to_string(gc.kind))),
             gc.m ? Field::number("m", *gc.m) : Field::null("m"),
             gc.admissible() ? Field::null("reason") : Field::string("reason", gc.reason)}};
}

OutputRecord gfamily_record(const GFamilyItem& item)
{
    return {"g-family",
            {Field::number("n", std::to_string(item.n)), Field::number("k", item.k),
             Field::number("r", item.params.r()), Field::number("s", item.params.s()),
             Field::number("a", item.triple.a()), Field::number("b", item.triple.b()),
             Field::number("c", item.triple.c()), Field::number("t", item.stride),
             Field::number("q", item.offset)}};
}

OutputRecord fspec_record(const FSpec& spec)
{
    std::string factors;
    for (const auto& pp : spec.factorization) {
        if (!factors.empty())
            factors += '*';
        factors += std::to_string(pp.p);
        if (pp.t > 1)
            factors += '^' + std::to_string(pp.t);
    }
    std::string reasons;
    for (const auto& rj : spec.rejections) {
        if (!reasons.empty())
            reasons += "; ";
        reasons += rj.reason;
    }
    return {"f-spec",
            {Field::number("f", spec.f), Field::string("factorization", factors.empty() ? "1" : factors),
             Field::boolean("admissible", spec.admissible),
             reasons.empty() ? Field::null("reason") : Field::string("reason", reasons)}};
}

OutputRecord cf_record(const CfElement& e)
{
    return {"cf-element",
            {Field::string("branch", e.label()), Field::number("x", e.u.x), Field::number("y", e.u.y),
             Field::number("norm", norm(e.u))}};
}

OutputRecord ftriple_record(const FTriple& ft)
{
    return {"f-triple",
            {Field::number("a", ft.triple.a()), Field::number("b", ft.triple.b()),
             Field::number("c", ft.triple.c()), Field::number("m", std::to_string(ft.m)),
             Field::number("sign", std::to_string(ft.sign)), Field::string("branch", ft.cf_choice.label()),
             Field::number("X", ft.X), Field::number("Y", ft.Y),
             Field::number("hits", std::to_string(ft.hits))}};
}

OutputRecord density_record(const DensityRow& row)
{
    return {"density",
            {Field::number("B", std::to_string(row.B)), Field::number("family_count", std::to_string(row.family_count)),
             Field::number("pool_count", std::to_string(row.pool_count)),
             Field::number("ratio", format_fixed(row.ratio, 6)),
             Field::number("predicted", format_fixed(Rational(row.predicted), 6))}};
}

OutputRecord verify_record(const VerifyReport& rep)
{
    return {"verify",
            {Field::string("scope", rep.scope), Field::number("checked", std::to_string(rep.checked)),
             Field::number("passed", std::to_string(rep.checked - rep.failed)),
             Field::number("failed", std::to_string(rep.failed)),
             Field::string("status", rep.ok() ? "pass" : "fail"),
             rep.counterexample ? Field::string("counterexample", *rep.counterexample)
                                : Field::null("counterexample")}};
}

}  // namespace ppt
