#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "ppt/density.hpp"
#include "ppt/f_family.hpp"
#include "ppt/g_family.hpp"
#include "ppt/verify.hpp"

namespace ppt {

enum class Format { Csv, Json };

std::optional<Format> parse_format(std::string_view text);

/// One output value. Numbers are written bare in both formats (JSON
/// numbers have no length limit); Null renders as an empty CSV cell.
struct Field {
    enum class Kind { Number, String, Bool, Null };

    std::string name;
    std::string text;
    Kind kind;

    static Field number(std::string name, std::string text);
    static Field number(std::string name, const Int& v);
    static Field string(std::string name, std::string text);
    static Field boolean(std::string name, bool v);
    static Field null(std::string name);
};

/// A tagged record with a fixed field order.
struct OutputRecord {
    std::string schema;
    std::vector<Field> fields;
};

/// CSV: a header row opens every run of records sharing a schema (the
/// schema tag is not a column). JSON: one object per line, "record" first.
class RecordWriter {
public:
    RecordWriter(std::ostream& os, Format format) : os_(os), format_(format) {}

    void write(const OutputRecord& rec);

private:
    std::ostream& os_;
    Format format_;
    std::string last_schema_;
};

OutputRecord gclass_record(const GClass& gc);
OutputRecord gfamily_record(const GFamilyItem& item);
OutputRecord fspec_record(const FSpec& spec);
OutputRecord cf_record(const CfElement& e);
OutputRecord ftriple_record(const FTriple& ft);
OutputRecord density_record(const DensityRow& row);
OutputRecord verify_record(const VerifyReport& rep);

}  // namespace ppt
