#pragma once

#include <string>
#include <string_view>

#include "schemamap/relational.hpp"

namespace schemamap {

/// Source and target schemas as read from a schema file.
struct SchemaPair {
  SchemaPtr source;
  SchemaPtr target;
};

/// Parses `[source]` / `[target]` sections of `rel(attr, ...)` declarations.
SchemaPair parse_schema_file(std::string_view text, const std::string& source_name = {});
std::string serialize_schema_file(const Schema& source, const Schema& target);

/// Parses one fact per line, `rel(v1, v2, ...).`, checking each against
/// `schema`. Duplicate facts collapse. Throws ParseError with the line.
Instance parse_instance(std::string_view text, SchemaPtr schema,
                        const std::string& source_name = {});

/// Canonically ordered facts, one per line.
std::string serialize_instance(const Instance& instance);

/// `abc`, `'Mixed Case'` or `_7`.
std::string format_value(const Value& value);
/// `rel(v1, v2)` without the trailing dot.
std::string format_tuple(const Tuple& tuple);

/// Parses a single `rel(v1, ...)` term (trailing dot optional). No schema check.
Tuple parse_tuple(std::string_view text);

/// True when `symbol` can be written without quotes.
bool is_bare_constant(std::string_view symbol);

/// Reads a whole file; throws ParseError naming the path when it cannot be opened.
std::string read_text_file(const std::string& path);
/// Writes a whole file; throws ParseError naming the path on failure.
void write_text_file(const std::string& path, std::string_view content);

}  // namespace schemamap
