#include "schemamap/instance_io.hpp"

#include <fstream>
#include <sstream>

#include "lexer.hpp"
#include "schemamap/errors.hpp"

namespace schemamap {

using detail::Tok;
using detail::TokenStream;

namespace {

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++lineno;
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(line, lineno);
    if (end == text.size()) break;
    start = end + 1;
  }
}

Value parse_cell(TokenStream& ts) {
  const auto& tok = ts.peek();
  switch (tok.kind) {
    case Tok::Quoted:
      return Value::constant(ts.next().text);
    case Tok::Null: {
      std::string digits = ts.next().text;
      NullId id = 0;
      try {
        id = std::stoull(digits);
      } catch (const std::exception&) {
        ts.fail("null id out of range: _" + digits);
      }
      if (id == 0) ts.fail("null ids must be positive: _" + digits);
      return Value::null(id);
    }
    case Tok::Word:
      if (detail::starts_upper(tok.text))
        ts.fail("constant '" + tok.text + "' starts with an uppercase letter; quote it");
      return Value::constant(ts.next().text);
    default:
      ts.fail("expected a constant or null" + ts.describe_found());
  }
}

Tuple parse_fact(TokenStream& ts) {
  Tuple t;
  t.relation = ts.expect(Tok::Word, "relation name").text;
  ts.expect(Tok::LParen, "'('");
  if (!ts.at(Tok::RParen)) {
    t.cells.push_back(parse_cell(ts));
    while (ts.accept(Tok::Comma)) t.cells.push_back(parse_cell(ts));
  }
  ts.expect(Tok::RParen, "')'");
  return t;
}

RelationSig parse_declaration(TokenStream& ts) {
  RelationSig sig;
  sig.name = ts.expect(Tok::Word, "relation name").text;
  ts.expect(Tok::LParen, "'('");
  if (!ts.at(Tok::RParen)) {
    sig.attributes.push_back(ts.expect(Tok::Word, "attribute name").text);
    while (ts.accept(Tok::Comma))
      sig.attributes.push_back(ts.expect(Tok::Word, "attribute name").text);
  }
  ts.expect(Tok::RParen, "')'");
  ts.accept(Tok::Dot);
  if (!ts.at_end()) ts.fail("trailing input after declaration" + ts.describe_found());
  return sig;
}

}  // namespace

bool is_bare_constant(std::string_view symbol) {
  if (symbol.empty()) return false;
  unsigned char first = static_cast<unsigned char>(symbol[0]);
  if (!(std::islower(first) || std::isdigit(first))) return false;
  for (char c : symbol)
    if (!detail::is_word_char(c)) return false;
  return true;
}

std::string format_value(const Value& value) {
  if (value.is_null()) return "_" + std::to_string(value.null_id());
  const std::string& s = value.symbol();
  if (is_bare_constant(s)) return s;
  std::string out = "'";
  for (char c : s) {
    if (c == '\'' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('\'');
  return out;
}

std::string format_tuple(const Tuple& tuple) {
  std::string out = tuple.relation + "(";
  for (std::size_t i = 0; i < tuple.cells.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_value(tuple.cells[i]);
  }
  out += ")";
  return out;
}

Tuple parse_tuple(std::string_view text) {
  static const std::string kNoSource;
  TokenStream ts(detail::tokenize(text, 1, kNoSource), 1, kNoSource);
  Tuple t = parse_fact(ts);
  ts.accept(Tok::Dot);
  if (!ts.at_end()) ts.fail("trailing input after fact" + ts.describe_found());
  return t;
}

Instance parse_instance(std::string_view text, SchemaPtr schema,
                        const std::string& source_name) {
  Instance instance(std::move(schema));
  for_each_line(text, [&](std::string_view line, std::size_t lineno) {
    TokenStream ts(detail::tokenize(line, lineno, source_name), lineno, source_name);
    if (ts.at_end()) return;
    Tuple t = parse_fact(ts);
    ts.expect(Tok::Dot, "'.' after fact");
    if (!ts.at_end()) ts.fail("trailing input after fact" + ts.describe_found());
    const RelationSig* sig = instance.schema().find(t.relation);
    if (sig == nullptr) ts.fail("unknown relation '" + t.relation + "'");
    if (sig->arity() != t.arity())
      ts.fail("arity mismatch for '" + t.relation + "': declared " +
              std::to_string(sig->arity()) + ", got " + std::to_string(t.arity()));
    instance.insert(std::move(t));
  });
  return instance;
}

std::string serialize_instance(const Instance& instance) {
  std::string out;
  for (const auto& t : instance) {
    out += format_tuple(t);
    out += ".\n";
  }
  return out;
}

SchemaPair parse_schema_file(std::string_view text, const std::string& source_name) {
  auto source = std::make_shared<Schema>();
  auto target = std::make_shared<Schema>();
  Schema* current = nullptr;
  for_each_line(text, [&](std::string_view line, std::size_t lineno) {
    TokenStream ts(detail::tokenize(line, lineno, source_name), lineno, source_name);
    if (ts.at_end()) return;
    if (ts.accept(Tok::LBracket)) {
      std::string section = ts.expect(Tok::Word, "section name").text;
      ts.expect(Tok::RBracket, "']'");
      if (!ts.at_end()) ts.fail("trailing input after section header");
      if (section == "source") {
        current = source.get();
      } else if (section == "target") {
        current = target.get();
      } else {
        ts.fail("unknown section '" + section + "' (expected source or target)");
      }
      return;
    }
    if (current == nullptr) ts.fail("declaration outside a [source] or [target] section");
    RelationSig sig = parse_declaration(ts);
    if (source->contains(sig.name) || target->contains(sig.name))
      ts.fail("relation '" + sig.name + "' declared twice");
    try {
      current->add(std::move(sig));
    } catch (const DomainError& e) {
      ts.fail(e.what());
    }
  });
  return {std::move(source), std::move(target)};
}

std::string serialize_schema_file(const Schema& source, const Schema& target) {
  std::string out;
  auto section = [&](const char* name, const Schema& schema) {
    out += "[";
    out += name;
    out += "]\n";
    for (const auto& r : schema.relations()) {
      out += r.name + "(";
      for (std::size_t i = 0; i < r.attributes.size(); ++i) {
        if (i > 0) out += ", ";
        out += r.attributes[i];
      }
      out += ")\n";
    }
  };
  section("source", source);
  section("target", target);
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file", 0, path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ParseError("cannot write file", 0, path);
  out << content;
  if (!out) throw ParseError("write failed", 0, path);
}

}  // namespace schemamap
