#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace schemamap {

/// Malformed input text. Carries the 1-based line (0 when unknown) and an
/// optional source name so diagnostics can point at "file:line".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line = 0,
             std::string source = {})
      : std::runtime_error(format(message, line, source)),
        line_(line),
        source_(std::move(source)) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& source() const noexcept { return source_; }

 private:
  static std::string format(const std::string& message, std::size_t line,
                            const std::string& source) {
    std::string out;
    if (!source.empty()) out += source + ":";
    if (line > 0) out += std::to_string(line) + ":";
    if (!out.empty()) out += " ";
    return out + message;
  }

  std::size_t line_;
  std::string source_;
};

/// Violation of a domain rule: schema mismatch, membership violation,
/// exceeded search cap, infeasible configuration.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace schemamap
