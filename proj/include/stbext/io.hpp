#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stbext/errors.hpp"
#include "stbext/framework.hpp"

namespace stbext::io {

enum class Severity { Warning, Error };

struct ParseDiagnostic {
    std::size_t line = 0; // 1-based
    std::string message;
    Severity severity = Severity::Error;
};

enum class ParseErrorKind { Syntax, UnknownArgument, MissingSeparator };

class ParseError : public Error {
public:
    ParseError(ParseErrorKind kind, std::size_t line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), kind_(kind),
          diagnostic_{line, message, Severity::Error} {}

    ParseErrorKind kind() const noexcept { return kind_; }
    std::size_t line() const noexcept { return diagnostic_.line; }
    const ParseDiagnostic& diagnostic() const noexcept { return diagnostic_; }

private:
    ParseErrorKind kind_;
    ParseDiagnostic diagnostic_;
};

enum class Format { Apx, Tgf };

// ".apx" / ".tgf" suffix, case-insensitive.
std::optional<Format> format_from_path(std::string_view path);
std::optional<Format> parse_format(std::string_view name);

// ASPARTIX facts: `arg(NAME).` and `att(NAME,NAME).` with NAME in
// [A-Za-z0-9_]+. Whitespace is free between tokens, `%` starts a comment
// running to end of line. Duplicate declarations are kept once and reported
// through `warnings`.
Framework parse_apx(std::string_view text, std::vector<ParseDiagnostic>* warnings = nullptr);

// Trivial Graph Format: node lines `ID [label]`, a `#` line, then edge lines
// `ID ID [label]`. The node ID becomes the argument name.
Framework parse_tgf(std::string_view text, std::vector<ParseDiagnostic>* warnings = nullptr);

Framework parse(std::string_view text, Format format, std::vector<ParseDiagnostic>* warnings = nullptr);

std::string write_apx(const Framework& f);
std::string write_tgf(const Framework& f);

// `[name1,name2,...]`, members in index order.
std::string format_extension(const Extension& ext, const Framework& f);

enum class OutputMode {
    All,   // one line per extension
    First, // first extension, or NO
    Count, // COUNT k
};

void write_extensions(std::ostream& out, const std::vector<Extension>& extensions, const Framework& f,
                      OutputMode mode);

} // namespace stbext::io
