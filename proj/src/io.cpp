#include "stbext/io.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace stbext::io {

namespace {

bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

struct PendingAttack {
    std::string from;
    std::string to;
    std::size_t line;
};

// Resolves names collected by a parser into a Framework, reporting the first
// undeclared endpoint with its source line.
Framework assemble(const std::vector<std::string>& names, const std::vector<PendingAttack>& attacks) {
    std::unordered_map<std::string, ArgId> index;
    for (std::size_t i = 0; i < names.size(); ++i) index.emplace(names[i], static_cast<ArgId>(i));
    std::vector<Attack> resolved;
    resolved.reserve(attacks.size());
    for (const auto& a : attacks) {
        auto x = index.find(a.from);
        if (x == index.end())
            throw ParseError(ParseErrorKind::UnknownArgument, a.line, "unknown argument '" + a.from + "'");
        auto y = index.find(a.to);
        if (y == index.end())
            throw ParseError(ParseErrorKind::UnknownArgument, a.line, "unknown argument '" + a.to + "'");
        resolved.push_back({x->second, y->second});
    }
    return Framework::from_indices(names, std::move(resolved));
}

class ApxScanner {
public:
    explicit ApxScanner(std::string_view text) : text_(text) {}

    // Skips whitespace and comments; false at end of input.
    bool skip_blank() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '\n') {
                ++line_;
                ++pos_;
            } else if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                return true;
            }
        }
        return false;
    }

    std::string name(const char* what) {
        skip_blank();
        std::size_t start = pos_;
        while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
        if (start == pos_) fail(std::string("expected ") + what);
        return std::string(text_.substr(start, pos_ - start));
    }

    void expect(char c) {
        skip_blank();
        if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::size_t line() const noexcept { return line_; }

    [[noreturn]] void fail(const std::string& what) const {
        std::string msg = what;
        if (pos_ < text_.size())
            msg += ", found '" + std::string(1, text_[pos_]) + "'";
        else
            msg += ", found end of input";
        throw ParseError(ParseErrorKind::Syntax, line_, msg);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
};

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    // A trailing newline does not open a new line.
    if (!lines.empty() && lines.back().empty() && !text.empty() && text.back() == '\n') lines.pop_back();
    return lines;
}

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

} // namespace

std::optional<Format> parse_format(std::string_view name) {
    std::string n = lower(name);
    if (n == "apx") return Format::Apx;
    if (n == "tgf") return Format::Tgf;
    return std::nullopt;
}

std::optional<Format> format_from_path(std::string_view path) {
    auto dot = path.rfind('.');
    if (dot == std::string_view::npos) return std::nullopt;
    return parse_format(path.substr(dot + 1));
}

Framework parse_apx(std::string_view text, std::vector<ParseDiagnostic>* warnings) {
    ApxScanner in(text);
    std::vector<std::string> names;
    std::unordered_set<std::string> declared;
    std::vector<PendingAttack> attacks;

    while (in.skip_blank()) {
        std::size_t line = in.line();
        std::string keyword = in.name("'arg' or 'att'");
        if (keyword == "arg") {
            in.expect('(');
            std::string n = in.name("argument name");
            in.expect(')');
            in.expect('.');
            if (!declared.insert(n).second) {
                if (warnings) warnings->push_back({line, "duplicate argument '" + n + "' ignored", Severity::Warning});
                continue;
            }
            names.push_back(std::move(n));
        } else if (keyword == "att") {
            in.expect('(');
            std::string from = in.name("attacker name");
            in.expect(',');
            std::string to = in.name("target name");
            in.expect(')');
            in.expect('.');
            attacks.push_back({std::move(from), std::move(to), line});
        } else {
            throw ParseError(ParseErrorKind::Syntax, line, "unknown fact '" + keyword + "'");
        }
    }
    return assemble(names, attacks);
}

Framework parse_tgf(std::string_view text, std::vector<ParseDiagnostic>* warnings) {
    std::vector<std::string> names;
    std::unordered_set<std::string> declared;
    std::vector<PendingAttack> attacks;
    bool in_edges = false;

    auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t line = i + 1;
        auto toks = tokens(lines[i]);
        if (toks.empty()) continue;
        if (!in_edges) {
            if (toks.size() == 1 && toks[0] == "#") {
                in_edges = true;
                continue;
            }
            std::string id(toks[0]);
            if (!declared.insert(id).second) {
                if (warnings) warnings->push_back({line, "duplicate node '" + id + "' ignored", Severity::Warning});
                continue;
            }
            names.push_back(std::move(id));
        } else {
            if (toks.size() < 2) throw ParseError(ParseErrorKind::Syntax, line, "edge line needs two node ids");
            attacks.push_back({std::string(toks[0]), std::string(toks[1]), line});
        }
    }
    if (!in_edges)
        throw ParseError(ParseErrorKind::MissingSeparator, std::max<std::size_t>(lines.size(), 1),
                         "missing '#' line between nodes and edges");
    return assemble(names, attacks);
}

Framework parse(std::string_view text, Format format, std::vector<ParseDiagnostic>* warnings) {
    return format == Format::Apx ? parse_apx(text, warnings) : parse_tgf(text, warnings);
}

std::string write_apx(const Framework& f) {
    std::ostringstream out;
    for (const auto& n : f.names()) out << "arg(" << n << ").\n";
    for (const auto& [x, y] : f.attack_list()) out << "att(" << f.name(x) << ',' << f.name(y) << ").\n";
    return out.str();
}

std::string write_tgf(const Framework& f) {
    std::ostringstream out;
    for (const auto& n : f.names()) out << n << '\n';
    out << "#\n";
    for (const auto& [x, y] : f.attack_list()) out << f.name(x) << ' ' << f.name(y) << '\n';
    return out.str();
}

std::string format_extension(const Extension& ext, const Framework& f) {
    std::string out = "[";
    for (std::size_t i = 0; i < ext.members.size(); ++i) {
        if (i) out += ',';
        out += f.name(ext.members[i]);
    }
    out += ']';
    return out;
}

void write_extensions(std::ostream& out, const std::vector<Extension>& extensions, const Framework& f,
                      OutputMode mode) {
    switch (mode) {
    case OutputMode::All:
        for (const auto& e : extensions) out << format_extension(e, f) << '\n';
        break;
    case OutputMode::First:
        if (extensions.empty())
            out << "NO\n";
        else
            out << format_extension(extensions.front(), f) << '\n';
        break;
    case OutputMode::Count:
        out << "COUNT " << extensions.size() << '\n';
        break;
    }
}

} // namespace stbext::io
