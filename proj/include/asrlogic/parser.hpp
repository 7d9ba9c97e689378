#pragma once

#include <set>
#include <string>
#include <string_view>
#include <variant>

#include "asrlogic/formula.hpp"

namespace asrlogic {

/// Identifiers in `constants` parse as constant terms (unless bound by an
/// enclosing quantifier); every other identifier parses as a variable.
struct ParseOptions {
  std::set<std::string> constants;
};

/// Parses one fully parenthesized prefix formula. Free variables are allowed.
/// Raises ParseError carrying line and column.
Formula parse_formula(std::string_view text, const ParseOptions& options = {});

/// Parses an (asr ...) document. Scope is checked while parsing: an
/// identifier that is neither bound, a declared parameter, a relation
/// argument, nor a declared constant is an unbound-variable error, and f must
/// be applied to exactly k arguments.
AsrDocument parse_document(std::string_view text);

/// A document if the text starts with "(asr", else a formula.
std::variant<Formula, AsrDocument> parse(std::string_view text,
                                         const ParseOptions& options = {});

std::string print_formula(const Formula& phi);
std::string print_document(const AsrDocument& d);

/// Reads a whole file; raises IoError.
std::string read_file(const std::string& path);

}  // namespace asrlogic
