#include "asrlogic/error.hpp"

namespace asrlogic {

ParseError::ParseError(ParseErrorKind kind, std::size_t line,
                       std::size_t column, const std::string& what)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      kind_(kind),
      line_(line),
      column_(column) {}

}  // namespace asrlogic
