#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace asrlogic {

/// Base of every domain error the library raises. The CLI maps these to
/// exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured cap (V-level, automorphism domain, census budget, L index)
/// was exceeded.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Unknown relation or constant name, or a relation used at the wrong arity.
class VocabularyError : public Error {
 public:
  using Error::Error;
};

/// A formula reached an evaluator that cannot interpret it (e.g. atom-f in
/// plain first-order evaluation).
class WrongEvaluatorError : public Error {
 public:
  using Error::Error;
};

class NotACodeError : public Error {
 public:
  using Error::Error;
};

class ArityError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

enum class ParseErrorKind { kLexical, kSyntax, kArity, kUnbound };

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, std::size_t column,
             const std::string& what);

  ParseErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace asrlogic
