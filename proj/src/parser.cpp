#include "asrlogic/parser.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "asrlogic/error.hpp"

namespace asrlogic {

namespace {

struct Token {
  enum class Kind { kOpen, kClose, kAtom, kEnd };
  Kind kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' ||
         c == '-' || c == '\'';
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t count) {
    for (std::size_t j = 0; j < count; ++j, ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      advance(1);
    } else if (c == ';') {
      while (i < text.size() && text[i] != '\n') advance(1);
    } else if (c == '(' || c == ')') {
      out.push_back({c == '(' ? Token::Kind::kOpen : Token::Kind::kClose,
                     std::string(1, c), line, column});
      advance(1);
    } else if (c == '=') {
      out.push_back({Token::Kind::kAtom, "=", line, column});
      advance(1);
    } else if (c == '#') {
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])) != 0) ++j;
      if (j == i + 1 || j - i > 19) {
        throw ParseError(ParseErrorKind::kLexical, line, column,
                         "'#' must be followed by an element number");
      }
      out.push_back({Token::Kind::kAtom, std::string(text.substr(i, j - i)),
                     line, column});
      advance(j - i);
    } else if (ident_start(c)) {
      std::size_t j = i + 1;
      while (j < text.size() && ident_char(text[j])) ++j;
      out.push_back({Token::Kind::kAtom, std::string(text.substr(i, j - i)),
                     line, column});
      advance(j - i);
    } else {
      throw ParseError(ParseErrorKind::kLexical, line, column,
                       std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Token::Kind::kEnd, "", line, column});
  return out;
}

// Scope for document parsing. Null means "free variables allowed".
struct Scope {
  std::vector<std::string> allowed;
  std::size_t f_arity = 0;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::set<std::string> constants)
      : tokens_(std::move(tokens)), constants_(std::move(constants)) {}

  Formula formula(const Scope* scope) {
    const Token& open = expect_open();
    const Token& head = next();
    if (head.kind != Token::Kind::kAtom) syntax(head, "expected a formula head");
    const std::string& h = head.text;
    Formula out;
    if (h == "in" || h == "=") {
      std::vector<Term> args = terms(scope);
      if (args.size() != 2) arity(open, "'" + h + "' takes two terms");
      out = h == "in" ? Formula::in(args[0], args[1])
                      : Formula::eq(args[0], args[1]);
    } else if (h == "rel") {
      const Token& name = next();
      if (name.kind != Token::Kind::kAtom || !ident_start(name.text[0])) {
        syntax(name, "expected a relation name");
      }
      out = Formula::relation(name.text, terms(scope));
    } else if (h == "f") {
      std::vector<Term> args = terms(scope);
      if (scope != nullptr && args.size() != scope->f_arity) {
        arity(open, "f applied to " + std::to_string(args.size()) +
                        " argument(s), document has " +
                        std::to_string(scope->f_arity) + " parameter(s)");
      }
      out = Formula::f(std::move(args));
    } else if (h == "not") {
      std::vector<Formula> cs = formulas(scope);
      if (cs.size() != 1) arity(open, "'not' takes one formula");
      out = Formula::negation(std::move(cs[0]));
    } else if (h == "and" || h == "or") {
      std::vector<Formula> cs = formulas(scope);
      out = h == "and" ? Formula::conj(std::move(cs))
                       : Formula::disj(std::move(cs));
    } else if (h == "implies") {
      std::vector<Formula> cs = formulas(scope);
      if (cs.size() != 2) arity(open, "'implies' takes two formulas");
      out = Formula::implies(std::move(cs[0]), std::move(cs[1]));
    } else if (h == "exists" || h == "forall") {
      const Token& v = next();
      if (v.kind != Token::Kind::kAtom || !ident_start(v.text[0])) {
        syntax(v, "expected a bound variable");
      }
      bound_.push_back(v.text);
      std::vector<Formula> cs = formulas(scope);
      bound_.pop_back();
      if (cs.size() != 1) arity(open, "'" + h + "' takes one body formula");
      out = h == "exists" ? Formula::exists(v.text, std::move(cs[0]))
                          : Formula::forall(v.text, std::move(cs[0]));
      return out;
    } else {
      syntax(head, "unknown formula head '" + h + "'");
    }
    return out;
  }

  AsrDocument document() {
    AsrDocument d;
    expect_open();
    expect_word("asr");
    if (peek_clause("consts")) {
      expect_open();
      next();
      d.consts = identifiers();
      for (const std::string& c : d.consts) constants_.insert(c);
    }
    if (!peek_clause("params")) syntax(peek(), "expected (params ...)");
    expect_open();
    next();
    d.params = identifiers();
    if (d.params.empty()) arity(peek(), "a document needs at least one parameter");

    if (!peek_clause("phi")) syntax(peek(), "expected (phi ...)");
    expect_open();
    next();
    Scope phi_scope{d.params, d.params.size()};
    d.phi = formula(&phi_scope);
    expect_close();

    while (peek_clause("wf")) {
      expect_open();
      next();
      expect_open();
      std::vector<std::string> args = identifiers();
      if (args.size() != 2) {
        arity(peek(), "a relation spec designates exactly two arguments");
      }
      std::size_t index = d.wf.size();
      Scope wf_scope{{args[0], args[1]}, d.params.size()};
      for (std::size_t j = index + 1; j < d.params.size(); ++j) {
        wf_scope.allowed.push_back(d.params[j]);
      }
      Formula body = formula(&wf_scope);
      expect_close();
      d.wf.push_back({args[0], args[1], std::move(body)});
    }
    if (d.wf.empty()) syntax(peek(), "expected at least one (wf (u v) ...)");
    expect_close();
    expect_end();
    return d;
  }

  void expect_end() {
    if (peek().kind != Token::Kind::kEnd) syntax(peek(), "trailing input");
  }

  bool starts_with_word(const std::string& word) const {
    return tokens_.size() > 1 && tokens_[0].kind == Token::Kind::kOpen &&
           tokens_[1].kind == Token::Kind::kAtom && tokens_[1].text == word;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() {
    const Token& t = tokens_[pos_];
    if (t.kind != Token::Kind::kEnd) ++pos_;
    return t;
  }

  bool peek_clause(const std::string& word) const {
    return tokens_[pos_].kind == Token::Kind::kOpen &&
           pos_ + 1 < tokens_.size() &&
           tokens_[pos_ + 1].kind == Token::Kind::kAtom &&
           tokens_[pos_ + 1].text == word;
  }

  const Token& expect_open() {
    const Token& t = next();
    if (t.kind != Token::Kind::kOpen) syntax(t, "expected '('");
    return t;
  }

  void expect_close() {
    const Token& t = next();
    if (t.kind != Token::Kind::kClose) syntax(t, "expected ')'");
  }

  void expect_word(const std::string& word) {
    const Token& t = next();
    if (t.kind != Token::Kind::kAtom || t.text != word) {
      syntax(t, "expected '" + word + "'");
    }
  }

  std::vector<std::string> identifiers() {
    std::vector<std::string> out;
    while (peek().kind == Token::Kind::kAtom) {
      const Token& t = next();
      if (!ident_start(t.text[0])) syntax(t, "expected an identifier");
      out.push_back(t.text);
    }
    expect_close();
    return out;
  }

  std::vector<Term> terms(const Scope* scope) {
    std::vector<Term> out;
    while (peek().kind == Token::Kind::kAtom) out.push_back(term(next(), scope));
    if (peek().kind == Token::Kind::kOpen) syntax(peek(), "expected a term");
    expect_close();
    return out;
  }

  Term term(const Token& t, const Scope* scope) {
    if (t.text[0] == '#') return Term::element(std::stoull(t.text.substr(1)));
    if (t.text == "=") syntax(t, "expected a term");
    const std::string& name = t.text;
    if (std::find(bound_.begin(), bound_.end(), name) != bound_.end()) {
      return Term::var(name);
    }
    if (scope != nullptr &&
        std::find(scope->allowed.begin(), scope->allowed.end(), name) !=
            scope->allowed.end()) {
      return Term::var(name);
    }
    if (constants_.contains(name)) return Term::constant(name);
    if (scope != nullptr) {
      throw ParseError(ParseErrorKind::kUnbound, t.line, t.column,
                       "unbound variable '" + name + "'");
    }
    return Term::var(name);
  }

  std::vector<Formula> formulas(const Scope* scope) {
    std::vector<Formula> out;
    while (peek().kind == Token::Kind::kOpen) out.push_back(formula(scope));
    if (peek().kind != Token::Kind::kClose) syntax(peek(), "expected a formula");
    next();
    return out;
  }

  [[noreturn]] static void syntax(const Token& t, const std::string& what) {
    throw ParseError(ParseErrorKind::kSyntax, t.line, t.column,
                     t.kind == Token::Kind::kEnd ? what + " at end of input"
                                                 : what);
  }

  [[noreturn]] static void arity(const Token& t, const std::string& what) {
    throw ParseError(ParseErrorKind::kArity, t.line, t.column, what);
  }

  std::vector<Token> tokens_;
  std::set<std::string> constants_;
  std::vector<std::string> bound_;
  std::size_t pos_ = 0;
};

void print_into(const Formula& phi, std::string& out) {
  out += '(';
  switch (phi.kind) {
    case FormulaKind::kIn: out += "in"; break;
    case FormulaKind::kEq: out += "="; break;
    case FormulaKind::kRel: out += "rel " + phi.rel; break;
    case FormulaKind::kF: out += "f"; break;
    case FormulaKind::kNot: out += "not"; break;
    case FormulaKind::kAnd: out += "and"; break;
    case FormulaKind::kOr: out += "or"; break;
    case FormulaKind::kImplies: out += "implies"; break;
    case FormulaKind::kExists: out += "exists " + phi.var; break;
    case FormulaKind::kForall: out += "forall " + phi.var; break;
  }
  for (const Term& t : phi.args) out += ' ' + t.to_string();
  for (const Formula& c : phi.children) {
    out += ' ';
    print_into(c, out);
  }
  out += ')';
}

}  // namespace

Formula parse_formula(std::string_view text, const ParseOptions& options) {
  Parser p(tokenize(text), options.constants);
  Formula out = p.formula(nullptr);
  p.expect_end();
  return out;
}

AsrDocument parse_document(std::string_view text) {
  Parser p(tokenize(text), {});
  return p.document();
}

std::variant<Formula, AsrDocument> parse(std::string_view text,
                                         const ParseOptions& options) {
  std::vector<Token> tokens = tokenize(text);
  Parser p(tokens, options.constants);
  if (p.starts_with_word("asr")) return p.document();
  Formula out = p.formula(nullptr);
  p.expect_end();
  return out;
}

std::string print_formula(const Formula& phi) {
  std::string out;
  print_into(phi, out);
  return out;
}

std::string print_document(const AsrDocument& d) {
  std::string out = "(asr\n";
  if (!d.consts.empty()) {
    out += "  (consts";
    for (const std::string& c : d.consts) out += ' ' + c;
    out += ")\n";
  }
  out += "  (params";
  for (const std::string& p : d.params) out += ' ' + p;
  out += ")\n  (phi " + print_formula(d.phi) + ")";
  for (const RelationSpec& spec : d.wf) {
    out += "\n  (wf (" + spec.lower + ' ' + spec.upper + ") " +
           print_formula(spec.body) + ")";
  }
  out += ")\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace asrlogic
