#include <doctest.h>

#include <algorithm>

#include "asrlogic/error.hpp"
#include "asrlogic/godel.hpp"
#include "asrlogic/inf_formula.hpp"
#include "asrlogic/parser.hpp"
#include "oracles.hpp"

using namespace asrlogic;

namespace {

const char* kPow2Phi =
    "(or (= x one) (and (rel even x) (exists y (and (rel half x y) (f y)))))";

ParseError parse_error_of(const std::string& text, bool document) {
  try {
    if (document) {
      parse_document(text);
    } else {
      parse_formula(text);
    }
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no parse error for " << text);
  return ParseError(ParseErrorKind::kSyntax, 0, 0, "");
}

}  // namespace

TEST_CASE("parse the power-of-2 formula") {
  const Formula phi = parse_formula(kPow2Phi, {{"one"}});
  CHECK(phi.kind == FormulaKind::kOr);
  REQUIRE(phi.children.size() == 2);
  CHECK(phi.children[0].kind == FormulaKind::kEq);
  CHECK(phi.children[0].args[1] == Term::constant("one"));
  CHECK(phi.children[1].kind == FormulaKind::kAnd);
  CHECK(contains_f(phi));
  CHECK(free_variables(phi) == std::set<std::string>{"x"});
  CHECK(print_formula(phi) == kPow2Phi);
}

TEST_CASE("free variables") {
  const Formula phi = parse_formula("(forall y (not (in y x)))");
  CHECK(free_variables(phi) == std::set<std::string>{"x"});
  CHECK(ast_size(phi) == 3);
  CHECK(formula_height(phi) == 2);
}

TEST_CASE("element literals and n-ary connectives") {
  const Formula phi = parse_formula("(and (in #3 x) (or) (and))");
  CHECK(phi.children[0].args[0] == Term::element(3));
  CHECK(phi.children[1].children.empty());
  CHECK(print_formula(phi) == "(and (in #3 x) (or) (and))");
}

TEST_CASE("documents") {
  const AsrDocument d = parse_document(read_file(oracle::fixture("nat_pow2.sexp")));
  CHECK(d.k() == 1);
  CHECK(d.consts == std::vector<std::string>{"one"});
  CHECK(d.params == std::vector<std::string>{"x"});
  CHECK(print_formula(d.phi) == kPow2Phi);
  CHECK(d.wf[0].lower == "u");
  CHECK(d.wf[0].upper == "v");
  CHECK(print_formula(d.wf[0].body) == "(rel lt u v)");
  CHECK(parse_document(print_document(d)) == d);
  CHECK(validate_asr(d).accepted);
}

TEST_CASE("arity error for f in a one-parameter document") {
  const ParseError e = parse_error_of(
      "(asr (params x)\n  (phi (exists y (exists z (f y z))))\n  (wf (u v) (= u v)))", true);
  CHECK(e.kind() == ParseErrorKind::kArity);
  CHECK(e.line() == 2);
  CHECK(e.column() == 28);
}

TEST_CASE("unbound variable error carries the position") {
  const ParseError e =
      parse_error_of("(asr (params x)\n  (phi (in x q))\n  (wf (u v) (in u v)))", true);
  CHECK(e.kind() == ParseErrorKind::kUnbound);
  CHECK(e.line() == 2);
  CHECK(e.column() == 14);
  CHECK(std::string(e.what()).rfind("2:14: ", 0) == 0);
}

TEST_CASE("lexical and syntax errors") {
  CHECK(parse_error_of("(in x $)", false).kind() == ParseErrorKind::kLexical);
  CHECK(parse_error_of("(in x y", false).kind() == ParseErrorKind::kSyntax);
  CHECK(parse_error_of("(frob x y)", false).kind() == ParseErrorKind::kSyntax);
  CHECK(parse_error_of("(in x y) (in y x)", false).kind() == ParseErrorKind::kSyntax);
  CHECK(parse_error_of("(not)", false).kind() == ParseErrorKind::kArity);
  CHECK(parse_error_of("(in x)", false).kind() == ParseErrorKind::kArity);
  CHECK(parse_error_of("(asr (params x) (phi (in x x)))", true).kind() ==
        ParseErrorKind::kSyntax);
}

TEST_CASE("parse dispatches on documents") {
  CHECK(std::holds_alternative<Formula>(parse("(= x x)")));
  CHECK(std::holds_alternative<AsrDocument>(
      parse("(asr (params x) (phi (f x)) (wf (u v) (in u v)))")));
}

TEST_CASE("validation") {
  SUBCASE("power-of-2 accepted") {
    CHECK(validate_asr(parse_document(read_file(oracle::fixture("nat_pow2.sexp")))).accepted);
  }
  SUBCASE("f inside the relation of a k=1 document is rejected") {
    const AsrDocument d =
        parse_document("(asr (params x) (phi (f x)) (wf (u v) (and (in u v) (f u))))");
    const ValidationReport r = validate_asr(d);
    CHECK_FALSE(r.accepted);
    CHECK_FALSE(r.violations.empty());
  }
  SUBCASE("f inside a relation of a k=2 document is flagged") {
    const AsrDocument d = parse_document(
        "(asr (params x1 x2) (phi (f x1 x2))"
        " (wf (u v) (and (in u v) (f u x2)))"
        " (wf (u v) (in u v)))");
    const ValidationReport r = validate_asr(d);
    CHECK(r.accepted);
    CHECK(r.lex_guard_relations == std::vector<std::size_t>{0});
  }
  SUBCASE("structural violations") {
    AsrDocument d = parse_document("(asr (params x) (phi (in x x)) (wf (u v) (in u v)))");
    d.wf.push_back(d.wf[0]);
    CHECK_FALSE(validate_asr(d).accepted);
    d = parse_document("(asr (params x) (phi (in x x)) (wf (u v) (in u v)))");
    d.wf[0].upper = "u";
    CHECK_FALSE(validate_asr(d).accepted);
    d = parse_document("(asr (params x) (phi (in x x)) (wf (u v) (in u v)))");
    d.phi = parse_formula("(in x q)");
    CHECK_FALSE(validate_asr(d).accepted);
    d.params.clear();
    d.wf.clear();
    CHECK_FALSE(validate_asr(d).accepted);
  }
}

TEST_CASE("validation soundness: accepted k=1 documents have f-free relations") {
  std::mt19937 rng(11);
  oracle::RandomFormulaConfig cfg;
  cfg.f_arity = 1;
  std::size_t accepted = 0;
  for (int i = 0; i < 500; ++i) {
    AsrDocument d;
    d.params = {"x"};
    d.phi = oracle::random_formula(rng, cfg, {"x"}, 3);
    d.wf.push_back({"u", "v", oracle::random_formula(rng, cfg, {"u", "v"}, 2)});
    const ValidationReport r = validate_asr(d);
    if (r.accepted) {
      ++accepted;
      CHECK_FALSE(contains_f(d.wf[0].body));
    }
  }
  CHECK(accepted > 0);
}

TEST_CASE("printer round trip on generated formulas") {
  std::mt19937 rng(3);
  oracle::RandomFormulaConfig cfg;
  cfg.relations = {"lt", "half"};
  cfg.constants = {"zero", "one"};
  cfg.f_arity = 2;
  const ParseOptions options{{"zero", "one"}};
  for (int i = 0; i < 2000; ++i) {
    const Formula phi = oracle::random_formula(rng, cfg, {"x", "y"}, 5);
    const Formula back = parse_formula(print_formula(phi), options);
    CHECK(back == phi);
  }
}

TEST_CASE("document round trip on generated documents") {
  std::mt19937 rng(5);
  oracle::RandomFormulaConfig cfg;
  cfg.relations = {"lt"};
  cfg.constants = {"zero"};
  for (int i = 0; i < 300; ++i) {
    AsrDocument d;
    d.consts = {"zero"};
    d.params = {"x1", "x2"};
    cfg.f_arity = 2;
    d.phi = oracle::random_formula(rng, cfg, {"x1", "x2"}, 4);
    cfg.f_arity = 0;
    d.wf.push_back({"a", "b", oracle::random_formula(rng, cfg, {"a", "b", "x2"}, 3)});
    d.wf.push_back({"a", "b", oracle::random_formula(rng, cfg, {"a", "b"}, 3)});
    CHECK(parse_document(print_document(d)) == d);
  }
}

TEST_CASE("cantor pairing") {
  for (unsigned a = 0; a < 40; ++a) {
    for (unsigned b = 0; b < 40; ++b) {
      const BigNat z = cantor_pair(a, b);
      CHECK(z == BigNat((a + b) * (a + b + 1) / 2 + b));
      auto [x, y] = cantor_unpair(z);
      CHECK(x == a);
      CHECK(y == b);
    }
  }
}

TEST_CASE("not-a-code") {
  CHECK_THROWS_AS(godel_decode(GodelCode{0}), NotACodeError);
  CHECK_THROWS_AS(godel_decode(GodelCode{17}), NotACodeError);
  CHECK_THROWS_AS(GodelCode::from_string("12a"), NotACodeError);
}

TEST_CASE("decode is the inverse of encode on its image") {
  // Every small integer either fails to decode or re-encodes to itself.
  std::size_t codes = 0;
  for (unsigned n = 0; n < 20000; ++n) {
    try {
      const Formula phi = godel_decode(GodelCode{n});
      CHECK(godel_encode(phi).value == n);
      ++codes;
    } catch (const NotACodeError&) {
    }
  }
  CHECK(codes > 0);
}

TEST_CASE("godel round trip on generated formulas") {
  std::mt19937 rng(13);
  oracle::RandomFormulaConfig cfg;
  cfg.relations = {"lt", "S"};
  cfg.constants = {"one"};
  cfg.f_arity = 1;
  for (int i = 0; i < 1000; ++i) {
    const Formula phi = oracle::random_formula(rng, cfg, {"x", "x'", "long_name-2"}, 4);
    CHECK(godel_decode(godel_encode(phi)) == phi);
  }
  const Formula lit = parse_formula("(and (in #12 x) (= #0 #99999))");
  CHECK(godel_decode(godel_encode(lit)) == lit);
}

TEST_CASE("godel sweep: round trip and injectivity up to size 7") {
  oracle::Vocabulary v;
  v.atoms = oracle::membership_atoms({"x", "y"});
  v.quantified = {"y"};
  std::vector<BigNat> codes;
  for (std::size_t s = 1; s <= 7; ++s) {
    oracle::enumerate_formulas(v, s, [&](const Formula& phi) {
      const GodelCode c = godel_encode(phi);
      if (!(godel_decode(c) == phi)) FAIL_CHECK("round trip failed: " << print_formula(phi));
      codes.push_back(c.value);
    });
  }
  std::sort(codes.begin(), codes.end());
  CHECK(std::adjacent_find(codes.begin(), codes.end()) == codes.end());
}

TEST_CASE("inf_rank") {
  const InfFormula a = InfFormula::atom(parse_formula("(in x y)"));
  CHECK(inf_rank(a) == 0);
  CHECK(inf_rank(InfFormula::disj({a, a, InfFormula::atom(parse_formula("(= x y)"))})) == 1);
  CHECK(InfFormula::conj({}).kind() == InfKind::kVerum);
  CHECK(InfFormula::disj({}).kind() == InfKind::kFalsum);
  CHECK(inf_rank(InfFormula::falsum()) == 0);
  const InfFormula q = InfFormula::exists("y", InfFormula::negation(a));
  CHECK(inf_rank(q) == 2);
  CHECK(q.free_vars() == std::vector<std::string>{"x"});
  CHECK(inf_rank(to_inf(parse_formula("(implies (in x y) (= x y))"))) == 2);
  CHECK_THROWS_AS(to_inf(parse_formula("(f x)")), WrongEvaluatorError);
}

TEST_CASE("inf rank equals the recursive height at every node") {
  std::mt19937 rng(17);
  oracle::RandomFormulaConfig cfg;
  std::function<std::size_t(const InfFormula&)> height = [&](const InfFormula& psi) {
    std::size_t h = 0;
    bool leaf = true;
    for (const auto& c : psi.children()) {
      leaf = false;
      h = std::max(h, height(c));
    }
    const std::size_t expected = leaf && (psi.kind() == InfKind::kAtom ||
                                          psi.kind() == InfKind::kFalsum ||
                                          psi.kind() == InfKind::kVerum)
                                     ? 0
                                     : h + 1;
    CHECK(psi.rank() == expected);
    return expected;
  };
  for (int i = 0; i < 300; ++i) {
    height(to_inf(oracle::random_formula(rng, cfg, {"x"}, 5)));
  }
}

TEST_CASE("print_inf shares repeated subtrees") {
  const InfFormula a = InfFormula::conj({InfFormula::atom(parse_formula("(in x y)")),
                                         InfFormula::atom(parse_formula("(= x y)"))});
  const InfFormula top = InfFormula::disj({a, InfFormula::negation(a)});
  CHECK(top.dag_size() == 5);
  const std::string text = print_inf(top);
  CHECK(text.find("@0 :=") != std::string::npos);
  CHECK(std::count(text.begin(), text.end(), '@') == 3);
}
