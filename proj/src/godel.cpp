#include "asrlogic/godel.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <string_view>

#include "asrlogic/error.hpp"

namespace asrlogic {

namespace {

constexpr std::string_view kAlphabet =
    "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_0123456789-'";

constexpr unsigned kTagIn = 0;
constexpr unsigned kTagEq = 1;
constexpr unsigned kTagRel = 2;
constexpr unsigned kTagF = 3;
constexpr unsigned kTagNot = 4;
constexpr unsigned kTagAnd = 5;
constexpr unsigned kTagOr = 6;
constexpr unsigned kTagImplies = 7;
constexpr unsigned kTagExists = 8;
constexpr unsigned kTagForall = 9;
constexpr unsigned kTagCount = 10;

constexpr unsigned kTermVar = 0;
constexpr unsigned kTermConst = 1;
constexpr unsigned kTermElem = 2;
constexpr unsigned kTermCount = 3;

// Decoding recursion is bounded by the bit length of the code, but a cap
// keeps pathological inputs from exhausting the stack.
constexpr int kMaxDepth = 4096;

[[noreturn]] void not_a_code(const std::string& why) {
  throw NotACodeError("not a formula code: " + why);
}

BigNat encode_name(const std::string& name) {
  BigNat out = 0;
  const BigNat base = kAlphabet.size();
  for (char c : name) {
    auto pos = kAlphabet.find(c);
    if (pos == std::string_view::npos) {
      throw ValidationError("identifier '" + name +
                            "' has a character outside the code alphabet");
    }
    out = out * base + (pos + 1);
  }
  return out;
}

std::string decode_name(BigNat code) {
  if (code == 0) not_a_code("empty identifier");
  const BigNat base = kAlphabet.size();
  std::string out;
  while (code > 0) {
    code -= 1;
    BigNat digit = code % base;
    out.push_back(kAlphabet[digit.convert_to<std::size_t>()]);
    code /= base;
  }
  std::reverse(out.begin(), out.end());
  char first = out.front();
  if (!(std::isalpha(static_cast<unsigned char>(first)) != 0 || first == '_')) {
    not_a_code("identifier must start with a letter or '_'");
  }
  return out;
}

BigNat encode_term(const Term& t) {
  switch (t.kind) {
    case Term::Kind::kVar: return kTermVar + kTermCount * encode_name(t.name);
    case Term::Kind::kConst: return kTermConst + kTermCount * encode_name(t.name);
    case Term::Kind::kElem: return kTermElem + kTermCount * BigNat(t.elem);
  }
  return 0;
}

Term decode_term(const BigNat& code) {
  const BigNat payload = code / kTermCount;
  switch (BigNat(code % kTermCount).convert_to<unsigned>()) {
    case kTermVar: return Term::var(decode_name(payload));
    case kTermConst: return Term::constant(decode_name(payload));
    default:
      if (payload > BigNat(std::numeric_limits<std::uint64_t>::max())) {
        not_a_code("element literal too large");
      }
      return Term::element(payload.convert_to<std::uint64_t>());
  }
}

template <class T, class F>
BigNat encode_list(const std::vector<T>& items, F&& encode_item) {
  BigNat out = 0;
  for (auto it = items.rbegin(); it != items.rend(); ++it) {
    out = 1 + cantor_pair(encode_item(*it), out);
  }
  return out;
}

template <class T, class F>
std::vector<T> decode_list(BigNat code, F&& decode_item) {
  std::vector<T> out;
  while (code != 0) {
    auto [head, tail] = cantor_unpair(code - 1);
    out.push_back(decode_item(head));
    code = std::move(tail);
  }
  return out;
}

BigNat encode_formula(const Formula& phi) {
  auto term = [](const Term& t) { return encode_term(t); };
  auto sub = [](const Formula& f) { return encode_formula(f); };
  BigNat payload;
  unsigned tag = kTagIn;
  switch (phi.kind) {
    case FormulaKind::kIn:
    case FormulaKind::kEq:
      tag = phi.kind == FormulaKind::kIn ? kTagIn : kTagEq;
      payload = cantor_pair(encode_term(phi.args[0]), encode_term(phi.args[1]));
      break;
    case FormulaKind::kRel:
      tag = kTagRel;
      payload = cantor_pair(encode_name(phi.rel), encode_list(phi.args, term));
      break;
    case FormulaKind::kF:
      tag = kTagF;
      payload = encode_list(phi.args, term);
      break;
    case FormulaKind::kNot:
      tag = kTagNot;
      payload = encode_formula(phi.children[0]);
      break;
    case FormulaKind::kAnd:
    case FormulaKind::kOr:
      tag = phi.kind == FormulaKind::kAnd ? kTagAnd : kTagOr;
      payload = encode_list(phi.children, sub);
      break;
    case FormulaKind::kImplies:
      tag = kTagImplies;
      payload = cantor_pair(encode_formula(phi.children[0]),
                            encode_formula(phi.children[1]));
      break;
    case FormulaKind::kExists:
    case FormulaKind::kForall:
      tag = phi.kind == FormulaKind::kExists ? kTagExists : kTagForall;
      payload = cantor_pair(encode_name(phi.var), encode_formula(phi.children[0]));
      break;
  }
  return 1 + tag + kTagCount * payload;
}

Formula decode_formula(const BigNat& code, int depth) {
  if (code == 0) not_a_code("0 is not in the image");
  if (depth > kMaxDepth) not_a_code("nesting too deep");
  const BigNat payload = (code - 1) / kTagCount;
  const unsigned tag = BigNat((code - 1) % kTagCount).convert_to<unsigned>();
  auto sub = [depth](const BigNat& c) { return decode_formula(c, depth + 1); };
  auto term = [](const BigNat& c) { return decode_term(c); };
  switch (tag) {
    case kTagIn:
    case kTagEq: {
      auto [a, b] = cantor_unpair(payload);
      Term ta = decode_term(a), tb = decode_term(b);
      return tag == kTagIn ? Formula::in(ta, tb) : Formula::eq(ta, tb);
    }
    case kTagRel: {
      auto [name, args] = cantor_unpair(payload);
      return Formula::relation(decode_name(name), decode_list<Term>(args, term));
    }
    case kTagF:
      return Formula::f(decode_list<Term>(payload, term));
    case kTagNot:
      return Formula::negation(sub(payload));
    case kTagAnd:
      return Formula::conj(decode_list<Formula>(payload, sub));
    case kTagOr:
      return Formula::disj(decode_list<Formula>(payload, sub));
    case kTagImplies: {
      auto [a, b] = cantor_unpair(payload);
      return Formula::implies(sub(a), sub(b));
    }
    default: {
      auto [name, body] = cantor_unpair(payload);
      std::string v = decode_name(name);
      return tag == kTagExists ? Formula::exists(v, sub(body))
                                   : Formula::forall(v, sub(body));
    }
  }
}

}  // namespace

GodelCode GodelCode::from_string(const std::string& digits) {
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    throw NotACodeError("'" + digits + "' is not a nonnegative integer");
  }
  return GodelCode{BigNat(digits)};
}

BigNat cantor_pair(const BigNat& a, const BigNat& b) {
  BigNat s = a + b;
  return s * (s + 1) / 2 + b;
}

std::pair<BigNat, BigNat> cantor_unpair(const BigNat& z) {
  const BigNat disc = 8 * z + 1;
  BigNat w = (boost::multiprecision::sqrt(disc) - 1) / 2;
  BigNat t = w * (w + 1) / 2;
  BigNat b = z - t;
  return {w - b, b};
}

GodelCode godel_encode(const Formula& phi) {
  return GodelCode{encode_formula(phi)};
}

Formula godel_decode(const GodelCode& code) {
  return decode_formula(code.value, 0);
}

}  // namespace asrlogic
