#include <doctest.h>

#include <filesystem>

#include "asrlogic/asr_eval.hpp"
#include "asrlogic/error.hpp"
#include "asrlogic/fo_eval.hpp"
#include "asrlogic/parser.hpp"
#include "asrlogic/wf.hpp"
#include "oracles.hpp"

using namespace asrlogic;

namespace {

AsrDocument doc(const std::string& name) {
  return parse_document(read_file(oracle::fixture(name + ".sexp")));
}

std::vector<std::string> fixture_docs() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(ASRLOGIC_FIXTURES)) {
    const std::string stem = e.path().stem().string();
    if (e.path().extension() == ".sexp" &&
        (stem.rfind("nat_", 0) == 0 || stem.rfind("v_", 0) == 0)) {
      out.push_back(stem);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Structure structure_for(const std::string& stem, std::size_t nat_size = 16) {
  return stem.rfind("nat_", 0) == 0 ? nat_segment(nat_size) : v_level(3);
}

std::vector<bool> census(const Structure& m, const AsrDocument& d,
                         const AsrOptions& options = {}) {
  std::vector<bool> out;
  for (Elem x = 0; x < m.size(); ++x) out.push_back(eval_asr(m, d, x, options));
  return out;
}

Relation unary(const Structure& m, const std::vector<bool>& truth) {
  std::vector<Tuple> tuples;
  for (Elem x = 0; x < m.size(); ++x) {
    if (truth[x]) tuples.push_back({x});
  }
  return Relation(1, m.size(), tuples);
}

AsrDocument random_document(std::mt19937& rng, bool nat) {
  static const std::vector<std::string> specs_nat = {
      "(rel lt u v)", "(rel half v u)", "(= u v)", "(not (= u v))",
      "(rel lt v u)", "(and (rel lt u v) (rel even v))"};
  static const std::vector<std::string> specs_v = {
      "(in u v)", "(in v u)", "(= u v)", "(not (= u v))",
      "(exists w (and (in u w) (in w v)))"};
  oracle::RandomFormulaConfig cfg;
  cfg.f_arity = 1;
  if (nat) {
    cfg.membership = false;
    cfg.relations = {"lt", "half"};
    cfg.constants = {"zero", "one"};
  }
  std::string body;
  const auto& pool = nat ? specs_nat : specs_v;
  if (rng() % 3 == 0) {
    oracle::RandomFormulaConfig wcfg = cfg;
    wcfg.f_arity = 0;
    body = print_formula(oracle::random_formula(rng, wcfg, {"u", "v"}, 2));
  } else {
    body = pool[rng() % pool.size()];
  }
  const Formula phi = oracle::random_formula(rng, cfg, {"x"}, 4);
  return parse_document("(asr " + std::string(nat ? "(consts zero one) " : "") +
                        "(params x) (phi " + print_formula(phi) + ") (wf (u v) " +
                        body + "))");
}

}  // namespace

TEST_CASE("well-founded part examples") {
  std::vector<Pair> lt;
  for (Elem a = 0; a < 6; ++a) {
    for (Elem b = a + 1; b < 6; ++b) lt.emplace_back(a, b);
  }
  const WfAnalysis chain = well_founded_part(6, lt);
  for (Elem u = 0; u < 6; ++u) CHECK(chain.elem_rank[u] == std::optional<std::size_t>(u));
  CHECK(chain.height == 6);

  const WfAnalysis looped = well_founded_part(3, {{0, 1}, {1, 0}, {1, 2}});
  CHECK(looped.wf_elements.empty());
  CHECK(looped.wf_pairs.empty());
  CHECK(looped.height == 0);

  const WfAnalysis mixed = well_founded_part(5, {{0, 1}, {1, 2}, {2, 0}, {3, 4}});
  CHECK(mixed.wf_elements == std::vector<Elem>{3, 4});
  CHECK(mixed.wf_pairs == std::vector<Pair>{{3, 4}});
  CHECK(mixed.height == 2);
  CHECK(mixed.wf_related(3, 4));
  CHECK_FALSE(mixed.wf_related(2, 0));

  const WfAnalysis none = well_founded_part(4, {});
  CHECK(none.wf_elements.size() == 4);
  CHECK(none.height == 0);
}

TEST_CASE("well-founded part agrees with DFS and chain ranks") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + trial % 9;
    const auto pairs = oracle::random_relation(rng, n, trial % 2 ? 0.15 : 0.4);
    const WfAnalysis w = well_founded_part(n, pairs);
    const auto want = oracle::dfs_wf(n, pairs);
    const auto ranks = oracle::chain_ranks(n, pairs);
    for (Elem e = 0; e < n; ++e) {
      CHECK(w.is_wf(e) == want[e]);
      if (want[e]) CHECK(w.elem_rank[e] == ranks[e]);
    }
    for (const auto& [a, b] : w.wf_pairs) {
      CHECK(want[a]);
      CHECK(want[b]);
    }
  }
}

TEST_CASE("powers of two") {
  const AsrDocument pow2 = doc("nat_pow2");
  const Structure nat16 = nat_segment(16);
  CHECK(eval_asr(nat16, pow2, 8));
  CHECK_FALSE(eval_asr(nat16, pow2, 0));
  const Structure nat64 = nat_segment(64);
  const auto got = census(nat64, pow2);
  for (Elem x = 0; x < 64; ++x) CHECK(got[x] == oracle::is_power_of_two(x));
  CHECK(census(nat64, doc("nat_pow2_half")) == got);
}

TEST_CASE("eval_asr agrees with direct recursion on every fixture") {
  for (const std::string& stem : fixture_docs()) {
    CAPTURE(stem);
    const AsrDocument d = doc(stem);
    const Structure m = structure_for(stem, 12);
    for (Elem x = 0; x < m.size(); ++x) {
      CHECK(eval_asr(m, d, x) == oracle::naive_asr(m, d, x));
    }
  }
}

TEST_CASE("the k-relation evaluator collapses to eval_asr at k = 1") {
  for (const std::string& stem : fixture_docs()) {
    CAPTURE(stem);
    const AsrDocument d = doc(stem);
    const Structure m = structure_for(stem);
    for (Elem x = 0; x < m.size(); ++x) {
      const Elem xs[] = {x};
      CHECK(eval_asr_multi(m, d, xs) == eval_asr(m, d, x));
    }
  }
}

TEST_CASE("countdown") {
  const AsrDocument d = doc("multi_countdown");
  const Structure nat = nat_segment(8);
  AsrSession session(nat, d);
  for (Elem a = 0; a <= 8; ++a) {
    for (Elem b = 0; b <= 8; ++b) {
      const Elem xs[] = {a, b};
      CHECK(session.eval(xs) == oracle::countdown(a, b));
      CHECK(oracle::naive_asr_multi(nat, d, {a, b}) == oracle::countdown(a, b));
    }
  }
}

TEST_CASE("the lexicographic guard") {
  const Structure nat = nat_segment(5);
  SUBCASE("raising a higher coordinate is false") {
    const AsrDocument d = parse_document(R"((asr (consts zero) (params x1 x2)
      (phi (or (= x1 zero) (exists y (and (rel lt x2 y) (f x1 y)))))
      (wf (u v) (rel lt u v)) (wf (u v) (rel lt u v))))");
    for (Elem a = 0; a <= 5; ++a) {
      for (Elem b = 0; b <= 5; ++b) {
        const Elem xs[] = {a, b};
        CHECK(eval_asr_multi(nat, d, xs) == (a == 0));
      }
    }
  }
  SUBCASE("a lower coordinate may grow when a higher one drops") {
    const AsrDocument d = parse_document(R"((asr (consts zero) (params x1 x2)
      (phi (or (= x2 zero) (exists y (and (rel lt y x2) (f x2 y)))))
      (wf (u v) (rel lt u v)) (wf (u v) (rel lt u v))))");
    for (Elem a = 0; a <= 5; ++a) {
      for (Elem b = 0; b <= 5; ++b) {
        const Elem xs[] = {a, b};
        CHECK(eval_asr_multi(nat, d, xs));
      }
    }
  }
  SUBCASE("an empty relation blocks every call") {
    const AsrDocument d = parse_document(R"((asr (consts zero) (params x1 x2)
      (phi (or (= x2 zero) (exists y (and (rel lt y x2) (f x1 y)))))
      (wf (u v) (rel lt u v)) (wf (u v) (not (= u u)))))");
    for (Elem a = 0; a <= 5; ++a) {
      for (Elem b = 0; b <= 5; ++b) {
        const Elem xs[] = {a, b};
        CHECK(eval_asr_multi(nat, d, xs) == (b == 0));
      }
    }
  }
  SUBCASE("a relation spec calling at its own coordinate") {
    // From inside relation 0 the call differs only at coordinate 0, so it is
    // false and relation 0 stays lt.
    const AsrDocument d = parse_document(R"((asr (consts zero) (params x1 x2)
      (phi (= x1 x1))
      (wf (u v) (or (rel lt u v) (f u x2)))
      (wf (u v) (rel lt u v))))");
    AsrSession session(nat, d);
    for (Elem b = 0; b <= 5; ++b) {
      const Elem key[] = {b};
      const WfAnalysis& r = session.relation(0, key);
      CHECK(r.wf_elements.size() == 6);
      CHECK(r.height == 6);
    }
  }
  SUBCASE("a relation spec calling below a higher coordinate") {
    // Relation 0 at x2 is u < v or f(u, y) for some y < x2, and the formula
    // proper holds at (u, y) iff u = y.
    const AsrDocument d = parse_document(R"((asr (params x1 x2)
      (phi (= x1 x2))
      (wf (u v) (or (rel lt u v) (exists y (and (rel lt y x2) (f u y)))))
      (wf (u v) (rel lt u v))))");
    AsrSession session(nat, d);
    for (Elem b = 0; b <= 5; ++b) {
      std::vector<Pair> want;
      for (Elem u = 0; u <= 5; ++u) {
        for (Elem v = 0; v <= 5; ++v) {
          if (u < v || u < b) want.emplace_back(u, v);
        }
      }
      const Elem key[] = {b};
      const WfAnalysis& r = session.relation(0, key);
      CHECK(r.relation == want);
      const auto wf = oracle::dfs_wf(6, want);
      for (Elem e = 0; e <= 5; ++e) CHECK(r.is_wf(e) == wf[e]);
    }
  }
}

TEST_CASE("document validation at evaluation time") {
  const Structure nat = nat_segment(4);
  const AsrDocument two = doc("multi_countdown");
  CHECK_THROWS_AS(eval_asr(nat, two, 0), ValidationError);
  const Elem short_tuple[] = {1};
  CHECK_THROWS_AS(eval_asr_multi(nat, two, short_tuple), ArityError);
  CHECK_THROWS_AS(eval_asr(nat, doc("nat_pow2"), 7), ValidationError);
  CHECK_THROWS_AS(eval_asr(v_level(3), doc("nat_pow2"), 0), VocabularyError);
}

TEST_CASE("relation heights") {
  const auto pow2 = relation_height(doc("nat_pow2"), nat_segment(16));
  REQUIRE(pow2.size() == 1);
  CHECK(pow2[0].max_height == 17);
  CHECK(relation_height(doc("nat_empty_rel"), nat_segment(16))[0].max_height == 0);
  CHECK(relation_height(doc("nat_cyclic"), nat_segment(8))[0].max_height == 0);

  const auto multi = relation_height(doc("multi_countdown"), nat_segment(3));
  REQUIRE(multi.size() == 2);
  CHECK(multi[0].entries.size() == 4);
  CHECK(multi[0].max_height == 4);
  CHECK(multi[1].entries.size() == 1);

  for (const std::string& stem : fixture_docs()) {
    if (stem.rfind("nat_", 0) != 0) continue;
    CAPTURE(stem);
    const AsrDocument d = doc(stem);
    CHECK(relation_height(d, nat_segment(8))[0].max_height <=
          relation_height(d, nat_segment(16))[0].max_height);
  }
}

TEST_CASE("random documents terminate and match the oracle") {
  std::mt19937 rng(43);
  const Structure nat = nat_segment(6);
  const Structure v3 = v_level(3);
  for (int trial = 0; trial < 300; ++trial) {
    const bool use_nat = trial % 2 == 0;
    const Structure& m = use_nat ? nat : v3;
    const AsrDocument d = random_document(rng, use_nat);
    CAPTURE(print_document(d));
    const auto memo = census(m, d);
    CHECK(census(m, d, AsrOptions{false}) == memo);
    for (Elem x = 0; x < m.size(); ++x) CHECK(memo[x] == oracle::naive_asr(m, d, x));
  }
}

TEST_CASE("outside the well-founded part f reads as false") {
  std::mt19937 rng(47);
  const Structure nat = nat_segment(6);
  const Structure v3 = v_level(3);
  for (int trial = 0; trial < 200; ++trial) {
    const bool use_nat = trial % 2 == 0;
    const Structure& m = use_nat ? nat : v3;
    const AsrDocument d = random_document(rng, use_nat);
    const WfAnalysis w = well_founded_part(m.size(), materialize_relation(m, d.wf[0]));
    const CompiledFormula c(m, d.phi, d.params);
    const FCallback never = [](std::span<const Elem>) { return false; };
    for (Elem x = 0; x < m.size(); ++x) {
      if (w.is_wf(x)) continue;
      const Elem v[] = {x};
      CHECK(eval_asr(m, d, x) == c.eval(v, &never));
    }
  }
}

TEST_CASE("memoization is transparent for several relations") {
  const AsrDocument d = doc("multi_countdown");
  const Structure nat = nat_segment(6);
  AsrSession with(nat, d);
  AsrSession without(nat, d, AsrOptions{false});
  for (Elem a = 0; a <= 6; ++a) {
    for (Elem b = 0; b <= 6; ++b) {
      const Elem xs[] = {a, b};
      CHECK(with.eval(xs) == without.eval(xs));
    }
  }
  CHECK(with.memo_size() > 0);
  CHECK(without.memo_size() == 0);
}

TEST_CASE("nested documents collapse to a single level") {
  // The inner census becomes a relation of an expanded structure; the outer
  // document over it must agree with a hand-built single-level document.
  struct Case {
    std::string inner;
    std::string rel;
    std::string outer;
    std::string flat;
  };
  const std::vector<Case> nat_cases = {
      {"nat_pow2", "pow2",
       "(asr (consts one) (params x) (phi (and (rel pow2 x) (not (= x one)))) "
       "(wf (u v) (rel lt u v)))",
       "(asr (consts one) (params x) (phi (and (rel even x) (exists y (and (rel half x y) "
       "(or (= y one) (f y)))))) (wf (u v) (rel lt u v)))"},
      {"nat_pow2", "pow2",
       "(asr (consts one) (params x) (phi (or (= x one) (exists y (exists z (and (rel half x y) "
       "(rel half y z) (rel pow2 z) (f z)))))) (wf (u v) (rel lt u v)))",
       ""},
      {"nat_pow2", "pow2",
       "(asr (params x) (phi (or (and (rel pow2 x) (rel even x)) (exists y (and (rel lt y x) "
       "(f y))))) (wf (u v) (rel lt u v)))",
       "(asr (consts one) (params x) (phi (exists y (and (rel half y one) (or (= x y) "
       "(rel lt y x))))) (wf (u v) (rel lt u v)))"},
      {"nat_even_rec", "evenr",
       "(asr (consts zero) (params x) (phi (or (= x zero) (exists y (and (rel evenr x) "
       "(rel half x y) (f y))))) (wf (u v) (rel lt u v)))",
       "(asr (consts zero) (params x) (phi (= x zero)) (wf (u v) (rel lt u v)))"},
  };
  for (std::size_t size : {16, 64}) {
    const Structure nat = nat_segment(size);
    for (const Case& c : nat_cases) {
      CAPTURE(c.outer);
      const Structure expanded =
          nat.with_relation(c.rel, unary(nat, census(nat, doc(c.inner))));
      const AsrDocument flat = c.flat.empty() ? doc("nat_pow4") : parse_document(c.flat);
      CHECK(census(expanded, parse_document(c.outer)) == census(nat, flat));
    }
  }
  for (std::size_t level : {2, 3}) {
    const Structure v = v_level(level);
    const Structure expanded =
        v.with_relation("ord", unary(v, census(v, doc("v_ordinal"))));
    const AsrDocument outer = parse_document(
        "(asr (params x) (phi (and (forall y (implies (in y x) (rel ord y))) "
        "(forall y (forall z (implies (and (in z y) (in y x)) (in z x)))))) "
        "(wf (u v) (in u v)))");
    CHECK(census(expanded, outer) == census(v, doc("v_ordinal")));
  }
}
