#include "asrlogic/asr_eval.hpp"

#include <algorithm>
#include <set>

#include "asrlogic/error.hpp"

namespace asrlogic {

namespace {

void require_accepted(const AsrDocument& d) {
  ValidationReport report = validate_asr(d);
  if (!report.accepted) {
    std::string what = "document rejected:";
    for (const std::string& v : report.violations) what += " " + v + ";";
    throw ValidationError(what);
  }
}

}  // namespace

std::vector<Pair> materialize_relation(const Structure& m,
                                       const RelationSpec& spec) {
  CompiledFormula body(m, spec.body, {spec.lower, spec.upper});
  std::vector<Pair> pairs;
  for (Elem a = 0; a < m.size(); ++a) {
    for (Elem b = 0; b < m.size(); ++b) {
      const Elem values[2] = {a, b};
      if (body.eval(values)) pairs.emplace_back(a, b);
    }
  }
  return pairs;
}

bool eval_asr(const Structure& m, const AsrDocument& d, Elem x,
              const AsrOptions& options) {
  require_accepted(d);
  if (d.k() != 1) {
    throw ValidationError("eval_asr takes single-relation documents");
  }
  if (x >= m.size()) throw ValidationError("parameter outside the domain");
  const WfAnalysis wf =
      well_founded_part(m.size(), materialize_relation(m, d.wf[0]));
  const CompiledFormula phi(m, d.phi, {d.params[0]});
  std::vector<std::optional<bool>> memo(m.size());

  // Recursion depth is bounded by the rank of x in the well-founded part.
  std::function<bool(Elem)> value = [&](Elem at) -> bool {
    if (options.memoize && memo[at]) return *memo[at];
    FCallback f = [&](std::span<const Elem> args) {
      return wf.wf_related(args[0], at) && value(args[0]);
    };
    const Elem values[1] = {at};
    bool result = phi.eval(values, &f);
    if (options.memoize) memo[at] = result;
    return result;
  };
  return value(x);
}

struct AsrSession::Impl {
  const Structure& m;
  const AsrDocument& d;
  AsrOptions options;
  std::size_t k;
  CompiledFormula phi;
  std::vector<CompiledFormula> bodies;
  std::map<Tuple, bool> memo;
  std::set<Tuple> in_progress;
  std::map<std::pair<std::size_t, Tuple>, WfAnalysis> relations;
  std::set<std::pair<std::size_t, Tuple>> relations_in_progress;

  Impl(const Structure& m_, const AsrDocument& d_, const AsrOptions& o)
      : m(m_), d(d_), options(o), k(d_.k()), phi(m_, d_.phi, d_.params) {
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<std::string> order{d.wf[i].lower, d.wf[i].upper};
      for (std::size_t j = i + 1; j < k; ++j) order.push_back(d.params[j]);
      bodies.emplace_back(m, d.wf[i].body, std::move(order));
    }
  }

  // `context` holds all k coordinates; for calls from relation spec `from`,
  // only coordinates above `from` are meaningful.
  bool call(std::span<const Elem> context, int from, std::span<const Elem> args) {
    int top = -1;
    for (int i = static_cast<int>(k) - 1; i >= 0; --i) {
      if (args[i] != context[i]) {
        top = i;
        break;
      }
    }
    if (top < 0 || top <= from) return false;
    std::span<const Elem> key = context.subspan(top + 1);
    if (!relation(static_cast<std::size_t>(top), key)
             .wf_related(args[top], context[top])) {
      return false;
    }
    return value(args);
  }

  bool value(std::span<const Elem> xs) {
    Tuple key(xs.begin(), xs.end());
    if (options.memoize) {
      auto it = memo.find(key);
      if (it != memo.end()) return it->second;
    }
    if (!in_progress.insert(key).second) {
      throw std::logic_error("almost self-referential recursion revisited a tuple");
    }
    FCallback f = [&](std::span<const Elem> args) {
      return call(key, -1, args);
    };
    bool result = phi.eval(key, &f);
    in_progress.erase(key);
    if (options.memoize) memo.emplace(std::move(key), result);
    return result;
  }

  const WfAnalysis& relation(std::size_t index, std::span<const Elem> key) {
    auto id = std::make_pair(index, Tuple(key.begin(), key.end()));
    auto it = relations.find(id);
    if (it != relations.end()) return it->second;
    if (!relations_in_progress.insert(id).second) {
      throw std::logic_error("relation materialization revisited its key");
    }
    // Placeholder lower coordinates: the guard for calls from this spec
    // only compares coordinates above `index`.
    Tuple context(k, 0);
    std::copy(key.begin(), key.end(), context.begin() + index + 1);
    const CompiledFormula& body = bodies[index];
    std::vector<Pair> pairs;
    std::vector<Elem> values(2 + key.size());
    std::copy(key.begin(), key.end(), values.begin() + 2);
    for (Elem a = 0; a < m.size(); ++a) {
      for (Elem b = 0; b < m.size(); ++b) {
        values[0] = a;
        values[1] = b;
        context[index] = b;
        FCallback f = [&](std::span<const Elem> args) {
          return call(context, static_cast<int>(index), args);
        };
        if (body.eval(values, &f)) pairs.emplace_back(a, b);
      }
    }
    relations_in_progress.erase(id);
    return relations.emplace(std::move(id), well_founded_part(m.size(), std::move(pairs)))
        .first->second;
  }
};

AsrSession::AsrSession(const Structure& m, const AsrDocument& d,
                       const AsrOptions& options) {
  require_accepted(d);
  impl_ = std::make_unique<Impl>(m, d, options);
}

AsrSession::~AsrSession() = default;

bool AsrSession::eval(std::span<const Elem> xs) {
  if (xs.size() != impl_->k) {
    throw ArityError("expected " + std::to_string(impl_->k) +
                     " parameter value(s), got " + std::to_string(xs.size()));
  }
  for (Elem e : xs) {
    if (e >= impl_->m.size()) throw ValidationError("parameter outside the domain");
  }
  return impl_->value(xs);
}

const WfAnalysis& AsrSession::relation(std::size_t index,
                                       std::span<const Elem> key) {
  if (index >= impl_->k || key.size() != impl_->k - 1 - index) {
    throw ArityError("relation key has the wrong length");
  }
  return impl_->relation(index, key);
}

std::size_t AsrSession::memo_size() const { return impl_->memo.size(); }

bool eval_asr_multi(const Structure& m, const AsrDocument& d,
                    std::span<const Elem> xs, const AsrOptions& options) {
  AsrSession session(m, d, options);
  return session.eval(xs);
}

std::vector<RelationHeight> relation_height(const AsrDocument& d,
                                            const Structure& m) {
  AsrSession session(m, d);
  std::vector<RelationHeight> out;
  const std::size_t k = d.k();
  for (std::size_t i = 0; i < k; ++i) {
    RelationHeight rh;
    rh.index = i;
    const std::size_t width = k - 1 - i;
    Tuple key(width, 0);
    while (width == 0 || m.size() > 0) {
      std::size_t h = session.relation(i, key).height;
      rh.entries.push_back({key, h});
      rh.max_height = std::max(rh.max_height, h);
      std::size_t pos = 0;
      while (pos < width && ++key[pos] == m.size()) key[pos++] = 0;
      if (pos == width) break;
    }
    out.push_back(std::move(rh));
  }
  return out;
}

}  // namespace asrlogic
