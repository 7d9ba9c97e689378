#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <sstream>

#include "asrlogic/asr_eval.hpp"
#include "asrlogic/caps.hpp"
#include "asrlogic/definability.hpp"
#include "asrlogic/error.hpp"
#include "asrlogic/infinitary.hpp"
#include "asrlogic/l_hierarchy.hpp"
#include "asrlogic/parser.hpp"
#include "asrlogic/reflection.hpp"
#include "asrlogic/report.hpp"
#include "asrlogic/structure.hpp"
#include "asrlogic/wf.hpp"

namespace asrlogic::cli {

using nlohmann::json;

namespace {

struct Options {
  std::string structure;
  std::string doc;
  std::string formula;
  std::string relation;
  std::string base;
  std::string out;
  std::string param;
  std::vector<std::string> params;
  std::vector<std::string> codes;
  std::vector<std::size_t> levels;
  std::size_t budget = 8;
  std::size_t alpha = 0;
  std::size_t top = 0;
  bool pretty = false;
};

// An element literal: a domain index or a constant name.
Elem parse_elem(const Structure& m, const std::string& token) {
  std::size_t value = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (!token.empty() && ec == std::errc() && ptr == end) {
    if (value >= m.size()) {
      throw ValidationError("element " + token + " is outside the domain of " +
                            m.name() + " (size " + std::to_string(m.size()) + ")");
    }
    return value;
  }
  if (auto c = m.find_constant(token)) return *c;
  throw ValidationError("'" + token + "' is neither an element index nor a constant of " +
                        m.name());
}

std::vector<Elem> parse_elems(const Structure& m, const std::vector<std::string>& tokens) {
  std::vector<Elem> out;
  for (const auto& t : tokens) out.push_back(parse_elem(m, t));
  return out;
}

AsrDocument load_document(const std::string& path) {
  return parse_document(read_file(path));
}

Formula load_formula(const std::string& path) { return parse_formula(read_file(path)); }

void deliver(const json& j, const Options& o, const std::string& pretty_text,
             std::ostream& out) {
  if (!o.out.empty()) emit_report(j, o.out);
  if (o.pretty) {
    out << pretty_text;
  } else if (o.out.empty()) {
    out << dump_report(j);
  }
}

int cmd_eval(const Options& o, const Caps& caps, std::ostream& out, bool multi) {
  const Structure m = load_structure(o.structure, caps);
  const AsrDocument d = load_document(o.doc);
  std::vector<Elem> xs;
  bool value = false;
  if (multi) {
    xs = parse_elems(m, o.params);
    value = eval_asr_multi(m, d, xs);
  } else {
    xs = {parse_elem(m, o.param)};
    value = eval_asr(m, d, xs[0]);
  }
  if (!o.out.empty()) {
    emit_report({{"structure", m.name()}, {"params", xs}, {"value", value}}, o.out);
  }
  out << (value ? "true" : "false") << "\n";
  return 0;
}

int cmd_unfold(const Options& o, const Caps& caps, std::ostream& out) {
  const Structure m = load_structure(o.structure, caps);
  const AsrDocument d = load_document(o.doc);
  const Elem x = parse_elem(m, o.param);
  const InfFormula psi = unfold_asr(m, d, x);
  const bool value = eval_inf(m, psi, {{d.params.at(0), x}});
  const std::string text = print_inf(psi);
  json j = {{"structure", m.name()},
            {"param", x},
            {"rank", psi.rank()},
            {"dag_size", psi.dag_size()},
            {"rank_constant", unfold_rank_constant(d)},
            {"value", value},
            {"formula", text}};
  deliver(j, o, text, out);
  return 0;
}

std::string pretty_wf(const Structure& m, const WfAnalysis& wf) {
  std::ostringstream s;
  s << "element  rank\n";
  for (Elem e = 0; e < wf.domain_size; ++e) {
    s << m.label(e) << "  ";
    if (wf.elem_rank[e]) {
      s << *wf.elem_rank[e];
    } else {
      s << "-";
    }
    s << "\n";
  }
  s << "height " << wf.height << "\n";
  return s.str();
}

int cmd_wfpart(const Options& o, const Caps& caps, std::ostream& out) {
  const Structure m = load_structure(o.structure, caps);
  if (!o.relation.empty()) {
    const Relation* r = m.find_relation(o.relation);
    if (r == nullptr) throw VocabularyError("unknown relation '" + o.relation + "'");
    if (r->arity() != 2) throw ArityError("relation '" + o.relation + "' is not binary");
    std::vector<Pair> pairs;
    for (const Tuple& t : r->tuples()) pairs.emplace_back(t[0], t[1]);
    const WfAnalysis wf = well_founded_part(m.size(), pairs);
    json j = {{"structure", m.name()}, {"relation", o.relation}, {"analysis", to_json(wf)}};
    deliver(j, o, pretty_wf(m, wf), out);
    return 0;
  }
  const AsrDocument d = load_document(o.doc);
  const auto heights = relation_height(d, m);
  json j = {{"structure", m.name()}, {"heights", to_json(heights)}};
  std::ostringstream s;
  if (d.k() == 1) {
    const WfAnalysis wf = well_founded_part(m.size(), materialize_relation(m, d.wf[0]));
    j["analysis"] = to_json(wf);
    s << pretty_wf(m, wf);
  } else {
    for (const RelationHeight& rh : heights) {
      s << "relation " << rh.index << " max height " << rh.max_height << "\n";
    }
  }
  deliver(j, o, s.str(), out);
  return 0;
}

int cmd_census(const Options& o, const Caps& caps, std::ostream& out) {
  const Structure m = load_structure(o.structure, caps);
  const std::vector<Elem> pool = parse_elems(m, o.params);
  const DefinabilityReport report = enumerate_definable(m, pool, o.budget, caps);
  std::ostringstream s;
  s << "subset  size  witness\n";
  for (const auto& [mask, witness] : report.definable) {
    s << mask_to_hex(mask) << "  " << ast_size(witness) << "  " << print_formula(witness)
      << "\n";
  }
  s << report.definable.size() << " definable, " << report.invariant.size()
    << " invariant, certified " << (report.certified ? "yes" : "no") << "\n";
  deliver(to_json(report, m), o, s.str(), out);
  return 0;
}

int cmd_llevel(const Options& o, const Caps& caps, std::ostream& out) {
  const Structure base = load_structure(o.base, caps);
  if (!base.has_hf_labels()) {
    throw ValidationError("base '" + o.base + "' is not a structure of HF sets");
  }
  ConstructibleHierarchy h(base.hf_labels(), caps);
  const LLevel& level = h.level(o.alpha);
  json j = to_json(level);
  j["certified"] = h.all_certified();
  std::ostringstream s;
  s << "L_" << level.index << " over " << base.name() << ": " << level.domain.size()
    << " elements\n";
  for (HFSet e : level.domain) s << e.code() << "  " << e.to_string() << "\n";
  deliver(j, o, s.str(), out);
  return 0;
}

std::vector<std::size_t> chosen_levels(const Options& o) {
  if (!o.levels.empty()) return o.levels;
  std::vector<std::size_t> levels;
  for (std::size_t k = 1; k <= o.top; ++k) levels.push_back(k);
  return levels;
}

int cmd_good(const Options& o, const Caps& caps, std::ostream& out) {
  const std::vector<std::size_t> levels = chosen_levels(o);
  std::ostringstream s;
  if (!o.codes.empty()) {
    std::vector<GodelCode> codes;
    for (const auto& c : o.codes) codes.push_back(GodelCode::from_string(c));
    const GoodnessTable table = assemble_p(codes, levels, caps);
    for (const GoodnessRow& row : table.rows) {
      s << row.code.to_string() << "  " << (row.good ? "good" : "not good");
      for (SubsetMask p : row.p) s << "  " << mask_to_hex(p);
      s << "\n";
    }
    deliver(to_json(table), o, s.str(), out);
    return 0;
  }
  const Formula phi = load_formula(o.formula);
  const GoodnessResult result = is_good(phi, levels, caps);
  json j = to_json(result);
  j["formula"] = print_formula(phi);
  j["code"] = godel_encode(phi).to_string();
  s << "level  satisfying  witness\n";
  for (const LevelGoodness& lg : result.levels) {
    s << lg.level << "  " << lg.satisfying << "  "
      << (lg.witness ? mask_to_hex(*lg.witness) : "-") << "\n";
  }
  s << (result.good ? "good" : "not good") << "\n";
  deliver(j, o, s.str(), out);
  return 0;
}

int cmd_reflect(const Options& o, const Caps& caps, std::ostream& out) {
  const Formula phi = load_formula(o.formula);
  const ReflectionReport report = find_reflecting_levels(phi, o.top, caps);
  std::ostringstream s;
  s << "reflecting levels below " << report.top << ":";
  for (std::size_t k : report.reflecting) s << " " << k;
  s << "\n";
  deliver(to_json(report), o, s.str(), out);
  return 0;
}

void add_output(CLI::App* sub, Options& o) {
  sub->add_option("--out", o.out, "Write the JSON report to this path");
  sub->add_flag("--pretty", o.pretty, "Print a human-readable table");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite-model toolkit for almost self-referential formulas", "asrlogic"};
  app.require_subcommand(1);

  auto* eval = app.add_subcommand("eval", "Evaluate a single-relation document at one element");
  eval->add_option("--structure", o.structure, "v0..v4, nat:N or a JSON path")->required();
  eval->add_option("--doc", o.doc, "ASR document file")->required();
  eval->add_option("--param", o.param, "Element index or constant")->required();
  eval->add_option("--out", o.out, "Also write a JSON report");

  auto* multi = app.add_subcommand("eval-multi", "Evaluate a k-relation document at a tuple");
  multi->add_option("--structure", o.structure)->required();
  multi->add_option("--doc", o.doc)->required();
  multi->add_option("--params", o.params, "Comma-separated elements x1..xk")
      ->required()
      ->delimiter(',');
  multi->add_option("--out", o.out, "Also write a JSON report");

  auto* unfold = app.add_subcommand("unfold", "Unfold a document into an infinitary formula");
  unfold->add_option("--structure", o.structure)->required();
  unfold->add_option("--doc", o.doc)->required();
  unfold->add_option("--param", o.param)->required();
  add_output(unfold, o);

  auto* wfpart = app.add_subcommand("wfpart", "Well-founded part of a relation");
  wfpart->add_option("--structure", o.structure)->required();
  auto* doc_opt = wfpart->add_option("--doc", o.doc, "Use the document's relation specs");
  auto* rel_opt = wfpart->add_option("--relation", o.relation, "Use a binary relation of the structure");
  doc_opt->excludes(rel_opt);
  add_output(wfpart, o);

  auto* census = app.add_subcommand("census", "Definable subsets by formula enumeration");
  census->add_option("--structure", o.structure)->required();
  census->add_option("--budget", o.budget, "Largest formula size")->capture_default_str();
  census->add_option("--params", o.params, "Parameter pool")->delimiter(',');
  add_output(census, o);

  auto* llevel = app.add_subcommand("llevel", "Constructible hierarchy level over a V_n base");
  llevel->add_option("--base", o.base, "Base structure, v0..v4")->required();
  llevel->add_option("--alpha", o.alpha, "Level index")->required();
  add_output(llevel, o);

  auto* good = app.add_subcommand("good", "Goodness of a sentence in membership and S");
  auto* f_opt = good->add_option("--formula", o.formula, "Sentence file");
  auto* c_opt = good->add_option("--code", o.codes, "Goedel code (repeatable)");
  f_opt->excludes(c_opt);
  good->add_option("--levels", o.levels, "Comma-separated levels")->delimiter(',');
  good->add_option("--top", o.top, "Levels 1..top");
  add_output(good, o);

  auto* reflect = app.add_subcommand("reflect", "Levels below top that reflect a formula");
  reflect->add_option("--formula", o.formula, "Formula with one free variable")->required();
  reflect->add_option("--top", o.top, "Top level")->required();
  add_output(reflect, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (wfpart->parsed() && doc_opt->count() + rel_opt->count() == 0) {
      throw CLI::RequiredError("--doc or --relation");
    }
    if (good->parsed()) {
      if (o.formula.empty() && o.codes.empty()) {
        throw CLI::RequiredError("--formula or --code");
      }
      if (o.levels.empty() && o.top == 0) {
        throw CLI::RequiredError("--levels or --top");
      }
    }
  } catch (const CLI::CallForHelp&) {
    const auto parsed = app.get_subcommands();
    out << (parsed.empty() ? app.help() : parsed.front()->help());
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    const Caps caps = Caps::from_env();
    if (eval->parsed()) return cmd_eval(o, caps, out, false);
    if (multi->parsed()) return cmd_eval(o, caps, out, true);
    if (unfold->parsed()) return cmd_unfold(o, caps, out);
    if (wfpart->parsed()) return cmd_wfpart(o, caps, out);
    if (census->parsed()) return cmd_census(o, caps, out);
    if (llevel->parsed()) return cmd_llevel(o, caps, out);
    if (good->parsed()) return cmd_good(o, caps, out);
    return cmd_reflect(o, caps, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace asrlogic::cli
