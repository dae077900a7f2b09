// SPDX-License-Identifier: Apache-2.0

#include "hli/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <random>
#include <sstream>

#include "hli/axioms.hpp"
#include "hli/error.hpp"
#include "hli/files.hpp"
#include "hli/generate.hpp"
#include "hli/model_io.hpp"
#include "hli/parser.hpp"
#include "hli/proof.hpp"
#include "hli/satisfaction.hpp"
#include "hli/structure.hpp"
#include "hli/validation.hpp"

namespace hli {

namespace {

using nlohmann::json;

/// Bad flags or flag combinations; reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::vector<std::string> models;
  std::string formula;
  std::string formula_file;
  std::string approx_system;
  std::string pool;
  std::string proof;
  std::string levels = "auto";
  std::string pairs = "diagonal";
  std::string grid;
  std::string measure_grid;
  std::string vocab;
  std::string relation = "approx";
  std::string axiom = "all";
  std::string domain = "all";
  std::string output = "text";
  std::vector<std::string> assign;
  std::uint64_t seed = 0;
  std::size_t size = 2;
  std::size_t count = 0;
  std::size_t samples = 0;
  std::size_t instances = 16;
  bool exhaustive = false;

  // Set once parsing is done.
  bool count_given = false;
  bool samples_given = false;
};

bool json_output(const Options& o) { return o.output == "json"; }

std::string read_text_file(const std::string& path, const char* flag) {
  std::ifstream in(path);
  if (!in) throw UsageError(std::string(flag) + ": cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  return text;
}

std::pair<std::string, std::string> formula_source(const Options& o) {
  if (!o.formula.empty() && !o.formula_file.empty()) throw UsageError("give --formula or --formula-file, not both");
  if (!o.formula.empty()) return {o.formula, "--formula"};
  if (!o.formula_file.empty()) return {read_text_file(o.formula_file, "--formula-file"), "--formula-file"};
  throw UsageError("--formula or --formula-file is required");
}

template <class Parse>
Formula parse_flagged(const std::string& flag, Parse parse) {
  try {
    return parse();
  } catch (const Error& e) {
    throw Error(e.kind(), flag + ": " + e.message());
  }
}

Formula formula_for_model(const Options& o, const WeakProbModel& model) {
  const auto [text, flag] = formula_source(o);
  return parse_flagged(flag, [&, &text = text] { return parse_formula(text, model.vocabulary()); });
}

Formula formula_with_reader(const Options& o, SentenceReader& reader) {
  const auto [text, flag] = formula_source(o);
  return parse_flagged(flag, [&, &text = text] { return reader.read(text); });
}

std::vector<WeakProbModel> load_models(const Options& o) {
  std::vector<WeakProbModel> out;
  for (const auto& path : o.models) out.push_back(load_model(path));
  return out;
}

WeakProbModel one_model(const Options& o) {
  if (o.models.size() != 1) throw UsageError("exactly one --model is required");
  return load_model(o.models.front());
}

Vocabulary merged_vocabulary(const std::vector<WeakProbModel>& models) {
  Vocabulary voc;
  for (const auto& m : models) voc = voc.merged_with(m.vocabulary());
  return voc;
}

Vocabulary flag_vocabulary(const Options& o) {
  try {
    return parse_vocabulary_spec(o.vocab);
  } catch (const Error& e) {
    throw Error(e.kind(), "--vocab: " + e.message());
  }
}

std::vector<Rational01> flag_grid(const std::string& text, const char* flag) {
  if (text.empty()) return default_grid();
  try {
    return parse_grid(text);
  } catch (const Error& e) {
    throw Error(e.kind(), std::string(flag) + ": " + e.message());
  }
}

LevelConfig level_config(const Options& o) {
  LevelConfig cfg;
  if (o.levels != "auto") cfg.levels = flag_grid(o.levels, "--levels");
  if (o.pairs != "diagonal") {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::istringstream in(o.pairs);
    std::string item;
    while (std::getline(in, item, ',')) {
      const auto colon = item.find(':');
      try {
        if (colon == std::string::npos) throw std::invalid_argument("missing ':'");
        std::size_t used = 0;
        const std::string a = item.substr(0, colon);
        const std::string b = item.substr(colon + 1);
        const std::size_t i = std::stoul(a, &used);
        if (used != a.size()) throw std::invalid_argument("bad index");
        const std::size_t j = std::stoul(b, &used);
        if (used != b.size()) throw std::invalid_argument("bad index");
        pairs.emplace_back(i, j);
      } catch (const std::logic_error&) {
        throw UsageError("--pairs: expected i:j,... or diagonal, got \"" + item + "\"");
      }
    }
    cfg.pairs = std::move(pairs);
  }
  try {
    validate(cfg);
  } catch (const Error& e) {
    throw Error(e.kind(), "--levels/--pairs: " + e.message());
  }
  return cfg;
}

EvalOptions eval_options(const Options& o) {
  EvalOptions opts;
  opts.domain = o.domain == "named" ? QuantifierDomain::NamedConstants : QuantifierDomain::AllElements;
  opts.levels = level_config(o);
  return opts;
}

ModelGenSpec gen_spec(const Options& o, Vocabulary voc, std::optional<std::size_t> default_count) {
  ModelGenSpec spec;
  spec.vocabulary = std::move(voc);
  spec.universe_size = o.size;
  spec.value_grid = flag_grid(o.grid, "--grid");
  spec.measure_grid = flag_grid(o.measure_grid, "--measure-grid");
  spec.seed = o.seed;
  if (o.count_given) {
    spec.count = o.count;
  } else if (o.exhaustive) {
    spec.count.reset();
  } else {
    spec.count = default_count;
  }
  if (spec.universe_size == 0) throw UsageError("--size must be at least 1");
  return spec;
}

void print_finding(const Finding& f, const Options& o, std::ostream& out) {
  if (json_output(o)) {
    out << to_json(f).dump() << '\n';
    return;
  }
  out << f.kind << ' ' << f.property << ": " << f.instantiation;
  if (!f.lhs.empty() || !f.rhs.empty()) out << ": lhs " << f.lhs << ", rhs " << f.rhs;
  if (!f.detail.empty()) out << " (" << f.detail << ')';
  out << '\n';
  if (f.model) out << "  model: " << f.model->dump() << '\n';
}

void emit_summary(const Report& report, const Options& o, std::ostream& out) {
  if (json_output(o)) {
    out << json{{"checked", report.checked},
                {"violations", report.violations.size()},
                {"witnesses", report.witnesses.size()}}
               .dump()
        << '\n';
  } else {
    out << report.checked << " checks, " << report.witnesses.size() << " witnesses\n";
    out << report.violations.size() << " violations\n";
  }
}

/// Prints the findings and a summary; returns the exit code.
int emit_report(const Report& report, const Options& o, std::ostream& out) {
  for (const auto& f : report.violations) print_finding(f, o, out);
  for (const auto& f : report.witnesses) print_finding(f, o, out);
  emit_summary(report, o, out);
  return report.ok() ? kExitHolds : kExitFails;
}

int verdict(bool holds, const char* yes, const char* no, const Options& o, std::ostream& out, json extra = {}) {
  if (json_output(o)) {
    extra["result"] = holds ? yes : no;
    out << extra.dump() << '\n';
  } else {
    out << (holds ? yes : no) << '\n';
  }
  return holds ? kExitHolds : kExitFails;
}

int cmd_eval(const Options& o, std::ostream& out) {
  const WeakProbModel model = one_model(o);
  const Formula phi = formula_for_model(o, model);
  Valuation v;
  for (const auto& a : o.assign) {
    const auto eq = a.find('=');
    if (eq == std::string::npos) throw UsageError("--assign: expected var=element, got \"" + a + "\"");
    const auto e = model.find_element(a.substr(eq + 1));
    if (!e) throw UsageError("--assign: " + a.substr(eq + 1) + " is not an element of the model");
    v[a.substr(0, eq)] = *e;
  }
  const EvalOptions opts = eval_options(o);
  const Rational01 value = v.empty() ? eval_closed(phi, model, opts) : eval(phi, model, v, opts);
  if (json_output(o)) {
    out << json{{"value", value.str()}}.dump() << '\n';
  } else {
    out << value.str() << '\n';
  }
  return kExitHolds;
}

int cmd_sat(const Options& o, std::ostream& out) {
  const WeakProbModel model = one_model(o);
  const Formula phi = formula_for_model(o, model);
  return verdict(hsat(phi, model, eval_options(o)), "H-SAT", "NOT H-SAT", o, out);
}

int cmd_qeq(const Options& o, std::ostream& out) {
  const WeakProbModel model = one_model(o);
  const Formula phi = formula_for_model(o, model);
  const auto* q = phi.as<QuantifierEquality>();
  if (!q) throw UsageError("--formula: expected a quantifier equality Qφ = Qψ");
  return verdict(hsat_qeq(q->lhs, q->rhs, model, level_config(o)), "H-SAT", "NOT H-SAT", o, out);
}

int cmd_approx_sat(const Options& o, std::ostream& out) {
  const WeakProbModel model = one_model(o);
  if (o.approx_system.empty()) throw UsageError("--approx-system is required");
  SentenceReader reader(model.vocabulary());
  const ApproximationSystem sys = load_approximation_system(o.approx_system, reader);
  const Formula phi = formula_with_reader(o, reader);
  const EvalOptions opts = eval_options(o);
  const bool holds = hasat(phi, model, sys, opts);
  json extra;
  if (!holds) {
    for (std::size_t j : sys.approximations_of(*sys.index_of(phi))) {
      if (!hsat(sys.sentences[j], model, opts)) {
        extra["failing_approximation"] = print_formula(sys.sentences[j]);
        if (!json_output(o)) out << "approximation not H-satisfied: " << print_formula(sys.sentences[j]) << '\n';
        break;
      }
    }
  }
  return verdict(holds, "HA-SAT", "NOT HA-SAT", o, out, extra);
}

int cmd_validate_axioms(const Options& o, std::ostream& out) {
  std::vector<AxiomId> ids;
  if (o.axiom == "all") {
    ids = {AxiomId::Mu1, AxiomId::Mu2, AxiomId::Mu3, AxiomId::Mu4, AxiomId::Mu5};
  } else {
    try {
      ids.push_back(parse_axiom_id(o.axiom));
    } catch (const Error& e) {
      throw UsageError("--axiom: " + e.message());
    }
  }
  const Vocabulary voc = o.vocab.empty() ? Vocabulary{} : flag_vocabulary(o);
  const ModelGenSpec spec = gen_spec(o, voc, std::nullopt);
  const EvalOptions opts = eval_options(o);
  Report total;
  for (AxiomId id : ids) {
    Report r = validate_axiom(id, spec, o.instances, opts);
    for (const auto& f : r.violations) print_finding(f, o, out);
    if (!json_output(o)) {
      out << to_string(id) << ": " << r.checked << " checks, " << r.violations.size() << " violations";
      if (id == AxiomId::Mu3) out << ", " << r.witnesses.size() << " instances where the sides differ";
      out << '\n';
    }
    if (id == AxiomId::Mu3 && !r.witnesses.empty()) print_finding(r.witnesses.front(), o, out);
    total.merge(std::move(r));
  }
  emit_summary(total, o, out);
  return total.ok() ? kExitHolds : kExitFails;
}

int cmd_validate_integral_laws(const Options& o, std::ostream& out) {
  std::vector<WeakProbModel> models = load_models(o);
  if (models.empty()) {
    ModelGenSpec spec = gen_spec(o, Vocabulary{}, std::nullopt);
    for_each_model(spec, [&](const WeakProbModel& m) {
      models.push_back(m);
      return true;
    });
  }
  const auto grid = flag_grid(o.grid, "--grid");
  std::mt19937_64 rng(o.seed);
  Report report;
  std::map<std::size_t, IntegralLawSamples> exhaustive;
  for (const auto& model : models) {
    if (o.samples_given) {
      report.merge(check_semantic_integral_laws(model, random_integral_samples(model.size(), grid, o.samples, rng)));
      continue;
    }
    auto it = exhaustive.find(model.size());
    if (it == exhaustive.end()) {
      it = exhaustive.emplace(model.size(), exhaustive_integral_samples(model.size(), grid)).first;
    }
    report.merge(check_semantic_integral_laws(model, it->second));
  }
  return emit_report(report, o, out);
}

int cmd_validate_approx_system(const Options& o, std::ostream& out) {
  if (o.approx_system.empty()) throw UsageError("--approx-system is required");
  const auto models = load_models(o);
  SentenceReader reader(merged_vocabulary(models));
  const ApproximationSystem sys = load_approximation_system(o.approx_system, reader);
  return emit_report(validate_approximation_system(sys, models, eval_options(o)), o, out);
}

std::vector<Formula> pool_or_formula(const Options& o, SentenceReader& reader) {
  if (!o.pool.empty()) return load_pool(o.pool, reader);
  return {formula_with_reader(o, reader)};
}

int cmd_check_weak_negation(const Options& o, std::ostream& out) {
  const auto models = load_models(o);
  if (models.empty()) throw UsageError("at least one --model is required");
  SentenceReader reader(merged_vocabulary(models));
  const auto pool = pool_or_formula(o, reader);
  WeakNegation neg;
  ApproximationSystem sys;
  if (!o.approx_system.empty()) {
    sys = load_approximation_system(o.approx_system, reader);
  } else {
    std::vector<Formula> sentences = pool;
    for (const auto& phi : pool) {
      Formula n = neg.apply(phi);
      if (std::find(sentences.begin(), sentences.end(), n) == sentences.end()) sentences.push_back(std::move(n));
    }
    sys = ApproximationSystem::diagonal(std::move(sentences));
  }
  return emit_report(check_weak_negation(neg, pool, sys, models, eval_options(o)), o, out);
}

int cmd_check_substructure(const Options& o, std::ostream& out) {
  if (o.models.size() != 2) throw UsageError("check-substructure needs --model SUB --model SUPER");
  const auto models = load_models(o);
  const WeakProbModel& m = models[0];
  const WeakProbModel& n = models[1];
  for (const auto& name : m.universe()) {
    if (!n.find_element(name)) throw Error(ErrorKind::NotASubuniverse, "element " + name + " of M is not in N");
  }
  SentenceReader reader(expand_by_element_constants(n, m.universe()).vocabulary());
  const auto pool = pool_or_formula(o, reader);
  const ApproximationSystem sys = o.approx_system.empty() ? ApproximationSystem::diagonal(pool)
                                                          : load_approximation_system(o.approx_system, reader);
  return verdict(check_elementary_substructure(m, n, pool, sys, eval_options(o)), "SUBSTRUCTURE", "NOT SUBSTRUCTURE",
                 o, out);
}

int cmd_check_proof(const Options& o, std::ostream& out) {
  if (o.proof.empty()) throw UsageError("--proof is required");
  const ProofScript script = load_proof_script(o.proof);
  const ProofCheck check = check_proof(script);
  if (json_output(o)) {
    json j{{"valid", check.ok()}, {"lines", script.lines.size()}};
    if (!check.ok()) {
      j["line"] = *check.invalid_line;
      j["reason"] = check.reason;
    }
    out << j.dump() << '\n';
  } else if (check.ok()) {
    out << "VALID (" << script.lines.size() << " lines)\n";
  } else {
    out << "INVALID at line " << *check.invalid_line << ": " << check.reason << '\n';
  }
  return check.ok() ? kExitHolds : kExitFails;
}

int cmd_find_countermodel(const Options& o, std::ostream& out) {
  SentenceReader reader(o.vocab.empty() ? Vocabulary{} : flag_vocabulary(o));
  const Formula phi = formula_with_reader(o, reader);
  const ModelGenSpec spec = gen_spec(o, reader.vocabulary(), std::nullopt);
  const SearchMode mode = spec.count ? SearchMode::Random : SearchMode::Exhaustive;
  const EvalOptions opts = eval_options(o);
  const auto found = find_countermodel(phi, spec, mode, opts);
  if (!found) {
    if (json_output(o)) {
      out << json{{"result", "NO COUNTERMODEL"}}.dump() << '\n';
    } else {
      out << "NO COUNTERMODEL\n";
    }
    return kExitHolds;
  }
  const std::string value = eval_closed(phi, *found, opts).str();
  if (json_output(o)) {
    out << json{{"result", "COUNTERMODEL"}, {"value", value}, {"model", model_to_json(*found)}}.dump() << '\n';
  } else {
    out << "COUNTERMODEL\nvalue " << value << '\n' << model_to_json(*found).dump() << '\n';
  }
  return kExitFails;
}

int cmd_check_closure(const Options& o, std::ostream& out) {
  SentenceReader reader(o.vocab.empty() ? Vocabulary{} : flag_vocabulary(o));
  const auto pool = pool_or_formula(o, reader);
  const ModelGenSpec spec = gen_spec(o, reader.vocabulary(), 100);
  return emit_report(check_abstract_logic_properties(spec, pool, eval_options(o)), o, out);
}

int cmd_gen_models(const Options& o, std::ostream& out) {
  const ModelGenSpec spec = gen_spec(o, o.vocab.empty() ? Vocabulary{} : flag_vocabulary(o), 1);
  for_each_model(spec, [&](const WeakProbModel& m) {
    out << model_to_json(m).dump() << '\n';
    return true;
  });
  return kExitHolds;
}

int cmd_congruence(const Options& o, std::ostream& out) {
  Vocabulary voc = flag_vocabulary(o);
  CongruenceRelation rel;
  if (o.relation == "eq") {
    rel = CongruenceRelation::Eq;
    voc.set_has_eq(true);
  } else {
    rel = CongruenceRelation::Approx;
    voc.set_has_approx(true);
  }
  const auto axioms = congruence_axioms(voc, rel);
  if (json_output(o)) {
    json arr = json::array();
    for (const auto& a : axioms) arr.push_back(print_formula(a));
    out << arr.dump() << '\n';
  } else {
    for (const auto& a : axioms) out << print_formula(a) << '\n';
  }
  return kExitHolds;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Logic of integrals: evaluation, satisfiability and validation over finite models", "hli"};
  app.require_subcommand(1);

  std::map<CLI::App*, int (*)(const Options&, std::ostream&)> handlers;
  std::vector<std::pair<CLI::App*, std::pair<CLI::Option*, CLI::Option*>>> counted;

  auto command = [&](const char* name, const char* help, int (*handler)(const Options&, std::ostream&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    handlers[sub] = handler;
    sub->add_option("--output", o.output, "text or json")->check(CLI::IsMember({"text", "json"}));
    return sub;
  };
  auto model_flags = [&](CLI::App* sub) { sub->add_option("--model", o.models, "model file (repeatable)"); };
  auto formula_flags = [&](CLI::App* sub) {
    sub->add_option("--formula", o.formula, "formula text");
    sub->add_option("--formula-file", o.formula_file, "file holding the formula");
  };
  auto level_flags = [&](CLI::App* sub) {
    sub->add_option("--levels", o.levels, "\"a1,a2,...\" or auto");
    sub->add_option("--pairs", o.pairs, "\"i:j,...\" or diagonal");
    sub->add_option("--domain", o.domain, "quantifier domain: all or named")->check(CLI::IsMember({"all", "named"}));
  };
  auto gen_flags = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--size", o.size, "universe size");
    sub->add_option("--grid", o.grid, "value grid, e.g. \"0,1/4,1/2,3/4,1\"");
    sub->add_option("--measure-grid", o.measure_grid, "measure weight grid");
    CLI::Option* count = sub->add_option("--count", o.count, "number of random models");
    CLI::Option* exhaustive = sub->add_flag("--exhaustive", o.exhaustive, "enumerate every model");
    exhaustive->excludes(count);
    counted.push_back({sub, {count, nullptr}});
  };
  auto vocab_flag = [&](CLI::App* sub) { sub->add_option("--vocab", o.vocab, "vocabulary, e.g. \"P/1,R/2,f:1,c\""); };

  CLI::App* eval_cmd = command("eval", "print the truth value of a sentence", cmd_eval);
  model_flags(eval_cmd);
  formula_flags(eval_cmd);
  level_flags(eval_cmd);
  eval_cmd->add_option("--assign", o.assign, "var=element for open formulas (repeatable)");

  for (auto [name, help, handler] : {std::tuple{"sat", "decide H-satisfaction", cmd_sat},
                                     std::tuple{"qeq", "decide a quantifier equality", cmd_qeq}}) {
    CLI::App* sub = command(name, help, handler);
    model_flags(sub);
    formula_flags(sub);
    level_flags(sub);
  }

  CLI::App* approx_cmd = command("approx-sat", "decide approximate H-satisfaction", cmd_approx_sat);
  model_flags(approx_cmd);
  formula_flags(approx_cmd);
  level_flags(approx_cmd);
  approx_cmd->add_option("--approx-system", o.approx_system, "approximation system file");

  CLI::App* axioms_cmd = command("validate-axioms", "check the integral axiom schemata on generated models",
                                 cmd_validate_axioms);
  axioms_cmd->add_option("--axiom", o.axiom, "mu1..mu5 or all");
  axioms_cmd->add_option("--instances", o.instances, "schema instances per axiom");
  vocab_flag(axioms_cmd);
  gen_flags(axioms_cmd);
  level_flags(axioms_cmd);

  CLI::App* laws_cmd = command("validate-integral-laws", "check the semantic integral laws", cmd_validate_integral_laws);
  model_flags(laws_cmd);
  gen_flags(laws_cmd);
  CLI::Option* samples = laws_cmd->add_option("--samples", o.samples, "random samples per model");

  CLI::App* sys_cmd = command("validate-approx-system", "check an approximation system", cmd_validate_approx_system);
  model_flags(sys_cmd);
  level_flags(sys_cmd);
  sys_cmd->add_option("--approx-system", o.approx_system, "approximation system file");

  CLI::App* neg_cmd = command("check-weak-negation", "check the weak negation clauses", cmd_check_weak_negation);
  model_flags(neg_cmd);
  formula_flags(neg_cmd);
  level_flags(neg_cmd);
  neg_cmd->add_option("--pool", o.pool, "sentence pool file");
  neg_cmd->add_option("--approx-system", o.approx_system, "approximation system file");

  CLI::App* sub_cmd = command("check-substructure", "decide elementary substructure on a pool", cmd_check_substructure);
  model_flags(sub_cmd);
  formula_flags(sub_cmd);
  level_flags(sub_cmd);
  sub_cmd->add_option("--pool", o.pool, "sentence pool file");
  sub_cmd->add_option("--approx-system", o.approx_system, "approximation system file");

  CLI::App* proof_cmd = command("check-proof", "check a proof script", cmd_check_proof);
  proof_cmd->add_option("--proof", o.proof, "proof script file");

  CLI::App* cm_cmd = command("find-countermodel", "search for a model where a sentence is not 1", cmd_find_countermodel);
  formula_flags(cm_cmd);
  vocab_flag(cm_cmd);
  gen_flags(cm_cmd);
  level_flags(cm_cmd);

  CLI::App* closure_cmd = command("check-closure", "check renaming, reduct and isomorphism invariance",
                                  cmd_check_closure);
  formula_flags(closure_cmd);
  vocab_flag(closure_cmd);
  gen_flags(closure_cmd);
  level_flags(closure_cmd);
  closure_cmd->add_option("--pool", o.pool, "sentence pool file");

  CLI::App* gen_cmd = command("gen-models", "print generated models, one JSON object per line", cmd_gen_models);
  vocab_flag(gen_cmd);
  gen_flags(gen_cmd);

  CLI::App* cong_cmd = command("congruence", "print congruence axioms for a vocabulary", cmd_congruence);
  vocab_flag(cong_cmd);
  cong_cmd->add_option("--relation", o.relation, "eq or approx")->check(CLI::IsMember({"eq", "approx"}));

  std::vector<std::string> argv_storage{"hli"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitHolds : kExitUsage;
  }

  for (const auto& [sub, opts] : counted) {
    if (*sub) o.count_given = opts.first->count() > 0;
  }
  o.samples_given = samples->count() > 0;

  for (const auto& [sub, handler] : handlers) {
    if (!*sub) continue;
    try {
      return handler(o, out);
    } catch (const UsageError& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
  }
  return kExitUsage;
}

}  // namespace hli
