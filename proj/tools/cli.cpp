#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "osl/errors.hpp"
#include "osl/model_zoo.hpp"
#include "osl/proof_kernel.hpp"
#include "osl/proof_search.hpp"
#include "osl/semantics.hpp"

namespace osl::cli {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kResource = 3;

struct Options {
  std::string command;
  std::string model;
  std::vector<std::string> models;
  std::string assign_path;
  std::string sequent_text;
  std::string prop_text;
  std::string proof_path;
  std::string out_path;
  int depth = 8;
  long budget = 200000;
  std::string cut_pool = "subformulas";
  unsigned long long cap = 1'000'000;
  bool json_out = false;
  bool strict = false;
};

json witness_json(const CounterWitness& w) {
  json assignment = json::object();
  for (const auto& [atom, flat] : w.assignment) assignment[atom] = flat.to_string();
  return json{{"model", w.model_spec},
              {"assignment", assignment},
              {"lhs_value", w.lhs_value.to_string()},
              {"rhs_value", w.rhs_value.to_string()}};
}

json report_json(const AxiomReport& report) {
  json axioms = json::array();
  for (const auto& r : report.results) {
    json entry{{"axiom", std::string(1, r.axiom)}, {"passed", r.passed}};
    if (!r.passed) entry["witness"] = r.witness;
    axioms.push_back(entry);
  }
  return axioms;
}

void emit(const Options& opt, std::ostream& out, json payload, int exit_code,
          const std::string& plain) {
  if (opt.json_out) {
    payload["command"] = opt.command;
    payload["exit"] = exit_code;
    out << payload.dump(2) << "\n";
  } else {
    out << plain;
  }
}

SearchConfig search_config(const Options& opt) {
  SearchConfig cfg;
  cfg.max_depth = opt.depth;
  cfg.node_budget = opt.budget;
  if (opt.cut_pool == "none")
    cfg.cut_pool = CutPool::None;
  else if (opt.cut_pool == "subformulas")
    cfg.cut_pool = CutPool::Subformulas;
  else
    throw ParseError("--cut-pool must be none or subformulas");
  return cfg;
}

int cmd_parse(const Options& opt, std::ostream& out) {
  if (!opt.prop_text.empty()) {
    PropPtr p = parse_prop(opt.prop_text);
    emit(opt, out, {{"proposition", print_prop(p)}}, kOk, print_prop(p) + "\n");
    return kOk;
  }
  Sequent s = parse_sequent(opt.sequent_text);
  emit(opt, out,
       {{"sequent", print_sequent(s)},
        {"lhs_count", s.lhs.size()},
        {"rhs_count", s.rhs.size()}},
       kOk, print_sequent(s) + "\n");
  return kOk;
}

int cmd_nnf(const Options& opt, std::ostream& out) {
  if (!opt.prop_text.empty()) {
    PropPtr p = to_nnf(parse_prop(opt.prop_text));
    emit(opt, out, {{"proposition", print_prop(p)}}, kOk, print_prop(p) + "\n");
    return kOk;
  }
  Sequent s = normalize_sequent(parse_sequent(opt.sequent_text));
  emit(opt, out, {{"sequent", print_sequent(s)}}, kOk, print_sequent(s) + "\n");
  return kOk;
}

int cmd_model_gen(const Options& opt, std::ostream& out) {
  auto space = make_model(opt.model, LoadOptions{opt.strict});
  if (!space->finite_carrier())
    throw ParseError("model-gen writes finite models only; " + opt.model +
                     " has no materialized carrier");
  const auto* finite = dynamic_cast<const FiniteOSpace*>(space.get());
  std::string text = save_model_text(*finite);
  if (!opt.out_path.empty()) {
    std::ofstream file(opt.out_path);
    if (!file) throw StructuralError("cannot write " + opt.out_path);
    file << text;
    emit(opt, out, {{"written", opt.out_path}}, kOk, "wrote " + opt.out_path + "\n");
  } else {
    emit(opt, out, {{"model_text", text}}, kOk, text);
  }
  return kOk;
}

int cmd_model_check(const Options& opt, std::ostream& out) {
  auto space = make_model(opt.model, LoadOptions{false});
  AxiomReport report = space->check_axioms();
  int code = report.all_passed() ? kOk : kNegative;
  emit(opt, out, {{"model", opt.model}, {"axioms", report_json(report)}}, code,
       report.to_string());
  return code;
}

int cmd_eval(const Options& opt, std::ostream& out) {
  auto space = make_model(opt.model, LoadOptions{opt.strict});
  Assignment v = load_assignment(*space, opt.assign_path);
  Sequent s = parse_sequent(opt.sequent_text);
  Flat lhs = eval_lhs(*space, v, s.lhs);
  Flat rhs = eval_rhs(*space, v, s.rhs);
  bool holds = space->flat_subset(lhs, rhs);
  std::ostringstream plain;
  plain << "lhs value: " << lhs.to_string() << "\n"
        << "rhs value: " << rhs.to_string() << "\n"
        << (holds ? "holds\n" : "does not hold\n");
  emit(opt, out,
       {{"model", opt.model},
        {"sequent", print_sequent(s)},
        {"lhs_value", lhs.to_string()},
        {"rhs_value", rhs.to_string()},
        {"holds", holds}},
       holds ? kOk : kNegative, plain.str());
  return holds ? kOk : kNegative;
}

int cmd_valid(const Options& opt, std::ostream& out) {
  auto space = make_model(opt.model, LoadOptions{opt.strict});
  Sequent s = parse_sequent(opt.sequent_text);
  ValidityVerdict verdict =
      valid_in_model(*space, s, ValidityCaps{opt.cap}, opt.model);
  if (verdict.valid) {
    emit(opt, out,
         {{"model", opt.model},
          {"sequent", print_sequent(s)},
          {"result", "valid"},
          {"assignments_checked", verdict.assignments_checked}},
         kOk, "valid\n");
    return kOk;
  }
  emit(opt, out,
       {{"model", opt.model},
        {"sequent", print_sequent(s)},
        {"result", "countermodel"},
        {"witness", witness_json(*verdict.witness)}},
       kNegative, "countermodel found\n" + verdict.witness->to_string());
  return kNegative;
}

int cmd_countermodel(const Options& opt, std::ostream& out) {
  Sequent s = parse_sequent(opt.sequent_text);
  std::vector<std::string> specs =
      opt.models.empty() ? default_zoo_specs() : opt.models;
  auto witness = find_countermodel(s, specs, ValidityCaps{opt.cap});
  if (witness) {
    emit(opt, out,
         {{"sequent", print_sequent(s)},
          {"result", "countermodel"},
          {"witness", witness_json(*witness)}},
         kNegative, "countermodel found\n" + witness->to_string());
    return kNegative;
  }
  emit(opt, out,
       {{"sequent", print_sequent(s)},
        {"result", "none-found"},
        {"models", specs}},
       kOk, "no countermodel in the searched models\n");
  return kOk;
}

int cmd_prove(const Options& opt, std::ostream& out) {
  Sequent s = parse_sequent(opt.sequent_text);
  SearchOutcome outcome = prove(s, search_config(opt));
  if (outcome.proved()) {
    std::string script = print_proof_script(*outcome.script);
    emit(opt, out,
         {{"sequent", print_sequent(s)},
          {"result", "proved"},
          {"nodes", outcome.stats.nodes},
          {"depth", outcome.stats.depth_reached},
          {"script", script}},
         kOk, script);
    return kOk;
  }
  emit(opt, out,
       {{"sequent", print_sequent(s)},
        {"result", "exhausted"},
        {"nodes", outcome.stats.nodes},
        {"depth", outcome.stats.depth_reached}},
       kResource, "search exhausted without a proof (not a refutation)\n");
  return kResource;
}

int cmd_check_proof(const Options& opt, std::ostream& out) {
  ProofScript script = load_proof_script(opt.proof_path);
  if (CheckResult v = check_script(script)) {
    emit(opt, out,
         {{"proof", opt.proof_path},
          {"result", "violation"},
          {"step", v->step_index},
          {"message", v->message},
          {"position", v->position}},
         kNegative, "violation: " + v->to_string() + "\n");
    return kNegative;
  }
  emit(opt, out, {{"proof", opt.proof_path}, {"result", "ok"}}, kOk, "ok\n");
  return kOk;
}

int cmd_decide(const Options& opt, std::ostream& out) {
  Sequent s = parse_sequent(opt.sequent_text);
  SearchOutcome outcome =
      decide(s, search_config(opt), opt.models, ValidityCaps{opt.cap});
  switch (outcome.kind) {
    case SearchOutcome::Kind::Proved: {
      std::string script = print_proof_script(*outcome.script);
      emit(opt, out,
           {{"sequent", print_sequent(s)}, {"result", "proved"}, {"script", script}},
           kOk, script);
      return kOk;
    }
    case SearchOutcome::Kind::Refuted:
      emit(opt, out,
           {{"sequent", print_sequent(s)},
            {"result", "refuted"},
            {"witness", witness_json(*outcome.witness)}},
           kNegative, "refuted\n" + outcome.witness->to_string());
      return kNegative;
    case SearchOutcome::Kind::Exhausted:
      break;
  }
  emit(opt, out,
       {{"sequent", print_sequent(s)},
        {"result", "exhausted"},
        {"nodes", outcome.stats.nodes}},
       kResource, "undecided: both searches exhausted\n");
  return kResource;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  Options opt;
  CLI::App app{"osl: O-space toolkit (models, semantics, proofs)"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", opt.json_out, "machine-readable report");
  };
  auto add_strict = [&](CLI::App* sub) {
    sub->add_flag("--strict", opt.strict,
                  "refuse to load model files that fail the axiom checks");
  };
  auto add_search_flags = [&](CLI::App* sub) {
    sub->add_option("--depth", opt.depth, "iterative deepening limit");
    sub->add_option("--budget", opt.budget, "search node budget");
    sub->add_option("--cut-pool", opt.cut_pool, "none|subformulas");
  };

  CLI::App* parse_cmd = app.add_subcommand("parse", "parse and echo canonically");
  parse_cmd->add_option("--sequent", opt.sequent_text, "sequent text");
  parse_cmd->add_option("--prop", opt.prop_text, "proposition text");
  add_common(parse_cmd);

  CLI::App* nnf_cmd =
      app.add_subcommand("nnf", "negation normal form / sequent normalization");
  nnf_cmd->add_option("--sequent", opt.sequent_text, "sequent text");
  nnf_cmd->add_option("--prop", opt.prop_text, "proposition text");
  add_common(nnf_cmd);

  CLI::App* gen_cmd = app.add_subcommand("model-gen", "write a zoo model as a file");
  gen_cmd->add_option("--model", opt.model, "model spec")->required();
  gen_cmd->add_option("--out", opt.out_path, "output path (default stdout)");
  add_strict(gen_cmd);
  add_common(gen_cmd);

  CLI::App* check_cmd = app.add_subcommand("model-check", "run the axiom checkers");
  check_cmd->add_option("--model", opt.model, "model spec")->required();
  add_common(check_cmd);

  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a sequent under an assignment");
  eval_cmd->add_option("--model", opt.model, "model spec")->required();
  eval_cmd->add_option("--assign", opt.assign_path, "assignment file")->required();
  eval_cmd->add_option("--sequent", opt.sequent_text, "sequent text")->required();
  add_strict(eval_cmd);
  add_common(eval_cmd);

  CLI::App* valid_cmd = app.add_subcommand("valid", "exhaustive validity in one model");
  valid_cmd->add_option("--model", opt.model, "model spec")->required();
  valid_cmd->add_option("--sequent", opt.sequent_text, "sequent text")->required();
  valid_cmd->add_option("--cap", opt.cap, "assignment cap");
  add_strict(valid_cmd);
  add_common(valid_cmd);

  CLI::App* cm_cmd = app.add_subcommand("countermodel", "search the zoo for a violation");
  cm_cmd->add_option("--sequent", opt.sequent_text, "sequent text")->required();
  cm_cmd->add_option("--model", opt.models, "model spec (repeatable)");
  cm_cmd->add_option("--cap", opt.cap, "assignment cap");
  add_common(cm_cmd);

  CLI::App* prove_cmd = app.add_subcommand("prove", "bounded backward proof search");
  prove_cmd->add_option("--sequent", opt.sequent_text, "sequent text")->required();
  add_search_flags(prove_cmd);
  add_common(prove_cmd);

  CLI::App* proof_cmd = app.add_subcommand("check-proof", "kernel-check a proof script");
  proof_cmd->add_option("--proof", opt.proof_path, "proof script path")->required();
  add_common(proof_cmd);

  CLI::App* decide_cmd =
      app.add_subcommand("decide", "prove or refute, whichever comes first");
  decide_cmd->add_option("--sequent", opt.sequent_text, "sequent text")->required();
  decide_cmd->add_option("--model", opt.models, "refutation model spec (repeatable)");
  decide_cmd->add_option("--cap", opt.cap, "assignment cap");
  add_search_flags(decide_cmd);
  add_common(decide_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return kOk;
    }
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    if (parse_cmd->parsed()) {
      opt.command = "parse";
      if (opt.sequent_text.empty() && opt.prop_text.empty())
        throw ParseError("parse needs --sequent or --prop");
      return cmd_parse(opt, out);
    }
    if (nnf_cmd->parsed()) {
      opt.command = "nnf";
      if (opt.sequent_text.empty() && opt.prop_text.empty())
        throw ParseError("nnf needs --sequent or --prop");
      return cmd_nnf(opt, out);
    }
    if (gen_cmd->parsed()) {
      opt.command = "model-gen";
      return cmd_model_gen(opt, out);
    }
    if (check_cmd->parsed()) {
      opt.command = "model-check";
      return cmd_model_check(opt, out);
    }
    if (eval_cmd->parsed()) {
      opt.command = "eval";
      return cmd_eval(opt, out);
    }
    if (valid_cmd->parsed()) {
      opt.command = "valid";
      return cmd_valid(opt, out);
    }
    if (cm_cmd->parsed()) {
      opt.command = "countermodel";
      return cmd_countermodel(opt, out);
    }
    if (prove_cmd->parsed()) {
      opt.command = "prove";
      return cmd_prove(opt, out);
    }
    if (proof_cmd->parsed()) {
      opt.command = "check-proof";
      return cmd_check_proof(opt, out);
    }
    if (decide_cmd->parsed()) {
      opt.command = "decide";
      return cmd_decide(opt, out);
    }
    err << "no subcommand\n";
    return kUsage;
  } catch (const ResourceError& e) {
    err << "resource cap: " << e.what() << "\n";
    return kResource;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace osl::cli
