// Command-line front end: load models and scenarios, run axiom and claim
// checks, enumerate operator spaces, and simulate staged learning.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "epi/dynamics.hpp"
#include "epi/enumeration.hpp"
#include "epi/formula.hpp"
#include "epi/model_io.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct GlobalOptions {
  std::string format = "text";
  std::uint64_t seed = 0;
  std::size_t max_counterexamples = epi::kDefaultWitnessCap;
  bool json() const { return format == "json"; }
};

std::string event_text(const epi::SpacePtr& space, epi::Mask mask) {
  return epi::Event(space, mask).to_string();
}

ordered_json event_json(const epi::SpacePtr& space, epi::Mask mask) {
  ordered_json out = ordered_json::array();
  for (std::size_t i : epi::Event(space, mask).members())
    out.push_back(space->label(i));
  return out;
}

ordered_json table_json(const epi::KnowledgeOperator& op) {
  ordered_json out = ordered_json::array();
  for (epi::Mask img : op.table()) out.push_back(event_json(op.space(), img));
  return out;
}

ordered_json axiom_report_json(const epi::SpacePtr& space,
                               const epi::AxiomReport& report) {
  ordered_json out;
  out["axiom"] = epi::axiom_name(report.axiom);
  out["holds"] = report.holds;
  ordered_json ces = ordered_json::array();
  for (const auto& w : report.counterexamples) {
    ordered_json ce;
    ce["event"] = event_json(space, w.event);
    if (w.second_event) ce["second_event"] = event_json(space, *w.second_event);
    ce["state"] = space->label(w.state);
    ces.push_back(std::move(ce));
  }
  out["counterexamples"] = std::move(ces);
  return out;
}

ordered_json claim_report_json(const epi::SpacePtr& space,
                               const epi::ClaimReport& report) {
  ordered_json out;
  out["claim"] = epi::claim_name(report.claim);
  out["applicable"] = report.applicable;
  out["holds"] = report.holds;
  if (report.forced) out["forced"] = true;
  ordered_json missing = ordered_json::array();
  for (epi::Axiom a : report.missing_axioms) missing.push_back(epi::axiom_name(a));
  if (!missing.empty()) out["missing_axioms"] = std::move(missing);
  ordered_json trace = ordered_json::object();
  for (const auto& [name, mask] : report.intermediates)
    trace[name] = event_json(space, mask);
  out["trace"] = std::move(trace);
  ordered_json witnesses = ordered_json::array();
  for (const auto& w : report.witnesses) {
    ordered_json wj;
    wj["event"] = event_json(space, w.event);
    wj["relation"] = w.relation;
    if (w.state) wj["state"] = space->label(*w.state);
    witnesses.push_back(std::move(wj));
  }
  out["witnesses"] = std::move(witnesses);
  return out;
}

void print_claim_text(const epi::SpacePtr& space,
                      const epi::ClaimReport& report) {
  std::cout << "  claim " << epi::claim_name(report.claim) << ": ";
  if (!report.applicable && !report.forced) {
    std::cout << "not applicable (missing";
    for (epi::Axiom a : report.missing_axioms)
      std::cout << " " << epi::axiom_name(a);
    std::cout << ")\n";
    return;
  }
  std::cout << (report.holds ? "holds" : "FAILS");
  if (report.forced) std::cout << " [forced evaluation, hypotheses unmet]";
  std::cout << "\n";
  for (const auto& [name, mask] : report.intermediates)
    std::cout << "    " << name << " = " << event_text(space, mask) << "\n";
  for (const auto& w : report.witnesses) {
    std::cout << "    witness: E = " << event_text(space, w.event)
              << " violates " << w.relation;
    if (w.state) std::cout << " at state " << space->label(*w.state);
    std::cout << "\n";
  }
}

std::vector<epi::Claim> standard_claims() {
  return {epi::Claim::Remark1,           epi::Claim::Theorem2,
          epi::Claim::Theorem3,          epi::Claim::KBound,
          epi::Claim::NegKOmegaMin,      epi::Claim::IntrospectionSame,
          epi::Claim::KKRefines};
}

int run_check(const GlobalOptions& global, const std::string& path,
              const std::vector<std::string>& assertion_overrides,
              bool forced) {
  epi::ModelFile file = epi::load_model(path);
  const epi::Model& model = file.model;
  const epi::SpacePtr& space = model.space;
  const std::vector<std::string>& assertions =
      assertion_overrides.empty() ? file.assertions : assertion_overrides;

  bool all_hold = true;
  ordered_json doc;
  doc["command"] = "check";
  doc["model"] = path;
  doc["states"] = ordered_json(space->names());

  ordered_json operators = ordered_json::array();
  for (const auto& [stage, op] : model.operators) {
    ordered_json op_doc;
    op_doc["stage"] = stage < 0 ? "K" : ("K" + std::to_string(stage));
    ordered_json axioms = ordered_json::array();
    if (!global.json())
      std::cout << "operator "
                << (stage < 0 ? std::string("K") : "K" + std::to_string(stage))
                << ":\n";
    for (auto axiom :
         {epi::Axiom::Truth, epi::Axiom::Monotonicity, epi::Axiom::Necessitation,
          epi::Axiom::PositiveIntrospection, epi::Axiom::NegativeIntrospection,
          epi::Axiom::WeakAdditivity}) {
      auto report = epi::check_axiom(op, axiom, global.max_counterexamples);
      axioms.push_back(axiom_report_json(space, report));
      if (!global.json())
        std::cout << "  axiom " << epi::axiom_name(axiom) << ": "
                  << (report.holds ? "holds" : "fails") << "\n";
    }
    op_doc["axioms"] = std::move(axioms);
    ordered_json claims = ordered_json::array();
    for (epi::Claim claim : standard_claims()) {
      epi::ClaimOptions opts;
      opts.forced = forced;
      opts.witness_cap = global.max_counterexamples;
      auto report = epi::verify_claim(op, claim, opts);
      claims.push_back(claim_report_json(space, report));
      if (!global.json()) print_claim_text(space, report);
    }
    op_doc["claims"] = std::move(claims);
    operators.push_back(std::move(op_doc));
  }
  doc["operators"] = std::move(operators);

  ordered_json assertion_docs = ordered_json::array();
  for (const std::string& text : assertions) {
    auto assertion = epi::parse_assertion(text);
    auto result = epi::eval_assertion(assertion, model);
    if (!result.holds) all_hold = false;
    ordered_json a;
    a["assertion"] = text;
    a["holds"] = result.holds;
    if (result.witness) a["witness"] = space->label(*result.witness);
    assertion_docs.push_back(std::move(a));
    if (!global.json()) {
      std::cout << (result.holds ? "PASS" : "FAIL") << " " << text;
      if (result.witness)
        std::cout << "  (witness state " << space->label(*result.witness)
                  << ")";
      std::cout << "\n";
    }
  }
  doc["assertions"] = std::move(assertion_docs);
  doc["all_assertions_hold"] = all_hold;
  if (global.json()) std::cout << doc.dump(2) << "\n";
  return all_hold ? kExitOk : kExitFailed;
}

int run_eval(const GlobalOptions& global, const std::string& path,
             const std::string& expression) {
  epi::ModelFile file = epi::load_model(path);
  auto ast = epi::parse_expr(expression);
  epi::Event value = epi::eval_expr(ast, file.model);
  if (global.json()) {
    ordered_json doc;
    doc["command"] = "eval";
    doc["expression"] = expression;
    doc["normalized"] = epi::format(ast);
    doc["value"] = event_json(file.model.space, value.mask());
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << epi::format(ast) << " = " << value.to_string() << "\n";
  }
  return kExitOk;
}

int run_enumerate(const GlobalOptions& global, std::size_t states,
                  const std::string& axioms_arg,
                  const std::vector<std::string>& claim_args, bool count_only,
                  bool override_large) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < states; ++i)
    labels.push_back(std::string(1, static_cast<char>('a' + i)));
  auto space = epi::StateSpace::make(labels);

  epi::AxiomSet axioms;
  {
    std::vector<epi::Axiom> parsed;
    std::string token;
    for (char c : axioms_arg + ",") {
      if (c == ',') {
        if (!token.empty()) {
          auto axiom = epi::axiom_from_name(token);
          if (!axiom) throw epi::Error("unknown axiom: " + token);
          parsed.push_back(*axiom);
          token.clear();
        }
      } else {
        token += c;
      }
    }
    axioms = epi::AxiomSet::from_list(parsed);
  }

  ordered_json doc;
  doc["command"] = "enumerate";
  doc["states"] = states;
  doc["axioms"] = axioms.to_string();
  doc["seed"] = global.seed;

  if (count_only) {
    std::uint64_t count = 0;
    if (axioms.is_truth_monotone_only()) {
      count = epi::count_operators(space);
      const std::uint64_t expected = epi::tm_operator_count_formula(states);
      doc["operator_count"] = count;
      doc["formula_count"] = expected;
      const bool match = count == expected;
      if (global.json())
        std::cout << doc.dump(2) << "\n";
      else
        std::cout << count << " operators (formula predicts " << expected
                  << (match ? ", match)" : ", MISMATCH)") << "\n";
      return match ? kExitOk : kExitFailed;
    }
    epi::enumerate_filtered_tables(
        space, axioms, [&](const epi::KnowledgeOperator&) { ++count; },
        override_large);
    doc["operator_count"] = count;
    if (global.json())
      std::cout << doc.dump(2) << "\n";
    else
      std::cout << count << " operators\n";
    return kExitOk;
  }

  std::vector<epi::Claim> claims;
  for (const std::string& name : claim_args) {
    auto claim = epi::claim_from_name(name);
    if (!claim) throw epi::Error("unknown claim: " + name);
    claims.push_back(*claim);
  }
  if (claims.empty())
    claims = {epi::Claim::Theorem2, epi::Claim::Theorem3, epi::Claim::Eq1};

  bool clean = true;
  ordered_json claim_docs = ordered_json::array();
  for (epi::Claim claim : claims) {
    epi::UniversalCheckOptions opts;
    opts.sample_cap = global.max_counterexamples;
    opts.override_large = override_large;
    epi::EnumerationStats stats =
        epi::universal_check(space, claim, axioms, opts);
    if (stats.counterexample_count > 0) clean = false;

    ordered_json stat_doc;
    stat_doc["claim"] = epi::claim_name(claim);
    stat_doc["operator_count"] = stats.operator_count;
    stat_doc["pass"] = stats.pass;
    stat_doc["fail"] = stats.fail;
    stat_doc["not_applicable"] = stats.not_applicable;
    stat_doc["counterexamples"] = stats.counterexample_count;
    ordered_json samples = ordered_json::array();
    for (const auto& sample : stats.samples) {
      ordered_json s;
      s["states"] = ordered_json(space->names());
      s["operator"] = ordered_json::object();
      s["operator"]["table"] = table_json(
          epi::KnowledgeOperator::from_masks(space, sample.table));
      s["report"] = claim_report_json(space, sample.report);
      samples.push_back(std::move(s));
    }
    stat_doc["samples"] = std::move(samples);
    claim_docs.push_back(std::move(stat_doc));

    if (!global.json()) {
      std::cout << epi::claim_name(claim) << ": " << stats.operator_count
                << " operators, " << stats.pass << " pass, " << stats.fail
                << " fail, " << stats.not_applicable << " not applicable, "
                << stats.counterexample_count << " counterexamples\n";
    }
  }
  doc["claims"] = std::move(claim_docs);
  if (global.json()) std::cout << doc.dump(2) << "\n";
  return clean ? kExitOk : kExitFailed;
}

int run_simulate(const GlobalOptions& global, const std::string& path) {
  epi::ScenarioFile scenario = epi::load_scenario(path);
  const epi::SpacePtr& space = scenario.space;
  epi::KnowledgeOperator k1 = epi::learn(scenario.k0, scenario.facts);

  bool ok = true;
  ordered_json doc;
  doc["command"] = "simulate";
  doc["scenario"] = path;
  doc["states"] = ordered_json(space->names());
  doc["k1"] = ordered_json::object();
  doc["k1"]["table"] = table_json(k1);

  epi::LearningScenario staged{space, {scenario.k0, k1}};
  auto refinement =
      epi::validate_refinement(staged, global.max_counterexamples);
  doc["refinement_valid"] = refinement.valid;
  if (!refinement.valid) ok = false;
  if (!global.json())
    std::cout << "refinement K0 <= K1: "
              << (refinement.valid ? "holds" : "FAILS") << "\n";

  ordered_json fact_docs = ordered_json::array();
  for (const auto& fact : scenario.facts) {
    auto report = epi::verify_learning_claims(scenario.k0, k1, fact.event);
    ordered_json f;
    f["event"] = event_json(space, fact.event.mask());
    f["learned"] = event_json(space, fact.learned.mask());
    f["applicable"] = report.applicable;
    f["holds"] = report.holds;
    ordered_json trace = ordered_json::object();
    for (const auto& [name, mask] : report.intermediates)
      trace[name] = event_json(space, mask);
    f["trace"] = std::move(trace);
    ordered_json subs = ordered_json::array();
    for (const auto& sc : report.sub_claims) {
      ordered_json s;
      s["claim"] = sc.description;
      s["holds"] = sc.holds;
      subs.push_back(std::move(s));
    }
    f["sub_claims"] = std::move(subs);
    fact_docs.push_back(std::move(f));
    if (report.applicable && !report.holds) ok = false;

    if (!global.json()) {
      std::cout << "learning " << fact.event.to_string() << " (gaining "
                << fact.learned.to_string() << "): ";
      if (!report.applicable) {
        std::cout << "not applicable (prior knowledge of the event is "
                     "nonempty or learning failed)\n";
      } else {
        std::cout << (report.holds ? "all claims hold" : "CLAIMS FAIL")
                  << "\n";
        for (const auto& [name, mask] : report.intermediates)
          std::cout << "    " << name << " = " << event_text(space, mask)
                    << "\n";
        for (const auto& sc : report.sub_claims)
          std::cout << "    " << (sc.holds ? "PASS " : "FAIL ")
                    << sc.description << "\n";
      }
    }
  }
  doc["facts"] = std::move(fact_docs);

  epi::Model model;
  model.space = space;
  model.operators.emplace(0, scenario.k0);
  model.operators.emplace(1, k1);
  ordered_json assertion_docs = ordered_json::array();
  for (const std::string& text : scenario.assertions) {
    auto assertion = epi::parse_assertion(text);
    auto result = epi::eval_assertion(assertion, model);
    if (!result.holds) ok = false;
    ordered_json a;
    a["assertion"] = text;
    a["holds"] = result.holds;
    if (result.witness) a["witness"] = space->label(*result.witness);
    assertion_docs.push_back(std::move(a));
    if (!global.json()) {
      std::cout << (result.holds ? "PASS" : "FAIL") << " " << text << "\n";
    }
  }
  doc["assertions"] = std::move(assertion_docs);
  doc["ok"] = ok;
  if (global.json()) std::cout << doc.dump(2) << "\n";
  return ok ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-model workbench for set-theoretic knowledge operators"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--format", global.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", global.seed, "Seed for randomized procedures");
  app.add_option("--max-counterexamples", global.max_counterexamples,
                 "Counterexample cap per report");

  auto* check = app.add_subcommand("check", "Check a model file");
  std::string check_path;
  std::vector<std::string> check_asserts;
  bool check_forced = false;
  check->add_option("model", check_path, "Model JSON file")->required();
  check->add_option("-a,--assert", check_asserts,
                    "Assertions overriding the file's list");
  check->add_flag("--forced", check_forced,
                  "Evaluate claims even when their hypotheses fail");

  auto* eval = app.add_subcommand("eval", "Evaluate an expression");
  std::string eval_path, eval_expr;
  eval->add_option("model", eval_path, "Model JSON file")->required();
  eval->add_option("-e,--expr", eval_expr, "Expression text")->required();

  auto* enumerate =
      app.add_subcommand("enumerate", "Check claims over an operator space");
  std::size_t enum_states = 2;
  std::string enum_axioms = "truth,mono";
  std::vector<std::string> enum_claims;
  bool enum_count_only = false;
  bool enum_override = false;
  enumerate->add_option("--states", enum_states, "Number of states")
      ->required();
  enumerate->add_option("--axioms", enum_axioms,
                        "Comma-separated axiom names");
  enumerate->add_option("--claims", enum_claims, "Claims to verify")
      ->delimiter(',');
  enumerate->add_flag("--count-only", enum_count_only,
                      "Only count the operators");
  enumerate->add_flag("--override-large", enum_override,
                      "Allow the 16.8M-table brute force at n=3");

  auto* simulate = app.add_subcommand("simulate", "Run a learning scenario");
  std::string sim_path;
  simulate->add_option("scenario", sim_path, "Scenario JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (check->parsed())
      return run_check(global, check_path, check_asserts, check_forced);
    if (eval->parsed()) return run_eval(global, eval_path, eval_expr);
    if (enumerate->parsed())
      return run_enumerate(global, enum_states, enum_axioms, enum_claims,
                           enum_count_only, enum_override);
    if (simulate->parsed()) return run_simulate(global, sim_path);
  } catch (const epi::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
