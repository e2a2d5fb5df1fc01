#include "dmf/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <sstream>

#include "dmf/interactions.hpp"
#include "dmf/kb_parser.hpp"
#include "dmf/planner.hpp"
#include "dmf/qpn_build.hpp"
#include "dmf/qpn_eval.hpp"
#include "dmf/qpn_io.hpp"
#include "dmf/query.hpp"

namespace dmf::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct QueryArgs {
  std::string kb;
  std::string type;
  std::string a;
  std::string b;
  std::string rel;
  std::string ctx;
  std::string direction = "down";
};

struct FormulateArgs {
  std::string kb;
  std::string case_file;
  std::string out = "model.qpn";
  int depth = 3;
  double threshold = 0.0;
};

ConceptId declared(const KnowledgeBase& kb, const std::string& name, const char* flag) {
  auto id = ConceptId::parse(name);
  if (!id) throw UsageError(std::string(flag) + ": invalid concept name '" + name + "'");
  if (!kb.contains(*id)) throw KbError("unknown concept '" + id->str() + "'");
  return *id;
}

int do_check(const std::string& path, std::ostream& out) {
  const KnowledgeBase kb = load_kb(path);
  out << "ok: " << kb.concepts().size() << " concepts, " << kb.categorical().size()
      << " categorical assertions, " << kb.interactions().size() << " interactions\n";
  return kExitOk;
}

int do_query(const QueryArgs& q, std::ostream& out) {
  const KnowledgeBase kb = load_kb(q.kb);
  auto active = parse_context(q.ctx);
  if (!active) throw UsageError("--ctx: expected c1+c2+... or 'universal'");
  for (const auto& c : active->conditions()) declared(kb, c.str(), "--ctx");

  const ConceptId a = declared(kb, q.a, "--a");
  auto need_b = [&] {
    if (q.b.empty()) throw UsageError("--b is required for " + q.type);
    return declared(kb, q.b, "--b");
  };
  auto categorizer = [&] {
    auto kind = parse_categorizer(q.rel.empty() ? "ako" : q.rel);
    if (!kind) throw UsageError("--rel: expected ako, partof or eqv for " + q.type);
    return *kind;
  };
  auto interaction = [&] {
    auto kind = parse_interaction_kind(q.rel);
    if (!kind) throw UsageError("--rel: expected an interaction kind for " + q.type);
    return *kind;
  };

  QueryAnswer answer;
  if (q.type == "q1") {
    answer = q1(kb, *active, a, need_b(), categorizer());
  } else if (q.type == "q2") {
    auto dir = parse_direction(q.direction);
    if (!dir) throw UsageError("--direction: expected up or down");
    answer = q2(kb, *active, a, categorizer(), *dir);
  } else if (q.type == "q3") {
    answer = q3(kb, *active, a, interaction());
  } else {
    answer = q4(kb, *active, a, need_b(), interaction());
  }
  out << format_answer(answer);
  return kExitOk;
}

int do_formulate(const FormulateArgs& f, std::ostream& out, std::ostream& err) {
  const KnowledgeBase kb = load_kb(f.kb);
  const CaseDescription input = parse_case(read_text_file(f.case_file), &kb);
  const BackgroundTable table = characterize_background(kb, input);
  for (const auto& w : table.warnings) err << "warning: " << w << "\n";
  const DomainContext ctx = establish_context(kb, table, input.oracle_conditions);
  FormulationOptions options;
  options.depth_bound = f.depth;
  options.significance_threshold = f.threshold;
  const ProblemFormulation formulation =
      formulate_problem(kb, ctx, table, input.criterion, options);
  for (const auto& w : formulation.warnings) err << "warning: " << w << "\n";
  const ModelBuild build = construct_model(kb, formulation, ctx.as_context());

  std::ofstream file(f.out, std::ios::binary);
  if (!file) throw UsageError("--out: cannot write '" + f.out + "'");
  file << serialize_qpn(build.model);
  file.close();
  if (!file) throw UsageError("--out: write failed for '" + f.out + "'");

  out << format_background(table) << "\n"
      << format_formulation(formulation) << "\n"
      << format_build_report(build) << "wrote " << f.out << "\n";
  return kExitOk;
}

Qpn load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_qpn(ss.str());
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Knowledge base queries and qualitative decision-model formulation", "dmf"};
  app.require_subcommand(1);

  std::string check_kb;
  auto* check = app.add_subcommand("check", "Load a knowledge base and report diagnostics");
  check->add_option("--kb", check_kb, "Knowledge base file")->required();

  QueryArgs q;
  auto* query = app.add_subcommand("query", "Answer one q1-q4 query with its trace");
  query->add_option("--kb", q.kb, "Knowledge base file")->required();
  query->add_option("--type", q.type, "q1, q2, q3 or q4")
      ->required()
      ->check(CLI::IsMember({"q1", "q2", "q3", "q4"}));
  query->add_option("--a", q.a, "First concept")->required();
  query->add_option("--b", q.b, "Second concept (q1, q4)");
  query->add_option("--rel", q.rel, "Categorizer (q1, q2) or interaction kind (q3, q4)");
  query->add_option("--ctx", q.ctx, "Active context, c1+c2+... (default universal)");
  query->add_option("--direction", q.direction, "q2 direction: up or down")
      ->capture_default_str();

  FormulateArgs f;
  auto* formulate = app.add_subcommand("formulate", "Formulate and build the decision model");
  formulate->add_option("--kb", f.kb, "Knowledge base file")->required();
  formulate->add_option("--case", f.case_file, "Case description file")->required();
  formulate->add_option("--out", f.out, "Where to write the model")->capture_default_str();
  formulate->add_option("--depth", f.depth, "Expansion depth bound")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  formulate->add_option("--threshold", f.threshold, "Significance threshold")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));

  std::string model_path;
  auto* evaluate = app.add_subcommand("evaluate", "Evaluate each decision of a model");
  evaluate->add_option("--model", model_path, "Model file")->required();
  auto* exporter = app.add_subcommand("export", "Print a model as a Graphviz digraph");
  exporter->add_option("--model", model_path, "Model file")->required();

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (check->parsed()) return do_check(check_kb, out);
    if (query->parsed()) return do_query(q, out);
    if (formulate->parsed()) return do_formulate(f, out, err);
    if (evaluate->parsed()) {
      out << format_evaluation(evaluate_model(load_model(model_path)));
      return kExitOk;
    }
    out << export_dot(load_model(model_path));
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const LoadError& e) {
    err << format_diagnostics(e.diagnostics());
    return kExitKb;
  } catch (const ModelError& e) {
    err << "error: " << e.what() << "\n";
    return kExitModel;
  } catch (const KbError& e) {
    err << "error: " << e.what() << "\n";
    return kExitKb;
  } catch (const EmptyContextError& e) {
    err << "error: " << e.what() << "\n";
    return kExitKb;
  }
}

}  // namespace dmf::cli
