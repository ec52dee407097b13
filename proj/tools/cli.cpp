#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>

#include "vlang/analysis.hpp"
#include "vlang/context_conditions.hpp"
#include "vlang/desugar.hpp"
#include "vlang/error.hpp"
#include "vlang/feature_model.hpp"
#include "vlang/generator.hpp"
#include "vlang/grammar.hpp"
#include "vlang/model_parser.hpp"
#include "vlang/schema.hpp"
#include "vlang/semantics.hpp"
#include "vlang/text.hpp"

namespace vlang::cli {

namespace {

namespace fs = std::filesystem;

// Thrown for argument problems detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Role { kGrammar, kModel, kDiagram, kConfig };

Role RoleOf(const std::string& file) {
  std::string ext = fs::path(file).extension().string();
  if (ext == ".mclang") return Role::kGrammar;
  if (ext == ".cd" || ext == ".cda") return Role::kModel;
  if (ext == ".fd") return Role::kDiagram;
  if (ext == ".conf") return Role::kConfig;
  throw UsageError("cannot tell the role of " + file +
                   " (expected .mclang, .cd, .cda, .fd or .conf)");
}

struct LoadedModel {
  std::string file;
  std::shared_ptr<const ModelParser> parser;
  AstNode ast;  // as parsed
};

// Every file is read and parsed up front. Each model is read with the
// closest grammar listed before it.
struct Workspace {
  std::vector<LoadedModel> models;
  std::vector<FeatureDiagram> diagrams;
  std::vector<Configuration> configs;
  std::size_t grammars = 0;

  static Workspace Load(const std::vector<std::string>& files) {
    Workspace ws;
    std::shared_ptr<const ModelParser> current;
    for (const std::string& f : files) {
      Role role = RoleOf(f);
      std::string text = ReadFile(f);
      switch (role) {
        case Role::kGrammar:
          current = std::make_shared<ModelParser>(ParseGrammar(text));
          ++ws.grammars;
          break;
        case Role::kModel:
          if (!current) throw UsageError("model " + f + " precedes any grammar");
          ws.models.push_back({f, current, current->Parse(text)});
          break;
        case Role::kDiagram: {
          auto ds = ParseFeatureDiagrams(text);
          ws.diagrams.insert(ws.diagrams.end(), ds.begin(), ds.end());
          break;
        }
        case Role::kConfig: {
          auto cs = ParseConfigurations(text);
          ws.configs.insert(ws.configs.end(), cs.begin(), cs.end());
          break;
        }
      }
    }
    return ws;
  }

  Model MinimalModel(std::size_t i) const {
    const LoadedModel& m = models.at(i);
    return Model::FromAst(DesugarToMinimal(m.parser->schema(), m.ast));
  }
};

struct BoundsFlags {
  std::size_t max_objects = 1;
  std::string extra_classes;

  void Add(CLI::App* app) {
    app->add_option("--max-objects", max_objects,
                    "Largest object population enumerated")
        ->capture_default_str();
    app->add_option("--extra-classes", extra_classes,
                    "Comma-separated class names allowed beyond those the "
                    "models mention");
  }

  Bounds ToBounds() const {
    Bounds b;
    b.max_objects = max_objects;
    b.extra_classes = SplitList(extra_classes);
    for (const std::string& c : b.extra_classes) {
      if (!IsIdentifier(c)) throw UsageError("bad class name '" + c + "'");
    }
    return b;
  }
};

void Expect(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err, bool color)
      : out_(out), err_(err), color_(color) {}

  void Diag(std::string_view level, const std::string& message) {
    const char* code = level == "error" ? "\x1b[31m" : "\x1b[33m";
    if (color_) {
      err_ << code << level << ":\x1b[0m " << message << "\n";
    } else {
      err_ << level << ": " << message << "\n";
    }
  }

  void Warnings(const Model& m) {
    for (const std::string& w : StereotypeWarnings(m)) {
      // StereotypeWarnings already carry their "warning: " prefix.
      Diag("warning", w.substr(w.find(' ') + 1));
    }
  }

  int CheckGrammar(const std::string& file) {
    AstSchema schema = DeriveSchema(ParseGrammar(ReadFile(file)));
    out_ << DumpSchema(schema);
    return kExitOk;
  }

  int Parse(const std::vector<std::string>& files, bool minimal) {
    Workspace ws = Workspace::Load(files);
    Expect(ws.grammars == 1 && ws.models.size() == 1,
           "parse expects one grammar and one model");
    const LoadedModel& m = ws.models[0];
    AstNode ast = minimal ? DesugarToMinimal(m.parser->schema(), m.ast) : m.ast;
    out_ << ToText(ast) << "\n";
    return kExitOk;
  }

  int Wf(const std::vector<std::string>& files, const std::string& cc) {
    Workspace ws = Workspace::Load(files);
    Expect(ws.grammars == 1 && ws.models.size() == 1,
           "wf expects one grammar and one model");
    Model model = ws.MinimalModel(0);
    Expect(model.language == Language::kClassDiagram,
           "context conditions exist only for class diagrams");
    auto ids = SplitList(cc);
    auto violations = ClassDiagramConditions().Check(
        model.ast, std::set<std::string>(ids.begin(), ids.end()));
    for (const CcViolation& v : violations) out_ << ToString(v) << "\n";
    Warnings(model);
    return violations.empty() ? kExitOk : kExitNegative;
  }

  int FmCheck(const std::vector<std::string>& files) {
    Workspace ws = Workspace::Load(files);
    Expect(ws.grammars == 0 && ws.models.empty(),
           "fm-check takes only .fd and .conf files");
    auto violations =
        ValidateConfigurations(ws.diagrams, MergeConfigurations(ws.configs));
    for (const FmViolation& v : violations) out_ << v.ToString() << "\n";
    if (violations.empty()) out_ << "OK\n";
    return violations.empty() ? kExitOk : kExitNegative;
  }

  int Generate(const std::vector<std::string>& files, const std::string& dir,
               const std::string& language) {
    Workspace ws = Workspace::Load(files);
    Expect(ws.grammars == 0 && ws.models.empty(),
           "generate takes only .fd and .conf files");
    std::optional<std::string> lang;
    if (!language.empty()) lang = language;
    auto docs = GenerateTheories(ws.diagrams, ws.configs, lang);
    fs::create_directories(dir);
    for (const TheoryDoc& doc : docs) {
      fs::path path = fs::path(dir) / doc.FileName();
      WriteFile(path, Render(doc));
      out_ << "wrote " << path.generic_string() << "\n";
    }
    return kExitOk;
  }

  SemanticsConfig Config(const Workspace& ws, const BoundsFlags& flags) {
    return SemanticsConfig::FromConfigurations(ws.diagrams, ws.configs,
                                               flags.ToBounds());
  }

  int Sem(const std::vector<std::string>& files, const BoundsFlags& flags,
          std::size_t witnesses) {
    Workspace ws = Workspace::Load(files);
    Expect(ws.models.size() == 1, "sem expects exactly one model");
    Model model = ws.MinimalModel(0);
    Warnings(model);
    out_ << SemReport(ComputeSem(model, Config(ws, flags)), witnesses);
    return kExitOk;
  }

  int Analyze(AnalysisKind kind, const std::vector<std::string>& files,
              const BoundsFlags& flags) {
    Workspace ws = Workspace::Load(files);
    std::vector<Model> models;
    for (std::size_t i = 0; i < ws.models.size(); ++i) {
      models.push_back(ws.MinimalModel(i));
      Warnings(models.back());
    }
    SemanticsConfig config = Config(ws, flags);
    AnalysisVerdict v;
    if (kind == AnalysisKind::kConsistent) {
      Expect(!models.empty(), "consistent expects at least one model");
      v = CheckConsistency(models, config);
    } else {
      Expect(models.size() == 2, std::string(ToString(kind)) +
                                     " expects exactly two models");
      Expect(models[0].language == models[1].language,
             "both models must belong to the same language");
      v = kind == AnalysisKind::kRefine
              ? CheckRefinement(models[0], models[1], config)
              : CheckEquivalence(models[0], models[1], config);
    }
    out_ << Report(v);
    return v.holds ? kExitOk : kExitNegative;
  }

 private:
  std::ostream& out_;
  std::ostream& err_;
  bool color_;
};

// Errors in the artifact a command inspects are its verdict; errors in the
// inputs of a semantic command are file errors.
int ExitFor(const Error& e, bool inspects_inputs) {
  switch (e.kind()) {
    case ErrorKind::kIo:
      return kExitUsage;
    case ErrorKind::kConfiguration:
    case ErrorKind::kNameConvention:
    case ErrorKind::kUnboundFunction:
      return kExitNegative;
    default:
      return inspects_inputs ? kExitNegative : kExitUsage;
  }
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err, bool color) {
  CLI::App app{"Language definitions with configurable semantics", "vlang"};
  app.require_subcommand(1);

  std::string file;
  auto* check = app.add_subcommand(
      "check-grammar", "Parse a grammar and print its abstract-syntax schema");
  check->add_option("grammar", file, "Grammar file (.mclang)")->required();

  std::vector<std::string> files;
  bool minimal = false;
  auto* parse =
      app.add_subcommand("parse", "Parse a model and print its syntax tree");
  parse->add_option("files", files, "Grammar and model file")->required();
  parse->add_flag("--minimal", minimal, "Desugar to minimal abstract syntax");

  std::string cc;
  auto* wf = app.add_subcommand("wf", "Check context conditions of a model");
  wf->add_option("files", files, "Grammar and model file")->required();
  wf->add_option("--cc", cc,
                 "Comma-separated optional context conditions to activate");

  auto* fm = app.add_subcommand(
      "fm-check", "Merge configurations and validate them against diagrams");
  fm->add_option("files", files, "Feature diagrams and configurations")
      ->required();

  std::string out_dir, language;
  auto* gen = app.add_subcommand("generate", "Write composed theory documents");
  gen->add_option("files", files, "Feature diagrams and configurations")
      ->required();
  gen->add_option("--out", out_dir, "Output directory")->required();
  gen->add_option("--language", language,
                  "Language name of the mapping theory (default: derived "
                  "from the variation point's theory)");

  BoundsFlags bounds;
  std::size_t witnesses = 0;
  auto* sem = app.add_subcommand(
      "sem", "Count the semantics of a model within bounds");
  sem->add_option("files", files,
                  "Grammar, model, feature diagrams and configurations")
      ->required();
  bounds.Add(sem);
  sem->add_option("--witnesses", witnesses, "Members to print")
      ->capture_default_str();

  auto* analyze = app.add_subcommand("analyze", "Run a bounded analysis");
  analyze->require_subcommand(1);
  std::map<CLI::App*, AnalysisKind> kinds;
  for (auto [name, kind, help] :
       {std::tuple{"refine", AnalysisKind::kRefine,
                   "Does the first model refine the second?"},
        std::tuple{"consistent", AnalysisKind::kConsistent,
                   "Do the models share a system?"},
        std::tuple{"equiv", AnalysisKind::kEquiv,
                   "Do two models have the same semantics?"}}) {
    auto* sub = analyze->add_subcommand(name, help);
    sub->add_option("files", files,
                    "Grammars, models, feature diagrams and configurations")
        ->required();
    bounds.Add(sub);
    kinds[sub] = kind;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Runner run(out, err, color);
  bool inspects_inputs = false;
  try {
    if (check->parsed()) {
      inspects_inputs = true;
      return run.CheckGrammar(file);
    }
    if (parse->parsed()) {
      inspects_inputs = true;
      return run.Parse(files, minimal);
    }
    if (wf->parsed()) {
      inspects_inputs = true;
      return run.Wf(files, cc);
    }
    if (fm->parsed()) return run.FmCheck(files);
    if (gen->parsed()) return run.Generate(files, out_dir, language);
    if (sem->parsed()) return run.Sem(files, bounds, witnesses);
    for (auto& [sub, kind] : kinds) {
      if (sub->parsed()) return run.Analyze(kind, files, bounds);
    }
  } catch (const UsageError& e) {
    run.Diag("error", e.what());
    return kExitUsage;
  } catch (const Error& e) {
    run.Diag("error", e.what());
    return ExitFor(e, inspects_inputs);
  } catch (const fs::filesystem_error& e) {
    run.Diag("error", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace vlang::cli
