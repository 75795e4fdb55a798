// Copyright 2026 The tempdrt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tempdrt/cli.h"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "tempdrt/compare.h"
#include "tempdrt/construct.h"
#include "tempdrt/errors.h"
#include "tempdrt/eval.h"
#include "tempdrt/fragment.h"
#include "tempdrt/model.h"
#include "tempdrt/render.h"
#include "tempdrt/suite.h"
#include "tempdrt/term.h"

namespace tempdrt {

namespace {

struct RunConfig {
  std::string strategy = "split";
  std::string text;
  std::string file;
  std::string model_path;
  int delta = 1;
  std::string often_threshold = "1/2";
  std::string output;
  bool explain = false;
  std::string expect;
  std::string filter;
};

// Thrown for flag combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Named verdicts such as {"split": true}; "error" entries are absent.
using Verdicts = std::map<std::string, bool>;

const char *Verdict(bool b) { return b ? "TRUE" : "FALSE"; }

std::vector<Strategy> Strategies(const std::string &name) {
  if (name == "baseline") return {Strategy::kBaseline};
  if (name == "split") return {Strategy::kSplit};
  return {Strategy::kSplit, Strategy::kBaseline};
}

std::string InputText(const RunConfig &cfg) {
  if (!cfg.file.empty()) {
    std::ifstream in(cfg.file);
    if (!in) throw Error("cannot open " + cfg.file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  if (cfg.text.empty()) throw UsageError("one of --text or --file is required");
  return cfg.text;
}

ConstructionOptions Construction(const RunConfig &cfg) {
  ConstructionOptions options;
  try {
    options.often_threshold = Rational::Parse(cfg.often_threshold);
  } catch (const Error &e) {
    throw UsageError(std::string("--often-threshold: ") + e.what());
  }
  return options;
}

TemporalModel Model(const RunConfig &cfg) {
  if (cfg.model_path.empty()) throw UsageError("--model is required");
  return LoadModel(cfg.model_path);
}

// "agree", or comma-separated name=true|false pairs.
std::optional<std::string> CheckExpect(const std::string &expect,
                                       const Verdicts &verdicts) {
  if (expect.empty()) return std::nullopt;
  if (ToLower(expect) == "agree") {
    std::optional<bool> first;
    for (const auto &[name, value] : verdicts) {
      if (first && *first != value) return "verdicts disagree";
      first = value;
    }
    return std::nullopt;
  }
  std::stringstream in(expect);
  std::string item;
  while (std::getline(in, item, ',')) {
    size_t eq = item.find('=');
    std::string name = ToLower(item.substr(0, eq));
    std::string value =
        eq == std::string::npos ? "" : ToLower(item.substr(eq + 1));
    if (value != "true" && value != "false") {
      throw UsageError("--expect: bad item '" + item + "'");
    }
    auto it = verdicts.find(name);
    if (it == verdicts.end()) return "no " + name + " verdict";
    if (it->second != (value == "true")) {
      return name + " is " + Verdict(it->second) + ", expected " +
             Verdict(value == "true");
    }
  }
  return std::nullopt;
}

int Finish(const RunConfig &cfg, const Verdicts &verdicts, bool failed,
           std::ostream &err) {
  if (failed) return kExitError;
  if (auto mismatch = CheckExpect(cfg.expect, verdicts)) {
    err << "expectation failed: " << *mismatch << "\n";
    return kExitMismatch;
  }
  return kExitOk;
}

int RunEval(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  std::string text = InputText(cfg);
  ConstructionOptions options = Construction(cfg);
  TemporalModel model = Model(cfg);
  EvalConfig eval;
  eval.delta = cfg.delta;
  ParsedDiscourse discourse = ResolvePronouns(ParseText(text));
  Verdicts verdicts;
  bool failed = false;
  std::vector<std::string> parts, explanations;
  for (Strategy s : Strategies(cfg.strategy)) {
    std::string name = StrategyName(s);
    try {
      EvalResult r = Evaluate(Construct(s, discourse, options), model, eval);
      verdicts[name] = r.truth;
      parts.push_back(name + ": " + Verdict(r.truth));
      if (r.truth) {
        explanations.push_back(name + " witness: " +
                               FormatAssignment(r.witness, model));
      } else if (r.counterexample) {
        explanations.push_back(name + " counterexample: " +
                               FormatAssignment(*r.counterexample, model));
      } else {
        explanations.push_back(name + ": no embedding");
      }
    } catch (const ConstructionError &e) {
      failed = true;
      parts.push_back(name + ": ERROR");
      err << name << ": " << e.what() << "\n";
    }
  }
  for (size_t i = 0; i < parts.size(); ++i) {
    out << (i ? ", " : "") << parts[i];
  }
  out << "\n";
  if (cfg.explain) {
    for (const std::string &line : explanations) out << line << "\n";
  }
  return Finish(cfg, verdicts, failed, err);
}

int RunCompare(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  std::string text = InputText(cfg);
  CompareOptions options;
  options.construction = Construction(cfg);
  options.eval.delta = cfg.delta;
  TemporalModel model = Model(cfg);
  ComparisonReport report = CompareStrategies(text, model, options);
  Verdicts verdicts;
  std::vector<std::string> parts;
  for (const StrategyOutcome &o : report.outcomes) {
    std::string name = StrategyName(o.strategy);
    if (o.error) {
      parts.push_back(name + ": ERROR");
    } else {
      verdicts[name] = o.result.truth;
      parts.push_back(name + ": " + Verdict(o.result.truth));
    }
  }
  if (report.oracle) {
    verdicts["oracle"] = *report.oracle;
    parts.push_back(std::string("oracle: ") + Verdict(*report.oracle));
  }
  if (cfg.output == "verdict") {
    for (size_t i = 0; i < parts.size(); ++i) {
      out << (i ? ", " : "") << parts[i];
    }
    out << "\n";
  } else {
    out << FormatReport(report, model);
  }
  return Finish(cfg, verdicts, false, err);
}

int RunConstruct(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  if (cfg.output == "verdict") return RunEval(cfg, out, err);
  if (cfg.output == "report") return RunCompare(cfg, out, err);
  std::string text = InputText(cfg);
  ConstructionOptions options = Construction(cfg);
  ParsedDiscourse discourse = ResolvePronouns(ParseText(text));
  std::vector<Strategy> strategies = Strategies(cfg.strategy);
  bool failed = false;
  for (Strategy s : strategies) {
    if (strategies.size() > 1) out << "== " << StrategyName(s) << " ==\n";
    try {
      Drs d = Construct(s, discourse, options);
      out << (cfg.output == "term" ? Serialize(d) : RenderBox(d));
    } catch (const ConstructionError &e) {
      failed = true;
      out << "construction error\n";
      err << StrategyName(s) << ": " << e.what() << "\n";
    }
  }
  return failed ? kExitError : kExitOk;
}

int RunSuiteCommand(const RunConfig &cfg, std::ostream &out,
                    std::ostream &err) {
  std::vector<SuiteItem> items =
      RunSuite({DefaultFixturesDir(), cfg.filter});
  if (items.empty()) {
    err << "no suite item matches '" << cfg.filter << "'\n";
    return kExitUsage;
  }
  out << FormatSuite(items);
  return AllPassed(items) ? kExitOk : kExitError;
}

void AddInputOptions(CLI::App *cmd, RunConfig *cfg) {
  cmd->add_option("--strategy", cfg->strategy, "baseline, split or both")
      ->check(CLI::IsMember({"baseline", "split", "both"}));
  auto *text = cmd->add_option("--text", cfg->text, "discourse text");
  auto *file = cmd->add_option("--file", cfg->file, "file with the discourse");
  text->excludes(file);
  cmd->add_option("--often-threshold", cfg->often_threshold,
                  "proportion an often duplex must exceed (p/q or decimal)");
}

void AddModelOptions(CLI::App *cmd, RunConfig *cfg) {
  cmd->add_option("--model", cfg->model_path, "model file");
  cmd->add_option("--delta", cfg->delta,
                  "width of the just-before window, in time points")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--expect", cfg->expect,
                  "'agree' or pairs like split=true,baseline=false");
}

}  // namespace

int RunCli(const std::vector<std::string> &args, std::ostream &out,
           std::ostream &err) {
  RunConfig cfg;
  CLI::App app{"Temporal DRS construction and model checking", "tempdrt"};
  app.require_subcommand(1, 1);

  CLI::App *construct = app.add_subcommand("construct", "build and print a DRS");
  AddInputOptions(construct, &cfg);
  AddModelOptions(construct, &cfg);
  construct->add_option("--output", cfg.output, "box, term, verdict or report")
      ->check(CLI::IsMember({"box", "term", "verdict", "report"}));

  CLI::App *eval = app.add_subcommand("eval", "evaluate against a model");
  AddInputOptions(eval, &cfg);
  AddModelOptions(eval, &cfg);
  eval->add_flag("--explain", cfg.explain, "print witness or counterexample");

  CLI::App *compare =
      app.add_subcommand("compare", "compare both strategies and the oracle");
  AddInputOptions(compare, &cfg);
  AddModelOptions(compare, &cfg);
  compare->add_option("--output", cfg.output, "report or verdict")
      ->check(CLI::IsMember({"report", "verdict"}));

  CLI::App *suite = app.add_subcommand("suite", "run the built-in examples");
  suite->add_option("--filter", cfg.filter, "substring of item ids");

  std::vector<std::string> argv_storage = {"tempdrt"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char *> argv;
  for (std::string &a : argv_storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*construct) {
      if (cfg.output.empty()) cfg.output = "box";
      return RunConstruct(cfg, out, err);
    }
    if (*eval) {
      if (eval->count("--strategy") == 0) cfg.strategy = "both";
      return RunEval(cfg, out, err);
    }
    if (*compare) return RunCompare(cfg, out, err);
    return RunSuiteCommand(cfg, out, err);
  } catch (const UsageError &e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace tempdrt
