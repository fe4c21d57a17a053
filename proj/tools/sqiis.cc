// Copyright 2026 The sqiis Authors.
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

// sqiis: command-line front end for the short-query intent engine.
//
//   sqiis --seed-config DIR
//   sqiis tag "restaurant in andheri"
//   sqiis classify "Chinese restaurant in Andheri"
//   sqiis gen-rules --mode system-generated --weights W --out R
//   sqiis enumerate
//   sqiis evaluate --sizes 1..6 --tau 0.6
//
// Exit codes: 0 success, 1 config/validation failure, 2 bad query,
// 3 no domain identified.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "sqiis/classifier.h"
#include "sqiis/error.h"
#include "sqiis/eval.h"
#include "sqiis/exclusion_set.h"
#include "sqiis/lexicon.h"
#include "sqiis/reference_config.h"
#include "sqiis/registry.h"
#include "sqiis/rulebase.h"
#include "sqiis/rulegen.h"
#include "sqiis/tagger.h"
#include "sqiis/text_util.h"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace sqiis {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitBadQuery = 2;
constexpr int kExitNoDomain = 3;

struct EngineConfig {
  std::string registry_path;
  std::string lexicon_path;
  std::string rulebase_path;
  std::string weights_path;
  std::string exclusions_path;
  size_t cap = kDefaultCandidateCap;
  std::string format = "table";
  std::string out_path;
};

// Flag value, else $SQIIS_CONFIG_DIR/<default_name>, else empty.
std::string Resolve(const std::string &flag, std::string_view default_name) {
  if (!flag.empty()) return flag;
  if (const char *root = std::getenv("SQIIS_CONFIG_DIR"); root && *root) {
    return (fs::path(root) / default_name).string();
  }
  return {};
}

std::string Require(const std::string &flag, std::string_view default_name,
                    std::string_view option) {
  std::string path = Resolve(flag, default_name);
  if (path.empty()) {
    throw Error(ErrorCode::kMalformedConfig,
                fmt::format("{} is required (or set SQIIS_CONFIG_DIR)",
                            option));
  }
  return path;
}

Registries LoadRegistriesFrom(const EngineConfig &cfg) {
  return LoadRegistries(
      ReadFile(Require(cfg.registry_path, kRegistryFile, "--registry")));
}

void Emit(const EngineConfig &cfg, const std::string &text) {
  if (cfg.out_path.empty()) {
    std::cout << text;
  } else {
    WriteFileAtomic(cfg.out_path, text);
  }
}

json TagsJson(const TagSet &tags, const TagRegistry &registry) {
  json out = json::array();
  for (size_t p : tags.positions()) out.push_back(registry.id(p));
  return out;
}

json ConfidenceJson(const ConfidenceVector &c, const DomainRegistry &domains) {
  json out = json::object();
  for (size_t d = 0; d < c.size(); ++d) out[domains.id(d)] = c[d];
  return out;
}

std::string TagList(const TagSet &tags, const TagRegistry &registry) {
  std::string s = tags.ToString(registry);
  if (s.empty()) return "-";
  for (char &c : s) {
    if (c == '+') c = ',';
  }
  return s;
}

json TaggedQueryJson(const TaggedQuery &tq, const TagRegistry &tags) {
  json tokens = json::array();
  for (const TaggedToken &t : tq.tokens) {
    tokens.push_back({{"surface", t.surface},
                      {"start", t.start_word},
                      {"words", t.word_count},
                      {"tags", TagsJson(t.tags, tags)}});
  }
  return {{"query", tq.raw}, {"tokens", tokens}};
}

int CmdTag(const EngineConfig &cfg, const std::string &query) {
  Registries reg = LoadRegistriesFrom(cfg);
  LexiconSet lex = LoadLexicons(
      reg.tags,
      ReadFile(Require(cfg.lexicon_path, kLexiconFile, "--lexicons")));
  TaggedQuery tq = TokenizeAndTag(query, lex);

  if (cfg.format == "structured") {
    Emit(cfg, TaggedQueryJson(tq, reg.tags).dump(2) + "\n");
    return kExitOk;
  }
  std::string out = "token\tstart\twords\ttags\n";
  for (const TaggedToken &t : tq.tokens) {
    out += fmt::format("{}\t{}\t{}\t{}\n", t.surface, t.start_word,
                       t.word_count, TagList(t.tags, reg.tags));
  }
  Emit(cfg, out);
  return kExitOk;
}

int CmdClassify(const EngineConfig &cfg, const std::string &query,
                bool explain) {
  Registries reg = LoadRegistriesFrom(cfg);
  LexiconSet lex = LoadLexicons(
      reg.tags,
      ReadFile(Require(cfg.lexicon_path, kLexiconFile, "--lexicons")));
  RuleBase rb = LoadRuleBase(
      reg, ReadFile(Require(cfg.rulebase_path, kHandcraftedRuleBaseFile,
                            "--rulebase")));
  ClassificationResult r = Classify(query, lex, rb, cfg.cap);

  if (cfg.format == "structured") {
    json out = {{"tagged", TaggedQueryJson(r.tagged, reg.tags)}};
    if (r.choice) {
      out["domain"] = reg.domains.id(r.choice->domain);
      out["confidence"] = r.choice->confidence;
      out["combination"] = TagsJson(r.fired_combination, reg.tags);
    } else {
      out["domain"] = std::string(kNoDomainLabel);
      out["reason"] = std::string(NoDomainReasonName(r.reason));
    }
    json candidates = json::array();
    for (const CandidateResult &c : r.candidates) {
      json item = {{"combination", TagsJson(c.combination, reg.tags)}};
      item["fired"] = c.fired ? ConfidenceJson(*c.fired, reg.domains)
                              : json(nullptr);
      candidates.push_back(std::move(item));
    }
    out["candidates"] = std::move(candidates);
    Emit(cfg, out.dump(2) + "\n");
  } else {
    std::string out;
    if (r.choice) {
      out += fmt::format("domain\t{}\n", reg.domains.id(r.choice->domain));
      out += fmt::format("confidence\t{:.6f}\n", r.choice->confidence);
      out += fmt::format("combination\t{}\n",
                         r.fired_combination.ToString(reg.tags));
    } else {
      out += fmt::format("domain\t{}\n", kNoDomainLabel);
      out += fmt::format("reason\t{}\n", NoDomainReasonName(r.reason));
    }
    if (explain) {
      for (const CandidateResult &c : r.candidates) {
        std::string fired = "no-rule";
        if (c.fired) {
          fired.clear();
          for (size_t d = 0; d < c.fired->size(); ++d) {
            if (d) fired += ' ';
            fired += fmt::format("{}:{:.6f}", reg.domains.id(d), (*c.fired)[d]);
          }
        }
        out += fmt::format("candidate\t{}\t{}\n",
                           c.combination.ToString(reg.tags), fired);
      }
    }
    Emit(cfg, out);
  }
  return r.choice ? kExitOk : kExitNoDomain;
}

ExclusionSet LoadOptionalExclusions(const EngineConfig &cfg,
                                    const Registries &reg) {
  // Only an explicit flag; the config-dir default would silently change
  // the rule count.
  if (cfg.exclusions_path.empty()) return {};
  return LoadExclusions(reg.tags, ReadFile(cfg.exclusions_path));
}

int CmdGenRules(const EngineConfig &cfg, const std::string &mode,
                const std::string &labels_path) {
  Registries reg = LoadRegistriesFrom(cfg);
  std::string out;
  if (mode == "system-generated") {
    WeightMatrix w = LoadWeights(
        reg, ReadFile(Require(cfg.weights_path, kWeightsFile, "--weights")));
    RuleBase rb = GenerateRuleBase(w, LoadOptionalExclusions(cfg, reg));
    out = SerializeRuleBase(reg, rb);
  } else if (mode == "scaffold") {
    out = ScaffoldLabelSheet(reg, LoadOptionalExclusions(cfg, reg));
  } else if (mode == "compile") {
    LabelSheet sheet = LoadLabelSheet(
        reg, ReadFile(Require(labels_path, kLabelsFile, "--labels")));
    out = SerializeRuleBase(reg, CompileHandcrafted(reg, sheet));
  } else {
    throw Error(ErrorCode::kMalformedConfig,
                fmt::format("unknown mode '{}'", mode));
  }
  Emit(cfg, out);
  return kExitOk;
}

int CmdEnumerate(const EngineConfig &cfg) {
  Registries reg = LoadRegistriesFrom(cfg);
  ExclusionSet ex = LoadOptionalExclusions(cfg, reg);
  std::vector<TagSet> all = EnumerateCombinations(reg.tags.size());

  if (cfg.format == "structured") {
    json rows = json::array();
    for (const TagSet &q : all) {
      rows.push_back({{"bits", q.ToBitString()},
                      {"tags", TagsJson(q, reg.tags)},
                      {"valid", IsValidCombination(q, ex)}});
    }
    Emit(cfg, json{{"count", all.size()}, {"combinations", rows}}.dump(2) +
                  "\n");
    return kExitOk;
  }
  std::string out;
  for (const TagSet &q : all) {
    out += fmt::format("{}\t{}\t{}\n", q.ToBitString(), q.ToString(reg.tags),
                       IsValidCombination(q, ex) ? "valid" : "excluded");
  }
  Emit(cfg, out);
  return kExitOk;
}

std::pair<size_t, size_t> ParseSizes(const std::string &range, size_t n) {
  if (range.empty()) return {1, n > 1 ? n - 1 : 1};
  size_t dots = range.find("..");
  try {
    if (dots == std::string::npos) {
      size_t v = std::stoul(range);
      return {v, v};
    }
    return {std::stoul(range.substr(0, dots)), std::stoul(range.substr(dots + 2))};
  } catch (const std::exception &) {
    throw Error(ErrorCode::kMalformedConfig,
                fmt::format("--sizes expects MIN..MAX, got '{}'", range));
  }
}

json ReportJson(const EvalReport &report, const std::vector<double> &taus) {
  json out = {{"tag_count", report.tag_count},
              {"size_min", report.size_min},
              {"size_max", report.size_max},
              {"combinations_considered", report.combinations_considered},
              {"originals_evaluated", report.originals_evaluated},
              {"total", report.total()},
              {"c2", report.CountOf(OutcomeClass::kC2)}};
  for (OutcomeClass c : {OutcomeClass::kC0, OutcomeClass::kC1}) {
    json rows = json::array();
    for (const HistogramRow &row : CumulativeTable(report, c)) {
      rows.push_back({{"distance", fmt::format("{:.4f}", row.distance())},
                      {"cases", row.cases},
                      {"cumulative", row.cumulative}});
    }
    out["tables"][std::string(OutcomeClassName(c))] = rows;
  }
  json thresholds = json::array();
  for (double tau : taus) {
    thresholds.push_back(
        {{"tau", tau},
         {"C0", ThresholdCount(report, OutcomeClass::kC0, tau)},
         {"C1", ThresholdCount(report, OutcomeClass::kC1, tau)}});
  }
  out["thresholds"] = thresholds;
  return out;
}

int CmdEvaluate(const EngineConfig &cfg, const std::string &sizes,
                const std::vector<double> &taus, unsigned threads,
                const std::string &plot_path) {
  Registries reg = LoadRegistriesFrom(cfg);
  RuleBase rb = LoadRuleBase(
      reg, ReadFile(Require(cfg.rulebase_path, kHandcraftedRuleBaseFile,
                            "--rulebase")));
  auto [lo, hi] = ParseSizes(sizes, reg.tags.size());
  for (double tau : taus) {
    if (!(tau >= 0.0)) {
      throw Error(ErrorCode::kRangeError, "--tau values must be >= 0");
    }
  }
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  EvalReport report = RunEvaluation(rb, reg.tags.size(), lo, hi, threads);

  if (!plot_path.empty()) WriteFileAtomic(plot_path, FormatPlotData(report));
  if (cfg.format == "structured") {
    Emit(cfg, ReportJson(report, taus).dump(2) + "\n");
  } else {
    Emit(cfg, FormatReport(report, taus));
  }
  return kExitOk;
}

void AddConfigFlags(CLI::App *cmd, EngineConfig &cfg, bool lexicons,
                    bool rulebase) {
  cmd->add_option("--registry", cfg.registry_path, "Registry file");
  if (lexicons) cmd->add_option("--lexicons", cfg.lexicon_path, "Lexicon file");
  if (rulebase) cmd->add_option("--rulebase", cfg.rulebase_path, "Rule base");
  cmd->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"table", "structured"}));
  cmd->add_option("--out", cfg.out_path, "Write output to this path");
}

int Run(int argc, char **argv) {
  CLI::App app{"Short-query intent identification engine"};
  app.require_subcommand(0, 1);

  std::string seed_dir;
  app.add_option("--seed-config", seed_dir,
                 "Write the reference configuration into DIR");

  EngineConfig cfg;
  std::string query;
  bool explain = false;
  std::string mode;
  std::string labels_path;
  std::string sizes;
  std::vector<double> taus;
  unsigned threads = 1;
  std::string plot_path;

  CLI::App *tag = app.add_subcommand("tag", "Tokenize and tag a query");
  AddConfigFlags(tag, cfg, true, false);
  tag->add_option("query", query, "Query text")->required();

  CLI::App *classify = app.add_subcommand("classify", "Identify the domain");
  AddConfigFlags(classify, cfg, true, true);
  classify->add_option("--cap", cfg.cap, "Candidate tag-set cap")
      ->check(CLI::PositiveNumber);
  classify->add_flag("--explain", explain, "Print every candidate");
  classify->add_option("query", query, "Query text")->required();

  CLI::App *gen = app.add_subcommand("gen-rules", "Build a rule base");
  AddConfigFlags(gen, cfg, false, false);
  gen->add_option("--mode", mode, "system-generated | scaffold | compile")
      ->required()
      ->check(CLI::IsMember({"system-generated", "scaffold", "compile"}));
  gen->add_option("--weights", cfg.weights_path, "Weight matrix file");
  gen->add_option("--exclusions", cfg.exclusions_path, "Exclusion pairs");
  gen->add_option("--labels", labels_path, "Filled label sheet (compile)");

  CLI::App *enumerate =
      app.add_subcommand("enumerate", "List all tag combinations");
  AddConfigFlags(enumerate, cfg, false, false);
  enumerate->add_option("--exclusions", cfg.exclusions_path,
                        "Mark combinations holding an excluded pair");

  CLI::App *evaluate =
      app.add_subcommand("evaluate", "Run the tag-perturbation evaluation");
  AddConfigFlags(evaluate, cfg, false, true);
  evaluate->add_option("--sizes", sizes, "Combination sizes MIN..MAX");
  evaluate->add_option("--tau", taus, "Distance thresholds")
      ->delimiter(',');
  evaluate->add_option("--threads", threads, "Worker threads (0 = all)");
  evaluate->add_option("--plot-data", plot_path,
                       "Write cumulative curve columns to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (!seed_dir.empty()) {
      SeedReferenceConfig(seed_dir);
      if (app.get_subcommands().empty()) return kExitOk;
    }
    if (*tag) return CmdTag(cfg, query);
    if (*classify) return CmdClassify(cfg, query, explain);
    if (*gen) return CmdGenRules(cfg, mode, labels_path);
    if (*enumerate) return CmdEnumerate(cfg);
    if (*evaluate) {
      if (taus.empty()) taus.push_back(0.6);
      return CmdEvaluate(cfg, sizes, taus, threads, plot_path);
    }
    std::cerr << app.help();
    return kExitConfig;
  } catch (const Error &e) {
    std::cerr << "sqiis: " << e.what() << "\n";
    return e.code() == ErrorCode::kEmptyQuery ? kExitBadQuery : kExitConfig;
  } catch (const std::exception &e) {
    std::cerr << "sqiis: " << e.what() << "\n";
    return kExitConfig;
  }
}

}  // namespace
}  // namespace sqiis

int main(int argc, char **argv) { return sqiis::Run(argc, argv); }
