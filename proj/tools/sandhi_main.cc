// sandhi: join words, inspect the rule base, and run golden corpora.

#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "sandhi/alphabet.h"
#include "sandhi/corpus.h"
#include "sandhi/engine.h"
#include "sandhi/rulebase.h"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitVerify = 3;
constexpr int kExitCycle = 4;

struct Rules {
  std::string path;
  std::unique_ptr<sandhi::RuleSet> owned;

  const sandhi::RuleSet& get() {
    if (path.empty())
      if (const char* env = std::getenv("SANDHI_RULES"); env && *env) path = env;
    if (path.empty()) return sandhi::builtin_rules();
    if (!owned) owned = std::make_unique<sandhi::RuleSet>(sandhi::load_rules(path));
    return *owned;
  }
};

void print_trace(const sandhi::JoinTrace& trace) {
  for (const auto& s : trace.steps)
    std::cout << "# " << s.id.str() << ' ' << s.sutra << ' ' << sandhi::render(s.before)
              << " -> " << sandhi::render(s.after) << (s.swapped ? " (swapped)" : "")
              << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sandhi joiner driven by a table of rewrite equations"};
  app.require_subcommand(1);
  Rules rules;
  app.add_option("--rules", rules.path,
                 "Rule file (default: $SANDHI_RULES, else the built-in equations)");

  std::string left, right;
  bool trace = false, variants = false, internal = false, finalize = false;
  auto* join = app.add_subcommand("join", "Join two words");
  join->add_option("LEFT", left, "Left word (IAST)")->required();
  join->add_option("RIGHT", right, "Right word (IAST)")->required();
  join->add_flag("--trace", trace, "Print each rule application");
  join->add_flag("--variants", variants, "List every optional outcome");
  join->add_flag("--internal", internal, "Word-internal junction");
  join->add_flag("--finalize", finalize, "Also apply word-final rules to the result");

  std::string text;
  auto* tok = app.add_subcommand("tokenize", "Show letter codes for IAST text");
  tok->add_option("TEXT", text, "IAST text")->required();

  bool contexts = false;
  auto* table = app.add_subcommand("table", "Single-step result for every letter pair");
  table->add_flag("--contexts", contexts, "Add rows for declared u and w contexts");

  auto* counts = app.add_subcommand("verify-counts", "Compare expansion counts per sandhi type");

  std::string corpus_file;
  auto* corpus = app.add_subcommand("corpus", "Golden corpus tools");
  auto* corpus_run = corpus->add_subcommand("run", "Check a corpus file");
  corpus_run->add_option("FILE", corpus_file, "Corpus TSV")->required();
  corpus->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*tok) {
      std::cout << sandhi::join_codes(sandhi::tokenize(text), ' ') << '\n';
      return 0;
    }
    const sandhi::RuleSet& rs = rules.get();
    if (*join) {
      auto l = sandhi::tokenize(left);
      auto r = sandhi::tokenize(right);
      auto kind = internal ? sandhi::JunctionKind::kInternal : sandhi::JunctionKind::kExternal;
      if (variants) {
        for (auto& v : sandhi::join_variants(rs, l, r, kind)) {
          if (trace) print_trace(v.trace);
          std::string tags;
          for (const auto& t : v.tags) tags += (tags.empty() ? "" : " ") + t;
          std::cout << sandhi::detokenize(v.surface) << (tags.empty() ? "" : "\t" + tags)
                    << '\n';
        }
        return 0;
      }
      auto result = sandhi::join(rs, l, r, kind);
      if (trace) print_trace(result.trace);
      auto surface = result.surface;
      if (finalize) {
        auto fin = sandhi::finalize_pada(rs, surface);
        if (trace) print_trace(fin.trace);
        surface = fin.surface;
      }
      std::cout << sandhi::detokenize(surface) << '\n';
      return 0;
    }
    if (*table) {
      std::cout << sandhi::render_pair_table(sandhi::gen_pair_table(rs, contexts));
      return 0;
    }
    if (*counts) {
      auto report = sandhi::count_report(rs);
      std::cout << report.render();
      return report.ok() ? 0 : kExitVerify;
    }
    if (*corpus_run) {
      auto entries = sandhi::load_corpus(corpus_file);
      auto report = sandhi::run_corpus(rs, entries);
      std::cout << report.render();
      return report.ok() ? 0 : kExitVerify;
    }
  } catch (const sandhi::CycleError& e) {
    std::cerr << "sandhi: " << e.what() << '\n';
    return kExitCycle;
  } catch (const std::exception& e) {
    std::cerr << "sandhi: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
