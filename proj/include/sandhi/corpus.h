#ifndef SANDHI_CORPUS_H_
#define SANDHI_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sandhi/alphabet.h"
#include "sandhi/engine.h"
#include "sandhi/rulebase.h"

namespace sandhi {

enum class EntryKind { kExternal, kInternal, kFinal };

// One line of a golden corpus:
//   left  right  expected  rule-ids  kind  [variants]  [note]
// Rule ids are comma-separated ("-" for none), compared as a set.
// kind is ext, int or final; for final the right column is "-".
struct CorpusEntry {
  int line = 0;
  std::string left_text;
  std::string right_text;
  std::string expected_text;
  CodeSeq left;
  CodeSeq right;
  CodeSeq expected;
  std::vector<RuleId> rules;
  EntryKind kind = EntryKind::kExternal;
  std::vector<CodeSeq> variants;  // empty when the column is absent
  std::string note;
};

class CorpusError : public std::runtime_error {
 public:
  CorpusError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

std::vector<CorpusEntry> parse_corpus(std::string_view text);
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& path);

struct EntryResult {
  const CorpusEntry* entry = nullptr;
  bool passed = false;
  CodeSeq surface;
  std::vector<RuleId> rules;
  std::vector<CodeSeq> variants;
  std::string diff;  // empty on pass
};

struct CorpusReport {
  std::vector<EntryResult> results;
  std::size_t passed = 0;
  std::size_t failed = 0;

  bool ok() const { return failed == 0; }
  std::string render() const;
};

CorpusReport run_corpus(const RuleSet& rules, const std::vector<CorpusEntry>& entries);

// Reference implementation: a flat scan over the expanded equations in
// precedence order, applying the first one that changes the surface.
class Oracle {
 public:
  explicit Oracle(const RuleSet& rules);

  struct Outcome {
    CodeSeq surface;
    std::optional<RuleId> rule;
  };
  Outcome apply(const Junction& j) const;
  std::size_t size() const { return atomics_.size(); }

 private:
  std::vector<AtomicRule> atomics_;
};

struct PairRow {
  Code x = kBoundary;
  Code y = kBoundary;
  Code u = kBoundary;
  Code w = kBoundary;
  CodeSeq surface;
  std::optional<RuleId> rule;
};

// All letter pairs, plus (with contexts) every pair under each u and w
// value that some rule declares. Rows hold the single-step engine result.
std::vector<Junction> pair_junctions(const RuleSet& rules, bool with_contexts);
std::vector<PairRow> gen_pair_table(const RuleSet& rules, bool with_contexts);
std::string render_pair_table(const std::vector<PairRow>& rows);

}  // namespace sandhi

#endif  // SANDHI_CORPUS_H_
