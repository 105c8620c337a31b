#ifndef SANDHI_RULEBASE_H_
#define SANDHI_RULEBASE_H_

#include <compare>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sandhi/alphabet.h"

namespace sandhi {

enum class Category { kC1 = 1, kC2, kC3, kC4, kC5 };

enum class Scope { kBoth, kExternal, kInternal };

// What the category does with the evaluated terms.
enum class Action { kReplaceBoth, kReplaceX, kReplaceY, kInsertBetween, kDropX };

Action action_for(Category category);
std::string_view scope_name(Scope scope);

// Identifies the k-th equation of the j-th aphorism of a category.
struct RuleId {
  Category category = Category::kC1;
  int aphorism = 0;
  int equation = 0;

  std::string str() const;  // "C2.16.1"
  friend auto operator<=>(const RuleId&, const RuleId&) = default;
};

// Parses "C2.16.1". Throws std::invalid_argument.
RuleId parse_rule_id(std::string_view text);

// Pāṇinian sutra number a.b.c, ordered by position in the grammar.
struct SutraNumber {
  int chapter = 0;
  int quarter = 0;
  int number = 0;

  // The last three quarters of the eighth chapter, whose rules do not see
  // the effect of any rule that follows them.
  bool in_tripadi() const { return chapter == 8 && quarter >= 2; }
  std::string str() const;
  friend auto operator<=>(const SutraNumber&, const SutraNumber&) = default;
};

enum class Polarity { kRequire, kForbid };

// Word context: X-suffix on the left word or Y-prefix on the right word.
struct SeqConstraint {
  Polarity polarity = Polarity::kRequire;
  std::vector<CodeSeq> seqs;
};

// Condition on y: a letter set, the end-of-word marker, or y = x + offset.
struct YSpec {
  enum class Kind { kSet, kEnd, kRelative };
  Kind kind = Kind::kSet;
  CodeSet set;
  int offset = 0;
};

// One disjunct of a rule's domain.
struct Clause {
  CodeSet x;
  YSpec y;
  std::optional<CodeSet> u;
  std::optional<CodeSet> w;
  std::optional<SeqConstraint> left;   // X
  std::optional<SeqConstraint> right;  // Y

  // Required word contexts plus u/w constraints; forbid contexts add nothing.
  int specificity() const;
};

struct Term {
  enum class Kind { kConst, kXPlus, kYPlus, kCopyW };
  Kind kind = Kind::kConst;
  int value = 0;  // constant, or offset for kXPlus / kYPlus
};

struct OutputTemplate {
  Action action = Action::kReplaceBoth;
  std::vector<Term> terms;
};

// Evaluates terms for the given bindings. Returns nullopt when any term
// leaves 1..50 or refers to an absent w.
std::optional<CodeSeq> evaluate(const OutputTemplate& tmpl, Code x, Code y,
                                Code w);

// One specialized equation.
struct SandhiRule {
  RuleId id;
  std::string sutra;
  SutraNumber sutra_number;
  std::vector<Clause> clauses;
  bool commutative = false;
  bool optional = false;
  Scope scope = Scope::kBoth;
  OutputTemplate output;
  int line = 0;  // source line, 0 for rules built in code

  bool finalizes() const;  // every clause has y = END
};

class RuleSet {
 public:
  RuleSet() = default;
  RuleSet(std::vector<SandhiRule> rules, std::string source);

  const std::vector<SandhiRule>& rules() const { return rules_; }
  const std::string& source() const { return source_; }
  std::size_t size() const { return rules_.size(); }
  bool empty() const { return rules_.empty(); }
  const SandhiRule* find(const RuleId& id) const;

 private:
  std::vector<SandhiRule> rules_;
  std::string source_;
};

class RuleError : public std::runtime_error {
 public:
  RuleError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

class RuleSyntaxError : public RuleError {
 public:
  using RuleError::RuleError;
};

class RuleSemanticError : public RuleError {
 public:
  using RuleError::RuleError;
};

RuleSet parse_rules(std::string_view text, std::string source = "<memory>");
RuleSet load_rules(const std::filesystem::path& path);

// The shipped equations (rules/panini110.rules, compiled in).
const RuleSet& builtin_rules();
std::string_view builtin_rules_text();

// Fully instantiated rule: one (x, y, u, w, X, Y) tuple and its output.
// Absent u/w/y are kBoundary; absent word contexts are empty.
struct AtomicRule {
  RuleId id;
  Code x = kBoundary;
  Code y = kBoundary;  // kBoundary with `end` set means end of word
  bool end = false;
  Code u = kBoundary;
  Code w = kBoundary;
  CodeSeq left_context;
  CodeSeq right_context;
  std::vector<CodeSeq> forbid_left;
  std::vector<CodeSeq> forbid_right;
  bool commutative = false;
  Scope scope = Scope::kBoth;
  int specificity = 0;
  CodeSeq output;
};

std::vector<AtomicRule> expand(const SandhiRule& rule);

enum class RowStatus { kExact, kDocumentedDeviation, kUnexpected };

struct CountRow {
  int type_number = 0;
  std::string sandhi_type;
  std::string equations;  // "C1.4+C1.5"
  std::size_t expected = 0;
  std::size_t computed = 0;
  bool documented = false;  // known not to be reproducible from the equations
  std::string note;
  RowStatus status = RowStatus::kExact;
};

struct CountReport {
  std::vector<CountRow> rows;
  std::size_t equations = 0;
  std::size_t total_computed = 0;
  std::size_t total_expected = 0;

  // True when no row is kUnexpected.
  bool ok() const;
  std::string render() const;
};

CountReport count_report(const RuleSet& rules);

}  // namespace sandhi

#endif  // SANDHI_RULEBASE_H_
