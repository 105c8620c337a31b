#ifndef SANDHI_ENGINE_H_
#define SANDHI_ENGINE_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "sandhi/alphabet.h"
#include "sandhi/rulebase.h"

namespace sandhi {

enum class JunctionKind { kExternal, kInternal };

// The meeting point of two words (or a stem and a suffix). x is the last
// letter of left, y the first of right; u and w are their outer neighbours.
struct Junction {
  CodeSeq left;
  CodeSeq right;
  JunctionKind kind = JunctionKind::kExternal;

  Code x() const { return left.empty() ? kBoundary : left.back(); }
  Code y() const { return right.empty() ? kBoundary : right.front(); }
  Code u() const { return left.size() < 2 ? kBoundary : left[left.size() - 2]; }
  Code w() const { return right.size() < 2 ? kBoundary : right[1]; }
  CodeSeq surface() const;

  friend bool operator==(const Junction&, const Junction&) = default;
};

// "left|right" in IAST.
std::string render(const Junction& j);

struct MatchCandidate {
  const SandhiRule* rule = nullptr;
  std::size_t clause = 0;
  bool swapped = false;  // commutative rule matched with x and y exchanged
  int specificity = 0;
  CodeSeq output;        // evaluated terms
};

// Every rule clause matching the junction, best first: higher specificity,
// then C1 before C5, then aphorism and equation index.
std::vector<MatchCandidate> match(const RuleSet& rules, const Junction& j);

Junction apply(const MatchCandidate& candidate, const Junction& j);

struct TraceStep {
  RuleId id;
  std::string sutra;
  bool swapped = false;
  Junction before;
  Junction after;
};

enum class Termination {
  kNoMatch,    // nothing applied
  kFixpoint,   // at least one step, then nothing more to do
  kStepLimit,  // stopped with a change still pending
};

struct JoinTrace {
  std::vector<TraceStep> steps;
  Termination termination = Termination::kNoMatch;
};

struct JoinResult {
  CodeSeq surface;
  JoinTrace trace;

  std::vector<RuleId> applied() const;
};

struct JoinOptions {
  std::size_t max_steps = 8;
  // Throw CycleError instead of stopping at max_steps.
  bool fail_on_step_limit = true;
};

class CycleError : public std::runtime_error {
 public:
  explicit CycleError(std::vector<RuleId> rules);
  const std::vector<RuleId>& rules() const { return rules_; }

 private:
  std::vector<RuleId> rules_;
};

// Applies the cascade at the junction. Optional rules are applied.
JoinResult join(const RuleSet& rules, const CodeSeq& left, const CodeSeq& right,
                JunctionKind kind = JunctionKind::kExternal,
                const JoinOptions& options = {});

struct Variant {
  CodeSeq surface;
  std::vector<std::string> tags;  // "+C2.13.1" applied, "-C2.13.1" declined
  JoinTrace trace;
};

// Every outcome reachable by applying or declining each optional rule that
// comes up, deduplicated by surface. The first entry equals join().
std::vector<Variant> join_variants(const RuleSet& rules, const CodeSeq& left,
                                   const CodeSeq& right,
                                   JunctionKind kind = JunctionKind::kExternal,
                                   const JoinOptions& options = {});

// Word-final treatment: applies the best y=END rule, if any.
JoinResult finalize_pada(const RuleSet& rules, const CodeSeq& word);

}  // namespace sandhi

#endif  // SANDHI_ENGINE_H_
