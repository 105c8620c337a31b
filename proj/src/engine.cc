#include "sandhi/engine.h"

#include <algorithm>
#include <optional>
#include <set>

namespace sandhi {

CodeSeq Junction::surface() const {
  CodeSeq out = left;
  out.insert(out.end(), right.begin(), right.end());
  return out;
}

std::string render(const Junction& j) {
  return detokenize(j.left) + "|" + detokenize(j.right);
}

std::vector<RuleId> JoinResult::applied() const {
  std::vector<RuleId> ids;
  for (const auto& s : trace.steps) ids.push_back(s.id);
  return ids;
}

namespace {

std::string cycle_message(const std::vector<RuleId>& rules) {
  std::string msg = "cascade did not settle within the step limit:";
  for (const auto& id : rules) msg += " " + id.str();
  return msg;
}

bool ends_with(const CodeSeq& word, const CodeSeq& suffix) {
  if (suffix.size() > word.size()) return false;
  return std::equal(suffix.rbegin(), suffix.rend(), word.rbegin(), same_letter);
}

bool starts_with(const CodeSeq& word, const CodeSeq& prefix) {
  if (prefix.size() > word.size()) return false;
  return std::equal(prefix.begin(), prefix.end(), word.begin(), same_letter);
}

bool any_of_seqs(const SeqConstraint& c, const CodeSeq& word, bool suffix) {
  return std::any_of(c.seqs.begin(), c.seqs.end(), [&](const CodeSeq& s) {
    return suffix ? ends_with(word, s) : starts_with(word, s);
  });
}

bool scope_allows(Scope scope, JunctionKind kind) {
  if (scope == Scope::kExternal) return kind == JunctionKind::kExternal;
  if (scope == Scope::kInternal) return kind == JunctionKind::kInternal;
  return true;
}

// Matches one clause with x/y taken from the given words. Swapped matching
// only happens for commutative rules, which carry no contexts.
bool clause_matches(const Clause& c, const CodeSeq& left, const CodeSeq& right) {
  if (left.empty()) return false;
  Code x = left.back();
  if (!c.x.matches(x)) return false;
  switch (c.y.kind) {
    case YSpec::Kind::kEnd:
      if (!right.empty()) return false;
      break;
    case YSpec::Kind::kSet:
      if (right.empty() || !c.y.set.matches(right.front())) return false;
      break;
    case YSpec::Kind::kRelative: {
      if (right.empty()) return false;
      int want = x + c.y.offset;
      if (want < 1 || want > kAvagraha) return false;
      if (!same_letter(right.front(), static_cast<Code>(want))) return false;
      break;
    }
  }
  if (c.u && (left.size() < 2 || !c.u->matches(left[left.size() - 2])))
    return false;
  if (c.w && (right.size() < 2 || !c.w->matches(right[1]))) return false;

  bool has_forbid = false;
  bool all_forbid_hit = true;
  if (c.left) {
    bool hit = any_of_seqs(*c.left, left, true);
    if (c.left->polarity == Polarity::kRequire) {
      if (!hit) return false;
    } else {
      has_forbid = true;
      all_forbid_hit = all_forbid_hit && hit;
    }
  }
  if (c.right) {
    bool hit = any_of_seqs(*c.right, right, false);
    if (c.right->polarity == Polarity::kRequire) {
      if (!hit) return false;
    } else {
      has_forbid = true;
      all_forbid_hit = all_forbid_hit && hit;
    }
  }
  return !(has_forbid && all_forbid_hit);
}

bool precedes(const MatchCandidate& a, const MatchCandidate& b) {
  if (a.specificity != b.specificity) return a.specificity > b.specificity;
  if (a.rule->id != b.rule->id) return a.rule->id < b.rule->id;
  if (a.swapped != b.swapped) return !a.swapped;
  return a.clause < b.clause;
}

}  // namespace

CycleError::CycleError(std::vector<RuleId> rules)
    : std::runtime_error(cycle_message(rules)), rules_(std::move(rules)) {}

std::vector<MatchCandidate> match(const RuleSet& rules, const Junction& j) {
  std::vector<MatchCandidate> out;
  for (const SandhiRule& rule : rules.rules()) {
    if (!scope_allows(rule.scope, j.kind)) continue;
    for (std::size_t ci = 0; ci < rule.clauses.size(); ++ci) {
      const Clause& c = rule.clauses[ci];
      for (bool swapped : {false, true}) {
        if (swapped && !rule.commutative) break;
        if (swapped && (j.left.empty() || j.right.empty())) break;
        CodeSeq sl{j.y()}, sr{j.x()};
        const CodeSeq& l = swapped ? sl : j.left;
        const CodeSeq& r = swapped ? sr : j.right;
        if (!clause_matches(c, l, r)) continue;
        Code x = l.back();
        Code y = r.empty() ? kBoundary : r.front();
        Code w = r.size() < 2 ? kBoundary : r[1];
        auto output = evaluate(rule.output, x, y, w);
        if (!output) continue;
        out.push_back({&rule, ci, swapped, c.specificity(), std::move(*output)});
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), precedes);
  return out;
}

Junction apply(const MatchCandidate& cand, const Junction& j) {
  Junction out = j;
  const CodeSeq& terms = cand.output;
  switch (cand.rule->output.action) {
    case Action::kReplaceBoth:
      out.left.pop_back();
      out.left.insert(out.left.end(), terms.begin(), terms.end());
      if (!out.right.empty()) out.right.erase(out.right.begin());
      break;
    case Action::kReplaceX:
      out.left.pop_back();
      out.left.insert(out.left.end(), terms.begin(), terms.end());
      break;
    case Action::kReplaceY:
      out.right.erase(out.right.begin());
      out.right.insert(out.right.begin(), terms.begin(), terms.end());
      break;
    case Action::kInsertBetween:
      out.left.insert(out.left.end(), terms.begin(), terms.end());
      break;
    case Action::kDropX:
      out.left.pop_back();
      break;
  }
  return out;
}

namespace {

struct CascadeState {
  Junction junction;
  std::set<RuleId> fired;
  std::set<RuleId> declined;
  std::optional<SutraNumber> latest_tripadi;
  std::optional<Junction> tripadi_snapshot;
  JoinTrace trace;
  std::vector<std::string> tags;
};

class Cascade {
 public:
  Cascade(const RuleSet& rules, const JoinOptions& options, bool branch_optional)
      : rules_(rules), options_(options), branch_(branch_optional) {}

  void run(CascadeState state, std::vector<Variant>& out) {
    while (true) {
      const Junction& j = state.junction;
      if (j.left.empty() || j.right.empty()) break;
      auto cand = next(state);
      if (!cand) break;
      if (state.trace.steps.size() >= options_.max_steps) {
        if (options_.fail_on_step_limit) {
          std::vector<RuleId> ids;
          for (const auto& s : state.trace.steps) ids.push_back(s.id);
          ids.push_back(cand->rule->id);
          throw CycleError(std::move(ids));
        }
        state.trace.termination = Termination::kStepLimit;
        emit(state, out);
        return;
      }
      if (branch_ && cand->rule->optional) {
        CascadeState declined = state;
        declined.declined.insert(cand->rule->id);
        declined.tags.push_back("-" + cand->rule->id.str());
        state.tags.push_back("+" + cand->rule->id.str());
        bool ends = step(state, *cand);
        if (ends)
          finish(state, out);
        else
          run(state, out);
        run(std::move(declined), out);
        return;
      }
      if (step(state, *cand)) break;
    }
    finish(state, out);
  }

 private:
  std::optional<MatchCandidate> next(const CascadeState& state) const {
    const Junction& j = state.junction;
    CodeSeq before = j.surface();
    std::optional<std::vector<MatchCandidate>> at_snapshot;
    for (MatchCandidate& c : match(rules_, j)) {
      const RuleId& id = c.rule->id;
      if (state.fired.count(id) || state.declined.count(id)) continue;
      if (same_letters(apply(c, j).surface(), before)) continue;
      if (state.latest_tripadi && c.rule->sutra_number < *state.latest_tripadi) {
        // Earlier rules do not see the effects of the tripādī.
        if (!at_snapshot) at_snapshot = match(rules_, *state.tripadi_snapshot);
        bool seen = std::any_of(at_snapshot->begin(), at_snapshot->end(),
                                [&](const MatchCandidate& s) { return s.rule->id == id; });
        if (!seen) continue;
      }
      return c;
    }
    return std::nullopt;
  }

  // Returns true when the cascade must stop after this step.
  bool step(CascadeState& state, const MatchCandidate& cand) const {
    TraceStep s;
    s.id = cand.rule->id;
    s.sutra = cand.rule->sutra;
    s.swapped = cand.swapped;
    s.before = state.junction;
    s.after = apply(cand, state.junction);
    state.junction = s.after;
    state.fired.insert(s.id);
    const SutraNumber& sn = cand.rule->sutra_number;
    if (sn.in_tripadi()) {
      if (!state.tripadi_snapshot) state.tripadi_snapshot = s.before;
      if (!state.latest_tripadi || *state.latest_tripadi < sn) state.latest_tripadi = sn;
    }
    state.trace.steps.push_back(std::move(s));
    return cand.rule->id.category == Category::kC1;
  }

  void finish(CascadeState& state, std::vector<Variant>& out) const {
    state.trace.termination =
        state.trace.steps.empty() ? Termination::kNoMatch : Termination::kFixpoint;
    emit(state, out);
  }

  static void emit(CascadeState& state, std::vector<Variant>& out) {
    CodeSeq surface = state.junction.surface();
    for (const Variant& v : out)
      if (v.surface == surface) return;
    out.push_back({std::move(surface), std::move(state.tags), std::move(state.trace)});
  }

  const RuleSet& rules_;
  const JoinOptions& options_;
  bool branch_;
};

std::vector<Variant> cascade(const RuleSet& rules, const CodeSeq& left,
                             const CodeSeq& right, JunctionKind kind,
                             const JoinOptions& options, bool branch) {
  CascadeState state;
  state.junction = Junction{left, right, kind};
  std::vector<Variant> out;
  Cascade(rules, options, branch).run(std::move(state), out);
  return out;
}

}  // namespace

JoinResult join(const RuleSet& rules, const CodeSeq& left, const CodeSeq& right,
                JunctionKind kind, const JoinOptions& options) {
  auto variants = cascade(rules, left, right, kind, options, false);
  return JoinResult{std::move(variants.front().surface),
                    std::move(variants.front().trace)};
}

std::vector<Variant> join_variants(const RuleSet& rules, const CodeSeq& left,
                                   const CodeSeq& right, JunctionKind kind,
                                   const JoinOptions& options) {
  return cascade(rules, left, right, kind, options, true);
}

JoinResult finalize_pada(const RuleSet& rules, const CodeSeq& word) {
  JoinResult result;
  Junction j{word, {}, JunctionKind::kExternal};
  result.surface = word;
  if (word.empty()) return result;
  for (const MatchCandidate& c : match(rules, j)) {
    if (!c.rule->finalizes()) continue;
    Junction after = apply(c, j);
    if (same_letters(after.surface(), word)) continue;
    result.trace.steps.push_back({c.rule->id, c.rule->sutra, false, j, after});
    result.surface = after.surface();
    result.trace.termination = Termination::kFixpoint;
    break;
  }
  return result;
}

}  // namespace sandhi
