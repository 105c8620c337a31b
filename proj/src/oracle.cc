#include <algorithm>
#include <sstream>

#include "sandhi/corpus.h"

namespace sandhi {

namespace {

bool same_seq_suffix(const CodeSeq& word, const CodeSeq& s) {
  if (s.size() > word.size()) return false;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (!same_letter(word[word.size() - s.size() + i], s[i])) return false;
  return true;
}

bool same_seq_prefix(const CodeSeq& word, const CodeSeq& s) {
  if (s.size() > word.size()) return false;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (!same_letter(word[i], s[i])) return false;
  return true;
}

bool fits(const AtomicRule& a, const CodeSeq& left, const CodeSeq& right) {
  if (left.empty() || !same_letter(left.back(), a.x)) return false;
  if (a.end) {
    if (!right.empty()) return false;
  } else if (right.empty() || !same_letter(right.front(), a.y)) {
    return false;
  }
  if (a.u != kBoundary &&
      (left.size() < 2 || !same_letter(left[left.size() - 2], a.u)))
    return false;
  if (a.w != kBoundary && (right.size() < 2 || !same_letter(right[1], a.w)))
    return false;
  if (!a.left_context.empty() && !same_seq_suffix(left, a.left_context)) return false;
  if (!a.right_context.empty() && !same_seq_prefix(right, a.right_context))
    return false;
  int forbids = 0, hits = 0;
  if (!a.forbid_left.empty()) {
    ++forbids;
    for (const auto& s : a.forbid_left)
      if (same_seq_suffix(left, s)) {
        ++hits;
        break;
      }
  }
  if (!a.forbid_right.empty()) {
    ++forbids;
    for (const auto& s : a.forbid_right)
      if (same_seq_prefix(right, s)) {
        ++hits;
        break;
      }
  }
  return forbids == 0 || hits < forbids;
}

CodeSeq rewrite(const AtomicRule& a, const CodeSeq& left, const CodeSeq& right) {
  CodeSeq out(left.begin(), left.end() - 1);
  CodeSeq tail(right.begin(), right.end());
  switch (a.id.category) {
    case Category::kC1:
      out.insert(out.end(), a.output.begin(), a.output.end());
      if (!tail.empty()) tail.erase(tail.begin());
      break;
    case Category::kC2:
      out.insert(out.end(), a.output.begin(), a.output.end());
      break;
    case Category::kC3:
      out.push_back(left.back());
      tail.front() = a.output.front();
      break;
    case Category::kC4:
      out.push_back(left.back());
      out.insert(out.end(), a.output.begin(), a.output.end());
      break;
    case Category::kC5:
      break;
  }
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

}  // namespace

Oracle::Oracle(const RuleSet& rules) {
  for (const SandhiRule& r : rules.rules()) {
    auto atoms = expand(r);
    atomics_.insert(atomics_.end(), atoms.begin(), atoms.end());
  }
  std::stable_sort(atomics_.begin(), atomics_.end(),
                   [](const AtomicRule& a, const AtomicRule& b) {
                     if (a.specificity != b.specificity) return a.specificity > b.specificity;
                     return a.id < b.id;
                   });
}

Oracle::Outcome Oracle::apply(const Junction& j) const {
  CodeSeq before = j.surface();
  for (const AtomicRule& a : atomics_) {
    if (a.scope == Scope::kExternal && j.kind != JunctionKind::kExternal) continue;
    if (a.scope == Scope::kInternal && j.kind != JunctionKind::kInternal) continue;
    CodeSeq after;
    if (fits(a, j.left, j.right)) {
      after = rewrite(a, j.left, j.right);
    } else if (a.commutative && !j.left.empty() && !j.right.empty() &&
               fits(a, {j.right.front()}, {j.left.back()})) {
      after = rewrite(a, j.left, j.right);
    } else {
      continue;
    }
    if (!same_letters(after, before)) return {after, a.id};
  }
  return {before, std::nullopt};
}

std::vector<Junction> pair_junctions(const RuleSet& rules, bool with_contexts) {
  std::vector<Junction> out;
  auto grid = [&](const CodeSeq& pre, const CodeSeq& post) {
    for (Code x = 1; x <= kAvagraha; ++x)
      for (Code y = 1; y <= kAvagraha; ++y) {
        Junction j;
        j.left = pre;
        j.left.push_back(x);
        j.right = {y};
        j.right.insert(j.right.end(), post.begin(), post.end());
        out.push_back(std::move(j));
      }
  };
  grid({}, {});
  if (!with_contexts) return out;
  CodeSet us, ws;
  for (const SandhiRule& r : rules.rules())
    for (const Clause& c : r.clauses) {
      if (c.u) us |= *c.u;
      if (c.w) ws |= *c.w;
    }
  for (Code u : us.codes()) grid({u}, {});
  for (Code w : ws.codes()) grid({}, {w});
  return out;
}

std::vector<PairRow> gen_pair_table(const RuleSet& rules, bool with_contexts) {
  JoinOptions single{1, false};
  std::vector<PairRow> rows;
  for (const Junction& j : pair_junctions(rules, with_contexts)) {
    JoinResult r = join(rules, j.left, j.right, j.kind, single);
    PairRow row{j.x(), j.y(), j.u(), j.w(), std::move(r.surface), std::nullopt};
    if (!r.trace.steps.empty()) row.rule = r.trace.steps.front().id;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string render_pair_table(const std::vector<PairRow>& rows) {
  std::ostringstream out;
  out << "x\ty\tu\tw\tsurface\trule_id\n";
  auto ctx = [](Code c) { return c == kBoundary ? std::string("-") : std::to_string(c); };
  for (const PairRow& r : rows) {
    out << int(r.x) << '\t' << int(r.y) << '\t' << ctx(r.u) << '\t' << ctx(r.w) << '\t'
        << join_codes(r.surface) << '\t' << (r.rule ? r.rule->str() : "none") << '\n';
  }
  return out.str();
}

}  // namespace sandhi
