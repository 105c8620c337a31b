#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "sandhi/rulebase.h"

namespace sandhi {

namespace {

struct Bound {
  Code code;
  CodeSeq context;
};

std::vector<Bound> bind_x(const Clause& c) {
  std::vector<Bound> out;
  if (c.left && c.left->polarity == Polarity::kRequire) {
    for (const auto& seq : c.left->seqs) out.push_back({seq.back(), seq});
  } else {
    for (Code x : c.x.codes()) out.push_back({x, {}});
  }
  return out;
}

std::vector<Bound> bind_y(const Clause& c, Code x) {
  std::vector<Bound> out;
  switch (c.y.kind) {
    case YSpec::Kind::kEnd:
      out.push_back({kBoundary, {}});
      break;
    case YSpec::Kind::kRelative: {
      int y = x + c.y.offset;
      if (y >= 1 && y <= kAvagraha) out.push_back({static_cast<Code>(y), {}});
      break;
    }
    case YSpec::Kind::kSet:
      if (c.right && c.right->polarity == Polarity::kRequire) {
        for (const auto& seq : c.right->seqs) out.push_back({seq.front(), seq});
      } else {
        for (Code y : c.y.set.codes()) out.push_back({y, {}});
      }
      break;
  }
  return out;
}

std::vector<Code> optional_codes(const std::optional<CodeSet>& s) {
  if (!s) return {kBoundary};
  return s->codes();
}

}  // namespace

std::vector<AtomicRule> expand(const SandhiRule& rule) {
  std::vector<AtomicRule> out;
  std::set<std::tuple<Code, Code, Code, Code>> seen_pairs;
  for (const Clause& c : rule.clauses) {
    std::vector<CodeSeq> forbid_left, forbid_right;
    if (c.left && c.left->polarity == Polarity::kForbid) forbid_left = c.left->seqs;
    if (c.right && c.right->polarity == Polarity::kForbid) forbid_right = c.right->seqs;
    for (const Bound& x : bind_x(c)) {
      for (const Bound& y : bind_y(c, x.code)) {
        for (Code u : optional_codes(c.u)) {
          for (Code w : optional_codes(c.w)) {
            if (rule.commutative) {
              auto key = std::make_tuple(std::min(x.code, y.code),
                                         std::max(x.code, y.code), u, w);
              if (!seen_pairs.insert(key).second) continue;
            }
            auto output = evaluate(rule.output, x.code, y.code, w);
            if (!output)
              throw RuleSemanticError(
                  rule.line, rule.id.str() + ": output leaves the alphabet for x=" +
                                 std::to_string(x.code) + " y=" + std::to_string(y.code));
            AtomicRule a;
            a.id = rule.id;
            a.x = x.code;
            a.y = y.code;
            a.end = c.y.kind == YSpec::Kind::kEnd;
            a.u = u;
            a.w = w;
            a.left_context = x.context;
            a.right_context = y.context;
            a.forbid_left = forbid_left;
            a.forbid_right = forbid_right;
            a.commutative = rule.commutative;
            a.scope = rule.scope;
            a.specificity = c.specificity();
            a.output = std::move(*output);
            out.push_back(std::move(a));
          }
        }
      }
    }
  }
  return out;
}

namespace {

struct Family {
  int type;
  const char* name;
  std::vector<std::pair<Category, int>> aphorisms;
  std::size_t expected;
  bool documented;
  const char* note;
};

const std::vector<Family>& families() {
  using C = Category;
  static const std::vector<Family> table = {
      {1, "yañādeśa", {{C::kC2, 1}}, 74, false, ""},
      {2, "ayāyāvāvādeśa", {{C::kC2, 2}}, 50, false, ""},
      {2, "ayāyāvāvādeśa", {{C::kC2, 3}}, 2, false, ""},
      {2, "ayāyāvāvādeśa", {{C::kC2, 4}}, 3, false, ""},
      {3, "guṇa", {{C::kC1, 1}}, 8, false, ""},
      {3, "guṇa", {{C::kC1, 2}}, 18, true,
       "a/ā before ṛ, ṝ, l̥ gives six pairs; the listed figure is not derivable"},
      {4, "vṛddhi", {{C::kC1, 3}}, 8, false, ""},
      {4, "vṛddhi", {{C::kC1, 4}, {C::kC1, 5}}, 18, true, "one per listed word context"},
      {4, "vṛddhi", {{C::kC1, 6}}, 10, true,
       "five prefixes before ṛ; the listed figure is not derivable"},
      {5, "pararūpa", {{C::kC1, 7}}, 10, false, ""},
      {6, "savarṇadīrgha", {{C::kC1, 8}}, 15, false, ""},
      {7, "pūrvarūpa", {{C::kC1, 9}}, 2, false, ""},
      {8, "avaṅādeśa", {{C::kC2, 5}}, 13, false, ""},
      {9, "tugāgama", {{C::kC4, 1}}, 13, false, ""},
      {9, "tugāgama", {{C::kC4, 3}}, 1, false, ""},
      {10, "jaṣṭva", {{C::kC2, 6}}, 23, false, ""},
      {10, "jaṣṭva", {{C::kC2, 20}}, 240, false, ""},
      {11, "satva", {{C::kC2, 7}}, 5, false, ""},
      {11, "satva", {{C::kC2, 8}}, 230, false, ""},
      {11, "satva", {{C::kC2, 9}}, 138, false, ""},
      {12, "anusvāra", {{C::kC2, 11}}, 34, false, ""},
      {12, "anusvāra", {{C::kC2, 12}}, 24, false, ""},
      {12, "anusvāra", {{C::kC2, 14}}, 1, false, ""},
      {12, "anusvāra", {{C::kC2, 13}}, 3, false, ""},
      {13, "dhuḍāgama", {{C::kC4, 2}}, 2, false, ""},
      {14, "ñamuḍāgama", {{C::kC4, 4}}, 195, false, ""},
      {15, "ścutva", {{C::kC2, 16}}, 36, false, ""},
      {15, "ścutva", {{C::kC3, 1}}, 31, false, ""},
      {16, "ṣṭutva", {{C::kC2, 17}}, 31, false, ""},
      {16, "ṣṭutva", {{C::kC3, 2}}, 6, false, ""},
      {17, "anunāsika", {{C::kC2, 18}, {C::kC2, 19}}, 160, false, ""},
      {18, "cartva", {{C::kC2, 21}}, 312, false, ""},
      {19, "parasavarṇa", {{C::kC2, 22}}, 29, false, ""},
      {19, "parasavarṇa", {{C::kC2, 23}, {C::kC2, 24}}, 5, false, ""},
      {20, "pūrvasavarṇa", {{C::kC3, 3}}, 20, false, ""},
      {21, "chatva", {{C::kC3, 4}}, 340, false, ""},
      {22, "visarga", {{C::kC2, 10}}, 13, false, ""},
      {22, "visarga", {{C::kC2, 15}}, 13, false, "no following-letter constraint"},
      {23, "svādi", {{C::kC5, 1}}, 66, true, "y over h..s"},
      {23, "svādi", {{C::kC5, 2}}, 13, false, ""},
      {23, "svādi", {{C::kC5, 3}}, 132, false, ""},
      {23, "svādi", {{C::kC5, 4}}, 33, false, ""},
      {23, "svādi", {{C::kC5, 5}}, 33, false, ""},
  };
  return table;
}

std::string_view status_name(RowStatus s) {
  switch (s) {
    case RowStatus::kExact: return "exact";
    case RowStatus::kDocumentedDeviation: return "deviation";
    case RowStatus::kUnexpected: return "UNEXPECTED";
  }
  return "";
}

}  // namespace

bool CountReport::ok() const {
  return std::none_of(rows.begin(), rows.end(), [](const CountRow& r) {
    return r.status == RowStatus::kUnexpected;
  });
}

std::string CountReport::render() const {
  std::ostringstream out;
  out << "#\ttype\tequations\texpected\tcomputed\tstatus\tnote\n";
  for (const CountRow& r : rows) {
    out << r.type_number << '\t' << r.sandhi_type << '\t' << r.equations << '\t'
        << r.expected << '\t' << r.computed << '\t' << status_name(r.status)
        << (r.documented ? " (documented)" : "")
        << '\t' << (r.note.empty() ? "-" : r.note) << '\n';
  }
  out << "equations " << equations << '\n';
  out << "TOTAL " << total_computed << " (expected " << total_expected << ")\n";
  return out.str();
}

CountReport count_report(const RuleSet& rules) {
  CountReport report;
  report.equations = rules.size();
  for (const Family& f : families()) {
    CountRow row;
    row.type_number = f.type;
    row.sandhi_type = f.name;
    row.expected = f.expected;
    row.documented = f.documented;
    row.note = f.note;
    for (const auto& [cat, aph] : f.aphorisms) {
      if (!row.equations.empty()) row.equations += '+';
      row.equations += "C" + std::to_string(static_cast<int>(cat)) + "." +
                       std::to_string(aph);
      for (const SandhiRule& r : rules.rules())
        if (r.id.category == cat && r.id.aphorism == aph)
          row.computed += expand(r).size();
    }
    if (row.computed == row.expected)
      row.status = RowStatus::kExact;
    else
      row.status = f.documented ? RowStatus::kDocumentedDeviation
                                : RowStatus::kUnexpected;
    report.total_computed += row.computed;
    report.total_expected += row.expected;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace sandhi
