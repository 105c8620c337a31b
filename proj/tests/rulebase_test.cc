#include "sandhi/rulebase.h"

#include <gtest/gtest.h>

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace sandhi {
namespace {

const SandhiRule& rule(const char* id) {
  const SandhiRule* r = builtin_rules().find(parse_rule_id(id));
  EXPECT_NE(r, nullptr) << id;
  return *r;
}

TEST(RuleIdTest, ParseAndPrint) {
  RuleId id = parse_rule_id("C2.16.1");
  EXPECT_EQ(id.category, Category::kC2);
  EXPECT_EQ(id.aphorism, 16);
  EXPECT_EQ(id.equation, 1);
  EXPECT_EQ(id.str(), "C2.16.1");
  EXPECT_LT(parse_rule_id("C1.9.1"), parse_rule_id("C2.1.1"));
  EXPECT_LT(parse_rule_id("C2.2.1"), parse_rule_id("C2.16.1"));
  EXPECT_THROW(parse_rule_id("C6.1.1"), std::invalid_argument);
  EXPECT_THROW(parse_rule_id("C2.1"), std::invalid_argument);
  EXPECT_THROW(parse_rule_id("C2.x.1"), std::invalid_argument);
}

TEST(SutraNumberTest, Tripadi) {
  EXPECT_TRUE((SutraNumber{8, 2, 39}.in_tripadi()));
  EXPECT_TRUE((SutraNumber{8, 4, 63}.in_tripadi()));
  EXPECT_FALSE((SutraNumber{8, 1, 1}.in_tripadi()));
  EXPECT_FALSE((SutraNumber{6, 1, 87}.in_tripadi()));
  EXPECT_LT((SutraNumber{6, 1, 101}), (SutraNumber{8, 3, 19}));
}

TEST(BuiltinRulesTest, HundredTenEquations) {
  const RuleSet& rs = builtin_rules();
  EXPECT_EQ(rs.size(), 110u);
  std::map<Category, int> per;
  for (const auto& r : rs.rules()) ++per[r.id.category];
  EXPECT_EQ(per[Category::kC1], 15);
  EXPECT_EQ(per[Category::kC2], 73);
  EXPECT_EQ(per[Category::kC3], 13);
  EXPECT_EQ(per[Category::kC4], 4);
  EXPECT_EQ(per[Category::kC5], 5);
}

TEST(BuiltinRulesTest, EmbeddedTextMatchesShippedFile) {
  std::ifstream in(SANDHI_SOURCE_DIR "/rules/panini110.rules", std::ios::binary);
  ASSERT_TRUE(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(builtin_rules_text(), buf.str());
  EXPECT_EQ(load_rules(SANDHI_SOURCE_DIR "/rules/panini110.rules").size(), 110u);
}

TEST(BuiltinRulesTest, Flags) {
  EXPECT_TRUE(rule("C1.8.1").commutative);
  EXPECT_TRUE(rule("C2.13.1").optional);
  EXPECT_TRUE(rule("C3.3.1").optional);
  EXPECT_FALSE(rule("C2.16.1").optional);
  EXPECT_EQ(rule("C1.9.1").scope, Scope::kExternal);
  EXPECT_EQ(rule("C2.12.1").scope, Scope::kInternal);
  EXPECT_EQ(rule("C2.1.1").scope, Scope::kBoth);
  EXPECT_TRUE(rule("C2.6.1").finalizes());
  EXPECT_FALSE(rule("C2.1.1").finalizes());
  EXPECT_EQ(rule("C3.4.1").sutra, "8.4.63");
  EXPECT_EQ(rule("C1.4.1").clauses.size(), 3u);
}

TEST(BuiltinRulesTest, Specificity) {
  EXPECT_EQ(rule("C2.7.1").clauses[0].specificity(), 2);
  EXPECT_EQ(rule("C2.11.1").clauses[0].specificity(), 0);  // forbids only
  EXPECT_EQ(rule("C4.4.1").clauses[0].specificity(), 1);
  EXPECT_EQ(rule("C3.4.1").clauses[0].specificity(), 1);
  EXPECT_EQ(rule("C2.21.1").clauses[0].specificity(), 0);
}

// Per-equation expansion sizes, derived independently by
// tests/oracle/derive_counts.py from the rule file.
TEST(ExpandTest, FrozenEquationSizes) {
  const std::map<std::string, std::size_t> want = {
      {"C1.1.1", 4},   {"C1.2.1", 4},   {"C1.2.2", 2},   {"C1.4.1", 6},
      {"C1.4.2", 5},   {"C1.5.1", 7},   {"C1.6.1", 5},   {"C1.7.1", 10},
      {"C1.8.1", 6},   {"C1.8.2", 3},   {"C1.8.3", 6},   {"C1.9.1", 2},
      {"C2.1.1", 22},  {"C2.9.1", 138}, {"C2.11.1", 34}, {"C2.13.1", 3},
      {"C2.17.1", 31}, {"C2.22.1", 2},  {"C3.4.1", 340}, {"C4.4.1", 195},
      {"C5.1.1", 66},
  };
  for (const auto& [id, n] : want) EXPECT_EQ(expand(rule(id.c_str())).size(), n) << id;
}

TEST(ExpandTest, FrozenCategoryTotals) {
  std::map<Category, std::size_t> per;
  std::size_t total = 0;
  for (const auto& r : builtin_rules().rules()) {
    std::size_t n = expand(r).size();
    per[r.id.category] += n;
    total += n;
  }
  EXPECT_EQ(per[Category::kC1], 72u);
  EXPECT_EQ(per[Category::kC2], 1439u);
  EXPECT_EQ(per[Category::kC3], 397u);
  EXPECT_EQ(per[Category::kC4], 211u);
  EXPECT_EQ(per[Category::kC5], 277u);
  EXPECT_EQ(total, 2396u);
}

TEST(ExpandTest, AtomsCarryContextsAndOutputs) {
  auto atoms = expand(rule("C2.7.1"));
  ASSERT_EQ(atoms.size(), 5u);
  for (const auto& a : atoms) {
    EXPECT_EQ(a.x, 20);
    EXPECT_EQ(a.y, 42);
    EXPECT_EQ(a.left_context, (CodeSeq{46, 1, 20}));
    EXPECT_EQ(a.output, (CodeSeq{48, 46}));
    EXPECT_EQ(a.specificity, 2);
  }
  auto fin = expand(rule("C2.6.7"));
  ASSERT_EQ(fin.size(), 1u);
  EXPECT_TRUE(fin[0].end);
  EXPECT_EQ(fin[0].output, CodeSeq{31});
  auto forbid = expand(rule("C2.9.1"));
  EXPECT_EQ(forbid[0].forbid_left.size(), 1u);
  EXPECT_TRUE(forbid[0].left_context.empty());
}

TEST(ExpandTest, CommutativePairsCountedOnce) {
  auto atoms = expand(rule("C1.8.3"));
  std::set<std::pair<Code, Code>> pairs;
  for (const auto& a : atoms) pairs.insert({std::min(a.x, a.y), std::max(a.x, a.y)});
  EXPECT_EQ(pairs.size(), atoms.size());
}

TEST(EvaluateTest, TermsAndRange) {
  OutputTemplate t{Action::kReplaceX, {{Term::Kind::kConst, 1}, {Term::Kind::kXPlus, 5}}};
  EXPECT_EQ(evaluate(t, 10, 3, 0), (CodeSeq{1, 15}));
  OutputTemplate w{Action::kReplaceX, {{Term::Kind::kConst, 48}, {Term::Kind::kCopyW, 0}}};
  EXPECT_EQ(evaluate(w, 20, 47, 16), (CodeSeq{48, 16}));
  EXPECT_EQ(evaluate(w, 20, 47, 0), std::nullopt);
  OutputTemplate big{Action::kReplaceX, {{Term::Kind::kYPlus, 10}}};
  EXPECT_EQ(evaluate(big, 1, 45, 0), std::nullopt);
}

TEST(CountReportTest, MatchesPublishedTable) {
  CountReport report = count_report(builtin_rules());
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.equations, 110u);
  EXPECT_EQ(report.total_expected, 2413u);
  EXPECT_EQ(report.total_computed, 2396u);
  int deviations = 0, documented = 0;
  for (const auto& row : report.rows) {
    if (row.documented) ++documented;
    if (row.status == RowStatus::kDocumentedDeviation) ++deviations;
    if (!row.documented) EXPECT_EQ(row.status, RowStatus::kExact) << row.equations;
  }
  EXPECT_EQ(documented, 4);
  EXPECT_EQ(deviations, 2);
  std::string text = report.render();
  EXPECT_NE(text.find("TOTAL 2396 (expected 2413)\n"), std::string::npos);
  EXPECT_EQ(text.substr(text.rfind('\n', text.size() - 2) + 1),
            "TOTAL 2396 (expected 2413)\n");
}

TEST(CountReportTest, MissingEquationIsUnexpected) {
  std::string text(builtin_rules_text());
  auto pos = text.find("C2 21 9 ");
  ASSERT_NE(pos, std::string::npos);
  text.insert(pos, "# ");
  CountReport report = count_report(parse_rules(text));
  EXPECT_FALSE(report.ok());
}

// -- parser --------------------------------------------------------------

int syntax_line(const std::string& text) {
  try {
    parse_rules(text);
  } catch (const RuleSyntaxError& e) {
    return e.line();
  }
  return -1;
}

int semantic_line(const std::string& text) {
  try {
    parse_rules(text);
  } catch (const RuleSemanticError& e) {
    return e.line();
  }
  return -1;
}

TEST(ParserTest, MinimalRule) {
  RuleSet rs = parse_rules("# comment\n\nC1 1 1 sutra=6.1.87 x={1,2} y={3,4} => #10\n");
  ASSERT_EQ(rs.size(), 1u);
  const SandhiRule& r = rs.rules()[0];
  EXPECT_EQ(r.line, 3);
  EXPECT_EQ(r.output.action, Action::kReplaceBoth);
  EXPECT_EQ(r.clauses[0].x, (CodeSet{1, 2}));
  EXPECT_EQ(r.sutra_number, (SutraNumber{6, 1, 87}));
}

TEST(ParserTest, ContinuationAndClasses) {
  RuleSet rs = parse_rules(
      "\n"
      "C2 1 1 sutra=6.1.77 x={3} \\\n"
      "    y=@vowels!{3,4} or x=5 y=20..23 => #15\n");
  ASSERT_EQ(rs.size(), 1u);
  EXPECT_EQ(rs.rules()[0].line, 2);
  EXPECT_EQ(rs.rules()[0].clauses.size(), 2u);
  EXPECT_EQ(rs.rules()[0].clauses[0].y.set.size(), 11u);
  EXPECT_EQ(rs.rules()[0].clauses[1].y.set, CodeSet::range(20, 23));
}

TEST(ParserTest, SyntaxErrorsReportLine) {
  EXPECT_EQ(syntax_line("\nC1 1 1 sutra=6.1.87 x={1} y={3}\n"), 2);
  EXPECT_EQ(syntax_line("C7 1 1 sutra=6.1.87 x={1} y={3} => #10\n"), 1);
  EXPECT_EQ(syntax_line("C1 1 1 sutra=6.1.87 x={1} y={3} q=2 => #10\n"), 1);
  EXPECT_EQ(syntax_line("C1 1 1 x={1} y={3} => #10\n"), 1);
  EXPECT_EQ(syntax_line("C1 1 1 sutra=6.1 x={1} y={3} => #10\n"), 1);
  EXPECT_EQ(syntax_line("C1 1 1 sutra=6.1.87 x={1} => #10\n"), 1);
  EXPECT_EQ(syntax_line("C1 1 1 sutra=6.1.87 x={1} y={3} => z\n"), 1);
  EXPECT_EQ(syntax_line("C1 1 1 sutra=6.1.87 x={1 y={3} => #10\n"), 1);
  EXPECT_EQ(syntax_line("C1 1 1 sutra=6.1.87 scope=all x={1} y={3} => #10\n"), 1);
}

TEST(ParserTest, SemanticErrorsReportLine) {
  const std::string ok = "C1 1 1 sutra=6.1.87 x={1} y={3} => #10\n";
  EXPECT_EQ(semantic_line(ok + "C1 1 2 sutra=6.1.87 x={1} y={60} => #10\n"), 2);
  EXPECT_EQ(semantic_line(ok + "C1 1 2 sutra=6.1.87 x=5..3 y={3} => #10\n"), 2);
  EXPECT_EQ(semantic_line(ok + "C1 1 1 sutra=6.1.87 x={1} y={5} => #11\n"), 2);
  EXPECT_EQ(semantic_line("C3 1 1 sutra=8.4.40 x={39} y={46} => #44,#44\n"), 1);
  EXPECT_EQ(semantic_line("C5 1 1 sutra=8.3.19 x={15} y={1} => #1\n"), 1);
  EXPECT_EQ(semantic_line("C2 1 1 sutra=8.3.19 x={15} y={1} => drop\n"), 1);
  EXPECT_EQ(semantic_line("C2 1 1 sutra=8.3.26 x={20} y={14} => #48,w\n"), 1);
  EXPECT_EQ(semantic_line("C2 1 1 sutra=8.3.5 x={20} y={42} X?=46+1+23 => #48\n"), 1);
  EXPECT_EQ(semantic_line("C2 1 1 sutra=8.3.5 x={20} y={42} Y?=41+1 => #48\n"), 1);
  EXPECT_EQ(semantic_line("C2 1 1 sutra=8.3.5 x={20} y={42} => x+40\n"), 1);
  EXPECT_EQ(semantic_line("C1 1 1 sutra=6.1.87 x={1} y=END => #10\n"), 1);
  EXPECT_EQ(semantic_line("C1 1 1 sutra=6.1.87 x=@diphthongs y={3} => #10\n"), 1);
  EXPECT_EQ(semantic_line("C1 1 1 sutra=6.1.87 x={51} y={3} => #10\n"), 1);
  EXPECT_EQ(semantic_line("C1 1 1 sutra=6.1.87 x={1} y={3} => #0\n"), 1);
}

TEST(ParserTest, AliasAcceptedInContexts) {
  RuleSet rs = parse_rules("C2 1 1 sutra=8.3.5 x={47} y={42} X?=1+14 => #48\n");
  EXPECT_EQ(rs.size(), 1u);
}

TEST(ParserTest, MissingFileThrows) {
  EXPECT_THROW(load_rules("/nonexistent/rules.txt"), std::runtime_error);
}

}  // namespace
}  // namespace sandhi
