#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "sandhi/rulebase.h"

namespace sandhi {

Action action_for(Category category) {
  switch (category) {
    case Category::kC1: return Action::kReplaceBoth;
    case Category::kC2: return Action::kReplaceX;
    case Category::kC3: return Action::kReplaceY;
    case Category::kC4: return Action::kInsertBetween;
    case Category::kC5: return Action::kDropX;
  }
  return Action::kReplaceBoth;
}

std::string_view scope_name(Scope scope) {
  switch (scope) {
    case Scope::kBoth: return "both";
    case Scope::kExternal: return "ext";
    case Scope::kInternal: return "int";
  }
  return "both";
}

std::string RuleId::str() const {
  return "C" + std::to_string(static_cast<int>(category)) + "." +
         std::to_string(aphorism) + "." + std::to_string(equation);
}

namespace {

std::optional<int> to_int(std::string_view s) {
  int value = 0;
  if (s.empty()) return std::nullopt;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

}  // namespace

RuleId parse_rule_id(std::string_view text) {
  auto parts = split(text, '.');
  if (parts.size() != 3 || parts[0].size() != 2 || parts[0][0] != 'C')
    throw std::invalid_argument("malformed rule id '" + std::string(text) + "'");
  auto cat = to_int(parts[0].substr(1));
  auto j = to_int(parts[1]);
  auto k = to_int(parts[2]);
  if (!cat || *cat < 1 || *cat > 5 || !j || *j < 1 || !k || *k < 1)
    throw std::invalid_argument("malformed rule id '" + std::string(text) + "'");
  return RuleId{static_cast<Category>(*cat), *j, *k};
}

std::string SutraNumber::str() const {
  return std::to_string(chapter) + "." + std::to_string(quarter) + "." +
         std::to_string(number);
}

int Clause::specificity() const {
  int n = 0;
  if (left && left->polarity == Polarity::kRequire) ++n;
  if (right && right->polarity == Polarity::kRequire) ++n;
  if (u) ++n;
  if (w) ++n;
  return n;
}

std::optional<CodeSeq> evaluate(const OutputTemplate& tmpl, Code x, Code y,
                                Code w) {
  CodeSeq out;
  out.reserve(tmpl.terms.size());
  for (const Term& t : tmpl.terms) {
    int v = 0;
    switch (t.kind) {
      case Term::Kind::kConst: v = t.value; break;
      case Term::Kind::kXPlus: v = x + t.value; break;
      case Term::Kind::kYPlus: v = y + t.value; break;
      case Term::Kind::kCopyW:
        if (w == kBoundary) return std::nullopt;
        v = w;
        break;
    }
    if (v < 1 || v > kAvagraha) return std::nullopt;
    out.push_back(static_cast<Code>(v));
  }
  return out;
}

bool SandhiRule::finalizes() const {
  return !clauses.empty() &&
         std::all_of(clauses.begin(), clauses.end(), [](const Clause& c) {
           return c.y.kind == YSpec::Kind::kEnd;
         });
}

RuleSet::RuleSet(std::vector<SandhiRule> rules, std::string source)
    : rules_(std::move(rules)), source_(std::move(source)) {}

const SandhiRule* RuleSet::find(const RuleId& id) const {
  for (const auto& r : rules_)
    if (r.id == id) return &r;
  return nullptr;
}

RuleError::RuleError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      line_(line) {}

namespace {

class LineParser {
 public:
  LineParser(std::string_view text, int line) : text_(text), line_(line) {}

  SandhiRule parse() {
    auto arrow = text_.find("=>");
    if (arrow == std::string_view::npos) syntax("missing '=>'");
    if (text_.find("=>", arrow + 2) != std::string_view::npos)
      syntax("more than one '=>'");

    std::vector<std::string_view> tokens = words(text_.substr(0, arrow));
    if (tokens.size() < 3) syntax("expected 'C<n> <aphorism> <equation>'");

    SandhiRule rule;
    rule.line = line_;
    rule.id = parse_id(tokens[0], tokens[1], tokens[2]);

    Clause clause;
    bool clause_open = false;
    bool have_sutra = false;
    for (std::size_t i = 3; i < tokens.size(); ++i) {
      std::string_view tok = tokens[i];
      if (tok == "or") {
        if (!clause_open) syntax("'or' without a preceding clause");
        finish_clause(rule, clause);
        clause = Clause{};
        clause_open = false;
        continue;
      }
      if (tok == "opt") {
        rule.optional = true;
        continue;
      }
      if (tok == "commut") {
        rule.commutative = true;
        continue;
      }
      auto eq = tok.find('=');
      if (eq == std::string_view::npos || eq == 0)
        syntax("unexpected token '" + std::string(tok) + "'");
      std::string_view key = tok.substr(0, eq);
      std::string_view value = tok.substr(eq + 1);
      if (value.empty()) syntax("empty value for '" + std::string(key) + "'");

      if (key == "sutra") {
        rule.sutra = std::string(value);
        rule.sutra_number = parse_sutra(value);
        have_sutra = true;
      } else if (key == "scope") {
        rule.scope = parse_scope(value);
      } else if (key == "x") {
        clause_open = true;
        if (has_x_) syntax("x given twice in one clause");
        clause.x = parse_set(value);
        has_x_ = true;
      } else if (key == "y") {
        clause_open = true;
        if (has_y_) syntax("y given twice in one clause");
        clause.y = parse_y(value);
        has_y_ = true;
      } else if (key == "u") {
        clause_open = true;
        if (clause.u) syntax("u given twice in one clause");
        clause.u = parse_set(value);
      } else if (key == "w") {
        clause_open = true;
        if (clause.w) syntax("w given twice in one clause");
        clause.w = parse_set(value);
      } else if (key == "X?" || key == "X!") {
        clause_open = true;
        if (clause.left) syntax("X context given twice in one clause");
        clause.left = parse_seqs(value, key[1] == '?');
      } else if (key == "Y?" || key == "Y!") {
        clause_open = true;
        if (clause.right) syntax("Y context given twice in one clause");
        clause.right = parse_seqs(value, key[1] == '?');
      } else {
        syntax("unknown key '" + std::string(key) + "'");
      }
    }
    if (!clause_open) syntax("rule has no condition clause");
    finish_clause(rule, clause);
    if (!have_sutra) syntax("missing sutra=");

    rule.output = parse_terms(trim(text_.substr(arrow + 2)), rule.id.category);
    return rule;
  }

 private:
  [[noreturn]] void syntax(const std::string& msg) const {
    throw RuleSyntaxError(line_, msg);
  }
  [[noreturn]] void semantic(const std::string& msg) const {
    throw RuleSemanticError(line_, msg);
  }

  static std::vector<std::string_view> words(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
      while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
      std::size_t start = i;
      while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
      if (i > start) out.push_back(s.substr(start, i - start));
    }
    return out;
  }

  void finish_clause(SandhiRule& rule, Clause& clause) {
    if (!has_x_) syntax("clause without x=");
    if (!has_y_) syntax("clause without y=");
    has_x_ = has_y_ = false;
    rule.clauses.push_back(std::move(clause));
  }

  RuleId parse_id(std::string_view cat, std::string_view j, std::string_view k) {
    if (cat.size() != 2 || cat[0] != 'C' || cat[1] < '1' || cat[1] > '5')
      syntax("category must be C1..C5, got '" + std::string(cat) + "'");
    auto aph = to_int(j);
    auto eqn = to_int(k);
    if (!aph || *aph < 1) syntax("bad aphorism index '" + std::string(j) + "'");
    if (!eqn || *eqn < 1) syntax("bad equation index '" + std::string(k) + "'");
    return RuleId{static_cast<Category>(cat[1] - '0'), *aph, *eqn};
  }

  SutraNumber parse_sutra(std::string_view v) {
    auto parts = split(v, '.');
    if (parts.size() != 3) syntax("sutra must look like a.b.c");
    auto a = to_int(parts[0]);
    auto b = to_int(parts[1]);
    auto c = to_int(parts[2]);
    if (!a || !b || !c) syntax("sutra must look like a.b.c");
    return SutraNumber{*a, *b, *c};
  }

  Scope parse_scope(std::string_view v) {
    if (v == "ext") return Scope::kExternal;
    if (v == "int") return Scope::kInternal;
    if (v == "both") return Scope::kBoth;
    syntax("scope must be ext, int or both");
  }

  Code parse_code(std::string_view v) {
    auto n = to_int(v);
    if (!n) syntax("expected a letter code, got '" + std::string(v) + "'");
    if (*n < 1 || *n > kAvagraha)
      semantic("letter code " + std::to_string(*n) + " outside 1..50");
    return static_cast<Code>(*n);
  }

  CodeSet parse_braced(std::string_view v) {
    if (v.size() < 2 || v.front() != '{' || v.back() != '}')
      syntax("expected {n,...}, got '" + std::string(v) + "'");
    CodeSet s;
    std::string_view body = v.substr(1, v.size() - 2);
    if (body.empty()) semantic("empty letter set");
    for (auto part : split(body, ',')) s.insert(parse_code(part));
    return s;
  }

  CodeSet parse_set(std::string_view v) {
    CodeSet s;
    if (v.front() == '{') {
      s = parse_braced(v);
    } else if (v.front() == '@') {
      std::string_view name = v.substr(1);
      std::string_view minus;
      if (auto bang = name.find('!'); bang != std::string_view::npos) {
        minus = name.substr(bang + 1);
        name = name.substr(0, bang);
      }
      try {
        s = class_members(parse_class_name(name));
      } catch (const DomainError& e) {
        semantic(e.what());
      }
      if (!minus.empty()) s -= parse_braced(minus);
    } else if (auto dots = v.find(".."); dots != std::string_view::npos) {
      Code lo = parse_code(v.substr(0, dots));
      Code hi = parse_code(v.substr(dots + 2));
      if (lo > hi) semantic("empty range '" + std::string(v) + "'");
      s = CodeSet::range(lo, hi);
    } else {
      s.insert(parse_code(v));
    }
    if (s.empty()) semantic("empty letter set '" + std::string(v) + "'");
    if (s.contains(kRu)) semantic("letter code 51 cannot be matched");
    return s;
  }

  YSpec parse_y(std::string_view v) {
    YSpec y;
    if (v == "END") {
      y.kind = YSpec::Kind::kEnd;
    } else if (v.front() == 'x') {
      y.kind = YSpec::Kind::kRelative;
      if (v.size() > 1) {
        auto n = to_int(v.substr(v[1] == '+' ? 2 : 1));
        if ((v[1] != '+' && v[1] != '-') || !n)
          syntax("relative y must be x, x+d or x-d");
        y.offset = *n;
      }
    } else {
      y.set = parse_set(v);
    }
    return y;
  }

  SeqConstraint parse_seqs(std::string_view v, bool require) {
    SeqConstraint c;
    c.polarity = require ? Polarity::kRequire : Polarity::kForbid;
    for (auto alt : split(v, '|')) {
      if (alt.empty()) syntax("empty word context");
      CodeSeq seq;
      for (auto code : split(alt, '+')) seq.push_back(parse_code(code));
      c.seqs.push_back(std::move(seq));
    }
    return c;
  }

  Term parse_term(std::string_view t) {
    if (t.empty()) syntax("empty output term");
    if (t.front() == '#') return Term{Term::Kind::kConst, parse_code(t.substr(1))};
    if (t == "w") return Term{Term::Kind::kCopyW, 0};
    if (t.front() != 'x' && t.front() != 'y')
      syntax("bad output term '" + std::string(t) + "'");
    Term term{t.front() == 'x' ? Term::Kind::kXPlus : Term::Kind::kYPlus, 0};
    if (t.size() > 1) {
      auto n = to_int(t.substr(t[1] == '+' ? 2 : 1));
      if ((t[1] != '+' && t[1] != '-') || !n)
        syntax("bad output term '" + std::string(t) + "'");
      term.value = *n;
    }
    return term;
  }

  OutputTemplate parse_terms(std::string_view v, Category category) {
    OutputTemplate tmpl;
    tmpl.action = action_for(category);
    if (v.empty()) syntax("missing output after '=>'");
    if (v == "drop") {
      if (category != Category::kC5) semantic("only C5 rules may drop");
      return tmpl;
    }
    if (category == Category::kC5) semantic("C5 rules take '=> drop'");
    for (auto part : split(v, ',')) tmpl.terms.push_back(parse_term(trim(part)));
    if ((category == Category::kC3 || category == Category::kC4) &&
        tmpl.terms.size() != 1)
      semantic("C3 and C4 rules produce exactly one letter");
    return tmpl;
  }

  std::string_view text_;
  int line_;
  bool has_x_ = false;
  bool has_y_ = false;
};

bool seq_consistent_last(const CodeSeq& seq, const CodeSet& set) {
  return !seq.empty() && set.matches(seq.back());
}

void validate(const SandhiRule& rule) {
  auto fail = [&](const std::string& msg) {
    throw RuleSemanticError(rule.line, rule.id.str() + ": " + msg);
  };
  bool uses_w = std::any_of(rule.output.terms.begin(), rule.output.terms.end(),
                            [](const Term& t) { return t.kind == Term::Kind::kCopyW; });
  for (const Clause& c : rule.clauses) {
    if (c.y.kind == YSpec::Kind::kEnd && rule.id.category != Category::kC2)
      fail("only C2 rules may have y=END");
    if (c.y.kind == YSpec::Kind::kEnd && (c.right || c.w))
      fail("y=END leaves no right context to constrain");
    if (uses_w && !c.w) fail("output copies w but a clause has no w set");
    if (c.left)
      for (const auto& seq : c.left->seqs)
        if (!seq_consistent_last(seq, c.x))
          fail("X context " + join_codes(seq) + " does not end in the x set");
    if (c.right) {
      if (c.y.kind != YSpec::Kind::kSet) fail("Y context needs an explicit y set");
      for (const auto& seq : c.right->seqs)
        if (!c.y.set.matches(seq.front()))
          fail("Y context " + join_codes(seq) + " does not start in the y set");
    }
    if (rule.commutative && (c.u || c.w || c.left || c.right))
      fail("commutative rules cannot carry contexts");
  }
  if (rule.finalizes() != (rule.clauses.front().y.kind == YSpec::Kind::kEnd))
    fail("y=END must be used by every clause or none");
  // Trial expansion range-checks every term over the whole domain.
  std::size_t n = expand(rule).size();
  if (n == 0) fail("empty domain");
}

}  // namespace

RuleSet parse_rules(std::string_view text, std::string source) {
  std::vector<SandhiRule> rules;
  std::set<RuleId> seen;

  std::string logical;
  int logical_start = 0;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    ++line_no;
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;

    std::string_view line = trim(raw);
    if (logical.empty() && (line.empty() || line.front() == '#')) continue;
    if (logical.empty()) logical_start = line_no;
    bool continues = !line.empty() && line.back() == '\\';
    if (continues) line.remove_suffix(1);
    logical += ' ';
    logical += line;
    if (continues && pos <= text.size()) continue;

    SandhiRule rule = LineParser(logical, logical_start).parse();
    logical.clear();
    validate(rule);
    if (!seen.insert(rule.id).second)
      throw RuleSemanticError(rule.line, "duplicate rule id " + rule.id.str());
    rules.push_back(std::move(rule));
  }
  return RuleSet(std::move(rules), std::move(source));
}

RuleSet load_rules(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open rule file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_rules(buf.str(), path.string());
}

const RuleSet& builtin_rules() {
  static const RuleSet rules = parse_rules(builtin_rules_text(), "builtin");
  return rules;
}

}  // namespace sandhi
