#include "sandhi/corpus.h"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace sandhi {

CorpusError::CorpusError(int line, const std::string& what)
    : std::runtime_error("corpus line " + std::to_string(line) + ": " + what),
      line_(line) {}

namespace {

std::vector<std::string> split_on(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(s.substr(start));
      break;
    }
    out.emplace_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

CodeSeq word(const std::string& text, int line, const char* column) {
  try {
    return tokenize(text);
  } catch (const LexicalError& e) {
    throw CorpusError(line, std::string(column) + " '" + text + "': " + e.what());
  }
}

// Expected surfaces must already be in the form the detokenizer writes,
// so a report never shows two spellings of one result.
CodeSeq canonical_word(const std::string& text, int line, const char* column) {
  CodeSeq seq = word(text, line, column);
  if (detokenize(seq) != text)
    throw CorpusError(line, std::string(column) + " '" + text +
                                "' is not canonical (expected '" + detokenize(seq) + "')");
  return seq;
}

std::string render_ids(std::vector<RuleId> ids) {
  if (ids.empty()) return "-";
  std::string out;
  for (const auto& id : ids) {
    if (!out.empty()) out += ',';
    out += id.str();
  }
  return out;
}

std::string render_words(const std::vector<CodeSeq>& words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ';';
    out += detokenize(w);
  }
  return out;
}

}  // namespace

std::vector<CorpusEntry> parse_corpus(std::string_view text) {
  std::vector<CorpusEntry> entries;
  int line_no = 0;
  for (const std::string& raw : split_on(text, '\n')) {
    ++line_no;
    std::string line = raw;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto cols = split_on(line, '\t');
    if (cols.size() < 5 || cols.size() > 7)
      throw CorpusError(line_no, "expected 5 to 7 tab-separated columns, got " +
                                     std::to_string(cols.size()));
    CorpusEntry e;
    e.line = line_no;
    e.left_text = cols[0];
    e.right_text = cols[1];
    e.expected_text = cols[2];

    if (cols[4] == "ext") e.kind = EntryKind::kExternal;
    else if (cols[4] == "int") e.kind = EntryKind::kInternal;
    else if (cols[4] == "final") e.kind = EntryKind::kFinal;
    else throw CorpusError(line_no, "kind must be ext, int or final");

    e.left = word(e.left_text, line_no, "left");
    if (e.kind == EntryKind::kFinal) {
      if (e.right_text != "-") throw CorpusError(line_no, "final entries take '-' on the right");
    } else {
      e.right = word(e.right_text, line_no, "right");
    }
    if (e.left.empty() || (e.kind != EntryKind::kFinal && e.right.empty()))
      throw CorpusError(line_no, "empty word");
    e.expected = canonical_word(e.expected_text, line_no, "expected");

    if (cols[3] != "-") {
      for (const std::string& id : split_on(cols[3], ',')) {
        try {
          e.rules.push_back(parse_rule_id(id));
        } catch (const std::invalid_argument& ex) {
          throw CorpusError(line_no, ex.what());
        }
      }
    }
    if (cols.size() > 5 && !cols[5].empty() && cols[5] != "-")
      for (const std::string& v : split_on(cols[5], ';'))
        e.variants.push_back(canonical_word(v, line_no, "variant"));
    if (cols.size() > 6) e.note = cols[6];
    entries.push_back(std::move(e));
  }
  return entries;
}

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open corpus " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_corpus(buf.str());
}

CorpusReport run_corpus(const RuleSet& rules, const std::vector<CorpusEntry>& entries) {
  CorpusReport report;
  for (const CorpusEntry& e : entries) {
    EntryResult r;
    r.entry = &e;
    if (e.kind == EntryKind::kFinal) {
      JoinResult jr = finalize_pada(rules, e.left);
      r.surface = jr.surface;
      r.rules = jr.applied();
      r.variants = {jr.surface};
    } else {
      JunctionKind kind =
          e.kind == EntryKind::kInternal ? JunctionKind::kInternal : JunctionKind::kExternal;
      JoinResult jr = join(rules, e.left, e.right, kind);
      r.surface = jr.surface;
      r.rules = jr.applied();
      if (!e.variants.empty())
        for (Variant& v : join_variants(rules, e.left, e.right, kind))
          r.variants.push_back(std::move(v.surface));
    }

    std::vector<std::string> problems;
    if (r.surface != e.expected)
      problems.push_back("surface " + detokenize(r.surface) + " != " + e.expected_text);
    auto got = r.rules, want = e.rules;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    if (got != want)
      problems.push_back("rules " + render_ids(r.rules) + " != " + render_ids(e.rules));
    if (!e.variants.empty()) {
      auto gv = r.variants, wv = e.variants;
      std::sort(gv.begin(), gv.end());
      std::sort(wv.begin(), wv.end());
      if (gv != wv)
        problems.push_back("variants " + render_words(r.variants) + " != " +
                           render_words(e.variants));
    }
    for (const auto& p : problems) {
      if (!r.diff.empty()) r.diff += "; ";
      r.diff += p;
    }
    r.passed = problems.empty();
    (r.passed ? report.passed : report.failed)++;
    report.results.push_back(std::move(r));
  }
  return report;
}

std::string CorpusReport::render() const {
  std::ostringstream out;
  for (const EntryResult& r : results) {
    const CorpusEntry& e = *r.entry;
    out << (r.passed ? "PASS" : "FAIL") << '\t' << e.left_text << " + " << e.right_text
        << " -> " << detokenize(r.surface) << '\t' << render_ids(r.rules);
    if (!r.passed) out << "\tline " << e.line << ": " << r.diff;
    out << '\n';
  }
  out << "passed " << passed << '/' << results.size() << '\n';
  return out.str();
}

}  // namespace sandhi
