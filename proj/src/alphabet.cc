#include "sandhi/alphabet.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <string>
#include <unordered_map>
#include <utility>

namespace sandhi {

LexicalError::LexicalError(std::size_t offset, const std::string& what)
    : std::runtime_error(what), offset_(offset) {}

CodeSet::CodeSet(std::initializer_list<int> codes) {
  for (int c : codes) bits_.set(static_cast<std::size_t>(c));
}

CodeSet CodeSet::range(int first, int last) {
  CodeSet s;
  for (int c = first; c <= last; ++c) s.bits_.set(static_cast<std::size_t>(c));
  return s;
}

bool CodeSet::matches(Code c) const {
  if (contains(c)) return true;
  if (c == kAspirate) return contains(kAspirateHaytav);
  if (c == kAspirateHaytav) return contains(kAspirate);
  return false;
}

std::vector<Code> CodeSet::codes() const {
  std::vector<Code> out;
  for (std::size_t c = 0; c <= kMaxCode; ++c)
    if (bits_.test(c)) out.push_back(static_cast<Code>(c));
  return out;
}

bool same_letter(Code a, Code b) {
  if (a == b) return true;
  auto is_h = [](Code c) { return c == kAspirate || c == kAspirateHaytav; };
  return is_h(a) && is_h(b);
}

bool same_letters(std::span<const Code> a, std::span<const Code> b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(), same_letter);
}

namespace {

struct ClassEntry {
  LetterClass cls;
  std::string_view name;
  std::string_view singular;
  CodeSet members;
};

const std::vector<ClassEntry>& class_table() {
  static const std::vector<ClassEntry> table = {
      {LetterClass::kVowels, "vowels", "vowel", CodeSet::range(1, 13)},
      {LetterClass::kConsonants, "consonants", "consonant", CodeSet::range(14, 47)},
      {LetterClass::kSemivowels, "semivowels", "semivowel", CodeSet::range(15, 18)},
      {LetterClass::kMutes, "mutes", "mute", CodeSet::range(19, 47)},
      {LetterClass::kNasals, "nasals", "nasal", CodeSet::range(19, 23)},
      {LetterClass::kNonNasalMutes, "non_nasal_mutes", "non_nasal_mute", CodeSet::range(24, 47)},
      {LetterClass::kSoftConsonants, "soft_consonants", "soft_consonant", CodeSet::range(24, 33)},
      {LetterClass::kHardConsonants, "hard_consonants", "hard_consonant", CodeSet::range(34, 46)},
      {LetterClass::kColumn1, "column1", "column1", CodeSet::range(39, 43)},
      {LetterClass::kColumn2, "column2", "column2", CodeSet::range(34, 38)},
      {LetterClass::kColumn3, "column3", "column3", CodeSet::range(29, 33)},
      {LetterClass::kColumn4, "column4", "column4", CodeSet::range(24, 28)},
      {LetterClass::kSibilants, "sibilants", "sibilant", CodeSet::range(44, 46)},
      {LetterClass::kAspirate, "aspirate", "aspirate", CodeSet{14, 47}},
      {LetterClass::kAnusvara, "anusvara", "anusvara", CodeSet{48}},
      {LetterClass::kVisarga, "visarga", "visarga", CodeSet{49}},
      {LetterClass::kAvagraha, "avagraha", "avagraha", CodeSet{50}},
      {LetterClass::kRu, "ru", "ru", CodeSet{51}},
      {LetterClass::kGutturals, "gutturals", "guttural", CodeSet{42, 34, 31, 26, 21}},
      {LetterClass::kPalatals, "palatals", "palatal", CodeSet{39, 36, 29, 24, 19}},
      {LetterClass::kCerebrals, "cerebrals", "cerebral", CodeSet{40, 37, 32, 27, 22}},
      {LetterClass::kDentals, "dentals", "dental", CodeSet{41, 38, 33, 28, 23}},
      {LetterClass::kLabials, "labials", "labial", CodeSet{43, 35, 30, 25, 20}},
  };
  return table;
}

const ClassEntry& entry_for(LetterClass cls) {
  return class_table()[static_cast<std::size_t>(cls)];
}

// Canonical spellings, index = code. 0 and 51 are placeholders.
constexpr std::array<std::string_view, kMaxCode + 1> kSpellings = {
    "",   "a",  "ā",  "i",  "ī",  "u",  "ū",  "ṛ",  "ṝ",  "l̥",  "e",
    "o",  "ai", "au", "h",  "y",  "v",  "r",  "l",  "ñ",  "m",  "ṅ",
    "ṇ",  "n",  "jh", "bh", "gh", "ḍh", "dh", "j",  "b",  "g",  "ḍ",
    "d",  "kh", "ph", "ch", "ṭh", "th", "c",  "ṭ",  "t",  "k",  "p",
    "ś",  "ṣ",  "s",  "h",  "ṃ",  "ḥ",  "'",  ""};

// Decomposed and alternative spellings accepted on input.
constexpr std::pair<std::string_view, Code> kAlternates[] = {
    {"a\xCC\x84", 2},          // a + macron
    {"i\xCC\x84", 4},          // i + macron
    {"u\xCC\x84", 6},          // u + macron
    {"r\xCC\xA3", 7},          // r + dot below
    {"\xE1\xB9\x9B\xCC\x84", 8},  // ṛ + macron
    {"r\xCC\xA3\xCC\x84", 8},  // r + dot below + macron
    {"n\xCC\x83", 19},         // n + tilde
    {"n\xCC\x87", 21},         // n + dot above
    {"n\xCC\xA3", 22},         // n + dot below
    {"d\xCC\xA3h", 27},
    {"d\xCC\xA3", 32},
    {"t\xCC\xA3h", 37},
    {"t\xCC\xA3", 40},
    {"s\xCC\x81", 44},         // s + acute
    {"s\xCC\xA3", 45},
    {"m\xCC\xA3", 48},
    {"\xE1\xB9\x81", 48},     // ṁ
    {"m\xCC\x87", 48},
    {"h\xCC\xA3", 49},
    {"\xE2\x80\x99", 50},     // right single quotation mark
};

class TokenTable {
 public:
  TokenTable() {
    for (std::size_t c = 1; c <= kAvagraha; ++c) {
      if (c == kAspirateHaytav) continue;
      add(kSpellings[c], static_cast<Code>(c));
    }
    for (const auto& [text, code] : kAlternates) add(text, code);
  }

  // Longest entry starting at pos, as (code, byte length); length 0 if none.
  std::pair<Code, std::size_t> longest(std::string_view text,
                                       std::size_t pos) const {
    std::size_t limit = std::min(max_len_, text.size() - pos);
    for (std::size_t len = limit; len > 0; --len) {
      auto it = map_.find(std::string(text.substr(pos, len)));
      if (it != map_.end()) return {it->second, len};
    }
    return {kBoundary, 0};
  }

 private:
  void add(std::string_view text, Code code) {
    map_.emplace(std::string(text), code);
    max_len_ = std::max(max_len_, text.size());
  }

  std::unordered_map<std::string, Code> map_;
  std::size_t max_len_ = 0;
};

const TokenTable& token_table() {
  static const TokenTable table;
  return table;
}

// need_sep[a][b]: the concatenated spellings of a and b do not re-tokenize
// to the pair (a, b).
using SepTable = std::array<std::array<bool, kMaxCode + 1>, kMaxCode + 1>;

const SepTable& separator_table() {
  static const SepTable table = [] {
    SepTable t{};
    for (std::size_t a = 1; a <= kAvagraha; ++a) {
      for (std::size_t b = 1; b <= kAvagraha; ++b) {
        std::string joined(kSpellings[a]);
        joined += kSpellings[b];
        CodeSeq got = tokenize(joined);
        t[a][b] = !(got.size() == 2 && same_letter(got[0], static_cast<Code>(a)) &&
                    same_letter(got[1], static_cast<Code>(b)));
      }
    }
    return t;
  }();
  return table;
}

std::string normalize_class_name(std::string_view name) {
  std::string out;
  out.reserve(name.size());
  for (char ch : name) {
    if (ch == '-' || ch == ' ') {
      out.push_back('_');
    } else {
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    }
  }
  if (out == "semi_vowels") return "semivowels";
  if (out == "semi_vowel") return "semivowel";
  if (out.starts_with("column_")) out.erase(6, 1);
  return out;
}

}  // namespace

const CodeSet& class_members(LetterClass cls) { return entry_for(cls).members; }

std::string_view class_name(LetterClass cls) { return entry_for(cls).name; }

LetterClass parse_class_name(std::string_view name) {
  std::string key = normalize_class_name(name);
  for (const auto& e : class_table())
    if (key == e.name || key == e.singular) return e.cls;
  throw DomainError("unknown letter class '" + std::string(name) + "'");
}

std::span<const LetterClass> all_letter_classes() {
  static const std::array<LetterClass, kLetterClassCount> all = [] {
    std::array<LetterClass, kLetterClassCount> a{};
    for (int i = 0; i < kLetterClassCount; ++i) a[i] = static_cast<LetterClass>(i);
    return a;
  }();
  return all;
}

bool in_class(Code code, LetterClass cls) {
  return class_members(cls).matches(code);
}

bool in_class(Code code, std::string_view cls) {
  return in_class(code, parse_class_name(cls));
}

std::string_view spelling(Code code) {
  if (code == kBoundary || code > kAvagraha)
    throw DomainError("no spelling for letter code " + std::to_string(code));
  return kSpellings[code];
}

CodeSeq tokenize(std::string_view text) {
  const TokenTable& table = token_table();
  CodeSeq out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == '_') {
      ++pos;
      continue;
    }
    auto [code, len] = table.longest(text, pos);
    if (len == 0) {
      throw LexicalError(pos, "unrecognized character at byte offset " +
                                  std::to_string(pos));
    }
    out.push_back(code);
    pos += len;
  }
  return out;
}

std::string detokenize(std::span<const Code> seq) {
  const SepTable& sep = separator_table();
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    Code c = seq[i];
    if (c == kBoundary || c > kAvagraha) {
      throw DomainError("letter code " + std::to_string(c) +
                        " cannot be written (position " + std::to_string(i) + ")");
    }
    if (i > 0 && sep[seq[i - 1]][c]) out.push_back('_');
    out += kSpellings[c];
  }
  return out;
}

std::string join_codes(std::span<const Code> seq, char sep) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i > 0) out.push_back(sep);
    out += std::to_string(seq[i]);
  }
  return out;
}

}  // namespace sandhi
