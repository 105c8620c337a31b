#ifndef SANDHI_ALPHABET_H_
#define SANDHI_ALPHABET_H_

#include <bitset>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sandhi {

// Letter value in the Māheśvara ordering. 0 is the boundary sentinel and
// never appears inside a word.
using Code = std::uint8_t;
using CodeSeq = std::vector<Code>;

inline constexpr Code kBoundary = 0;
inline constexpr Code kAspirateHaytav = 14;  // h as listed in ha-ya-va-ra-ṭ
inline constexpr Code kAspirate = 47;        // h as listed in ha-l
inline constexpr Code kAnusvara = 48;
inline constexpr Code kVisarga = 49;
inline constexpr Code kAvagraha = 50;
inline constexpr Code kRu = 51;
inline constexpr Code kMaxCode = 51;

// Invalid argument in the letter domain (bad code, unknown class name).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Unrecognized input while tokenizing IAST text.
class LexicalError : public std::runtime_error {
 public:
  LexicalError(std::size_t offset, const std::string& what);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// A set of letter codes. Membership tests come in two flavours: contains()
// is literal, matches() treats 14 and 47 as the same letter h.
class CodeSet {
 public:
  CodeSet() = default;
  CodeSet(std::initializer_list<int> codes);
  static CodeSet range(int first, int last);

  void insert(Code c) { bits_.set(c); }
  void erase(Code c) { bits_.reset(c); }
  bool contains(Code c) const { return c <= kMaxCode && bits_.test(c); }
  bool matches(Code c) const;
  bool empty() const { return bits_.none(); }
  std::size_t size() const { return bits_.count(); }
  std::vector<Code> codes() const;  // ascending

  CodeSet& operator|=(const CodeSet& o) {
    bits_ |= o.bits_;
    return *this;
  }
  CodeSet& operator-=(const CodeSet& o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  friend bool operator==(const CodeSet&, const CodeSet&) = default;

 private:
  std::bitset<kMaxCode + 1> bits_;
};

// Letter-to-letter equality with the h alias.
bool same_letter(Code a, Code b);
// Sequence equality with the h alias.
bool same_letters(std::span<const Code> a, std::span<const Code> b);

enum class LetterClass {
  kVowels,
  kConsonants,
  kSemivowels,
  kMutes,
  kNasals,
  kNonNasalMutes,
  kSoftConsonants,
  kHardConsonants,
  kColumn1,
  kColumn2,
  kColumn3,
  kColumn4,
  kSibilants,
  kAspirate,
  kAnusvara,
  kVisarga,
  kAvagraha,
  kRu,
  kGutturals,
  kPalatals,
  kCerebrals,
  kDentals,
  kLabials,
};

inline constexpr int kLetterClassCount = 23;

const CodeSet& class_members(LetterClass cls);
std::string_view class_name(LetterClass cls);
// Accepts the canonical snake_case names, singular forms, and '-' or ' '
// in place of '_'. Throws DomainError for anything else.
LetterClass parse_class_name(std::string_view name);
std::span<const LetterClass> all_letter_classes();

bool in_class(Code code, LetterClass cls);
bool in_class(Code code, std::string_view cls);

// IAST spelling of a letter (precomposed where Unicode has a form).
std::string_view spelling(Code code);

// Longest-match tokenizer. '_' forces a token boundary and is dropped.
// Throws LexicalError with the byte offset of the first unrecognized byte.
CodeSeq tokenize(std::string_view text);

// Inverse of tokenize; writes '_' where two spellings would otherwise fuse.
// Throws DomainError on codes outside 1..50.
std::string detokenize(std::span<const Code> seq);

// "43+17+1" style rendering used in rule files and tables.
std::string join_codes(std::span<const Code> seq, char sep = '+');

}  // namespace sandhi

#endif  // SANDHI_ALPHABET_H_
