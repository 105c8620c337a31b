#include "sandhi/alphabet.h"

#include <gtest/gtest.h>

#include <random>

namespace sandhi {
namespace {

TEST(AlphabetTest, CanonicalSpellingsTokenizeToTheirCode) {
  for (int c = 1; c <= kAvagraha; ++c) {
    if (c == kAspirateHaytav) continue;
    EXPECT_EQ(tokenize(spelling(c)), CodeSeq{static_cast<Code>(c)}) << c;
  }
}

TEST(AlphabetTest, SelectedCodes) {
  EXPECT_EQ(tokenize("a"), CodeSeq{1});
  EXPECT_EQ(tokenize("ā"), CodeSeq{2});
  EXPECT_EQ(tokenize("l̥"), CodeSeq{9});
  EXPECT_EQ(tokenize("au"), CodeSeq{13});
  EXPECT_EQ(tokenize("ñ"), CodeSeq{19});
  EXPECT_EQ(tokenize("ṭh"), CodeSeq{37});
  EXPECT_EQ(tokenize("ś"), CodeSeq{44});
  EXPECT_EQ(tokenize("ṃ"), CodeSeq{48});
  EXPECT_EQ(tokenize("ḥ"), CodeSeq{49});
  EXPECT_EQ(tokenize("'"), CodeSeq{50});
}

TEST(AlphabetTest, HIsAlwaysFortySeven) {
  EXPECT_EQ(tokenize("h"), CodeSeq{47});
  EXPECT_EQ(tokenize("hari"), (CodeSeq{47, 1, 17, 3}));
  EXPECT_EQ(spelling(14), "h");
  EXPECT_TRUE(same_letter(14, 47));
  EXPECT_TRUE(same_letter(47, 14));
  EXPECT_FALSE(same_letter(46, 47));
}

TEST(AlphabetTest, LongestMatch) {
  EXPECT_EQ(tokenize("kh"), CodeSeq{34});
  EXPECT_EQ(tokenize("ai"), CodeSeq{12});
  EXPECT_EQ(tokenize("tacchiva"), (CodeSeq{41, 1, 39, 36, 3, 16, 1}));
  EXPECT_EQ(tokenize("devendra"), (CodeSeq{33, 10, 16, 10, 23, 33, 17, 1}));
}

TEST(AlphabetTest, UnderscoreSplitsAndIsDropped) {
  EXPECT_EQ(tokenize("k_h"), (CodeSeq{42, 47}));
  EXPECT_EQ(tokenize("a_i"), (CodeSeq{1, 3}));
  EXPECT_EQ(tokenize("_"), CodeSeq{});
  EXPECT_EQ(tokenize(""), CodeSeq{});
}

TEST(AlphabetTest, DecomposedInput) {
  EXPECT_EQ(tokenize("a\xCC\x84"), CodeSeq{2});
  EXPECT_EQ(tokenize("r\xCC\xA3"), CodeSeq{7});
  EXPECT_EQ(tokenize("r\xCC\xA3\xCC\x84"), CodeSeq{8});
  EXPECT_EQ(tokenize("s\xCC\x81iva"), (CodeSeq{44, 3, 16, 1}));
  EXPECT_EQ(tokenize("t\xCC\xA3h"), CodeSeq{37});
  EXPECT_EQ(tokenize("ṁ"), CodeSeq{48});
  EXPECT_EQ(tokenize("\xE2\x80\x99"), CodeSeq{50});
}

TEST(AlphabetTest, LexicalErrorCarriesByteOffset) {
  try {
    tokenize("kaxa");
    FAIL();
  } catch (const LexicalError& e) {
    EXPECT_EQ(e.offset(), 2u);
  }
  try {
    tokenize("āq");  // ā is two bytes
    FAIL();
  } catch (const LexicalError& e) {
    EXPECT_EQ(e.offset(), 2u);
  }
  EXPECT_THROW(tokenize("A"), LexicalError);
}

TEST(AlphabetTest, DetokenizeSeparatesOnlyWhenNeeded) {
  EXPECT_EQ(detokenize(CodeSeq{42, 47}), "k_h");
  EXPECT_EQ(detokenize(CodeSeq{1, 3}), "a_i");
  EXPECT_EQ(detokenize(CodeSeq{1, 5}), "a_u");
  EXPECT_EQ(detokenize(CodeSeq{34}), "kh");
  EXPECT_EQ(detokenize(CodeSeq{1, 1}), "aa");
  EXPECT_EQ(detokenize(CodeSeq{41, 1, 39, 36, 3, 16, 1}), "tacchiva");
  EXPECT_EQ(detokenize(CodeSeq{}), "");
}

TEST(AlphabetTest, DetokenizeRejectsOutOfDomain) {
  EXPECT_THROW(detokenize(CodeSeq{0}), DomainError);
  EXPECT_THROW(detokenize(CodeSeq{1, 51}), DomainError);
  EXPECT_THROW(spelling(0), DomainError);
}

TEST(AlphabetTest, RoundTripOverRandomSequences) {
  std::mt19937 rng(20261016);
  std::uniform_int_distribution<int> len(1, 12);
  std::uniform_int_distribution<int> code(1, kAvagraha);
  for (int i = 0; i < 2000; ++i) {
    CodeSeq seq;
    for (int n = len(rng); n > 0; --n) {
      Code c;
      do c = static_cast<Code>(code(rng));
      while (c == kAspirateHaytav);
      seq.push_back(c);
    }
    ASSERT_EQ(tokenize(detokenize(seq)), seq) << join_codes(seq);
  }
}

TEST(AlphabetTest, TextRoundTrip) {
  for (const char* s : {"rāmaḥ", "vāgghari", "hara_iha", "kiṃyhyaḥ", "pitṝṇa"}) {
    EXPECT_EQ(detokenize(tokenize(s)), s);
  }
}

TEST(AlphabetTest, ClassSizes) {
  EXPECT_EQ(class_members(LetterClass::kVowels).size(), 13u);
  EXPECT_EQ(class_members(LetterClass::kNasals).size(), 5u);
  EXPECT_EQ(class_members(LetterClass::kSemivowels).size(), 4u);
  EXPECT_EQ(class_members(LetterClass::kSoftConsonants).size(), 10u);
  EXPECT_EQ(class_members(LetterClass::kHardConsonants).size(), 13u);
  EXPECT_EQ(class_members(LetterClass::kSibilants).size(), 3u);
  EXPECT_EQ(all_letter_classes().size(), static_cast<std::size_t>(kLetterClassCount));
}

TEST(AlphabetTest, PlaceClassesPartitionTheStops) {
  CodeSet all;
  std::size_t total = 0;
  for (auto cls : {LetterClass::kGutturals, LetterClass::kPalatals,
                   LetterClass::kCerebrals, LetterClass::kDentals,
                   LetterClass::kLabials}) {
    all |= class_members(cls);
    total += class_members(cls).size();
  }
  EXPECT_EQ(total, 25u);
  EXPECT_EQ(all, CodeSet::range(19, 43));
}

TEST(AlphabetTest, ClassNamesAndAlias) {
  EXPECT_EQ(parse_class_name("vowel"), LetterClass::kVowels);
  EXPECT_EQ(parse_class_name("Semi-Vowels"), LetterClass::kSemivowels);
  EXPECT_EQ(parse_class_name("column 1"), LetterClass::kColumn1);
  EXPECT_EQ(parse_class_name("soft consonants"), LetterClass::kSoftConsonants);
  EXPECT_THROW(parse_class_name("diphthongs"), DomainError);
  EXPECT_TRUE(in_class(14, LetterClass::kAspirate));
  EXPECT_TRUE(in_class(47, "aspirate"));
  EXPECT_TRUE(in_class(14, "consonants"));
  for (auto cls : all_letter_classes())
    EXPECT_EQ(parse_class_name(class_name(cls)), cls);
}

TEST(AlphabetTest, CodeSetMatchesAlias) {
  CodeSet s{14};
  EXPECT_FALSE(s.contains(47));
  EXPECT_TRUE(s.matches(47));
  CodeSet t = CodeSet::range(40, 46);
  EXPECT_FALSE(t.matches(14));
  t -= CodeSet{41};
  EXPECT_EQ(t.size(), 6u);
  EXPECT_EQ(join_codes(CodeSet{3, 1, 2}.codes()), "1+2+3");
}

}  // namespace
}  // namespace sandhi
