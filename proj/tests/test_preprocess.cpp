#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "helpers.hpp"
#include "sakhr/errors.hpp"
#include "sakhr/preprocess.hpp"
#include "sakhr/rng.hpp"
#include "sakhr/unicode.hpp"

using namespace sakhr;

namespace {

// Random soup of Arabic letters, diacritics, Latin, digits, symbols, emoji
// and whitespace for fuzz checks.
std::string fuzz_string(SplitMix64& rng) {
  static const std::u32string pool =
      U"مرحبايصدق "
      U"ًَُّٰـ"
      U"abcXYZ019 +-=$%#@!؟،.❤\U0001f602\U0001f644\t\n";
  std::u32string s;
  const std::size_t len = rng.next_below(40);
  for (std::size_t i = 0; i < len; ++i) {
    char32_t cp = pool[rng.next_below(pool.size())];
    s.push_back(cp);
    if (rng.next_below(5) == 0) s.append(rng.next_below(6), cp);  // runs
  }
  return utf8_encode(s);
}

bool only_arabic_digits_spaces(const std::string& text, const PreprocessConfig& config) {
  for (char32_t cp : utf8_decode(text)) {
    if (cp == U' ') continue;
    if (cp >= U'0' && cp <= U'9') continue;
    if (config.is_arabic_letter(cp)) continue;
    return false;
  }
  return true;
}

}  // namespace

TEST(RemoveSpecialSymbols, ReplacesSymbolsWithSpaces) {
  EXPECT_EQ(remove_special_symbols("يوم+جميل=نعم"), "يوم جميل نعم");
}

TEST(RemoveSpecialSymbols, EmptyAndPlainAsciiUnchanged) {
  EXPECT_EQ(remove_special_symbols(""), "");
  EXPECT_EQ(remove_special_symbols("abc"), "abc");
}

TEST(RemoveSpecialSymbols, NeverFusesAdjacentWords) {
  const std::vector<std::string> symbols = {"+", "-", "=", "$", "،", "؟", "❤"};
  for (const auto& sym : symbols) {
    const std::string joined = "مرحبا" + sym + "صديقي";
    EXPECT_EQ(tokenize(remove_special_symbols(joined)),
              (std::vector<std::string>{"مرحبا", "صديقي"}))
        << "symbol did not split: " << sym;
  }
}

TEST(CollapseRepeats, PaperExample) {
  EXPECT_EQ(collapse_repeats("hhhhhhhh", 2), "hh");
}

TEST(CollapseRepeats, RunAtLimitUntouched) {
  EXPECT_EQ(collapse_repeats("hh", 2), "hh");
}

TEST(CollapseRepeats, ArabicRun) {
  EXPECT_EQ(collapse_repeats("ههههه", 2), "هه");
}

TEST(CollapseRepeats, MaxRunOne) {
  EXPECT_EQ(collapse_repeats("aabbcc", 1), "abc");
}

TEST(CollapseRepeats, InvalidMaxRunThrows) {
  EXPECT_THROW(collapse_repeats("x", 0), Error);
}

TEST(CollapseRepeats, NeverLengthensAndBoundsRuns) {
  SplitMix64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::string input = fuzz_string(rng);
    const int max_run = 1 + static_cast<int>(rng.next_below(3));
    const std::string collapsed = collapse_repeats(input, max_run);
    EXPECT_LE(collapsed.size(), input.size());
    const std::u32string cps = utf8_decode(collapsed);
    std::size_t run = 1;
    for (std::size_t i = 1; i < cps.size(); ++i) {
      run = cps[i] == cps[i - 1] ? run + 1 : 1;
      EXPECT_LE(run, static_cast<std::size_t>(max_run));
    }
    EXPECT_EQ(collapse_repeats(collapsed, max_run), collapsed);
  }
}

TEST(StripDiacritics, RemovesHarakat) {
  // fatha + kasra + damma sprinkled into a word
  EXPECT_EQ(strip_diacritics("عَظِيمُ"),
            "عظيم");
}

TEST(StripDiacritics, EmptyAndCleanInputsUnchanged) {
  EXPECT_EQ(strip_diacritics(""), "");
  EXPECT_EQ(strip_diacritics("مرحبا يا صديقي"), "مرحبا يا صديقي");
}

TEST(StripDiacritics, TatweelControlledByFlag) {
  const std::string stretched = "رائـع";
  EXPECT_EQ(strip_diacritics(stretched), "رائع");
  PreprocessConfig keep;
  keep.strip_tatweel = false;
  EXPECT_EQ(strip_diacritics(stretched, keep), stretched);
}

TEST(RemoveNonArabic, DropsLatinTokens) {
  EXPECT_EQ(remove_non_arabic("مرحبا hello"), "مرحبا");
}

TEST(RemoveNonArabic, AllArabicUnchanged) {
  EXPECT_EQ(remove_non_arabic("مرحبا يا صديقي"), "مرحبا يا صديقي");
}

TEST(RemoveNonArabic, NothingSurvivesWithoutArabic) {
  EXPECT_EQ(remove_non_arabic("hello world 123"), "");
}

TEST(RemoveNonArabic, StripsLatinResidueFromMixedTokens) {
  EXPECT_EQ(remove_non_arabic("مرحباhello"), "مرحبا");
}

TEST(RemoveNonArabic, ResidueSeparatesInsteadOfFusing) {
  EXPECT_EQ(remove_non_arabic("يومhelloجميل"), "يوم جميل");
  // Fusing the segments would create a longer letter run and break the
  // idempotence of clean.
  EXPECT_EQ(remove_non_arabic("ررXر"), "رر ر");
  EXPECT_EQ(remove_non_arabic("م1X2"), "م1");
}

TEST(RemoveNonArabic, KeepsDigitsAttachedToArabic) {
  EXPECT_EQ(remove_non_arabic("مرحبا123 456"), "مرحبا123");
}

TEST(Clean, TracedExample) {
  EXPECT_EQ(clean("مررررحبا hello!!!"), "مررحبا");
}

TEST(Clean, EmptyInput) {
  EXPECT_EQ(clean(""), "");
}

TEST(Clean, IdempotentOnFuzzCorpus) {
  PreprocessConfig config;
  SplitMix64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const std::string once = clean(fuzz_string(rng), config);
    EXPECT_EQ(clean(once, config), once);
  }
}

TEST(Clean, OutputCharsetIsArabicDigitsSpaces) {
  PreprocessConfig config;
  SplitMix64 rng(18);
  for (int trial = 0; trial < 100; ++trial) {
    const std::string cleaned = clean(fuzz_string(rng), config);
    EXPECT_TRUE(only_arabic_digits_spaces(cleaned, config)) << "bad charset in: " << cleaned;
    if (!cleaned.empty()) {
      EXPECT_NE(cleaned.front(), ' ');
      EXPECT_NE(cleaned.back(), ' ');
      EXPECT_EQ(cleaned.find("  "), std::string::npos);
    }
  }
}

TEST(Tokenize, SplitsOnWhitespace) {
  EXPECT_EQ(tokenize("مرحبا يا صديقي"), (std::vector<std::string>{"مرحبا", "يا", "صديقي"}));
}

TEST(Tokenize, EmptyInputYieldsNoTokens) {
  EXPECT_TRUE(tokenize("").empty());
}

TEST(Tokenize, NormalizesStrayWhitespace) {
  EXPECT_EQ(tokenize("  هه   هه "), (std::vector<std::string>{"هه", "هه"}));
}

TEST(Tokenize, NeverYieldsEmptyTokensAfterClean) {
  SplitMix64 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    for (const auto& token : tokenize(clean(fuzz_string(rng)))) {
      EXPECT_FALSE(token.empty());
    }
  }
}

TEST(PreprocessConfig, ValidatesCollapseTarget) {
  PreprocessConfig config;
  config.collapse_repeats_to = 0;
  EXPECT_THROW(config.validate(), Error);
}

TEST(PreprocessConfig, RejectsDiacriticLetterOverlap) {
  PreprocessConfig config;
  config.diacritic_codepoints.push_back(U'م');  // meem is a letter
  try {
    config.validate();
    FAIL() << "expected config error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::config);
  }
}

TEST(PreprocessConfig, DefaultsAreValid) {
  EXPECT_NO_THROW(PreprocessConfig{}.validate());
}
