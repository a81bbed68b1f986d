#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace sakhr {

struct CodepointRange {
  char32_t lo;
  char32_t hi;

  bool operator==(const CodepointRange&) const = default;
};

// Text-cleaning settings. The defaults cover standard and extended Arabic
// letters (presentation forms excluded; tatweel U+0640 is not a letter) and
// the harakat block U+064B..U+0652 plus superscript alef U+0670.
struct PreprocessConfig {
  int collapse_repeats_to = 2;
  bool strip_tatweel = true;
  std::vector<CodepointRange> arabic_letter_ranges = {
      {U'ء', U'ؿ'},
      {U'ف', U'ي'},
      {U'ٱ', U'ۓ'},
  };
  std::vector<char32_t> diacritic_codepoints = {
      U'ً', U'ٌ', U'ٍ', U'َ', U'ُ',
      U'ِ', U'ّ', U'ْ', U'ٰ',
  };

  bool is_arabic_letter(char32_t cp) const;
  bool is_diacritic(char32_t cp) const;

  // Throws a config error when collapse_repeats_to < 1 or the diacritic set
  // overlaps the letter ranges.
  void validate() const;
};

// Removes the configured diacritics (and tatweel, when enabled) in place;
// everything else is preserved in order.
std::string strip_diacritics(std::string_view text, const PreprocessConfig& config = {});

// Replaces every codepoint outside {Arabic letters, ASCII letters, ASCII
// digits, whitespace} with a single space so adjacent words never fuse.
std::string remove_special_symbols(std::string_view text, const PreprocessConfig& config = {});

// Shortens every run of one repeated codepoint longer than max_run to
// exactly max_run. Runs of length <= max_run are untouched.
std::string collapse_repeats(std::string_view text, int max_run);

// Splits on whitespace and drops tokens containing no Arabic letter. Inside
// kept tokens, codepoints that are neither Arabic letters nor ASCII digits
// act as separators (fused "يومhelloجميل" becomes "يوم جميل"); fragments
// left without an Arabic letter are dropped like any other non-Arabic token.
std::string remove_non_arabic(std::string_view text, const PreprocessConfig& config = {});

std::string normalize_whitespace(std::string_view text);

// Full cleaning pass, fixed stage order:
//   strip_diacritics -> remove_special_symbols -> collapse_repeats
//   -> remove_non_arabic -> whitespace normalization.
// Idempotent; the output contains only Arabic letters, ASCII digits and
// single spaces.
std::string clean(std::string_view text, const PreprocessConfig& config = {});

// Whitespace split of already-cleaned text; never yields empty tokens.
std::vector<std::string> tokenize(std::string_view text);

}  // namespace sakhr
