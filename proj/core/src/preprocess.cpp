#include "sakhr/preprocess.hpp"

#include <algorithm>

#include "sakhr/errors.hpp"
#include "sakhr/unicode.hpp"

namespace sakhr {

namespace {

constexpr char32_t kTatweel = U'ـ';

inline bool is_ascii_space(char32_t cp) {
  return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' || cp == U'\f' || cp == U'\v';
}

inline bool is_ascii_digit(char32_t cp) { return cp >= U'0' && cp <= U'9'; }

inline bool is_ascii_letter(char32_t cp) {
  return (cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z');
}

}  // namespace

bool PreprocessConfig::is_arabic_letter(char32_t cp) const {
  for (const auto& range : arabic_letter_ranges) {
    if (cp >= range.lo && cp <= range.hi) return true;
  }
  return false;
}

bool PreprocessConfig::is_diacritic(char32_t cp) const {
  return std::find(diacritic_codepoints.begin(), diacritic_codepoints.end(), cp) !=
         diacritic_codepoints.end();
}

void PreprocessConfig::validate() const {
  if (collapse_repeats_to < 1) {
    throw Error(ErrorKind::config, "preprocess: collapse_repeats_to must be >= 1");
  }
  for (char32_t cp : diacritic_codepoints) {
    if (is_arabic_letter(cp)) {
      throw Error(ErrorKind::config,
                  "preprocess: diacritic U+" + std::to_string(static_cast<unsigned>(cp)) +
                      " overlaps the Arabic letter ranges");
    }
  }
}

std::string strip_diacritics(std::string_view text, const PreprocessConfig& config) {
  const std::u32string cps = utf8_decode(text);
  std::u32string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) {
    if (config.is_diacritic(cp)) continue;
    if (config.strip_tatweel && cp == kTatweel) continue;
    out.push_back(cp);
  }
  return utf8_encode(out);
}

std::string remove_special_symbols(std::string_view text, const PreprocessConfig& config) {
  const std::u32string cps = utf8_decode(text);
  std::u32string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) {
    if (config.is_arabic_letter(cp) || is_ascii_letter(cp) || is_ascii_digit(cp) ||
        is_ascii_space(cp)) {
      out.push_back(cp);
    } else {
      out.push_back(U' ');
    }
  }
  return utf8_encode(out);
}

std::string collapse_repeats(std::string_view text, int max_run) {
  if (max_run < 1) {
    throw Error(ErrorKind::config, "preprocess: max_run must be >= 1");
  }
  const std::u32string cps = utf8_decode(text);
  std::u32string out;
  out.reserve(cps.size());
  std::size_t i = 0;
  while (i < cps.size()) {
    std::size_t j = i;
    while (j < cps.size() && cps[j] == cps[i]) ++j;
    const std::size_t run = j - i;
    const auto keep = std::min<std::size_t>(run, static_cast<std::size_t>(max_run));
    out.append(keep, cps[i]);
    i = j;
  }
  return utf8_encode(out);
}

std::string remove_non_arabic(std::string_view text, const PreprocessConfig& config) {
  const std::u32string cps = utf8_decode(text);
  std::u32string out;
  std::u32string token;

  // Emits the sub-token if it contains an Arabic letter; digit-only
  // fragments fall under the standalone-digit rule and are dropped.
  auto emit = [&](const std::u32string& part) {
    if (part.empty()) return;
    const bool has_arabic = std::any_of(part.begin(), part.end(), [&](char32_t cp) {
      return config.is_arabic_letter(cp);
    });
    if (!has_arabic) return;
    if (!out.empty()) out.push_back(U' ');
    out.append(part);
  };

  auto flush_token = [&] {
    if (token.empty()) return;
    const bool has_arabic = std::any_of(token.begin(), token.end(), [&](char32_t cp) {
      return config.is_arabic_letter(cp);
    });
    if (has_arabic) {
      // Residue from other scripts (Latin letters in fused tokens) acts as a
      // separator rather than vanishing inline, so it can never fuse two
      // Arabic segments into one longer character run.
      std::u32string part;
      for (char32_t cp : token) {
        if (config.is_arabic_letter(cp) || is_ascii_digit(cp)) {
          part.push_back(cp);
        } else {
          emit(part);
          part.clear();
        }
      }
      emit(part);
    }
    token.clear();
  };

  for (char32_t cp : cps) {
    if (is_ascii_space(cp)) {
      flush_token();
    } else {
      token.push_back(cp);
    }
  }
  flush_token();
  return utf8_encode(out);
}

std::string normalize_whitespace(std::string_view text) {
  const std::u32string cps = utf8_decode(text);
  std::u32string out;
  bool pending_space = false;
  for (char32_t cp : cps) {
    if (is_ascii_space(cp)) {
      pending_space = !out.empty();
    } else {
      if (pending_space) out.push_back(U' ');
      pending_space = false;
      out.push_back(cp);
    }
  }
  return utf8_encode(out);
}

std::string clean(std::string_view text, const PreprocessConfig& config) {
  std::string s = strip_diacritics(text, config);
  s = remove_special_symbols(s, config);
  s = collapse_repeats(s, config.collapse_repeats_to);
  s = remove_non_arabic(s, config);
  return normalize_whitespace(s);
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto is_space_byte = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
  };
  while (i < n) {
    while (i < n && is_space_byte(text[i])) ++i;
    std::size_t j = i;
    while (j < n && !is_space_byte(text[j])) ++j;
    if (j > i) tokens.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return tokens;
}

}  // namespace sakhr
