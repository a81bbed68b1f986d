#pragma once

#include <string>
#include <string_view>

namespace sakhr {

// UTF-8 decode; malformed byte sequences decode to U+FFFD, one replacement
// per offending byte, so the function is total.
std::u32string utf8_decode(std::string_view text);

std::string utf8_encode(std::u32string_view codepoints);

}  // namespace sakhr
