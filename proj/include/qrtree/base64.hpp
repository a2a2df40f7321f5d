#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qrtree {

std::string base64_encode(std::span<const std::uint8_t> bytes);
// Standard alphabet with '=' padding; whitespace is ignored. Throws InvalidArgument.
std::vector<std::uint8_t> base64_decode(std::string_view text);

}  // namespace qrtree
