#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kal1 {

std::string hex_encode(std::span<const std::uint8_t> bytes);

/// Accepts upper or lower case; odd length or non-hex characters raise FormatError.
std::vector<std::uint8_t> hex_decode(std::string_view hex);

}  // namespace kal1
