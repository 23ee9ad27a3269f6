#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace arena {

/// Lower-case hex SHA-256 of `data`.
std::string sha256_hex(std::string_view data);

std::uint32_t crc32(std::string_view data);

} // namespace arena
