#include "arena/core/hash.hpp"

#include <openssl/evp.h>
#include <zlib.h>

#include <algorithm>
#include <array>

#include "arena/core/errors.hpp"

namespace arena {

std::string sha256_hex(std::string_view data) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
        throw Error("sha256 failed");
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[md[i] >> 4]);
        out.push_back(hex[md[i] & 0xF]);
    }
    return out;
}

std::uint32_t crc32(std::string_view data) {
    uLong crc = ::crc32(0L, Z_NULL, 0);
    // zlib takes uInt lengths
    while (!data.empty()) {
        const auto chunk = static_cast<uInt>(std::min<std::size_t>(data.size(), 1u << 30));
        crc = ::crc32(crc, reinterpret_cast<const Bytef*>(data.data()), chunk);
        data.remove_prefix(chunk);
    }
    return static_cast<std::uint32_t>(crc);
}

} // namespace arena
