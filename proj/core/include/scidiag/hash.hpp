#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace scidiag {

/// SHA-256 of the input, lowercase hex.
std::string sha256_hex(std::string_view data);
std::string sha256_hex(const std::vector<unsigned char>& data);

/// First 8 bytes of SHA-256 as an integer; used to derive stable RNG seeds
/// and short stable ids from string keys.
std::uint64_t stable_hash64(std::string_view data);

}  // namespace scidiag
