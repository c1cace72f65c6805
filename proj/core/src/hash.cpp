#include "scidiag/hash.hpp"

#include <openssl/evp.h>

#include <array>
#include <stdexcept>

namespace scidiag {

namespace {

std::array<unsigned char, 32> sha256_raw(const void* data, size_t len) {
    std::array<unsigned char, 32> out{};
    unsigned int out_len = 0;
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (!ctx) throw std::runtime_error("EVP_MD_CTX_new failed");
    if (EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx, data, len) != 1 ||
        EVP_DigestFinal_ex(ctx, out.data(), &out_len) != 1) {
        EVP_MD_CTX_free(ctx);
        throw std::runtime_error("SHA-256 digest failed");
    }
    EVP_MD_CTX_free(ctx);
    return out;
}

std::string to_hex(const std::array<unsigned char, 32>& digest) {
    static const char* hex = "0123456789abcdef";
    std::string s;
    s.reserve(64);
    for (unsigned char b : digest) {
        s.push_back(hex[b >> 4]);
        s.push_back(hex[b & 0xf]);
    }
    return s;
}

}  // namespace

std::string sha256_hex(std::string_view data) {
    return to_hex(sha256_raw(data.data(), data.size()));
}

std::string sha256_hex(const std::vector<unsigned char>& data) {
    return to_hex(sha256_raw(data.data(), data.size()));
}

std::uint64_t stable_hash64(std::string_view data) {
    auto digest = sha256_raw(data.data(), data.size());
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v = (v << 8) | digest[i];
    return v;
}

}  // namespace scidiag
