#include "cdo/digest.hpp"

#include "cdo/error.hpp"

#include <openssl/evp.h>
#include <openssl/hmac.h>

namespace cdo {

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

int hex_nibble(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return -1;
}

} // namespace

std::string Digest::hex() const {
    std::string out;
    out.reserve(64);
    for (auto b : bytes) {
        out.push_back(kHexDigits[b >> 4]);
        out.push_back(kHexDigits[b & 0xF]);
    }
    return out;
}

Digest Digest::from_hex(std::string_view hex) {
    if (hex.size() != 64) {
        raise(ErrorCode::ParseError, "digest must be 64 hex chars");
    }
    Digest d;
    for (size_t i = 0; i < 32; ++i) {
        int hi = hex_nibble(hex[2 * i]);
        int lo = hex_nibble(hex[2 * i + 1]);
        if (hi < 0 || lo < 0) {
            raise(ErrorCode::ParseError, "digest must be lowercase hex");
        }
        d.bytes[i] = static_cast<std::uint8_t>((hi << 4) | lo);
    }
    return d;
}

Digest sha256(std::string_view data) {
    Digest out;
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), out.bytes.data(), &len, EVP_sha256(), nullptr) != 1 ||
        len != out.bytes.size()) {
        raise(ErrorCode::IoError, "sha256 failed");
    }
    return out;
}

Digest hmac_sha256(std::string_view key, std::string_view data) {
    Digest out;
    unsigned int len = 0;
    if (HMAC(EVP_sha256(), key.data(), static_cast<int>(key.size()),
             reinterpret_cast<const unsigned char*>(data.data()), data.size(),
             out.bytes.data(), &len) == nullptr ||
        len != out.bytes.size()) {
        raise(ErrorCode::IoError, "hmac failed");
    }
    return out;
}

} // namespace cdo
