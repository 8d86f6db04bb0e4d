#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace cdo {

// 32-byte SHA-256 value, rendered as 64 lowercase hex characters.
// The all-zero digest is the creation/deletion sentinel in event records.
struct Digest {
    std::array<std::uint8_t, 32> bytes{};

    bool is_zero() const {
        for (auto b : bytes) {
            if (b != 0) return false;
        }
        return true;
    }

    std::string hex() const;
    static Digest from_hex(std::string_view hex);

    auto operator<=>(const Digest&) const = default;
};

Digest sha256(std::string_view data);

// Keyed tag over a record hash; key is raw bytes (we use 32-byte keys).
Digest hmac_sha256(std::string_view key, std::string_view data);

} // namespace cdo
