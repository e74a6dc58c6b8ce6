#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hms/core/errors.hpp"

namespace hms {

/// A fixed 32-byte word. The tag parameter keeps hashes, plain words and
/// addresses from being mixed up at compile time.
template <typename Tag>
struct Bytes32 {
    static constexpr std::size_t kSize = 32;

    std::array<std::uint8_t, kSize> bytes{};

    /// Big-endian encoding of an unsigned integer in the low 8 bytes.
    static constexpr Bytes32 from_uint(std::uint64_t v)
    {
        Bytes32 out;
        for (std::size_t i = 0; i < 8; ++i) {
            out.bytes[kSize - 1 - i] = static_cast<std::uint8_t>(v >> (8 * i));
        }
        return out;
    }

    static Bytes32 from_span(std::span<const std::uint8_t, kSize> s)
    {
        Bytes32 out;
        std::copy(s.begin(), s.end(), out.bytes.begin());
        return out;
    }

    /// Low 8 bytes as a big-endian integer; the upper 24 bytes are ignored.
    constexpr std::uint64_t low_u64() const
    {
        std::uint64_t v = 0;
        for (std::size_t i = kSize - 8; i < kSize; ++i) v = (v << 8) | bytes[i];
        return v;
    }

    constexpr bool is_zero() const
    {
        return std::all_of(bytes.begin(), bytes.end(), [](std::uint8_t b) { return b == 0; });
    }

    std::span<const std::uint8_t, kSize> span() const { return bytes; }

    std::string hex() const;
    static Bytes32 from_hex(std::string_view hex);

    constexpr auto operator<=>(const Bytes32&) const = default;
};

struct HashTag {};
struct WordTag {};
struct AddressTag {};

using Hash256 = Bytes32<HashTag>;
using Word = Bytes32<WordTag>;
using Address = Bytes32<AddressTag>;

std::string to_hex(std::span<const std::uint8_t> data);
/// Accepts an optional 0x prefix; throws MalformedInput on odd length or bad digits.
std::vector<std::uint8_t> from_hex(std::string_view hex);

template <typename Tag>
std::string Bytes32<Tag>::hex() const
{
    return to_hex(bytes);
}

template <typename Tag>
Bytes32<Tag> Bytes32<Tag>::from_hex(std::string_view hex)
{
    auto raw = hms::from_hex(hex);
    Bytes32 out;
    if (raw.size() != kSize) {
        throw MalformedInput("expected 32 bytes of hex, got " + std::to_string(raw.size()));
    }
    std::copy(raw.begin(), raw.end(), out.bytes.begin());
    return out;
}

template <typename To, typename From>
constexpr Bytes32<To> retag(const Bytes32<From>& b)
{
    return Bytes32<To>{b.bytes};
}

} // namespace hms
