#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>

#include "hms/core/bytes.hpp"

namespace hms {

// Flag words carried in slot 0 of an FPV.
inline constexpr Word kRejectedFlag = Word::from_uint(0);
inline constexpr Word kHeadFlag = Word::from_uint(1);
inline constexpr Word kSuccessFlag = Word::from_uint(2);

/// (flag, previous_mark, value) argument triple of an HMS call.
struct Fpv {
    Word flag;
    Hash256 previous_mark;
    Word value;

    bool operator==(const Fpv&) const = default;
};

/// (address, mark, value) describing a committed or pending state of P.
struct Amv {
    Address address;
    Hash256 mark;
    Word value;

    bool operator==(const Amv&) const = default;
};

inline constexpr std::size_t kFpvSize = 96;
using FpvBytes = std::array<std::uint8_t, kFpvSize>;

/// Slots: [0, 32) flag, [32, 64) previous_mark, [64, 96) value.
FpvBytes encode_fpv(const Fpv& fpv);

/// Throws MalformedInput unless exactly 96 bytes are given.
Fpv decode_fpv(std::span<const std::uint8_t> bytes);

std::optional<Fpv> try_decode_fpv(std::span<const std::uint8_t> bytes);

/// keccak256(previous_mark || value).
Hash256 compute_mark(const Hash256& previous_mark, const Word& value);

/// Mark of a freshly deployed contract: keccak256 of the zero word.
const Hash256& genesis_mark();

} // namespace hms
