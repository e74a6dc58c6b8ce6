#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "hms/core/bytes.hpp"

namespace hms {

/// Keccak-256 with the original 0x01 padding (the variant Ethereum calls
/// keccak256), not the NIST SHA3-256 padding.
Hash256 keccak256(std::span<const std::uint8_t> data);

inline Hash256 keccak256(std::string_view text)
{
    return keccak256(std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

} // namespace hms
