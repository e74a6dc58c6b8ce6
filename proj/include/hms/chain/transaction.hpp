#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hms/core/bytes.hpp"
#include "hms/core/fpv.hpp"

namespace hms {

using TxnId = std::uint64_t;
/// Simulation time; one tick is one simulated second.
using Tick = std::int64_t;

enum class TxnKind : std::uint8_t { Set, Buy };

std::string_view to_string(TxnKind kind);

/// A pending or mined contract call. The FPV travels as raw input bytes so
/// that malformed payloads can exist in the pool.
struct Transaction {
    TxnId id = 0;
    Address sender;
    std::uint64_t nonce = 0;
    TxnKind kind = TxnKind::Set;
    std::vector<std::uint8_t> input;
    Tick submit_tick = 0;

    std::optional<Fpv> fpv() const { return try_decode_fpv(input); }

    bool operator==(const Transaction&) const = default;
};

inline Transaction make_transaction(TxnId id, const Address& sender, std::uint64_t nonce,
                                    TxnKind kind, const Fpv& fpv, Tick submit_tick)
{
    auto bytes = encode_fpv(fpv);
    return Transaction{id, sender, nonce, kind, {bytes.begin(), bytes.end()}, submit_tick};
}

} // namespace hms
