#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "hms/chain/transaction.hpp"
#include "hms/core/bytes.hpp"
#include "hms/core/fpv.hpp"

namespace hms {

/// Storage of the priced-asset contract: p[0..2] plus success counters.
struct ContractState {
    Address owner_address;  // p[0], last successful caller
    Hash256 mark;           // p[1]
    Word value;             // p[2]
    std::uint64_t n_set = 0;
    std::uint64_t n_buy = 0;

    Amv amv() const { return {owner_address, mark, value}; }

    bool operator==(const ContractState&) const = default;
};

/// State right after deployment: zero address and value, genesis mark.
ContractState genesis_state();

inline constexpr std::size_t kContractStateSize = 3 * 32 + 2 * 8;

/// Fixed-width big-endian image used for byte-level comparison.
std::array<std::uint8_t, kContractStateSize> serialize(const ContractState& state);
ContractState deserialize_contract_state(std::span<const std::uint8_t> bytes);

enum class TxnStatus : std::uint8_t { Succeeded, Failed };

struct ExecResult {
    ContractState state;
    TxnStatus status = TxnStatus::Failed;
};

/// set(): succeeds iff fpv.previous_mark equals the stored mark.
ExecResult execute_set(const ContractState& state, const Fpv& fpv, const Address& sender);

/// buy(): succeeds iff both mark and price match; mark and value are untouched.
ExecResult execute_buy(const ContractState& state, const Fpv& fpv, const Address& sender);

/// Dispatch on kind. An undecodable input fails without touching state.
ExecResult execute(const ContractState& state, const Transaction& txn);

} // namespace hms
