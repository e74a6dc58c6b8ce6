#pragma once

#include <cstdint>
#include <string_view>

#include "hms/chain/contract.hpp"
#include "hms/chain/transaction.hpp"
#include "hms/engine/hash_mark_set.hpp"

namespace hms::clients {

enum class Strategy : std::uint8_t { BaselineBuyer, HmsBuyer, OwnerSetter };

std::string_view to_string(Strategy s);

/// A transaction-generating account. next_nonce advances by one per
/// transaction built.
struct ClientConfig {
    Address address;
    Strategy strategy = Strategy::BaselineBuyer;
    std::uint64_t next_nonce = 0;
};

/// Identity and submission time given to a newly built transaction.
struct TxnStamp {
    TxnId id = 0;
    Tick tick = 0;
};

/// Buy at the committed (mark, price): what an unmodified client can see.
Transaction make_buy_baseline(ClientConfig& client, const ContractState& committed, TxnStamp stamp);

/// Buy at the (mark, price) returned by the augmented view call.
Transaction make_buy_hms(ClientConfig& client, const RaaResult& raa_view, TxnStamp stamp);

/// Price change chained onto `basis`. A HEAD_FLAG basis (no series pending)
/// makes this set a head candidate; a series tail makes it a successor.
Transaction make_set(ClientConfig& owner, const RaaResult& basis, const Word& new_value, TxnStamp stamp);

/// Price change chained onto committed state; always a head candidate.
Transaction make_set(ClientConfig& owner, const ContractState& committed, const Word& new_value, TxnStamp stamp);

} // namespace hms::clients
