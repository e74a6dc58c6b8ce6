#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hms/chain/contract.hpp"
#include "hms/chain/transaction.hpp"
#include "hms/chain/txpool.hpp"
#include "hms/core/rng.hpp"

namespace hms {

/// A published block. Failed transactions stay in `txns` with status Failed.
struct Block {
    std::uint64_t height = 0;
    Tick mined_tick = 0;
    std::vector<Transaction> txns;
    ContractState pre_state;
    ContractState post_state;
    std::vector<TxnStatus> statuses;

    bool operator==(const Block&) const = default;
};

enum class MinerPolicy : std::uint8_t { Baseline, Semantic };

inline constexpr std::size_t kDefaultBlockCapacity = 512;

/// Uniformly random interleaving of the senders' nonce-ordered queues.
std::vector<Transaction> baseline_order(std::span<const Transaction> pending, DeterministicRng& rng);

/// Orders sets by their position in the pool's HMS series and slots each buy
/// right after the set whose mark it quotes. Buys quoting `pre_state.mark`
/// lead; everything unmatched trails in pool order. The result is then made
/// nonce-consistent with enforce_nonce_order.
std::vector<Transaction> semantic_order(std::span<const Transaction> pending, const ContractState& pre_state);

/// Stable repair of a desired order so that every sender's transactions run
/// in nonce order: repeatedly emits, among each sender's lowest outstanding
/// nonce, the one that comes earliest in `desired`.
std::vector<Transaction> enforce_nonce_order(std::span<const Transaction> desired);

/// Runs txns in order from pre_state and records statuses.
Block execute_block(std::uint64_t height, Tick mined_tick, std::vector<Transaction> txns,
                    const ContractState& pre_state);

/// Selects and orders up to `capacity` pending transactions, executes them,
/// and removes them from the pool. `rng` only drives the baseline policy.
Block mine_block(TxPool& pool, MinerPolicy policy, const ContractState& pre_state, std::size_t capacity,
                 DeterministicRng& rng, std::uint64_t height = 0, Tick mined_tick = 0);

/// Replays the block from pre_state; true iff post_state and every status match.
bool validate_block(const Block& block);

} // namespace hms
