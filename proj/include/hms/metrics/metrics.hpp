#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hms/chain/block.hpp"
#include "hms/metrics/rational.hpp"

namespace hms::metrics {

using TxnFilter = std::function<bool(const Transaction&)>;

inline bool any_txn(const Transaction&) { return true; }
inline bool is_buy(const Transaction& t) { return t.kind == TxnKind::Buy; }
inline bool is_set(const Transaction& t) { return t.kind == TxnKind::Set; }

struct Counts {
    std::uint64_t included = 0;
    std::uint64_t succeeded = 0;
};

Counts count(std::span<const Block> blocks, const TxnFilter& filter = any_txn);

/// Share of included (filtered) transactions that succeeded; nullopt when
/// nothing matching was included.
std::optional<Rational> efficiency(std::span<const Block> blocks, const TxnFilter& filter = any_txn);

/// efficiency() of each block on its own.
std::vector<std::optional<Rational>> per_block_efficiency(std::span<const Block> blocks,
                                                          const TxnFilter& filter = any_txn);

struct RunStats {
    std::uint64_t raw_count = 0;
    std::uint64_t success_count = 0;
    Tick duration_ticks = 0;
    std::optional<Rational> eta;
    Rational t_raw;
    Rational t_state;
};

/// Transactions included per tick. Throws InvalidDuration for duration <= 0.
Rational raw_throughput(const RunStats& stats);

/// Successful transactions per tick; equal to raw_throughput * eta.
/// Throws InvalidDuration for duration <= 0.
Rational state_throughput(const RunStats& stats);

/// Fills every RunStats field over all transactions of `blocks`.
RunStats run_stats(std::span<const Block> blocks, Tick duration_ticks);

} // namespace hms::metrics
