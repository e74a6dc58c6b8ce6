#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hms/chain/block.hpp"
#include "hms/metrics/metrics.hpp"

namespace hms::experiments {

/// Who reads what, and who orders blocks:
///   geth_unmodified  committed-state buyers, baseline miner
///   sereth_client    HMS buyers, baseline miner
///   semantic_mining  HMS buyers, semantic miner
enum class Scenario : std::uint8_t { GethUnmodified, SerethClient, SemanticMining };

inline constexpr Scenario kAllScenarios[] = {Scenario::GethUnmodified, Scenario::SerethClient,
                                             Scenario::SemanticMining};

std::string_view to_string(Scenario s);
/// Throws ConfigError on an unknown name.
Scenario parse_scenario(std::string_view name);

MinerPolicy miner_policy(Scenario s);
bool uses_hms_buyers(Scenario s);

struct ScenarioConfig {
    Scenario scenario = Scenario::GethUnmodified;
    std::uint64_t n_buys = 100;
    std::uint64_t n_sets = 100;
    Tick submit_interval_ticks = 1;
    Tick block_interval_ticks = 15;
    /// Ticks between a block being mined and clients seeing it: its
    /// transactions stay in their pool view and committed reads return the
    /// previous block until then. The miner's own pool drops them at once.
    Tick publish_delay_ticks = 24;
    std::uint64_t seed = 1;
    std::uint64_t n_buyers = 10;
    std::size_t block_capacity = kDefaultBlockCapacity;
    /// Every transaction comes from the owner account (one legal history).
    bool single_sender = false;

    /// Throws ConfigError on zero counts or intervals, n_sets > n_buys,
    /// negative delay, or zero capacity.
    void validate() const;
};

struct ScenarioResult {
    ScenarioConfig config;
    std::vector<Block> blocks;
    metrics::RunStats stats;
    metrics::Counts buys;
    metrics::Counts sets;
    std::optional<Rational> eta_buy;
};

/// Submits n_buys buys one per submit interval, spreads n_sets sets evenly
/// over the same span, mines a block every block interval and stops at the
/// first block after the last submission that leaves the pool empty.
ScenarioResult run_scenario(const ScenarioConfig& config);

} // namespace hms::experiments
