#include "hms/metrics/metrics.hpp"

#include <string>

#include "hms/core/errors.hpp"

namespace hms::metrics {

Counts count(std::span<const Block> blocks, const TxnFilter& filter)
{
    Counts c;
    for (const auto& block : blocks) {
        for (std::size_t i = 0; i < block.txns.size(); ++i) {
            if (!filter(block.txns[i])) continue;
            ++c.included;
            if (block.statuses[i] == TxnStatus::Succeeded) ++c.succeeded;
        }
    }
    return c;
}

std::optional<Rational> efficiency(std::span<const Block> blocks, const TxnFilter& filter)
{
    Counts c = count(blocks, filter);
    if (c.included == 0) return std::nullopt;
    return Rational(static_cast<std::int64_t>(c.succeeded), static_cast<std::int64_t>(c.included));
}

std::vector<std::optional<Rational>> per_block_efficiency(std::span<const Block> blocks, const TxnFilter& filter)
{
    std::vector<std::optional<Rational>> out;
    out.reserve(blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i) out.push_back(efficiency(blocks.subspan(i, 1), filter));
    return out;
}

namespace {

void require_duration(const RunStats& stats)
{
    if (stats.duration_ticks <= 0) {
        throw InvalidDuration("duration must be positive, got " + std::to_string(stats.duration_ticks));
    }
}

} // namespace

Rational raw_throughput(const RunStats& stats)
{
    require_duration(stats);
    return Rational(static_cast<std::int64_t>(stats.raw_count), stats.duration_ticks);
}

Rational state_throughput(const RunStats& stats)
{
    require_duration(stats);
    return Rational(static_cast<std::int64_t>(stats.success_count), stats.duration_ticks);
}

RunStats run_stats(std::span<const Block> blocks, Tick duration_ticks)
{
    Counts c = count(blocks);
    RunStats stats;
    stats.raw_count = c.included;
    stats.success_count = c.succeeded;
    stats.duration_ticks = duration_ticks;
    stats.eta = efficiency(blocks);
    stats.t_raw = raw_throughput(stats);
    stats.t_state = state_throughput(stats);
    return stats;
}

} // namespace hms::metrics
