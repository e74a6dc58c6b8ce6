#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hms/experiments/scenario.hpp"

namespace hms::experiments {

/// One CSV row: the outcome of one (scenario, ratio, seed) cell.
struct SweepRow {
    Scenario scenario = Scenario::GethUnmodified;
    Rational ratio;  // buys per set
    std::uint64_t seed = 0;
    std::uint64_t n_buys = 0;
    std::uint64_t n_sets = 0;
    std::uint64_t buys_included = 0;
    std::uint64_t buys_succeeded = 0;
    std::uint64_t sets_included = 0;
    std::uint64_t sets_succeeded = 0;
    std::optional<Rational> eta_buy;
    Rational t_raw;
    Rational t_state;
    std::uint64_t n_blocks = 0;
    Tick duration_ticks = 0;

    bool operator==(const SweepRow&) const = default;
};

SweepRow make_row(const ScenarioResult& result);

/// n_sets for a buy:set ratio, rounded down and at least 1.
std::uint64_t sets_for_ratio(std::uint64_t n_buys, std::uint64_t ratio);

/// Runs every (scenario, ratio, seed) cell starting from `base`. Rows come
/// back ordered by scenario, then ratio, then seed, in the order given,
/// however many worker threads are used (0 = hardware concurrency).
std::vector<SweepRow> sweep(std::span<const std::uint64_t> ratios, std::span<const Scenario> scenarios,
                            std::span<const std::uint64_t> seeds, const ScenarioConfig& base = {},
                            unsigned threads = 0);

inline constexpr const char* kCsvHeader =
    "scenario,ratio,seed,n_buys,n_sets,buys_included,buys_succeeded,sets_included,sets_succeeded,"
    "eta_buy,t_raw,t_state,n_blocks,duration_ticks";

/// Header line plus one line per row. Undefined eta_buy is an empty field.
void write_csv(std::span<const SweepRow> rows, std::ostream& out);
std::string format_csv_row(const SweepRow& row);

struct PlotPoint {
    Scenario scenario = Scenario::GethUnmodified;
    Rational ratio;
    double mean_eta = 0.0;
    double min_eta = 0.0;
    double max_eta = 0.0;
    std::size_t n_runs = 0;
};

inline constexpr const char* kPlotHeader = "scenario,ratio,mean_eta,min_eta,max_eta,n_runs";

/// Groups rows by (scenario, ratio), ignoring rows without a defined
/// eta_buy, sorted by scenario (geth_unmodified, sereth_client,
/// semantic_mining) then ratio.
std::vector<PlotPoint> plot_points(std::span<const SweepRow> rows);
void emit_plot_data(std::span<const SweepRow> rows, std::ostream& out);

} // namespace hms::experiments
