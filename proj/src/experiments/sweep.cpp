#include "hms/experiments/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>

namespace hms::experiments {

SweepRow make_row(const ScenarioResult& result)
{
    const auto& c = result.config;
    SweepRow row;
    row.scenario = c.scenario;
    row.ratio = Rational(static_cast<std::int64_t>(c.n_buys), static_cast<std::int64_t>(c.n_sets));
    row.seed = c.seed;
    row.n_buys = c.n_buys;
    row.n_sets = c.n_sets;
    row.buys_included = result.buys.included;
    row.buys_succeeded = result.buys.succeeded;
    row.sets_included = result.sets.included;
    row.sets_succeeded = result.sets.succeeded;
    row.eta_buy = result.eta_buy;
    row.t_raw = result.stats.t_raw;
    row.t_state = result.stats.t_state;
    row.n_blocks = result.blocks.size();
    row.duration_ticks = result.stats.duration_ticks;
    return row;
}

std::uint64_t sets_for_ratio(std::uint64_t n_buys, std::uint64_t ratio)
{
    return std::max<std::uint64_t>(1, ratio == 0 ? n_buys : n_buys / ratio);
}

std::vector<SweepRow> sweep(std::span<const std::uint64_t> ratios, std::span<const Scenario> scenarios,
                            std::span<const std::uint64_t> seeds, const ScenarioConfig& base, unsigned threads)
{
    std::vector<ScenarioConfig> cells;
    for (Scenario s : scenarios) {
        for (std::uint64_t ratio : ratios) {
            for (std::uint64_t seed : seeds) {
                ScenarioConfig c = base;
                c.scenario = s;
                c.n_sets = sets_for_ratio(c.n_buys, ratio);
                c.seed = seed;
                c.validate();
                cells.push_back(c);
            }
        }
    }

    std::vector<SweepRow> rows(cells.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            try {
                SweepRow row = make_row(run_scenario(cells[i]));
                row.ratio = Rational(static_cast<std::int64_t>(ratios[(i / seeds.size()) % ratios.size()]));
                rows[i] = std::move(row);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, cells.size())));
    {
        std::vector<std::jthread> pool;
        for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
        worker();
    }
    if (failure) std::rethrow_exception(failure);
    return rows;
}

namespace {

std::string format_double(double v)
{
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, end);
}

std::string format_rational(const Rational& r)
{
    if (r.den() == 1) return std::to_string(r.num());
    return format_double(r.to_double());
}

} // namespace

std::string format_csv_row(const SweepRow& row)
{
    std::string line;
    line += to_string(row.scenario);
    line += ',' + format_rational(row.ratio);
    line += ',' + std::to_string(row.seed);
    line += ',' + std::to_string(row.n_buys);
    line += ',' + std::to_string(row.n_sets);
    line += ',' + std::to_string(row.buys_included);
    line += ',' + std::to_string(row.buys_succeeded);
    line += ',' + std::to_string(row.sets_included);
    line += ',' + std::to_string(row.sets_succeeded);
    line += ',' + (row.eta_buy ? format_double(row.eta_buy->to_double()) : std::string());
    line += ',' + format_double(row.t_raw.to_double());
    line += ',' + format_double(row.t_state.to_double());
    line += ',' + std::to_string(row.n_blocks);
    line += ',' + std::to_string(row.duration_ticks);
    return line;
}

void write_csv(std::span<const SweepRow> rows, std::ostream& out)
{
    out << kCsvHeader << '\n';
    for (const auto& row : rows) out << format_csv_row(row) << '\n';
}

std::vector<PlotPoint> plot_points(std::span<const SweepRow> rows)
{
    std::map<std::pair<Scenario, Rational>, std::vector<double>> groups;
    for (const auto& row : rows) {
        if (row.eta_buy) groups[{row.scenario, row.ratio}].push_back(row.eta_buy->to_double());
    }
    std::vector<PlotPoint> points;
    for (const auto& [key, etas] : groups) {
        PlotPoint p;
        p.scenario = key.first;
        p.ratio = key.second;
        double sum = 0.0;
        for (double e : etas) sum += e;
        p.mean_eta = sum / static_cast<double>(etas.size());
        p.min_eta = *std::min_element(etas.begin(), etas.end());
        p.max_eta = *std::max_element(etas.begin(), etas.end());
        p.n_runs = etas.size();
        points.push_back(p);
    }
    return points;
}

void emit_plot_data(std::span<const SweepRow> rows, std::ostream& out)
{
    out << kPlotHeader << '\n';
    for (const auto& p : plot_points(rows)) {
        out << to_string(p.scenario) << ',' << format_rational(p.ratio) << ',' << format_double(p.mean_eta) << ','
            << format_double(p.min_eta) << ',' << format_double(p.max_eta) << ',' << p.n_runs << '\n';
    }
}

} // namespace hms::experiments
