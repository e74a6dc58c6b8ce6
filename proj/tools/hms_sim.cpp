#include <cstdint>
#include <fstream>
#include <memory>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hms/core/errors.hpp"
#include "hms/experiments/sweep.hpp"

using namespace hms;
using namespace hms::experiments;

namespace {

// CLI11 reads config files only at the top level; flat keys are routed to
// whichever subcommand was invoked.
class SubcommandConfig : public CLI::ConfigINI {
public:
    explicit SubcommandConfig(const CLI::App& app) : app_(app) {}

    std::vector<CLI::ConfigItem> from_config(std::istream& input) const override
    {
        auto items = CLI::ConfigINI::from_config(input);
        auto subs = app_.get_subcommands();
        if (subs.empty()) return items;
        for (auto& item : items) {
            if (item.parents.empty()) item.parents = {subs.front()->get_name()};
        }
        return items;
    }

private:
    const CLI::App& app_;
};

void add_common(CLI::App& cmd, ScenarioConfig& cfg)
{
    cmd.fallthrough();
    cmd.add_option("--buys", cfg.n_buys, "Number of buy transactions")->capture_default_str();
    cmd.add_option("--block-interval", cfg.block_interval_ticks, "Ticks between blocks")->capture_default_str();
    cmd.add_option("--submit-interval", cfg.submit_interval_ticks, "Ticks between buys")->capture_default_str();
    cmd.add_option("--publish-delay", cfg.publish_delay_ticks, "Ticks before clients see a mined block")
        ->capture_default_str();
    cmd.add_option("--buyers", cfg.n_buyers, "Number of buyer accounts")->capture_default_str();
    cmd.add_option("--capacity", cfg.block_capacity, "Transactions per block")->capture_default_str();
}

std::ofstream open_out(const std::string& path)
{
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open " + path);
    return out;
}

void write_outputs(const std::vector<SweepRow>& rows, const std::string& out_path, const std::string& plot_path)
{
    if (out_path.empty() || out_path == "-") {
        write_csv(rows, std::cout);
    } else {
        auto out = open_out(out_path);
        write_csv(rows, out);
    }
    if (!plot_path.empty()) {
        auto plot = open_out(plot_path);
        emit_plot_data(rows, plot);
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"HMS transaction-efficiency simulator"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Flat key=value file mirroring the subcommand flags");
    app.config_formatter(std::make_shared<SubcommandConfig>(app));

    ScenarioConfig run_cfg;
    std::string run_scenario_name = "geth_unmodified";
    std::string run_out, run_plot;
    auto* run = app.add_subcommand("run", "Run one scenario and write one CSV row");
    add_common(*run, run_cfg);
    run->add_option("--scenario", run_scenario_name, "geth_unmodified, sereth_client or semantic_mining")
        ->capture_default_str();
    run->add_option("--sets", run_cfg.n_sets, "Number of set transactions")->capture_default_str();
    run->add_option("--seed", run_cfg.seed, "Random seed")->capture_default_str();
    run->add_flag("--single-sender", run_cfg.single_sender, "Send every transaction from the owner account");
    run->add_option("--out", run_out, "CSV output path (default stdout)");
    run->add_option("--plot", run_plot, "Plot data output path");

    ScenarioConfig sweep_cfg;
    std::vector<std::uint64_t> ratios{1, 2, 5, 10, 20};
    std::string scenarios_arg = "all";
    std::uint64_t n_seeds = 10;
    unsigned threads = 0;
    std::string sweep_out, sweep_plot;
    auto* sw = app.add_subcommand("sweep", "Run every scenario, ratio and seed");
    add_common(*sw, sweep_cfg);
    sw->add_option("--ratios", ratios, "Buy:set ratios")->delimiter(',')->capture_default_str();
    sw->add_option("--scenarios", scenarios_arg, "'all' or a comma separated list")->capture_default_str();
    sw->add_option("--seeds", n_seeds, "Seeds 1..N per cell")->check(CLI::PositiveNumber)->capture_default_str();
    sw->add_option("--threads", threads, "Worker threads (0 = all cores)")->capture_default_str();
    sw->add_option("--out", sweep_out, "CSV output path (default stdout)");
    sw->add_option("--plot", sweep_plot, "Plot data output path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            run_cfg.scenario = parse_scenario(run_scenario_name);
            run_cfg.validate();
            std::vector<SweepRow> rows{make_row(run_scenario(run_cfg))};
            write_outputs(rows, run_out, run_plot);
        } else {
            std::vector<Scenario> scenarios;
            if (scenarios_arg == "all") {
                scenarios.assign(std::begin(kAllScenarios), std::end(kAllScenarios));
            } else {
                std::size_t start = 0;
                while (start <= scenarios_arg.size()) {
                    auto comma = scenarios_arg.find(',', start);
                    if (comma == std::string::npos) comma = scenarios_arg.size();
                    scenarios.push_back(parse_scenario(scenarios_arg.substr(start, comma - start)));
                    start = comma + 1;
                }
            }
            if (ratios.empty()) throw ConfigError("no ratios given");
            std::vector<std::uint64_t> seeds;
            for (std::uint64_t s = 1; s <= n_seeds; ++s) seeds.push_back(s);
            auto rows = sweep(ratios, scenarios, seeds, sweep_cfg, threads);
            write_outputs(rows, sweep_out, sweep_plot);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
