#include "hms/experiments/scenario.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "hms/clients/clients.hpp"
#include "hms/core/errors.hpp"
#include "hms/core/rng.hpp"
#include "hms/raa/raa.hpp"

namespace hms::experiments {

std::string_view to_string(Scenario s)
{
    switch (s) {
    case Scenario::GethUnmodified: return "geth_unmodified";
    case Scenario::SerethClient: return "sereth_client";
    case Scenario::SemanticMining: return "semantic_mining";
    }
    return "?";
}

Scenario parse_scenario(std::string_view name)
{
    for (Scenario s : kAllScenarios) {
        if (to_string(s) == name) return s;
    }
    throw ConfigError("unknown scenario '" + std::string(name) + "'");
}

MinerPolicy miner_policy(Scenario s)
{
    return s == Scenario::SemanticMining ? MinerPolicy::Semantic : MinerPolicy::Baseline;
}

bool uses_hms_buyers(Scenario s)
{
    return s != Scenario::GethUnmodified;
}

void ScenarioConfig::validate() const
{
    if (n_buys == 0 || n_sets == 0) throw ConfigError("n_buys and n_sets must be at least 1");
    if (n_sets > n_buys) throw ConfigError("n_sets must not exceed n_buys");
    if (submit_interval_ticks <= 0 || block_interval_ticks <= 0) throw ConfigError("intervals must be positive");
    if (publish_delay_ticks < 0) throw ConfigError("publish delay must not be negative");
    if (n_buyers == 0) throw ConfigError("n_buyers must be at least 1");
    if (block_capacity == 0) throw ConfigError("block capacity must be at least 1");
}

namespace {

const Address kOwnerAddress = Address::from_uint(0x0ADD);

Address buyer_address(std::uint64_t index)
{
    return Address::from_uint(0xB000 + index);
}

struct OwnSet {
    TxnId id;
    Hash256 mark;
    Word value;
};

/// Drives one run. Two views of the chain are kept: the miner's (TxPool and
/// the head state) and the clients' (pending = submitted and not yet
/// published, committed = post_state of the last published block).
class Simulation {
public:
    explicit Simulation(const ScenarioConfig& config)
        : config_(config), miner_rng_(config.seed), price_rng_(config.seed ^ 0x9e3779b97f4a7c15ULL)
    {
        owner_ = {kOwnerAddress, clients::Strategy::OwnerSetter, 0};
        const auto buyer_strategy =
            uses_hms_buyers(config.scenario) ? clients::Strategy::HmsBuyer : clients::Strategy::BaselineBuyer;
        const std::uint64_t n_buyers = config.single_sender ? 1 : config.n_buyers;
        for (std::uint64_t i = 0; i < n_buyers; ++i) {
            buyers_.push_back({config.single_sender ? kOwnerAddress : buyer_address(i), buyer_strategy, 0});
        }
    }

    ScenarioResult run()
    {
        const auto& c = config_;
        const Tick span = static_cast<Tick>(c.n_buys) * c.submit_interval_ticks;
        std::uint64_t buys_sent = 0;
        std::uint64_t sets_sent = 0;
        auto set_tick = [&](std::uint64_t j) {
            return static_cast<Tick>(j) * span / static_cast<Tick>(c.n_sets);
        };

        Tick duration = 0;
        for (Tick t = 0;; ++t) {
            if (t > 0 && t % c.block_interval_ticks == 0) {
                mine(t);
                if (buys_sent == c.n_buys && sets_sent == c.n_sets && pool_.empty()) {
                    duration = t;
                    break;
                }
            }
            publish_until(t);
            if (sets_sent < c.n_sets && set_tick(sets_sent) == t) {
                submit_set(t);
                ++sets_sent;
            }
            if (buys_sent < c.n_buys && static_cast<Tick>(buys_sent) * c.submit_interval_ticks == t) {
                submit_buy(t, buys_sent);
                ++buys_sent;
            }
        }

        ScenarioResult result;
        result.config = c;
        result.stats = metrics::run_stats(blocks_, duration);
        result.buys = metrics::count(blocks_, metrics::is_buy);
        result.sets = metrics::count(blocks_, metrics::is_set);
        result.eta_buy = metrics::efficiency(blocks_, metrics::is_buy);
        result.blocks = std::move(blocks_);
        return result;
    }

private:
    void mine(Tick t)
    {
        Block block = mine_block(pool_, miner_policy(config_.scenario), head_state_, config_.block_capacity,
                                 miner_rng_, blocks_.size(), t);
        head_state_ = block.post_state;
        blocks_.push_back(std::move(block));
    }

    void publish_until(Tick t)
    {
        while (published_ < blocks_.size() && blocks_[published_].mined_tick + config_.publish_delay_ticks <= t) {
            std::unordered_set<TxnId> ids;
            for (const auto& txn : blocks_[published_].txns) ids.insert(txn.id);
            std::erase_if(client_pending_, [&](const Transaction& txn) { return ids.contains(txn.id); });
            committed_view_ = blocks_[published_].post_state;
            ++published_;
        }
    }

    bool client_sees_pending(TxnId id) const
    {
        return std::any_of(client_pending_.begin(), client_pending_.end(),
                           [&](const Transaction& txn) { return txn.id == id; });
    }

    Word next_price()
    {
        const auto step = static_cast<std::int64_t>(price_rng_.below(11)) - 5;
        price_ = std::max<std::int64_t>(1, price_ + step);
        return Word::from_uint(static_cast<std::uint64_t>(price_));
    }

    // The owner is the only setter and always knows its own last write. It
    // chains onto the HMS tail when its node reports a series, onto its own
    // still-unpublished set when the series head has already left the pool
    // view, and onto committed state otherwise.
    RaaResult owner_basis() const
    {
        if (uses_hms_buyers(config_.scenario)) {
            RaaResult raa = raa::query(client_pending_, committed_view_);
            if (raa.flag == kSuccessFlag) return raa;
        }
        if (last_set_ && client_sees_pending(last_set_->id)) {
            return RaaResult{kHeadFlag, last_set_->mark, last_set_->value};
        }
        return RaaResult{kHeadFlag, committed_view_.mark, committed_view_.value};
    }

    void submit_set(Tick t)
    {
        owner_.next_nonce = pool_.next_nonce(owner_.address);
        Transaction txn = clients::make_set(owner_, owner_basis(), next_price(), {next_id_++, t});
        const Fpv fpv = *txn.fpv();
        last_set_ = OwnSet{txn.id, compute_mark(fpv.previous_mark, fpv.value), fpv.value};
        submit(std::move(txn));
    }

    void submit_buy(Tick t, std::uint64_t index)
    {
        auto& buyer = buyers_[index % buyers_.size()];
        buyer.next_nonce = pool_.next_nonce(buyer.address);
        const TxnId id = next_id_++;

        if (config_.single_sender) {
            // one sequential history: the sender reads its own last write
            ContractState own = committed_view_;
            if (last_set_) {
                own.mark = last_set_->mark;
                own.value = last_set_->value;
            }
            submit(buyer.strategy == clients::Strategy::HmsBuyer
                       ? clients::make_buy_hms(buyer, RaaResult{kSuccessFlag, own.mark, own.value}, {id, t})
                       : clients::make_buy_baseline(buyer, own, {id, t}));
            return;
        }

        if (buyer.strategy == clients::Strategy::HmsBuyer) {
            submit(clients::make_buy_hms(buyer, raa::query(client_pending_, committed_view_), {id, t}));
        } else {
            submit(clients::make_buy_baseline(buyer, committed_view_, {id, t}));
        }
    }

    void submit(Transaction txn)
    {
        client_pending_.push_back(txn);
        pool_.submit(std::move(txn));
    }

    const ScenarioConfig& config_;
    DeterministicRng miner_rng_;
    DeterministicRng price_rng_;
    std::int64_t price_ = 100;

    TxPool pool_;
    ContractState head_state_ = genesis_state();
    std::vector<Block> blocks_;

    std::size_t published_ = 0;
    std::vector<Transaction> client_pending_;
    ContractState committed_view_ = genesis_state();

    clients::ClientConfig owner_;
    std::vector<clients::ClientConfig> buyers_;
    std::optional<OwnSet> last_set_;
    TxnId next_id_ = 0;
};

} // namespace

ScenarioResult run_scenario(const ScenarioConfig& config)
{
    config.validate();
    Simulation sim(config);
    return sim.run();
}

} // namespace hms::experiments
