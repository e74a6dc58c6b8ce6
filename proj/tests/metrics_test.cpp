#include <gtest/gtest.h>

#include "hms/chain/block.hpp"
#include "hms/core/errors.hpp"
#include "hms/metrics/metrics.hpp"

using namespace hms;
using namespace hms::metrics;

namespace {

Block block_of(std::vector<std::pair<TxnKind, TxnStatus>> entries)
{
    Block b;
    TxnId id = 1;
    for (auto [kind, status] : entries) {
        b.txns.push_back(make_transaction(id++, Address::from_uint(id), 0, kind, Fpv{}, 0));
        b.statuses.push_back(status);
    }
    return b;
}

constexpr auto S = TxnStatus::Succeeded;
constexpr auto F = TxnStatus::Failed;

} // namespace

TEST(Rational, NormalizesAndCompares)
{
    EXPECT_EQ(Rational(2, 4), Rational(1, 2));
    EXPECT_EQ(Rational(1, -2).num(), -1);
    EXPECT_EQ(Rational(1, -2).den(), 2);
    EXPECT_EQ(Rational(0, 5), Rational(0));
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
    EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
    EXPECT_EQ(Rational(1, 2) - Rational(1, 3), Rational(1, 6));
    EXPECT_EQ(Rational(2, 3) * Rational(3, 4), Rational(1, 2));
    EXPECT_EQ(Rational(1, 2) / Rational(1, 4), Rational(2));
    EXPECT_THROW(Rational(1, 0), std::domain_error);
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
    EXPECT_DOUBLE_EQ(Rational(3, 4).to_double(), 0.75);
    EXPECT_EQ(Rational(3, 4).to_string(), "3/4");
}

TEST(Metrics, CountsAndEfficiency)
{
    std::vector<Block> blocks{block_of({{TxnKind::Buy, S}, {TxnKind::Buy, F}, {TxnKind::Set, S}}),
                              block_of({{TxnKind::Buy, F}, {TxnKind::Set, F}})};
    auto buys = count(blocks, is_buy);
    EXPECT_EQ(buys.included, 3u);
    EXPECT_EQ(buys.succeeded, 1u);
    EXPECT_EQ(efficiency(blocks, is_buy), Rational(1, 3));
    EXPECT_EQ(efficiency(blocks, is_set), Rational(1, 2));
    EXPECT_EQ(efficiency(blocks), Rational(2, 5));

    auto per_block = per_block_efficiency(blocks, is_set);
    ASSERT_EQ(per_block.size(), 2u);
    EXPECT_EQ(per_block[0], Rational(1));
    EXPECT_EQ(per_block[1], Rational(0));
}

TEST(Metrics, EfficiencyUndefinedWithoutTransactions)
{
    std::vector<Block> blocks{block_of({}), block_of({{TxnKind::Set, S}})};
    EXPECT_FALSE(efficiency(blocks, is_buy).has_value());
    EXPECT_FALSE(efficiency({}).has_value());
}

TEST(Metrics, ThroughputIdentityIsExact)
{
    std::vector<Block> blocks{block_of({{TxnKind::Buy, S}, {TxnKind::Buy, F}, {TxnKind::Set, S}})};
    for (Tick d : {1, 7, 45, 1000}) {
        auto stats = run_stats(blocks, d);
        EXPECT_EQ(stats.t_raw, Rational(3, d));
        EXPECT_EQ(stats.t_state, Rational(2, d));
        EXPECT_EQ(stats.t_state, stats.t_raw * *stats.eta);
    }
}

TEST(Metrics, NonPositiveDurationIsRejected)
{
    std::vector<Block> blocks{block_of({{TxnKind::Buy, S}})};
    EXPECT_THROW(run_stats(blocks, 0), InvalidDuration);
    EXPECT_THROW(run_stats(blocks, -3), InvalidDuration);
    RunStats s;
    EXPECT_THROW(raw_throughput(s), InvalidDuration);
    EXPECT_THROW(state_throughput(s), InvalidDuration);
}
