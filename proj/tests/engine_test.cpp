#include <gtest/gtest.h>

#include <map>

#include "hms/core/errors.hpp"
#include "hms/engine/hash_mark_set.hpp"
#include "support.hpp"

using namespace hms;
using hms::test::sender;

namespace {

Transaction set_tx(TxnId id, std::uint64_t nonce, const Word& flag, const Hash256& prev, std::uint64_t value)
{
    return make_transaction(id, sender(0), nonce, TxnKind::Set, {flag, prev, Word::from_uint(value)}, 0);
}

TxnNode bare_node(TxnId id, std::vector<std::size_t> next)
{
    TxnNode n;
    n.txn_id = id;
    n.fpv.flag = kHeadFlag;
    n.mark = Hash256::from_uint(id);
    n.next = std::move(next);
    return n;
}

} // namespace

TEST(Process, KeepsOnlyFlaggedSets)
{
    const auto g = genesis_mark();
    std::vector<Transaction> pool{
        set_tx(1, 0, kHeadFlag, g, 1),
        set_tx(2, 1, kRejectedFlag, g, 2),
        make_transaction(3, sender(1), 0, TxnKind::Buy, {kSuccessFlag, g, Word{}}, 0),
        set_tx(4, 2, kSuccessFlag, g, 3),
        Transaction{5, sender(2), 0, TxnKind::Set, {0xff}, 0},
    };
    auto nodes = process(pool);
    ASSERT_EQ(nodes.size(), 2u);
    EXPECT_EQ(nodes[0].txn_id, 1u);
    EXPECT_EQ(nodes[1].txn_id, 4u);
    EXPECT_EQ(nodes[0].mark, compute_mark(g, Word::from_uint(1)));
    EXPECT_TRUE(success(pool[0]));
    EXPECT_FALSE(success(pool[1]));
    EXPECT_FALSE(success(pool[4]));
}

TEST(HashMarkSet, EmptyPoolReturnsCommittedUnderHead)
{
    auto committed = genesis_state();
    committed.value = Word::from_uint(42);
    auto r = hash_mark_set(Fpv{}, {}, committed);
    EXPECT_EQ(r, (RaaResult{kHeadFlag, committed.mark, committed.value}));
}

TEST(HashMarkSet, OnlySuccessorsWithoutHeadIsNoSeries)
{
    const auto g = genesis_mark();
    std::vector<Transaction> pool{set_tx(1, 0, kSuccessFlag, g, 1)};
    auto r = hash_mark_set(Fpv{}, pool, genesis_state());
    EXPECT_EQ(r.flag, kHeadFlag);
    EXPECT_EQ(r.mark, g);
}

TEST(HashMarkSet, ReturnsTailOfChain)
{
    const auto g = genesis_mark();
    const auto m1 = compute_mark(g, Word::from_uint(1));
    const auto m2 = compute_mark(m1, Word::from_uint(2));
    // submitted out of order; links are by mark, not arrival
    std::vector<Transaction> pool{set_tx(2, 1, kSuccessFlag, m1, 2), set_tx(1, 0, kHeadFlag, g, 1)};
    auto r = hash_mark_set(Fpv{}, pool, genesis_state());
    EXPECT_EQ(r, (RaaResult{kSuccessFlag, m2, Word::from_uint(2)}));
}

TEST(HashMarkSet, LongestBranchWinsAtFork)
{
    const auto g = genesis_mark();
    const auto a1 = compute_mark(g, Word::from_uint(1));
    const auto b1 = compute_mark(a1, Word::from_uint(7));
    const auto b2 = compute_mark(b1, Word::from_uint(8));
    std::vector<Transaction> pool{
        set_tx(1, 0, kHeadFlag, g, 1),
        set_tx(2, 1, kSuccessFlag, a1, 5),
        set_tx(3, 2, kSuccessFlag, a1, 7),
        set_tx(4, 3, kSuccessFlag, b1, 8),
    };
    auto series = build_series(process(pool));
    ASSERT_TRUE(series);
    ASSERT_EQ(series->size(), 3u);
    EXPECT_EQ(series->tail().mark, b2);
    EXPECT_EQ(series->head().txn_id, 1u);
    EXPECT_FALSE(series->head().prev.has_value());
    EXPECT_EQ(series->nodes[1].prev, 0u);
    EXPECT_EQ(series->nodes[1].next, std::vector<std::size_t>{2});
}

TEST(HashMarkSet, TieGoesToSmallestTailMark)
{
    const auto g = genesis_mark();
    const auto a1 = compute_mark(g, Word::from_uint(1));
    std::vector<Transaction> pool{set_tx(1, 0, kHeadFlag, g, 1), set_tx(2, 1, kSuccessFlag, a1, 5),
                                  set_tx(3, 2, kSuccessFlag, a1, 6)};
    auto t5 = compute_mark(a1, Word::from_uint(5));
    auto t6 = compute_mark(a1, Word::from_uint(6));
    auto r = hash_mark_set(Fpv{}, pool, genesis_state());
    EXPECT_EQ(r.mark, std::min(t5, t6));

    // two competing heads of equal depth
    std::vector<Transaction> heads{set_tx(1, 0, kHeadFlag, g, 1), set_tx(2, 1, kHeadFlag, g, 2)};
    auto h1 = compute_mark(g, Word::from_uint(1));
    auto h2 = compute_mark(g, Word::from_uint(2));
    EXPECT_EQ(hash_mark_set(Fpv{}, heads, genesis_state()).mark, std::min(h1, h2));
}

TEST(HashMarkSet, ResultIndependentOfArrivalOrder)
{
    DeterministicRng rng(99);
    for (int round = 0; round < 200; ++round) {
        auto pool = test::random_pool(rng, 12, genesis_state());
        auto expected = hash_mark_set(Fpv{}, pool, genesis_state());
        rng.shuffle(std::span(pool));
        EXPECT_EQ(hash_mark_set(Fpv{}, pool, genesis_state()), expected);
    }
}

// Every returned series is a hash chain from a head candidate, keeps each
// sender's nonces increasing, and is as long as the longest chain found by
// exhaustive enumeration (ties broken towards the smallest tail mark).
TEST(HashMarkSetProperty, SeriesMatchesLongestChainOracle)
{
    DeterministicRng rng(2024);
    const auto committed = genesis_state();
    for (int round = 0; round < 1000; ++round) {
        auto pool = test::random_pool(rng, 12, committed);
        auto series = build_series(process(pool));
        auto oracle = test::longest_chain_oracle(pool);
        ASSERT_EQ(series.has_value(), oracle.has_value()) << "round " << round;
        if (!series) continue;

        EXPECT_EQ(series->size(), oracle->length) << "round " << round;
        EXPECT_EQ(series->tail().mark, oracle->tail) << "round " << round;
        EXPECT_EQ(series->head().fpv.flag, kHeadFlag);

        std::map<Address, std::uint64_t> last_nonce;
        for (std::size_t i = 0; i < series->size(); ++i) {
            const auto& n = series->nodes[i];
            EXPECT_EQ(n.mark, compute_mark(n.fpv.previous_mark, n.fpv.value));
            if (i > 0) EXPECT_EQ(n.fpv.previous_mark, series->nodes[i - 1].mark);
            auto it = last_nonce.find(n.sender);
            if (it != last_nonce.end()) EXPECT_GT(n.nonce, it->second);
            last_nonce[n.sender] = n.nonce;
        }
    }
}

TEST(DeepestBranchProperty, RecursionBoundedByGraphSize)
{
    DeterministicRng rng(77);
    for (int round = 0; round < 1000; ++round) {
        auto nodes = process(test::random_pool(rng, 12, genesis_state()));
        link_successors(nodes);
        for (std::size_t head = 0; head < nodes.size(); ++head) {
            auto b = deepest_branch(nodes, head);
            EXPECT_LE(b.max_recursion_depth, nodes.size());
            EXPECT_EQ(b.path.size(), b.depth);
            EXPECT_EQ(b.path.front(), head);
        }
    }
}

TEST(DeepestBranch, LongChainTerminates)
{
    std::vector<Transaction> pool;
    Hash256 prev = genesis_mark();
    for (std::uint64_t i = 0; i < 300; ++i) {
        pool.push_back(set_tx(i + 1, i, i == 0 ? kHeadFlag : kSuccessFlag, prev, i));
        prev = compute_mark(prev, Word::from_uint(i));
    }
    auto nodes = process(pool);
    link_successors(nodes);
    auto b = deepest_branch(nodes, 0);
    EXPECT_EQ(b.depth, 300u);
    EXPECT_EQ(b.max_recursion_depth, 300u);
}

TEST(DeepestBranch, CorruptCycleHitsGuard)
{
    std::vector<TxnNode> self_loop{bare_node(1, {0})};
    EXPECT_THROW(deepest_branch(self_loop, 0), CycleDetected);

    std::vector<TxnNode> ring{bare_node(1, {1}), bare_node(2, {2}), bare_node(3, {0})};
    EXPECT_THROW(deepest_branch(ring, 0), CycleDetected);

    // a cycle hanging off an otherwise fine branch
    std::vector<TxnNode> tail_loop{bare_node(1, {1, 2}), bare_node(2, {}), bare_node(3, {3}), bare_node(4, {2})};
    EXPECT_THROW(deepest_branch(tail_loop, 0), CycleDetected);
}

TEST(DeepestBranch, ForgedSelfReferencingMarkIsCaught)
{
    // A node whose stored mark equals its own previous_mark cannot come out of
    // keccak, but a corrupt node list can contain one.
    TxnNode n = bare_node(1, {});
    n.fpv.previous_mark = n.mark;
    EXPECT_THROW(build_series({n}), CycleDetected);
}
