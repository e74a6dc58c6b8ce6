#include "hms/chain/block.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <unordered_set>

#include "hms/core/errors.hpp"
#include "hms/engine/hash_mark_set.hpp"

namespace hms {

std::vector<Transaction> baseline_order(std::span<const Transaction> pending, DeterministicRng& rng)
{
    std::map<Address, std::vector<Transaction>> queues;
    for (const auto& txn : pending) queues[txn.sender].push_back(txn);

    std::vector<const Address*> slots;
    slots.reserve(pending.size());
    for (auto& [sender, txns] : queues) {
        std::stable_sort(txns.begin(), txns.end(),
                         [](const Transaction& a, const Transaction& b) { return a.nonce < b.nonce; });
        for (std::size_t i = 0; i < txns.size(); ++i) slots.push_back(&sender);
    }
    rng.shuffle(std::span(slots));

    std::map<Address, std::size_t> cursor;
    std::vector<Transaction> order;
    order.reserve(pending.size());
    for (const Address* sender : slots) order.push_back(queues[*sender][cursor[*sender]++]);
    return order;
}

std::vector<Transaction> enforce_nonce_order(std::span<const Transaction> desired)
{
    std::map<Address, std::vector<std::size_t>> queues;
    for (std::size_t i = 0; i < desired.size(); ++i) queues[desired[i].sender].push_back(i);
    for (auto& [sender, idx] : queues) {
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t a, std::size_t b) { return desired[a].nonce < desired[b].nonce; });
        std::reverse(idx.begin(), idx.end());  // back() is the lowest nonce
    }

    // min-heap over desired positions of each sender's next transaction
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (auto& [sender, idx] : queues) ready.push(idx.back());

    std::vector<Transaction> out;
    out.reserve(desired.size());
    while (!ready.empty()) {
        std::size_t pos = ready.top();
        ready.pop();
        out.push_back(desired[pos]);
        auto& idx = queues[desired[pos].sender];
        idx.pop_back();
        if (!idx.empty()) ready.push(idx.back());
    }
    return out;
}

std::vector<Transaction> semantic_order(std::span<const Transaction> pending, const ContractState& pre_state)
{
    auto series = build_series(process(pending));

    std::vector<bool> used(pending.size(), false);
    std::vector<std::size_t> order;
    order.reserve(pending.size());

    auto place_buys_quoting = [&](const Hash256& mark) {
        for (std::size_t i = 0; i < pending.size(); ++i) {
            if (used[i] || pending[i].kind != TxnKind::Buy) continue;
            auto fpv = pending[i].fpv();
            if (fpv && fpv->previous_mark == mark) {
                used[i] = true;
                order.push_back(i);
            }
        }
    };

    place_buys_quoting(pre_state.mark);
    if (series) {
        for (const auto& node : series->nodes) {
            for (std::size_t i = 0; i < pending.size(); ++i) {
                if (!used[i] && pending[i].id == node.txn_id) {
                    used[i] = true;
                    order.push_back(i);
                    break;
                }
            }
            place_buys_quoting(node.mark);
        }
    }
    for (std::size_t i = 0; i < pending.size(); ++i) {
        if (!used[i]) order.push_back(i);
    }

    std::vector<Transaction> desired;
    desired.reserve(order.size());
    for (std::size_t i : order) desired.push_back(pending[i]);
    return enforce_nonce_order(desired);
}

Block execute_block(std::uint64_t height, Tick mined_tick, std::vector<Transaction> txns,
                    const ContractState& pre_state)
{
    Block block;
    block.height = height;
    block.mined_tick = mined_tick;
    block.pre_state = pre_state;
    block.statuses.reserve(txns.size());
    ContractState state = pre_state;
    for (const auto& txn : txns) {
        auto result = execute(state, txn);
        state = result.state;
        block.statuses.push_back(result.status);
    }
    block.post_state = state;
    block.txns = std::move(txns);
    return block;
}

Block mine_block(TxPool& pool, MinerPolicy policy, const ContractState& pre_state, std::size_t capacity,
                 DeterministicRng& rng, std::uint64_t height, Tick mined_tick)
{
    if (capacity == 0) throw ConfigError("block capacity must be at least 1");

    const auto& pending = pool.pending();
    std::vector<Transaction> order = policy == MinerPolicy::Baseline ? baseline_order(pending, rng)
                                                                     : semantic_order(pending, pre_state);
    if (order.size() > capacity) order.resize(capacity);

    std::vector<TxnId> included;
    included.reserve(order.size());
    for (const auto& txn : order) included.push_back(txn.id);
    pool.remove(included);

    return execute_block(height, mined_tick, std::move(order), pre_state);
}

bool validate_block(const Block& block)
{
    if (block.statuses.size() != block.txns.size()) return false;
    Block replay = execute_block(block.height, block.mined_tick, block.txns, block.pre_state);
    return serialize(replay.post_state) == serialize(block.post_state) && replay.statuses == block.statuses;
}

} // namespace hms
