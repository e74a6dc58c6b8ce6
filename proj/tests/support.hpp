#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hms/chain/contract.hpp"
#include "hms/chain/transaction.hpp"
#include "hms/core/rng.hpp"

namespace hms::test {

inline Address sender(std::uint64_t i) { return Address::from_uint(0x5000 + i); }

/// Random pool of at most `max_sets` HMS sets forming a forest of mark
/// chains: each set either opens a new head (from committed state or from
/// an unknown mark) or extends an earlier set. Senders only quote marks that
/// already exist, so nonces grow along every chain. Buys, rejected-flag sets
/// and undecodable inputs are mixed in as noise.
inline std::vector<Transaction> random_pool(DeterministicRng& rng, std::size_t max_sets,
                                            const ContractState& committed)
{
    std::vector<Transaction> pool;
    std::vector<Hash256> marks;
    std::uint64_t nonces[3] = {0, 0, 0};
    TxnId id = 1;
    auto next_tx = [&](TxnKind kind, const Fpv& fpv) {
        std::uint64_t s = rng.below(3);
        pool.push_back(make_transaction(id++, sender(s), nonces[s]++, kind, fpv, 0));
    };

    std::size_t n_sets = 1 + rng.below(max_sets);
    for (std::size_t i = 0; i < n_sets; ++i) {
        Word value = Word::from_uint(rng.below(4));
        Fpv fpv;
        std::uint64_t shape = rng.below(10);
        if (marks.empty() || shape < 2) {
            fpv = {kHeadFlag, committed.mark, value};
        } else if (shape < 3) {
            fpv = {kHeadFlag, Hash256::from_uint(rng.next()), value};
        } else {
            fpv = {kSuccessFlag, marks[rng.below(marks.size())], value};
        }
        next_tx(TxnKind::Set, fpv);
        marks.push_back(compute_mark(fpv.previous_mark, fpv.value));

        switch (rng.below(6)) {
        case 0: next_tx(TxnKind::Buy, {kSuccessFlag, marks.back(), value}); break;
        case 1: next_tx(TxnKind::Set, {kRejectedFlag, marks.back(), value}); break;
        case 2: {
            std::uint64_t s = rng.below(3);
            pool.push_back(Transaction{id++, sender(s), nonces[s]++, TxnKind::Set, {1, 2, 3}, 0});
            break;
        }
        default: break;
        }
    }
    return pool;
}

struct OracleBranch {
    std::size_t length = 0;
    Hash256 tail;
};

/// Exhaustive enumeration of every chain that starts at a HEAD_FLAG set,
/// written without the engine: longest wins, ties go to the smallest tail mark.
inline std::optional<OracleBranch> longest_chain_oracle(const std::vector<Transaction>& pool)
{
    struct Node {
        Hash256 prev;
        Hash256 mark;
        bool head;
    };
    std::vector<Node> nodes;
    for (const auto& t : pool) {
        auto fpv = t.fpv();
        if (t.kind != TxnKind::Set || !fpv) continue;
        if (fpv->flag != kHeadFlag && fpv->flag != kSuccessFlag) continue;
        nodes.push_back({fpv->previous_mark, compute_mark(fpv->previous_mark, fpv->value), fpv->flag == kHeadFlag});
    }

    std::optional<OracleBranch> best;
    std::vector<std::pair<std::size_t, std::size_t>> stack;  // (node, length)
    for (std::size_t h = 0; h < nodes.size(); ++h) {
        if (!nodes[h].head) continue;
        stack.push_back({h, 1});
        while (!stack.empty()) {
            auto [n, len] = stack.back();
            stack.pop_back();
            bool leaf = true;
            for (std::size_t c = 0; c < nodes.size(); ++c) {
                if (nodes[c].prev == nodes[n].mark) {
                    leaf = false;
                    stack.push_back({c, len + 1});
                }
            }
            if (!leaf) continue;
            if (!best || len > best->length || (len == best->length && nodes[n].mark < best->tail)) {
                best = OracleBranch{len, nodes[n].mark};
            }
        }
    }
    return best;
}

} // namespace hms::test
