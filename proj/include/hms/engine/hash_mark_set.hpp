#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hms/chain/contract.hpp"
#include "hms/chain/transaction.hpp"
#include "hms/core/fpv.hpp"

namespace hms {

/// One HMS set transaction lifted out of the pool, with its computed mark and
/// its position in the successor graph. prev/next are indices into the list
/// the node lives in.
struct TxnNode {
    TxnId txn_id = 0;
    Fpv fpv;
    Hash256 mark;
    Address sender;
    std::uint64_t nonce = 0;
    std::optional<std::size_t> prev;
    std::vector<std::size_t> next;
};

/// A hash-chained run of set transactions rooted at a head candidate.
/// Within a series, prev/next refer to neighbouring positions.
struct Series {
    std::vector<TxnNode> nodes;

    const TxnNode& head() const { return nodes.front(); }
    const TxnNode& tail() const { return nodes.back(); }
    std::size_t size() const { return nodes.size(); }
};

/// Result of a Read-Uncommitted query, shaped like the FPV it rewrites.
struct RaaResult {
    Word flag;
    Hash256 mark;
    Word value;

    bool operator==(const RaaResult&) const = default;
};

struct Branch {
    std::size_t depth = 0;
    std::vector<std::size_t> path;
    /// Deepest recursion level reached while searching; bounded by the graph size.
    std::size_t max_recursion_depth = 0;
};

/// True iff the FPV flag is SUCCESS_FLAG or HEAD_FLAG. Undecodable input is not a success.
bool success(const Transaction& txn);

/// Keeps the successful set transactions of the pool, in pool order, with marks computed.
std::vector<TxnNode> process(std::span<const Transaction> pool);

/// Links a -> b wherever a.mark == b.fpv.previous_mark. Existing links are replaced.
void link_successors(std::vector<TxnNode>& nodes);

/// Longest root-to-leaf path from `head`. Equal-depth paths are resolved in
/// favour of the byte-wise smallest tail mark. Throws CycleDetected if the
/// recursion goes deeper than the graph has nodes.
Branch deepest_branch(std::span<const TxnNode> graph, std::size_t head);

/// Links the nodes and returns the deepest branch over all HEAD_FLAG roots,
/// or nullopt when there is no head candidate.
std::optional<Series> build_series(std::vector<TxnNode> nodes);

/// Read-Uncommitted view of P. With no series in the pool the committed
/// (mark, value) comes back under HEAD_FLAG; otherwise the series tail under
/// SUCCESS_FLAG. `input` is the caller's argument triple being rewritten.
RaaResult hash_mark_set(const Fpv& input, std::span<const Transaction> pool, const ContractState& committed);

} // namespace hms
