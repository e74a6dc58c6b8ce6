#include "hms/engine/hash_mark_set.hpp"

#include <algorithm>
#include <string>

#include "hms/core/errors.hpp"

namespace hms {
namespace {

struct Search {
    std::span<const TxnNode> graph;
    std::vector<std::size_t> path;
    std::size_t max_depth = 0;
    std::vector<std::size_t> max_path;
    std::size_t deepest_call = 0;

    bool better(std::size_t depth) const
    {
        if (depth != max_depth) return depth > max_depth;
        return graph[path.back()].mark < graph[max_path.back()].mark;
    }

    void visit(std::size_t node, std::size_t depth)
    {
        if (depth > graph.size()) {
            throw CycleDetected("successor graph revisits a node after " + std::to_string(graph.size()) +
                                " levels");
        }
        deepest_call = std::max(deepest_call, depth);

        const auto& successors = graph[node].next;
        if (successors.empty()) {
            if (max_path.empty() || better(depth)) {
                max_depth = depth;
                max_path = path;
            }
            return;
        }
        for (std::size_t succ : successors) {
            path.push_back(succ);
            visit(succ, depth + 1);
            path.pop_back();
        }
    }
};

bool prefer(const Branch& candidate, const Branch& best, std::span<const TxnNode> graph)
{
    if (candidate.depth != best.depth) return candidate.depth > best.depth;
    return graph[candidate.path.back()].mark < graph[best.path.back()].mark;
}

} // namespace

bool success(const Transaction& txn)
{
    auto fpv = txn.fpv();
    if (!fpv) return false;
    return fpv->flag == kSuccessFlag || fpv->flag == kHeadFlag;
}

std::vector<TxnNode> process(std::span<const Transaction> pool)
{
    std::vector<TxnNode> out;
    for (const auto& txn : pool) {
        if (txn.kind != TxnKind::Set) continue;
        auto fpv = txn.fpv();
        if (!fpv || !(fpv->flag == kSuccessFlag || fpv->flag == kHeadFlag)) continue;
        TxnNode node;
        node.txn_id = txn.id;
        node.fpv = *fpv;
        node.mark = compute_mark(fpv->previous_mark, fpv->value);
        node.sender = txn.sender;
        node.nonce = txn.nonce;
        out.push_back(std::move(node));
    }
    return out;
}

void link_successors(std::vector<TxnNode>& nodes)
{
    for (auto& n : nodes) {
        n.prev.reset();
        n.next.clear();
    }
    for (std::size_t a = 0; a < nodes.size(); ++a) {
        for (std::size_t b = 0; b < nodes.size(); ++b) {
            if (nodes[a].mark == nodes[b].fpv.previous_mark) {
                nodes[b].prev = a;
                nodes[a].next.push_back(b);
            }
        }
    }
}

Branch deepest_branch(std::span<const TxnNode> graph, std::size_t head)
{
    Search search;
    search.graph = graph;
    search.path = {head};
    search.visit(head, 1);
    return Branch{search.max_depth, std::move(search.max_path), search.deepest_call};
}

std::optional<Series> build_series(std::vector<TxnNode> nodes)
{
    link_successors(nodes);

    std::optional<Branch> best;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].fpv.flag != kHeadFlag) continue;
        Branch branch = deepest_branch(nodes, i);
        if (!best || prefer(branch, *best, nodes)) best = std::move(branch);
    }
    if (!best) return std::nullopt;

    Series series;
    series.nodes.reserve(best->path.size());
    for (std::size_t pos = 0; pos < best->path.size(); ++pos) {
        TxnNode node = nodes[best->path[pos]];
        node.prev = pos == 0 ? std::nullopt : std::optional<std::size_t>(pos - 1);
        node.next.clear();
        if (pos + 1 < best->path.size()) node.next.push_back(pos + 1);
        series.nodes.push_back(std::move(node));
    }
    return series;
}

RaaResult hash_mark_set(const Fpv& input, std::span<const Transaction> pool, const ContractState& committed)
{
    RaaResult raa{input.flag, input.previous_mark, input.value};
    auto txn_list = process(pool);
    std::optional<Series> series;
    if (!txn_list.empty()) series = build_series(std::move(txn_list));
    if (!series) {
        raa = {kHeadFlag, committed.mark, committed.value};
        return raa;
    }
    raa = {kSuccessFlag, series->tail().mark, series->tail().fpv.value};
    return raa;
}

} // namespace hms
