#include "hms/chain/txpool.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "hms/core/errors.hpp"

namespace hms {

SubmitAck TxPool::submit(Transaction txn)
{
    const std::uint64_t expected = next_nonce(txn.sender);
    if (txn.nonce != expected) {
        throw RejectedSubmission("nonce " + std::to_string(txn.nonce) + " from " + txn.sender.hex() +
                                 ", expected " + std::to_string(expected));
    }
    next_nonce_[txn.sender] = expected + 1;
    SubmitAck ack{txn.id, next_seq_++};
    pending_.push_back(std::move(txn));
    return ack;
}

std::uint64_t TxPool::next_nonce(const Address& sender) const
{
    auto it = next_nonce_.find(sender);
    return it == next_nonce_.end() ? 0 : it->second;
}

std::map<Address, std::vector<Transaction>> TxPool::by_sender() const
{
    std::map<Address, std::vector<Transaction>> groups;
    for (const auto& txn : pending_) groups[txn.sender].push_back(txn);
    for (auto& [sender, txns] : groups) {
        std::stable_sort(txns.begin(), txns.end(),
                         [](const Transaction& a, const Transaction& b) { return a.nonce < b.nonce; });
    }
    return groups;
}

void TxPool::remove(std::span<const TxnId> ids)
{
    std::unordered_set<TxnId> drop(ids.begin(), ids.end());
    std::erase_if(pending_, [&](const Transaction& t) { return drop.contains(t.id); });
}

bool TxPool::contains(TxnId id) const
{
    return std::any_of(pending_.begin(), pending_.end(), [&](const Transaction& t) { return t.id == id; });
}

} // namespace hms
