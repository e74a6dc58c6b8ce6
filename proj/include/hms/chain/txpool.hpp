#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "hms/chain/transaction.hpp"

namespace hms {

struct SubmitAck {
    TxnId txn_id = 0;
    /// Global arrival position, starting at 0.
    std::uint64_t ingestion_seq = 0;
};

/// Shared pool of pending transactions. Keeps arrival order and enforces
/// gapless per-sender nonces on entry.
class TxPool {
public:
    /// Throws RejectedSubmission unless txn.nonce is the sender's next nonce.
    SubmitAck submit(Transaction txn);

    /// Next nonce the pool will accept from `sender`.
    std::uint64_t next_nonce(const Address& sender) const;

    /// Pending transactions in ingestion order.
    const std::vector<Transaction>& pending() const { return pending_; }
    std::vector<Transaction> snapshot() const { return pending_; }

    /// Pending transactions grouped by sender, each group in nonce order.
    std::map<Address, std::vector<Transaction>> by_sender() const;

    /// Drops the given ids; ids that are not pending are ignored.
    void remove(std::span<const TxnId> ids);

    bool contains(TxnId id) const;
    std::size_t size() const { return pending_.size(); }
    bool empty() const { return pending_.empty(); }

private:
    std::vector<Transaction> pending_;
    std::map<Address, std::uint64_t> next_nonce_;
    std::uint64_t next_seq_ = 0;
};

} // namespace hms
