#include "hms/chain/contract.hpp"

#include <algorithm>

#include "hms/core/errors.hpp"

namespace hms {

std::string_view to_string(TxnKind kind)
{
    return kind == TxnKind::Set ? "set" : "buy";
}

ContractState genesis_state()
{
    ContractState s;
    s.mark = genesis_mark();
    return s;
}

std::array<std::uint8_t, kContractStateSize> serialize(const ContractState& state)
{
    std::array<std::uint8_t, kContractStateSize> out{};
    auto it = std::copy(state.owner_address.bytes.begin(), state.owner_address.bytes.end(), out.begin());
    it = std::copy(state.mark.bytes.begin(), state.mark.bytes.end(), it);
    it = std::copy(state.value.bytes.begin(), state.value.bytes.end(), it);
    for (std::uint64_t counter : {state.n_set, state.n_buy}) {
        for (int shift = 56; shift >= 0; shift -= 8) *it++ = static_cast<std::uint8_t>(counter >> shift);
    }
    return out;
}

ContractState deserialize_contract_state(std::span<const std::uint8_t> bytes)
{
    if (bytes.size() != kContractStateSize) throw MalformedInput("contract state image has wrong size");
    ContractState s;
    s.owner_address = Address::from_span(bytes.subspan<0, 32>());
    s.mark = Hash256::from_span(bytes.subspan<32, 32>());
    s.value = Word::from_span(bytes.subspan<64, 32>());
    auto read_u64 = [&](std::size_t at) {
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < 8; ++i) v = (v << 8) | bytes[at + i];
        return v;
    };
    s.n_set = read_u64(96);
    s.n_buy = read_u64(104);
    return s;
}

ExecResult execute_set(const ContractState& state, const Fpv& fpv, const Address& sender)
{
    if (fpv.previous_mark != state.mark) return {state, TxnStatus::Failed};
    ContractState next = state;
    next.n_set += 1;
    next.owner_address = sender;
    next.mark = compute_mark(fpv.previous_mark, fpv.value);
    next.value = fpv.value;
    return {next, TxnStatus::Succeeded};
}

ExecResult execute_buy(const ContractState& state, const Fpv& fpv, const Address& sender)
{
    if (fpv.previous_mark != state.mark || fpv.value != state.value) return {state, TxnStatus::Failed};
    ContractState next = state;
    next.n_buy += 1;
    next.owner_address = sender;
    return {next, TxnStatus::Succeeded};
}

ExecResult execute(const ContractState& state, const Transaction& txn)
{
    auto fpv = txn.fpv();
    if (!fpv) return {state, TxnStatus::Failed};
    return txn.kind == TxnKind::Set ? execute_set(state, *fpv, txn.sender)
                                    : execute_buy(state, *fpv, txn.sender);
}

} // namespace hms
