#include "hms/clients/clients.hpp"

#include <stdexcept>
#include <string>

namespace hms::clients {
namespace {

void require(const ClientConfig& client, Strategy expected)
{
    if (client.strategy != expected) {
        throw std::logic_error("client " + client.address.hex() + " is a " + std::string(to_string(client.strategy)) +
                               ", not a " + std::string(to_string(expected)));
    }
}

Transaction build(ClientConfig& client, TxnKind kind, const Fpv& fpv, TxnStamp stamp)
{
    return make_transaction(stamp.id, client.address, client.next_nonce++, kind, fpv, stamp.tick);
}

} // namespace

std::string_view to_string(Strategy s)
{
    switch (s) {
    case Strategy::BaselineBuyer: return "baseline_buyer";
    case Strategy::HmsBuyer: return "hms_buyer";
    case Strategy::OwnerSetter: return "owner_setter";
    }
    return "?";
}

Transaction make_buy_baseline(ClientConfig& client, const ContractState& committed, TxnStamp stamp)
{
    require(client, Strategy::BaselineBuyer);
    return build(client, TxnKind::Buy, Fpv{kSuccessFlag, committed.mark, committed.value}, stamp);
}

Transaction make_buy_hms(ClientConfig& client, const RaaResult& raa_view, TxnStamp stamp)
{
    require(client, Strategy::HmsBuyer);
    return build(client, TxnKind::Buy, Fpv{kSuccessFlag, raa_view.mark, raa_view.value}, stamp);
}

Transaction make_set(ClientConfig& owner, const RaaResult& basis, const Word& new_value, TxnStamp stamp)
{
    require(owner, Strategy::OwnerSetter);
    const Word flag = basis.flag == kHeadFlag ? kHeadFlag : kSuccessFlag;
    return build(owner, TxnKind::Set, Fpv{flag, basis.mark, new_value}, stamp);
}

Transaction make_set(ClientConfig& owner, const ContractState& committed, const Word& new_value, TxnStamp stamp)
{
    return make_set(owner, RaaResult{kHeadFlag, committed.mark, committed.value}, new_value, stamp);
}

} // namespace hms::clients
