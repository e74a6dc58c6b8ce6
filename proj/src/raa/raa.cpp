#include "hms/raa/raa.hpp"

#include <string>

#include "hms/core/errors.hpp"

namespace hms::raa {

std::string_view to_string(ContractFunction fn)
{
    switch (fn) {
    case ContractFunction::Mark: return "mark";
    case ContractFunction::Get: return "get";
    case ContractFunction::Set: return "set";
    case ContractFunction::Buy: return "buy";
    }
    return "?";
}

Fpv augment_view_call(ContractFunction fn, const Fpv& args, std::span<const Transaction> pool,
                      const ContractState& committed)
{
    if (!is_view(fn)) {
        throw RefusedAugmentation("cannot augment arguments of state-changing call '" + std::string(to_string(fn)) +
                                  "'");
    }
    RaaResult result = hash_mark_set(args, pool, committed);
    return Fpv{result.flag, result.mark, result.value};
}

RaaResult query(std::span<const Transaction> pool, const ContractState& committed)
{
    Fpv augmented = augment_view_call(ContractFunction::Get, Fpv{}, pool, committed);
    return RaaResult{augmented.flag, view_mark(augmented), view_get(augmented)};
}

} // namespace hms::raa
