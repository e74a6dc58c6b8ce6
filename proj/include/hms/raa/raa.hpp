#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "hms/chain/contract.hpp"
#include "hms/chain/transaction.hpp"
#include "hms/core/fpv.hpp"
#include "hms/engine/hash_mark_set.hpp"

namespace hms::raa {

/// Contract entry points. Only Mark and Get are pure views.
enum class ContractFunction : std::uint8_t { Mark, Get, Set, Buy };

std::string_view to_string(ContractFunction fn);

constexpr bool is_view(ContractFunction fn)
{
    return fn == ContractFunction::Mark || fn == ContractFunction::Get;
}

/// Rewrites the argument triple of a view call with the HMS result over
/// `pool`. Arguments of a transaction-sending call are signed by the sender
/// and cannot be rewritten: Set and Buy throw RefusedAugmentation.
Fpv augment_view_call(ContractFunction fn, const Fpv& args, std::span<const Transaction> pool,
                      const ContractState& committed);

/// mark(raa) -> raa[1]
inline Hash256 view_mark(const Fpv& augmented) { return augmented.previous_mark; }

/// get(raa) -> raa[2]
inline Word view_get(const Fpv& augmented) { return augmented.value; }

/// Client-side convenience: one augmented call read back as an RaaResult.
RaaResult query(std::span<const Transaction> pool, const ContractState& committed);

} // namespace hms::raa
