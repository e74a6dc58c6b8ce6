#include "hms/core/fpv.hpp"

#include <algorithm>
#include <string>

#include "hms/core/errors.hpp"
#include "hms/core/keccak.hpp"

namespace hms {

FpvBytes encode_fpv(const Fpv& fpv)
{
    FpvBytes out{};
    auto it = std::copy(fpv.flag.bytes.begin(), fpv.flag.bytes.end(), out.begin());
    it = std::copy(fpv.previous_mark.bytes.begin(), fpv.previous_mark.bytes.end(), it);
    std::copy(fpv.value.bytes.begin(), fpv.value.bytes.end(), it);
    return out;
}

std::optional<Fpv> try_decode_fpv(std::span<const std::uint8_t> bytes)
{
    if (bytes.size() != kFpvSize) return std::nullopt;
    Fpv fpv;
    fpv.flag = Word::from_span(bytes.subspan<0, 32>());
    fpv.previous_mark = Hash256::from_span(bytes.subspan<32, 32>());
    fpv.value = Word::from_span(bytes.subspan<64, 32>());
    return fpv;
}

Fpv decode_fpv(std::span<const std::uint8_t> bytes)
{
    auto fpv = try_decode_fpv(bytes);
    if (!fpv) {
        throw MalformedInput("FPV must be 96 bytes, got " + std::to_string(bytes.size()));
    }
    return *fpv;
}

Hash256 compute_mark(const Hash256& previous_mark, const Word& value)
{
    std::array<std::uint8_t, 64> buf{};
    std::copy(previous_mark.bytes.begin(), previous_mark.bytes.end(), buf.begin());
    std::copy(value.bytes.begin(), value.bytes.end(), buf.begin() + 32);
    return keccak256(buf);
}

const Hash256& genesis_mark()
{
    static const Hash256 mark = keccak256(Word{}.bytes);
    return mark;
}

} // namespace hms
