#include "hms/core/keccak.hpp"

#include <array>
#include <bit>
#include <cstring>

namespace hms {
namespace {

constexpr std::size_t kRateBytes = 136;  // 1600 - 2*256 bits

constexpr std::array<std::uint64_t, 24> kRoundConstants = {
    0x0000000000000001ULL, 0x0000000000008082ULL, 0x800000000000808aULL, 0x8000000080008000ULL,
    0x000000000000808bULL, 0x0000000080000001ULL, 0x8000000080008081ULL, 0x8000000000008009ULL,
    0x000000000000008aULL, 0x0000000000000088ULL, 0x0000000080008009ULL, 0x000000008000000aULL,
    0x000000008000808bULL, 0x800000000000008bULL, 0x8000000000008089ULL, 0x8000000000008003ULL,
    0x8000000000008002ULL, 0x8000000000000080ULL, 0x000000000000800aULL, 0x800000008000000aULL,
    0x8000000080008081ULL, 0x8000000000008080ULL, 0x0000000080000001ULL, 0x8000000080008008ULL,
};

// rho offsets and pi destinations, walked along the (x, y) -> (y, 2x + 3y) orbit
constexpr std::array<int, 24> kRho = {1,  3,  6,  10, 15, 21, 28, 36, 45, 55, 2,  14,
                                      27, 41, 56, 8,  25, 43, 62, 18, 39, 61, 20, 44};
constexpr std::array<int, 24> kPi = {10, 7,  11, 17, 18, 3, 5,  16, 8,  21, 24, 4,
                                     15, 23, 19, 13, 12, 2, 20, 14, 22, 9,  6,  1};

void keccak_f1600(std::array<std::uint64_t, 25>& a)
{
    for (std::uint64_t rc : kRoundConstants) {
        // theta
        std::array<std::uint64_t, 5> c{};
        for (int x = 0; x < 5; ++x) c[x] = a[x] ^ a[x + 5] ^ a[x + 10] ^ a[x + 15] ^ a[x + 20];
        for (int x = 0; x < 5; ++x) {
            std::uint64_t d = c[(x + 4) % 5] ^ std::rotl(c[(x + 1) % 5], 1);
            for (int y = 0; y < 25; y += 5) a[y + x] ^= d;
        }
        // rho + pi
        std::uint64_t carry = a[1];
        for (int i = 0; i < 24; ++i) {
            int j = kPi[i];
            std::uint64_t tmp = a[j];
            a[j] = std::rotl(carry, kRho[i]);
            carry = tmp;
        }
        // chi
        for (int y = 0; y < 25; y += 5) {
            std::array<std::uint64_t, 5> row{a[y], a[y + 1], a[y + 2], a[y + 3], a[y + 4]};
            for (int x = 0; x < 5; ++x) a[y + x] = row[x] ^ (~row[(x + 1) % 5] & row[(x + 2) % 5]);
        }
        // iota
        a[0] ^= rc;
    }
}

std::uint64_t load_le64(const std::uint8_t* p)
{
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | p[i];
    return v;
}

void absorb_block(std::array<std::uint64_t, 25>& state, const std::uint8_t* block)
{
    for (std::size_t i = 0; i < kRateBytes / 8; ++i) state[i] ^= load_le64(block + 8 * i);
    keccak_f1600(state);
}

} // namespace

Hash256 keccak256(std::span<const std::uint8_t> data)
{
    std::array<std::uint64_t, 25> state{};
    std::size_t offset = 0;
    for (; offset + kRateBytes <= data.size(); offset += kRateBytes) {
        absorb_block(state, data.data() + offset);
    }

    std::array<std::uint8_t, kRateBytes> last{};
    std::size_t rest = data.size() - offset;
    if (rest > 0) std::memcpy(last.data(), data.data() + offset, rest);
    last[rest] ^= 0x01;
    last[kRateBytes - 1] ^= 0x80;
    absorb_block(state, last.data());

    Hash256 out;
    for (std::size_t i = 0; i < 32; ++i) {
        out.bytes[i] = static_cast<std::uint8_t>(state[i / 8] >> (8 * (i % 8)));
    }
    return out;
}

} // namespace hms
