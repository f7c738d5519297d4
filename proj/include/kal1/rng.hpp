#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace kal1 {

using Seed = std::array<std::uint8_t, 16>;

/**
* Deterministic generator: the AES-128 keystream in counter mode.
*
* The key is the 16-byte seed. Block i of the keystream is AES-128(seed, i)
* with i encoded as a 128-bit big-endian counter starting at zero. Bytes are
* consumed in keystream order with no gaps, so every draw below is a pure
* function of (seed, number of bytes already consumed):
*
*   next_u32   four keystream bytes, little-endian
*   uniform(b) rejection sampling: draw x = next_u32 until
*              x < 2^32 - (2^32 mod b), return x mod b
*   fill       raw keystream bytes
*
* fork(s) derives an independent child seed AES-128(seed, 0xFF^12 || s_be32),
* a block far outside the reachable counter range.
*/
class Rng final {
   public:
      explicit Rng(const Seed& seed);
      ~Rng();

      Rng(const Rng&) = delete;
      Rng& operator=(const Rng&) = delete;
      Rng(Rng&& other) noexcept;
      Rng& operator=(Rng&& other) noexcept;

      const Seed& seed() const { return m_seed; }

      void fill(std::span<std::uint8_t> out);
      std::uint32_t next_u32();
      /// Uniform integer in [0, bound); bound must be nonzero.
      std::uint32_t uniform(std::uint32_t bound);

      Rng fork(std::uint32_t stream) const;

   private:
      void refill();

      Seed m_seed;
      void* m_ctx = nullptr;
      std::array<std::uint8_t, 16> m_block{};
      std::size_t m_used = 16;
      std::array<std::uint8_t, 16> m_counter{};
};

Seed seed_from_hex(std::string_view hex);
std::string seed_to_hex(const Seed& seed);
Seed seed_from_entropy();

}  // namespace kal1
