#pragma once

#include <kal1/kal1.hpp>
#include <kal1/niederreiter.hpp>
#include <kal1/rng.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

namespace kal1 {

enum class SchemeId : std::uint8_t {
   Niederreiter = 0x00,
   Kal1Dense = 0x01,
   Kal1S1 = 0x02,
   Kal1S2 = 0x03,
};

inline constexpr std::uint8_t FormatVersion = 0x01;
/// magic(4) version(1) scheme(1) n,k,t,m as u16 big-endian(8) w(1)
inline constexpr std::size_t PublicHeaderSize = 15;

using PublicKey = std::variant<NiedPublicKey, Kal1PublicKey, Kal1S1Key, Kal1S2Key>;

SchemeId scheme_of(const PublicKey& pk);
const CodeParams& params_of(const PublicKey& pk);

/// Exact payload length in bits (header excluded).
std::size_t payload_bits(const PublicKey& pk);

/**
* "K1PK" | version | scheme | n | k | t | m | w | payload, payload bits packed
* most-significant-bit first and zero padded to a byte boundary:
*   0x00  h_prime_t, n x (n-k) bits row-major
*   0x01  seed row, n-k bits
*   0x02  w positions of index_width bits each
*   0x03  start then run, index_width bits each
*/
std::vector<std::uint8_t> serialize_pk(const PublicKey& pk);

/// Throws FormatError on any malformed input.
PublicKey parse_pk(std::span<const std::uint8_t> bytes);

/// Just the payload bits of serialize_pk, as a '0'/'1' string.
std::string payload_bit_string(const PublicKey& pk);

/**
* Seed-based private key. Layout:
*   "K1SK" | version | scheme | n | k | t | m | w | run_start(u16) | run_len(u16)
*   | seed(16) | crc32 of serialize_pk(regenerated public key) (u32 big-endian)
*/
struct PrivateKeyFile {
      SchemeId scheme = SchemeId::Kal1Dense;
      CodeParams params;
      SeedRowPolicy policy;
      Seed seed{};
      std::uint32_t checksum = 0;
};

inline constexpr std::size_t PrivateKeyFileSize = 15 + 4 + 16 + 4;

std::vector<std::uint8_t> serialize_sk(const PrivateKeyFile& sk);
PrivateKeyFile parse_sk(std::span<const std::uint8_t> bytes);

std::uint32_t pk_checksum(const PublicKey& pk);

/// Bit vector as ceil(len/8) bytes, most-significant-bit first.
std::vector<std::uint8_t> pack_bits(const BitVector& v);
/// FormatError unless bytes has exactly ceil(len/8) bytes with zero padding.
BitVector unpack_bits(std::span<const std::uint8_t> bytes, std::size_t len);

}  // namespace kal1
