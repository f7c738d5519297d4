#pragma once

#include <kal1/kal1.hpp>
#include <kal1/niederreiter.hpp>
#include <kal1/serialize.hpp>

#include <cstdint>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

namespace kal1 {

using PrivateKey = std::variant<NiedPrivateKey, Kal1PrivateKey>;

/// Everything one seed expands to under a given scheme.
struct KeyBundle {
      PublicKey pk;
      PrivateKey sk;
      PrivateKeyFile sk_file;
};

SchemeId parse_scheme_name(std::string_view name);
std::string_view scheme_name(SchemeId id);

/// Policy implied by the scheme; sparse/run settings are only read for S1/S2.
SeedRowPolicy policy_for(SchemeId scheme, const SparsePolicy& sparse, const RunPolicy& run);

KeyBundle generate_keys(SchemeId scheme, const CodeParams& params, const SeedRowPolicy& policy, const Seed& seed);

/// Regenerates from the seed and checks the stored checksum (FormatError on mismatch).
KeyBundle restore_keys(const PrivateKeyFile& file);

/// Message size in bytes accepted by encrypt_message.
std::size_t message_bytes(SchemeId scheme, const CodeParams& params);

/**
* Niederreiter maps the message to a weight-t word of length n; the Kal1
* schemes map it to length n-k and prepend k zeros.
*/
BitVector encrypt_message(const PublicKey& pk, std::span<const std::uint8_t> msg);
std::vector<std::uint8_t> decrypt_message(const KeyBundle& keys, const BitVector& ct);

}  // namespace kal1
