#pragma once

#include <kal1/binmat.hpp>
#include <kal1/cw_codec.hpp>
#include <kal1/niederreiter.hpp>
#include <kal1/rng.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

namespace kal1 {

/// Kal1 public key: the first row of the cyclic block, length n-k.
struct Kal1PublicKey {
      CodeParams params;
      BitVector seed_row;

      bool operator==(const Kal1PublicKey&) const = default;
};

/// Sparse seed row given by its sorted one-positions.
struct Kal1S1Key {
      CodeParams params;
      std::vector<std::size_t> positions;

      bool operator==(const Kal1S1Key&) const = default;
};

/// Seed row that is a single run of ones: [start, start + run).
struct Kal1S2Key {
      CodeParams params;
      std::size_t start = 0;
      std::size_t run = 0;

      bool operator==(const Kal1S2Key&) const = default;
};

struct Kal1PrivateKey {
      NiedPrivateKey inner;
      BitVector seed_row;
      /// The systematic Niederreiter matrix H'^T; secret in this scheme.
      NiedPublicKey h_prime;
};

struct Kal1KeyPair {
      Kal1PublicKey pk;
      Kal1PrivateKey sk;
};

/// n x (n-k): top k rows are seed_row rotated right by the row index, bottom n-k rows are I.
struct ExpandedCyclicKey {
      CodeParams params;
      BinaryMatrix h_cyclic_t;
};

struct DensePolicy {};
struct SparsePolicy {
      std::size_t weight = 10;
};
struct RunPolicy {
      std::size_t start = 0;
      std::size_t length = 2;
};
using SeedRowPolicy = std::variant<DensePolicy, SparsePolicy, RunPolicy>;

/// ceil(log2(n-k)): bits per position/start/count field of the compressed formats.
std::size_t index_width(const CodeParams& params);

/// Throws PolicyError when the policy cannot be realised (or serialised) at these parameters.
void validate_policy(const CodeParams& params, const SeedRowPolicy& policy);

/**
* Draws the seed row after the inner key: dense takes n-k uniform bits,
* sparse takes uniform(n-k) draws until w distinct positions are collected,
* run is deterministic.
*/
BitVector draw_seed_row(const CodeParams& params, const SeedRowPolicy& policy, Rng& rng);

ExpandedCyclicKey expand_cyclic(const Kal1PublicKey& pk);

Kal1KeyPair kal1_keygen(const CodeParams& params, const SeedRowPolicy& policy, Rng& rng);

/// H_secondary^T = H_cyclic^T + H'^T.
BinaryMatrix h_secondary_t(const ExpandedCyclicKey& cyclic, const Kal1PrivateKey& sk);

/// Weight-t word of length n-k for msg, padded with k leading zeros to length n.
BitVector kal1_error_vector(const CodeParams& params, std::span<const std::uint8_t> msg);

/// c = [0_k | phi(msg)] * H_cyclic^T.
BitVector kal1_encrypt(const ExpandedCyclicKey& cyclic, std::span<const std::uint8_t> msg);
BitVector kal1_encrypt(const Kal1PublicKey& pk, std::span<const std::uint8_t> msg);

/**
* Niederreiter decryption followed by the structural check that the recovered
* error is [0_k | e_i] with wt(e_i) = t (FormatError otherwise), then phi^-1.
*/
std::vector<std::uint8_t> kal1_decrypt(const Kal1PrivateKey& sk, const BitVector& c);

Kal1S1Key to_s1(const Kal1PublicKey& pk);
/// PolicyError unless the seed row is one run of at least two ones.
Kal1S2Key to_s2(const Kal1PublicKey& pk);
Kal1PublicKey from_s1(const Kal1S1Key& key);
Kal1PublicKey from_s2(const Kal1S2Key& key);

}  // namespace kal1
