#include <kal1/kal1.hpp>

#include <kal1/error.hpp>

#include <bit>
#include <string>

namespace kal1 {

std::size_t index_width(const CodeParams& params) {
   return static_cast<std::size_t>(std::bit_width(params.redundancy() - 1));
}

void validate_policy(const CodeParams& params, const SeedRowPolicy& policy) {
   params.validate();
   const std::size_t r = params.redundancy();
   if(const auto* sparse = std::get_if<SparsePolicy>(&policy)) {
      require(sparse->weight >= 1 && sparse->weight <= r && sparse->weight <= 255,
              ErrorCode::Policy,
              "sparse weight must be in [1, min(n-k, 255)]");
   } else if(const auto* run = std::get_if<RunPolicy>(&policy)) {
      require(run->length >= 2, ErrorCode::Policy, "run length must be at least 2");
      require(run->start < r && run->length <= r - run->start, ErrorCode::Policy, "run must fit inside n-k without wrapping");
      require(run->length < (std::size_t(1) << index_width(params)),
              ErrorCode::Policy,
              "run length does not fit the " + std::to_string(index_width(params)) + "-bit count field");
   }
}

BitVector draw_seed_row(const CodeParams& params, const SeedRowPolicy& policy, Rng& rng) {
   validate_policy(params, policy);
   const std::size_t r = params.redundancy();
   BitVector row(r);
   if(std::holds_alternative<DensePolicy>(policy)) {
      row = random_bits(r, rng);
   } else if(const auto* sparse = std::get_if<SparsePolicy>(&policy)) {
      while(row.weight() < sparse->weight) {
         row.set(rng.uniform(static_cast<std::uint32_t>(r)));
      }
   } else {
      const auto& run = std::get<RunPolicy>(policy);
      for(std::size_t i = 0; i < run.length; ++i) {
         row.set(run.start + i);
      }
   }
   return row;
}

ExpandedCyclicKey expand_cyclic(const Kal1PublicKey& pk) {
   const auto& p = pk.params;
   require(pk.seed_row.size() == p.redundancy(), ErrorCode::DimensionMismatch, "seed row length differs from n-k");
   BinaryMatrix h(p.n, p.redundancy());
   BitVector row = pk.seed_row;
   for(std::size_t i = 0; i < p.k; ++i) {
      h.set_row(i, row);
      row = row.rotate_right(1);
   }
   for(std::size_t i = 0; i < p.redundancy(); ++i) {
      h.set(p.k + i, i);
   }
   return ExpandedCyclicKey{p, std::move(h)};
}

Kal1KeyPair kal1_keygen(const CodeParams& params, const SeedRowPolicy& policy, Rng& rng) {
   validate_policy(params, policy);
   NiedKeyPair inner = nied_keygen(params, rng);
   BitVector seed_row = draw_seed_row(params, policy, rng);
   return Kal1KeyPair{
      Kal1PublicKey{params, seed_row},
      Kal1PrivateKey{std::move(inner.sk), seed_row, std::move(inner.pk)},
   };
}

BinaryMatrix h_secondary_t(const ExpandedCyclicKey& cyclic, const Kal1PrivateKey& sk) {
   return bm_add(cyclic.h_cyclic_t, sk.h_prime.h_prime_t);
}

BitVector kal1_error_vector(const CodeParams& params, std::span<const std::uint8_t> msg) {
   const auto codec = shared_codec(params.redundancy(), params.t);
   return BitVector::concat(BitVector(params.k), codec->encode(msg));
}

BitVector kal1_encrypt(const ExpandedCyclicKey& cyclic, std::span<const std::uint8_t> msg) {
   return vec_mul(kal1_error_vector(cyclic.params, msg), cyclic.h_cyclic_t);
}

BitVector kal1_encrypt(const Kal1PublicKey& pk, std::span<const std::uint8_t> msg) {
   return kal1_encrypt(expand_cyclic(pk), msg);
}

std::vector<std::uint8_t> kal1_decrypt(const Kal1PrivateKey& sk, const BitVector& c) {
   const auto& params = sk.inner.code.params();
   const BitVector e = nied_decrypt(sk.inner, c);
   for(std::size_t i = 0; i < params.k; ++i) {
      require(!e.get(i), ErrorCode::Format, "decrypted error vector has a nonzero prefix");
   }
   const BitVector e_i = e.slice(params.k, params.redundancy());
   require(e_i.weight() == params.t, ErrorCode::Format, "decrypted error vector does not have weight t");
   return shared_codec(params.redundancy(), params.t)->decode(e_i);
}

Kal1S1Key to_s1(const Kal1PublicKey& pk) {
   auto positions = pk.seed_row.support();
   require(!positions.empty() && positions.size() <= 255, ErrorCode::Policy, "seed row weight must be in [1, 255]");
   return Kal1S1Key{pk.params, std::move(positions)};
}

Kal1S2Key to_s2(const Kal1PublicKey& pk) {
   const auto positions = pk.seed_row.support();
   require(positions.size() >= 2 && positions.back() - positions.front() + 1 == positions.size(),
           ErrorCode::Policy,
           "seed row is not a single run of at least two ones");
   Kal1S2Key key{pk.params, positions.front(), positions.size()};
   validate_policy(key.params, RunPolicy{key.start, key.run});
   return key;
}

Kal1PublicKey from_s1(const Kal1S1Key& key) {
   BitVector row(key.params.redundancy());
   for(auto p : key.positions) {
      require(p < row.size(), ErrorCode::Format, "sparse position out of range");
      row.set(p);
   }
   return Kal1PublicKey{key.params, row};
}

Kal1PublicKey from_s2(const Kal1S2Key& key) {
   validate_policy(key.params, RunPolicy{key.start, key.run});
   BitVector row(key.params.redundancy());
   for(std::size_t i = 0; i < key.run; ++i) {
      row.set(key.start + i);
   }
   return Kal1PublicKey{key.params, row};
}

}  // namespace kal1
