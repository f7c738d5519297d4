#include <kal1/scheme.hpp>

#include <kal1/error.hpp>

#include <string>

namespace kal1 {

SchemeId parse_scheme_name(std::string_view name) {
   if(name == "niederreiter") {
      return SchemeId::Niederreiter;
   }
   if(name == "kal1") {
      return SchemeId::Kal1Dense;
   }
   if(name == "kal1-s1") {
      return SchemeId::Kal1S1;
   }
   if(name == "kal1-s2") {
      return SchemeId::Kal1S2;
   }
   fail(ErrorCode::Parameter, "unknown scheme '" + std::string(name) + "'");
}

std::string_view scheme_name(SchemeId id) {
   switch(id) {
      case SchemeId::Niederreiter:
         return "niederreiter";
      case SchemeId::Kal1Dense:
         return "kal1";
      case SchemeId::Kal1S1:
         return "kal1-s1";
      case SchemeId::Kal1S2:
         return "kal1-s2";
   }
   return "unknown";
}

SeedRowPolicy policy_for(SchemeId scheme, const SparsePolicy& sparse, const RunPolicy& run) {
   switch(scheme) {
      case SchemeId::Kal1S1:
         return sparse;
      case SchemeId::Kal1S2:
         return run;
      default:
         return DensePolicy{};
   }
}

KeyBundle generate_keys(SchemeId scheme, const CodeParams& params, const SeedRowPolicy& policy, const Seed& seed) {
   params.validate();
   Rng rng(seed);
   PrivateKeyFile file{scheme, params, DensePolicy{}, seed, 0};

   if(scheme == SchemeId::Niederreiter) {
      auto kp = nied_keygen(params, rng);
      file.checksum = pk_checksum(kp.pk);
      return KeyBundle{std::move(kp.pk), std::move(kp.sk), file};
   }

   const bool policy_matches = (scheme == SchemeId::Kal1Dense && std::holds_alternative<DensePolicy>(policy)) ||
                               (scheme == SchemeId::Kal1S1 && std::holds_alternative<SparsePolicy>(policy)) ||
                               (scheme == SchemeId::Kal1S2 && std::holds_alternative<RunPolicy>(policy));
   require(policy_matches, ErrorCode::Policy, "seed-row policy does not match the scheme");
   auto kp = kal1_keygen(params, policy, rng);
   PublicKey pk;
   switch(scheme) {
      case SchemeId::Kal1S1:
         pk = to_s1(kp.pk);
         break;
      case SchemeId::Kal1S2:
         pk = to_s2(kp.pk);
         break;
      default:
         pk = std::move(kp.pk);
         break;
   }
   file.policy = policy;
   file.checksum = pk_checksum(pk);
   return KeyBundle{std::move(pk), std::move(kp.sk), file};
}

KeyBundle restore_keys(const PrivateKeyFile& file) {
   KeyBundle keys = generate_keys(file.scheme, file.params, file.policy, file.seed);
   require(keys.sk_file.checksum == file.checksum,
           ErrorCode::Format,
           "private key checksum does not match the regenerated public key");
   return keys;
}

std::size_t message_bytes(SchemeId scheme, const CodeParams& params) {
   const std::size_t length = scheme == SchemeId::Niederreiter ? params.n : params.redundancy();
   return shared_codec(length, params.t)->params().msg_bytes();
}

BitVector encrypt_message(const PublicKey& pk, std::span<const std::uint8_t> msg) {
   const auto& params = params_of(pk);
   switch(scheme_of(pk)) {
      case SchemeId::Niederreiter:
         return nied_encrypt(std::get<NiedPublicKey>(pk), shared_codec(params.n, params.t)->encode(msg));
      case SchemeId::Kal1Dense:
         return kal1_encrypt(std::get<Kal1PublicKey>(pk), msg);
      case SchemeId::Kal1S1:
         return kal1_encrypt(from_s1(std::get<Kal1S1Key>(pk)), msg);
      case SchemeId::Kal1S2:
         return kal1_encrypt(from_s2(std::get<Kal1S2Key>(pk)), msg);
   }
   fail(ErrorCode::Parameter, "unknown scheme");
}

std::vector<std::uint8_t> decrypt_message(const KeyBundle& keys, const BitVector& ct) {
   if(const auto* sk = std::get_if<NiedPrivateKey>(&keys.sk)) {
      const auto& params = sk->code.params();
      require(ct.size() == params.redundancy(), ErrorCode::Format, "ciphertext length differs from n-k");
      const BitVector e = nied_decrypt(*sk, ct);
      require(e.weight() == params.t, ErrorCode::Format, "decrypted error vector does not have weight t");
      return shared_codec(params.n, params.t)->decode(e);
   }
   const auto& sk = std::get<Kal1PrivateKey>(keys.sk);
   require(ct.size() == sk.inner.code.params().redundancy(), ErrorCode::Format, "ciphertext length differs from n-k");
   return kal1_decrypt(sk, ct);
}

}  // namespace kal1
