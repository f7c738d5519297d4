#include <kal1/niederreiter.hpp>

#include <kal1/error.hpp>

#include <memory>
#include <utility>

namespace kal1 {

NiedKeyPair nied_keygen(const CodeParams& params, Rng& rng) {
   params.validate();
   const std::size_t r = params.redundancy();
   auto field = std::make_shared<const FieldContext>(params.m);

   for(unsigned code_draw = 0; code_draw < MaxSingularDraws; ++code_draw) {
      GoppaCode code = generate_code(params, field, rng);
      const ParityCheckMatrix h = parity_check(code);
      if(bm_rank(h.binary) != r) {
         continue;
      }

      for(unsigned perm_draw = 0; perm_draw < MaxSingularDraws; ++perm_draw) {
         Permutation p = random_permutation(params.n, rng);
         const BinaryMatrix x = permute_rows(p, h.binary_t);
         const BinaryMatrix b = x.block(params.k, 0, r, r);
         if(bm_rank(b) != r) {
            continue;
         }
         BinaryMatrix b_inv = bm_invert(b);
         BinaryMatrix h_prime_t = bm_mul(x, b_inv);
         Scrambler s{b_inv.transpose(), b.transpose()};
         return NiedKeyPair{
            NiedPublicKey{params, std::move(h_prime_t)},
            NiedPrivateKey{std::move(code), std::move(s), std::move(p), b},
         };
      }
      fail(ErrorCode::GenerationFailure, "no permutation gave an invertible systematic block");
   }
   fail(ErrorCode::GenerationFailure, "no full-rank Goppa code found");
}

BitVector nied_syndrome(const NiedPublicKey& pk, const BitVector& e) {
   require(e.size() == pk.params.n, ErrorCode::DimensionMismatch, "error vector length differs from n");
   return vec_mul(e, pk.h_prime_t);
}

BitVector nied_encrypt(const NiedPublicKey& pk, const BitVector& e) {
   require(e.size() == pk.params.n, ErrorCode::DimensionMismatch, "error vector length differs from n");
   require(e.weight() == pk.params.t, ErrorCode::Weight, "error vector weight differs from t");
   return nied_syndrome(pk, e);
}

BitVector nied_decrypt(const NiedPrivateKey& sk, const BitVector& c) {
   const auto& params = sk.code.params();
   require(c.size() == params.redundancy(), ErrorCode::DimensionMismatch, "ciphertext length differs from n-k");
   const BitVector c1 = vec_mul(c, sk.s_t_inv);
   const BitVector c2 = decode(sk.code, c1);
   return apply_perm(c2, sk.p, true);
}

BinaryMatrix nied_public_matrix(const NiedPrivateKey& sk) {
   const ParityCheckMatrix h = parity_check(sk.code);
   const BinaryMatrix p_t = permutation_matrix(sk.p).transpose();
   return bm_mul(bm_mul(p_t, h.binary_t), sk.s.s.transpose());
}

}  // namespace kal1
