#pragma once

#include <kal1/binmat.hpp>
#include <kal1/goppa.hpp>
#include <kal1/rng.hpp>

namespace kal1 {

/// H'^T = P^T H^T S^T, n x (n-k), in systematic form: the bottom (n-k) rows are the identity.
struct NiedPublicKey {
      CodeParams params;
      BinaryMatrix h_prime_t;
};

struct NiedPrivateKey {
      GoppaCode code;
      Scrambler s;
      Permutation p;
      /// (S^T)^-1, applied to ciphertexts before decoding
      BinaryMatrix s_t_inv;
};

struct NiedKeyPair {
      NiedPublicKey pk;
      NiedPrivateKey sk;
};

inline constexpr unsigned MaxSingularDraws = 100;

/**
* Key generation. Draws the code, then a permutation P; S is not drawn but
* derived so that H' = S H P is systematic: with X = P^T H^T and B its bottom
* (n-k) x (n-k) block, S^T = B^-1. P is redrawn while B is singular, and the
* code is redrawn while its binary parity check is rank deficient; each loop
* gives up with GenerationFailure after MaxSingularDraws attempts.
*/
NiedKeyPair nied_keygen(const CodeParams& params, Rng& rng);

/// e * h_prime_t without the weight check.
BitVector nied_syndrome(const NiedPublicKey& pk, const BitVector& e);

/// Throws WeightError unless wt(e) = t.
BitVector nied_encrypt(const NiedPublicKey& pk, const BitVector& e);

/// c1 = c (S^T)^-1, c2 = decode(c1), e = c2 (P^T)^-1. DecodingFailure propagates.
BitVector nied_decrypt(const NiedPrivateKey& sk, const BitVector& c);

/// Recomputes P^T H^T S^T from the private parts with dense matrices.
BinaryMatrix nied_public_matrix(const NiedPrivateKey& sk);

}  // namespace kal1
