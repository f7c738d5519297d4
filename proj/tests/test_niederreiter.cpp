#include <doctest.h>

#include "oracles.hpp"

#include <kal1/error.hpp>
#include <kal1/niederreiter.hpp>

#include <string_view>

using namespace kal1;

namespace {

const CodeParams toy{16, 8, 2, 4};

}  // namespace

TEST_CASE("pinned toy keypair") {
   Rng rng(oracle::seed(1));
   const auto kp = nied_keygen(toy, rng);
   const std::string_view top[] = {
      "01100101", "11101000", "10011010", "11001111", "10010111", "01111100", "11011001", "00111011"};
   CHECK(kp.pk.h_prime_t.block(0, 0, 8, 8) == BinaryMatrix::from_strings(top));
   CHECK(kp.pk.h_prime_t.block(8, 0, 8, 8) == BinaryMatrix::identity(8));
   const std::vector<std::size_t> p{14, 3, 8, 12, 7, 5, 11, 1, 15, 0, 4, 9, 6, 2, 10, 13};
   CHECK(std::vector<std::size_t>(kp.sk.p.map().begin(), kp.sk.p.map().end()) == p);
   CHECK(nied_encrypt(kp.pk, BitVector::from_string("0001000000010000")).to_string() == "11011111");
}

TEST_CASE("public matrix is the product of the secret parts and is systematic") {
   for(auto params : {toy, CodeParams{64, 40, 4, 6}, CodeParams{256, 192, 8, 8}}) {
      Rng rng(oracle::seed(static_cast<std::uint8_t>(params.n & 0xFF) + 1));
      const auto kp = nied_keygen(params, rng);
      const auto r = params.redundancy();
      CHECK(kp.pk.h_prime_t.rows() == params.n);
      CHECK(kp.pk.h_prime_t.cols() == r);
      CHECK(kp.pk.h_prime_t == nied_public_matrix(kp.sk));
      CHECK(kp.pk.h_prime_t.block(params.k, 0, r, r) == BinaryMatrix::identity(r));

      // independent recomputation through dense P, H and S
      const auto h = parity_check(kp.sk.code);
      const auto pm = permutation_matrix(kp.sk.p);
      const auto expect = oracle::naive_mul(oracle::naive_mul(pm.transpose(), h.binary_t), kp.sk.s.s.transpose());
      CHECK(kp.pk.h_prime_t == expect);
      CHECK(bm_mul(kp.sk.s.s, kp.sk.s.s_inv) == BinaryMatrix::identity(r));
      CHECK(bm_mul(kp.sk.s.s.transpose(), kp.sk.s_t_inv) == BinaryMatrix::identity(r));
   }
}

TEST_CASE("round trip for every toy error and random mid-scale errors") {
   Rng rng(oracle::seed(40));
   const auto kp = nied_keygen(toy, rng);
   for(const auto& e : oracle::all_low_weight(16, 2)) {
      if(e.weight() != 2) {
         continue;
      }
      REQUIRE(nied_decrypt(kp.sk, nied_encrypt(kp.pk, e)) == e);
   }
   const auto mid = nied_keygen(CodeParams{256, 192, 8, 8}, rng);
   for(int i = 0; i < 1000; ++i) {
      const auto e = oracle::random_weight(256, 8, rng);
      REQUIRE(nied_decrypt(mid.sk, nied_encrypt(mid.pk, e)) == e);
   }
}

TEST_CASE("encryption requires weight exactly t") {
   Rng rng(oracle::seed(41));
   const auto kp = nied_keygen(toy, rng);
   try {
      nied_encrypt(kp.pk, BitVector::from_string("1000000000000000"));
      FAIL("expected WeightError");
   } catch(const Error& e) {
      CHECK(e.code() == ErrorCode::Weight);
   }
   CHECK_THROWS_AS(nied_encrypt(kp.pk, BitVector(15)), Error);
}

TEST_CASE("tampered ciphertexts fail or decode to a different error") {
   Rng rng(oracle::seed(42));
   const auto kp = nied_keygen(CodeParams{64, 40, 4, 6}, rng);
   for(int i = 0; i < 300; ++i) {
      const auto e = oracle::random_weight(64, 4, rng);
      auto c = nied_encrypt(kp.pk, e);
      c.flip(rng.uniform(24));
      try {
         const auto d = nied_decrypt(kp.sk, c);
         REQUIRE(d != e);
         REQUIRE(nied_syndrome(kp.pk, d) == c);
      } catch(const Error& err) {
         REQUIRE(err.code() == ErrorCode::DecodingFailure);
      }
   }
   CHECK_THROWS_AS(nied_decrypt(kp.sk, BitVector(23)), Error);
}

TEST_CASE("key generation is deterministic in the seed") {
   Rng a(oracle::seed(43));
   Rng b(oracle::seed(43));
   CHECK(nied_keygen(toy, a).pk.h_prime_t == nied_keygen(toy, b).pk.h_prime_t);
}
