#include <doctest.h>

#include "oracles.hpp"

#include <kal1/error.hpp>
#include <kal1/kal1.hpp>

#include <string_view>

using namespace kal1;

namespace {

const CodeParams toy{16, 8, 2, 4};

std::vector<std::uint8_t> random_message(const CodeParams& p, Rng& rng) {
   const auto cw = make_cw_params(p.redundancy(), p.t);
   std::vector<std::uint8_t> msg(cw.msg_bytes());
   rng.fill(msg);
   if(cw.msg_bits % 8 != 0) {
      msg[0] &= static_cast<std::uint8_t>((1u << (cw.msg_bits % 8)) - 1);
   }
   return msg;
}

/// H_cyclic^T built entry by entry: entry (i, j) of the top block is seed[(j - i) mod (n-k)].
BinaryMatrix cyclic_oracle(const Kal1PublicKey& pk) {
   const auto r = pk.params.redundancy();
   BinaryMatrix h(pk.params.n, r);
   for(std::size_t i = 0; i < pk.params.k; ++i) {
      for(std::size_t j = 0; j < r; ++j) {
         h.set(i, j, pk.seed_row.get((j + r * pk.params.k - i) % r));
      }
   }
   for(std::size_t j = 0; j < r; ++j) {
      h.set(pk.params.k + j, j);
   }
   return h;
}

}  // namespace

TEST_CASE("expand_cyclic rotates the seed row") {
   const Kal1PublicKey pk{CodeParams{7, 3, 0, 0}, BitVector::from_string("1000")};
   const auto ex = expand_cyclic(pk);
   const std::string_view rows[] = {"1000", "0100", "0010", "1000", "0100", "0010", "0001"};
   CHECK(ex.h_cyclic_t == BinaryMatrix::from_strings(rows));

   const Kal1PublicKey bad{CodeParams{7, 3, 0, 0}, BitVector::from_string("10000")};
   CHECK_THROWS_AS(expand_cyclic(bad), Error);
}

TEST_CASE("pinned dense toy key and every toy ciphertext") {
   Rng rng(oracle::seed(7));
   const auto kp = kal1_keygen(toy, DensePolicy{}, rng);
   CHECK(kp.pk.seed_row.to_string() == "11100111");
   const std::string_view expected[] = {
      "11000000", "10100000", "01100000", "10010000", "01010000", "00110000", "10001000", "01001000",
      "00101000", "00011000", "10000100", "01000100", "00100100", "00010100", "00001100", "10000010"};
   for(std::uint8_t m = 0; m < 16; ++m) {
      const std::vector<std::uint8_t> msg{m};
      const auto c = kal1_encrypt(kp.pk, msg);
      CHECK(c.to_string() == expected[m]);
      CHECK(kal1_decrypt(kp.sk, c) == msg);
   }
}

TEST_CASE("structural identities across parameter sets") {
   for(auto params : {toy, CodeParams{32, 17, 3, 5}, CodeParams{64, 40, 4, 6}, CodeParams{256, 192, 8, 8}}) {
      Rng rng(oracle::seed(static_cast<std::uint8_t>(params.t)));
      for(int key = 0; key < 5; ++key) {
         const auto kp = kal1_keygen(params, DensePolicy{}, rng);
         const auto ex = expand_cyclic(kp.pk);
         const auto r = params.redundancy();
         REQUIRE(ex.h_cyclic_t == cyclic_oracle(kp.pk));
         const auto hs = h_secondary_t(ex, kp.sk);
         CHECK(bm_add(kp.sk.h_prime.h_prime_t, hs) == ex.h_cyclic_t);
         CHECK(hs.block(params.k, 0, r, r).is_zero());
         // the secondary matrix annihilates every admissible error vector
         for(int i = 0; i < 100; ++i) {
            const auto e = kal1_error_vector(params, random_message(params, rng));
            REQUIRE(e.weight() == params.t);
            REQUIRE(vec_mul(e, hs).is_zero());
            // the ciphertext is the suffix of the error vector
            REQUIRE(vec_mul(e, ex.h_cyclic_t) == e.slice(params.k, r));
            REQUIRE(vec_mul(e, ex.h_cyclic_t) == vec_mul(e, kp.sk.h_prime.h_prime_t));
         }
      }
   }
}

TEST_CASE("round trip at mid scale") {
   Rng rng(oracle::seed(50));
   const CodeParams mid{256, 192, 8, 8};
   const auto kp = kal1_keygen(mid, DensePolicy{}, rng);
   const auto ex = expand_cyclic(kp.pk);
   for(int i = 0; i < 500; ++i) {
      const auto msg = random_message(mid, rng);
      REQUIRE(kal1_decrypt(kp.sk, kal1_encrypt(ex, msg)) == msg);
   }
}

TEST_CASE("errors outside the suffix are rejected as format errors") {
   Rng rng(oracle::seed(51));
   const auto kp = kal1_keygen(toy, DensePolicy{}, rng);
   int checked = 0;
   for(const auto& e : oracle::all_low_weight(16, 2)) {
      if(e.weight() != 2 || e.slice(0, 8).is_zero()) {
         continue;
      }
      const auto c = nied_encrypt(kp.sk.h_prime, e);
      try {
         kal1_decrypt(kp.sk, c);
         FAIL("accepted " << e.to_string());
      } catch(const Error& err) {
         REQUIRE(err.code() == ErrorCode::Format);
      }
      ++checked;
   }
   CHECK(checked == 120 - 28);

   // weight-1 suffix decodes but has the wrong weight
   try {
      kal1_decrypt(kp.sk, BitVector::from_string("00010000"));
      FAIL("expected FormatError");
   } catch(const Error& err) {
      CHECK(err.code() == ErrorCode::Format);
   }
}

TEST_CASE("seed-row policies") {
   Rng rng(oracle::seed(52));
   const CodeParams mid{256, 192, 8, 8};
   const auto sparse = kal1_keygen(mid, SparsePolicy{10}, rng);
   CHECK(sparse.pk.seed_row.weight() == 10);
   const auto run = kal1_keygen(mid, RunPolicy{5, 3}, rng);
   CHECK(run.pk.seed_row.support() == std::vector<std::size_t>{5, 6, 7});

   CHECK_THROWS_AS(validate_policy(mid, SparsePolicy{0}), Error);
   CHECK_THROWS_AS(validate_policy(mid, SparsePolicy{65}), Error);
   CHECK_THROWS_AS(validate_policy(mid, RunPolicy{0, 1}), Error);
   CHECK_THROWS_AS(validate_policy(mid, RunPolicy{60, 5}), Error);
   CHECK_NOTHROW(validate_policy(mid, RunPolicy{60, 4}));
   CHECK(index_width(mid) == 6);
   CHECK(index_width(CodeParams{1024, 524, 50, 10}) == 9);
}

TEST_CASE("compressed forms are equivalent to the dense form") {
   Rng rng(oracle::seed(53));
   const auto s1 = kal1_keygen(toy, SparsePolicy{3}, rng);
   const auto c1 = to_s1(s1.pk);
   CHECK(c1.positions == s1.pk.seed_row.support());
   CHECK(from_s1(c1) == s1.pk);

   const auto s2 = kal1_keygen(toy, RunPolicy{0, 2}, rng);
   const auto c2 = to_s2(s2.pk);
   CHECK(c2.start == 0);
   CHECK(c2.run == 2);
   CHECK(from_s2(c2) == s2.pk);
   CHECK(s2.pk.seed_row.to_string() == "11000000");

   // same secret key, three public encodings, identical ciphertexts
   for(std::uint8_t m = 0; m < 16; ++m) {
      const std::vector<std::uint8_t> msg{m};
      const auto dense = kal1_encrypt(s2.pk, msg);
      CHECK(kal1_encrypt(from_s1(to_s1(s2.pk)), msg) == dense);
      CHECK(kal1_encrypt(from_s2(c2), msg) == dense);
      CHECK(kal1_decrypt(s2.sk, dense) == msg);
   }

   const Kal1PublicKey gappy{toy, BitVector::from_string("10100000")};
   try {
      to_s2(gappy);
      FAIL("expected PolicyError");
   } catch(const Error& e) {
      CHECK(e.code() == ErrorCode::Policy);
   }
}
