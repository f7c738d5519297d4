#include <doctest.h>

#include "oracles.hpp"

#include <kal1/binmat.hpp>
#include <kal1/error.hpp>

#include <string_view>

using namespace kal1;

TEST_CASE("bit vector basics") {
   auto v = BitVector::from_string("1011000");
   CHECK(v.size() == 7);
   CHECK(v.weight() == 3);
   CHECK(v.support() == std::vector<std::size_t>{0, 2, 3});
   CHECK(v.to_string() == "1011000");
   CHECK(v.rotate_right(2).to_string() == "0010110");
   CHECK(v.rotate_right(7) == v);
   CHECK(v.slice(2, 3).to_string() == "110");
   CHECK(BitVector::concat(v.slice(0, 3), v.slice(3, 4)) == v);
   CHECK(BitVector::unit(4, 1).to_string() == "0100");
   CHECK_THROWS_AS(BitVector::from_string("10x"), Error);

   // spans more than one machine word
   BitVector w(130);
   w.set(0);
   w.set(64);
   w.set(129);
   CHECK(w.weight() == 3);
   CHECK(w.rotate_right(1).support() == std::vector<std::size_t>{0, 1, 65});
}

TEST_CASE("bm_mul matches the triple loop oracle") {
   Rng rng(oracle::seed(10));
   for(int i = 0; i < 1000; ++i) {
      const auto r = 1 + rng.uniform(12);
      const auto k = 1 + rng.uniform(12);
      const auto c = 1 + rng.uniform(12);
      const auto a = random_matrix(r, k, rng);
      const auto b = random_matrix(k, c, rng);
      REQUIRE(bm_mul(a, b) == oracle::naive_mul(a, b));
   }
   // wide operands crossing word boundaries
   for(int i = 0; i < 20; ++i) {
      const auto a = random_matrix(70, 131, rng);
      const auto b = random_matrix(131, 67, rng);
      REQUIRE(bm_mul(a, b) == oracle::naive_mul(a, b));
   }
   CHECK_THROWS_AS(bm_mul(BinaryMatrix(2, 3), BinaryMatrix(2, 3)), Error);
}

TEST_CASE("vec_mul is a one-row product") {
   Rng rng(oracle::seed(11));
   for(int i = 0; i < 200; ++i) {
      const auto a = random_matrix(1 + rng.uniform(100), 1 + rng.uniform(100), rng);
      const auto v = random_bits(a.rows(), rng);
      const std::vector<BitVector> rows{v};
      const auto as_row = BinaryMatrix::from_rows(rows);
      REQUIRE(vec_mul(v, a) == oracle::naive_mul(as_row, a).row(0));
   }
}

TEST_CASE("bm_add and transpose") {
   Rng rng(oracle::seed(12));
   const auto a = random_matrix(9, 70, rng);
   const auto b = random_matrix(9, 70, rng);
   const auto s = bm_add(a, b);
   for(std::size_t i = 0; i < 9; ++i) {
      for(std::size_t j = 0; j < 70; ++j) {
         REQUIRE(s.get(i, j) == (a.get(i, j) != b.get(i, j)));
         REQUIRE(a.transpose().get(j, i) == a.get(i, j));
      }
   }
   CHECK(a.transpose().transpose() == a);
   CHECK(bm_add(a, a).is_zero());
}

TEST_CASE("inversion") {
   Rng rng(oracle::seed(13));
   int inverted = 0;
   for(int i = 0; i < 1000; ++i) {
      const auto n = 1 + rng.uniform(12);
      const auto a = random_matrix(n, n, rng);
      if(oracle::span_rank(a) < n) {
         CHECK_THROWS_AS(bm_invert(a), Error);
         continue;
      }
      const auto inv = bm_invert(a);
      REQUIRE(oracle::naive_mul(a, inv) == BinaryMatrix::identity(n));
      REQUIRE(oracle::naive_mul(inv, a) == BinaryMatrix::identity(n));
      ++inverted;
   }
   CHECK(inverted > 200);

   const auto sc = random_invertible(100, rng);
   CHECK(bm_mul(sc.s, sc.s_inv) == BinaryMatrix::identity(100));

   try {
      bm_invert(BinaryMatrix(3, 3));
      FAIL("expected Singular");
   } catch(const Error& e) {
      CHECK(e.code() == ErrorCode::Singular);
   }
}

TEST_CASE("rank agrees with the span oracle and is subadditive") {
   Rng rng(oracle::seed(14));
   for(int i = 0; i < 1000; ++i) {
      const auto r = 1 + rng.uniform(10);
      const auto c = 1 + rng.uniform(10);
      auto a = random_matrix(r, c, rng);
      auto b = random_matrix(r, c, rng);
      // low-rank inputs too
      if(i % 3 == 0) {
         a = bm_mul(random_matrix(r, 2, rng), random_matrix(2, c, rng));
      }
      const auto ra = bm_rank(a);
      const auto rb = bm_rank(b);
      REQUIRE(ra == oracle::span_rank(a));
      REQUIRE(bm_rank(bm_add(a, b)) <= ra + rb);
      REQUIRE(bm_rank(a.transpose()) == ra);
   }
}

TEST_CASE("permutations") {
   const Permutation p({2, 0, 1});
   CHECK(apply_perm(BitVector::from_string("100"), p, false).to_string() == "010");
   CHECK(apply_perm(BitVector::from_string("010"), p, true).to_string() == "100");
   CHECK_THROWS_AS(Permutation({0, 0, 1}), Error);
   CHECK_THROWS_AS(Permutation({0, 3, 1}), Error);

   Rng rng(oracle::seed(15));
   for(int i = 0; i < 50; ++i) {
      const auto q = random_permutation(1 + rng.uniform(90), rng);
      const auto pm = permutation_matrix(q);
      REQUIRE(bm_mul(pm, pm.transpose()) == BinaryMatrix::identity(q.size()));
      const auto v = random_bits(q.size(), rng);
      const std::vector<BitVector> rows{v};
      const auto vm = BinaryMatrix::from_rows(rows);
      // forward application is v * P^T
      REQUIRE(apply_perm(v, q, false) == bm_mul(vm, pm.transpose()).row(0));
      REQUIRE(apply_perm(apply_perm(v, q, false), q, true) == v);
      // permute_rows is P^T * X
      const auto x = random_matrix(q.size(), 5, rng);
      REQUIRE(permute_rows(q, x) == bm_mul(pm.transpose(), x));
   }
}

TEST_CASE("pinned random objects") {
   Rng rng(oracle::seed(1));
   const auto sc = random_invertible(8, rng);
   const std::string_view rows[] = {
      "10100001", "01111110", "10011111", "01101001", "11100100", "11110010", "01011010", "10001011"};
   CHECK(sc.s == BinaryMatrix::from_strings(rows));

   Rng rng2(oracle::seed(1));
   const auto p = random_permutation(16, rng2);
   const std::vector<std::size_t> expected{12, 3, 13, 0, 8, 14, 7, 11, 2, 10, 6, 15, 1, 4, 9, 5};
   CHECK(std::vector<std::size_t>(p.map().begin(), p.map().end()) == expected);
}
