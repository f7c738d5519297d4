#include <doctest.h>

#include "oracles.hpp"

#include <kal1/error.hpp>
#include <kal1/goppa.hpp>

#include <optional>

using namespace kal1;

namespace {

const CodeParams toy{16, 8, 2, 4};
const CodeParams mid{256, 192, 8, 8};

/// Horner evaluation with the schoolbook multiplier.
std::uint32_t eval_oracle(const Poly& g, std::uint32_t x, unsigned m, std::uint32_t poly) {
   std::uint32_t acc = 0;
   for(int i = g.degree(); i >= 0; --i) {
      acc = oracle::schoolbook_mul(acc, x, m, poly) ^ g.coeff(static_cast<std::size_t>(i)).value;
   }
   return acc;
}

}  // namespace

TEST_CASE("code parameter validation") {
   CHECK_NOTHROW(toy.validate());
   CHECK_NOTHROW(mid.validate());
   CHECK_NOTHROW((CodeParams{1024, 524, 50, 10}.validate()));
   CHECK_THROWS_AS((CodeParams{16, 9, 2, 4}.validate()), Error);   // k != n - mt
   CHECK_THROWS_AS((CodeParams{17, 9, 2, 4}.validate()), Error);   // n > 2^m
   CHECK_THROWS_AS((CodeParams{16, 12, 1, 4}.validate()), Error);  // t < 2
   CHECK_THROWS_AS((CodeParams{16, 0, 4, 4}.validate()), Error);   // mt >= n
}

TEST_CASE("pinned toy code") {
   Rng rng(oracle::seed(1));
   const auto code = generate_code(toy, rng);
   std::vector<std::uint16_t> support;
   for(auto a : code.support()) {
      support.push_back(a.value);
   }
   CHECK(support == std::vector<std::uint16_t>{12, 3, 13, 0, 8, 14, 7, 11, 2, 10, 6, 15, 1, 4, 9, 5});
   CHECK(code.goppa_poly() == Poly(std::vector<FieldElement>{{5}, {12}, {1}}));
}

TEST_CASE("generated codes have distinct support and an irreducible monic g") {
   Rng rng(oracle::seed(20));
   for(int i = 0; i < 20; ++i) {
      const auto code = generate_code(mid, rng);
      const auto& f = code.field();
      std::vector<bool> seen(f.size(), false);
      for(auto a : code.support()) {
         REQUIRE_FALSE(seen[a.value]);
         seen[a.value] = true;
         REQUIRE_FALSE(poly_eval(f, code.goppa_poly(), a).is_zero());
      }
      CHECK(code.goppa_poly().degree() == 8);
      CHECK(code.goppa_poly().leading() == FieldContext::one());
      CHECK(poly_is_irreducible(f, code.goppa_poly()));
   }
}

TEST_CASE("constructor rejects bad codes") {
   auto f = std::make_shared<const FieldContext>(4);
   std::vector<FieldElement> support;
   for(std::uint16_t a = 0; a < 16; ++a) {
      support.push_back({a});
   }
   // x^2 + x = x(x+1) is reducible and vanishes on the support
   CHECK_THROWS_AS(GoppaCode(toy, f, support, Poly(std::vector<FieldElement>{{0}, {1}, {1}})), Error);
   auto dup = support;
   dup[1] = dup[0];
   Rng rng(oracle::seed(1));
   const auto g = generate_code(toy, rng).goppa_poly();
   CHECK_THROWS_AS(GoppaCode(toy, f, dup, g), Error);
   CHECK_NOTHROW(GoppaCode(toy, f, support, g));
}

TEST_CASE("parity check layout on the toy code") {
   Rng rng(oracle::seed(1));
   const auto code = generate_code(toy, rng);
   const auto h = parity_check(code);
   const auto poly = code.field().reduction_poly();
   REQUIRE(h.binary.rows() == 8);
   REQUIRE(h.binary.cols() == 16);
   CHECK(bm_rank(h.binary) == 8);
   CHECK(h.binary_t == h.binary.transpose());
   for(std::size_t i = 0; i < 16; ++i) {
      const auto a = code.support()[i].value;
      const auto inv_g = oracle::brute_inverse(eval_oracle(code.goppa_poly(), a, 4, poly), 4, poly);
      CHECK(h.over_field[0][i].value == inv_g);
      CHECK(h.over_field[1][i].value == oracle::schoolbook_mul(a, inv_g, 4, poly));
      for(unsigned j = 0; j < 2; ++j) {
         for(unsigned b = 0; b < 4; ++b) {
            CHECK(h.binary.get(j * 4 + b, i) == static_cast<bool>((h.over_field[j][i].value >> b) & 1));
         }
      }
   }
}

TEST_CASE("syndrome is linear") {
   Rng rng(oracle::seed(21));
   const auto code = generate_code(mid, rng);
   const auto h = parity_check(code);
   for(int i = 0; i < 200; ++i) {
      const auto a = random_bits(256, rng);
      const auto b = random_bits(256, rng);
      REQUIRE(syndrome(h, a ^ b) == (syndrome(h, a) ^ syndrome(h, b)));
   }
   CHECK(syndrome(h, BitVector(256)).is_zero());
}

TEST_CASE("toy decoding is exhaustive over every error of weight <= 2") {
   Rng rng(oracle::seed(1));
   const auto code = generate_code(toy, rng);
   const auto h = parity_check(code);
   const auto errors = oracle::all_low_weight(16, 2);
   REQUIRE(errors.size() == 137);
   for(const auto& e : errors) {
      CAPTURE(e.to_string());
      REQUIRE(decode(code, syndrome(h, e)) == e);
   }
}

TEST_CASE("weight-3 syndromes fail unless a weight <= 2 vector shares them") {
   // a weight-3 error and a weight-2 vector share a syndrome exactly when their sum is a
   // weight-5 codeword, which the designed distance 5 permits
   std::size_t failures = 0;
   for(std::uint8_t s : {1, 2, 3, 4, 5, 6}) {
      Rng rng(oracle::seed(s));
      const auto code = generate_code(toy, rng);
      const auto h = parity_check(code);
      const auto low = oracle::all_low_weight(16, 2);
      for(const auto& e : oracle::all_low_weight(16, 3)) {
         if(e.weight() != 3) {
            continue;
         }
         const auto synd = syndrome(h, e);
         std::optional<BitVector> expected;
         for(const auto& d : low) {
            if(syndrome(h, d) == synd) {
               expected = d;
            }
         }
         try {
            const auto d = decode(code, synd);
            REQUIRE(expected.has_value());
            REQUIRE(d == *expected);
            REQUIRE((d ^ e).weight() == 5);
         } catch(const Error& err) {
            REQUIRE(err.code() == ErrorCode::DecodingFailure);
            REQUIRE_FALSE(expected.has_value());
            ++failures;
         }
      }
   }
   CHECK(failures > 0);
}

TEST_CASE("mid-scale decoding of random errors") {
   Rng rng(oracle::seed(22));
   const auto code = generate_code(mid, rng);
   const auto h = parity_check(code);
   for(int i = 0; i < 10000; ++i) {
      const auto e = oracle::random_weight(256, 1 + rng.uniform(8), rng);
      REQUIRE(decode(code, syndrome(h, e)) == e);
   }
   CHECK(decode(code, BitVector(64)).is_zero());
   CHECK_THROWS_AS(decode(code, BitVector(63)), Error);
}

TEST_CASE("full length code at the reference size decodes") {
   Rng rng(oracle::seed(23));
   const CodeParams big{1024, 524, 50, 10};
   const auto code = generate_code(big, rng);
   const auto h = parity_check(code);
   for(int i = 0; i < 5; ++i) {
      const auto e = oracle::random_weight(1024, 50, rng);
      REQUIRE(decode(code, syndrome(h, e)) == e);
   }
}
