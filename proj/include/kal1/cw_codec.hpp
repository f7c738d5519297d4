#pragma once

#include <kal1/binmat.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace kal1 {

using BigUint = boost::multiprecision::cpp_int;

struct CwParams {
      std::size_t length = 0;
      std::size_t weight = 0;
      /// floor(log2 C(length, weight))
      std::size_t msg_bits = 0;

      std::size_t msg_bytes() const { return (msg_bits + 7) / 8; }
};

/**
* Bijection between integers and weight-t words of a fixed length, by
* colexicographic combinadics: the support {c_1 < ... < c_t} has rank
* sum_i C(c_i, i). Messages are the integers below 2^msg_bits, carried as
* msg_bytes() big-endian bytes.
*/
class CwCodec final {
   public:
      CwCodec(std::size_t length, std::size_t weight);

      const CwParams& params() const { return m_params; }
      const BigUint& capacity() const { return binom(m_params.length, m_params.weight); }

      /// C(x, i) for x <= length, i <= weight.
      const BigUint& binom(std::size_t x, std::size_t i) const { return m_binom[i][x]; }

      /// RangeError when index >= C(length, weight).
      BitVector unrank(const BigUint& index) const;
      /// WeightError when the weight differs from params().weight.
      BigUint rank(const BitVector& word) const;

      /// RangeError when msg has the wrong size or encodes a value >= 2^msg_bits.
      BitVector encode(std::span<const std::uint8_t> msg) const;
      /// WeightError on wrong weight, RangeError when the rank is >= 2^msg_bits.
      std::vector<std::uint8_t> decode(const BitVector& word) const;

      BigUint message_to_int(std::span<const std::uint8_t> msg) const;
      std::vector<std::uint8_t> int_to_message(const BigUint& value) const;

   private:
      CwParams m_params;
      std::vector<std::vector<BigUint>> m_binom;
};

CwParams make_cw_params(std::size_t length, std::size_t weight);

/// Process-wide cache of codecs keyed by (length, weight); safe to call concurrently.
std::shared_ptr<const CwCodec> shared_codec(std::size_t length, std::size_t weight);

BitVector cw_encode(std::span<const std::uint8_t> msg, const CwCodec& codec);
std::vector<std::uint8_t> cw_decode(const BitVector& word, const CwCodec& codec);

}  // namespace kal1
