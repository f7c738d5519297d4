#pragma once

#include <kal1/rng.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kal1 {

using Word = std::uint64_t;
inline constexpr std::size_t WordBits = 64;

constexpr std::size_t words_for(std::size_t bits) {
   return (bits + WordBits - 1) / WordBits;
}

/// Fixed-length vector over F_2. Bit i sits in word i/64 at position i%64; padding bits are zero.
class BitVector final {
   public:
      BitVector() = default;
      explicit BitVector(std::size_t size) : m_size(size), m_words(words_for(size), 0) {}

      /// Parses a string of '0'/'1' characters; index 0 is the first character.
      static BitVector from_string(std::string_view bits);
      static BitVector unit(std::size_t size, std::size_t pos);

      std::size_t size() const { return m_size; }
      bool get(std::size_t i) const { return (m_words[i / WordBits] >> (i % WordBits)) & 1; }
      void set(std::size_t i, bool v = true);
      void flip(std::size_t i) { m_words[i / WordBits] ^= Word(1) << (i % WordBits); }

      std::size_t weight() const;
      bool is_zero() const;
      std::vector<std::size_t> support() const;

      BitVector& operator^=(const BitVector& other);
      friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
      bool operator==(const BitVector&) const = default;

      BitVector slice(std::size_t begin, std::size_t len) const;
      static BitVector concat(const BitVector& a, const BitVector& b);
      /// Cyclic right rotation: out[(j + r) mod size] = in[j].
      BitVector rotate_right(std::size_t r) const;

      std::span<Word> words() { return m_words; }
      std::span<const Word> words() const { return m_words; }

      std::string to_string() const;

   private:
      std::size_t m_size = 0;
      std::vector<Word> m_words;
};

/// Uniform random bits; draws ceil(len/8) bytes, bit j taken from byte j/8 most-significant-bit first.
BitVector random_bits(std::size_t len, Rng& rng);

/// Row-major bit-packed matrix over F_2.
class BinaryMatrix final {
   public:
      BinaryMatrix() = default;
      BinaryMatrix(std::size_t rows, std::size_t cols);

      static BinaryMatrix identity(std::size_t n);
      static BinaryMatrix from_rows(std::span<const BitVector> rows);
      /// Rows given as '0'/'1' strings of equal length.
      static BinaryMatrix from_strings(std::span<const std::string_view> rows);

      std::size_t rows() const { return m_rows; }
      std::size_t cols() const { return m_cols; }
      std::size_t words_per_row() const { return m_stride; }

      bool get(std::size_t r, std::size_t c) const { return (m_bits[r * m_stride + c / WordBits] >> (c % WordBits)) & 1; }
      void set(std::size_t r, std::size_t c, bool v = true);

      std::span<Word> row_words(std::size_t r) { return {m_bits.data() + r * m_stride, m_stride}; }
      std::span<const Word> row_words(std::size_t r) const { return {m_bits.data() + r * m_stride, m_stride}; }

      BitVector row(std::size_t r) const;
      void set_row(std::size_t r, const BitVector& v);
      void xor_row_into(std::size_t src, std::size_t dst);
      void swap_rows(std::size_t a, std::size_t b);

      BinaryMatrix transpose() const;
      BinaryMatrix block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;
      bool is_zero() const;

      bool operator==(const BinaryMatrix&) const = default;

   private:
      std::size_t m_rows = 0;
      std::size_t m_cols = 0;
      std::size_t m_stride = 0;
      std::vector<Word> m_bits;
};

/// Bijection on [0, n) stored as an index array. The matrix it stands for has P(i, map[i]) = 1.
class Permutation final {
   public:
      Permutation() = default;
      explicit Permutation(std::vector<std::size_t> map);

      static Permutation identity(std::size_t n);

      std::size_t size() const { return m_map.size(); }
      std::size_t operator[](std::size_t i) const { return m_map[i]; }
      std::size_t inverse_at(std::size_t i) const { return m_inv[i]; }
      std::span<const std::size_t> map() const { return m_map; }

      bool operator==(const Permutation& other) const { return m_map == other.m_map; }

   private:
      std::vector<std::size_t> m_map;
      std::vector<std::size_t> m_inv;
};

/// Invertible square matrix kept together with its inverse.
struct Scrambler {
      BinaryMatrix s;
      BinaryMatrix s_inv;
};

BinaryMatrix bm_mul(const BinaryMatrix& a, const BinaryMatrix& b);
BinaryMatrix bm_add(const BinaryMatrix& a, const BinaryMatrix& b);
/// Gauss-Jordan inverse; throws Singular when rank < dimension.
BinaryMatrix bm_invert(const BinaryMatrix& a);
std::size_t bm_rank(const BinaryMatrix& a);

/// Row vector times matrix: v * a.
BitVector vec_mul(const BitVector& v, const BinaryMatrix& a);

BinaryMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng);
/// Uniform invertible matrix by rejection of singular draws.
Scrambler random_invertible(std::size_t dim, Rng& rng);
/// Fisher-Yates: for i = n-1 down to 1 swap map[i] with map[uniform(i + 1)].
Permutation random_permutation(std::size_t n, Rng& rng);

/**
* Forward: v * P^T, i.e. out[j] = v[map[j]].
* Inverse: v * (P^T)^-1, i.e. out[map[j]] = v[j].
*/
BitVector apply_perm(const BitVector& v, const Permutation& p, bool inverse);

/// P^T * x for an n-row matrix x: out row i = x row map^-1(i).
BinaryMatrix permute_rows(const Permutation& p, const BinaryMatrix& x);

/// Materialised n x n permutation matrix (tests and audits only).
BinaryMatrix permutation_matrix(const Permutation& p);

}  // namespace kal1
