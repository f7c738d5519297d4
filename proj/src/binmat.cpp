#include <kal1/binmat.hpp>

#include <kal1/error.hpp>

#include <algorithm>
#include <bit>
#include <numeric>
#include <utility>

namespace kal1 {

namespace {

void check_dims(bool ok, const char* what) {
   require(ok, ErrorCode::DimensionMismatch, what);
}

}  // namespace

BitVector BitVector::from_string(std::string_view bits) {
   BitVector v(bits.size());
   for(std::size_t i = 0; i < bits.size(); ++i) {
      require(bits[i] == '0' || bits[i] == '1', ErrorCode::Format, "bit string must contain only 0 and 1");
      v.set(i, bits[i] == '1');
   }
   return v;
}

BitVector BitVector::unit(std::size_t size, std::size_t pos) {
   BitVector v(size);
   v.set(pos);
   return v;
}

void BitVector::set(std::size_t i, bool v) {
   const Word mask = Word(1) << (i % WordBits);
   if(v) {
      m_words[i / WordBits] |= mask;
   } else {
      m_words[i / WordBits] &= ~mask;
   }
}

std::size_t BitVector::weight() const {
   std::size_t w = 0;
   for(auto x : m_words) {
      w += static_cast<std::size_t>(std::popcount(x));
   }
   return w;
}

bool BitVector::is_zero() const {
   return std::all_of(m_words.begin(), m_words.end(), [](Word w) { return w == 0; });
}

std::vector<std::size_t> BitVector::support() const {
   std::vector<std::size_t> out;
   for(std::size_t w = 0; w < m_words.size(); ++w) {
      Word x = m_words[w];
      while(x != 0) {
         out.push_back(w * WordBits + static_cast<std::size_t>(std::countr_zero(x)));
         x &= x - 1;
      }
   }
   return out;
}

BitVector& BitVector::operator^=(const BitVector& other) {
   check_dims(m_size == other.m_size, "bit vector length mismatch");
   for(std::size_t i = 0; i < m_words.size(); ++i) {
      m_words[i] ^= other.m_words[i];
   }
   return *this;
}

BitVector BitVector::slice(std::size_t begin, std::size_t len) const {
   check_dims(begin + len <= m_size, "slice out of range");
   BitVector out(len);
   for(std::size_t i = 0; i < len; ++i) {
      if(get(begin + i)) {
         out.set(i);
      }
   }
   return out;
}

BitVector BitVector::concat(const BitVector& a, const BitVector& b) {
   BitVector out(a.size() + b.size());
   for(auto i : a.support()) {
      out.set(i);
   }
   for(auto i : b.support()) {
      out.set(a.size() + i);
   }
   return out;
}

BitVector BitVector::rotate_right(std::size_t r) const {
   BitVector out(m_size);
   if(m_size == 0) {
      return out;
   }
   r %= m_size;
   for(auto j : support()) {
      out.set((j + r) % m_size);
   }
   return out;
}

std::string BitVector::to_string() const {
   std::string s(m_size, '0');
   for(std::size_t i = 0; i < m_size; ++i) {
      if(get(i)) {
         s[i] = '1';
      }
   }
   return s;
}

BitVector random_bits(std::size_t len, Rng& rng) {
   std::vector<std::uint8_t> bytes((len + 7) / 8);
   rng.fill(bytes);
   BitVector v(len);
   for(std::size_t j = 0; j < len; ++j) {
      if((bytes[j / 8] >> (7 - j % 8)) & 1) {
         v.set(j);
      }
   }
   return v;
}

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols) :
      m_rows(rows), m_cols(cols), m_stride(words_for(cols)), m_bits(rows * words_for(cols), 0) {}

BinaryMatrix BinaryMatrix::identity(std::size_t n) {
   BinaryMatrix m(n, n);
   for(std::size_t i = 0; i < n; ++i) {
      m.set(i, i);
   }
   return m;
}

BinaryMatrix BinaryMatrix::from_rows(std::span<const BitVector> rows) {
   const std::size_t cols = rows.empty() ? 0 : rows.front().size();
   BinaryMatrix m(rows.size(), cols);
   for(std::size_t r = 0; r < rows.size(); ++r) {
      m.set_row(r, rows[r]);
   }
   return m;
}

BinaryMatrix BinaryMatrix::from_strings(std::span<const std::string_view> rows) {
   std::vector<BitVector> v;
   v.reserve(rows.size());
   for(auto s : rows) {
      v.push_back(BitVector::from_string(s));
   }
   return from_rows(v);
}

void BinaryMatrix::set(std::size_t r, std::size_t c, bool v) {
   Word& w = m_bits[r * m_stride + c / WordBits];
   const Word mask = Word(1) << (c % WordBits);
   w = v ? (w | mask) : (w & ~mask);
}

BitVector BinaryMatrix::row(std::size_t r) const {
   BitVector v(m_cols);
   std::copy_n(m_bits.begin() + static_cast<std::ptrdiff_t>(r * m_stride), m_stride, v.words().begin());
   return v;
}

void BinaryMatrix::set_row(std::size_t r, const BitVector& v) {
   check_dims(v.size() == m_cols, "row length mismatch");
   std::copy(v.words().begin(), v.words().end(), m_bits.begin() + static_cast<std::ptrdiff_t>(r * m_stride));
}

void BinaryMatrix::xor_row_into(std::size_t src, std::size_t dst) {
   const Word* s = m_bits.data() + src * m_stride;
   Word* d = m_bits.data() + dst * m_stride;
   for(std::size_t i = 0; i < m_stride; ++i) {
      d[i] ^= s[i];
   }
}

void BinaryMatrix::swap_rows(std::size_t a, std::size_t b) {
   if(a == b) {
      return;
   }
   std::swap_ranges(m_bits.begin() + static_cast<std::ptrdiff_t>(a * m_stride),
                    m_bits.begin() + static_cast<std::ptrdiff_t>((a + 1) * m_stride),
                    m_bits.begin() + static_cast<std::ptrdiff_t>(b * m_stride));
}

BinaryMatrix BinaryMatrix::transpose() const {
   BinaryMatrix t(m_cols, m_rows);
   for(std::size_t r = 0; r < m_rows; ++r) {
      const auto words = row_words(r);
      for(std::size_t w = 0; w < m_stride; ++w) {
         Word x = words[w];
         while(x != 0) {
            t.set(w * WordBits + static_cast<std::size_t>(std::countr_zero(x)), r);
            x &= x - 1;
         }
      }
   }
   return t;
}

BinaryMatrix BinaryMatrix::block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const {
   check_dims(row0 + rows <= m_rows && col0 + cols <= m_cols, "block out of range");
   BinaryMatrix b(rows, cols);
   for(std::size_t r = 0; r < rows; ++r) {
      for(std::size_t c = 0; c < cols; ++c) {
         if(get(row0 + r, col0 + c)) {
            b.set(r, c);
         }
      }
   }
   return b;
}

bool BinaryMatrix::is_zero() const {
   return std::all_of(m_bits.begin(), m_bits.end(), [](Word w) { return w == 0; });
}

Permutation::Permutation(std::vector<std::size_t> map) : m_map(std::move(map)), m_inv(m_map.size(), m_map.size()) {
   for(std::size_t i = 0; i < m_map.size(); ++i) {
      require(m_map[i] < m_map.size() && m_inv[m_map[i]] == m_map.size(),
              ErrorCode::Parameter,
              "permutation map is not a bijection");
      m_inv[m_map[i]] = i;
   }
}

Permutation Permutation::identity(std::size_t n) {
   std::vector<std::size_t> map(n);
   std::iota(map.begin(), map.end(), 0);
   return Permutation(std::move(map));
}

BinaryMatrix bm_mul(const BinaryMatrix& a, const BinaryMatrix& b) {
   check_dims(a.cols() == b.rows(), "bm_mul: inner dimensions differ");
   BinaryMatrix out(a.rows(), b.cols());
   const std::size_t stride = b.words_per_row();
   for(std::size_t i = 0; i < a.rows(); ++i) {
      auto dst = out.row_words(i);
      const auto arow = a.row_words(i);
      for(std::size_t w = 0; w < arow.size(); ++w) {
         Word x = arow[w];
         while(x != 0) {
            const auto src = b.row_words(w * WordBits + static_cast<std::size_t>(std::countr_zero(x)));
            for(std::size_t k = 0; k < stride; ++k) {
               dst[k] ^= src[k];
            }
            x &= x - 1;
         }
      }
   }
   return out;
}

BinaryMatrix bm_add(const BinaryMatrix& a, const BinaryMatrix& b) {
   check_dims(a.rows() == b.rows() && a.cols() == b.cols(), "bm_add: shapes differ");
   BinaryMatrix out = a;
   for(std::size_t r = 0; r < a.rows(); ++r) {
      auto dst = out.row_words(r);
      const auto src = b.row_words(r);
      for(std::size_t k = 0; k < dst.size(); ++k) {
         dst[k] ^= src[k];
      }
   }
   return out;
}

BinaryMatrix bm_invert(const BinaryMatrix& a) {
   check_dims(a.rows() == a.cols(), "bm_invert: matrix is not square");
   const std::size_t n = a.rows();
   BinaryMatrix work = a;
   BinaryMatrix inv = BinaryMatrix::identity(n);

   for(std::size_t col = 0; col < n; ++col) {
      std::size_t pivot = col;
      while(pivot < n && !work.get(pivot, col)) {
         ++pivot;
      }
      require(pivot < n, ErrorCode::Singular, "bm_invert: matrix is singular");
      work.swap_rows(pivot, col);
      inv.swap_rows(pivot, col);
      for(std::size_t r = 0; r < n; ++r) {
         if(r != col && work.get(r, col)) {
            work.xor_row_into(col, r);
            inv.xor_row_into(col, r);
         }
      }
   }
   return inv;
}

std::size_t bm_rank(const BinaryMatrix& a) {
   BinaryMatrix work = a;
   std::size_t rank = 0;
   for(std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
      std::size_t pivot = rank;
      while(pivot < a.rows() && !work.get(pivot, col)) {
         ++pivot;
      }
      if(pivot == a.rows()) {
         continue;
      }
      work.swap_rows(pivot, rank);
      for(std::size_t r = rank + 1; r < a.rows(); ++r) {
         if(work.get(r, col)) {
            work.xor_row_into(rank, r);
         }
      }
      ++rank;
   }
   return rank;
}

BitVector vec_mul(const BitVector& v, const BinaryMatrix& a) {
   check_dims(v.size() == a.rows(), "vec_mul: vector length differs from row count");
   BitVector out(a.cols());
   auto dst = out.words();
   for(auto i : v.support()) {
      const auto src = a.row_words(i);
      for(std::size_t k = 0; k < dst.size(); ++k) {
         dst[k] ^= src[k];
      }
   }
   return out;
}

BinaryMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
   BinaryMatrix m(rows, cols);
   for(std::size_t r = 0; r < rows; ++r) {
      m.set_row(r, random_bits(cols, rng));
   }
   return m;
}

Scrambler random_invertible(std::size_t dim, Rng& rng) {
   require(dim >= 1, ErrorCode::Parameter, "random_invertible: dimension must be positive");
   for(;;) {
      BinaryMatrix s = random_matrix(dim, dim, rng);
      if(bm_rank(s) == dim) {
         BinaryMatrix s_inv = bm_invert(s);
         return Scrambler{std::move(s), std::move(s_inv)};
      }
   }
}

Permutation random_permutation(std::size_t n, Rng& rng) {
   require(n >= 1, ErrorCode::Parameter, "random_permutation: size must be positive");
   std::vector<std::size_t> map(n);
   std::iota(map.begin(), map.end(), 0);
   for(std::size_t i = n - 1; i > 0; --i) {
      const std::size_t j = rng.uniform(static_cast<std::uint32_t>(i + 1));
      std::swap(map[i], map[j]);
   }
   return Permutation(std::move(map));
}

BitVector apply_perm(const BitVector& v, const Permutation& p, bool inverse) {
   check_dims(v.size() == p.size(), "apply_perm: length mismatch");
   BitVector out(v.size());
   for(std::size_t j = 0; j < v.size(); ++j) {
      if(inverse) {
         if(v.get(j)) {
            out.set(p[j]);
         }
      } else if(v.get(p[j])) {
         out.set(j);
      }
   }
   return out;
}

BinaryMatrix permute_rows(const Permutation& p, const BinaryMatrix& x) {
   check_dims(x.rows() == p.size(), "permute_rows: row count differs from permutation size");
   BinaryMatrix out(x.rows(), x.cols());
   for(std::size_t i = 0; i < x.rows(); ++i) {
      const auto src = x.row_words(p.inverse_at(i));
      std::copy(src.begin(), src.end(), out.row_words(i).begin());
   }
   return out;
}

BinaryMatrix permutation_matrix(const Permutation& p) {
   BinaryMatrix m(p.size(), p.size());
   for(std::size_t i = 0; i < p.size(); ++i) {
      m.set(i, p[i]);
   }
   return m;
}

}  // namespace kal1
