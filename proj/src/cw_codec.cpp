#include <kal1/cw_codec.hpp>

#include <kal1/error.hpp>

#include <boost/multiprecision/integer.hpp>

#include <map>
#include <mutex>
#include <utility>

namespace kal1 {

namespace {

std::size_t floor_log2(const BigUint& v) {
   return static_cast<std::size_t>(boost::multiprecision::msb(v));
}

}  // namespace

CwCodec::CwCodec(std::size_t length, std::size_t weight) {
   require(weight <= length, ErrorCode::Parameter, "constant-weight codec: weight exceeds length");
   m_binom.assign(weight + 1, std::vector<BigUint>(length + 1));
   for(std::size_t x = 0; x <= length; ++x) {
      m_binom[0][x] = 1;
   }
   for(std::size_t i = 1; i <= weight; ++i) {
      for(std::size_t x = i; x <= length; ++x) {
         // C(x, i) = C(x-1, i) + C(x-1, i-1)
         m_binom[i][x] = m_binom[i][x - 1] + m_binom[i - 1][x - 1];
      }
   }
   m_params = CwParams{length, weight, floor_log2(m_binom[weight][length])};
}

CwParams make_cw_params(std::size_t length, std::size_t weight) {
   return CwCodec(length, weight).params();
}

BitVector CwCodec::unrank(const BigUint& index) const {
   require(index >= 0 && index < capacity(), ErrorCode::Range, "constant-weight index out of range");
   BitVector word(m_params.length);
   BigUint r = index;
   std::size_t c = m_params.length;
   for(std::size_t i = m_params.weight; i >= 1; --i) {
      // largest c with C(c, i) <= r; c >= i - 1 since C(i - 1, i) = 0
      do {
         --c;
      } while(binom(c, i) > r);
      word.set(c);
      r -= binom(c, i);
   }
   return word;
}

BigUint CwCodec::rank(const BitVector& word) const {
   require(word.size() == m_params.length, ErrorCode::DimensionMismatch, "constant-weight word has the wrong length");
   const auto positions = word.support();
   require(positions.size() == m_params.weight, ErrorCode::Weight, "constant-weight word has the wrong weight");
   BigUint r = 0;
   for(std::size_t i = 0; i < positions.size(); ++i) {
      r += binom(positions[i], i + 1);
   }
   return r;
}

BigUint CwCodec::message_to_int(std::span<const std::uint8_t> msg) const {
   require(msg.size() == m_params.msg_bytes(), ErrorCode::Range, "message must be exactly msg_bytes long");
   BigUint v = 0;
   for(auto b : msg) {
      v <<= 8;
      v += b;
   }
   require(v >> m_params.msg_bits == 0, ErrorCode::Range, "message exceeds the codec capacity");
   return v;
}

std::vector<std::uint8_t> CwCodec::int_to_message(const BigUint& value) const {
   require(value >= 0 && value >> m_params.msg_bits == 0, ErrorCode::Range, "value exceeds the codec capacity");
   std::vector<std::uint8_t> out(m_params.msg_bytes());
   BigUint v = value;
   for(std::size_t i = out.size(); i-- > 0;) {
      out[i] = static_cast<std::uint8_t>(static_cast<unsigned>(v & 0xFF));
      v >>= 8;
   }
   return out;
}

BitVector CwCodec::encode(std::span<const std::uint8_t> msg) const {
   return unrank(message_to_int(msg));
}

std::vector<std::uint8_t> CwCodec::decode(const BitVector& word) const {
   const BigUint r = rank(word);
   require(r >> m_params.msg_bits == 0, ErrorCode::Range, "word lies outside the usable message space");
   return int_to_message(r);
}

std::shared_ptr<const CwCodec> shared_codec(std::size_t length, std::size_t weight) {
   static std::mutex mutex;
   static std::map<std::pair<std::size_t, std::size_t>, std::shared_ptr<const CwCodec>> cache;

   const std::lock_guard lock(mutex);
   auto& slot = cache[{length, weight}];
   if(!slot) {
      slot = std::make_shared<const CwCodec>(length, weight);
   }
   return slot;
}

BitVector cw_encode(std::span<const std::uint8_t> msg, const CwCodec& codec) {
   return codec.encode(msg);
}

std::vector<std::uint8_t> cw_decode(const BitVector& word, const CwCodec& codec) {
   return codec.decode(word);
}

}  // namespace kal1
