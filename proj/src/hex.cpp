#include <kal1/hex.hpp>

#include <kal1/error.hpp>

namespace kal1 {

namespace {

int nibble(char c) {
   if(c >= '0' && c <= '9') {
      return c - '0';
   }
   if(c >= 'a' && c <= 'f') {
      return c - 'a' + 10;
   }
   if(c >= 'A' && c <= 'F') {
      return c - 'A' + 10;
   }
   return -1;
}

}  // namespace

std::string hex_encode(std::span<const std::uint8_t> bytes) {
   static constexpr char digits[] = "0123456789abcdef";
   std::string out;
   out.reserve(2 * bytes.size());
   for(auto b : bytes) {
      out.push_back(digits[b >> 4]);
      out.push_back(digits[b & 0xF]);
   }
   return out;
}

std::vector<std::uint8_t> hex_decode(std::string_view hex) {
   require(hex.size() % 2 == 0, ErrorCode::Format, "hex string has odd length");
   std::vector<std::uint8_t> out(hex.size() / 2);
   for(std::size_t i = 0; i < out.size(); ++i) {
      const int hi = nibble(hex[2 * i]);
      const int lo = nibble(hex[2 * i + 1]);
      require(hi >= 0 && lo >= 0, ErrorCode::Format, "invalid hex digit");
      out[i] = static_cast<std::uint8_t>((hi << 4) | lo);
   }
   return out;
}

}  // namespace kal1
