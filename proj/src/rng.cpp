#include <kal1/rng.hpp>

#include <kal1/error.hpp>
#include <kal1/hex.hpp>

#include <openssl/evp.h>

#include <random>
#include <utility>

namespace kal1 {

namespace {

EVP_CIPHER_CTX* make_ctx(const Seed& key) {
   EVP_CIPHER_CTX* ctx = EVP_CIPHER_CTX_new();
   if(ctx == nullptr || EVP_EncryptInit_ex(ctx, EVP_aes_128_ecb(), nullptr, key.data(), nullptr) != 1) {
      EVP_CIPHER_CTX_free(ctx);
      fail(ErrorCode::GenerationFailure, "AES-128 context initialisation failed");
   }
   EVP_CIPHER_CTX_set_padding(ctx, 0);
   return ctx;
}

void encrypt_block(EVP_CIPHER_CTX* ctx, const std::uint8_t* in, std::uint8_t* out) {
   int len = 0;
   if(EVP_EncryptUpdate(ctx, out, &len, in, 16) != 1 || len != 16) {
      fail(ErrorCode::GenerationFailure, "AES-128 block encryption failed");
   }
}

}  // namespace

Rng::Rng(const Seed& seed) : m_seed(seed), m_ctx(make_ctx(seed)) {}

Rng::~Rng() {
   EVP_CIPHER_CTX_free(static_cast<EVP_CIPHER_CTX*>(m_ctx));
}

Rng::Rng(Rng&& other) noexcept :
      m_seed(other.m_seed),
      m_ctx(std::exchange(other.m_ctx, nullptr)),
      m_block(other.m_block),
      m_used(other.m_used),
      m_counter(other.m_counter) {}

Rng& Rng::operator=(Rng&& other) noexcept {
   if(this != &other) {
      EVP_CIPHER_CTX_free(static_cast<EVP_CIPHER_CTX*>(m_ctx));
      m_seed = other.m_seed;
      m_ctx = std::exchange(other.m_ctx, nullptr);
      m_block = other.m_block;
      m_used = other.m_used;
      m_counter = other.m_counter;
   }
   return *this;
}

void Rng::refill() {
   encrypt_block(static_cast<EVP_CIPHER_CTX*>(m_ctx), m_counter.data(), m_block.data());
   m_used = 0;
   for(std::size_t i = m_counter.size(); i-- > 0;) {
      if(++m_counter[i] != 0) {
         break;
      }
   }
}

void Rng::fill(std::span<std::uint8_t> out) {
   for(auto& byte : out) {
      if(m_used == m_block.size()) {
         refill();
      }
      byte = m_block[m_used++];
   }
}

std::uint32_t Rng::next_u32() {
   std::array<std::uint8_t, 4> b{};
   fill(b);
   return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
          (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

std::uint32_t Rng::uniform(std::uint32_t bound) {
   require(bound != 0, ErrorCode::Parameter, "uniform: zero bound");
   const std::uint64_t span = std::uint64_t(1) << 32;
   const std::uint64_t limit = span - (span % bound);
   for(;;) {
      const std::uint64_t x = next_u32();
      if(x < limit) {
         return static_cast<std::uint32_t>(x % bound);
      }
   }
}

Rng Rng::fork(std::uint32_t stream) const {
   std::array<std::uint8_t, 16> block{};
   block.fill(0xFF);
   block[12] = static_cast<std::uint8_t>(stream >> 24);
   block[13] = static_cast<std::uint8_t>(stream >> 16);
   block[14] = static_cast<std::uint8_t>(stream >> 8);
   block[15] = static_cast<std::uint8_t>(stream);
   Seed child{};
   encrypt_block(static_cast<EVP_CIPHER_CTX*>(m_ctx), block.data(), child.data());
   return Rng(child);
}

Seed seed_from_hex(std::string_view hex) {
   const auto bytes = hex_decode(hex);
   require(bytes.size() == 16, ErrorCode::Format, "seed must be exactly 32 hex digits");
   Seed seed{};
   std::copy(bytes.begin(), bytes.end(), seed.begin());
   return seed;
}

std::string seed_to_hex(const Seed& seed) {
   return hex_encode(seed);
}

Seed seed_from_entropy() {
   std::random_device rd;
   Seed seed{};
   for(std::size_t i = 0; i < seed.size(); i += 4) {
      const auto w = rd();
      for(std::size_t j = 0; j < 4; ++j) {
         seed[i + j] = static_cast<std::uint8_t>(w >> (8 * j));
      }
   }
   return seed;
}

}  // namespace kal1
