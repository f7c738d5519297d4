#include <kal1/serialize.hpp>

#include <kal1/error.hpp>

#include <zlib.h>

#include <algorithm>
#include <string>

namespace kal1 {

namespace {

constexpr std::uint8_t PkMagic[4] = {'K', '1', 'P', 'K'};
constexpr std::uint8_t SkMagic[4] = {'K', '1', 'S', 'K'};

class BitWriter {
   public:
      void put(std::uint64_t value, std::size_t width) {
         for(std::size_t i = width; i-- > 0;) {
            put_bit((value >> i) & 1);
         }
      }

      void put_bit(bool b) {
         if(m_bits % 8 == 0) {
            m_bytes.push_back(0);
         }
         if(b) {
            m_bytes.back() |= static_cast<std::uint8_t>(0x80 >> (m_bits % 8));
         }
         ++m_bits;
      }

      std::size_t bits() const { return m_bits; }
      std::vector<std::uint8_t> take() { return std::move(m_bytes); }

   private:
      std::vector<std::uint8_t> m_bytes;
      std::size_t m_bits = 0;
};

class BitReader {
   public:
      explicit BitReader(std::span<const std::uint8_t> bytes) : m_bytes(bytes) {}

      bool get_bit() {
         require(m_pos < 8 * m_bytes.size(), ErrorCode::Format, "payload truncated");
         const bool b = (m_bytes[m_pos / 8] >> (7 - m_pos % 8)) & 1;
         ++m_pos;
         return b;
      }

      std::uint64_t get(std::size_t width) {
         std::uint64_t v = 0;
         for(std::size_t i = 0; i < width; ++i) {
            v = (v << 1) | static_cast<std::uint64_t>(get_bit());
         }
         return v;
      }

      /// Remaining bits must be zero padding within the final byte, with no extra bytes.
      void finish() {
         require((m_pos + 7) / 8 == m_bytes.size(), ErrorCode::Format, "trailing bytes after payload");
         while(m_pos < 8 * m_bytes.size()) {
            require(!get_bit(), ErrorCode::Format, "nonzero padding bits");
         }
      }

   private:
      std::span<const std::uint8_t> m_bytes;
      std::size_t m_pos = 0;
};

void put_u16(std::vector<std::uint8_t>& out, std::size_t v) {
   require(v <= 0xFFFF, ErrorCode::Parameter, "header field exceeds 16 bits");
   out.push_back(static_cast<std::uint8_t>(v >> 8));
   out.push_back(static_cast<std::uint8_t>(v));
}

std::size_t get_u16(std::span<const std::uint8_t> b, std::size_t off) {
   return (static_cast<std::size_t>(b[off]) << 8) | b[off + 1];
}

void put_header(std::vector<std::uint8_t>& out,
                const std::uint8_t (&magic)[4],
                SchemeId scheme,
                const CodeParams& p,
                std::size_t w) {
   out.insert(out.end(), magic, magic + 4);
   out.push_back(FormatVersion);
   out.push_back(static_cast<std::uint8_t>(scheme));
   put_u16(out, p.n);
   put_u16(out, p.k);
   put_u16(out, p.t);
   put_u16(out, p.m);
   out.push_back(static_cast<std::uint8_t>(w));
}

struct Header {
      SchemeId scheme;
      CodeParams params;
      std::size_t w;
};

Header parse_header(std::span<const std::uint8_t> b, const std::uint8_t (&magic)[4]) {
   require(b.size() >= PublicHeaderSize, ErrorCode::Format, "key file shorter than its header");
   require(std::equal(magic, magic + 4, b.begin()), ErrorCode::Format, "bad magic");
   require(b[4] == FormatVersion, ErrorCode::Format, "unsupported format version");
   require(b[5] <= 0x03, ErrorCode::Format, "unknown scheme id");
   Header h{static_cast<SchemeId>(b[5]),
            CodeParams{get_u16(b, 6), get_u16(b, 8), get_u16(b, 10), static_cast<unsigned>(get_u16(b, 12))},
            b[14]};
   try {
      h.params.validate();
   } catch(const Error& e) {
      fail(ErrorCode::Format, std::string("invalid parameters in header: ") + e.what());
   }
   return h;
}

void write_payload(BitWriter& w, const PublicKey& pk) {
   std::visit(
      [&](const auto& key) {
         using T = std::decay_t<decltype(key)>;
         if constexpr(std::is_same_v<T, NiedPublicKey>) {
            for(std::size_t r = 0; r < key.h_prime_t.rows(); ++r) {
               for(std::size_t c = 0; c < key.h_prime_t.cols(); ++c) {
                  w.put_bit(key.h_prime_t.get(r, c));
               }
            }
         } else if constexpr(std::is_same_v<T, Kal1PublicKey>) {
            for(std::size_t i = 0; i < key.seed_row.size(); ++i) {
               w.put_bit(key.seed_row.get(i));
            }
         } else if constexpr(std::is_same_v<T, Kal1S1Key>) {
            for(auto p : key.positions) {
               w.put(p, index_width(key.params));
            }
         } else {
            w.put(key.start, index_width(key.params));
            w.put(key.run, index_width(key.params));
         }
      },
      pk);
}

void check_pk(const PublicKey& pk) {
   const auto& p = params_of(pk);
   p.validate();
   std::visit(
      [&](const auto& key) {
         using T = std::decay_t<decltype(key)>;
         if constexpr(std::is_same_v<T, NiedPublicKey>) {
            require(key.h_prime_t.rows() == p.n && key.h_prime_t.cols() == p.redundancy(),
                    ErrorCode::DimensionMismatch,
                    "h_prime_t has the wrong shape");
         } else if constexpr(std::is_same_v<T, Kal1PublicKey>) {
            require(key.seed_row.size() == p.redundancy(), ErrorCode::DimensionMismatch, "seed row length differs from n-k");
         } else if constexpr(std::is_same_v<T, Kal1S1Key>) {
            require(!key.positions.empty() && key.positions.size() <= 255, ErrorCode::Policy, "sparse weight out of range");
            for(std::size_t i = 0; i < key.positions.size(); ++i) {
               require(key.positions[i] < p.redundancy() && (i == 0 || key.positions[i - 1] < key.positions[i]),
                       ErrorCode::Policy,
                       "sparse positions must be strictly increasing and below n-k");
            }
         } else {
            validate_policy(p, RunPolicy{key.start, key.run});
         }
      },
      pk);
}

}  // namespace

SchemeId scheme_of(const PublicKey& pk) {
   return static_cast<SchemeId>(pk.index());
}

const CodeParams& params_of(const PublicKey& pk) {
   return std::visit([](const auto& key) -> const CodeParams& { return key.params; }, pk);
}

std::size_t payload_bits(const PublicKey& pk) {
   const auto& p = params_of(pk);
   switch(scheme_of(pk)) {
      case SchemeId::Niederreiter:
         return p.n * p.redundancy();
      case SchemeId::Kal1Dense:
         return p.redundancy();
      case SchemeId::Kal1S1:
         return std::get<Kal1S1Key>(pk).positions.size() * index_width(p);
      case SchemeId::Kal1S2:
         return 2 * index_width(p);
   }
   return 0;
}

std::vector<std::uint8_t> serialize_pk(const PublicKey& pk) {
   check_pk(pk);
   std::vector<std::uint8_t> out;
   const std::size_t w = scheme_of(pk) == SchemeId::Kal1S1 ? std::get<Kal1S1Key>(pk).positions.size() : 0;
   put_header(out, PkMagic, scheme_of(pk), params_of(pk), w);
   BitWriter bw;
   write_payload(bw, pk);
   const auto payload = bw.take();
   out.insert(out.end(), payload.begin(), payload.end());
   return out;
}

std::string payload_bit_string(const PublicKey& pk) {
   check_pk(pk);
   BitWriter bw;
   write_payload(bw, pk);
   const std::size_t n = bw.bits();
   const auto bytes = bw.take();
   std::string s(n, '0');
   for(std::size_t i = 0; i < n; ++i) {
      if((bytes[i / 8] >> (7 - i % 8)) & 1) {
         s[i] = '1';
      }
   }
   return s;
}

PublicKey parse_pk(std::span<const std::uint8_t> bytes) {
   const Header h = parse_header(bytes, PkMagic);
   const auto& p = h.params;
   require(h.scheme == SchemeId::Kal1S1 || h.w == 0, ErrorCode::Format, "weight byte must be zero for this scheme");
   BitReader br(bytes.subspan(PublicHeaderSize));
   const std::size_t width = index_width(p);

   PublicKey pk;
   switch(h.scheme) {
      case SchemeId::Niederreiter: {
         require(bytes.size() - PublicHeaderSize == (p.n * p.redundancy() + 7) / 8,
                 ErrorCode::Format,
                 "payload length does not match n x (n-k)");
         BinaryMatrix m(p.n, p.redundancy());
         for(std::size_t r = 0; r < m.rows(); ++r) {
            for(std::size_t c = 0; c < m.cols(); ++c) {
               if(br.get_bit()) {
                  m.set(r, c);
               }
            }
         }
         require(m.block(p.k, 0, p.redundancy(), p.redundancy()) == BinaryMatrix::identity(p.redundancy()),
                 ErrorCode::Format,
                 "h_prime_t is not in systematic form");
         pk = NiedPublicKey{p, std::move(m)};
         break;
      }
      case SchemeId::Kal1Dense: {
         BitVector row(p.redundancy());
         for(std::size_t i = 0; i < row.size(); ++i) {
            row.set(i, br.get_bit());
         }
         pk = Kal1PublicKey{p, std::move(row)};
         break;
      }
      case SchemeId::Kal1S1: {
         require(h.w >= 1, ErrorCode::Format, "sparse key with zero weight");
         std::vector<std::size_t> positions(h.w);
         for(auto& pos : positions) {
            pos = static_cast<std::size_t>(br.get(width));
         }
         pk = Kal1S1Key{p, std::move(positions)};
         break;
      }
      case SchemeId::Kal1S2: {
         const auto start = static_cast<std::size_t>(br.get(width));
         const auto run = static_cast<std::size_t>(br.get(width));
         pk = Kal1S2Key{p, start, run};
         break;
      }
   }
   br.finish();
   try {
      check_pk(pk);
   } catch(const Error& e) {
      fail(ErrorCode::Format, std::string("invalid key contents: ") + e.what());
   }
   return pk;
}

std::uint32_t pk_checksum(const PublicKey& pk) {
   const auto bytes = serialize_pk(pk);
   return static_cast<std::uint32_t>(crc32(crc32(0L, Z_NULL, 0), bytes.data(), static_cast<uInt>(bytes.size())));
}

std::vector<std::uint8_t> serialize_sk(const PrivateKeyFile& sk) {
   sk.params.validate();
   std::size_t w = 0, run_start = 0, run_len = 0;
   switch(sk.scheme) {
      case SchemeId::Kal1S1:
         require(std::holds_alternative<SparsePolicy>(sk.policy), ErrorCode::Policy, "Kal1-S1 key needs a sparse policy");
         w = std::get<SparsePolicy>(sk.policy).weight;
         break;
      case SchemeId::Kal1S2:
         require(std::holds_alternative<RunPolicy>(sk.policy), ErrorCode::Policy, "Kal1-S2 key needs a run policy");
         run_start = std::get<RunPolicy>(sk.policy).start;
         run_len = std::get<RunPolicy>(sk.policy).length;
         break;
      default:
         break;
   }
   std::vector<std::uint8_t> out;
   put_header(out, SkMagic, sk.scheme, sk.params, w);
   put_u16(out, run_start);
   put_u16(out, run_len);
   out.insert(out.end(), sk.seed.begin(), sk.seed.end());
   for(int shift = 24; shift >= 0; shift -= 8) {
      out.push_back(static_cast<std::uint8_t>(sk.checksum >> shift));
   }
   return out;
}

PrivateKeyFile parse_sk(std::span<const std::uint8_t> bytes) {
   const Header h = parse_header(bytes, SkMagic);
   require(bytes.size() == PrivateKeyFileSize, ErrorCode::Format, "private key file has the wrong length");
   PrivateKeyFile sk;
   sk.scheme = h.scheme;
   sk.params = h.params;
   const std::size_t run_start = get_u16(bytes, 15);
   const std::size_t run_len = get_u16(bytes, 17);
   switch(h.scheme) {
      case SchemeId::Kal1S1:
         sk.policy = SparsePolicy{h.w};
         break;
      case SchemeId::Kal1S2:
         sk.policy = RunPolicy{run_start, run_len};
         break;
      default:
         sk.policy = DensePolicy{};
         break;
   }
   require(h.scheme == SchemeId::Kal1S1 || h.w == 0, ErrorCode::Format, "weight byte must be zero for this scheme");
   require(h.scheme == SchemeId::Kal1S2 || (run_start == 0 && run_len == 0),
           ErrorCode::Format,
           "run fields must be zero for this scheme");
   try {
      if(h.scheme != SchemeId::Niederreiter) {
         validate_policy(sk.params, sk.policy);
      }
   } catch(const Error& e) {
      fail(ErrorCode::Format, std::string("invalid policy in private key: ") + e.what());
   }
   std::copy_n(bytes.begin() + 19, 16, sk.seed.begin());
   sk.checksum = (static_cast<std::uint32_t>(bytes[35]) << 24) | (static_cast<std::uint32_t>(bytes[36]) << 16) |
                 (static_cast<std::uint32_t>(bytes[37]) << 8) | bytes[38];
   return sk;
}

std::vector<std::uint8_t> pack_bits(const BitVector& v) {
   BitWriter w;
   for(std::size_t i = 0; i < v.size(); ++i) {
      w.put_bit(v.get(i));
   }
   return w.take();
}

BitVector unpack_bits(std::span<const std::uint8_t> bytes, std::size_t len) {
   require(bytes.size() == (len + 7) / 8, ErrorCode::Format, "bit string has the wrong byte length");
   BitReader r(bytes);
   BitVector v(len);
   for(std::size_t i = 0; i < len; ++i) {
      v.set(i, r.get_bit());
   }
   r.finish();
   return v;
}

}  // namespace kal1
