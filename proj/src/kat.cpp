#include <kal1/kat.hpp>

#include <kal1/error.hpp>
#include <kal1/hex.hpp>
#include <kal1/kal1.hpp>
#include <kal1/scheme.hpp>
#include <kal1/serialize.hpp>

#include <charconv>
#include <sstream>

namespace kal1 {

namespace {

std::string_view expect_field(std::string_view& line, std::string_view key) {
   require(line.substr(0, key.size()) == key, ErrorCode::Format, "KAT record: expected '" + std::string(key) + "'");
   line.remove_prefix(key.size());
   const auto end = line.find(' ');
   const auto value = line.substr(0, end);
   line.remove_prefix(end == std::string_view::npos ? line.size() : end + 1);
   return value;
}

std::size_t parse_uint(std::string_view s) {
   std::size_t v = 0;
   const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
   require(ec == std::errc() && ptr == s.data() + s.size() && !s.empty(), ErrorCode::Format, "KAT record: bad integer");
   return v;
}

}  // namespace

std::string format_kat_record(const KatRecord& rec) {
   std::ostringstream os;
   os << "params=" << rec.params.n << ',' << rec.params.k << ',' << rec.params.t << ',' << rec.params.m
      << " seed=" << seed_to_hex(rec.seed) << " msg=" << hex_encode(rec.msg) << " ct=" << hex_encode(rec.ct);
   return os.str();
}

KatRecord parse_kat_record(std::string_view line) {
   KatRecord rec;
   const auto params = expect_field(line, "params=");
   std::size_t fields[4] = {};
   std::size_t idx = 0;
   std::string_view rest = params;
   for(; idx < 4; ++idx) {
      const auto comma = rest.find(',');
      fields[idx] = parse_uint(rest.substr(0, comma));
      if(comma == std::string_view::npos) {
         break;
      }
      rest.remove_prefix(comma + 1);
   }
   require(idx == 3, ErrorCode::Format, "KAT record: params needs four values");
   rec.params = CodeParams{fields[0], fields[1], fields[2], static_cast<unsigned>(fields[3])};
   rec.seed = seed_from_hex(expect_field(line, "seed="));
   rec.msg = hex_decode(expect_field(line, "msg="));
   rec.ct = hex_decode(expect_field(line, "ct="));
   require(line.empty(), ErrorCode::Format, "KAT record: trailing data");
   return rec;
}

std::vector<KatRecord> generate_kat(const CodeParams& params, const Seed& master, std::size_t count) {
   params.validate();
   const auto codec = shared_codec(params.redundancy(), params.t);
   const std::size_t bits = codec->params().msg_bits;
   Rng rng(master);
   std::vector<KatRecord> out;
   out.reserve(count);
   for(std::size_t i = 0; i < count; ++i) {
      KatRecord rec;
      rec.params = params;
      rng.fill(rec.seed);
      rec.msg.resize(codec->params().msg_bytes());
      rng.fill(rec.msg);
      if(!rec.msg.empty() && bits % 8 != 0) {
         rec.msg.front() &= static_cast<std::uint8_t>((1u << (bits % 8)) - 1);
      }
      out.push_back(recompute_kat(rec));
   }
   return out;
}

KatRecord recompute_kat(const KatRecord& rec) {
   const KeyBundle keys = generate_keys(SchemeId::Kal1Dense, rec.params, DensePolicy{}, rec.seed);
   KatRecord out = rec;
   const BitVector c = encrypt_message(keys.pk, rec.msg);
   out.ct = pack_bits(c);
   require(decrypt_message(keys, c) == rec.msg, ErrorCode::KatMismatch, "KAT record does not decrypt to its message");
   return out;
}

void verify_kat(std::span<const KatRecord> records) {
   for(std::size_t i = 0; i < records.size(); ++i) {
      const auto& rec = records[i];
      const std::string where = "record " + std::to_string(i + 1);
      KatRecord got;
      try {
         got = recompute_kat(rec);
      } catch(const Error& e) {
         fail(ErrorCode::KatMismatch, where + ": " + e.what());
      }
      if(got.ct != rec.ct) {
         fail(ErrorCode::KatMismatch,
              where + ": ct mismatch\n  expected " + hex_encode(rec.ct) + "\n  got      " + hex_encode(got.ct));
      }
      const BitVector c = unpack_bits(rec.ct, rec.params.redundancy());
      const KeyBundle keys = generate_keys(SchemeId::Kal1Dense, rec.params, DensePolicy{}, rec.seed);
      const auto msg = decrypt_message(keys, c);
      if(msg != rec.msg) {
         fail(ErrorCode::KatMismatch,
              where + ": msg mismatch\n  expected " + hex_encode(rec.msg) + "\n  got      " + hex_encode(msg));
      }
   }
}

std::vector<KatRecord> read_kat(std::istream& in) {
   std::vector<KatRecord> out;
   std::string line;
   while(std::getline(in, line)) {
      if(!line.empty() && line.back() == '\r') {
         line.pop_back();
      }
      if(line.empty()) {
         continue;
      }
      out.push_back(parse_kat_record(line));
   }
   return out;
}

void write_kat(std::ostream& out, std::span<const KatRecord> records) {
   for(const auto& rec : records) {
      out << format_kat_record(rec) << '\n';
   }
}

}  // namespace kal1
