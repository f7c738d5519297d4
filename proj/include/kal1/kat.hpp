#pragma once

#include <kal1/goppa.hpp>
#include <kal1/rng.hpp>

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace kal1 {

/**
* One known-answer record for the dense Kal1 scheme:
*   params=<n>,<k>,<t>,<m> seed=<hex> msg=<hex> ct=<hex>
* seed is the 16-byte key-generation seed, msg the message bytes and ct the
* packed ciphertext bits.
*/
struct KatRecord {
      CodeParams params;
      Seed seed{};
      std::vector<std::uint8_t> msg;
      std::vector<std::uint8_t> ct;

      bool operator==(const KatRecord&) const = default;
};

std::string format_kat_record(const KatRecord& rec);
/// FormatError on any deviation from the record grammar.
KatRecord parse_kat_record(std::string_view line);

/**
* Record i takes a 16-byte key seed and then msg_bytes message bytes from
* Rng(master), in that order; the top byte of the message is masked down to
* the codec capacity.
*/
std::vector<KatRecord> generate_kat(const CodeParams& params, const Seed& master, std::size_t count);

/// Recomputes the ciphertext and the decryption of one record.
KatRecord recompute_kat(const KatRecord& rec);

/// Throws KatMismatch naming the first failing record (1-based line) and the differing field.
void verify_kat(std::span<const KatRecord> records);

std::vector<KatRecord> read_kat(std::istream& in);
void write_kat(std::ostream& out, std::span<const KatRecord> records);

}  // namespace kal1
