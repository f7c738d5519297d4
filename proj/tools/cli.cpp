#include "cli.hpp"

#include <kal1/error.hpp>
#include <kal1/isd_probe.hpp>
#include <kal1/kat.hpp>
#include <kal1/scheme.hpp>
#include <kal1/serialize.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <sstream>

namespace kal1::cli {

namespace {

constexpr int UsageExit = 64;

struct Options {
      std::size_t n = 1024;
      std::size_t k = 524;
      std::size_t t = 50;
      unsigned m = 10;
      std::string scheme = "kal1";
      std::string seed_hex;
      std::size_t sparse_weight = 10;
      std::size_t run_start = 0;
      std::size_t run_len = 2;
      std::string in;
      std::string out;
      std::string key;
      std::string kat;
      std::string kat_mode;
      std::string format = "text";
      std::size_t count = 16;
      std::size_t trials = 1000;
      std::size_t max_iters = 1;
      unsigned workers = 1;
      bool allow_large = false;
};

CodeParams params_from(const Options& o) {
   CodeParams p{o.n, o.k, o.t, o.m};
   p.validate();
   return p;
}

Seed seed_from(const Options& o) {
   return o.seed_hex.empty() ? seed_from_entropy() : seed_from_hex(o.seed_hex);
}

std::vector<std::uint8_t> read_file(const std::string& path) {
   std::ifstream in(path, std::ios::binary);
   require(in.good(), ErrorCode::Io, "cannot open '" + path + "'");
   return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in), {});
}

void write_file(const std::string& path, std::span<const std::uint8_t> bytes) {
   std::ofstream out(path, std::ios::binary | std::ios::trunc);
   require(out.good(), ErrorCode::Io, "cannot create '" + path + "'");
   out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
   require(out.good(), ErrorCode::Io, "write to '" + path + "' failed");
}

/// Payload bits, with the fixed-width fields of the compressed formats separated by '|'.
std::string display_payload(const PublicKey& pk) {
   const std::string bits = payload_bit_string(pk);
   const auto scheme = scheme_of(pk);
   if(scheme != SchemeId::Kal1S1 && scheme != SchemeId::Kal1S2) {
      return bits;
   }
   const std::size_t width = index_width(params_of(pk));
   std::string out = "{";
   for(std::size_t i = 0; i < bits.size(); i += width) {
      if(i != 0) {
         out += '|';
      }
      out += bits.substr(i, width);
   }
   return out + "}";
}

int cmd_keygen(const Options& o, std::ostream& out) {
   const CodeParams params = params_from(o);
   const SchemeId scheme = parse_scheme_name(o.scheme);
   const SeedRowPolicy policy = policy_for(scheme, SparsePolicy{o.sparse_weight}, RunPolicy{o.run_start, o.run_len});
   if(scheme != SchemeId::Niederreiter) {
      validate_policy(params, policy);
   }
   const Seed seed = seed_from(o);
   const KeyBundle keys = generate_keys(scheme, params, policy, seed);

   write_file(o.out + ".pk", serialize_pk(keys.pk));
   write_file(o.out + ".sk", serialize_sk(keys.sk_file));

   out << "scheme: " << scheme_name(scheme) << '\n';
   out << "public key: " << payload_bits(keys.pk) << " bits\n";
   if(scheme != SchemeId::Niederreiter) {
      out << "payload: " << display_payload(keys.pk) << '\n';
   }
   out << "seed: " << seed_to_hex(seed) << '\n';
   out << "wrote " << o.out << ".pk " << o.out << ".sk\n";
   return 0;
}

int cmd_encrypt(const Options& o, std::ostream& out) {
   const PublicKey pk = parse_pk(read_file(o.key));
   const auto msg = read_file(o.in);
   const BitVector c = encrypt_message(pk, msg);
   write_file(o.out, pack_bits(c));
   out << "ciphertext: " << c.size() << " bits\n";
   return 0;
}

int cmd_decrypt(const Options& o, std::ostream& out) {
   const KeyBundle keys = restore_keys(parse_sk(read_file(o.key)));
   const auto& params = params_of(keys.pk);
   const BitVector c = unpack_bits(read_file(o.in), params.redundancy());
   const auto msg = decrypt_message(keys, c);
   write_file(o.out, msg);
   out << "message: " << msg.size() << " bytes\n";
   return 0;
}

void print_params(std::ostream& out, const CodeParams& p) {
   out << "params: n=" << p.n << " k=" << p.k << " t=" << p.t << " m=" << p.m << '\n';
}

int cmd_inspect(const Options& o, std::ostream& out) {
   const auto bytes = read_file(o.key);
   require(bytes.size() >= 4, ErrorCode::Format, "file too short to be a key");
   if(bytes[2] == 'S') {
      const PrivateKeyFile sk = parse_sk(bytes);
      out << "type: private key\n";
      out << "scheme: " << scheme_name(sk.scheme) << '\n';
      print_params(out, sk.params);
      out << "seed: " << seed_to_hex(sk.seed) << '\n';
      std::ostringstream crc;
      crc << std::hex << std::setw(8) << std::setfill('0') << sk.checksum;
      out << "checksum: " << crc.str() << '\n';
      return 0;
   }
   const PublicKey pk = parse_pk(bytes);
   out << "type: public key\n";
   out << "scheme: " << scheme_name(scheme_of(pk)) << '\n';
   print_params(out, params_of(pk));
   out << "public key: " << payload_bits(pk) << " bits\n";
   if(scheme_of(pk) != SchemeId::Niederreiter) {
      out << "payload: " << display_payload(pk) << '\n';
   }
   return 0;
}

int cmd_kat(const Options& o, std::ostream& out) {
   if(o.kat_mode == "generate") {
      const auto records = generate_kat(params_from(o), seed_from(o), o.count);
      std::ofstream f(o.kat, std::ios::trunc);
      require(f.good(), ErrorCode::Io, "cannot create '" + o.kat + "'");
      write_kat(f, records);
      out << "wrote " << records.size() << " records to " << o.kat << '\n';
      return 0;
   }
   std::ifstream f(o.kat);
   require(f.good(), ErrorCode::Io, "cannot open '" + o.kat + "'");
   const auto records = read_kat(f);
   verify_kat(records);
   out << "verified " << records.size() << " records\n";
   return 0;
}

struct BenchRow {
      std::string scheme;
      std::string id;
      std::size_t bits;
      std::string source;
      double keygen_ms = -1;
      double encrypt_ms = -1;
      double decrypt_ms = -1;
};

template <typename F>
double time_ms(F&& f) {
   const auto start = std::chrono::steady_clock::now();
   f();
   return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

BenchRow bench_scheme(const std::string& label,
                      const std::string& id,
                      SchemeId scheme,
                      const CodeParams& params,
                      const SeedRowPolicy& policy,
                      Rng& rng) {
   Seed seed{};
   rng.fill(seed);
   std::optional<KeyBundle> keys;
   BenchRow row{label, id, 0, "computed"};
   row.keygen_ms = time_ms([&] { keys = generate_keys(scheme, params, policy, seed); });
   row.bits = payload_bits(keys->pk);

   constexpr int Rounds = 8;
   std::vector<std::vector<std::uint8_t>> msgs(Rounds, std::vector<std::uint8_t>(message_bytes(scheme, params)));
   const std::size_t length = scheme == SchemeId::Niederreiter ? params.n : params.redundancy();
   const auto codec = shared_codec(length, params.t);
   for(auto& msg : msgs) {
      rng.fill(msg);
      if(!msg.empty() && codec->params().msg_bits % 8 != 0) {
         msg.front() &= static_cast<std::uint8_t>((1u << (codec->params().msg_bits % 8)) - 1);
      }
   }
   std::vector<BitVector> cts;
   row.encrypt_ms = time_ms([&] {
                       for(const auto& msg : msgs) {
                          cts.push_back(encrypt_message(keys->pk, msg));
                       }
                    }) /
                    Rounds;
   row.decrypt_ms = time_ms([&] {
                       for(std::size_t i = 0; i < cts.size(); ++i) {
                          require(decrypt_message(*keys, cts[i]) == msgs[i], ErrorCode::DecodingFailure, "bench round trip failed");
                       }
                    }) /
                    Rounds;
   return row;
}

int cmd_bench(const Options& o, std::ostream& out) {
   const CodeParams params = params_from(o);
   const SparsePolicy sparse{o.sparse_weight};
   const RunPolicy run{o.run_start, o.run_len};
   validate_policy(params, sparse);
   validate_policy(params, run);
   Rng rng(seed_from(o));

   std::vector<BenchRow> rows;
   rows.push_back({"Classic McEliece", "-", 536576, "reference"});
   BenchRow nied = bench_scheme("Niederreiter", "systematic", SchemeId::Niederreiter, params, DensePolicy{}, rng);
   nied.bits = params.k * params.redundancy();
   rows.push_back(nied);
   rows.push_back({"Niederreiter", "full", params.n * params.redundancy(), "computed"});
   rows.push_back({"BIKE", "BIKE_L1", 1541, "reference"});
   rows.push_back({"BIKE", "BIKE_L3", 3083, "reference"});
   rows.push_back({"HQC", "HQC128", 2289, "reference"});
   rows.push_back({"HQC", "HQC192", 4522, "reference"});
   rows.push_back({"HQC", "HQC256", 7245, "reference"});
   rows.push_back(bench_scheme("Kal1", "dense", SchemeId::Kal1Dense, params, DensePolicy{}, rng));
   rows.push_back(bench_scheme("Kal1", "S1", SchemeId::Kal1S1, params, sparse, rng));
   rows.push_back(bench_scheme("Kal1", "S2", SchemeId::Kal1S2, params, run, rng));

   auto ms = [](double v) {
      if(v < 0) {
         return std::string("-");
      }
      std::ostringstream os;
      os << std::fixed << std::setprecision(3) << v;
      return os.str();
   };

   if(o.format == "csv") {
      out << "scheme,id,public_key_bits,source,keygen_ms,encrypt_ms,decrypt_ms\n";
      for(const auto& r : rows) {
         out << r.scheme << ',' << r.id << ',' << r.bits << ',' << r.source << ',' << ms(r.keygen_ms) << ','
             << ms(r.encrypt_ms) << ',' << ms(r.decrypt_ms) << '\n';
      }
      return 0;
   }

   out << "public-key sizes at n=" << params.n << " k=" << params.k << " t=" << params.t << " m=" << params.m << "\n\n";
   out << std::left << std::setw(18) << "scheme" << std::setw(12) << "id" << std::setw(20) << "public key (bits)"
       << std::setw(11) << "source" << std::setw(13) << "keygen (ms)" << std::setw(14) << "encrypt (ms)"
       << "decrypt (ms)\n";
   for(const auto& r : rows) {
      out << std::left << std::setw(18) << r.scheme << std::setw(12) << r.id << std::setw(20) << r.bits
          << std::setw(11) << r.source << std::setw(13) << ms(r.keygen_ms) << std::setw(14) << ms(r.encrypt_ms)
          << ms(r.decrypt_ms) << '\n';
   }
   out << "\nNiederreiter systematic = k x (n-k) redundancy bits; full = n x (n-k), the size of the\n"
          "serialized H'^T. Reference rows are published sizes of those schemes, not computed here.\n";
   return 0;
}

double binomial(std::size_t n, std::size_t k) {
   return std::exp(std::lgamma(double(n) + 1) - std::lgamma(double(k) + 1) - std::lgamma(double(n - k) + 1));
}

int cmd_probe(const Options& o, std::ostream& out) {
   const CodeParams params = params_from(o);
   const Seed seed = seed_from(o);
   Rng rng(seed);
   Seed key_seed{};
   rng.fill(key_seed);
   const KeyBundle keys = generate_keys(SchemeId::Kal1Dense, params, DensePolicy{}, key_seed);
   const auto& sk = std::get<Kal1PrivateKey>(keys.sk);
   const ExpandedCyclicKey cyclic = expand_cyclic(std::get<Kal1PublicKey>(keys.pk));
   out << rank_report(cyclic, sk).to_text();

   IsdInstance inst{parity_view(sk.h_prime.h_prime_t), BitVector(params.redundancy()), params.t};
   IsdOptions opts;
   opts.max_iters = o.max_iters;
   opts.workers = o.workers;
   opts.allow_large = o.allow_large;

   std::size_t successes = 0;
   for(std::size_t trial = 0; trial < o.trials; ++trial) {
      BitVector e(params.n);
      while(e.weight() < params.t) {
         e.set(rng.uniform(static_cast<std::uint32_t>(params.n)));
      }
      inst.s = nied_syndrome(sk.h_prime, e);
      const IsdResult res = prange_isd(inst, opts, rng);
      if(res.error && *res.error == e) {
         ++successes;
      }
   }
   const double rate = o.trials ? double(successes) / double(o.trials) : 0.0;
   const double p1 = binomial(params.redundancy(), params.t) / binomial(params.n, params.t);
   const double expected = 1.0 - std::pow(1.0 - p1, double(o.max_iters));
   const double se = o.trials ? std::sqrt(expected * (1 - expected) / double(o.trials)) : 0.0;
   out << "isd trials: " << o.trials << '\n'
       << "isd iterations per trial: " << o.max_iters << '\n'
       << "isd recovered: " << successes << '\n'
       << std::setprecision(6) << "isd recovery rate: " << rate << '\n'
       << "isd analytic rate: " << expected << '\n'
       << "isd standard error: " << se << '\n'
       << "isd deviation (SE): " << (se > 0 ? (rate - expected) / se : 0.0) << '\n';
   return 0;
}

void add_params(CLI::App* cmd, Options& o) {
   cmd->add_option("--n", o.n, "code length");
   cmd->add_option("--k", o.k, "code dimension (must equal n - m*t)");
   cmd->add_option("--t", o.t, "error weight");
   cmd->add_option("--m", o.m, "field degree");
}

void add_policy(CLI::App* cmd, Options& o) {
   cmd->add_option("--sparse-weight", o.sparse_weight, "ones in a Kal1-S1 seed row");
   cmd->add_option("--run-start", o.run_start, "first one of a Kal1-S2 seed row");
   cmd->add_option("--run-len", o.run_len, "ones in a Kal1-S2 seed row");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
   CLI::App app{"Kal1 / Niederreiter workbench"};
   app.require_subcommand(1);
   Options o;

   auto* keygen = app.add_subcommand("keygen", "generate a key pair");
   add_params(keygen, o);
   add_policy(keygen, o);
   keygen->add_option("--scheme", o.scheme, "niederreiter | kal1 | kal1-s1 | kal1-s2")
      ->check(CLI::IsMember({"niederreiter", "kal1", "kal1-s1", "kal1-s2"}));
   keygen->add_option("--seed", o.seed_hex, "32 hex digits; default draws from the system entropy source");
   keygen->add_option("--out", o.out, "output prefix; writes <out>.pk and <out>.sk")->required();

   auto* encrypt = app.add_subcommand("encrypt", "encrypt a message file");
   encrypt->add_option("--key", o.key, "public key file")->required();
   encrypt->add_option("--in", o.in, "message file")->required();
   encrypt->add_option("--out", o.out, "ciphertext file")->required();

   auto* decrypt = app.add_subcommand("decrypt", "decrypt a ciphertext file");
   decrypt->add_option("--key", o.key, "private key file")->required();
   decrypt->add_option("--in", o.in, "ciphertext file")->required();
   decrypt->add_option("--out", o.out, "message file")->required();

   auto* inspect = app.add_subcommand("inspect", "describe a key file");
   inspect->add_option("--key", o.key, "public or private key file")->required();

   auto* kat = app.add_subcommand("kat", "generate or verify known-answer records");
   kat->add_option("mode", o.kat_mode, "generate | verify")->required()->check(CLI::IsMember({"generate", "verify"}));
   kat->add_option("--kat", o.kat, "KAT file")->required();
   add_params(kat, o);
   kat->add_option("--seed", o.seed_hex, "master seed for generate");
   kat->add_option("--count", o.count, "records to generate");

   auto* bench = app.add_subcommand("bench", "public-key size table and timings");
   add_params(bench, o);
   add_policy(bench, o);
   bench->add_option("--seed", o.seed_hex, "seed for the benchmark keys");
   bench->add_option("--format", o.format, "text | csv")->check(CLI::IsMember({"text", "csv"}));

   auto* probe = app.add_subcommand("probe", "rank report and Prange ISD calibration on a toy key");
   add_params(probe, o);
   probe->add_option("--seed", o.seed_hex, "seed");
   probe->add_option("--trials", o.trials, "planted instances");
   probe->add_option("--max-iters", o.max_iters, "Prange iterations per instance");
   probe->add_option("--workers", o.workers, "parallel workers");
   probe->add_flag("--allow-large", o.allow_large, "permit n > 64");

   std::vector<std::string> argv_rest(args.begin() + (args.empty() ? 0 : 1), args.end());
   std::reverse(argv_rest.begin(), argv_rest.end());
   try {
      app.parse(argv_rest);
   } catch(const CLI::CallForHelp&) {
      out << app.help();
      return 0;
   } catch(const CLI::ParseError& e) {
      err << "error: " << UsageExit << " UsageError\n" << e.what() << '\n';
      return UsageExit;
   }

   // probe defaults to the toy parameters; every other command to (1024, 524, 50, 10)
   if(probe->parsed()) {
      if(probe->count("--n") == 0) {
         o.n = 16;
      }
      if(probe->count("--k") == 0) {
         o.k = 8;
      }
      if(probe->count("--t") == 0) {
         o.t = 2;
      }
      if(probe->count("--m") == 0) {
         o.m = 4;
      }
   }

   try {
      if(keygen->parsed()) {
         return cmd_keygen(o, out);
      }
      if(encrypt->parsed()) {
         return cmd_encrypt(o, out);
      }
      if(decrypt->parsed()) {
         return cmd_decrypt(o, out);
      }
      if(inspect->parsed()) {
         return cmd_inspect(o, out);
      }
      if(kat->parsed()) {
         return cmd_kat(o, out);
      }
      if(bench->parsed()) {
         return cmd_bench(o, out);
      }
      return cmd_probe(o, out);
   } catch(const Error& e) {
      err << "error: " << exit_code(e.code()) << ' ' << error_name(e.code()) << '\n' << e.what() << '\n';
      return exit_code(e.code());
   } catch(const std::exception& e) {
      err << "error: 1 InternalError\n" << e.what() << '\n';
      return 1;
   }
}

}  // namespace kal1::cli
