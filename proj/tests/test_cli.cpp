#include <doctest.h>

#include "../tools/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

#include <unistd.h>

namespace fs = std::filesystem;

namespace {

struct Result {
      int code;
      std::string out;
      std::string err;
};

Result run(std::vector<std::string> args) {
   args.insert(args.begin(), "kal1");
   std::ostringstream out, err;
   const int code = kal1::cli::run(args, out, err);
   return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
   std::ifstream in(p, std::ios::binary);
   return {std::istreambuf_iterator<char>(in), {}};
}

void spit(const fs::path& p, const std::string& s) {
   std::ofstream(p, std::ios::binary) << s;
}

struct TempDir {
      fs::path path;

      TempDir() {
         path = fs::temp_directory_path() / ("kal1_cli_" + std::to_string(::getpid()));
         fs::create_directories(path);
      }

      ~TempDir() { fs::remove_all(path); }

      std::string operator/(const std::string& name) const { return (path / name).string(); }
};

const std::vector<std::string> toy{"--n", "16", "--k", "8", "--t", "2", "--m", "4"};
const std::string seed = "000102030405060708090a0b0c0d0e0f";

std::vector<std::string> cat(std::vector<std::string> a, const std::vector<std::string>& b) {
   a.insert(a.end(), b.begin(), b.end());
   return a;
}

}  // namespace

TEST_CASE("keygen at the reference size reports 500 bits") {
   TempDir dir;
   const auto r = run({"keygen", "--seed", seed, "--out", dir / "ref"});
   REQUIRE(r.code == 0);
   CHECK(r.out.find("public key: 500 bits") != std::string::npos);
}

TEST_CASE("kal1-s2 payload display") {
   TempDir dir;
   const auto r = run(cat({"keygen", "--scheme", "kal1-s2", "--seed", seed, "--out", dir / "s2"}, toy));
   REQUIRE(r.code == 0);
   CHECK(r.out.find("public key: 6 bits") != std::string::npos);
   CHECK(r.out.find("{000|010}") != std::string::npos);

   const auto r2 = run(cat({"keygen", "--scheme", "kal1-s2", "--run-start", "4", "--run-len", "3", "--seed", seed,
                            "--out", dir / "s2b"},
                           toy));
   REQUIRE(r2.code == 0);
   CHECK(r2.out.find("{100|011}") != std::string::npos);
}

TEST_CASE("same seed gives byte-identical key files") {
   TempDir dir;
   for(const std::string scheme : {"niederreiter", "kal1", "kal1-s1", "kal1-s2"}) {
      const auto args = cat({"keygen", "--scheme", scheme, "--seed", seed, "--sparse-weight", "3"}, toy);
      REQUIRE(run(cat(args, {"--out", dir / "a"})).code == 0);
      REQUIRE(run(cat(args, {"--out", dir / "b"})).code == 0);
      CHECK(slurp(dir / "a.pk") == slurp(dir / "b.pk"));
      CHECK(slurp(dir / "a.sk") == slurp(dir / "b.sk"));
   }
}

TEST_CASE("encrypt and decrypt through files") {
   TempDir dir;
   REQUIRE(run(cat({"keygen", "--seed", seed, "--out", dir / "k"}, toy)).code == 0);
   spit(dir / "msg", std::string(1, '\x0b'));
   REQUIRE(run({"encrypt", "--key", dir / "k.pk", "--in", dir / "msg", "--out", dir / "ct"}).code == 0);
   REQUIRE(run({"decrypt", "--key", dir / "k.sk", "--in", dir / "ct", "--out", dir / "back"}).code == 0);
   CHECK(slurp(dir / "back") == slurp(dir / "msg"));

   const auto inspect = run({"inspect", "--key", dir / "k.pk"});
   CHECK(inspect.code == 0);
   CHECK(inspect.out.find("scheme: kal1") != std::string::npos);

   // truncated ciphertext
   spit(dir / "short", "");
   const auto bad = run({"decrypt", "--key", dir / "k.sk", "--in", dir / "short", "--out", dir / "x"});
   CHECK(bad.code == 2);
   CHECK(bad.err.rfind("error: 2 ", 0) == 0);

   // message out of range
   spit(dir / "big", std::string(1, '\x10'));
   CHECK(run({"encrypt", "--key", dir / "k.pk", "--in", dir / "big", "--out", dir / "x"}).code == 3);

   // corrupted public key
   auto pk = slurp(dir / "k.pk");
   pk[0] = 'Z';
   spit(dir / "bad.pk", pk);
   CHECK(run({"encrypt", "--key", dir / "bad.pk", "--in", dir / "msg", "--out", dir / "x"}).code == 2);
}

TEST_CASE("KAT generate, verify and detect corruption") {
   TempDir dir;
   const auto gen = run(cat({"kat", "generate", "--seed", seed, "--count", "8", "--kat", dir / "kat.txt"}, toy));
   REQUIRE(gen.code == 0);
   CHECK(run({"kat", "verify", "--kat", dir / "kat.txt"}).code == 0);

   auto text = slurp(dir / "kat.txt");
   const auto pos = text.rfind("ct=") + 3;
   text[pos] = text[pos] == '0' ? '1' : '0';
   spit(dir / "bad.txt", text);
   const auto bad = run({"kat", "verify", "--kat", dir / "bad.txt"});
   CHECK(bad.code == 5);
   CHECK(bad.err.rfind("error: 5 ", 0) == 0);

   CHECK(run({"kat", "verify", "--kat", KAL1_TEST_DATA "/toy_kat.txt"}).code == 0);
}

TEST_CASE("default sparse weight does not fit the toy size") {
   TempDir dir;
   const auto r = run(cat({"keygen", "--scheme", "kal1-s1", "--seed", seed, "--out", dir / "s1"}, toy));
   CHECK(r.code == 1);
   CHECK(r.err.rfind("error: 1 PolicyError", 0) == 0);
}

TEST_CASE("usage errors and the bench table") {
   CHECK(run({}).code == 64);
   CHECK(run({"frobnicate"}).code == 64);
   CHECK(run({"keygen"}).code == 64);

   const auto bench = run({"bench", "--format", "csv"});
   REQUIRE(bench.code == 0);
   for(const auto* needle : {",262000,", ",512000,", ",500,", ",90,", ",18,", ",536576,"}) {
      CHECK(bench.out.find(needle) != std::string::npos);
   }
}

TEST_CASE("probe prints the rank report and the ISD rate") {
   const auto r = run({"probe", "--seed", seed, "--trials", "200"});
   REQUIRE(r.code == 0);
   CHECK(r.out.rfind("n: 16\nk: 8\nrank H_cyclic^T: ", 0) == 0);
   CHECK(r.out.find("rank identity block: 8\n") != std::string::npos);
   CHECK(r.out.find("isd trials: 200\n") != std::string::npos);
   CHECK(r.out.find("isd analytic rate: 0.233333\n") != std::string::npos);
}
