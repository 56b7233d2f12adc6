#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"

namespace kaj::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result kaj(std::vector<std::string> args) {
  args.insert(args.begin(), "kaj");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const fs::path& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary);
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() /
           (std::string("kaj_cli_") + info->name() + "_" +
            std::to_string(std::random_device{}()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string fixture(const std::string& name) const {
    return std::string(KAJ_FIXTURE_DIR) + "/" + name;
  }

  fs::path dir_;
};

TEST_F(CliTest, EncryptProducesGoldenFiles) {
  Result r = kaj({"encrypt", "--text", "ENVIRONMENT", "--beta", "2", "--modulus",
                  "500", "-o", path("msg")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(slurp(path("msg.kajc")), slurp(fixture("environment.kajc")));
  EXPECT_EQ(slurp(path("msg.kajk")), slurp(fixture("environment.kajk")));
  EXPECT_NE(r.out.find("n=11 beta=2 modulus=500"), std::string::npos);
}

TEST_F(CliTest, EncryptUsageErrors) {
  EXPECT_EQ(kaj({"encrypt", "--beta", "2", "--modulus", "500", "-o", path("x")}).code,
            kExitUsage);
  Result zero = kaj({"encrypt", "--text", "A", "--beta", "0", "--modulus", "500",
                     "-o", path("x")});
  EXPECT_EQ(zero.code, kExitUsage);
  EXPECT_NE(zero.err.find("beta"), std::string::npos);
  EXPECT_EQ(kaj({"encrypt", "--text", "A", "--beta", "2", "--modulus", "1", "-o",
                 path("x")}).code,
            kExitUsage);
  EXPECT_EQ(kaj({"encrypt", "--text", "A", "--beta", "two", "--modulus", "500",
                 "-o", path("x")}).code,
            kExitUsage);
  EXPECT_EQ(kaj({"encrypt", "--text", "A", "--in", path("f"), "--beta", "2",
                 "--modulus", "500", "-o", path("x")}).code,
            kExitUsage);
  EXPECT_EQ(kaj({}).code, kExitUsage);
  EXPECT_EQ(kaj({"frobnicate"}).code, kExitUsage);
  EXPECT_FALSE(fs::exists(path("x.kajc")));
}

TEST_F(CliTest, EncryptEmptyMessage) {
  EXPECT_EQ(kaj({"encrypt", "--text", "", "--beta", "2", "--modulus", "500", "-o",
                 path("x")}).code,
            kExitIntegrity);
  spit(path("empty.bin"), "");
  EXPECT_EQ(kaj({"encrypt", "--in", path("empty.bin"), "--beta", "2", "--modulus",
                 "500", "-o", path("x")}).code,
            kExitIntegrity);
}

TEST_F(CliTest, EncryptMissingInputFile) {
  EXPECT_EQ(kaj({"encrypt", "--in", path("nope"), "--beta", "2", "--modulus",
                 "500", "-o", path("x")}).code,
            kExitFormat);
}

TEST_F(CliTest, DecryptFixture) {
  Result r = kaj({"decrypt", "--in", fixture("environment.kajc"), "--key",
                  fixture("environment.kajk")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "ENVIRONMENT\n");
}

TEST_F(CliTest, DecryptTamperedRemainder) {
  std::string ct = slurp(fixture("environment.kajc"));
  ct.replace(ct.find("r=138"), 5, "r=139");
  spit(path("t.kajc"), ct);
  Result r = kaj({"decrypt", "--in", path("t.kajc"), "--key",
                  fixture("environment.kajk")});
  EXPECT_EQ(r.code, kExitIntegrity);
  EXPECT_NE(r.err.find("DivisibilityError"), std::string::npos);
}

TEST_F(CliTest, DecryptLengthMismatch) {
  spit(path("short.kajk"), "KAJ1 KEY\nn=1\nq=0\n");
  Result r = kaj({"decrypt", "--in", fixture("environment.kajc"), "--key",
                  path("short.kajk")});
  EXPECT_EQ(r.code, kExitIntegrity);
  EXPECT_NE(r.err.find("LengthMismatch"), std::string::npos);
}

TEST_F(CliTest, DecryptFormatAndIoErrors) {
  spit(path("bad.kajc"), "KAJ1 CIPHERTEXT\nbeta=2\n");
  Result r = kaj({"decrypt", "--in", path("bad.kajc"), "--key",
                  fixture("environment.kajk")});
  EXPECT_EQ(r.code, kExitFormat);
  EXPECT_NE(r.err.find("line 3"), std::string::npos);
  EXPECT_EQ(kaj({"decrypt", "--in", path("missing.kajc"), "--key",
                 fixture("environment.kajk")}).code,
            kExitFormat);
  EXPECT_EQ(kaj({"decrypt", "--in", fixture("environment.kajc")}).code, kExitUsage);
}

TEST_F(CliTest, DecryptBinaryPayload) {
  std::string payload("\x00\xff\x80 binary", 10);
  spit(path("payload.bin"), payload);
  ASSERT_EQ(kaj({"encrypt", "--in", path("payload.bin"), "--beta", "3",
                 "--modulus", "257", "-o", path("bin")}).code,
            0);
  Result to_stdout = kaj({"decrypt", "--in", path("bin.kajc"), "--key",
                          path("bin.kajk")});
  EXPECT_EQ(to_stdout.code, 0);
  EXPECT_EQ(to_stdout.out, payload);
  EXPECT_NE(to_stdout.err.find("warning"), std::string::npos);
  ASSERT_EQ(kaj({"decrypt", "--in", path("bin.kajc"), "--key", path("bin.kajk"),
                 "--out", path("back.bin")}).code,
            0);
  EXPECT_EQ(slurp(path("back.bin")), payload);
}

TEST_F(CliTest, TransformForwardAndInverse) {
  EXPECT_EQ(kaj({"transform", "pow 2"}).out, "2/c^(m+3)\n");
  EXPECT_EQ(kaj({"transform", "sin 3"}).out, "3/(c^(m-1)*(c^2+9))\n");
  EXPECT_EQ(kaj({"transform", "2 sin 1 + 3 cosh 1"}).out,
            "2/(c^(m-1)*(c^2+1)) + 3/(c^(m-2)*(c^2-1))\n");
  EXPECT_EQ(kaj({"transform", "--invert", "1/c^(m+1)"}).out, "1\n");
  EXPECT_EQ(kaj({"transform", "--invert", "2/c^(m+3)"}).out, "t^2\n");
  EXPECT_EQ(kaj({"transform", "--invert", "1/(c^(m-2)*(c^2-4))"}).out,
            "cosh(2*t)\n");
}

TEST_F(CliTest, TransformErrors) {
  EXPECT_EQ(kaj({"transform", "tan 1"}).code, kExitUsage);
  EXPECT_EQ(kaj({"transform", "--invert", "c^(m+1)"}).code, kExitUsage);
  EXPECT_EQ(kaj({"transform", "--invert", "1/c^(m+0)"}).code, kExitIntegrity);
  EXPECT_EQ(kaj({"transform", "--invert", "1/(c^(m-2)*(c-1))"}).code,
            kExitIntegrity);
  EXPECT_EQ(kaj({"transform"}).code, kExitUsage);
}

TEST_F(CliTest, CrackFixture) {
  Result r = kaj({"crack", "--in", fixture("environment.kajc")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "k=1 candidates=1 {E}");
  EXPECT_NE(r.out.find("k=4 candidates=10 {\\x17,0,I,b,{,"), std::string::npos);
  Result printable = kaj({"crack", "--in", fixture("environment.kajc"), "--printable"});
  EXPECT_NE(printable.out.find("k=4 candidates=4 {0,I,b,{}"), std::string::npos);
}

TEST_F(CliTest, CrackEmptyCandidateSetWarns) {
  spit(path("odd.kajc"), "KAJ1 CIPHERTEXT\nbeta=1\nmodulus=2\nn=1\nr=1\n");
  Result r = kaj({"crack", "--in", path("odd.kajc")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "k=1 candidates=0 {}\n");
  EXPECT_NE(r.err.find("warning"), std::string::npos);
  EXPECT_EQ(kaj({"crack", "--in", path("nope.kajc")}).code, kExitFormat);
}

TEST_F(CliTest, RoundTripThroughFiles) {
  std::mt19937_64 rng(100);
  const char* betas[] = {"1", "2", "3", "5", "10"};
  const char* moduli[] = {"2", "257", "500", "1009"};
  for (int i = 0; i < 100; ++i) {
    Bytes message = testing::random_bytes(rng, 1, 64);
    spit(path("in.bin"), std::string(message.begin(), message.end()));
    ASSERT_EQ(kaj({"encrypt", "--in", path("in.bin"), "--beta", betas[rng() % 5],
                   "--modulus", moduli[rng() % 4], "-o", path("rt")}).code,
              0);
    ASSERT_EQ(kaj({"decrypt", "--in", path("rt.kajc"), "--key", path("rt.kajk"),
                   "--out", path("out.bin")}).code,
              0);
    ASSERT_EQ(slurp(path("out.bin")), std::string(message.begin(), message.end()));
  }
}

TEST_F(CliTest, DeterministicOutput) {
  std::vector<std::string> args = {"encrypt", "--text", "determinism", "--beta",
                                   "5", "--modulus", "1009", "-o", path("a")};
  Result first = kaj(args);
  std::string c1 = slurp(path("a.kajc"));
  std::string k1 = slurp(path("a.kajk"));
  Result second = kaj(args);
  EXPECT_EQ(first.out, second.out);
  EXPECT_EQ(c1, slurp(path("a.kajc")));
  EXPECT_EQ(k1, slurp(path("a.kajk")));
  EXPECT_EQ(kaj({"crack", "--in", path("a.kajc")}).out,
            kaj({"crack", "--in", path("a.kajc")}).out);
}

TEST_F(CliTest, LegacyView) {
  Result r = kaj({"encrypt", "--text", "ENVIRONMENT", "--beta", "2", "--modulus",
                  "500", "-o", path("g"), "--legacy-view"});
  EXPECT_NE(r.out.find("glyphs: \\x8a\\xb4\\x80\\xb4h\\xb04\\x84\\x04\\xccp"),
            std::string::npos);
}

}  // namespace
}  // namespace kaj::cli
