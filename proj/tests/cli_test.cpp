#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "chaoscrypt/cli.hpp"
#include "chaoscrypt/pgm.hpp"

using namespace chaoscrypt;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("chaoscrypt_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, EncryptDecryptRoundTripIsByteIdentical) {
  ASSERT_EQ(run({"gen-image", "--seed", "5", "--size", "64", "--out", path("plain.pgm")}).code, 0);
  const std::vector<std::string> common = {"--map", "cat", "--diffusion", "pow", "--n", "6",
                                           "--master-key", "0123456789abcdef0123456789abcdef"};
  auto enc = common;
  enc.insert(enc.begin(), "encrypt");
  enc.insert(enc.end(), {"--in", path("plain.pgm"), "--out", path("cipher.pgm")});
  auto dec = common;
  dec.insert(dec.begin(), "decrypt");
  dec.insert(dec.end(), {"--in", path("cipher.pgm"), "--out", path("back.pgm")});
  ASSERT_EQ(run(enc).code, 0);
  ASSERT_EQ(run(dec).code, 0);
  EXPECT_NE(slurp(path("plain.pgm")), slurp(path("cipher.pgm")));
  EXPECT_EQ(slurp(path("plain.pgm")), slurp(path("back.pgm")));
}

TEST_F(CliTest, ExplicitKeysRoundTrip) {
  const std::vector<std::string> keys = {"--map", "baker", "--diffusion", "add", "--n", "3", "--schedule",
                                         "per-round", "--n0", "1", "--confusion-key", "8,8", "--confusion-key",
                                         "4,4,8", "--confusion-key", "2,2,4,8", "--diffusion-key", "1",
                                         "--diffusion-key", "2", "--diffusion-key", "3"};
  auto enc = keys;
  enc.insert(enc.begin(), "encrypt");
  enc.insert(enc.end(), {"--gen-image", "9", "--size", "16", "--out", path("c.pgm")});
  ASSERT_EQ(run(enc).code, 0) << run(enc).err;
  auto dec = keys;
  dec.insert(dec.begin(), "decrypt");
  dec.insert(dec.end(), {"--in", path("c.pgm"), "--out", path("p.pgm")});
  ASSERT_EQ(run(dec).code, 0);
  EXPECT_EQ(read_pgm(fs::path(path("p.pgm"))), make_random_image(16, 256, 9));
}

TEST_F(CliTest, AttackFindsTrueKey) {
  const std::vector<std::string> enc = {"encrypt", "--map", "standard", "--diffusion", "add", "--n", "4",
                                        "--confusion-key", "100", "--diffusion-key", "77", "--gen-image", "3",
                                        "--size", "32", "--out", path("c.pgm")};
  ASSERT_EQ(run(enc).code, 0);
  ASSERT_EQ(run({"gen-image", "--seed", "3", "--size", "32", "--out", path("p.pgm")}).code, 0);
  const CliRun r = run({"attack", "--plain", path("p.pgm"), "--cipher", path("c.pgm"), "--n", "4", "--diffusion",
                     "add", "--csv", path("a.csv")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("candidates:"), std::string::npos);
  EXPECT_NE(r.out.find(" 77"), std::string::npos);
  EXPECT_NE(slurp(path("a.csv")).find("77,true"), std::string::npos);
}

TEST_F(CliTest, AttackRefusesHardenedCiphertext) {
  ASSERT_EQ(run({"gen-image", "--seed", "3", "--size", "16", "--out", path("p.pgm")}).code, 0);
  const CliRun r = run({"attack", "--plain", path("p.pgm"), "--cipher", path("p.pgm"), "--n", "4", "--diffusion",
                     "add", "--harden"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(run({"attack", "--plain", path("p.pgm"), "--cipher", path("p.pgm"), "--n", "4", "--diffusion", "add",
                 "--harden", "--force"})
                .code,
            0);
}

TEST_F(CliTest, PcrCsv) {
  const CliRun r = run({"metric", "pcr", "--diffusion", "add", "--size", "32", "--n-max", "20", "--csv",
                     path("pcr.csv")});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(slurp(path("pcr.csv")));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line.rfind("# metric=pcr", 0), 0u);
  int rows = 0;
  while (std::getline(in, line)) {
    const double v = std::stod(line.substr(line.find(',') + 1));
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 100.0);
    ++rows;
  }
  EXPECT_EQ(rows, 20);
}

TEST_F(CliTest, CdrSplitsSeriesPerIteration) {
  const CliRun r = run({"metric", "cdr", "--map", "standard", "--size", "16", "--n-min", "1", "--n-max", "2", "--key",
                     "10", "--key", "20", "--csv", path("cdr.csv")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(path("cdr_n1.csv")));
  EXPECT_TRUE(fs::exists(path("cdr_n2.csv")));
}

TEST_F(CliTest, AdcToStdout) {
  const CliRun r = run({"metric", "adc", "--map", "cat", "--size", "8", "--n-min", "0", "--n-max", "0", "--key",
                     "1,1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("12.500000"), std::string::npos);
}

TEST_F(CliTest, Reports) {
  const CliRun ks = run({"keyspace", "--map", "baker", "--size", "256", "--n", "1"});
  ASSERT_EQ(ks.code, 0) << ks.err;
  EXPECT_NE(ks.out.find("log2 key space: 263.000000"), std::string::npos);
  const CliRun cx = run({"complexity", "--map", "cat", "--diffusion", "add", "--size", "256", "--n", "1"});
  ASSERT_EQ(cx.code, 0) << cx.err;
  EXPECT_NE(cx.out.find("additions: 3N^2 a (196608)"), std::string::npos);
  EXPECT_NE(cx.out.find("multiplications: 4N^2 b"), std::string::npos);
}

TEST_F(CliTest, KeygenAndPerm) {
  const CliRun kg = run({"keygen", "--master-key", "0123456789abcdef0123456789abcdef", "--count", "3"});
  ASSERT_EQ(kg.code, 0) << kg.err;
  EXPECT_EQ(std::count(kg.out.begin(), kg.out.end(), '\n'), 3);
  EXPECT_EQ(kg.out.rfind("1 ", 0), 0u);

  const CliRun pm = run({"perm", "--map", "baker", "--key", "2,2", "--size", "4"});
  ASSERT_EQ(pm.code, 0) << pm.err;
  EXPECT_EQ(pm.out.rfind("src_index,dst_index\n0,0\n1,2\n2,8\n", 0), 0u);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"encrypt", "--bogus"}).code, 1);
  EXPECT_EQ(run({"perm", "--map", "nope", "--key", "1"}).code, 1);
  EXPECT_EQ(run({"perm", "--map", "baker", "--key", "3,3", "--size", "4"}).code, 2);
  EXPECT_EQ(run({"decrypt", "--map", "cat", "--master-key", "00", "--in", path("missing.pgm"), "--out",
                 path("x.pgm")})
                .code,
            2);
}
