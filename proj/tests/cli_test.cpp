#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "scx/io.hpp"
#include "scx/minimize.hpp"

namespace scx::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args, const ExpectedSizes& expected = {}) {
  std::ostringstream out, err;
  const int code = run(args, out, err, expected);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("scx_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write_witness(const std::string& family, unsigned n, const std::string& name) {
    const auto p = path(name);
    EXPECT_EQ(invoke({"witness", family, "--n", std::to_string(n), "--out", p}).code, kOk);
    return p;
  }

  fs::path dir_;
};

std::size_t count_lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

TEST(Range, Parsing) {
  EXPECT_EQ(parse_range("3..6").values(), (std::vector<unsigned>{3, 4, 5, 6}));
  EXPECT_EQ(parse_range("4").values(), (std::vector<unsigned>{4}));
  EXPECT_THROW(parse_range("6..3"), InvalidArgument);
  EXPECT_THROW(parse_range("a..3"), InvalidArgument);
  EXPECT_THROW(parse_range("3.."), InvalidArgument);
  EXPECT_THROW(parse_range(""), InvalidArgument);
}

TEST_F(CliTest, VerifySquare) {
  auto r = invoke({"verify-square", "--n", "3..6"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(count_lines(r.out), 5u);  // header + 4 rows
  EXPECT_EQ(r.out.find("NO"), std::string::npos);

  r = invoke({"verify-square", "--n", "2..4"});
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_NE(r.err.find("n must be ≥ 3"), std::string::npos);

  r = invoke({"verify-square", "--n", "3", "--format", "csv"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "family,n,k,raw,minimal,expected,pass,ms\nbinary_square,3,2,20,20,20,true,0\n");
}

TEST_F(CliTest, VerifyUnary) {
  auto r = invoke({"verify-unary", "--n", "2..10", "--k", "2..4", "--format", "csv"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(count_lines(r.out), 28u);  // header + 27 rows

  EXPECT_EQ(invoke({"verify-unary", "--n", "2..4", "--k", "1..3"}).code, kUsageError);

  r = invoke({"verify-unary", "--n", "2..4", "--k", "2..3", "--format", "json", "--parallel"});
  EXPECT_EQ(r.code, kOk);
  const auto reports = reports_from_json(r.out);
  ASSERT_EQ(reports.size(), 6u);
  EXPECT_EQ(reports.back().n, 4u);
  EXPECT_EQ(reports.back().k, 3u);
  EXPECT_EQ(reports.back().minimal_states, 10u);
}

TEST_F(CliTest, CorruptedFormulaMakesVerifyFail) {
  ExpectedSizes wrong;
  wrong.square = [](unsigned n) { return expected_square_states(n) - 1; };
  wrong.unary_power = [](unsigned n, unsigned k) { return expected_unary_power_states(n, k) + 1; };
  EXPECT_EQ(invoke({"verify-square", "--n", "3..4"}, wrong).code, kCheckFailed);
  EXPECT_EQ(invoke({"verify-unary", "--n", "2..3", "--k", "2"}, wrong).code, kCheckFailed);
}

TEST_F(CliTest, StateLimitBreachIsAFailedCheck) {
  EXPECT_EQ(invoke({"verify-square", "--n", "8", "--state-limit", "1000"}).code, kCheckFailed);
}

TEST_F(CliTest, Witness) {
  const auto bin = write_witness("binary", 3, "b3.json");
  EXPECT_EQ(dfa_from_json(read_text_file(bin)), binary_witness(3));
  const auto un = write_witness("unary", 4, "u4.json");
  EXPECT_EQ(dfa_from_json(read_text_file(un)), unary_cycle_witness(4));
  EXPECT_EQ(invoke({"witness", "unary", "--n", "1"}).code, kUsageError);
  EXPECT_EQ(invoke({"witness", "ternary", "--n", "3"}).code, kUsageError);
}

TEST_F(CliTest, Power) {
  const auto in = write_witness("unary", 3, "u3.json");
  const auto out = path("p.json");
  auto r = invoke({"power", "--in", in, "--k", "2", "--out", out});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "states: 5\n");
  EXPECT_EQ(dfa_from_json(read_text_file(out)).num_states(), 5u);

  r = invoke({"power", in, "--k", "1"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(dfa_from_json(r.out), minimize(unary_cycle_witness(3)));

  write_text_file(path("bad.json"), "{\"alphabet_size\": 1,");
  r = invoke({"power", path("bad.json"), "--k", "2"});
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_NE(r.err.find("malformed JSON"), std::string::npos);

  EXPECT_EQ(invoke({"power", path("missing.json"), "--k", "2"}).code, kUsageError);
  EXPECT_EQ(invoke({"power", in, "--k", "40", "--state-limit", "16"}).code, kCheckFailed);
}

TEST_F(CliTest, SquareWritesProvenance) {
  const auto in = write_witness("binary", 3, "b3.json");
  const auto out = path("sq.json");
  auto r = invoke({"square", in, "--out", out});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "states: 20\n");
  const std::string text = read_text_file(out);
  EXPECT_EQ(pair_states_from_json(text).size(), 20u);

  r = invoke({"square", in, "--trim"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(dfa_from_json(r.out).num_states(), 20u);
}

TEST_F(CliTest, MinAndEquiv) {
  const auto b3 = write_witness("binary", 3, "b3.json");
  const auto b4 = write_witness("binary", 4, "b4.json");
  const auto min = path("min.json");
  auto r = invoke({"min", b3, "--out", min});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "states: 3 -> 3\n");

  EXPECT_EQ(invoke({"equiv", b3, min}).code, kOk);
  r = invoke({"equiv", b3, b4});
  EXPECT_EQ(r.code, kCheckFailed);
  EXPECT_EQ(r.out, "different\n");

  const auto u3 = write_witness("unary", 3, "u3.json");
  EXPECT_EQ(invoke({"equiv", b3, u3}).code, kUsageError);
  EXPECT_EQ(invoke({"equiv", b3}).code, kUsageError);
  EXPECT_EQ(invoke({"min", path("nope.json")}).code, kUsageError);
}

TEST_F(CliTest, Enum) {
  const auto u2 = write_witness("unary", 2, "u2.json");
  auto r = invoke({"enum", u2, "--max-len", "5"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "0\n000\n00000\n");

  const auto b3 = write_witness("binary", 3, "b3.json");
  r = invoke({"enum", b3, "--max-len", "2", "--format", "json"});
  EXPECT_EQ(r.out, "[\"11\"]\n");
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kUsageError);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsageError);
  EXPECT_EQ(invoke({"verify-square"}).code, kUsageError);
  EXPECT_EQ(invoke({"verify-square", "--n", "3", "--format", "xml"}).code, kUsageError);
  EXPECT_EQ(invoke({"--help"}).code, kOk);
}

TEST_F(CliTest, OutputIsByteStable) {
  const std::vector<std::string> args{"verify-unary", "--n", "2..6", "--k", "2..3", "--format",
                                      "csv"};
  const auto first = invoke(args);
  auto parallel_args = args;
  parallel_args.push_back("--parallel");
  EXPECT_EQ(first.out, invoke(args).out);
  EXPECT_EQ(first.out, invoke(parallel_args).out);
}

}  // namespace
}  // namespace scx::cli
