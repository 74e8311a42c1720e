#include "logrank/cli/app.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

using namespace logrank;
namespace fs = std::filesystem;

namespace {

struct CliRun {
    int code = 0;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args) {
    args.insert(args.begin(), "logrank_cli");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("logrank_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& text) const {
        const fs::path p = dir_ / name;
        std::ofstream(p, std::ios::binary) << text;
        return p.string();
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_F(CliTest, GenMatrixIp) {
    const CliRun r = cli({"gen-matrix", "--family", "ip", "--n", "2"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(r.out, "4 4\n0000\n0101\n0011\n0110\n");
}

TEST_F(CliTest, GenMatrixRandomF2RankHitsTarget) {
    const CliRun r = cli({"gen-matrix", "--family", "random-f2-rank", "--k", "8", "--l", "8", "--rank", "3", "--seed", "7"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const BoolMatrix m = parse_matrix(r.out);
    EXPECT_EQ(m.rows(), 8U);
    EXPECT_EQ(rank_f2(m), 3U);
    EXPECT_EQ(cli({"gen-matrix", "--family", "random-f2-rank", "--k", "8", "--l", "8", "--rank", "3", "--seed", "7"}).out,
              r.out);
}

TEST_F(CliTest, GenMatrixRealRankAndDense) {
    const CliRun r = cli({"gen-matrix", "--family", "random-real-rank", "--k", "9", "--l", "7", "--rank", "4"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(rank_real(parse_matrix(r.out)), 4U);
    const CliRun d = cli({"gen-matrix", "--family", "random-dense", "--k", "5", "--l", "5", "--p", "1"});
    EXPECT_EQ(parse_matrix(d.out), BoolMatrix::constant(5, 5, true));
}

TEST_F(CliTest, GenSetsWeightSlice) {
    const CliRun r = cli({"gen-sets", "--family", "weight-slice", "--n", "8", "--w", "2"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const F2Set s = parse_set(r.out);
    EXPECT_EQ(s.size(), 28U);
    for (Word x : s) EXPECT_EQ(std::popcount(x), 2);
}

TEST_F(CliTest, FromSetsAnalyzeFactorMonoProtocolVerify) {
    const std::string a = path("a.txt"), m = path("m.txt"), t = path("t.json");
    ASSERT_EQ(cli({"gen-sets", "--family", "subspace-plus-noise", "--n", "6", "--d", "2", "--outliers", "3", "--out", a}).code,
              kExitOk);
    ASSERT_EQ(cli({"gen-matrix", "--family", "from-sets", "--a", a, "--b", a, "--out", m}).code, kExitOk);

    const CliRun an = cli({"analyze", m});
    ASSERT_EQ(an.code, kExitOk) << an.err;
    const auto j = ordered_json::parse(an.out);
    EXPECT_EQ(j["schema_version"], kReportSchemaVersion);
    EXPECT_EQ(j["command"], "analyze");
    EXPECT_EQ(j["matrix"]["rows"], 7);

    const CliRun sets = cli({"analyze", "--a", a, "--b", a});
    ASSERT_EQ(sets.code, kExitOk) << sets.err;
    EXPECT_TRUE(ordered_json::parse(sets.out).contains("duality"));

    const CliRun fa = cli({"factor", m});
    ASSERT_EQ(fa.code, kExitOk) << fa.err;
    const auto f = ordered_json::parse(fa.out);
    EXPECT_EQ(f["rank_f2"], ordered_json::parse(an.out)["matrix"]["rank_f2"]);

    for (const char* s : {"exact", "via-dual", "greedy"}) {
        const CliRun mo = cli({"mono", m, "--strategy", s});
        ASSERT_EQ(mo.code, kExitOk) << s << ": " << mo.err;
        ASSERT_EQ(cli({"protocol", m, "--strategy", s, "--out", t}).code, kExitOk);
        const CliRun v = cli({"verify", m, "--tree", t});
        ASSERT_EQ(v.code, kExitOk) << v.err;
        const auto vr = ordered_json::parse(v.out);
        EXPECT_EQ(vr["entries"], 49);
        EXPECT_EQ(vr["block_inequality"], true);
    }
}

TEST_F(CliTest, VerifyRejectsTreeForOtherMatrix) {
    const std::string m = write("m.txt", "2 2\n10\n01\n"), other = write("o.txt", "2 2\n01\n10\n"), t = path("t.json");
    ASSERT_EQ(cli({"protocol", m, "--out", t}).code, kExitOk);
    const CliRun r = cli({"verify", other, "--tree", t});
    EXPECT_EQ(r.code, kExitInvariant);
    EXPECT_NE(r.err.find("disagrees"), std::string::npos);
}

TEST_F(CliTest, DualStrategiesAndExitCodes) {
    const std::string a = write("a.txt", "0000\n0011\n1100\n1111\n"), b = write("b.txt", "0000\n0011\n1100\n1111\n");
    for (const char* s : {"pipeline", "exact", "greedy"}) {
        const CliRun r = cli({"dual", "--a", a, "--b", b, "--strategy", s});
        ASSERT_EQ(r.code, kExitOk) << s << ": " << r.err;
    }
    const std::string full = write("full.txt", "00\n01\n10\n11\n"), one = write("one.txt", "01\n");
    const CliRun zero = cli({"dual", "--a", full, "--b", one});
    EXPECT_EQ(zero.code, kExitNotFound);
    EXPECT_EQ(ordered_json::parse(zero.out)["trace"]["failure"]["kind"], "ZeroDuality");
    EXPECT_EQ(cli({"dual", "--a", a, "--b", b, "--strategy", "psychic"}).code, kExitUsage);
    EXPECT_EQ(cli({"dual", "--a", a, "--b", write("c.txt", "000\n")}).code, kExitUsage);
}

TEST_F(CliTest, UsageErrors) {
    EXPECT_EQ(cli({}).code, kExitUsage);
    EXPECT_EQ(cli({"no-such-command"}).code, kExitUsage);
    EXPECT_EQ(cli({"gen-matrix"}).code, kExitUsage);
    EXPECT_EQ(cli({"gen-matrix", "--family", "zebra"}).code, kExitUsage);
    EXPECT_EQ(cli({"analyze", path("missing.txt")}).code, kExitUsage);
    EXPECT_EQ(cli({"analyze", write("bad.txt", "2 2\n10\n")}).code, kExitUsage);
    EXPECT_EQ(cli({"experiment", "nonsense"}).code, kExitUsage);
    EXPECT_EQ(cli({"gen-matrix", "--help"}).code, kExitOk);
}

TEST_F(CliTest, ExperimentsAreByteDeterministic) {
    const std::vector<std::vector<std::string>> runs{
        {"experiment", "dual-pipeline", "--instances", "3", "--n", "6"},
        {"experiment", "log-rank-sweep", "--instances", "2", "--rank", "3", "--k", "8", "--l", "8"},
        {"experiment", "counterexample", "--dims", "6"},
        {"experiment", "doubling", "--instances", "3", "--n", "6"},
        {"experiment", "nw-bias", "--instances", "5", "--k", "6", "--l", "6", "--rank", "4"}};
    for (const auto& args : runs) {
        const CliRun first = cli(args), second = cli(args);
        ASSERT_NE(first.code, kExitUsage) << args[1] << ": " << first.err;
        EXPECT_EQ(first.out, second.out) << args[1];
        const auto j = ordered_json::parse(first.out);
        EXPECT_EQ(j["command"], "experiment");
        EXPECT_TRUE(j.contains("table")) << args[1];
        EXPECT_TRUE(j.contains("assertions")) << args[1];
    }
}

TEST_F(CliTest, CsvMatchesJsonTable) {
    const std::vector<std::string> base{"experiment", "doubling", "--instances", "4", "--n", "6"};
    const auto j = ordered_json::parse(cli(base).out);
    auto csv_args = base;
    csv_args.insert(csv_args.end(), {"--format", "csv"});
    const auto rows = parse_csv(cli(csv_args).out);
    const ordered_json& table = j["table"];
    ASSERT_EQ(rows.size(), table.size() + 1);
    const auto& header = rows[0];
    for (std::size_t i = 0; i < table.size(); ++i)
        for (std::size_t c = 0; c < header.size(); ++c) {
            const ordered_json& cell = table[i][header[c]];
            EXPECT_EQ(rows[i + 1][c], cell.is_string() ? cell.get<std::string>() : cell.dump());
        }
}

TEST_F(CliTest, CsvQuotingRoundTrip) {
    const ordered_json table = ordered_json::array(
        {{{"name", "a,b"}, {"note", "say \"hi\""}, {"x", 1}}, {{"name", "plain"}, {"note", "line\nbreak"}, {"x", 2}}});
    const auto rows = parse_csv(format_csv(table));
    ASSERT_EQ(rows.size(), 3U);
    EXPECT_EQ(rows[1][0], "a,b");
    EXPECT_EQ(rows[1][1], "say \"hi\"");
    EXPECT_EQ(rows[2][1], "line\nbreak");
}

TEST_F(CliTest, OutFlagWritesFileIdenticalToStdout) {
    const std::vector<std::string> args{"experiment", "counterexample", "--dims", "6"};
    const std::string file = path("r.json");
    auto with_out = args;
    with_out.insert(with_out.end(), {"--out", file});
    ASSERT_EQ(cli(with_out).code, kExitOk);
    EXPECT_EQ(slurp(file), cli(args).out);
}

#ifdef LOGRANK_CLI_PATH
TEST_F(CliTest, ExecutableMatchesInProcessRun) {
    const std::string out = path("bin.txt");
    const std::string cmd = std::string(LOGRANK_CLI_PATH) + " gen-sets --family weight-slice --n 6 --w 3 > " + out;
    ASSERT_EQ(std::system(cmd.c_str()), 0);
    EXPECT_EQ(slurp(out), cli({"gen-sets", "--family", "weight-slice", "--n", "6", "--w", "3"}).out);
    const std::string bad = std::string(LOGRANK_CLI_PATH) + " gen-matrix --family zebra 2>/dev/null";
    const int status = std::system(bad.c_str());
    EXPECT_EQ(WEXITSTATUS(status), kExitUsage);
}
#endif
