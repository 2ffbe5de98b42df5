#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <unistd.h>

#include "ansig/classify.hpp"
#include "ansig/serialize.hpp"
#include "cli.hpp"

using namespace ansig;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name)
{
    const fs::path p = fs::temp_directory_path() / ("an-sig-test-" + std::to_string(::getpid()) + "-" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

void spit(const fs::path& p, const std::string& text)
{
    std::ofstream(p, std::ios::binary) << text;
}

/// Every regular file under dir, by relative name.
std::map<std::string, std::string> tree(const fs::path& dir)
{
    std::map<std::string, std::string> m;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file())
            m[e.path().filename().string()] = slurp(e.path());
    return m;
}

class SeedEnv {
public:
    explicit SeedEnv(const char* v) { ::setenv("AN_SIG_SEED", v, 1); }
    ~SeedEnv() { ::unsetenv("AN_SIG_SEED"); }
};

}  // namespace

TEST(Cli, ClassifyExitCodes)
{
    EXPECT_EQ(run({"classify", "--n", "7", "--signature", "1;3"}).code, cli::ok);
    EXPECT_EQ(run({"classify", "--n", "5", "--signature", "1;2"}).code, cli::non_actual);
    EXPECT_EQ(run({"classify", "--n", "6", "--signature", "1;3", "--no-table"}).code, cli::non_actual);
    EXPECT_EQ(run({"classify", "--n", "5", "--signature", "1;-"}).code, cli::not_potential);
    EXPECT_EQ(run({"classify", "--n", "5", "--signature", "0;2,5,5"}).code, cli::unresolved);
    EXPECT_EQ(run({"classify", "--n", "3", "--signature", "1;2"}).code, cli::usage);
    EXPECT_EQ(run({"classify", "--signature", "1;2"}).code, cli::usage);
    EXPECT_EQ(run({}).code, cli::usage);
    EXPECT_EQ(run({"frobnicate"}).code, cli::usage);
}

TEST(Cli, SignatureErrorsPointAtTheOffendingCharacter)
{
    const auto r = run({"classify", "--n", "7", "--signature", "1;5,x"});
    EXPECT_EQ(r.code, cli::usage);
    EXPECT_NE(r.err.find("  1;5,x\n      ^"), std::string::npos) << r.err;
}

TEST(Cli, HelpListsExitCodes)
{
    const auto r = run({"--help"});
    EXPECT_EQ(r.code, cli::ok);
    EXPECT_NE(r.out.find("Exit codes"), std::string::npos);
    EXPECT_NE(r.out.find("AN_SIG_SEED"), std::string::npos);
}

TEST(Cli, TextAndJsonOutput)
{
    const auto text = run({"classify", "--n", "7", "--signature", "1;3"});
    EXPECT_NE(text.out.find("actual"), std::string::npos);
    EXPECT_NE(text.out.find("genus 841"), std::string::npos);
    EXPECT_NE(text.out.find("c1 = "), std::string::npos);
    const auto json = run({"classify", "--n", "7", "--signature", "1;3", "--format", "json"});
    EXPECT_EQ(json.out, to_json(7, parse_signature("1;3"), classify(7, parse_signature("1;3")), false));
}

TEST(Cli, VerifyRoundTripAndTampering)
{
    const auto dir = scratch("verify");
    const auto cert = *classify(7, parse_signature("1;3")).certificate;
    const auto json = to_json(cert);
    spit(dir / "good.json", json);
    auto r = run({"verify", (dir / "good.json").string()});
    EXPECT_EQ(r.code, cli::ok) << r.err;
    EXPECT_NE(r.out.find("PASS"), std::string::npos);

    // A classify result file verifies as well.
    spit(dir / "result.json", run({"classify", "--n", "7", "--signature", "1;3", "--format", "json"}).out);
    EXPECT_EQ(run({"verify", (dir / "result.json").string()}).code, cli::ok);

    auto tampered = cert;
    tampered.vector.c[0] = Permutation::parse(7, "(1 2 3)");
    spit(dir / "tampered.json", to_json(tampered));
    r = run({"verify", (dir / "tampered.json").string(), "--format", "json"});
    EXPECT_EQ(r.code, cli::verify_failed);
    EXPECT_NE(r.out.find("\"pass\": false"), std::string::npos);
    EXPECT_FALSE(r.err.empty());

    auto wrong_sigma = json;
    wrong_sigma.replace(wrong_sigma.find("\"841\""), 5, "\"842\"");
    spit(dir / "sigma.json", wrong_sigma);
    r = run({"verify", (dir / "sigma.json").string()});
    EXPECT_EQ(r.code, cli::verify_failed);
    EXPECT_NE(r.err.find("sigma: file says 842, recomputed 841"), std::string::npos) << r.err;

    spit(dir / "broken.json", "{\"degree\": 7,");
    EXPECT_EQ(run({"verify", (dir / "broken.json").string()}).code, cli::bad_input);
    EXPECT_EQ(run({"verify", (dir / "missing.json").string()}).code, cli::bad_input);
    spit(dir / "negative.json", run({"classify", "--n", "5", "--signature", "1;2", "--format", "json"}).out);
    EXPECT_EQ(run({"verify", (dir / "negative.json").string()}).code, cli::bad_input);
    fs::remove_all(dir);
}

TEST(Cli, TableIsReproducibleAndResumable)
{
    const auto a = scratch("table-a");
    const auto b = scratch("table-b");
    auto r = run({"table", "--n-range", "5..7", "--out", a.string()});
    ASSERT_EQ(r.code, cli::ok) << r.err;
    EXPECT_NE(r.out.find("A_5 [1; 2]"), std::string::npos);
    EXPECT_NE(r.out.find("A_6 [1; 3]"), std::string::npos);
    ASSERT_EQ(run({"table", "--n-range", "5..7", "--out", b.string(), "--workers", "3"}).code, cli::ok);
    const auto ta = tree(a);
    EXPECT_EQ(ta, tree(b));
    EXPECT_TRUE(ta.count("index.tsv"));
    EXPECT_TRUE(ta.count("n5_1_2.json"));

    // A second pass finds every cell in the index.
    r = run({"table", "--n-range", "5..7", "--out", a.string()});
    EXPECT_NE(r.out.find(", 0 cells computed"), std::string::npos) << r.out;
    EXPECT_EQ(tree(a), ta);

    // A deleted cell is recomputed byte for byte.
    fs::remove(a / "n7_1_3.json");
    r = run({"table", "--n-range", "5..7", "--out", a.string()});
    EXPECT_NE(r.out.find(", 1 cells computed"), std::string::npos) << r.out;
    EXPECT_EQ(tree(a), ta);

    EXPECT_EQ(run({"table", "--n-range", "4..7", "--out", a.string()}).code, cli::usage);
    EXPECT_EQ(run({"table", "--n-range", "5..7", "--max-periods", "3", "--out", a.string()}).code, cli::usage);
    fs::remove_all(a);
    fs::remove_all(b);
}

TEST(Cli, OracleSubcommand)
{
    auto r = run({"oracle", "--n", "5", "--signature", "1;2", "--exhaustive", "--no-timing"});
    EXPECT_EQ(r.code, cli::non_actual);
    EXPECT_NE(r.out.find("\"hits\": 0"), std::string::npos);
    EXPECT_EQ(r.out.find("elapsed_ms"), std::string::npos);
    EXPECT_EQ(r.out, run({"oracle", "--n", "5", "--signature", "1;2", "--exhaustive", "--no-timing", "--workers", "4"}).out);

    r = run({"oracle", "--n", "5", "--signature", "1;5", "--exhaustive"});
    EXPECT_EQ(r.code, cli::ok);
    EXPECT_NE(r.out.find("\"vector\""), std::string::npos);

    EXPECT_EQ(run({"oracle", "--n", "13", "--signature", "1;3", "--exhaustive"}).code, cli::infeasible);
    EXPECT_EQ(run({"oracle", "--n", "17", "--signature", "1;3"}).code, cli::infeasible);
    EXPECT_EQ(run({"oracle", "--n", "8", "--signature", "1;7", "--shard", "2/2"}).code, cli::usage);
    EXPECT_EQ(run({"oracle", "--n", "8", "--signature", "1;7"}).code, cli::ok);
    EXPECT_EQ(run({"oracle", "--n", "8", "--signature", "1;7", "--shard", "1/3"}).code, cli::ok);
    EXPECT_EQ(run({"oracle", "--n", "5", "--signature", "1;4"}).code, cli::not_potential);
}

TEST(Cli, SeedFromEnvironment)
{
    const std::vector<std::string> args{"classify", "--n", "9", "--signature", "1;4", "--format", "json"};
    const auto explicit_seed = [&] {
        auto a = args;
        a.insert(a.end(), {"--seed", "5"});
        return run(a).out;
    }();
    {
        SeedEnv env("5");
        EXPECT_EQ(run(args).out, explicit_seed);
    }
    {
        SeedEnv env("five");
        const auto r = run(args);
        EXPECT_EQ(r.code, cli::usage);
        EXPECT_NE(r.err.find("AN_SIG_SEED"), std::string::npos);
    }
    EXPECT_NE(run(args).out, explicit_seed);
}
