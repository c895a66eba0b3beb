#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

using lebx::cli::run;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome call(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> v;
    std::istringstream is(text);
    for (std::string l; std::getline(is, l);) v.push_back(l);
    return v;
}

// Splits one CSV row, honouring double quotes.
std::vector<std::string> fields(const std::string& row) {
    std::vector<std::string> v(1);
    bool quoted = false;
    for (char c : row) {
        if (c == '"')
            quoted = !quoted;
        else if (c == ',' && !quoted)
            v.emplace_back();
        else
            v.back() += c;
    }
    return v;
}

}  // namespace

TEST_CASE("eval at the n = 2 peak") {
    const auto r = call({"eval", "--n", "2", "--d", "1", "--point", "0.75,0.25", "--format", "csv"});
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 2);
    CHECK(ls[0] == "n,d,lambda,L_value,S1,S2,S3,S4,S5,S6");
    CHECK(std::stod(fields(ls[1])[3]) == doctest::Approx(1.25).epsilon(1e-15));
}

TEST_CASE("eval is symmetric and equals one at nodes") {
    const auto a = call({"eval", "--n", "5", "--point", "0.2,0.3,0.5", "--format", "csv"});
    const auto b = call({"eval", "--n", "5", "--point", "0.5,0.3,0.2", "--format", "csv"});
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    const double va = std::stod(fields(lines(a.out)[1])[3]);
    const double vb = std::stod(fields(lines(b.out)[1])[3]);
    CHECK(va == doctest::Approx(vb).epsilon(1e-12));
    const auto node = call({"eval", "--n", "4", "--point", "0.5,0.25,0.25", "--format", "csv"});
    REQUIRE(node.code == 0);
    CHECK(std::stod(fields(lines(node.out)[1])[3]) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("eval with d = 2 reports the partition sums") {
    const auto r = call({"eval", "--n", "7", "--point", "0.6,0.3,0.1", "--format", "json"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("partition_sums") != std::string::npos);
    const auto t = call({"eval", "--n", "7", "--point", "0.6,0.3,0.1"});
    REQUIRE(t.code == 0);
    CHECK(t.out.find("sum S_k") != std::string::npos);
}

TEST_CASE("eval exit codes") {
    CHECK(call({"eval", "--n", "3", "--point", "0.5,abc"}).code == 2);
    CHECK(call({"eval", "--n", "3", "--point", "0.5,0.6"}).code == 3);
    CHECK(call({"eval", "--n", "3", "--d", "2", "--point", "0.5,0.5"}).code == 2);
    CHECK(call({"eval", "--point", "0.5,0.5"}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({"eval", "--n", "3", "--point", "0.5,0.5", "--format", "xml"}).code == 2);
    CHECK(call({"--help"}).code == 0);
}

TEST_CASE("bounds table for d = 2, n = 4..12") {
    const auto r = call({"bounds", "--d", "2", "--n-range", "4:12"});
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 10);
    CHECK(ls[0] == "n,d,lambda_est,argmax,theorem2_bound,mu_cap,bos_bound,turetskii,ratio_theorem2,ratio_bos");
    for (std::size_t k = 1; k < ls.size(); ++k) {
        const auto f = fields(ls[k]);
        REQUIRE(f.size() == 10);
        CHECK(std::stoi(f[0]) == static_cast<int>(k) + 3);
        CHECK(std::stod(f[8]) <= 1.0);
        CHECK(std::stod(f[9]) <= 1.0);
    }
}

TEST_CASE("bounds for d = 1 stay under the Bos bound") {
    const auto r = call({"bounds", "--d", "1", "--n-range", "2:20"});
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 20);
    for (std::size_t k = 1; k < ls.size(); ++k) CHECK(std::stod(fields(ls[k])[9]) <= 1.0);
}

TEST_CASE("bounds single row and bound-only mode") {
    const auto r = call({"bounds", "--d", "2", "--n-range", "4:4"});
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 2);
    CHECK(std::stod(fields(ls[1])[4]) == doctest::Approx(3074.4683252636645).epsilon(1e-13));

    const auto skip = call({"bounds", "--d", "2", "--n-range", "4:6", "--no-lambda"});
    REQUIRE(skip.code == 0);
    const auto rows = lines(skip.out);
    REQUIRE(rows.size() == 4);
    for (std::size_t k = 1; k < rows.size(); ++k) {
        const auto f = fields(rows[k]);
        CHECK(f[2].empty());
        CHECK_FALSE(f[4].empty());
        CHECK_FALSE(f[6].empty());
    }
}

TEST_CASE("budget exhaustion exits with 4 and writes nothing") {
    const auto r = call({"max", "--n", "10", "--d", "2", "--budget", "100"});
    CHECK(r.code == 4);
    CHECK(r.out.empty());
    CHECK(call({"bounds", "--n-range", "5:6", "--budget", "10"}).code == 4);
    CHECK(call({"max", "--n-range", "5:3"}).code == 2);
    CHECK(call({"max", "--n", "5", "--mode", "corner"}).code == 2);
}

TEST_CASE("max output is deterministic") {
    const std::vector<std::string> args = {"max", "--n-range", "3:6", "--d", "2", "--format", "json"};
    const auto a = call(args);
    const auto b = call(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    const auto csv = call({"max", "--n", "2", "--d", "1", "--format", "csv"});
    REQUIRE(csv.code == 0);
    CHECK(lines(csv.out)[0] == "n,d,lambda_est,argmax,evaluations,converged_step");
    CHECK(std::stod(fields(lines(csv.out)[1])[2]) == doctest::Approx(1.25).epsilon(1e-9));
}

TEST_CASE("verify suites") {
    const auto ids = call({"verify", "--suite", "identities", "--trials", "1000", "--seed", "42", "--format", "csv"});
    CHECK(ids.code == 0);
    CHECK(lines(ids.out)[0] == "suite,group,cases,failures,metric,worst");
    for (std::size_t k = 1; k < lines(ids.out).size(); ++k) {
        const auto f = fields(lines(ids.out)[k]);
        CHECK(f[3] == "0");
        if (f[4] == "rel_err") CHECK(std::stod(f[5]) <= 1e-10);
    }
    CHECK(call({"verify", "--suite", "partition", "--n", "8", "--trials", "200"}).code == 0);
    CHECK(call({"verify", "--suite", "reduction", "--n-range", "6:14", "--trials", "100"}).code == 0);
    CHECK(call({"verify", "--suite", "bogus"}).code == 2);

    const auto bad = call({"verify", "--suite", "identities", "--trials", "20", "--tol", "0"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("failed:") != std::string::npos);
}

TEST_CASE("--out writes the file atomically") {
    const auto dir = std::filesystem::temp_directory_path() / "lebx_cli_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "bounds.csv";
    std::filesystem::remove(path);
    const auto r = call({"bounds", "--n-range", "4:5", "--no-lambda", "--out", path.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(lines(ss.str()).size() == 3);
    CHECK_FALSE(std::filesystem::exists(path.string() + ".tmp"));

    // A failing run leaves the previous file untouched.
    CHECK(call({"max", "--n", "10", "--budget", "5", "--out", path.string()}).code == 4);
    std::ifstream g(path);
    std::stringstream again;
    again << g.rdbuf();
    CHECK(again.str() == ss.str());
    std::filesystem::remove_all(dir);
}

TEST_CASE("LEBX_THREADS") {
    setenv("LEBX_THREADS", "2", 1);
    const auto two = call({"max", "--n", "7", "--format", "csv"});
    setenv("LEBX_THREADS", "0", 1);
    const auto any = call({"max", "--n", "7", "--format", "csv"});
    CHECK(two.code == 0);
    CHECK(two.out == any.out);
    setenv("LEBX_THREADS", "many", 1);
    CHECK(call({"max", "--n", "3"}).code == 2);
    unsetenv("LEBX_THREADS");
}
