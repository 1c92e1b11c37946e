#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "bvf/cli.hpp"
#include "bvf/families.hpp"

using namespace bvf;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result cli(std::vector<std::string> args) {
    args.insert(args.begin(), "bvf");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

fs::path scratch(const std::string& name) { return fs::temp_directory_path() / ("bvf_cli_" + name); }

std::vector<std::vector<double>> parse_rows(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        std::vector<double> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

TEST_CASE("transform of the box has its area at t = 0") {
    const auto r = cli({"transform", "--family", "box", "--width", "2", "--cutoff", "50"});
    REQUIRE(r.code == exit_ok);
    CHECK(r.out.rfind("t,re,im\n", 0) == 0);
    bool found = false;
    for (const auto& row : parse_rows(r.out)) {
        if (row[0] == 0.0) {
            found = true;
            CHECK(std::abs(row[1] - 2.0) < 1e-2);
            CHECK(row[2] == 0.0);
        }
    }
    CHECK(found);
}

TEST_CASE("hilbert of the poisson kernel") {
    const auto r = cli({"hilbert", "--family", "poisson", "--scale", "1"});
    REQUIRE(r.code == exit_ok);
    const FamilySpec conj(Family::conjugate_poisson);
    double worst = 0.0;
    for (const auto& row : parse_rows(r.out)) {
        if (std::abs(row[0]) <= 40.0) worst = std::max(worst, std::abs(row[1] - conj(row[0])));
    }
    CHECK(worst < 1e-3);
}

TEST_CASE("csv input round trip") {
    const auto in = scratch("input.csv");
    {
        std::ofstream f(in);
        f << "x,value\n";
        for (int i = 0; i <= 400; ++i) {
            const double x = -20.0 + 0.1 * i;
            f << x << "," << std::exp(-0.5 * x * x) << "\n";
        }
    }
    const auto out = scratch("hilbert.csv");
    const auto r = cli({"hilbert", "--csv", in.string(), "--out", out.string()});
    REQUIRE(r.code == exit_ok);
    CHECK(slurp(out).rfind("x,value\n", 0) == 0);
    CHECK(parse_rows(slurp(out)).size() == 401);

    const auto bad = scratch("bad.csv");
    std::ofstream(bad) << "x,value\n0,1\n1,2\n5,3\n";
    CHECK(cli({"transform", "--csv", bad.string()}).code == exit_data);
    CHECK(cli({"transform", "--csv", scratch("missing.csv").string()}).code == exit_data);
    fs::remove(in);
    fs::remove(out);
    fs::remove(bad);
}

TEST_CASE("radial command columns") {
    const auto r = cli({"radial", "--family", "raised_cosine", "--center", "1.5", "--dim", "2", "--radii", "0.5,1,2"});
    REQUIRE(r.code == exit_ok);
    CHECK(r.out.rfind("r,leray,ibp,oracle\n", 0) == 0);
    const auto rows = parse_rows(r.out);
    REQUIRE(rows.size() == 3);
    for (const auto& row : rows) {
        CHECK(std::abs(row[1] - row[3]) <= 1e-3 * std::abs(row[3]));
        CHECK(std::abs(row[2] - row[3]) <= 1e-3 * std::abs(row[3]));
    }
}

TEST_CASE("usage errors") {
    CHECK(cli({}).code == exit_usage);
    CHECK(cli({"frobnicate"}).code == exit_usage);
    CHECK(cli({"transform", "--n", "many"}).code == exit_usage);
    CHECK(cli({"transform"}).code == exit_usage);
    CHECK(cli({"transform", "--family", "box", "--csv", "x.csv"}).code == exit_usage);
    CHECK(cli({"transform", "--family", "sinc"}).code == exit_usage);
    CHECK(cli({"transform", "--family", "box", "--sigma", "1"}).code == exit_usage);
    CHECK(cli({"transform", "--family", "box", "--param", "width"}).code == exit_usage);
    CHECK(cli({"hilbert", "--family", "box", "--method", "guess"}).code == exit_usage);
    CHECK(cli({"verify", "nonsense"}).code == exit_usage);
    CHECK(cli({"verify", "--profile", "huge"}).code == exit_usage);
    CHECK(cli({"radial", "--family", "box", "--a", "-1"}).code == exit_usage);
    CHECK(cli({"--help"}).code == exit_ok);
}

TEST_CASE("family parameters through --param") {
    const auto a = cli({"transform", "--family", "gaussian", "--param", "sigma=2", "--cutoff", "1", "--m", "3"});
    const auto b = cli({"transform", "--family", "gaussian", "--sigma", "2", "--cutoff", "1", "--m", "3"});
    REQUIRE(a.code == exit_ok);
    CHECK(a.out == b.out);
}

TEST_CASE("verify writes a report and its csv twin") {
    const auto path = scratch("report.txt");
    const auto r = cli({"verify", "periodic", "--out", path.string()});
    REQUIRE(r.code == exit_ok);
    const auto text = slurp(path);
    CHECK(text == r.out);
    const std::regex line(R"(^[a-z0-9_]+ (PASS|FAIL) -?[0-9.]+e[+-][0-9]+ [0-9.]+e[+-][0-9]+ [0-9]+$)");
    std::istringstream in(text);
    std::string l;
    std::vector<std::string> lines;
    while (std::getline(in, l)) lines.push_back(l);
    REQUIRE(lines.size() >= 2);
    for (std::size_t i = 0; i + 1 < lines.size(); ++i) CHECK(std::regex_match(lines[i], line));
    CHECK(lines.back() == "overall PASS");

    const auto twin = slurp(scratch("report.csv"));
    CHECK(twin.rfind("check_name,status,measured,bound,grid_n,notes\n", 0) == 0);
    CHECK(std::count(twin.begin(), twin.end(), '\n') == static_cast<long>(lines.size()));
    fs::remove(path);
    fs::remove(scratch("report.csv"));
}

TEST_CASE("verify output is deterministic and independent of threading") {
    ::setenv("BVF_THREADS", "1", 1);
    const auto serial = verify_report_text("periodic", "fast");
    ::setenv("BVF_THREADS", "3", 1);
    const auto parallel = verify_report_text("periodic", "fast");
    const auto again = verify_report_text("periodic", "fast");
    ::unsetenv("BVF_THREADS");
    CHECK(serial == parallel);
    CHECK(parallel == again);
}

TEST_CASE("report formatting marks failures") {
    std::vector<VerificationReport> reports = {VerificationReport::make("a", 1.0, 2.0, 10),
                                               VerificationReport::make("b", 3.0, 2.0, 10)};
    const auto text = format_report(reports);
    CHECK(text == "a PASS 1.000000e+00 2.000000e+00 10\nb FAIL 3.000000e+00 2.000000e+00 10\noverall FAIL\n");
    CHECK(VerificationReport::make_at_least("c", 3.0, 2.0, 1).passed);
    CHECK(profile_grid_size("fast") == 4096);
    CHECK(profile_grid_size("strict") == 32768);
}
