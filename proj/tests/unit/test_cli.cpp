#include <fstream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "latbound/cli.hpp"

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = latbound::cli::dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    f << text;
}

}  // namespace

TEST_CASE("cli requires a subcommand and reports usage errors on stderr") {
    RunResult r = run({});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"bounds", "hermite"}).code == 2);       // missing --n
    CHECK(run({"bounds", "neither", "--n", "3"}).code == 2);
    CHECK(run({"bounds", "hermite", "--n", "0"}).code == 2);
}

TEST_CASE("cli help lands on stdout with exit zero") {
    RunResult r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("bounds") != std::string::npos);
    CHECK(r.err.empty());
}

TEST_CASE("bounds hermite text output carries every row") {
    RunResult r = run({"bounds", "hermite", "--n", "8"});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(r.out.find("n=8\n") == 0);
    CHECK(r.out.find("exact=2\n") != std::string::npos);
    CHECK(r.out.find("blichfeldt=2.10705287706\n") != std::string::npos);
    CHECK(r.out.find("linear_wc18=2.2\n") != std::string::npos);
    CHECK(r.out.find("best=2\n") != std::string::npos);
}

TEST_CASE("bounds hermite marks sub-threshold linear bounds invalid") {
    RunResult r = run({"bounds", "hermite", "--n", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("linear_lls=invalid\n") != std::string::npos);
    CHECK(r.out.find("linear_neu=invalid\n") != std::string::npos);
}

TEST_CASE("bounds hermite json uses null for the absent rows") {
    RunResult r = run({"bounds", "hermite", "--n", "9", "--json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["n"] == 9);
    CHECK(j["exact"].is_null());
    CHECK(j["best"].get<double>() ==
          doctest::Approx(15.0 / 7.0).epsilon(1e-12));
}

TEST_CASE("bounds kz text output marks the unproven range") {
    RunResult r = run({"bounds", "kz", "--n", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("schnorr=10.0298058964\n") != std::string::npos);
    CHECK(r.out.find("hanrot_stehle=10.3923048454\n") != std::string::npos);
    CHECK(r.out.find("wc18=invalid\n") != std::string::npos);
    CHECK(r.out.find("new=invalid\n") != std::string::npos);
    CHECK(r.out.find("best=10.0298058964\n") != std::string::npos);
}

TEST_CASE("verify proof passes every check and exits zero") {
    RunResult r = run({"verify", "proof"});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(r.out.find("phi_grid_min PASS") != std::string::npos);
    CHECK(r.out.find("final_constant PASS") != std::string::npos);
    CHECK(r.out.find("all_passed true\n") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("verify proof --check narrows to one line") {
    RunResult r = run({"verify", "proof", "--check", "final_constant"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("final_constant PASS", 0) == 0);
    CHECK(r.out.find("phi_grid_min") == std::string::npos);

    RunResult missing = run({"verify", "proof", "--check", "nonexistent"});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("unknown check") != std::string::npos);
    CHECK(missing.err.find("phi_grid_min") != std::string::npos);
}

TEST_CASE("verify proof --json is the bare array") {
    RunResult r = run({"verify", "proof", "--json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.is_array());
    CHECK(j.size() == 18);
    CHECK(j[0]["name"] == "phi_grid_min");
    for (const auto& item : j) {
        CHECK(item["passed"].get<bool>());
    }
}

TEST_CASE("figure 1 emits CSV to stdout or a file") {
    RunResult r = run({"figure", "--id", "1", "--nmax", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("n,ratio1,ratio2\n1,", 0) == 0);
    int lines = 0;
    for (char ch : r.out) {
        lines += ch == '\n';
    }
    CHECK(lines == 6);

    RunResult to_file = run({"figure", "--id", "2", "--nmax", "120", "--out",
                             "cli_fig2.csv"});
    CHECK(to_file.code == 0);
    CHECK(to_file.out.empty());
    std::ifstream f("cli_fig2.csv");
    std::string header;
    REQUIRE(std::getline(f, header));
    CHECK(header == "n,ratio");
    int rows = 0;
    std::string line;
    while (std::getline(f, line)) {
        ++rows;
    }
    CHECK(rows == 10);
}

TEST_CASE("figure rejects bad ids and windows") {
    CHECK(run({"figure", "--id", "3"}).code == 2);
    CHECK(run({"figure", "--id", "2", "--nmax", "110"}).code == 2);
}

TEST_CASE("reduce writes a basis file the parser accepts back") {
    write_file("cli_basis_in.txt", "2 2\n1 10\n0 1\n");
    RunResult r = run({"reduce", "--in", "cli_basis_in.txt", "--method",
                       "lll", "--out", "cli_basis_out.txt"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f("cli_basis_out.txt");
    REQUIRE(f.good());
    std::string header;
    REQUIRE(std::getline(f, header));
    CHECK(header == "2 2");

    RunResult kz = run({"reduce", "--in", "cli_basis_in.txt", "--method",
                        "kz", "--out", "cli_basis_out.txt"});
    CHECK(kz.code == 0);
}

TEST_CASE("reduce and svp report file problems on stderr with exit 2") {
    RunResult missing = run({"reduce", "--in", "no_such_file.txt",
                             "--method", "lll", "--out", "x.txt"});
    CHECK(missing.code == 2);
    CHECK_FALSE(missing.err.empty());
    CHECK(run({"svp", "--in", "no_such_file.txt"}).code == 2);
    write_file("cli_bad_basis.txt", "2 3\n1 0 0\n0 1 0\n");
    CHECK(run({"svp", "--in", "cli_bad_basis.txt"}).code == 2);
}

TEST_CASE("svp prints the norm pair and the coefficient vector") {
    write_file("cli_svp_basis.txt", "gram 2\n2 -1\n-1 2\n");
    RunResult r = run({"svp", "--in", "cli_svp_basis.txt"});
    CHECK(r.code == 0);
    CHECK(r.out.find("norm=1.41421356237309") != std::string::npos);
    CHECK(r.out.find("norm_squared=") != std::string::npos);
    CHECK(r.out.find("coefficients=") != std::string::npos);
}

TEST_CASE("svp honors the explicit cap") {
    std::ostringstream big;
    big << "5 5\n";
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            big << (i == j ? 1 : 0) << (j == 4 ? "" : " ");
        }
        big << "\n";
    }
    write_file("cli_cap_basis.txt", big.str());
    CHECK(run({"svp", "--in", "cli_cap_basis.txt", "--cap", "4"}).code == 2);
    CHECK(run({"svp", "--in", "cli_cap_basis.txt", "--cap", "5"}).code == 0);
}

TEST_CASE("validate emits the aggregate json and optional csv") {
    RunResult r = run({"validate", "hermite", "--n", "2", "--trials", "5",
                       "--seed", "1", "--csv", "cli_trials.csv"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["config"]["n"] == 2);
    CHECK(j["config"]["trials"] == 5);
    CHECK(j["mode"] == "hermite");
    CHECK(j["violations"] == 0);
    CHECK_FALSE(j.contains("per_trial"));
    std::ifstream f("cli_trials.csv");
    std::string line;
    int lines = 0;
    while (std::getline(f, line)) {
        ++lines;
    }
    CHECK(lines == 6);

    RunResult kz = run({"validate", "kz", "--n", "3", "--trials", "4",
                        "--seed", "9"});
    CHECK(kz.code == 0);
    auto jk = nlohmann::json::parse(kz.out);
    CHECK(jk["mode"] == "kz");
    CHECK(jk["violations"] == 0);
}

TEST_CASE("validate reruns are byte-identical") {
    std::vector<std::string> args = {"validate", "hermite", "--n", "3",
                                     "--trials", "7", "--seed", "5"};
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("validate rejects unusable dimensions through exit 2") {
    CHECK(run({"validate", "hermite", "--n", "30", "--trials", "2",
               "--seed", "1"}).code == 2);
}
