#include "pathbij/cli.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace pathbij;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "pathbij");
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path.string();
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("map, unmap and trace") {
    auto r = run({"map", "--path", "DUUDDDUUUUUDFDD"});
    CHECK(r.code == exit_ok);
    CHECK(r.out == "FUDUFDUUFUDDD\n");

    r = run({"unmap", "--path", "FUDUFDUUFUDDD"});
    CHECK(r.code == exit_ok);
    CHECK(r.out == "DUUDDDUUUUUDFDD\n");

    r = run({"map", "--trace", "--path", "UUUDFDD"});
    CHECK(r.code == exit_ok);
    CHECK(r.out.find("flip-marked: DDUUDU v1=2 v2=6\n") != std::string::npos);
    CHECK(r.out.substr(r.out.size() - 8) == "UUFUDDD\n");

    r = run({"map", "--path", ""});
    CHECK(r.code == exit_ok);
    CHECK(r.out == "\n");
}

TEST_CASE("input and usage errors exit with 2") {
    CHECK(run({"map", "--path", "F"}).code == exit_usage);
    CHECK(run({"map", "--path", "UXD"}).code == exit_usage);
    CHECK(run({"unmap", "--path", "UUDUDD"}).code == exit_usage);
    CHECK(run({}).code == exit_usage);
    CHECK(run({"count", "--class", "C", "--size", "1"}).code == exit_usage);
    CHECK(run({"count", "--size", "1"}).code == exit_usage);
    CHECK(run({"perms", "--n", "10"}).code == exit_usage);
    CHECK(run({"oeis", "--bfile", "/nonexistent/b.txt", "--class", "A"}).code == exit_usage);
    CHECK(run({"--help"}).code == exit_ok);
}

TEST_CASE("count and enumerate") {
    CHECK(run({"count", "--class", "A", "--size", "0"}).out == "1\n");
    CHECK(run({"count", "--class", "B", "--size", "3"}).out == "21\n");
    CHECK(run({"count", "--class", "A", "--size", "1", "--flat-line", "0"}).out == "3\n");
    CHECK(run({"enumerate", "--class", "A", "--size", "1"}).out == "DU\nUD\n");
    CHECK(run({"enumerate", "--class", "B", "--size", "1"}).out == "F\nUD\n");
    CHECK(run({"enumerate", "--class", "A", "--size", "1", "--flat-line", "0"}).out == "DU\nF\nUD\n");
}

TEST_CASE("verify") {
    const auto r = run({"verify", "--max-size", "2"});
    CHECK(r.code == exit_ok);
    CHECK(r.out ==
          "n=0: |A|=1 |B|=1 bijection OK\n"
          "n=1: |A|=2 |B|=2 bijection OK\n"
          "n=2: |A|=6 |B|=6 bijection OK\n");
    const auto c = run({"verify", "--max-size", "3", "--census"});
    CHECK(c.code == exit_ok);
    CHECK(c.out.find("n=3: census belowA=2 aboveA=3 nopeakB=2 onepeakB=3\n") != std::string::npos);
}

TEST_CASE("perms") {
    CHECK(run({"perms", "--n", "4", "--patterns", "3241,3421,4321"}).out == "21\n");
    CHECK(run({"perms", "--n", "4", "--patterns", ""}).out == "24\n");
    CHECK(run({"perms", "--n", "5"}).out == "79\n");
}

TEST_CASE("oeis comparison") {
    const auto good = write_temp("pathbij_good.txt", "# test\n0 1\n1 2\n2 6\n3 21\n");
    auto r = run({"oeis", "--bfile", good, "--class", "A", "--max-size", "3"});
    CHECK(r.code == exit_ok);
    CHECK(r.out.find("MATCH 4/4\n") != std::string::npos);

    const auto shifted = write_temp("pathbij_shifted.txt", "1 1\n2 2\n3 6\n");
    r = run({"oeis", "--bfile", shifted, "--class", "B", "--max-size", "2", "--offset", "1"});
    CHECK(r.code == exit_ok);

    const auto bad = write_temp("pathbij_bad.txt", "0 1\n1 2\n2 7\n");
    r = run({"oeis", "--bfile", bad, "--class", "B", "--max-size", "2"});
    CHECK(r.code == exit_failed);
    CHECK(r.out.find("MISMATCH at n=2: expected 7, got 6\n") != std::string::npos);

    r = run({"oeis", "--bfile", good, "--class", "A", "--max-size", "9"});
    CHECK(r.code == exit_usage);

    const auto malformed = write_temp("pathbij_malformed.txt", "0 x\n");
    CHECK(run({"oeis", "--bfile", malformed, "--class", "A"}).code == exit_usage);
}

TEST_CASE("render") {
    const auto r = run({"render", "--path", "UFD"});
    CHECK(r.code == exit_ok);
    CHECK(r.out == " __\n/  \\\n");
}

}
