#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pqblocks/cli.hpp"

using namespace pqblocks;
using nlohmann::json;

namespace {

struct Run {
    int code = -1;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "pqblocks");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    Run r;
    r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::vector<json> lines(const std::string& text) {
    std::vector<json> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        if (!line.empty()) out.push_back(json::parse(line));
    return out;
}

}  // namespace

TEST_CASE("witness command") {
    auto a = run({"witness", "sym", "-n", "9", "-p", "3", "-q", "2", "--json"});
    REQUIRE(a.code == kExitOk);
    auto j = json::parse(a.out);
    CHECK(j["partition"] == "1^9");
    CHECK(j["case"] == "Sign");
    CHECK(j["degree"] == "1");

    auto b = run({"witness", "typebc", "-n", "3", "--field", "3", "-p", "2", "-q", "5", "--json"});
    REQUIRE(b.code == kExitOk);
    j = json::parse(b.out);
    CHECK(j["family"] == "BC");
    CHECK(j["case"] == "I");
    CHECK(j["label"]["top"] == json::array({0, 2}));
    CHECK(j["label"]["bottom"] == json::array({2}));

    auto c = run({"witness", "typea", "-n", "6", "--field", "2", "--epsilon", "-1", "-p", "3", "-q", "7", "--json"});
    CHECK(c.code == kExitOk);
    if (c.code == kExitOk) CHECK(json::parse(c.out)["family"] == "2A");

    auto text = run({"witness", "sym", "-n", "10", "-p", "3", "-q", "7"});
    CHECK(text.code == kExitOk);
    CHECK(text.out.find("1^5,2,3") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({"witness", "sym", "-n", "2", "-p", "2", "-q", "3"}).code == kExitUsage);
    CHECK(run({"witness", "nope", "-n", "9", "-p", "3", "-q", "2"}).code == kExitUsage);
    CHECK(run({"witness", "sym", "-n", "9", "-p", "3"}).code == kExitUsage);
    CHECK(run({"witness", "typea", "-n", "4", "-p", "2", "-q", "5"}).code == kExitUsage);
    CHECK(run({"verify", "sym", "-n", "50", "-p", "3", "-q", "7"}).code == kExitUsage);
    CHECK(run({"classify", "--max-n", "3"}).code == kExitUsage);
    CHECK(run({"classify", "--max-n", "61"}).code == kExitUsage);
    CHECK(run({}).code == kExitUsage);
    auto bad = run({"witness", "sym", "-n", "10", "-p", "4", "-q", "3"});
    CHECK(bad.code == kExitUsage);
    CHECK(!bad.err.empty());
    CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("verify command") {
    auto a = run({"verify", "sym", "-n", "10", "-p", "3", "-q", "7", "--json"});
    REQUIRE(a.code == kExitOk);
    auto j = json::parse(a.out);
    CHECK(j["in_intersection"] == true);
    CHECK(j["intersection"]["size"].get<int>() > 1);

    auto b = run({"verify", "alt", "-n", "9", "-p", "3", "-q", "2", "--json"});
    REQUIRE(b.code == kExitOk);
    CHECK(json::parse(b.out)["intersection"]["size"] == 3);

    auto c = run({"verify", "typebc", "-n", "4", "--field", "2", "-p", "3", "-q", "5"});
    CHECK(c.code == kExitOk);
    CHECK(c.out.find("ok") != std::string::npos);
}

TEST_CASE("sweep command") {
    auto a = run({"sweep", "--family", "sym", "--n-min", "3", "--n-max", "12", "--oracle"});
    REQUIRE(a.code == kExitOk);
    auto rows = lines(a.out);
    REQUIRE(!rows.empty());
    auto summary = rows.back()["summary"];
    CHECK(summary["failures"] == 0);
    CHECK(summary["tuples"].get<std::size_t>() == rows.size() - 1);
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) CHECK(rows[i]["verified"] == true);

    // parallel runs emit the same records in the same order
    auto b = run({"sweep", "--family", "sym", "--n-min", "3", "--n-max", "12", "--oracle", "-j", "4"});
    auto rows_b = lines(b.out);
    REQUIRE(rows_b.size() == rows.size());
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) CHECK(rows[i] == rows_b[i]);

    auto empty = run({"sweep", "--family", "alt", "--n-min", "10", "--n-max", "9"});
    CHECK(empty.code == kExitOk);
    auto e = lines(empty.out);
    REQUIRE(e.size() == 1);
    CHECK(e[0]["summary"]["tuples"] == 0);

    auto dir = std::filesystem::temp_directory_path() / "pqblocks_cli_test";
    std::filesystem::create_directories(dir);
    auto out = (dir / "rows.jsonl").string(), csv = (dir / "rows.csv").string();
    auto f = run({"sweep", "--family", "typebc", "--n-min", "2", "--n-max", "4", "--fields", "2,3", "--out", out,
                  "--csv", csv});
    CHECK(f.code == kExitOk);
    std::ifstream in(csv);
    std::string header;
    std::getline(in, header);
    CHECK(header == "group,n,p,q,intersection_size,witness_found,witness_label");
    std::ifstream jl(out);
    std::stringstream buf;
    buf << jl.rdbuf();
    CHECK(lines(buf.str()).size() > 1);
    std::filesystem::remove_all(dir);

    CHECK(run({"sweep", "--family", "sym", "--n-min", "3", "--n-max", "5", "--out", "/nonexistent/x/y"}).code ==
          kExitUsage);
}

TEST_CASE("classify command") {
    auto a = run({"classify", "--max-n", "40", "--json"});
    REQUIRE(a.code == kExitOk);
    auto j = json::parse(a.out);
    std::vector<std::pair<int, int>> got;
    for (const auto& t : j["triples"]) {
        CHECK(t["q"] == 2);
        got.emplace_back(t["n"].get<int>(), t["p"].get<int>());
    }
    CHECK(got == std::vector<std::pair<int, int>>{{4, 3}, {5, 5}, {8, 7}, {9, 3}, {17, 17}, {32, 31}});
    CHECK(j["mismatches"].empty());
    auto b = run({"classify", "--max-n", "4"});
    CHECK(b.code == kExitOk);
    CHECK(b.out == "n=4 p=3 q=2\n");
}
