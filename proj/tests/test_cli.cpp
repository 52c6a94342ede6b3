#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "polyvdw/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = polyvdw::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("search-vdw JSON report")
{
    const Run r = run({"search-vdw", "--polys", "n,n^2", "--coloring", "mod:2:0,1", "--a-range", "10", "--r-range",
                       "10", "--json"});
    REQUIRE(r.code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["schema"] == 1);
    CHECK(doc["polys"] == json::array({"n", "n^2"}));
    CHECK(doc["witness"]["a"] == 0);
    CHECK(doc["witness"]["param"]["r"] == -1);
    CHECK(doc["witness"]["values"] == json::array({-1, 1}));
    CHECK(doc["witness"]["color"] == 1);
    CHECK(doc["stats"].contains("candidates_scanned"));
    CHECK(doc["stats"].contains("elapsed_ms"));

    const Run positive = run({"search-vdw", "--polys", "n,n^2", "--coloring", "mod:2:0,1", "--positive-r", "--json"});
    CHECK(json::parse(positive.out)["witness"]["values"] == json::array({2, 4}));
}

TEST_CASE("exit codes")
{
    const Run bad = run({"search-vdw", "--polys", "n+1", "--coloring", "mod:2:0,1"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("ConstantTermNonzero") != std::string::npos);

    const Run bad_json = run({"search-vdw", "--polys", "n+1", "--coloring", "mod:2:0,1", "--json"});
    CHECK(bad_json.code == 2);
    CHECK(json::parse(bad_json.out)["error"]["kind"] == "ConstantTermNonzero");

    const Run syntax = run({"encode", "3n^", "--json"});
    CHECK(syntax.code == 2);
    CHECK(json::parse(syntax.out)["error"]["position"] == 3);

    const Run absent = run({"search-ap", "--length", "3", "--coloring", "explicit:1:0,1,1,0,0,1,1,0", "--lo", "1",
                            "--hi", "8", "--json"});
    CHECK(absent.code == 1);
    CHECK(json::parse(absent.out)["witness"].is_null());

    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("IP and multivariable searches")
{
    const Run ip = run({"search-ip", "--polys", "n,n^2", "--f", "id", "--coloring", "mod:2:0,1", "--max-index", "3",
                        "--json"});
    REQUIRE(ip.code == 0);
    const json w = json::parse(ip.out)["witness"];
    CHECK(w["param"]["F"] == json::array({2}));
    CHECK(w["param"]["f"] == "id");
    CHECK(w["param"]["ip_sum"] == 2);

    const Run multi = run({"search-multi", "--polys", "x1*x2,x1^2", "--f", "id", "--coloring", "mod:2:0,1",
                           "--max-index", "3", "--json"});
    REQUIRE(multi.code == 0);
    const json m = json::parse(multi.out)["witness"]["param"];
    CHECK(m["Fs"] == json::array({json::array({2}), json::array({1})}));
    CHECK(m["ip_sums"] == json::array({2, 1}));

    const Run degenerate = run({"search-ip", "--polys", "n,n^2", "--f", "const:0", "--coloring", "mod:2:0,1",
                                "--max-index", "3", "--allow-degenerate", "--json"});
    CHECK(json::parse(degenerate.out)["witness"]["values"] == json::array({0, 0}));
}

TEST_CASE("seeded colorings are reproducible in reports")
{
    const std::vector<std::string> args{"search-vdw", "--polys", "n,2n", "--coloring", "random:3:42:-100:100",
                                        "--a-range", "20", "--r-range", "5", "--json"};
    json first = json::parse(run(args).out);
    json second = json::parse(run(args).out);
    first["stats"].erase("elapsed_ms");
    second["stats"].erase("elapsed_ms");
    CHECK(first.dump() == second.dump());
    CHECK(first["coloring"]["literal"] == "random:3:42:-100:100");
}

TEST_CASE("algebra subcommands")
{
    CHECK(run({"encode", "3n^2 + 2n"}).out == "T{2;1} + T{3;1,1}\n");
    CHECK(json::parse(run({"encode", "x1*x2", "--json"}).out)["m"] == 2);
    const json e = json::parse(run({"eval", "T{2;3} + T{1;4,5}", "--json"}).out);
    CHECK(e["pi"] == 26);
    CHECK(e["polynomial"] == "20n^2 + 6n");
    CHECK(run({"add", "T{1;1} + T{2;1,1}", "T{2;4} + T{2;6,6}"}).out == "T{1;1} + T{2;4} + T{2;7,7}\n");
    CHECK(run({"scale", "T{3;4} + T{5;1}", "--r", "2"}).out == "T{3;8} + T{5;2}\n");
    CHECK(run({"scale", "M{1;[1];[1,1]}", "--diag", "3"}).out == "M{1; [3]; [3,3]}\n");
    CHECK(run({"shift", "T{9;1}", "--eta", "T{1;1,1}", "--f", "id", "--F", "{1,2}"}).out.rfind("T{9;1} + T{1;3,3}\n", 0)
          == 0);
    CHECK(run({"shift", "M{9;[1];[]}", "--eta", "M{1;[1];[1]}", "--f", "id", "--f", "id", "--F", "{1,2}", "--F", "{1}"})
              .out
          == "M{9; [1]; []} + M{1; [3]; [1]}\n");
    CHECK(run({"shift", "T{1;5}", "--eta", "T{1;1}", "--f", "id", "--F", "1"}).code == 2);
}

TEST_CASE("check-axioms and analyze")
{
    const Run axioms = run({"check-axioms", "--cap", "3", "--trials", "1000", "--seed", "7", "--json"});
    CHECK(axioms.code == 0);
    CHECK(json::parse(axioms.out)["pass"] == true);

    const Run s = run({"analyze", "--etas", "n,n^2+n", "--r-bound", "2", "--json"});
    REQUIRE(s.code == 0);
    const json doc = json::parse(s.out);
    CHECK(doc["associativity"]["pass"] == true);
    CHECK(doc["commutativity"]["pass"] == true);
    CHECK(doc["adequacy"]["witness_in_ir_fragment"] == true);

    const Run v = run({"analyze-semigroup", "--etas", "n,n^2+n", "--r-bound", "1", "--structure", "v", "--json"});
    REQUIRE(v.code == 0);
    CHECK(json::parse(v.out)["i_fragment"]["left_ideal"] == true);

    const std::string path = "polyvdw_cli_table.txt";
    {
        std::ofstream out(path);
        out << "elements: 3\n0 1 -> 2\n2 2 -> 2\n";
    }
    const Run failing = run({"analyze", "--table", path, "--json"});
    CHECK(failing.code == 1);
    CHECK(json::parse(failing.out)["associativity"]["pass"] == false);
    std::remove(path.c_str());
    CHECK(run({"analyze", "--table", "/nonexistent/table.txt"}).code == 2);
}
