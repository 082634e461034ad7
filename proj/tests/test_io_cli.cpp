#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gnb/cli.hpp"
#include "gnb/design.hpp"
#include "gnb/errors.hpp"
#include "gnb/gf.hpp"
#include "gnb/io.hpp"
#include "gnb/named_graphs.hpp"

using namespace gnb;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    auto dir = fs::temp_directory_path() / "gnb_test_io_cli";
    fs::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("DIMACS round trip") {
    std::ostringstream os;
    write_dimacs(os, petersen_graph());
    std::istringstream is(os.str());
    auto g = read_dimacs(is);
    CHECK(g.same_adjacency(petersen_graph()));

    std::istringstream text("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    CHECK(read_dimacs(text).same_adjacency(complete_graph(3)));
    std::istringstream bad("p edge 3 1\ne 1 4\n");
    CHECK_THROWS_AS(read_dimacs(bad), InvalidInput);
    std::istringstream missing("e 1 2\n");
    CHECK_THROWS_AS(read_dimacs(missing), InvalidInput);
}

TEST_CASE("JSON round trips") {
    auto g = cycle_graph(5).with_labels({"a", "b", "c", "d", "e"});
    auto back = graph_from_json(graph_to_json(g));
    CHECK(back.same_adjacency(g));
    CHECK(back.labels() == g.labels());
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n": 2, "edges": [[0, 2]]})")), InvalidInput);

    auto d = build_s_3_6_22();
    auto d2 = design_from_json(design_to_json(d));
    CHECK(d2.blocks == d.blocks);
    CHECK(d2.t == 3);

    CHECK(strategy_tables_from_json(Json::parse("[[1, 0], [0, 1]]")) ==
          std::vector<std::vector<Symbol>>{{1, 0}, {0, 1}});
}

TEST_CASE("graph files resolve by extension or content") {
    auto p = scratch("c5.json");
    std::ofstream(p) << graph_to_json(cycle_graph(5)).dump();
    CHECK(resolve_graph(p.string()).same_adjacency(cycle_graph(5)));
    auto q = scratch("k3.dimacs");
    {
        std::ofstream f(q);
        write_dimacs(f, complete_graph(3));
    }
    CHECK(resolve_graph(q.string()).same_adjacency(complete_graph(3)));
    CHECK(resolve_graph("petersen").same_adjacency(petersen_graph()));
    CHECK_THROWS_AS(resolve_graph(scratch("missing.dimacs").string()), InvalidInput);
}

TEST_CASE("cli: design build and verify") {
    auto p = scratch("s3622.json");
    auto r = cli({"design", "build", "s-3-6-22", "--out", p.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("blocks         77") != std::string::npos);
    CHECK(r.out.find("0:616 2:2310") != std::string::npos);
    CHECK(cli({"design", "verify", p.string()}).code == 0);

    auto j = Json::parse(std::ifstream(p));
    j["blocks"].erase(j["blocks"].begin());
    std::ofstream(scratch("broken.json")) << j.dump();
    auto bad = cli({"--format", "json", "design", "verify", scratch("broken.json").string()});
    CHECK(bad.code == 1);
    CHECK(Json::parse(bad.out)["steiner"] == false);

    CHECK(cli({"design", "build", "s-2-3-7"}).code == 2);
}

TEST_CASE("cli: rank with basis output") {
    auto p = scratch("hs.basis");
    auto r = cli({"rank", "--graph", "higman-sims", "--q", "3", "--shift", "1", "--basis-out", p.string()});
    CHECK(r.code == 0);
    CHECK(r.out == "23\n");
    std::ifstream in(p);
    auto b = read_basis_file(in);
    CHECK(b.basis.size() == 23);
    CHECK(b.coords.size() == 100);
    CHECK(cli({"rank", "--graph", "c5", "--q", "4"}).code == 2);
    CHECK(cli({"rank", "--graph", "c5", "--q", "3", "--shift", "3"}).code == 2);
}

TEST_CASE("cli: cover, guess and bounds") {
    CHECK(cli({"cover", "kappa", "c5", "--method", "lp"}).out == "5/2\n");
    CHECK(cli({"cover", "kappa", "higman-sims"}).out == "50\n");
    auto kj = Json::parse(cli({"--format", "json", "cover", "kappa", "c5"}).out);
    CHECK(kj["kappa_f"] == "5/2");
    CHECK(kj["gn_lower_bound"] == "5/2");

    auto e = cli({"--format", "json", "guess", "eval", "--graph", "c5", "--s", "2", "--strategy",
                  R"({"s": 2, "tables": [[1,1,1,0],[1,1,1,0],[1,1,1,0],[1,1,1,0],[1,1,1,0]]})"});
    CHECK(e.code == 0);
    CHECK(Json::parse(e.out)["probability"] == "5/32");
    CHECK(cli({"guess", "eval", "--graph", "c5", "--s", "3", "--strategy", R"({"s": 2, "tables": []})"}).code == 2);

    auto s = cli({"--threads", "1", "--format", "json", "guess", "search", "--graph", "c5", "--s", "2"});
    CHECK(s.code == 0);
    CHECK(Json::parse(s.out)["probability"] == "5/32");
    CHECK(cli({"guess", "search", "--graph", "c5", "--s", "3"}).code == 3);

    auto b = Json::parse(cli({"--format", "json", "guess", "bounds", "--graph", "clebsch"}).out);
    CHECK(b["interval"][0] == "10");
    CHECK(b["interval"][1] == "11");
}

TEST_CASE("cli: paper-table") {
    auto r = cli({"--format", "csv", "paper-table"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Clebsch,16,10,11,") != std::string::npos);
    CHECK(r.out.find("Hoffman-Singleton,50,29,35,") != std::string::npos);
    CHECK(r.out.find("Gewirtz,56,36,40,") != std::string::npos);
    CHECK(r.out.find("M22,77,55,56,") != std::string::npos);
    CHECK(r.out.find("Higman-Sims,100,77,78,") != std::string::npos);
}

TEST_CASE("cli: usage errors and --out") {
    CHECK(cli({}).code == 2);
    CHECK(cli({"bogus"}).code == 2);
    CHECK(cli({"--format", "xml", "paper-table"}).code == 2);
    CHECK(cli({"graph", "gen", "nope"}).code == 2);
    auto p = scratch("petersen.dimacs");
    CHECK(cli({"--out", p.string(), "graph", "gen", "petersen"}).code == 0);
    CHECK(load_graph_file(p.string()).same_adjacency(petersen_graph()));
    auto info = cli({"graph", "info", "hosi"});
    CHECK(info.out.find("(50,7,0,1)") != std::string::npos);
}
