#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "unavoidable/fk.hpp"
#include "unavoidable/io.hpp"

using namespace unav;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

fs::path tmpdir() {
    static fs::path d = [] {
        auto p = fs::temp_directory_path() / "unav-cli-test";
        fs::create_directories(p);
        return p;
    }();
    return d;
}

RunResult run(const std::string& args) {
    auto outfile = tmpdir() / "stdout.txt";
    std::string cmd = std::string(CLI_BIN) + " " + args + " > " + outfile.string() + " 2>&1";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(outfile);
    std::ostringstream buf;
    buf << in.rdbuf();
    r.out = buf.str();
    return r;
}

std::string path(const std::string& name) { return (tmpdir() / name).string(); }

} // namespace

TEST_CASE("usage errors exit 2") {
    CHECK(run("bogus-subcommand").code == 2);
    CHECK(run("gen dk").code == 2);                 // missing --k
    CHECK(run("triangles --nonsense x").code == 2); // unknown flag
}

TEST_CASE("parse errors in input files exit 2") {
    write_file(path("garbage.tour"), "not a tournament\n");
    CHECK(run("triangles --in " + path("garbage.tour")).code == 2);
}

TEST_CASE("gen dk then triangles prints k^3") {
    auto r = run("gen dk --k 3 --out " + path("d3.tour"));
    REQUIRE(r.code == 0);
    auto tri = run("triangles --in " + path("d3.tour"));
    CHECK(tri.code == 0);
    CHECK(tri.out.find("27") != std::string::npos);
}

TEST_CASE("distance --exact: transitive gives 0; over-budget n exits 3") {
    auto gen = run("gen tournament --n 25 --seed 1 --out " + path("big.tour"));
    REQUIRE(gen.code == 0);
    CHECK(run("distance --exact --in " + path("big.tour")).code == 3);
    CHECK(run("distance --bounds --in " + path("big.tour")).code == 0);

    write_file(path("trans.tour"), serialize(Tournament(8)));
    auto ex = run("distance --exact --in " + path("trans.tour"));
    CHECK(ex.code == 0);
    CHECK(ex.out.find("0") != std::string::npos);
}

TEST_CASE("find-fk exit codes track witness presence, witness round-trips") {
    // a coloring that certainly contains the pattern at k=2
    auto g = random_coloring(8, 14, 9);
    bool expect = fk_oracle(g, 2).has_value();
    write_file(path("g.col"), serialize(g));
    auto r = run("find-fk --k 2 --epsilon 0.1 --seed 7 --in " + path("g.col") +
                 " --witness-out " + path("w.fk"));
    CHECK(r.code == (expect ? 0 : 1));
    if (expect) {
        auto v = run("verify-fk --in " + path("g.col") + " --witness " + path("w.fk"));
        CHECK(v.code == 0);
        // tampered witness fails verification
        auto w = parse_fk_witness(read_file(path("w.fk")));
        std::swap(w.a_set, w.b_set);
        write_file(path("w2.fk"), serialize(w));
        auto bad = run("verify-fk --in " + path("g.col") + " --witness " + path("w2.fk"));
        CHECK(bad.code == 1);
    }
    // density below epsilon is an input error
    write_file(path("sparse.col"), serialize(random_coloring(8, 1, 2)));
    CHECK(run("find-fk --k 2 --epsilon 0.4 --seed 7 --in " + path("sparse.col")).code == 2);
}

TEST_CASE("find-dk / verify-dk on the canonical construction") {
    REQUIRE(run("gen dk --k 2 --out " + path("d2.tour")).code == 0);
    auto r = run("find-dk --k 2 --seed 5 --in " + path("d2.tour") +
                 " --witness-out " + path("w.dk"));
    CHECK(r.code == 0);
    CHECK(run("verify-dk --in " + path("d2.tour") + " --witness " + path("w.dk")).code == 0);
    // transitive input: valid not-found
    write_file(path("trans9.tour"), serialize(Tournament(9)));
    CHECK(run("find-dk --k 2 --seed 5 --in " + path("trans9.tour")).code == 1);
}

TEST_CASE("density prints an exact ratio") {
    write_file(path("half.col"), serialize(random_coloring(5, 5, 3)));
    auto r = run("density --color red --in " + path("half.col"));
    CHECK(r.code == 0);
    CHECK(r.out.find("5/10") != std::string::npos);
}

TEST_CASE("experiment CSVs carry the documented headers") {
    auto lb = run("experiment lower-bound --k 2 --epsilon 0.25 --n 6 --trials 5 --seed 3");
    CHECK(lb.code == 0);
    CHECK(lb.out.find("trial,seed,red_kk,red_kkk_bipartite,fk_free") != std::string::npos);

    auto sw = run("experiment fnt-sweep --n-list 6,8 --trials 3 --seed 4");
    CHECK(sw.code == 0);
    CHECK(sw.out.find("n,seed,t,reversals,bound_27sqrt,exact_or_na,ratio") != std::string::npos);

    auto tp = run("experiment tripartition-stats --trials 5 --seed 6 --in " + path("d2.tour"));
    CHECK(tp.code == 0);
    CHECK(tp.out.find("trial,seed,count") != std::string::npos);

    write_file(path("c8.tour"), serialize(random_tournament(8, 12)));
    auto dcsv = run("distance --exact --csv " + path("d.csv") + " --in " + path("c8.tour"));
    CHECK(dcsv.code == 0);
    CHECK(read_file(path("d.csv")).find("n,seed,triangles,distance_lb,distance_exact,distance_ub") !=
          std::string::npos);
}

TEST_CASE("same argv and seed give byte-identical output") {
    std::string cmds[] = {
        "gen coloring --n 10 --m 20 --seed 5",
        "gen tournament --n 10 --seed 5",
        "find-fk --k 2 --epsilon 0.1 --seed 7 --in " + path("g.col"),
        "distance --bounds --seed 3 --in " + path("big.tour"),
        "transitivize --in " + path("big.tour"),
        "experiment fnt-sweep --n-list 6,8 --trials 3 --seed 4",
        "experiment lower-bound --k 2 --epsilon 0.25 --n 6 --trials 5 --seed 3",
    };
    for (const auto& c : cmds) {
        auto a = run(c);
        auto b = run(c);
        CHECK(a.code == b.code);
        CHECK_MESSAGE(a.out == b.out, "command not deterministic: ", c);
    }
}

TEST_CASE("--jobs does not change fnt-sweep output") {
    auto serial = run("experiment fnt-sweep --n-list 6,8,10 --trials 4 --seed 11");
    auto parallel = run("experiment fnt-sweep --n-list 6,8,10 --trials 4 --seed 11 --jobs 4");
    CHECK(serial.code == 0);
    CHECK(serial.out == parallel.out);
}
