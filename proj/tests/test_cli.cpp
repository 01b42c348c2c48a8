#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "testutil.hpp"

namespace {

const std::string kBin = CLI_BIN;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    f << text;
}

RunResult run(const std::string& args) {
    const std::string out_path = "/tmp/hypertriplet_cli_out.txt";
    const std::string cmd = kBin + " " + args + " > " + out_path + " 2>/tmp/hypertriplet_cli_err.txt";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_path);
    return r;
}

const char* kGoldenPath = "/tmp/hypertriplet_golden.hyperlist";

struct Setup {
    Setup() { spit(kGoldenPath, testutil::golden_hyperlist()); }
} setup_once;

}  // namespace

TEST_CASE("max subcommand emits one JSONL row") {
    const auto r = run(std::string("max --input ") + kGoldenPath +
                       " --variant independent --algo max");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"weight\":\"5/9\"") != std::string::npos);
    // ranks order the three edges by cardinality, so the partition reads
    // (A, C, B) for the golden input
    CHECK(r.out.find("\"partition\":[7,6,5,2,2,3,1]") != std::string::npos);
    CHECK(r.out.find("\"labels\":[\"0\",\"2\",\"1\"]") != std::string::npos);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1);
}

TEST_CASE("basic and max agree through the CLI") {
    for (const char* variant : {"independent", "disjoint", "common"}) {
        const auto a = run(std::string("max --input ") + kGoldenPath + " --variant " + variant +
                           " --algo basic");
        const auto b = run(std::string("max --input ") + kGoldenPath + " --variant " + variant +
                           " --algo max");
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("tsv output has a header and one data row") {
    const auto r = run(std::string("max --input ") + kGoldenPath +
                       " --variant disjoint --out-format tsv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("variant\tlabel_a", 0) == 0);
    CHECK(r.out.find("\t2/2\t") != std::string::npos);
}

TEST_CASE("empty result set exits with code 2") {
    spit("/tmp/hypertriplet_disjoint.hyperlist", "1 2\n3 4\n5 6\n");
    const auto r = run("max --input /tmp/hypertriplet_disjoint.hyperlist --variant common");
    CHECK(r.exit_code == 2);
    CHECK(r.out.empty());
}

TEST_CASE("errors exit with code 1") {
    CHECK(run("max --input /tmp/does_not_exist.hyperlist").exit_code == 1);
    spit("/tmp/hypertriplet_two.hyperlist", "1 2\n2 3\n");
    CHECK(run("max --input /tmp/hypertriplet_two.hyperlist").exit_code == 1);
    CHECK(run(std::string("local --input ") + kGoldenPath + " --query nope --k 1").exit_code == 1);
    CHECK(run(std::string("threshold --input ") + kGoldenPath + " --tau -1/2").exit_code == 1);
}

TEST_CASE("topk, threshold, and local work end to end") {
    const auto topk = run(std::string("topk --k 1 --input ") + kGoldenPath + " --variant common");
    CHECK(topk.exit_code == 0);
    CHECK(topk.out.find("\"weight\":\"1/1\"") != std::string::npos);

    const auto thr = run(std::string("threshold --tau 0/1 --input ") + kGoldenPath +
                         " --variant common");
    CHECK(thr.exit_code == 0);
    CHECK(std::count(thr.out.begin(), thr.out.end(), '\n') == 1);

    const auto loc = run(std::string("local --query 1 --k 1 --input ") + kGoldenPath +
                         " --variant independent");
    CHECK(loc.exit_code == 0);
    CHECK(loc.out.find("\"weight\":\"5/9\"") != std::string::npos);
}

TEST_CASE("stats subcommand") {
    const auto r = run(std::string("stats --input ") + kGoldenPath);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"nodes\":26") != std::string::npos);
    CHECK(r.out.find("\"edges\":3") != std::string::npos);
    CHECK(r.out.find("\"degree_sum\":35") != std::string::npos);
    CHECK(r.out.find("\"max_edge_size\":12") != std::string::npos);
}

TEST_CASE("census subcommand writes TSV and JSON") {
    const auto r = run(std::string("census --input ") + kGoldenPath +
                       " --out /tmp/hypertriplet_census.tsv --json /tmp/hypertriplet_census.json");
    CHECK(r.exit_code == 0);
    const std::string tsv = slurp("/tmp/hypertriplet_census.tsv");
    CHECK(tsv.rfind("class_id\tcanonical_pattern_bits\tclosed_flag\tcount", 0) == 0);
    CHECK(tsv.find("# connected_triplets\t1") != std::string::npos);
    const std::string js = slurp("/tmp/hypertriplet_census.json");
    CHECK(js.find("\"connected_triplets\": 1") != std::string::npos);

    // size filter drops every golden edge (all have >= 11 nodes)
    const auto f = run(std::string("census --input ") + kGoldenPath +
                       " --max-edge-size 10 --out /tmp/hypertriplet_census2.tsv");
    CHECK(f.exit_code == 0);
    const std::string tsv2 = slurp("/tmp/hypertriplet_census2.tsv");
    CHECK(tsv2.find("# connected_triplets\t0") != std::string::npos);
    CHECK(tsv2.find("# edges_filtered\t3") != std::string::npos);
    CHECK(tsv2.find("# max_edge_size\t10") != std::string::npos);
}

TEST_CASE("gen er is deterministic and loadable") {
    const auto a = run("gen er --nodes 30 --edges 15 --p 0.2 --seed 9 --out /tmp/ht_er_a.hyperlist");
    const auto b = run("gen er --nodes 30 --edges 15 --p 0.2 --seed 9 --out /tmp/ht_er_b.hyperlist");
    CHECK(a.exit_code == 0);
    CHECK(slurp("/tmp/ht_er_a.hyperlist") == slurp("/tmp/ht_er_b.hyperlist"));
    const auto st = run("stats --input /tmp/ht_er_a.hyperlist");
    CHECK(st.exit_code == 0);
}

TEST_CASE("gen chung-lu matches an input degree sequence source") {
    const auto g = run(std::string("gen chung-lu --input ") + kGoldenPath +
                       " --seed 4 --out /tmp/ht_cl.hyperlist");
    CHECK(g.exit_code == 0);
    const auto st = run("stats --input /tmp/ht_cl.hyperlist");
    CHECK(st.exit_code == 0);
}

TEST_CASE("merge subcommand writes DOT and components") {
    // two node-disjoint common-weight clusters
    std::ostringstream text;
    text << "1 2 3 4 5\n1 2 3 4 6\n1 2 3 4 7\n1 2 3 4 8\n";
    text << "11 12 13 14 15\n11 12 13 14 16\n11 12 13 14 17\n11 12 13 14 18\n";
    spit("/tmp/ht_merge.hyperlist", text.str());
    const auto r = run("merge --input /tmp/ht_merge.hyperlist --variant common --tau 4/1"
                       " --dot /tmp/ht_merge.dot --components /tmp/ht_merge.json");
    CHECK(r.exit_code == 0);
    const std::string dot = slurp("/tmp/ht_merge.dot");
    CHECK(dot.rfind("graph", 0) == 0);
    CHECK(dot.find("penwidth=") != std::string::npos);
    const std::string js = slurp("/tmp/ht_merge.json");
    CHECK(js.find("\"size\": 4") != std::string::npos);

    const auto empty = run("merge --input /tmp/ht_merge.hyperlist --variant common --tau 99/1"
                           " --dot /tmp/ht_merge2.dot --components /tmp/ht_merge2.json");
    CHECK(empty.exit_code == 2);
}

TEST_CASE("entropy subcommand emits TSV rows") {
    const auto r = run(std::string("entropy --k 1 --input ") + kGoldenPath +
                       " --variant independent --out /tmp/ht_entropy.tsv");
    CHECK(r.exit_code == 0);
    const std::string tsv = slurp("/tmp/ht_entropy.tsv");
    CHECK(tsv.rfind("label_a\tlabel_b\tlabel_c\tweight", 0) == 0);
    CHECK(tsv.find("1.5715") != std::string::npos);

    const auto bad = run(std::string("entropy --k 1 --input ") + kGoldenPath + " --variant common");
    CHECK(bad.exit_code == 1);

    const auto jl = run(std::string("entropy --k 1 --input ") + kGoldenPath +
                        " --variant independent --out-format jsonl");
    CHECK(jl.exit_code == 0);
    CHECK(jl.out.find("\"target_bits\":") != std::string::npos);
    CHECK(jl.out.find("\"schema\":\"hypertriplet/entropy/1\"") != std::string::npos);
}

TEST_CASE("repeated runs are byte-identical; threads do not change output") {
    spit("/tmp/ht_det.hyperlist", testutil::golden_hyperlist());
    const auto gen = run("gen chung-lu --nodes 40 --edges 25 --zipf-exponent 0.8 --scale 12"
                         " --seed 31 --out /tmp/ht_det2.hyperlist");
    CHECK(gen.exit_code == 0);
    for (const char* variant : {"independent", "disjoint", "common"}) {
        const std::string base = std::string("topk --k 5 --input /tmp/ht_det2.hyperlist --variant ") +
                                 variant;
        const auto a = run(base);
        const auto b = run(base);
        CHECK(a.out == b.out);
        const auto c = run(base + " --threads 4");
        CHECK(a.out == c.out);
    }
}
