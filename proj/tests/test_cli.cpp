#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "support/harness.hpp"

// Exercises the installed binary through a shell; TSW_BIN is set by ctest.
namespace {

std::string bin() {
    const char* b = std::getenv("TSW_BIN");
    return b ? b : "./tsw";
}

struct RunResult {
    int status;
    std::string out;
};

RunResult run(const std::string& cmd) {
    std::string full = cmd + " 2>/dev/null";
    FILE* pipe = popen(full.c_str(), "r");
    RunResult r{-1, {}};
    if (!pipe) return r;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, got);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

void write_tmp(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    f << content;
}

void test_gen_deterministic() {
    harness::section("gen determinism");
    auto a = run(bin() + " gen path 5 --seed 1 --perm reversal");
    auto b = run(bin() + " gen path 5 --seed 1 --perm reversal");
    CHECK_EQ(a.status, 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("t 5 4 3 2 1") != std::string::npos);

    auto c = run(bin() + " gen complete 4 --seed 7 --perm random");
    auto d = run(bin() + " gen complete 4 --seed 7 --perm random");
    CHECK_EQ(c.status, 0);
    CHECK(c.out == d.out);

    auto e = run(bin() + " gen nosuch 4");
    CHECK_EQ(e.status, 2);
}

void test_pipeline_gen_solve_verify() {
    harness::section("gen | solve | verify");
    for (const std::string algo : {"exact", "exact-id", "exact-pruned", "happy", "cycles"}) {
        auto r = run(bin() + " gen cycle 6 --seed 3 --perm random | " + bin() +
                     " solve --algo " + algo + " > /tmp/tsw_seq.txt && " + bin() +
                     " gen cycle 6 --seed 3 --perm random | " + bin() +
                     " verify --seq /tmp/tsw_seq.txt");
        CHECK_EQ(r.status, 0);
        CHECK(r.out.find("valid") == 0);
    }
}

void test_solve_flags() {
    harness::section("solve flags and exit codes");
    write_tmp("/tmp/tsw_rev.txt", "p tsw 3 2\ne 1 2\ne 2 3\nt 3 2 1\n");
    auto ok = run(bin() + " solve --algo exact --instance /tmp/tsw_rev.txt");
    CHECK_EQ(ok.status, 0);
    CHECK(ok.out.find("k 3") != std::string::npos);

    auto infeasible = run(bin() + " solve --algo exact --max-swaps 2 --instance /tmp/tsw_rev.txt");
    CHECK_EQ(infeasible.status, 2);

    auto budget = run(bin() + " gen cycle 12 --seed 5 --perm random | " + bin() +
                      " solve --algo exact --node-budget 10");
    CHECK_EQ(budget.status, 3);

    write_tmp("/tmp/tsw_bad.txt", "p tsw 3 1\ne 1 2\nt 1 2 3\n");
    auto bad = run(bin() + " solve --instance /tmp/tsw_bad.txt");
    CHECK_EQ(bad.status, 2);

    auto trace = run(bin() + " solve --algo happy --instance /tmp/tsw_rev.txt --trace /tmp/tsw_trace.txt");
    CHECK_EQ(trace.status, 0);
    std::ifstream tf("/tmp/tsw_trace.txt");
    std::string line;
    int happy = 0, unhappy = 0;
    while (std::getline(tf, line)) {
        if (!line.empty() && line[0] == 'h') ++happy;
        if (!line.empty() && line[0] == 'u') ++unhappy;
    }
    CHECK_EQ(happy, 2);
    CHECK_EQ(unhappy, 1);
}

void test_colored_cli() {
    harness::section("colored solve auto-detection");
    write_tmp("/tmp/tsw_col.txt",
              "p tsw 3 2\ne 1 2\ne 2 3\nt 1 2 3\ncv 1 2 1\nct 2 1 1\n");
    auto r = run(bin() +
                 " solve --algo exact --instance /tmp/tsw_col.txt --assignment-out /tmp/tsw_assign.txt");
    CHECK_EQ(r.status, 0);
    CHECK(r.out.find("k 1") != std::string::npos);
    std::ifstream af("/tmp/tsw_assign.txt");
    std::stringstream ss;
    ss << af.rdbuf();
    CHECK(ss.str().find("Lstar 2") != std::string::npos);

    auto v = run(bin() + " verify --instance /tmp/tsw_col.txt --seq /dev/null");
    CHECK_EQ(v.status, 4);  // empty sequence does not solve it
}

void test_bound_cli() {
    harness::section("bound");
    write_tmp("/tmp/tsw_rev.txt", "p tsw 3 2\ne 1 2\ne 2 3\nt 3 2 1\n");
    auto r = run(bin() + " bound --instance /tmp/tsw_rev.txt");
    CHECK_EQ(r.status, 0);
    CHECK(r.out.find("L 4") != std::string::npos);
    CHECK(r.out.find("lower_bound 3") != std::string::npos);
    CHECK(r.out.find("path_optimal 3") != std::string::npos);
}

void test_reduce_cli() {
    harness::section("reduce");
    write_tmp("/tmp/tsw_sat.cnf", "p cnf 3 1\n1 2 3 0\n");
    auto dp = run(bin() + " reduce --from sat --to dp /tmp/tsw_sat.cnf");
    CHECK_EQ(dp.status, 0);
    CHECK(dp.out.find("layer 1:") != std::string::npos);
    CHECK(dp.out.find("phi ") != std::string::npos);

    auto check = run(bin() + " reduce --from sat --to dp /tmp/tsw_sat.cnf --check");
    CHECK_EQ(check.status, 0);
    CHECK(check.out.find("check sat-iff-dp: ok") != std::string::npos);
    CHECK(check.out.find("check uncolored-witness: ok") != std::string::npos);

    auto cts = run(bin() + " reduce --from sat --to cts /tmp/tsw_sat.cnf");
    CHECK_EQ(cts.status, 0);
    CHECK(cts.out.find("ct ") != std::string::npos);

    auto tsw = run(bin() + " reduce --from sat --to tsw /tmp/tsw_sat.cnf -o /tmp/tsw_red.txt");
    CHECK_EQ(tsw.status, 0);
    auto solveable = run(bin() + " verify --instance /tmp/tsw_red.txt --seq /dev/null");
    CHECK_EQ(solveable.status, 4);  // parses fine, empty sequence does not solve
}

// instance,algo,swaps,lower_bound,optimum,ratio,wall_ms
struct BenchRow {
    std::string instance, algo;
    std::string swaps, optimum, ratio;
};

std::vector<BenchRow> parse_csv(const std::string& out) {
    std::vector<BenchRow> rows;
    std::istringstream ss(out);
    std::string line;
    std::getline(ss, line);  // header
    while (std::getline(ss, line)) {
        BenchRow row;
        std::istringstream ls(line);
        std::string lb, ms;
        std::getline(ls, row.instance, ',');
        std::getline(ls, row.algo, ',');
        std::getline(ls, row.swaps, ',');
        std::getline(ls, lb, ',');
        std::getline(ls, row.optimum, ',');
        std::getline(ls, row.ratio, ',');
        std::getline(ls, ms, ',');
        rows.push_back(row);
    }
    return rows;
}

void test_bench_cli() {
    harness::section("bench");
    auto setup = run("mkdir -p /tmp/tsw_bench && rm -f /tmp/tsw_bench/*");
    CHECK_EQ(setup.status, 0);
    run(bin() + " gen path 5 --seed 1 --perm random -o /tmp/tsw_bench/a.tsw");
    run(bin() + " gen star 6 --seed 2 --perm random -o /tmp/tsw_bench/b.tsw");
    auto r = run(bin() + " bench --dir /tmp/tsw_bench --algos exact,happy,cycles");
    CHECK_EQ(r.status, 0);
    CHECK(r.out.find("instance,algo,swaps,lower_bound,optimum,ratio,wall_ms") == 0);
    int lines = 0;
    for (char c : r.out) lines += c == '\n';
    CHECK_EQ(lines, 7);  // header + 2 instances x 3 algos
}

void test_bench_ratios() {
    harness::section("bench ratios on paths and K5");
    run("mkdir -p /tmp/tsw_ratio && rm -f /tmp/tsw_ratio/*");
    for (int n = 3; n <= 7; ++n)
        run(bin() + " gen path " + std::to_string(n) + " --seed " + std::to_string(n) +
            " --perm random -o /tmp/tsw_ratio/path" + std::to_string(n) + ".tsw");
    for (int seed = 0; seed < 5; ++seed)
        run(bin() + " gen complete 5 --seed " + std::to_string(seed) +
            " --perm random -o /tmp/tsw_ratio/k5_" + std::to_string(seed) + ".tsw");
    run(bin() + " gen path 6 --seed 0 --perm identity -o /tmp/tsw_ratio/id.tsw");

    auto r = run(bin() + " bench --dir /tmp/tsw_ratio --algos exact,happy");
    CHECK_EQ(r.status, 0);
    for (const auto& row : parse_csv(r.out)) {
        CHECK(!row.swaps.empty());
        if (row.instance == "id.tsw") CHECK_EQ(row.swaps, "0");
        if (row.algo != "happy" || row.ratio.empty()) continue;
        double ratio = std::stod(row.ratio);
        CHECK(ratio <= 4.0);
        if (row.instance.rfind("path", 0) == 0) CHECK(ratio <= 2.0);
    }
}

}  // namespace

int main() {
    test_gen_deterministic();
    test_pipeline_gen_solve_verify();
    test_solve_flags();
    test_colored_cli();
    test_bound_cli();
    test_reduce_cli();
    test_bench_cli();
    test_bench_ratios();
    return harness::summary("test_cli");
}
