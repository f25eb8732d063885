#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "tsw/approx.hpp"
#include "tsw/bounds.hpp"
#include "tsw/colored.hpp"
#include "tsw/core.hpp"
#include "tsw/exact.hpp"
#include "tsw/gen.hpp"
#include "tsw/io.hpp"
#include "tsw/reductions/cnf.hpp"
#include "tsw/reductions/colored_reduction.hpp"
#include "tsw/reductions/dp.hpp"
#include "tsw/reductions/sat_to_dp.hpp"
#include "tsw/reductions/to_token_swapping.hpp"

using namespace tsw;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitBudget = 3;
constexpr int kExitVerification = 4;

struct Args {
    std::vector<std::string> positional;
    std::map<std::string, std::string> flags;

    bool has(const std::string& name) const { return flags.count(name) > 0; }
    std::string get(const std::string& name, const std::string& fallback = "") const {
        auto it = flags.find(name);
        return it == flags.end() ? fallback : it->second;
    }
};

Args parse_args(int argc, char** argv, int from) {
    Args a;
    for (int i = from; i < argc; ++i) {
        std::string s = argv[i];
        if (s.rfind("--", 0) == 0) {
            std::string name = s.substr(2);
            auto eq = name.find('=');
            if (eq != std::string::npos) {
                a.flags[name.substr(0, eq)] = name.substr(eq + 1);
            } else if (i + 1 < argc && std::string(argv[i + 1]).rfind("--", 0) != 0) {
                a.flags[name] = argv[++i];
            } else {
                a.flags[name] = "";
            }
        } else if (s == "-o" && i + 1 < argc) {
            a.flags["out"] = argv[++i];
        } else {
            a.positional.push_back(s);
        }
    }
    return a;
}

std::string read_stdin() {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
}

Instance load_input(const Args& args) {
    if (args.has("instance") && args.get("instance") != "-")
        return load_instance_file(args.get("instance"));
    return parse_instance(read_stdin());
}

void emit_output(const Args& args, const std::string& text) {
    if (args.has("out"))
        write_file(args.get("out"), text);
    else
        std::cout << text;
}

SearchLimits limits_from(const Args& args) {
    SearchLimits lim;
    if (const char* env = std::getenv("TSW_NODE_BUDGET")) lim.node_budget = std::stoull(env);
    if (args.has("node-budget")) lim.node_budget = std::stoull(args.get("node-budget"));
    return lim;
}

int cmd_gen(const Args& args) {
    if (args.positional.size() < 2) {
        std::cerr << "usage: tsw gen <family> <n> [--seed S] [--perm KIND] [-o FILE]\n";
        return kExitValidation;
    }
    std::string family = args.positional[0];
    int n = std::stoi(args.positional[1]);
    std::uint64_t seed = std::stoull(args.get("seed", "0"));
    std::string perm = args.get("perm", "random");
    Instance inst = generate_instance(family, n, seed, perm);
    std::ostringstream out;
    out << "# gen family=" << family << " n=" << n << " seed=" << seed << " perm=" << perm << '\n'
        << emit_instance(inst);
    emit_output(args, out.str());
    return kExitOk;
}

SolveResult run_algo(const std::string& algo, const Graph& g, const TokenPlacement& p,
                     const Args& args, const SearchLimits& lim) {
    if (algo == "exact") {
        if (args.has("max-swaps")) {
            auto r = solve_depth_bounded(g, p, std::stoll(args.get("max-swaps")), lim);
            if (!r) throw Error("no solution within --max-swaps");
            return *r;
        }
        return solve_bfs(g, p, lim);
    }
    if (algo == "exact-id") return solve_exact_id(g, p, lim);
    if (algo == "exact-pruned") {
        if (args.has("max-swaps")) {
            auto r = solve_misplaced_pruned(g, p, std::stoll(args.get("max-swaps")), lim);
            if (!r) throw Error("no solution within --max-swaps");
            return *r;
        }
        return solve_exact_pruned_id(g, p, lim);
    }
    if (algo == "happy") return solve_happy(g, p);
    if (algo == "cycles") return solve_cycle_decomposition(g, p);
    throw Error("unknown algorithm: " + algo);
}

int cmd_solve(const Args& args) {
    Instance inst = load_input(args);
    std::string algo = args.get("algo", "exact");
    SearchLimits lim = limits_from(args);

    SolveResult result;
    if (inst.colored()) {
        ColoredInstance cinst = inst.as_colored();
        TargetAssignment assign = optimal_assignment(cinst, all_pairs_distances(cinst.graph));
        if (args.has("assignment-out")) {
            std::ostringstream out;
            for (int t = 0; t < cinst.graph.n; ++t)
                out << "a " << t + 1 << ' ' << assign.target[t] + 1 << '\n';
            out << "Lstar " << assign.cost << '\n';
            write_file(args.get("assignment-out"), out.str());
        }
        result = solve_colored(cinst, [&](const Graph& g, const TokenPlacement& p) {
            return run_algo(algo, g, p, args, lim);
        });
        if (!verify_colored_solution(cinst, result.sequence)) {
            std::cerr << "internal error: produced sequence fails colored verification\n";
            return kExitVerification;
        }
    } else {
        result = run_algo(algo, inst.graph, inst.placement, args, lim);
        if (!verify_solution(inst.graph, inst.placement, result.sequence)) {
            std::cerr << "internal error: produced sequence fails verification\n";
            return kExitVerification;
        }
    }

    if (args.has("trace")) {
        if (result.trace) {
            std::ostringstream out;
            for (std::size_t i = 0; i < result.sequence.size(); ++i) {
                auto [u, v] = result.sequence[i];
                out << ((*result.trace)[i].kind == SwapKind::Happy ? 'h' : 'u') << ' ' << u + 1
                    << ' ' << v + 1 << '\n';
            }
            write_file(args.get("trace"), out.str());
        } else {
            std::cerr << "note: --trace ignored, " << algo << " records no swap annotations\n";
        }
    }
    emit_output(args, emit_swap_sequence(result.sequence));
    std::cerr << "solved: " << result.length << " swaps\n";
    return kExitOk;
}

int cmd_bound(const Args& args) {
    Instance inst = load_input(args);
    std::ostringstream out;
    if (inst.colored()) {
        ColoredInstance cinst = inst.as_colored();
        TargetAssignment assign = optimal_assignment(cinst, all_pairs_distances(cinst.graph));
        out << "Lstar " << assign.cost << '\n';
        out << "assignment_floor " << assignment_floor(cinst) << '\n';
    } else {
        out << "L " << total_displacement(inst.graph, inst.placement) << '\n';
        out << "lower_bound " << lower_bound(inst.graph, inst.placement) << '\n';
        try {
            long long v = path_optimal(inst.graph, inst.placement);
            out << "path_optimal " << v << '\n';
        } catch (const NotAPath&) {
        }
        try {
            long long v = complete_optimal(inst.graph, inst.placement);
            out << "complete_optimal " << v << '\n';
        } catch (const NotComplete&) {
        }
    }
    emit_output(args, out.str());
    return kExitOk;
}

int cmd_verify(const Args& args) {
    Instance inst = load_input(args);
    std::string seq_text =
        args.get("seq") == "-" || !args.has("seq") ? read_stdin() : read_file(args.get("seq"));
    SwapSequence seq = parse_swap_sequence(seq_text);
    bool ok = inst.colored() ? verify_colored_solution(inst.as_colored(), seq)
                             : verify_solution(inst.graph, inst.placement, seq);
    std::cout << (ok ? "valid" : "invalid") << " (" << seq.size() << " swaps)\n";
    return ok ? kExitOk : kExitVerification;
}

int cmd_reduce(const Args& args) {
    if (args.get("from", "sat") != "sat") {
        std::cerr << "only --from sat is supported\n";
        return kExitValidation;
    }
    std::string to = args.get("to", "tsw");
    std::string text = args.positional.empty() ? read_stdin() : read_file(args.positional[0]);
    CnfFormula f = parse_dimacs(text);
    if (args.has("normalize")) f = normalize_to_3sat(f);

    SatDpReduction red = sat_to_dp(f);

    if (args.has("check")) {
        bool all_ok = true;
        auto report = [&](const std::string& name, bool ok, const std::string& detail = "") {
            std::cout << "check " << name << ": " << (ok ? "ok" : "FAIL")
                      << (detail.empty() ? "" : " (" + detail + ")") << '\n';
            all_ok &= ok;
        };
        auto bad = validate_dag(red.dag);
        report("dag-invariants", bad.empty(), bad.empty() ? "" : bad.front());
        long long expected = 30LL * f.clauses.size() + 12LL * f.num_vars;
        report("vertex-count", red.dag.n == expected,
               std::to_string(red.dag.n) + " vs 30m+12n = " + std::to_string(expected));

        std::optional<bool> sat;
        if (f.num_vars <= 20) {
            sat = satisfiable_brute(f);
            try {
                auto cover = dp_solve(red.dag);
                report("sat-iff-dp", cover.has_value() == *sat,
                       std::string("sat=") + (*sat ? "yes" : "no"));
            } catch (const OracleBudgetExceeded&) {
                report("sat-iff-dp", false, "oracle budget exceeded");
            }
        }

        StructuredColoredInstance cts = dp_to_colored(red.dag);
        auto violations = check_structured(cts);
        report("structured-properties", violations.empty(),
               violations.empty() ? "" : violations.front());

        if (sat && *sat) {
            std::uint64_t bits = 0;
            while (!evaluates(f, bits)) ++bits;
            DisjointPaths paths = paths_for_assignment(red, f, bits);
            SwapSequence cs = colored_solution_from_paths(cts, paths);
            bool okc = (long long)cs.size() == cts.threshold &&
                       verify_colored_solution(cts.inst, cs);
            report("colored-witness", okc);
            UncoloredReduction ts = structured_to_uncolored(cts);
            SwapSequence us = compose_uncolored_solution(ts, paths);
            bool oku = (long long)us.size() == ts.threshold &&
                       verify_solution(ts.graph, ts.placement, us);
            report("uncolored-witness", oku);
        }
        if (!all_ok) return kExitVerification;
    }

    std::ostringstream out;
    if (to == "dp") {
        out << "# layered disjoint paths instance, |V|=" << red.dag.n << '\n' << emit_dp(red.dag);
    } else if (to == "cts") {
        StructuredColoredInstance cts = dp_to_colored(red.dag);
        Instance inst;
        inst.graph = cts.inst.graph;
        inst.placement = cts.inst.placement;
        inst.token_colors = cts.inst.token_colors;
        inst.vertex_colors = cts.inst.vertex_colors;
        out << "# colored token swapping, threshold " << cts.threshold << '\n'
            << emit_instance(inst);
    } else if (to == "tsw") {
        StructuredColoredInstance cts = dp_to_colored(red.dag);
        UncoloredReduction ts = structured_to_uncolored(cts);
        Instance inst;
        inst.graph = ts.graph;
        inst.placement = ts.placement;
        out << "# token swapping, threshold " << ts.threshold << '\n' << emit_instance(inst);
    } else {
        std::cerr << "unknown --to target: " << to << '\n';
        return kExitValidation;
    }
    emit_output(args, out.str());
    return kExitOk;
}

int cmd_bench(const Args& args) {
    std::string dir = args.get("dir");
    if (dir.empty()) {
        std::cerr << "usage: tsw bench --dir D --algos a,b,c\n";
        return kExitValidation;
    }
    std::vector<std::string> algos;
    {
        std::istringstream ss(args.get("algos", "exact,happy,cycles"));
        std::string a;
        while (std::getline(ss, a, ',')) algos.push_back(a);
    }
    std::vector<std::string> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file()) files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());

    SearchLimits lim = limits_from(args);
    std::cout << "instance,algo,swaps,lower_bound,optimum,ratio,wall_ms\n";
    for (const auto& file : files) {
        Instance inst;
        try {
            inst = load_instance_file(file);
        } catch (const Error& e) {
            std::cerr << file << ": " << e.what() << '\n';
            for (const auto& algo : algos)
                std::cout << std::filesystem::path(file).filename().string() << ',' << algo
                          << ",,,,,\n";
            continue;
        }
        long long lb = lower_bound(inst.graph, inst.placement);
        std::optional<long long> optimum;
        struct Row {
            std::string algo;
            std::optional<long long> swaps;
            double ms = 0;
        };
        std::vector<Row> rows;
        for (const auto& algo : algos) {
            Row row{algo, std::nullopt, 0};
            auto t0 = std::chrono::steady_clock::now();
            try {
                SolveResult r = run_algo(algo, inst.graph, inst.placement, args, lim);
                row.swaps = (long long)r.length;
                if (algo.rfind("exact", 0) == 0) optimum = (long long)r.length;
            } catch (const Error& e) {
                std::cerr << file << " [" << algo << "]: " << e.what() << '\n';
            }
            row.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                         .count();
            rows.push_back(row);
        }
        for (const auto& row : rows) {
            std::cout << std::filesystem::path(file).filename().string() << ',' << row.algo << ',';
            if (row.swaps) std::cout << *row.swaps;
            std::cout << ',' << lb << ',';
            if (optimum) std::cout << *optimum;
            std::cout << ',';
            if (row.swaps && optimum && *optimum > 0)
                std::cout << (double)*row.swaps / (double)*optimum;
            else if (row.swaps && optimum && *optimum == 0)
                std::cout << 1;
            std::cout << ',' << row.ms << '\n';
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: tsw <gen|solve|bound|verify|reduce|bench> [options]\n";
        return kExitValidation;
    }
    std::string cmd = argv[1];
    Args args = parse_args(argc, argv, 2);
    try {
        if (cmd == "gen") return cmd_gen(args);
        if (cmd == "solve") return cmd_solve(args);
        if (cmd == "bound") return cmd_bound(args);
        if (cmd == "verify") return cmd_verify(args);
        if (cmd == "reduce") return cmd_reduce(args);
        if (cmd == "bench") return cmd_bench(args);
        std::cerr << "unknown command: " << cmd << '\n';
        return kExitValidation;
    } catch (const BudgetExceeded& e) {
        std::cerr << e.what() << '\n';
        return kExitBudget;
    } catch (const OracleBudgetExceeded& e) {
        std::cerr << e.what() << '\n';
        return kExitBudget;
    } catch (const NoStepFound& e) {
        std::cerr << e.what() << '\n';
        return kExitVerification;
    } catch (const ProgressStall& e) {
        std::cerr << e.what() << '\n';
        return kExitVerification;
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return kExitValidation;
    }
}
