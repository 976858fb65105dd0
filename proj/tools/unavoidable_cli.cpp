// Command-line surface: generators, measurements, pattern finders, and the
// reproducible-seed experiment runners. Exit codes: 0 success/witness-found,
// 1 not-found (valid), 2 usage/input error, 3 budget exceeded, 4 invariant
// breach.

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "unavoidable/dk.hpp"
#include "unavoidable/errors.hpp"
#include "unavoidable/fk.hpp"
#include "unavoidable/io.hpp"
#include "unavoidable/tournament_analysis.hpp"
#include "unavoidable/transitivize.hpp"

using namespace unav;

namespace {

constexpr int kExitFound = 0;
constexpr int kExitNotFound = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInvariant = 4;

std::string fixed6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

long long env_budget(long long fallback) {
    const char* s = std::getenv("UNAVOIDABLE_BUDGET");
    if (!s || !*s) return fallback;
    return std::atoll(s);
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream out;
        out << std::cin.rdbuf();
        return out.str();
    }
    return read_file(path);
}

void emit(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") std::cout << content;
    else write_file(path, content);
}

std::string serialize_result(const TransitivizationResult& r) {
    std::ostringstream out;
    out << "TRANSITIVIZE-RESULT v1\n";
    out << "n " << r.order.size() << "\n";
    out << "t " << r.triangles << "\n";
    out << "bound " << fixed6(r.certified_bound) << "\n";
    out << "order:";
    for (int v : r.order) out << " " << v;
    out << "\n";
    out << "reversed:\n";
    for (auto [u, v] : r.reversed_edges) out << u << " " << v << "\n";
    return out.str();
}

struct Args {
    std::string in, out, witness_path;
    std::string color = "red";
    std::string epsilon = "0.25";
    std::string n_list;
    int n = 0, m = 0, k = 1, d = 1, trials = 100;
    uint64_t seed = 0;
    int jobs = 1;
    bool exact = false, bounds = false;
    std::string csv;
};

int run_fnt_sweep(const Args& a) {
    std::vector<int> ns;
    std::stringstream ss(a.n_list);
    std::string tok;
    while (std::getline(ss, tok, ',')) ns.push_back(std::stoi(tok));
    if (ns.empty()) throw std::invalid_argument("fnt-sweep: empty n list");

    struct Job { int n; int trial; };
    std::vector<Job> jobs_list;
    for (int n : ns)
        for (int trial = 0; trial < a.trials; ++trial) jobs_list.push_back({n, trial});

    std::vector<std::string> rows(jobs_list.size());
    std::vector<double> ratios(jobs_list.size(), 0.0);
    auto work = [&](size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; ++i) {
            auto [n, trial] = jobs_list[i];
            uint64_t s = a.seed ^ (0x9e3779b97f4a7c15ull * (uint64_t)(i + 1));
            Tournament t = random_tournament(n, s);
            TransitivizationResult r = transitivize(t);
            long long rev = (long long)r.reversed_edges.size();
            std::string exact = "na";
            if (n <= 14) exact = std::to_string(transitivity_distance_exact(t).distance);
            double ratio = r.triangles > 0
                               ? (double)rev / std::sqrt((double)n * (double)r.triangles)
                               : 0.0;
            ratios[i] = ratio;
            rows[i] = std::to_string(n) + "," + std::to_string(s) + "," +
                      std::to_string(r.triangles) + "," + std::to_string(rev) + "," +
                      fixed6(r.certified_bound) + "," + exact + "," + fixed6(ratio);
        }
    };
    int nthreads = std::max(1, a.jobs);
    if (nthreads == 1) {
        work(0, jobs_list.size());
    } else {
        std::vector<std::future<void>> futs;
        size_t chunk = (jobs_list.size() + nthreads - 1) / nthreads;
        for (size_t lo = 0; lo < jobs_list.size(); lo += chunk)
            futs.push_back(std::async(std::launch::async, work, lo,
                                      std::min(lo + chunk, jobs_list.size())));
        for (auto& f : futs) f.get();
    }

    double max_ratio = 0.0;
    for (double r : ratios) max_ratio = std::max(max_ratio, r);
    std::ostringstream out;
    out << "n,seed,t,reversals,bound_27sqrt,exact_or_na,ratio\n";
    for (auto& row : rows) out << row << "\n";
    out << "max,,,,,," << fixed6(max_ratio) << "\n";
    emit(a.out, out.str());
    std::cout << "seed=" << a.seed << " rows=" << rows.size()
              << " max_ratio=" << fixed6(max_ratio) << "\n";
    return kExitFound;
}

int dispatch(CLI::App& app, const Args& a) {
    long long oracle_budget = env_budget(100'000'000);

    if (app.got_subcommand("gen")) {
        auto* gen = app.get_subcommand("gen");
        if (gen->got_subcommand("coloring")) {
            emit(a.out, serialize(random_coloring(a.n, a.m, a.seed)));
            std::cout << "seed=" << a.seed << "\n";
        } else if (gen->got_subcommand("tournament")) {
            emit(a.out, serialize(random_tournament(a.n, a.seed)));
            std::cout << "seed=" << a.seed << "\n";
        } else if (gen->got_subcommand("dk")) {
            emit(a.out, serialize(make_dk(a.k)));
        } else if (gen->got_subcommand("layered")) {
            emit(a.out, serialize(make_layered(a.d, a.k)));
        }
        return kExitFound;
    }

    if (app.got_subcommand("density")) {
        ColoredCompleteGraph g = parse_coloring(read_input(a.in));
        Color c = a.color == "blue" ? Color::Blue : Color::Red;
        Density d = color_density(g, c);
        std::cout << a.color << " " << d.count << "/" << d.total << " "
                  << fixed6(d.to_double()) << "\n";
        return kExitFound;
    }

    if (app.got_subcommand("triangles")) {
        Tournament t = parse_tournament(read_input(a.in));
        std::cout << count_directed_triangles(t) << "\n";
        return kExitFound;
    }

    if (app.got_subcommand("distance")) {
        Tournament t = parse_tournament(read_input(a.in));
        long long tri = count_directed_triangles(t);
        if (a.exact) {
            FarnessReport r = transitivity_distance_exact(t);
            std::cout << r.distance << "\n";
            if (!a.csv.empty()) {
                std::ostringstream out;
                out << "n,seed,triangles,distance_lb,distance_exact,distance_ub\n";
                out << t.n() << "," << a.seed << "," << tri << ","
                    << packing_lower_bound(t, a.seed) << "," << r.distance << ","
                    << upper_bound_distance(t).distance << "\n";
                emit(a.csv, out.str());
            }
            return kExitFound;
        }
        long long lb = packing_lower_bound(t, a.seed);
        long long ub = upper_bound_distance(t).distance;
        std::cout << "lb=" << lb << " ub=" << ub << "\n";
        if (!a.csv.empty()) {
            std::ostringstream out;
            out << "n,seed,triangles,distance_lb,distance_exact,distance_ub\n";
            out << t.n() << "," << a.seed << "," << tri << "," << lb << ",na," << ub << "\n";
            emit(a.csv, out.str());
        }
        return kExitFound;
    }

    if (app.got_subcommand("transitivize")) {
        Tournament t = parse_tournament(read_input(a.in));
        TransitivizationResult r = transitivize(t);
        if (!a.out.empty()) write_file(a.out, serialize_result(r));
        std::cout << "n=" << t.n() << " t=" << r.triangles
                  << " reversals=" << r.reversed_edges.size()
                  << " bound=" << fixed6(r.certified_bound) << "\n";
        return kExitFound;
    }

    if (app.got_subcommand("find-fk")) {
        ColoredCompleteGraph g = parse_coloring(read_input(a.in));
        FkConfig cfg;
        cfg.seed = a.seed;
        cfg.trials = a.trials;
        cfg.fallback_budget = oracle_budget;
        FkSearchReport rep = find_fk(g, a.k, Ratio::parse(a.epsilon), cfg);
        std::cout << "seed=" << a.seed << "\n";
        for (auto& s : rep.stage_log)
            std::cout << "stage," << s.stage << "," << s.outcome << "," << s.size
                      << "," << s.param << "\n";
        if (rep.witness) {
            std::string w = serialize(*rep.witness);
            if (!a.witness_path.empty()) write_file(a.witness_path, w);
            std::cout << w;
            return kExitFound;
        }
        std::cout << (rep.exhausted ? "absent\n" : "not-found\n");
        return kExitNotFound;
    }

    if (app.got_subcommand("verify-fk")) {
        ColoredCompleteGraph g = parse_coloring(read_input(a.in));
        FkWitness w = parse_fk_witness(read_file(a.witness_path));
        bool ok = verify_fk_witness(g, w);
        std::cout << (ok ? "valid\n" : "invalid\n");
        return ok ? kExitFound : kExitNotFound;
    }

    if (app.got_subcommand("find-dk")) {
        Tournament t = parse_tournament(read_input(a.in));
        DkConfig cfg;
        cfg.seed = a.seed;
        cfg.fallback_budget = env_budget(50'000'000);
        DkSearchReport rep = find_dk(t, a.k, cfg);
        std::cout << "seed=" << a.seed << "\n";
        for (auto& s : rep.stage_log)
            std::cout << "stage," << s.stage << "," << s.outcome << "," << s.size
                      << "," << s.param << "\n";
        if (rep.witness) {
            std::string w = serialize(*rep.witness);
            if (!a.witness_path.empty()) write_file(a.witness_path, w);
            std::cout << w;
            return kExitFound;
        }
        std::cout << "reason=" << rep.reason << "\n";
        return kExitNotFound;
    }

    if (app.got_subcommand("verify-dk")) {
        Tournament t = parse_tournament(read_input(a.in));
        DkWitness w = parse_dk_witness(read_file(a.witness_path));
        bool ok = verify_dk_witness(t, w);
        std::cout << (ok ? "valid\n" : "invalid\n");
        return ok ? kExitFound : kExitNotFound;
    }

    if (app.got_subcommand("experiment")) {
        auto* exp = app.get_subcommand("experiment");
        if (exp->got_subcommand("lower-bound")) {
            LowerBoundReport rep = lower_bound_experiment(a.k, Ratio::parse(a.epsilon),
                                                          a.n, a.trials, a.seed,
                                                          oracle_budget);
            std::ostringstream out;
            out << "trial,seed,red_kk,red_kkk_bipartite,fk_free\n";
            for (auto& row : rep.rows)
                out << row.trial << "," << row.seed << "," << (row.red_kk ? 1 : 0) << ","
                    << (row.red_bipartite ? 1 : 0) << ","
                    << (row.fk_free < 0 ? std::string("na") : std::to_string(row.fk_free))
                    << "\n";
            emit(a.out, out.str());
            std::cout << "seed=" << a.seed << " trials=" << rep.rows.size()
                      << " red_kk=" << rep.red_kk_count
                      << " red_bipartite=" << rep.red_bipartite_count
                      << " fk_free=" << (rep.fk_checked ? std::to_string(rep.fk_free_count)
                                                        : std::string("na"))
                      << "\n";
            return kExitFound;
        }
        if (exp->got_subcommand("fnt-sweep")) return run_fnt_sweep(a);
        if (exp->got_subcommand("tripartition-stats")) {
            Tournament t = parse_tournament(read_input(a.in));
            long long tri = count_directed_triangles(t);
            std::ostringstream out;
            out << "trial,seed,count\n";
            double sum = 0;
            for (int trial = 0; trial < a.trials; ++trial) {
                uint64_t s = a.seed ^ (0x9e3779b97f4a7c15ull * (uint64_t)(trial + 1));
                Tripartition p = best_tripartition(t, 1, s);
                out << trial << "," << s << "," << p.positively_oriented_count << "\n";
                sum += (double)p.positively_oriented_count;
            }
            emit(a.out, out.str());
            std::cout << "seed=" << a.seed << " t=" << tri
                      << " mean=" << fixed6(sum / a.trials)
                      << " t/9=" << fixed6((double)tri / 9.0) << "\n";
            return kExitFound;
        }
    }

    std::cerr << app.help() << "\n";
    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    Args a;
    CLI::App app{"unavoidable patterns in dense colorings and non-transitive tournaments"};
    app.require_subcommand(1);

    auto add_io = [&](CLI::App* cmd, bool needs_in) {
        if (needs_in) cmd->add_option("--in", a.in, "input file (- for stdin)")->required();
        cmd->add_option("--out", a.out, "output file (- or empty for stdout)");
    };

    auto* gen = app.add_subcommand("gen", "generate instances");
    gen->require_subcommand(1);
    auto* gc = gen->add_subcommand("coloring", "random coloring with exactly m red pairs");
    gc->add_option("--n", a.n)->required();
    gc->add_option("--m", a.m)->required();
    gc->add_option("--seed", a.seed)->required();
    add_io(gc, false);
    auto* gt = gen->add_subcommand("tournament", "random tournament");
    gt->add_option("--n", a.n)->required();
    gt->add_option("--seed", a.seed)->required();
    add_io(gt, false);
    auto* gd = gen->add_subcommand("dk", "three cyclically arranged transitive k-blocks");
    gd->add_option("--k", a.k)->required();
    add_io(gd, false);
    auto* gl = gen->add_subcommand("layered", "d stacked copies of the k-block construction");
    gl->add_option("--d", a.d)->required();
    gl->add_option("--k", a.k)->required();
    add_io(gl, false);

    auto* density = app.add_subcommand("density", "exact color density of a coloring");
    add_io(density, true);
    density->add_option("--color", a.color, "red|blue")->check(CLI::IsMember({"red", "blue"}));

    auto* tri = app.add_subcommand("triangles", "directed triangle count of a tournament");
    add_io(tri, true);

    auto* dist = app.add_subcommand("distance", "transitivity distance");
    add_io(dist, true);
    dist->add_flag("--exact", a.exact, "exact subset DP (n <= 20)");
    dist->add_flag("--bounds", a.bounds, "packing lower bound + outdegree-sort upper bound");
    dist->add_option("--seed", a.seed, "seed for the packing shuffle");
    dist->add_option("--csv", a.csv, "emit a CSV row");

    auto* trans = app.add_subcommand("transitivize", "certified edge-reversal transitivization");
    add_io(trans, true);

    auto* ffk = app.add_subcommand("find-fk", "find an unavoidable 2-colored pattern");
    add_io(ffk, true);
    ffk->add_option("--k", a.k)->required();
    ffk->add_option("--epsilon", a.epsilon)->required();
    ffk->add_option("--seed", a.seed)->required();
    ffk->add_option("--trials", a.trials);
    ffk->add_option("--witness-out", a.witness_path);

    auto* vfk = app.add_subcommand("verify-fk", "verify a pattern witness");
    add_io(vfk, true);
    vfk->add_option("--witness", a.witness_path)->required();

    auto* fdk = app.add_subcommand("find-dk", "find three cyclically arranged transitive blocks");
    add_io(fdk, true);
    fdk->add_option("--k", a.k)->required();
    fdk->add_option("--seed", a.seed)->required();
    fdk->add_option("--witness-out", a.witness_path);

    auto* vdk = app.add_subcommand("verify-dk", "verify a block-witness");
    add_io(vdk, true);
    vdk->add_option("--witness", a.witness_path)->required();

    auto* exp = app.add_subcommand("experiment", "seeded experiment runners with CSV output");
    exp->require_subcommand(1);
    auto* lb = exp->add_subcommand("lower-bound", "random-coloring pattern frequencies");
    lb->add_option("--k", a.k)->required();
    lb->add_option("--epsilon", a.epsilon)->required();
    lb->add_option("--n", a.n)->required();
    lb->add_option("--trials", a.trials)->required();
    lb->add_option("--seed", a.seed)->required();
    add_io(lb, false);
    auto* sweep = exp->add_subcommand("fnt-sweep", "reversal bound sweep over random tournaments");
    sweep->add_option("--n-list", a.n_list)->required();
    sweep->add_option("--trials", a.trials)->required();
    sweep->add_option("--seed", a.seed)->required();
    sweep->add_option("--jobs", a.jobs, "parallel trials, output order unchanged");
    add_io(sweep, false);
    auto* tp = exp->add_subcommand("tripartition-stats", "positively-oriented counts of random tripartitions");
    add_io(tp, true);
    tp->add_option("--trials", a.trials)->required();
    tp->add_option("--seed", a.seed)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitFound : kExitUsage;
    }

    try {
        return dispatch(app, a);
    } catch (const BudgetError& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return kExitBudget;
    } catch (const ParseError& e) {
        std::cerr << "parse: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "invariant: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
