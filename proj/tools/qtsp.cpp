#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qtsp/adjacent.hpp"
#include "qtsp/bench.hpp"
#include "qtsp/io.hpp"
#include "qtsp/matching.hpp"
#include "qtsp/oracle.hpp"
#include "qtsp/qspp.hpp"
#include "qtsp/reductions.hpp"

using nlohmann::ordered_json;
using namespace qtsp;

namespace {

constexpr long long kOracleCap = 1'000'000;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write file: " + out_path);
        out << text;
    }
}

std::vector<Cost> parse_list(const std::string& s) {
    std::vector<Cost> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
    return out;
}

std::vector<std::vector<Cost>> read_matrix(const std::string& path) {
    ordered_json j = ordered_json::parse(slurp(path));
    std::vector<std::vector<Cost>> m;
    for (const auto& row : j) {
        m.emplace_back();
        for (const auto& x : row) {
            if (!x.is_number_integer())
                throw std::invalid_argument("matrix entries must be integers");
            m.back().push_back(x.get<Cost>());
        }
    }
    return m;
}

struct GenOptions {
    std::string family;
    std::string sizes;
    int n = 0, r = 0, s = 0, p = 1;
    std::string model = "adjacent";
    std::uint64_t seed = 1;
    Cost lo = 0, hi = 9;
    std::string from_partition, from_ubqp, from_tsp, out;
};

GraphSpec build_graph(const GenOptions& o, Family fam) {
    if (fam == Family::SEE || fam == Family::DEE) {
        if (o.sizes.empty()) throw std::invalid_argument("--sizes is required for layered graphs");
        std::vector<int> cycles;
        for (Cost c : parse_list(o.sizes)) cycles.push_back(static_cast<int>(c));
        return GStarGraph(cycles);
    }
    if (fam == Family::PV) {
        if (o.n <= 0) throw std::invalid_argument("--n is required for pv");
        return PVGraph(o.n);
    }
    if (o.r <= 0 || o.s <= 0) throw std::invalid_argument("--r and --s are required for mee");
    return MEEGraph(o.r, o.s);
}

int run_gen(const GenOptions& o) {
    Instance inst;
    ordered_json meta;
    if (!o.from_partition.empty()) {
        std::vector<Cost> alpha = parse_list(o.from_partition);
        Family fam = family_from_name(o.family.empty() ? "see" : o.family);
        if (fam == Family::SEE) {
            auto [g, m] = gen_partition_see(alpha);
            inst.graph = std::move(g);
            inst.costs = std::move(m);
        } else if (fam == Family::DEE) {
            auto [g, m] = gen_partition_dee(alpha);
            inst.graph = std::move(g);
            inst.costs = std::move(m);
        } else if (fam == Family::PV) {
            auto [g, m] = gen_partition_pv(alpha);
            inst.graph = std::move(g);
            inst.costs = std::move(m);
        } else {
            throw std::invalid_argument("--from-partition needs family see, dee or pv");
        }
        inst.family = fam;
        meta["generator"] = "partition";
        meta["alpha"] = alpha;
    } else if (!o.from_ubqp.empty()) {
        auto Q = read_matrix(o.from_ubqp);
        Family fam = family_from_name(o.family.empty() ? "see" : o.family);
        if (fam == Family::SEE) {
            auto [g, m] = gen_ubqp_see(Q);
            inst.graph = std::move(g);
            inst.costs = std::move(m);
        } else if (fam == Family::PV) {
            auto [g, m] = gen_ubqp_pv(Q);
            inst.graph = std::move(g);
            inst.costs = std::move(m);
        } else {
            throw std::invalid_argument("--from-ubqp needs family see or pv");
        }
        inst.family = fam;
        meta["generator"] = "ubqp";
        meta["source"] = o.from_ubqp;
    } else if (!o.from_tsp.empty()) {
        Family fam = family_from_name(o.family.empty() ? "mee" : o.family);
        if (fam != Family::MEE) throw std::invalid_argument("--from-tsp needs family mee");
        auto [g, m] = gen_tsp_mee(read_matrix(o.from_tsp));
        inst.graph = std::move(g);
        inst.costs = std::move(m);
        inst.family = fam;
        meta["generator"] = "tsp";
        meta["source"] = o.from_tsp;
    } else {
        Family fam = family_from_name(o.family.empty() ? "pv" : o.family);
        inst.family = fam;
        inst.graph = build_graph(o, fam);
        const Graph& g = inst.base();
        if (o.model == "linear") {
            inst.costs = LinearCosts{random_costs(g.num_edges(), o.seed, o.lo, o.hi)};
        } else if (o.model == "rank") {
            inst.costs = random_rank(g.num_edges(), o.p, o.seed, o.lo, o.hi);
        } else if (o.model == "full") {
            inst.costs = random_full(g.num_edges(), o.seed, o.lo, o.hi);
        } else if (o.model == "adjacent") {
            inst.costs = random_adjacent(g, o.seed, o.lo, o.hi);
        } else {
            throw std::invalid_argument("unknown --model: " + o.model);
        }
        meta["generator"] = "random";
        meta["seed"] = o.seed;
        meta["model"] = o.model;
        meta["cost_range"] = {o.lo, o.hi};
    }
    inst.meta = meta;
    emit(render_instance(inst), o.out);
    return 0;
}

RankP to_rank(const CostModel& model, const char* solver) {
    if (const auto* r = std::get_if<RankP>(&model)) return *r;
    if (const auto* l = std::get_if<LinearCosts>(&model)) {
        RankP r;
        r.p = 1;
        r.a.push_back(l->c);
        r.b.emplace_back(l->c.size(), 1);
        r.c.assign(l->c.size(), 0);
        return r;
    }
    throw std::invalid_argument(std::string(solver) + " needs a rank or linear cost model");
}

struct SolveOutcome {
    std::string solver;
    Cost value = 0;
    Tour tour;
};

SolveOutcome dispatch(const Instance& inst, const std::string& solver, double eps);

SolveOutcome auto_route(const Instance& inst, double eps) {
    const bool layered = std::holds_alternative<GStarGraph>(inst.graph);
    if (std::holds_alternative<Adjacent>(inst.costs) && inst.family != Family::MEE)
        return dispatch(inst, "adjacent-dp", eps);
    if (std::holds_alternative<RankP>(inst.costs) && inst.family != Family::MEE)
        return dispatch(inst, "exact-dp", eps);
    if (std::holds_alternative<LinearCosts>(inst.costs)) {
        if (inst.family == Family::MEE) return dispatch(inst, "matching", eps);
        if (inst.family == Family::PV) {
            const auto& g = std::get<PVGraph>(inst.graph);
            auto sol = solve_linear_pv(g, std::get<LinearCosts>(inst.costs).c);
            return {"linear-greedy", sol.value, sol.tour};
        }
        if (layered) return dispatch(inst, "exact-dp", eps);
    }
    return dispatch(inst, "oracle", eps);
}

SolveOutcome dispatch(const Instance& inst, const std::string& solver, double eps) {
    if (solver == "auto") return auto_route(inst, eps);
    if (solver == "oracle") {
        OracleResult res = std::visit(
            [&](const auto& g) {
                using T = std::decay_t<decltype(g)>;
                if constexpr (std::is_same_v<T, GStarGraph>)
                    return oracle_tour(g, inst.family, inst.costs, kOracleCap);
                else
                    return oracle_tour(g, inst.costs, kOracleCap);
            },
            inst.graph);
        return {"oracle", res.value, res.tour};
    }
    if (solver == "adjacent-dp") {
        const auto* q = std::get_if<Adjacent>(&inst.costs);
        if (!q) throw std::invalid_argument("adjacent-dp needs an adjacent cost model");
        AdjSolution sol;
        if (inst.family == Family::SEE)
            sol = solve_adjacent_see(std::get<GStarGraph>(inst.graph), *q);
        else if (inst.family == Family::DEE)
            sol = solve_adjacent_dee(std::get<GStarGraph>(inst.graph), *q);
        else if (inst.family == Family::PV)
            sol = solve_adjacent_pv(std::get<PVGraph>(inst.graph), *q);
        else
            throw std::invalid_argument("no adjacent DP for the MEE family");
        return {"adjacent-dp", sol.value, sol.tour};
    }
    if (solver == "exact-dp" || solver == "fptas") {
        if (inst.family == Family::MEE) {
            if (solver == "exact-dp")
                throw std::invalid_argument("no exact DP for the MEE family");
            RankP r = to_rank(inst.costs, "fptas");
            if (r.p != 1) throw std::invalid_argument("the MEE FPTAS needs rank 1");
            auto sol = solve_rank1_mee_fptas(std::get<MEEGraph>(inst.graph), r.a[0], r.b[0], eps);
            return {"fptas", sol.value, sol.tour};
        }
        RankP r = to_rank(inst.costs, solver.c_str());
        ReductionMap map = std::visit(
            [&](const auto& g) -> ReductionMap {
                using T = std::decay_t<decltype(g)>;
                if constexpr (std::is_same_v<T, GStarGraph>)
                    return inst.family == Family::SEE ? see_to_qspp(g, r) : dee_to_qspp(g, r);
                else if constexpr (std::is_same_v<T, PVGraph>)
                    return pv_to_qspp(g, r);
                else
                    throw std::invalid_argument("unsupported graph for the QSPP route");
            },
            inst.graph);
        QsppSolution sol = solver == "exact-dp" ? solve_exact(map.inst)
                                                : solve_fptas(map.inst, eps);
        return {solver, sol.value / map.scale, path_to_tour(map, sol.path_edges)};
    }
    if (solver == "matching") {
        const auto* l = std::get_if<LinearCosts>(&inst.costs);
        if (!l || inst.family != Family::MEE)
            throw std::invalid_argument("matching handles linear costs on the MEE family");
        auto sol = solve_linear_mee(std::get<MEEGraph>(inst.graph), l->c);
        return {"matching", sol.value, sol.tour};
    }
    throw std::invalid_argument("unknown --solver: " + solver);
}

int run_solve(const std::string& file, const std::string& solver, double eps,
              const std::string& out) {
    Instance inst = parse_instance(slurp(file));
    auto t0 = std::chrono::steady_clock::now();
    SolveOutcome res = dispatch(inst, solver, eps);
    auto t1 = std::chrono::steady_clock::now();
    ordered_json j;
    j["solver"] = res.solver;
    j["value"] = res.value;
    j["tour"] = res.tour.vertices();
    j["micros"] = std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();
    emit(j.dump(2) + "\n", out);
    return 0;
}

int run_count(const std::string& file, const std::string& out) {
    Instance inst = parse_instance(slurp(file));
    ordered_json j;
    j["family"] = family_name(inst.family);
    long long count = std::visit(
        [&](const auto& g) {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, GStarGraph>)
                return count_family(g, inst.family);
            else
                return count_family(g);
        },
        inst.graph);
    j["count"] = count;
    if (inst.family == Family::DEE) {
        long long printed = dee_closed_form(std::get<GStarGraph>(inst.graph));
        j["closed_form"] = printed;
        j["agree"] = printed == count;
    }
    if (count <= kOracleCap) {
        long long seen = 0;
        auto tick = [&](const Tour&) { ++seen; };
        std::visit(
            [&](const auto& g) {
                using T = std::decay_t<decltype(g)>;
                if constexpr (std::is_same_v<T, GStarGraph>) {
                    inst.family == Family::SEE ? for_each_see(g, tick) : for_each_dee(g, tick);
                } else if constexpr (std::is_same_v<T, PVGraph>) {
                    for_each_pv(g, tick);
                } else {
                    for_each_mee(g, tick);
                }
            },
            inst.graph);
        j["enumerated"] = seen;
        j["enumeration_matches"] = seen == count;
    }
    emit(j.dump(2) + "\n", out);
    return 0;
}

int run_verify(const std::string& file, const std::string& against, const std::string& out) {
    if (against != "oracle") throw std::invalid_argument("only --against oracle is supported");
    Instance inst = parse_instance(slurp(file));
    SolveOutcome solved = dispatch(inst, "auto", 0.1);
    SolveOutcome reference = dispatch(inst, "oracle", 0.1);
    ordered_json j;
    j["solver"] = solved.solver;
    j["solver_value"] = solved.value;
    j["oracle_value"] = reference.value;
    j["equal"] = solved.value == reference.value;
    emit(j.dump(2) + "\n", out);
    if (solved.value != reference.value)
        throw std::logic_error("solver disagrees with the oracle");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quadratic TSP toolkit over the SEE, DEE, PV and MEE tour families"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* cgen = app.add_subcommand("gen", "Generate an instance file");
    cgen->add_option("--family", gen.family, "see|dee|pv|mee");
    cgen->add_option("--sizes", gen.sizes, "cycle sizes for layered graphs, e.g. 4,3,5");
    cgen->add_option("--n", gen.n, "vertex count for pv (even, >= 4)");
    cgen->add_option("--r", gen.r, "cycle length for mee");
    cgen->add_option("--s", gen.s, "insertion count for mee");
    cgen->add_option("--model", gen.model, "linear|rank|full|adjacent");
    cgen->add_option("--p", gen.p, "rank for the rank model");
    cgen->add_option("--seed", gen.seed, "random seed");
    cgen->add_option("--min-cost", gen.lo, "smallest random cost");
    cgen->add_option("--max-cost", gen.hi, "largest random cost");
    cgen->add_option("--from-partition", gen.from_partition,
                     "comma list of numbers; emits the hardness construction");
    cgen->add_option("--from-ubqp", gen.from_ubqp, "JSON matrix file");
    cgen->add_option("--from-tsp", gen.from_tsp, "JSON distance matrix file");
    cgen->add_option("-o,--out", gen.out, "output path (default stdout)");

    std::string solve_file, solver = "auto", solve_out;
    double eps = 0.1;
    auto* csolve = app.add_subcommand("solve", "Solve an instance file");
    csolve->add_option("file", solve_file)->required();
    csolve->add_option("--solver", solver,
                       "auto|exact-dp|adjacent-dp|matching|fptas|oracle; auto routes "
                       "rank->exact-dp, adjacent->adjacent-dp, linear->greedy/matching, "
                       "and falls back to the capped oracle");
    csolve->add_option("--eps", eps, "approximation parameter for fptas");
    csolve->add_option("-o,--out", solve_out);

    std::string count_file, count_out;
    auto* ccount = app.add_subcommand("count", "Count the instance's tour family");
    ccount->add_option("file", count_file)->required();
    ccount->add_option("-o,--out", count_out);

    std::string verify_file, against = "oracle", verify_out;
    auto* cverify = app.add_subcommand("verify", "Cross-check the auto solver");
    cverify->add_option("file", verify_file)->required();
    cverify->add_option("--against", against);
    cverify->add_option("-o,--out", verify_out);

    std::uint64_t bench_seed = 1;
    std::string bench_out;
    auto* cbench = app.add_subcommand("bench", "Scaling benchmark (CSV)");
    cbench->add_option("--seed", bench_seed);
    cbench->add_option("-o,--out", bench_out);

    try {
        app.parse(argc, argv);
        if (*cgen) return run_gen(gen);
        if (*csolve) return run_solve(solve_file, solver, eps, solve_out);
        if (*ccount) return run_count(count_file, count_out);
        if (*cverify) return run_verify(verify_file, against, verify_out);
        if (*cbench) {
            emit(bench_csv(run_scaling_bench(bench_seed)), bench_out);
            return 0;
        }
        return 1;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
