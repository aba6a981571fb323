// Command-line surface: refinement pipelines, instance generators, verifiers
// and the benchmark harness.
//
// Exit codes: 0 success, 1 failed verification, 2 parse/usage error,
// 3 contract violation.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cref/bisim.hpp"
#include "cref/individualise.hpp"
#include "cref/io.hpp"
#include "cref/lowerbound.hpp"
#include "cref/oracle.hpp"
#include "cref/random.hpp"
#include "cref/reductions.hpp"
#include "cref/refine.hpp"

namespace {

using namespace cref;

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw parse_error("cannot open output file '" + out_path + "'");
    out << text;
}

WorklistPolicy parse_policy(const std::string& name) {
    if (name == "stack")
        return WorklistPolicy::stack;
    if (name == "queue")
        return WorklistPolicy::queue;
    throw parse_error("unknown policy '" + name + "'");
}

SelectorPolicy parse_selector(const std::string& name) {
    if (name == "first")
        return SelectorPolicy::first_min_colour;
    if (name == "smallest")
        return SelectorPolicy::smallest_class;
    if (name == "largest")
        return SelectorPolicy::largest_class;
    throw parse_error("unknown selector '" + name + "'");
}

struct RefineArgs {
    std::string input;
    std::string out;
    std::string ledger;
    std::string policy = "stack";
    std::string selector = "first";
    bool json = false;
};

void add_refine_options(CLI::App* cmd, RefineArgs& args, bool with_selector) {
    cmd->add_option("input", args.input, "graph file")->required();
    cmd->add_option("--out", args.out, "write the colouring here instead of stdout");
    cmd->add_option("--ledger", args.ledger, "write the CSV cost ledger to this file");
    cmd->add_option("--policy", args.policy, "worklist policy: stack|queue");
    if (with_selector)
        cmd->add_option("--selector", args.selector,
                        "individualisation selector: first|smallest|largest");
    cmd->add_flag("--json", args.json, "emit the colouring as a JSON document");
}

void emit_colouring(const Colouring& beta, const RefineArgs& args) {
    write_output(args.json ? format_colouring_json(beta) : format_colouring(beta), args.out);
}

void emit_ledger(const CostLedger& ledger, const RefineArgs& args) {
    if (!args.ledger.empty()) {
        std::ofstream out(args.ledger, std::ios::binary);
        if (!out)
            throw parse_error("cannot open ledger file '" + args.ledger + "'");
        out << ledger.to_csv();
    }
}

int run_refine(const RefineArgs& args, GraphKind expected, const char* what) {
    const ParsedGraph parsed = parse_graph_file(args.input);
    if (parsed.kind != expected)
        throw parse_error(std::string(what) + " expects a file of the matching kind");
    const WorklistPolicy policy = parse_policy(args.policy);
    switch (expected) {
    case GraphKind::digraph: {
        const RefineResult result = refine(*parsed.digraph, parsed.colouring,
                                           RefineOptions{policy});
        emit_colouring(result.beta, args);
        emit_ledger(result.ledger, args);
        break;
    }
    case GraphKind::graph: {
        const Digraph dg = doubled(*parsed.undirected);
        const RefineResult result = refine(dg, parsed.colouring, RefineOptions{policy});
        emit_colouring(result.beta, args);
        emit_ledger(result.ledger, args);
        break;
    }
    default:
        break;
    }
    return 0;
}

// Shared tail of the reduction pipelines: refine the reduced digraph, emit
// the recompressed colouring on the original vertices and the engine ledger.
void run_reduced(const EdgeColouredDigraph& g, int originals, const RefineArgs& args) {
    const EdgeColouredReduction red = reduce_edge_coloured(g);
    const RefineResult result =
        refine(red.graph, red.alpha, RefineOptions{parse_policy(args.policy)});
    emit_colouring(restrict_and_compress(result.beta, originals), args);
    emit_ledger(result.ledger, args);
}

int run_refine_ec(const RefineArgs& args) {
    const ParsedGraph parsed = parse_graph_file(args.input);
    if (parsed.kind != GraphKind::ecdigraph)
        throw parse_error("refine-ec expects an ecdigraph file");
    if (parsed.had_colour_lines)
        throw parse_error("refine-ec does not accept vertex colours; the reduction fixes them");
    run_reduced(*parsed.edge_coloured, parsed.edge_coloured->vertex_count(), args);
    return 0;
}

int run_refine_bistable(const RefineArgs& args) {
    const ParsedGraph parsed = parse_graph_file(args.input);
    if (parsed.kind != GraphKind::digraph)
        throw parse_error("refine-bistable expects a digraph file");
    if (parsed.had_colour_lines)
        throw parse_error("refine-bistable does not accept vertex colours");
    run_reduced(reduce_bistable(*parsed.digraph), parsed.digraph->vertex_count(), args);
    return 0;
}

int run_branch(const RefineArgs& args) {
    const ParsedGraph parsed = parse_graph_file(args.input);
    if (parsed.kind != GraphKind::digraph)
        throw parse_error("branch expects a digraph file");
    BranchOptions options;
    options.selector = parse_selector(args.selector);
    options.policy = parse_policy(args.policy);
    const BranchTrace trace = branch_refine(*parsed.digraph, parsed.colouring, options);
    std::string text;
    for (const auto& step : trace.steps)
        text += "i " + std::to_string(step.vertex + 1) + " " +
                std::to_string(step.colours_before) + " " +
                std::to_string(step.colours_after) + "\n";
    text += args.json ? format_colouring_json(trace.final_colouring)
                      : format_colouring(trace.final_colouring);
    write_output(text, args.out);
    emit_ledger(trace.ledger, args);
    return 0;
}

int run_bisim(const RefineArgs& args) {
    const ParsedGraph parsed = parse_graph_file(args.input);
    if (parsed.kind != GraphKind::ts)
        throw parse_error("bisim expects a ts file");
    const Colouring classes = colouring_of(bisimilarity_fast(*parsed.ts));
    emit_colouring(classes, args);
    return 0;
}

int run_bench(const std::string& family, int kmin, int kmax, const std::string& policy_name,
              const std::string& out_path) {
    if (family != "gk")
        throw parse_error("unknown bench family '" + family + "'");
    const WorklistPolicy policy = parse_policy(policy_name);
    std::string csv = "k,n,m,cost_units,new_colours,millis\n";
    for (int k = kmin; k <= kmax; ++k) {
        const LowerBoundInstance inst = gen_gk(k);
        const auto t0 = std::chrono::steady_clock::now();
        const RefineResult result = refine(doubled(inst.graph),
                                           Colouring::unit(inst.graph.vertex_count()),
                                           RefineOptions{policy});
        const auto t1 = std::chrono::steady_clock::now();
        const auto millis =
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        csv += std::to_string(k) + "," + std::to_string(inst.graph.vertex_count()) + "," +
               std::to_string(inst.graph.edge_count()) + "," +
               std::to_string(result.ledger.cost_units()) + "," +
               std::to_string(result.ledger.total_new_colours()) + "," +
               std::to_string(millis) + "\n";
    }
    write_output(csv, out_path);
    return 0;
}

int run_verify_gadget(int level) {
    const GadgetSplitReport report = verify_gadget_splitting(level);
    int printed = 0;
    for (const auto& c : report.cases)
        if (!c.ok && printed++ < 3)
            std::cout << "FAIL case with " << c.psi.size() << " blocks: agrees="
                      << c.agrees_on_b << " out=" << c.out_terminals_distinguished
                      << " pairs=" << c.all_pairs_distinguished << "\n";
    std::cout << (report.all_ok ? "PASS" : "FAIL") << " gadget level " << level << ": "
              << report.cases.size() << " in-terminal partitions checked\n";
    return report.all_ok ? 0 : 1;
}

int run_verify_gk(int k) {
    const LowerBoundInstance inst = gen_gk(k);
    const GkAudit audit = audit_gk(inst);
    std::cout << (audit.ok ? "PASS" : "FAIL") << " component audit: n="
              << inst.graph.vertex_count() << " m=" << inst.graph.edge_count() << "\n";
    const DiscreteXReport report = verify_discrete_on_x(k);
    std::cout << (report.x_discrete ? "PASS" : "FAIL") << " coarsest stable partition discrete on X\n";
    std::cout << (report.all_agree_tau ? "PASS" : "FAIL")
              << " pi agrees with tau on the middle layers (" << report.samples_checked
              << " samples)\n";
    std::cout << (report.all_refined_by_omega ? "PASS" : "FAIL")
              << " coarsest stable partition refines every sampled pi\n";
    return audit.ok && report.ok ? 0 : 1;
}

int run_verify_recurrence(int k) {
    const RecurrenceReport report = verify_cost_recurrence(k);
    std::cout << (report.ops_match_prediction ? "PASS" : "FAIL")
              << " effective operations match the predicted block pairs ("
              << report.partitions_checked << " partitions)\n";
    std::cout << (report.costs_match ? "PASS" : "FAIL") << " operation costs match k^2 2^(k-l-1)\n";
    std::cout << (report.both_choices_equal ? "PASS" : "FAIL")
              << " both refining choices give the same partition\n";
    std::cout << (report.results_ordered ? "PASS" : "FAIL")
              << " successor partitions refine the operation results\n";
    std::cout << (report.dp_total >= report.bound ? "PASS" : "FAIL") << " lattice total "
              << report.dp_total << " >= " << report.bound << "\n";
    if (!report.ok && !report.first_failure.empty())
        std::cout << "first failure: " << report.first_failure << "\n";
    return report.ok ? 0 : 1;
}

int run_verify_oracle(int trials, int nmax, std::uint64_t seed) {
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        const int n = rng.range(1, nmax);
        constexpr double densities[] = {0.1, 0.3, 0.5};
        const double density = densities[rng.below(3)];
        const Digraph g = random_digraph(rng, n, density);
        const Colouring alpha = random_colouring(rng, n, 5);
        for (WorklistPolicy policy : {WorklistPolicy::stack, WorklistPolicy::queue}) {
            const RefineResult result = refine(g, alpha, RefineOptions{policy});
            const Partition expected = naive_coarsest_stable(g, partition_of(alpha));
            if (!(partition_of(result.beta) == expected)) {
                std::cout << "FAIL trial " << t << " (n=" << n << ", policy "
                          << (policy == WorklistPolicy::stack ? "stack" : "queue")
                          << "): engine disagrees with the naive fixpoint\n"
                          << format_graph(g);
                return 1;
            }
        }
    }
    std::cout << "PASS oracle equivalence: " << trials << " trials\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"canonical colour refinement toolkit"};
    app.require_subcommand(1);

    RefineArgs refine_args;
    auto* cmd_refine = app.add_subcommand("refine", "coarsest stable colouring of a digraph");
    add_refine_options(cmd_refine, refine_args, false);
    auto* cmd_refine_und =
        app.add_subcommand("refine-undirected", "coarsest stable colouring of a graph");
    add_refine_options(cmd_refine_und, refine_args, false);
    auto* cmd_refine_ec =
        app.add_subcommand("refine-ec", "coarsest edge-colour stable colouring");
    add_refine_options(cmd_refine_ec, refine_args, false);
    auto* cmd_refine_bi =
        app.add_subcommand("refine-bistable", "coarsest bi-stable colouring of a digraph");
    add_refine_options(cmd_refine_bi, refine_args, false);
    auto* cmd_branch =
        app.add_subcommand("branch", "one individualisation-refinement branch");
    add_refine_options(cmd_branch, refine_args, true);
    auto* cmd_bisim = app.add_subcommand("bisim", "coarsest bisimulation of a transition system");
    add_refine_options(cmd_bisim, refine_args, false);

    auto* cmd_gen = app.add_subcommand("gen", "write an instance file");
    std::string gen_what;
    int gen_k = 2, gen_level = 1;
    std::string gen_out;
    cmd_gen->add_option("what", gen_what, "gk|sk|and")->required();
    cmd_gen->add_option("--k", gen_k, "instance parameter k");
    cmd_gen->add_option("--level", gen_level, "gadget level");
    cmd_gen->add_option("--out", gen_out, "output file (default stdout)");

    auto* cmd_bench = app.add_subcommand("bench", "refinement cost over an instance family");
    std::string bench_family = "gk", bench_policy = "stack", bench_out;
    int bench_kmin = 4, bench_kmax = 8;
    cmd_bench->add_option("--family", bench_family, "instance family (gk)");
    cmd_bench->add_option("--kmin", bench_kmin, "smallest k");
    cmd_bench->add_option("--kmax", bench_kmax, "largest k");
    cmd_bench->add_option("--policy", bench_policy, "worklist policy: stack|queue");
    cmd_bench->add_option("--out", bench_out, "output file (default stdout)");

    auto* cmd_verify = app.add_subcommand("verify", "machine checks; exit 0 iff all pass");
    std::string verify_what;
    int verify_level = 2, verify_k = 3, verify_trials = 100, verify_nmax = 30;
    std::uint64_t verify_seed = 1;
    cmd_verify->add_option("what", verify_what, "gadget|gk|recurrence|oracle")->required();
    cmd_verify->add_option("--level", verify_level, "gadget level");
    cmd_verify->add_option("--k", verify_k, "instance parameter k");
    cmd_verify->add_option("--trials", verify_trials, "number of random trials");
    cmd_verify->add_option("--nmax", verify_nmax, "largest random instance size");
    cmd_verify->add_option("--seed", verify_seed, "PRNG seed (mt19937-64)");

    try {
        app.parse(argc, argv);

        if (cmd_refine->parsed())
            return run_refine(refine_args, GraphKind::digraph, "refine");
        if (cmd_refine_und->parsed())
            return run_refine(refine_args, GraphKind::graph, "refine-undirected");
        if (cmd_refine_ec->parsed())
            return run_refine_ec(refine_args);
        if (cmd_refine_bi->parsed())
            return run_refine_bistable(refine_args);
        if (cmd_branch->parsed())
            return run_branch(refine_args);
        if (cmd_bisim->parsed())
            return run_bisim(refine_args);

        if (cmd_gen->parsed()) {
            std::string text;
            if (gen_what == "gk" || gen_what == "sk") {
                if (gen_k < 2)
                    throw parse_error("--k must be at least 2");
                text = gen_what == "gk" ? format_graph(gen_gk(gen_k).graph)
                                        : format_graph(gen_sk(gen_k));
            } else if (gen_what == "and") {
                if (gen_level < 1)
                    throw parse_error("--level must be at least 1");
                text = format_graph(gen_and_gadget(gen_level).graph);
            } else {
                throw parse_error("unknown generator '" + gen_what + "'");
            }
            write_output(text, gen_out);
            return 0;
        }
        if (cmd_bench->parsed()) {
            if (bench_kmin < 2)
                throw parse_error("--kmin must be at least 2");
            return run_bench(bench_family, bench_kmin, bench_kmax, bench_policy, bench_out);
        }
        if (cmd_verify->parsed()) {
            if (verify_what == "gadget")
                return run_verify_gadget(verify_level);
            if (verify_what == "gk")
                return run_verify_gk(verify_k);
            if (verify_what == "recurrence")
                return run_verify_recurrence(verify_k);
            if (verify_what == "oracle")
                return run_verify_oracle(verify_trials, verify_nmax, verify_seed);
            throw parse_error("unknown verification '" + verify_what + "'");
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const contract_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
