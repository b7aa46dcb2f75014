// homlab: command-line surface for the finite homomorphism-order laboratory.
//
// Exit codes: 0 affirmative/success, 1 negative result, 2 undecided/budget,
// 3 input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "homlab/catalog.hpp"
#include "homlab/constructions.hpp"
#include "homlab/invariants.hpp"
#include "homlab/io.hpp"
#include "homlab/lab.hpp"
#include "homlab/obstructions.hpp"
#include "homlab/solver.hpp"

namespace {

using namespace homlab;
using nlohmann::json;

struct GlobalOpts {
    bool as_json = false;
    bool as_dot = false;
    long long budget_ms = 60'000;
    unsigned seed = 1;
    int threads = 1;
};

SearchOptions search_options(const GlobalOpts & g) {
    SearchOptions o;
    o.budget_ms = g.budget_ms;
    return o;
}

// Graph arguments accept either a file path or a catalog name (K4, C7,
// grotzsch, mycielski(C5), kneser(5,2), ...). Files win when both apply.
Graph resolve_graph(const std::string & spec) {
    if (std::ifstream probe(spec); probe) return load_graph_file(spec).graph;
    return catalog_get(spec);
}

json witness_json(const std::vector<int> & mapping) {
    return json(mapping);
}

json certificate_json(const NoHomCertificate & cert) {
    return json::parse(certificate_to_json(cert));
}

void print_certificate_text(const NoHomCertificate & cert) {
    std::cout << "certificate: " << to_string(cert.kind);
    if (cert.source_value) std::cout << " source=" << *cert.source_value;
    if (cert.target_value)
        std::cout << " target=" << *cert.target_value;
    else if (cert.kind == CertificateKind::odd_girth)
        std::cout << " target=none";
    std::cout << "\n";
}

void emit_graph(const Graph & g, const GlobalOpts & opts, const std::string & out_path) {
    if (! out_path.empty()) {
        save_graph_file(g, out_path);
        if (g.has_labels()) {
            std::ofstream side(out_path + ".labels.json");
            side << labels_to_json(g) << "\n";
        }
        return;
    }
    if (opts.as_dot) {
        std::cout << graph_to_dot(g);
        return;
    }
    if (opts.as_json) {
        json j = json::parse(graph_to_json(g));
        if (g.has_labels()) j["labels"] = json::parse(labels_to_json(g));
        std::cout << j.dump() << "\n";
        return;
    }
    std::cout << write_graph_text(g);
    if (g.has_labels()) std::cerr << "labels: " << labels_to_json(g) << "\n";
}

std::vector<std::string> split_list(const std::string & text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ','))
        if (! item.empty()) out.push_back(item);
    return out;
}

std::vector<int> parse_int_list(const std::string & text) {
    std::vector<int> out;
    for (auto & item : split_list(text)) {
        try {
            out.push_back(std::stoi(item));
        }
        catch (const std::exception &) {
            throw input_error("bad integer list entry '" + item + "'");
        }
    }
    return out;
}

// ---------------------------------------------------------------- gen ----

struct GenArgs {
    std::string kind;
    std::string base = "K3";
    std::string second;
    std::string gadget;
    std::string pattern;
    std::string parent_list;
    std::string block_list;
    int height = 3;
    int k = 3;
    int truncation = 9;
    int n = 4;
    int depth = 1;
    int target = 0;
    int a = 0;
    int b = 0;
    std::string out_path;
};

int run_gen(const GenArgs & args, const GlobalOpts & opts) {
    const std::string & kind = args.kind;
    if (kind == "tower") {
        OrderedPattern base(resolve_graph(args.base));
        emit_graph(tower(base, args.height).graph, opts, args.out_path);
    }
    else if (kind == "tree-of-cliques") {
        emit_graph(tree_of_cliques(args.k), opts, args.out_path);
    }
    else if (kind == "half-graph") {
        if (args.pattern.empty()) {
            emit_graph(half_graph_blowup(args.truncation), opts, args.out_path);
        }
        else {
            OrderedPattern pat(resolve_graph(args.pattern));
            HPartiteGraph hp = half_graph_blowup(args.truncation, pat);
            if (! args.out_path.empty()) {
                std::ofstream out(args.out_path);
                out << hpartite_to_json(hp) << "\n";
            }
            else
                std::cout << hpartite_to_json(hp) << "\n";
        }
    }
    else if (kind == "tree-blowup") {
        std::vector<int> parent = parse_int_list(args.parent_list);
        std::vector<Graph> blocks;
        for (auto & name : split_list(args.block_list)) blocks.push_back(resolve_graph(name));
        emit_graph(tree_blowup(parent, blocks), opts, args.out_path);
    }
    else if (kind == "binary-tree") {
        OrderedPattern pat(resolve_graph(args.pattern.empty() ? "K2" : args.pattern));
        BinaryTreeSpec spec{args.depth, pat, {}};
        int count = binary_tree_node_count(args.depth);
        for (int i = 0; i < count; ++i)
            spec.blocks.push_back(BinaryTreeBlock{complete_graph(1), 0, 0, {0}});
        emit_graph(binary_tree_graph(spec).graph, opts, args.out_path);
    }
    else if (kind == "seed-gadget") {
        Graph gadget = resolve_graph(args.gadget.empty() ? "P4" : args.gadget);
        emit_graph(replace_arcs_with_gadget(rigid_relation_seed(args.n), gadget, args.a, args.b),
            opts, args.out_path);
    }
    else if (kind == "pad-triangles") {
        emit_graph(pad_with_triangles(resolve_graph(args.base), args.target), opts, args.out_path);
    }
    else if (kind == "sum") {
        emit_graph(disjoint_sum(resolve_graph(args.base), resolve_graph(args.second)), opts,
            args.out_path);
    }
    else if (kind == "tensor") {
        emit_graph(tensor_product(resolve_graph(args.base), resolve_graph(args.second)), opts,
            args.out_path);
    }
    else if (kind == "apex") {
        emit_graph(apex_extend(resolve_graph(args.base)), opts, args.out_path);
    }
    else if (kind == "pendant-triangles") {
        emit_graph(pendant_triangles(resolve_graph(args.base)), opts, args.out_path);
    }
    else
        throw input_error("unknown generator '" + kind + "'");
    return 0;
}

// ---------------------------------------------------------------- hom ----

int run_hom(const std::string & gs, const std::string & hs, const GlobalOpts & opts) {
    Graph g = resolve_graph(gs), h = resolve_graph(hs);
    auto cs = no_hom_certificate(g, h);
    if (cs.certificate) {
        if (opts.as_json) {
            json j;
            j["status"] = "none";
            j["certificate"] = certificate_json(*cs.certificate);
            std::cout << j.dump() << "\n";
        }
        else {
            std::cout << "no homomorphism\n";
            print_certificate_text(*cs.certificate);
        }
        return 1;
    }
    auto res = find_hom(g, h, search_options(opts));
    if (res.status == HomStatus::undecided) {
        if (opts.as_json)
            std::cout << json{{"status", "undecided"}, {"nodes", res.nodes}}.dump() << "\n";
        else
            std::cout << "undecided (budget exhausted after " << res.nodes << " nodes)\n";
        return 2;
    }
    if (res.status == HomStatus::found) {
        if (opts.as_json) {
            json j;
            j["status"] = "found";
            j["witness"] = witness_json(res.witness->mapping);
            j["nodes"] = res.nodes;
            std::cout << j.dump() << "\n";
        }
        else {
            std::cout << "homomorphism found:";
            for (int t : res.witness->mapping) std::cout << " " << t;
            std::cout << "\n";
        }
        return 0;
    }
    NoHomCertificate cert{CertificateKind::exhaustive_search, {}, {}, {}};
    if (opts.as_json) {
        json j;
        j["status"] = "none";
        j["certificate"] = certificate_json(cert);
        j["nodes"] = res.nodes;
        std::cout << j.dump() << "\n";
    }
    else {
        std::cout << "no homomorphism\n";
        print_certificate_text(cert);
    }
    return 1;
}

// ------------------------------------------------------------- compare ----

json direction_json(const DirectionReport & d) {
    json j;
    j["status"] = d.status == HomStatus::found ? "found" : "none";
    if (d.witness) j["witness"] = witness_json(d.witness->mapping);
    if (d.certificate) j["certificate"] = certificate_json(*d.certificate);
    j["nodes"] = d.nodes;
    return j;
}

int run_compare(const std::string & gs, const std::string & hs, const GlobalOpts & opts) {
    Graph g = resolve_graph(gs), h = resolve_graph(hs);
    auto res = compare(g, h, search_options(opts));
    if (opts.as_json) {
        json j;
        j["order"] = to_string(res.order);
        j["forward"] = direction_json(res.forward);
        j["backward"] = direction_json(res.backward);
        std::cout << j.dump() << "\n";
    }
    else {
        std::cout << to_string(res.order) << "\n";
        auto describe = [](const char * name, const DirectionReport & d) {
            std::cout << "  " << name << ": "
                      << (d.status == HomStatus::found ? "hom found" : "no hom");
            if (d.certificate) std::cout << " (" << to_string(d.certificate->kind) << ")";
            std::cout << "\n";
        };
        describe("G -> H", res.forward);
        describe("H -> G", res.backward);
    }
    return 0;
}

// --------------------------------------------------------------- indep ----

int run_indep(const std::vector<std::string> & specs, const GlobalOpts & opts) {
    std::vector<Graph> family;
    for (auto & s : specs) family.push_back(resolve_graph(s));
    auto res = is_independent_set(family, search_options(opts));
    if (opts.as_json) {
        json j;
        j["independent"] = res.independent;
        if (res.violating_pair)
            j["violatingPair"] = {res.violating_pair->first, res.violating_pair->second};
        std::cout << j.dump() << "\n";
    }
    else if (res.independent)
        std::cout << "independent\n";
    else
        std::cout << "not independent: members " << res.violating_pair->first << " and "
                  << res.violating_pair->second << " are comparable\n";
    return res.independent ? 0 : 1;
}

// --------------------------------------------------------------- rigid ----

int run_rigid(const std::string & gs, const GlobalOpts & opts) {
    Graph g = resolve_graph(gs);
    auto res = is_rigid(g, search_options(opts));
    if (opts.as_json) {
        json j;
        j["rigid"] = res.rigid;
        if (res.counterexample) j["counterexample"] = witness_json(res.counterexample->mapping);
        std::cout << j.dump() << "\n";
    }
    else if (res.rigid)
        std::cout << "rigid\n";
    else {
        std::cout << "not rigid; non-identity endomorphism:";
        for (int t : res.counterexample->mapping) std::cout << " " << t;
        std::cout << "\n";
    }
    return res.rigid ? 0 : 1;
}

// ---------------------------------------------------------------- core ----

int run_core(const std::string & gs, const GlobalOpts & opts, const std::string & out_path) {
    Graph c = core(resolve_graph(gs), search_options(opts));
    emit_graph(c, opts, out_path);
    return 0;
}

// ---------------------------------------------------------------- rank ----

int run_rank(const std::string & kind, const std::string & gs, const std::string & pattern,
    int cutoff, const GlobalOpts & opts) {
    Graph g = resolve_graph(gs);
    if (kind == "clique") {
        int v = clique_rank(g).value;
        if (opts.as_json)
            std::cout << json{{"rank", v}}.dump() << "\n";
        else
            std::cout << "clique rank: " << v << "\n";
        return 0;
    }
    if (kind != "h") throw input_error("rank kind must be 'clique' or 'h'");
    if (pattern.empty()) throw input_error("rank h needs --pattern");
    OrderedPattern pat(resolve_graph(pattern));
    auto res = h_rank(g, pat, cutoff);
    if (opts.as_json) {
        json j;
        j["unbounded"] = res.unbounded;
        if (res.unbounded)
            j["witness"] = witness_json(*res.witness);
        else
            j["rank"] = res.value;
        std::cout << j.dump() << "\n";
    }
    else if (res.unbounded)
        std::cout << "h-rank: unbounded (pattern maps into the graph)\n";
    else
        std::cout << "h-rank: " << res.value << "\n";
    return 0;
}

// -------------------------------------------------------------- certify ----

int run_certify(const std::string & gs, const std::string & hs, const std::string & pattern,
    const GlobalOpts & opts) {
    Graph g = resolve_graph(gs), h = resolve_graph(hs);
    std::optional<OrderedPattern> pat;
    if (! pattern.empty()) pat.emplace(resolve_graph(pattern));
    auto cs = no_hom_certificate(g, h, pat ? &*pat : nullptr);
    if (opts.as_json) {
        json j;
        if (cs.certificate) j["certificate"] = certificate_json(*cs.certificate);
        j["skippedChecks"] = cs.skipped_checks;
        std::cout << j.dump() << "\n";
    }
    else if (cs.certificate)
        print_certificate_text(*cs.certificate);
    else
        std::cout << "no certificate applies\n";
    return cs.certificate ? 0 : 1;
}

// -------------------------------------------------------------- catalog ----

json entry_json(const CatalogEntry & e) {
    json j;
    j["name"] = e.name;
    j["n"] = e.graph.vertex_count();
    j["m"] = e.graph.edge_count();
    j["chromatic"] = e.chromatic;
    if (e.odd_girth)
        j["oddGirth"] = *e.odd_girth;
    else
        j["oddGirth"] = nullptr;
    j["cliqueNumber"] = e.clique_number;
    j["triangleFree"] = e.triangle_free;
    return j;
}

int run_catalog(const std::string & action, const std::string & name, const GlobalOpts & opts,
    const std::string & out_path) {
    if (action == "list") {
        if (opts.as_json) {
            json j = json::array();
            for (auto & e : catalog_entries()) j.push_back(entry_json(e));
            std::cout << j.dump() << "\n";
        }
        else
            for (auto & e : catalog_entries())
                std::cout << e.name << ": n=" << e.graph.vertex_count()
                          << " m=" << e.graph.edge_count() << " chi=" << e.chromatic
                          << " omega=" << e.clique_number << "\n";
        return 0;
    }
    if (action == "get") {
        emit_graph(catalog_get(name), opts, out_path);
        return 0;
    }
    if (action == "verify") {
        bool ok = true;
        for (auto & e : catalog_entries()) {
            auto inv = graph_invariants(e.graph, std::max(e.graph.vertex_count(), 16));
            bool entry_ok = inv.chromatic == e.chromatic && inv.odd_girth == e.odd_girth
                && inv.clique_number == e.clique_number
                && (inv.clique_number < 3) == e.triangle_free;
            if (! entry_ok) {
                ok = false;
                std::cout << e.name << ": MISMATCH\n";
            }
            else if (! opts.as_json)
                std::cout << e.name << ": ok\n";
        }
        if (opts.as_json) std::cout << json{{"verified", ok}}.dump() << "\n";
        return ok ? 0 : 1;
    }
    throw input_error("catalog action must be list, get or verify");
}

// ----------------------------------------------------------------- lab ----

json trace_json(const std::vector<CandidateTrace> & trace) {
    json j = json::array();
    for (auto & t : trace) j.push_back({{"candidate", t.name}, {"order", to_string(t.order)}});
    return j;
}

int run_lab_partner(const std::string & gs, const GlobalOpts & opts) {
    auto rep = partner_search(resolve_graph(gs), search_options(opts));
    if (opts.as_json) {
        json j;
        j["rejectedBipartite"] = rep.rejected_bipartite;
        if (! rep.note.empty()) j["note"] = rep.note;
        if (rep.partner_name) {
            j["partner"] = *rep.partner_name;
            j["partnerGraph"] = json::parse(graph_to_json(*rep.partner));
        }
        j["trace"] = trace_json(rep.trace);
        std::cout << j.dump() << "\n";
    }
    else {
        for (auto & t : rep.trace)
            std::cout << "  " << t.name << ": " << to_string(t.order) << "\n";
        if (rep.partner_name)
            std::cout << "partner: " << *rep.partner_name << "\n";
        else
            std::cout << "no partner found" << (rep.note.empty() ? "" : ": " + rep.note) << "\n";
    }
    if (rep.rejected_bipartite) return 3;
    return rep.partner ? 0 : 1;
}

int run_lab_extend(const std::vector<std::string> & specs, int alpha, const GlobalOpts & opts) {
    std::vector<Graph> family;
    for (auto & s : specs) family.push_back(resolve_graph(s));
    auto rep = extend_independent(family, alpha, search_options(opts));
    if (opts.as_json) {
        json j;
        if (rep.extension_name) {
            j["extension"] = *rep.extension_name;
            j["extensionGraph"] = json::parse(graph_to_json(*rep.extension));
        }
        if (rep.violating_pair)
            j["violatingPair"] = {rep.violating_pair->first, rep.violating_pair->second};
        j["trace"] = trace_json(rep.trace);
        std::cout << j.dump() << "\n";
    }
    else {
        for (auto & t : rep.trace)
            std::cout << "  " << t.name << ": " << to_string(t.order) << "\n";
        if (rep.violating_pair)
            std::cout << "family is not an antichain: members " << rep.violating_pair->first
                      << " and " << rep.violating_pair->second << " are comparable\n";
        else if (rep.extension_name)
            std::cout << "extension: " << *rep.extension_name << "\n";
        else
            std::cout << "no extension found\n";
    }
    return rep.extension ? 0 : 1;
}

int run_lab_gap(const std::string & gs, const std::string & hs, const GlobalOpts & opts) {
    auto probe = gap_probe(resolve_graph(gs), resolve_graph(hs), search_options(opts));
    if (opts.as_json) {
        json j;
        if (probe.witness_name) {
            j["witness"] = *probe.witness_name;
            j["witnessGraph"] = json::parse(graph_to_json(*probe.witness));
        }
        j["trace"] = trace_json(probe.trace);
        std::cout << j.dump() << "\n";
    }
    else if (probe.witness_name)
        std::cout << "strictly intermediate: " << *probe.witness_name << "\n";
    else
        std::cout << "no intermediate graph found (no claim of a gap)\n";
    return probe.witness ? 0 : 1;
}

int run_lab_rigid_demo(const GlobalOpts & opts) {
    auto demo = sandwich_demo(search_options(opts), opts.seed);
    if (opts.as_json) {
        json j;
        j["rigid"] = demo.rigid;
        j["partSize"] = demo.part_size;
        j["vertices"] = demo.sandwich.vertex_count();
        j["edges"] = demo.sandwich.edge_count();
        std::cout << j.dump() << "\n";
    }
    else
        std::cout << "sandwich on 3 x " << demo.part_size << " vertices, "
                  << demo.sandwich.edge_count() << " edges: "
                  << (demo.rigid ? "rigid" : "NOT rigid") << "\n";
    return demo.rigid ? 0 : 1;
}

// ---------------------------------------------------------------- bench ----

struct BenchInstance {
    std::string name;
    Graph g;
    Graph h;
};

std::vector<BenchInstance> bench_suite(const std::string & suite) {
    std::vector<BenchInstance> out;
    if (suite == "tower") {
        for (int k = 2; k <= 4; ++k)
            for (int j = 2; j <= 4; ++j)
                out.push_back({"tree_of_cliques(" + std::to_string(k) + ")->K" + std::to_string(j),
                    tree_of_cliques(k), complete_graph(j)});
        out.push_back({"tree_of_cliques(4)->grotzsch", tree_of_cliques(4), grotzsch_graph()});
        out.push_back({"grotzsch->tree_of_cliques(4)", grotzsch_graph(), tree_of_cliques(4)});
        return out;
    }
    if (suite == "catalog") {
        auto entries = catalog_entries();
        for (auto & a : entries)
            for (auto & b : entries)
                if (a.name != b.name && a.graph.vertex_count() <= 11
                    && b.graph.vertex_count() <= 11)
                    out.push_back({a.name + "->" + b.name, a.graph, b.graph});
        return out;
    }
    throw input_error("unknown bench suite '" + suite + "' (try tower or catalog)");
}

// One pruning strategy = one obstruction tried before plain search.
std::optional<NoHomCertificate> strategy_certificate(const std::string & strategy, const Graph & g,
    const Graph & h) {
    if (strategy == "plain") return std::nullopt;
    if (strategy == "+oddGirth") {
        auto og = odd_girth(g), oh = odd_girth(h);
        if (og && (! oh || *oh > *og))
            return NoHomCertificate{CertificateKind::odd_girth, *og, oh, {}};
        return std::nullopt;
    }
    if (strategy == "+chromatic") {
        try {
            int cg = chromatic_number(g), ch = chromatic_number(h);
            if (cg > ch) return NoHomCertificate{CertificateKind::chromatic, cg, ch, {}};
        }
        catch (const cutoff_error &) {
        }
        return std::nullopt;
    }
    if (strategy == "+clique") {
        int wg = clique_number(g), wh = clique_number(h);
        if (wg > wh) return NoHomCertificate{CertificateKind::clique, wg, wh, {}};
        return std::nullopt;
    }
    if (strategy == "+rank") {
        int rg = clique_rank(g).value, rh = clique_rank(h).value;
        if (rg > rh)
            return NoHomCertificate{CertificateKind::rank, rg, rh, complete_graph(rg)};
        return std::nullopt;
    }
    throw input_error("unknown strategy '" + strategy + "'");
}

int run_bench(const std::string & suite, const GlobalOpts & opts, const std::string & out_path) {
    static const std::vector<std::string> strategies = {"plain", "+oddGirth", "+chromatic",
        "+clique", "+rank"};
    auto instances = bench_suite(suite);
    std::ostringstream csv;
    csv << "instance,strategy,verdict,nodes,millis\n";
    for (auto & inst : instances) {
        std::optional<std::string> agreed;
        for (auto & strat : strategies) {
            auto start = std::chrono::steady_clock::now();
            std::string verdict;
            unsigned long long nodes = 0;
            if (auto cert = strategy_certificate(strat, inst.g, inst.h)) {
                (void)cert;
                verdict = "no";
            }
            else {
                auto res = find_hom(inst.g, inst.h, search_options(opts));
                nodes = res.nodes;
                verdict = res.status == HomStatus::found  ? "yes"
                    : res.status == HomStatus::none ? "no"
                                                    : "undecided";
            }
            auto millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                              .count();
            csv << inst.name << "," << strat << "," << verdict << "," << nodes << "," << millis
                << "\n";
            if (verdict != "undecided") {
                if (agreed && *agreed != verdict) {
                    std::cerr << "soundness failure: " << inst.name << " verdict '" << verdict
                              << "' under " << strat << " disagrees with '" << *agreed << "'\n";
                    return 1;
                }
                agreed = verdict;
            }
        }
    }
    if (! out_path.empty()) {
        std::ofstream out(out_path);
        out << csv.str();
    }
    else
        std::cout << csv.str();
    return 0;
}

}

int main(int argc, char ** argv) {
    CLI::App app{"finite laboratory for the homomorphism order on graphs"};
    app.require_subcommand(1);

    GlobalOpts opts;
    app.add_flag("--json", opts.as_json, "machine-readable JSON output");
    app.add_flag("--dot", opts.as_dot, "DOT output for graph-producing commands");
    app.add_option("--budget-ms", opts.budget_ms, "wall-clock budget per search (<=0: unlimited)");
    app.add_option("--seed", opts.seed, "seed for randomized searches");
    app.add_option("--threads", opts.threads, "worker threads (output unaffected)");

    GenArgs gen_args;
    auto * gen = app.add_subcommand("gen", "construct a graph");
    gen->add_option("kind", gen_args.kind,
           "tower|tree-of-cliques|half-graph|tree-blowup|binary-tree|seed-gadget|"
           "pad-triangles|sum|tensor|apex|pendant-triangles")
        ->required();
    gen->add_option("--base", gen_args.base, "base graph (file or catalog name)");
    gen->add_option("--with", gen_args.second, "second graph for sum/tensor");
    gen->add_option("--gadget", gen_args.gadget, "gadget graph for seed-gadget");
    gen->add_option("--pattern", gen_args.pattern, "pattern graph");
    gen->add_option("--parent", gen_args.parent_list, "tree-blowup parents, e.g. -1,0,0");
    gen->add_option("--blocks", gen_args.block_list, "tree-blowup blocks, e.g. K2,K3,K1");
    gen->add_option("--height", gen_args.height, "tower height");
    gen->add_option("--k", gen_args.k, "clique size for tree-of-cliques");
    gen->add_option("--truncation", gen_args.truncation, "half-graph truncation N");
    gen->add_option("--n", gen_args.n, "seed relation size");
    gen->add_option("--depth", gen_args.depth, "binary tree depth");
    gen->add_option("--target", gen_args.target, "target size for pad-triangles");
    gen->add_option("--a", gen_args.a, "gadget attachment vertex a");
    gen->add_option("--b", gen_args.b, "gadget attachment vertex b");
    gen->add_option("-o,--out", gen_args.out_path, "output file (labels go to a .labels.json sidecar)");

    std::string arg_g, arg_h, arg_pattern, arg_kind, arg_name, arg_out, arg_suite = "tower";
    std::vector<std::string> arg_family;
    int arg_cutoff = 10, arg_alpha = 2;

    auto * hom = app.add_subcommand("hom", "search for a homomorphism G -> H");
    hom->add_option("G", arg_g)->required();
    hom->add_option("H", arg_h)->required();

    auto * cmp = app.add_subcommand("compare", "classify the pair in the homomorphism order");
    cmp->add_option("G", arg_g)->required();
    cmp->add_option("H", arg_h)->required();

    auto * indep = app.add_subcommand("indep", "check a family for pairwise independence");
    indep->add_option("graphs", arg_family)->required()->expected(-2);

    auto * rigid = app.add_subcommand("rigid", "check whether the only endomorphism is the identity");
    rigid->add_option("G", arg_g)->required();

    auto * core_cmd = app.add_subcommand("core", "compute the core");
    core_cmd->add_option("G", arg_g)->required();
    core_cmd->add_option("-o,--out", arg_out, "output file");

    auto * rank = app.add_subcommand("rank", "clique rank or pattern h-rank");
    rank->add_option("kind", arg_kind, "clique|h")->required();
    rank->add_option("G", arg_g)->required();
    rank->add_option("--pattern", arg_pattern, "ordered pattern for h-rank");
    rank->add_option("--cutoff", arg_cutoff, "h-rank depth cutoff");

    auto * certify = app.add_subcommand("certify", "search-free non-homomorphism certificate");
    certify->add_option("G", arg_g)->required();
    certify->add_option("H", arg_h)->required();
    certify->add_option("--pattern", arg_pattern, "pattern for the rank certificate");

    auto * catalog = app.add_subcommand("catalog", "list, fetch or verify the catalog");
    catalog->add_option("action", arg_kind, "list|get|verify")->required();
    catalog->add_option("name", arg_name, "entry name for get");
    catalog->add_option("-o,--out", arg_out, "output file for get");

    auto * lab = app.add_subcommand("lab", "order-structure experiments");
    lab->add_option("experiment", arg_kind, "partner|extend|gap|rigid-demo")->required();
    lab->add_option("graphs", arg_family, "experiment inputs");
    lab->add_option("--alpha", arg_alpha, "tower height for extend");

    auto * bench = app.add_subcommand("bench", "pruning-strategy benchmark, CSV output");
    bench->add_option("--suite", arg_suite, "tower|catalog");
    bench->add_option("-o,--out", arg_out, "CSV output file");

    for (auto * sub : app.get_subcommands([](const CLI::App *) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    try {
        if (gen->parsed()) return run_gen(gen_args, opts);
        if (hom->parsed()) return run_hom(arg_g, arg_h, opts);
        if (cmp->parsed()) return run_compare(arg_g, arg_h, opts);
        if (indep->parsed()) return run_indep(arg_family, opts);
        if (rigid->parsed()) return run_rigid(arg_g, opts);
        if (core_cmd->parsed()) return run_core(arg_g, opts, arg_out);
        if (rank->parsed()) return run_rank(arg_kind, arg_g, arg_pattern, arg_cutoff, opts);
        if (certify->parsed()) return run_certify(arg_g, arg_h, arg_pattern, opts);
        if (catalog->parsed()) return run_catalog(arg_kind, arg_name, opts, arg_out);
        if (lab->parsed()) {
            if (arg_kind == "partner") {
                if (arg_family.size() != 1) throw homlab::input_error("lab partner needs one graph");
                return run_lab_partner(arg_family[0], opts);
            }
            if (arg_kind == "extend") {
                if (arg_family.empty()) throw homlab::input_error("lab extend needs a family");
                return run_lab_extend(arg_family, arg_alpha, opts);
            }
            if (arg_kind == "gap") {
                if (arg_family.size() != 2) throw homlab::input_error("lab gap needs two graphs");
                return run_lab_gap(arg_family[0], arg_family[1], opts);
            }
            if (arg_kind == "rigid-demo") return run_lab_rigid_demo(opts);
            throw homlab::input_error("unknown lab experiment '" + arg_kind + "'");
        }
        if (bench->parsed()) return run_bench(arg_suite, opts, arg_out);
    }
    catch (const homlab::undecided_error & e) {
        std::cerr << "undecided: " << e.what() << "\n";
        return 2;
    }
    catch (const homlab::cutoff_error & e) {
        std::cerr << "undecided: " << e.what() << "\n";
        return 2;
    }
    catch (const homlab::input_error & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}
