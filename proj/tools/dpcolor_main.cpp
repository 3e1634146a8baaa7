// dpcolor: generalized DP-coloring workbench.
//
// Exit codes: 0 = holds / colorable / value computed,
//             1 = violated / uncolorable / bad witness found,
//             2 = errors (parse failures, precondition violations, limits).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "dpcolor/chromatic.hpp"
#include "dpcolor/configuration.hpp"
#include "dpcolor/constructible.hpp"
#include "dpcolor/corpus.hpp"
#include "dpcolor/errors.hpp"
#include "dpcolor/graph_io.hpp"
#include "dpcolor/json_io.hpp"
#include "dpcolor/property.hpp"
#include "dpcolor/sweeps.hpp"
#include "dpcolor/theorems.hpp"

namespace {

using dpcolor::json;

constexpr const char* kSchema = "dpcolor/1";

struct Options {
    std::string property = "O";
    int k = -1;
    int max_order = -1;
    int max_fiber = -1;
    int workers = 1;
    std::string format = "json";
    bool no_witness = false;
};

dpcolor::Limits make_limits(const Options& opt) {
    dpcolor::Limits lim;
    if (opt.max_order > 0) {
        lim.max_order = opt.max_order;
        lim.max_cover_order = opt.max_order;
    }
    if (opt.max_fiber > 0) lim.max_fiber = opt.max_fiber;
    lim.workers = opt.workers;
    if (const char* env = std::getenv("DPCOLOR_MAX_WORK")) {
        try {
            lim.budget = std::stoull(env);
        } catch (...) {
            throw dpcolor::ParseError("DPCOLOR_MAX_WORK must be an integer");
        }
    }
    return lim;
}

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw dpcolor::ParseError("cannot open file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

dpcolor::Graph load_graph(const std::string& path) { return dpcolor::parse_graph(read_file(path)); }

json load_json(const std::string& path) {
    try {
        return json::parse(read_file(path));
    } catch (const json::exception& e) {
        throw dpcolor::ParseError("JSON syntax error in '" + path + "': " + e.what());
    }
}

void print_table(const json& j, const std::string& prefix, std::ostream& os) {
    if (j.is_object()) {
        for (const auto& [key, val] : j.items())
            print_table(val, prefix.empty() ? key : prefix + "." + key, os);
    } else if (j.is_array()) {
        int i = 0;
        for (const auto& val : j)
            print_table(val, prefix + "[" + std::to_string(i++) + "]", os);
        if (j.empty()) os << prefix << " = []\n";
    } else {
        os << prefix << " = " << j.dump() << "\n";
    }
}

int emit(json body, const Options& opt, int exit_code) {
    body["schema"] = kSchema;
    if (opt.no_witness) {
        for (const char* key : {"witness", "transversal", "coloring", "bad_lists", "bad_cover",
                                "certificate"})
            body.erase(key);
    }
    if (opt.format == "table")
        print_table(body, "", std::cout);
    else
        std::cout << body.dump(2) << "\n";
    return exit_code;
}

json transversal_json(const dpcolor::Transversal& t) {
    json arr = json::array();
    for (int i : t) arr.push_back(i);
    return arr;
}

int run_solve_config(const std::string& path, const Options& opt) {
    dpcolor::Configuration cfg = dpcolor::configuration_from_json(load_json(path));
    auto t = dpcolor::solve(cfg);
    json out;
    out["command"] = "solve-config";
    out["colorable"] = t.has_value();
    if (t) out["transversal"] = transversal_json(*t);
    dpcolor::Configuration norm = dpcolor::normalize(cfg);
    if (dpcolor::is_connected(cfg.cover.base) && cfg.cover.base.n > 0) {
        auto cert = dpcolor::is_constructible(norm);
        out["constructible"] = cert.has_value();
        if (cert) out["certificate"] = dpcolor::certificate_to_json(*cert);
    } else {
        out["constructible"] = nullptr;
        out["notes"] = {"recognizer skipped: base graph empty or disconnected"};
    }
    return emit(out, opt, t ? 0 : 1);
}

int run_check_cover(const std::string& path, const Options& opt) {
    dpcolor::PropertyOracle p = dpcolor::property_from_token(opt.property);
    dpcolor::Cover cover = dpcolor::cover_from_json(load_json(path));
    json out;
    out["command"] = "check-cover";
    out["valid"] = true;
    auto t = dpcolor::find_P_transversal(cover, p);
    out["colorable"] = t.has_value();
    if (t) out["transversal"] = transversal_json(*t);
    bool critical = dpcolor::is_P_critical_cover(cover, p);
    out["critical"] = critical;
    if (critical && p.d_value) {
        auto low = dpcolor::low_vertex_subgraph(cover, p);
        out["low_set"] = low.low_set;
    }
    return emit(out, opt, t ? 0 : 1);
}

int run_chi(const std::string& path, const Options& opt) {
    dpcolor::PropertyOracle p = dpcolor::property_from_token(opt.property);
    dpcolor::Graph g = load_graph(path);
    dpcolor::Limits lim = make_limits(opt);
    json out;
    out["command"] = "chi";
    out["property"] = p.name;
    if (opt.k >= 0) {
        auto col = dpcolor::chi_decide(g, p, opt.k, lim);
        out["k"] = opt.k;
        out["colorable"] = col.has_value();
        if (col) out["coloring"] = *col;
        return emit(out, opt, col ? 0 : 1);
    }
    dpcolor::ChromaticResult res = dpcolor::chi(g, p, lim);
    out["value"] = res.value;
    out["coloring"] = res.coloring;
    out["method"] = res.method;
    return emit(out, opt, 0);
}

int run_chi_list(const std::string& path, const Options& opt) {
    dpcolor::PropertyOracle p = dpcolor::property_from_token(opt.property);
    dpcolor::Graph g = load_graph(path);
    dpcolor::Limits lim = make_limits(opt);
    json out;
    out["command"] = "chi-list";
    out["property"] = p.name;
    if (opt.k >= 0) {
        dpcolor::ListDecision d = dpcolor::chi_list_decide(g, p, opt.k, lim);
        out["k"] = opt.k;
        out["choosable"] = d.choosable;
        if (!d.choosable) out["bad_lists"] = d.bad_lists;
        out["assignments_checked"] = d.assignments_checked;
        return emit(out, opt, d.choosable ? 0 : 1);
    }
    dpcolor::ChromaticResult res = dpcolor::chi_list(g, p, lim);
    out["value"] = res.value;
    if (res.bad_witness_k >= 0) {
        out["bad_lists_at_k"] = res.bad_witness_k;
        out["bad_lists"] = res.bad_lists;
    }
    out["method"] = res.method;
    return emit(out, opt, 0);
}

int run_chi_dp(const std::string& path, const Options& opt, bool chain) {
    dpcolor::PropertyOracle p = dpcolor::property_from_token(opt.property);
    dpcolor::Graph g = load_graph(path);
    dpcolor::Limits lim = make_limits(opt);
    json out;
    out["command"] = "chi-dp";
    out["property"] = p.name;
    if (opt.k >= 0) {
        dpcolor::CoverDecision d = dpcolor::chi_dp_decide(g, p, opt.k, lim);
        out["k"] = opt.k;
        out["all_coverable"] = d.all_coverable;
        if (d.bad_cover) out["bad_cover"] = dpcolor::cover_to_json(*d.bad_cover);
        out["nodes"] = d.nodes;
        return emit(out, opt, d.all_coverable ? 0 : 1);
    }
    dpcolor::ChromaticResult res = dpcolor::chi_dp(g, p, lim);
    out["value"] = res.value;
    out["method"] = res.method;
    if (res.bad_cover) {
        out["bad_cover_at_k"] = res.bad_witness_k;
        out["bad_cover"] = dpcolor::cover_to_json(*res.bad_cover);
    }
    if (chain) {
        int c = dpcolor::chi(g, p, lim).value;
        int cl = dpcolor::chi_list(g, p, lim).value;
        out["chain"] = {{"chi", c}, {"chi_list", cl}, {"chi_dp", res.value},
                        {"holds", c <= cl && cl <= res.value}};
    }
    return emit(out, opt, 0);
}

int run_recognize(const std::string& path, const Options& opt) {
    dpcolor::Configuration cfg = dpcolor::configuration_from_json(load_json(path));
    auto cert = dpcolor::is_constructible(dpcolor::normalize(cfg));
    json out;
    out["command"] = "recognize";
    out["constructible"] = cert.has_value();
    if (cert) out["certificate"] = dpcolor::certificate_to_json(*cert);
    return emit(out, opt, cert ? 0 : 1);
}

int run_verify(const std::string& theorem, const std::string& input, const std::string& cover_path,
               const Options& opt) {
    dpcolor::PropertyOracle p = dpcolor::property_from_token(opt.property);
    dpcolor::Limits lim = make_limits(opt);
    dpcolor::VerdictReport rep;
    if (theorem == "low-vertex") {
        dpcolor::Cover cover = dpcolor::cover_from_json(load_json(input));
        rep = dpcolor::verify_low_vertex_blocks(cover, p);
    } else if (theorem == "brooks") {
        rep = dpcolor::verify_brooks(load_graph(input), p, lim);
    } else if (theorem == "ert") {
        if (cover_path.empty()) throw dpcolor::ParseError("verify ert requires --cover");
        dpcolor::Cover cover = dpcolor::cover_from_json(load_json(cover_path));
        rep = dpcolor::verify_ert(cover.base, cover, p);
    } else if (theorem == "gallai" || theorem == "dirac" || theorem == "mihok") {
        dpcolor::EdgeBoundMode mode = theorem == "gallai" ? dpcolor::EdgeBoundMode::Gallai
                                     : theorem == "dirac" ? dpcolor::EdgeBoundMode::Dirac
                                                          : dpcolor::EdgeBoundMode::Mihok;
        if (opt.k < 0) throw dpcolor::ParseError("verify " + theorem + " requires --k");
        std::optional<dpcolor::Cover> cover;
        if (!cover_path.empty()) cover = dpcolor::cover_from_json(load_json(cover_path));
        dpcolor::Graph g = cover ? cover->base : load_graph(input);
        rep = dpcolor::check_edge_bounds(g, p, opt.k, mode, cover ? &*cover : nullptr, lim);
    } else {
        throw dpcolor::ParseError("unknown theorem '" + theorem +
                                  "' (low-vertex|brooks|ert|gallai|dirac|mihok)");
    }
    json out = dpcolor::verdict_to_json(rep);
    out["command"] = "verify";
    return emit(out, opt, rep.holds ? 0 : 1);
}

int run_gen(const std::string& kind, int n, int k, const std::string& split_str,
            const Options& opt) {
    dpcolor::Graph g;
    if (kind == "dirac") {
        auto comma = split_str.find(',');
        if (comma == std::string::npos)
            throw dpcolor::ParseError("gen dirac requires --split b1,b2");
        std::pair<int, int> split{std::stoi(split_str.substr(0, comma)),
                                  std::stoi(split_str.substr(comma + 1))};
        g = dpcolor::gen_dirac(k, split).graph;
    } else if (kind == "cycle") {
        g = dpcolor::cycle_graph(n);
    } else if (kind == "complete") {
        g = dpcolor::complete_graph(n);
    } else if (kind == "path") {
        g = dpcolor::path_graph(n);
    } else {
        throw dpcolor::ParseError("unknown generator '" + kind + "' (dirac|cycle|complete|path)");
    }
    if (opt.format == "table") {
        std::cout << dpcolor::to_graph6(g) << "\n";
        return 0;
    }
    json out;
    out["command"] = "gen";
    out["graph6"] = dpcolor::to_graph6(g);
    out["n"] = g.n;
    out["m"] = g.edge_count();
    return emit(out, opt, 0);
}

int run_corpus_sweep(const std::string& which, const Options& opt) {
    dpcolor::Limits lim = make_limits(opt);
    int max_order = opt.max_order > 0 ? opt.max_order : (which == "chain" ? 5 : 6);
    json out;
    out["command"] = "corpus-sweep";
    out["sweep"] = which;
    auto fill = [&](const dpcolor::SweepOutcome& o) {
        out["checked"] = o.checked;
        out["failures"] = o.failures;
        json items = json::array();
        for (const auto& item : o.items)
            items.push_back({{"id", item.id}, {"ok", item.ok}, {"detail", item.detail}});
        out["items"] = std::move(items);
        return o.all_ok() ? 0 : 1;
    };
    if (which == "chain") {
        std::vector<dpcolor::PropertyOracle> props{dpcolor::edgeless_property(),
                                                   dpcolor::degenerate_property(1)};
        return emit(out, opt, fill(dpcolor::sweep_chain(max_order, props, lim)));
    }
    if (which == "brooks") {
        dpcolor::PropertyOracle p = dpcolor::property_from_token(opt.property);
        auto sweep = dpcolor::sweep_brooks(max_order, p, lim);
        out["critical_covers_discovered"] = sweep.critical_covers.size();
        return emit(out, opt, fill(sweep.outcome));
    }
    if (which == "theorem5") {
        auto sweep = dpcolor::sweep_theorem5(lim, opt.workers);
        out["configurations"] = sweep.configurations;
        out["uncolorable"] = sweep.uncolorable;
        out["constructible"] = sweep.constructible;
        out["tightness_failures"] = sweep.tightness_failures;
        return emit(out, opt, fill(sweep.outcome));
    }
    if (which == "classification") {
        return emit(out, opt,
                    fill(dpcolor::sweep_classification(dpcolor::builtin_cover_corpus(), lim)));
    }
    if (which == "gallai") {
        return emit(out, opt,
                    fill(dpcolor::sweep_gallai(dpcolor::builtin_cover_corpus(), {}, lim)));
    }
    throw dpcolor::ParseError("unknown sweep '" + which +
                              "' (chain|brooks|theorem5|classification|gallai)");
}

int run_dirac_scan(int k, const std::string& split_str, const Options& opt) {
    std::pair<int, int> split{1, k - 1};
    if (!split_str.empty()) {
        auto comma = split_str.find(',');
        if (comma == std::string::npos) throw dpcolor::ParseError("--split must be b1,b2");
        split = {std::stoi(split_str.substr(0, comma)), std::stoi(split_str.substr(comma + 1))};
    }
    dpcolor::DiracScan scan = dpcolor::dirac_cover_scan(k, split, make_limits(opt));
    json out;
    out["command"] = "dirac-cover-scan";
    out["k"] = scan.k;
    out["split"] = {scan.split.first, scan.split.second};
    out["covers_scanned"] = scan.covers;
    out["uncolorable"] = scan.uncolorable;
    out["list_associated_uncolorable"] = scan.list_associated_uncolorable;
    out["non_list_uncolorable"] = scan.non_list_uncolorable;
    out["family"] = "full matchings, spanning-tree identities, up to fiber permutation";
    return emit(out, opt, 0);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized DP-coloring workbench"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    Options opt;
    app.add_option("--property", opt.property, "property token: O or Dk");
    app.add_option("--k", opt.k, "parameter k (decision mode / bound parameter)");
    app.add_option("--max-order", opt.max_order, "raise the desk-scale order guard");
    app.add_option("--max-fiber", opt.max_fiber, "raise the fiber size guard");
    app.add_option("--workers", opt.workers, "worker threads for sweeps");
    app.add_option("--format", opt.format, "output format: json or table")
        ->check(CLI::IsMember({"json", "table"}));
    app.add_flag("--no-witness", opt.no_witness, "omit witness structures from output");

    std::string input, cover_path, theorem, gen_kind, sweep_kind, split;
    int gen_n = 0;

    auto* solve_cmd =
        app.add_subcommand("solve-config", "solve a configuration (strictly f-degenerate transversal)");
    solve_cmd->add_option("file", input, "configuration JSON")->required();

    auto* check_cmd =
        app.add_subcommand("check-cover", "validate a cover, search a P-transversal, test criticality");
    check_cmd->add_option("file", input, "cover JSON")->required();

    auto* chi_cmd = app.add_subcommand("chi", "P-chromatic number (or decision with --k)");
    chi_cmd->add_option("file", input, "graph file (graph6 or edge list)")->required();

    auto* chil_cmd = app.add_subcommand("chi-list", "P-choice number (or decision with --k)");
    chil_cmd->add_option("file", input, "graph file")->required();

    auto* chid_cmd = app.add_subcommand("chi-dp", "P-DP-chromatic number (or decision with --k)");
    chid_cmd->add_option("file", input, "graph file")->required();
    bool chain = false;
    chid_cmd->add_flag("--chain", chain, "also compute chi and chi_list and report the chain");

    auto* rec_cmd = app.add_subcommand("recognize", "constructible-configuration recognizer");
    rec_cmd->add_option("file", input, "configuration JSON")->required();

    auto* ver_cmd = app.add_subcommand("verify", "run a theorem check");
    ver_cmd->add_option("theorem", theorem, "low-vertex|brooks|ert|gallai|dirac|mihok")->required();
    ver_cmd->add_option("--input", input, "graph or cover file (theorem-dependent)");
    ver_cmd->add_option("--cover", cover_path, "cover JSON providing the critical-cover context");

    auto* gen_cmd = app.add_subcommand("gen", "emit a named graph as graph6");
    gen_cmd->add_option("kind", gen_kind, "dirac|cycle|complete|path")->required();
    gen_cmd->add_option("--n", gen_n, "order for cycle/complete/path");
    gen_cmd->add_option("--split", split, "Dir(k) split b1,b2");

    auto* sweep_cmd = app.add_subcommand("corpus-sweep", "run a corpus sweep");
    sweep_cmd->add_option("sweep", sweep_kind, "chain|brooks|theorem5|classification|gallai")
        ->required();

    auto* scan_cmd =
        app.add_subcommand("dirac-cover-scan", "scan Dir(k) covers for non-list bad covers");
    scan_cmd->add_option("--split", split, "Dir(k) split b1,b2");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve_cmd->parsed()) return run_solve_config(input, opt);
        if (check_cmd->parsed()) return run_check_cover(input, opt);
        if (chi_cmd->parsed()) return run_chi(input, opt);
        if (chil_cmd->parsed()) return run_chi_list(input, opt);
        if (chid_cmd->parsed()) return run_chi_dp(input, opt, chain);
        if (rec_cmd->parsed()) return run_recognize(input, opt);
        if (ver_cmd->parsed()) return run_verify(theorem, input, cover_path, opt);
        if (gen_cmd->parsed()) return run_gen(gen_kind, gen_n, opt.k < 0 ? 3 : opt.k, split, opt);
        if (sweep_cmd->parsed()) return run_corpus_sweep(sweep_kind, opt);
        if (scan_cmd->parsed()) return run_dirac_scan(opt.k < 0 ? 3 : opt.k, split, opt);
    } catch (const dpcolor::Error& e) {
        json err;
        err["schema"] = kSchema;
        err["error"] = e.code();
        err["message"] = e.what();
        std::cout << err.dump(2) << "\n";
        return 2;
    } catch (const std::exception& e) {
        json err;
        err["schema"] = kSchema;
        err["error"] = "Internal";
        err["message"] = e.what();
        std::cout << err.dump(2) << "\n";
        return 2;
    }
    return 2;
}
