#include "gnb/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "gnb/bounds.hpp"
#include "gnb/clique_cover.hpp"
#include "gnb/design.hpp"
#include "gnb/errors.hpp"
#include "gnb/gf.hpp"
#include "gnb/guessing.hpp"
#include "gnb/io.hpp"
#include "gnb/named_graphs.hpp"

namespace gnb {

namespace {

struct RunConfig {
    std::string format = "text";
    std::string out_path;
    unsigned threads = 0;

    std::string graph;
    std::string name;
    std::string file;
    std::uint32_t q = 3;
    std::int64_t shift = 1;
    std::string basis_out;
    std::string method = "auto";
    bool show_cover = false;
    std::uint32_t s = 2;
    std::string strategy;
    bool no_symmetry = false;
    std::string fields = "2,3,5,7";
    std::string shifts = "1..q-1";
    std::uint64_t budget = 10'000'000;
    std::optional<std::size_t> target;
};

class VerificationFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<std::uint32_t> parse_uint_list(const std::string& text, const char* what) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto dots = item.find("..");
        try {
            if (dots == std::string::npos) {
                out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
            } else {
                auto lo = std::stoul(item.substr(0, dots)), hi = std::stoul(item.substr(dots + 2));
                for (auto x = lo; x <= hi; ++x) out.push_back(static_cast<std::uint32_t>(x));
            }
        } catch (const std::logic_error&) {
            throw InvalidInput(std::string("cannot parse ") + what + " '" + text + "'");
        }
    }
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot write '" + path + "'");
    f << text;
    if (!f) throw IoError("write to '" + path + "' failed");
}

Json parse_json(const std::string& text, const char* what) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput(std::string(what) + ": " + e.what());
    }
}

std::string pad(std::string s, std::size_t w) {
    if (s.size() < w) s.append(w - s.size(), ' ');
    return s;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---- graph ---------------------------------------------------------------

std::string cmd_graph_gen(const RunConfig& cfg) {
    auto g = builtin_graph(cfg.name);
    if (cfg.format == "json") return dump(graph_to_json(g));
    std::ostringstream os;
    if (cfg.format == "csv") {
        os << "u,v\n";
        for (auto [u, v] : g.edges()) os << u << ',' << v << '\n';
    } else {
        os << "c " << cfg.name << '\n';
        write_dimacs(os, g);
    }
    return os.str();
}

std::string cmd_graph_info(const RunConfig& cfg) {
    auto g = resolve_graph(cfg.graph);
    std::size_t dmin = g.size() ? g.degree(0) : 0, dmax = dmin;
    for (Vertex v = 0; v < g.size(); ++v) {
        dmin = std::min(dmin, g.degree(v));
        dmax = std::max(dmax, g.degree(v));
    }
    auto tf = is_triangle_free(g);
    auto srg = check_srg(g);
    auto w = independent_set_witness(g, g.size(), SearchBudget{cfg.budget});
    Json j;
    j["graph"] = cfg.graph;
    j["n"] = g.size();
    j["m"] = g.edge_count();
    j["min_degree"] = dmin;
    j["max_degree"] = dmax;
    j["triangle_free"] = tf;
    j["connected"] = is_connected(g);
    if (srg.params)
        j["srg"] = {srg.params->n, srg.params->k, srg.params->lambda, srg.params->mu};
    else
        j["srg"] = nullptr;
    j["independent_set"] = witness_to_json(w);
    if (cfg.format == "json") return dump(j);
    std::ostringstream os;
    if (cfg.format == "csv") {
        os << "graph,n,m,min_degree,max_degree,triangle_free,srg,independent_set\n";
        os << cfg.graph << ',' << g.size() << ',' << g.edge_count() << ',' << dmin << ',' << dmax << ','
           << (tf ? "true" : "false") << ',';
        if (srg.params) os << srg.params->n << ' ' << srg.params->k << ' ' << srg.params->lambda << ' ' << srg.params->mu;
        os << ',' << w.vertices.size() << '\n';
        return os.str();
    }
    os << "graph          " << cfg.graph << '\n'
       << "vertices       " << g.size() << '\n'
       << "edges          " << g.edge_count() << '\n'
       << "degree         " << dmin << ".." << dmax << '\n'
       << "triangle-free  " << (tf ? "yes" : "no") << '\n'
       << "srg            ";
    if (srg.params)
        os << '(' << srg.params->n << ',' << srg.params->k << ',' << srg.params->lambda << ',' << srg.params->mu << ")\n";
    else
        os << "no (" << srg.failure << ")\n";
    os << "independent    " << w.vertices.size() << " (" << to_string(w.method) << ")\n";
    return os.str();
}

// ---- design --------------------------------------------------------------

Design named_design(const std::string& name) {
    if (name == "s-3-6-22") return build_s_3_6_22();
    if (name == "s-4-7-23") return derive(build_s_5_8_24(), 23);
    if (name == "s-5-8-24") return build_s_5_8_24();
    throw InvalidInput("unknown design '" + name + "' (expected s-3-6-22, s-4-7-23 or s-5-8-24)");
}

Json design_summary(const Design& d) {
    auto rep = verify_steiner(d);
    auto prof = intersection_profile(d);
    std::vector<std::size_t> replication(d.v, 0);
    for (auto b : d.blocks)
        for (auto p : points_of(b)) ++replication[p];
    auto [rmin, rmax] = std::minmax_element(replication.begin(), replication.end());
    auto [dmin, dmax] = std::minmax_element(prof.disjoint_per_block.begin(), prof.disjoint_per_block.end());
    Json hist = Json::object();
    for (auto [k, c] : prof.histogram) hist[std::to_string(k)] = c;
    Json j;
    j["v"] = d.v;
    j["t"] = d.t;
    j["k"] = d.k;
    j["blocks"] = d.blocks.size();
    j["steiner"] = rep.ok;
    j["subsets_checked"] = rep.subsets_checked;
    if (rep.violating_subset) j["violating_subset"] = points_of(*rep.violating_subset);
    j["replication"] = d.v ? Json{*rmin, *rmax} : Json::array();
    j["intersection_histogram"] = hist;
    j["disjoint_per_block"] = d.blocks.empty() ? Json::array() : Json{*dmin, *dmax};
    j["no_three_pairwise_disjoint"] = prof.no_three_pairwise_disjoint;
    return j;
}

std::string summary_text(const Json& j) {
    std::ostringstream os;
    os << "design         S(" << j["t"].get<int>() << ',' << j["k"].get<int>() << ',' << j["v"].get<int>() << ")\n"
       << "blocks         " << j["blocks"].get<std::size_t>() << '\n'
       << "steiner        " << (j["steiner"].get<bool>() ? "verified" : "FAILED") << " ("
       << j["subsets_checked"].get<std::size_t>() << " subsets)\n";
    if (j.contains("violating_subset")) os << "violating      " << j["violating_subset"].dump() << '\n';
    if (!j["replication"].empty())
        os << "replication    " << j["replication"][0].get<std::size_t>() << ".." << j["replication"][1].get<std::size_t>() << '\n';
    os << "intersections ";
    for (auto& [k, c] : j["intersection_histogram"].items()) os << ' ' << k << ":" << c.get<std::size_t>();
    os << '\n';
    if (!j["disjoint_per_block"].empty())
        os << "disjoint/block " << j["disjoint_per_block"][0].get<std::size_t>() << ".."
           << j["disjoint_per_block"][1].get<std::size_t>() << '\n';
    os << "no 3 disjoint  " << (j["no_three_pairwise_disjoint"].get<bool>() ? "yes" : "no") << '\n';
    return os.str();
}

std::string cmd_design_build(const RunConfig& cfg, std::string& side_file) {
    auto d = named_design(cfg.name);
    auto summary = design_summary(d);
    if (!summary["steiner"].get<bool>()) throw VerificationFailed("constructed design failed verification");
    side_file = dump(design_to_json(d));
    if (cfg.format == "json") {
        Json j = summary;
        if (cfg.file.empty()) j["design"] = design_to_json(d);
        return dump(j);
    }
    return summary_text(summary);
}

std::string cmd_design_verify(const RunConfig& cfg, bool& failed) {
    auto d = design_from_json(parse_json(read_text_file(cfg.file), "design JSON"));
    auto summary = design_summary(d);
    failed = !summary["steiner"].get<bool>();
    return cfg.format == "json" ? dump(summary) : summary_text(summary);
}

// ---- rank ----------------------------------------------------------------

std::string cmd_rank(const RunConfig& cfg) {
    auto g = resolve_graph(cfg.graph);
    auto m = adjacency_shifted(g, cfg.q, cfg.shift);
    auto b = make_basis_file(m);
    if (!cfg.basis_out.empty()) {
        std::ostringstream os;
        write_basis_file(os, b);
        write_text_file(cfg.basis_out, os.str());
    }
    const auto r = b.basis.size();
    if (cfg.format == "json") {
        Json j{{"graph", cfg.graph}, {"q", cfg.q}, {"shift", m.at(0, 0)}, {"n", g.size()},
               {"rank", r},          {"nullity", g.size() - r},           {"gn_lower_bound", g.size() - r}};
        if (!cfg.basis_out.empty()) j["basis_file"] = cfg.basis_out;
        return dump(j);
    }
    if (cfg.format == "csv") return "graph,q,shift,n,rank\n" + cfg.graph + "," + std::to_string(cfg.q) + "," +
                                    std::to_string(m.at(0, 0)) + "," + std::to_string(g.size()) + "," +
                                    std::to_string(r) + "\n";
    return std::to_string(r) + "\n";
}

// ---- cover ---------------------------------------------------------------

std::string cmd_cover_kappa(const RunConfig& cfg) {
    auto g = resolve_graph(cfg.graph);
    KappaMethod method = KappaMethod::Auto;
    if (cfg.method == "lp") method = KappaMethod::Lp;
    else if (cfg.method == "matching") method = KappaMethod::Matching;
    else if (cfg.method != "auto") throw InvalidInput("--method must be auto, lp or matching");
    auto k = kappa_f(g, method);
    if (cfg.format == "json") {
        Json j{{"graph", cfg.graph}, {"kappa_f", to_string(k.value)},
               {"gn_lower_bound", to_string(Rational(static_cast<long long>(g.size())) - k.value)}};
        j["cover"] = cover_to_json(k.cover);
        return dump(j);
    }
    if (cfg.format == "csv") return "graph,kappa_f\n" + cfg.graph + "," + to_string(k.value) + "\n";
    std::string out = to_string(k.value) + "\n";
    if (cfg.show_cover) out += dump(cover_to_json(k.cover));
    return out;
}

// ---- guess ---------------------------------------------------------------

std::string eval_text(const Rational& p, const BigInt& wins, const GuessingNumber& gn) {
    std::ostringstream os;
    os << "probability    " << to_string(p) << '\n' << "wins           " << wins.str() << '\n' << "gn             " << format_gn(gn) << '\n';
    return os.str();
}

std::string cmd_guess_eval(const RunConfig& cfg) {
    auto g = resolve_graph(cfg.graph);
    GuessingGame game(g, cfg.s);
    auto text = cfg.strategy;
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || (text[first] != '{' && text[first] != '[')) text = read_text_file(cfg.strategy);
    auto j = parse_json(text, "strategy JSON");
    if (j.is_object() && j.contains("s") && j["s"].get<std::uint32_t>() != cfg.s)
        throw InvalidInput("strategy alphabet does not match --s");
    Strategy strat(game, strategy_tables_from_json(j));
    auto e = eval_strategy(game, strat, EvalOptions{std::uint64_t{1} << 24, cfg.threads});
    if (cfg.format == "json")
        return dump({{"graph", cfg.graph}, {"s", cfg.s}, {"probability", to_string(e.probability)},
                     {"wins", e.wins.str()}, {"total", e.total.str()}, {"gn", guessing_number_to_json(e.gn)}});
    if (cfg.format == "csv") return "graph,s,probability,gn\n" + cfg.graph + "," + std::to_string(cfg.s) + "," +
                                    to_string(e.probability) + "," + format_gn(e.gn) + "\n";
    return eval_text(e.probability, e.wins, e.gn);
}

std::string cmd_guess_search(const RunConfig& cfg) {
    auto g = resolve_graph(cfg.graph);
    GuessingGame game(g, cfg.s);
    SearchOptions opts;
    opts.symmetry = !cfg.no_symmetry;
    opts.threads = cfg.threads;
    auto r = exhaustive_optimal(game, opts);
    if (cfg.format == "json")
        return dump({{"graph", cfg.graph}, {"s", cfg.s}, {"probability", to_string(r.probability)},
                     {"wins", r.wins.str()}, {"gn", guessing_number_to_json(r.gn)}, {"symmetry", opts.symmetry},
                     {"root_functions", r.root_functions}, {"nodes", r.nodes},
                     {"strategy", strategy_to_json(r.strategy)}});
    if (cfg.format == "csv") return "graph,s,probability,gn\n" + cfg.graph + "," + std::to_string(cfg.s) + "," +
                                    to_string(r.probability) + "," + format_gn(r.gn) + "\n";
    return eval_text(r.probability, r.wins, r.gn) + "strategy       " + strategy_to_json(r.strategy).dump() + "\n";
}

std::string describe_lower(const LowerBound& b) {
    if (b.matrix)
        return "A+" + std::to_string(b.matrix->shift) + "I over F_" + std::to_string(b.matrix->q) + " (rank " +
               std::to_string(b.matrix->rank) + ")";
    if (b.cover) return "n - kappa_f (kappa_f = " + to_string(b.cover->total()) + ")";
    return b.method;
}

std::string describe_upper(const UpperBound& b) {
    return "independent set of size " + std::to_string(b.witness.vertices.size()) + " (" +
           to_string(b.witness.method) + ")";
}

std::string bounds_table(const std::vector<std::pair<std::string, BoundsReport>>& rows) {
    std::ostringstream os;
    os << pad("graph", 19) << pad("n", 5) << pad("lower", 7) << pad("upper", 7) << pad("n/2", 6)
       << pad("lower certificate", 32) << "upper certificate\n";
    for (const auto& [name, r] : rows) {
        os << pad(name, 19) << pad(std::to_string(r.n), 5) << pad(to_string(r.best_lower()), 7)
           << pad(to_string(r.best_upper()), 7) << pad(to_string(Rational(static_cast<long long>(r.n), 2)), 6)
           << pad(describe_lower(r.best_lower_bound()), 32) << describe_upper(r.best_upper_bound()) << '\n';
    }
    return os.str();
}

std::string bounds_csv(const std::vector<std::pair<std::string, BoundsReport>>& rows) {
    std::ostringstream os;
    os << "graph,n,lower,upper,lower_method,upper_witness_size\n";
    for (const auto& [name, r] : rows)
        os << name << ',' << r.n << ',' << to_string(r.best_lower()) << ',' << to_string(r.best_upper()) << ','
           << r.best_lower_bound().method << ',' << r.best_upper_bound().witness.vertices.size() << '\n';
    return os.str();
}

std::string cmd_guess_bounds(const RunConfig& cfg) {
    auto g = resolve_graph(cfg.graph);
    BoundsConfig bc;
    bc.fields = parse_uint_list(cfg.fields, "--fields");
    if (cfg.shifts != "1..q-1" && cfg.shifts != "all") bc.shifts = parse_uint_list(cfg.shifts, "--shifts");
    bc.budget.node_limit = cfg.budget;
    bc.witness_target = cfg.target;
    if (cfg.graph == "m22") bc.explicit_witnesses.push_back(m22_point_star());
    auto rep = bounds_report(g, cfg.graph, bc);
    if (cfg.format == "json") return dump(report_to_json(rep));
    std::vector<std::pair<std::string, BoundsReport>> rows{{cfg.graph, rep}};
    if (cfg.format == "csv") return bounds_csv(rows);
    std::string out = bounds_table(rows);
    for (const auto& note : rep.notes) out += "note: " + note + "\n";
    return out;
}

std::string cmd_paper_table(const RunConfig& cfg) {
    auto table = srg_bounds_table(SearchBudget{cfg.budget});
    if (cfg.format == "json") {
        Json rows = Json::array();
        for (const auto& r : table) {
            auto j = report_to_json(r.report);
            j["name"] = r.name;
            rows.push_back(std::move(j));
        }
        return dump(rows);
    }
    std::vector<std::pair<std::string, BoundsReport>> rows;
    for (const auto& r : table) rows.emplace_back(r.name, r.report);
    return cfg.format == "csv" ? bounds_csv(rows) : bounds_table(rows);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Certified bounds on guessing numbers of graphs", "gnb"};
    app.require_subcommand(1);
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--out", cfg.out_path, "Write the result to this file instead of stdout");
    app.add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");

    auto* graph = app.add_subcommand("graph", "Graph generation and inspection");
    graph->require_subcommand(1);
    auto* graph_gen = graph->add_subcommand("gen", "Emit a builtin graph (DIMACS for text, JSON for json)");
    graph_gen->add_option("name", cfg.name, "Builtin graph name")->required();
    auto* graph_info = graph->add_subcommand("info", "Structural summary of a graph");
    graph_info->add_option("graph", cfg.graph, "Builtin name or graph file")->required();
    graph_info->add_option("--budget", cfg.budget, "Independent set search node budget");

    auto* design = app.add_subcommand("design", "Steiner systems");
    design->require_subcommand(1);
    auto* design_build = design->add_subcommand("build", "Construct and verify a Steiner system");
    design_build->add_option("name", cfg.name, "s-3-6-22, s-4-7-23 or s-5-8-24")->required();
    design_build->add_option("--out", cfg.file, "Write blocks as JSON to this file");
    auto* design_verify = design->add_subcommand("verify", "Verify a design JSON file");
    design_verify->add_option("file", cfg.file, "Design JSON")->required();

    auto* rank_cmd = app.add_subcommand("rank", "Rank of A + cI over Z_q");
    rank_cmd->add_option("--graph", cfg.graph, "Builtin name or graph file")->required();
    rank_cmd->add_option("--q", cfg.q, "Prime modulus");
    rank_cmd->add_option("--shift", cfg.shift, "Diagonal shift c");
    rank_cmd->add_option("--basis-out", cfg.basis_out, "Write a basis file with per-row coordinates");

    auto* cover = app.add_subcommand("cover", "Fractional clique covers");
    cover->require_subcommand(1);
    auto* cover_kappa = cover->add_subcommand("kappa", "Exact fractional clique cover number");
    cover_kappa->add_option("graph", cfg.graph, "Builtin name or graph file")->required();
    cover_kappa->add_option("--method", cfg.method, "auto, lp or matching");
    cover_kappa->add_flag("--show-cover", cfg.show_cover, "Print the optimal cover as JSON");

    auto* guess = app.add_subcommand("guess", "Guessing games");
    guess->require_subcommand(1);
    auto* guess_eval = guess->add_subcommand("eval", "Exact win probability of a strategy");
    guess_eval->add_option("--graph", cfg.graph)->required();
    guess_eval->add_option("--s", cfg.s, "Alphabet size")->required();
    guess_eval->add_option("--strategy", cfg.strategy, "Strategy JSON file or inline JSON")->required();
    auto* guess_search = guess->add_subcommand("search", "Exhaustive optimal strategy");
    guess_search->add_option("--graph", cfg.graph)->required();
    guess_search->add_option("--s", cfg.s, "Alphabet size")->required();
    guess_search->add_flag("--no-symmetry", cfg.no_symmetry, "Disable alphabet-symmetry pruning");
    auto* guess_bounds = guess->add_subcommand("bounds", "Certified interval for gn(G)");
    guess_bounds->add_option("--graph", cfg.graph)->required();
    guess_bounds->add_option("--fields", cfg.fields, "Comma-separated primes");
    guess_bounds->add_option("--shifts", cfg.shifts, "Shifts c (list, a..b, or 1..q-1 for all)");
    guess_bounds->add_option("--budget", cfg.budget, "Independent set search node budget");
    guess_bounds->add_option("--target", cfg.target, "Stop independent set search at this size");

    auto* paper = app.add_subcommand("paper-table", "Bounds for the five triangle-free SRGs");
    paper->add_option("--budget", cfg.budget, "Independent set search node budget");

    std::vector<std::string> argv_store{"gnb"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        std::string result, side_file;
        bool failed = false;
        if (graph_gen->parsed()) result = cmd_graph_gen(cfg);
        else if (graph_info->parsed()) result = cmd_graph_info(cfg);
        else if (design_build->parsed()) result = cmd_design_build(cfg, side_file);
        else if (design_verify->parsed()) result = cmd_design_verify(cfg, failed);
        else if (rank_cmd->parsed()) result = cmd_rank(cfg);
        else if (cover_kappa->parsed()) result = cmd_cover_kappa(cfg);
        else if (guess_eval->parsed()) result = cmd_guess_eval(cfg);
        else if (guess_search->parsed()) result = cmd_guess_search(cfg);
        else if (guess_bounds->parsed()) result = cmd_guess_bounds(cfg);
        else if (paper->parsed()) result = cmd_paper_table(cfg);

        if (design_build->parsed() && !cfg.file.empty()) write_text_file(cfg.file, side_file);
        if (cfg.out_path.empty()) out << result;
        else write_text_file(cfg.out_path, result);
        return failed ? kExitFailure : kExitOk;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ResourceLimit& e) {
        err << "resource limit: " << e.what() << '\n';
        return kExitResource;
    } catch (const VerificationFailed& e) {
        err << "verification failed: " << e.what() << '\n';
        return kExitFailure;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const ConstructionFault& e) {
        err << "construction fault: " << e.what() << '\n';
        return kExitFailure;
    }
}

}  // namespace gnb
