#ifndef SKEWFORCE_CLI_COMMANDS_HPP
#define SKEWFORCE_CLI_COMMANDS_HPP

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "skewforce/completeness.hpp"
#include "skewforce/exact/kernel.hpp"
#include "skewforce/forcing.hpp"
#include "skewforce/generate.hpp"
#include "skewforce/hypernull.hpp"
#include "skewforce/io/dot.hpp"
#include "skewforce/io/serialize.hpp"
#include "skewforce/matching.hpp"
#include "skewforce/matroid.hpp"
#include "skewforce/validate.hpp"

namespace skewforce::cli {

using io::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string input;
    std::optional<std::string> set;
    int cap = -1;
    std::uint64_t seed = 0;
    std::string dot;
    std::string method;
    std::string edge;
    int n = -1;
    int k = -1;
    int jobs = 1;
    bool trace = false;
};

struct CommandResult {
    std::string command;
    json payload;
    int exit_code = kExitOk;
};

// Leaf commands; groups listed with their actions.
inline const std::map<std::string, std::vector<std::string>>& command_table() {
    static const std::map<std::string, std::vector<std::string>> table{
        {"gen", {}},
        {"validate", {}},
        {"batch", {}},
        {"szf", {"close", "number", "closed-sets"}},
        {"zf", {"number"}},
        {"kernel", {"nullspace", "hat", "realizable", "witness", "matroid"}},
        {"tree", {"thermal", "dm", "generating-set", "rank-class"}},
        {"matroid", {"verify", "gammoid"}},
        {"complete", {"check", "upm", "gadget"}},
        {"hyper", {"stalled", "derived", "components", "nullvector", "complete-report"}},
    };
    return table;
}

inline std::string usage_text() {
    std::ostringstream out;
    out << "usage: skewforce <command> [<action>] [input] [flags]\n";
    for (const auto& [group, actions] : command_table()) {
        out << "  " << group;
        if (!actions.empty()) {
            out << " {";
            for (std::size_t i = 0; i < actions.size(); ++i) out << (i ? "|" : "") << actions[i];
            out << "}";
        }
        out << "\n";
    }
    out << "input: a JSON file or a generator spec such as cycle:6, complete_bipartite:2,3, random_tree:10\n";
    out << "flags: --set \"0,2,5\" --cap N --seed S --dot PATH --method NAME --edge \"u,v\" --n N --k K --jobs J --trace\n";
    return out.str();
}

// Splits leading command words from flags and parses the flags.
inline std::pair<std::string, Options> parse_command_line(const std::vector<std::string>& args) {
    if (args.empty()) throw UsageError("missing command");
    const auto& table = command_table();
    auto it = table.find(args[0]);
    if (it == table.end()) throw UsageError("unknown command '" + args[0] + "'");
    std::string command = args[0];
    std::size_t rest = 1;
    if (!it->second.empty()) {
        if (args.size() < 2) throw UsageError("'" + command + "' needs an action");
        if (std::find(it->second.begin(), it->second.end(), args[1]) == it->second.end())
            throw UsageError("unknown action '" + args[1] + "' for '" + command + "'");
        command += " " + args[1];
        rest = 2;
    }

    Options o;
    CLI::App app{"skewforce"};
    app.add_option("input", o.input, "JSON file or generator spec");
    std::string set_text;
    auto* set_opt = app.add_option("--set", set_text, "comma-separated vertex list");
    app.add_option("--cap", o.cap, "vertex cap for exhaustive routines")->check(CLI::NonNegativeNumber);
    app.add_option("--seed", o.seed, "seed for random generators");
    app.add_option("--dot", o.dot, "write a DOT file");
    app.add_option("--method", o.method, "route or method name");
    app.add_option("--edge", o.edge, "edge as \"u,v\"");
    app.add_option("--n", o.n, "vertex count");
    app.add_option("--k", o.k, "edge rank");
    app.add_option("--jobs", o.jobs, "concurrent batch instances")->check(CLI::PositiveNumber);
    app.add_flag("--trace", o.trace, "include the forcing trace");
    std::vector<std::string> flags(args.begin() + static_cast<std::ptrdiff_t>(rest), args.end());
    std::reverse(flags.begin(), flags.end());
    try {
        app.parse(flags);
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }
    if (set_opt->count() > 0) o.set = set_text;
    return {command, o};
}

namespace detail {

inline std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (item.empty()) continue;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size()) throw UsageError(std::string("malformed ") + what + ": '" + text + "'");
        out.push_back(v);
    }
    return out;
}

inline int cap_or(const Options& o, int fallback) { return o.cap >= 0 ? o.cap : fallback; }

inline VertexSet require_set(const Options& o, int n) {
    if (!o.set) throw UsageError("this command needs --set");
    VertexSet s(n);
    for (int v : parse_int_list(*o.set, "--set")) {
        if (v < 0 || v >= n)
            throw ValidationError("vertex " + std::to_string(v) + " in --set is outside 0.." + std::to_string(n - 1));
        s.insert(v);
    }
    return s;
}

inline Edge require_edge(const Options& o) {
    const auto ends = parse_int_list(o.edge, "--edge");
    if (ends.size() != 2) throw UsageError("--edge needs two endpoints \"u,v\"");
    return Edge(ends[0], ends[1]);
}

// "name:p1,p2" generator specs; anything else is read as a JSON file.
inline GeneratedObject load_input(const Options& o, const json* inline_input, const std::filesystem::path& base) {
    if (inline_input) return io::object_from_json(*inline_input);
    if (o.input.empty()) throw UsageError("missing input");
    const std::filesystem::path path = base / o.input;
    if (std::filesystem::exists(path)) return io::object_from_json(io::read_json_file(path.string()));
    const auto colon = o.input.find(':');
    if (colon == std::string::npos) throw ValidationError("cannot open '" + path.string() + "'");
    const std::string kind = o.input.substr(0, colon);
    return generate(kind, parse_int_list(o.input.substr(colon + 1), "generator parameters"), o.seed);
}

inline Graph as_graph(const GeneratedObject& obj) {
    if (auto* g = std::get_if<Graph>(&obj)) return *g;
    throw ValidationError("expected a graph, got a hypergraph");
}

inline Hypergraph as_hypergraph(const GeneratedObject& obj) {
    if (auto* h = std::get_if<Hypergraph>(&obj)) return *h;
    return Hypergraph::from_graph(std::get<Graph>(obj));
}

inline json structure_json(const StructureReport& r) {
    json out{{"is_tree", r.is_tree},
             {"is_bipartite", r.is_bipartite},
             {"is_linear", r.is_linear},
             {"is_hypertree", r.is_hypertree},
             {"is_connected", r.is_connected},
             {"bipartition", nullptr}};
    if (r.bipartition) out["bipartition"] = {{"left", io::to_json(r.bipartition->left)}, {"right", io::to_json(r.bipartition->right)}};
    return out;
}

inline json family_with_hasse(const ClosedSetFamily& f) {
    json out = io::to_json(f);
    json hasse = json::array();
    for (const auto& [a, b] : hasse_edges(f)) hasse.push_back({a, b});
    out["hasse"] = hasse;
    return out;
}

} // namespace detail

inline json execute_payload(const std::string& command, const Options& o, const json* inline_input,
                            const std::filesystem::path& base) {
    using namespace detail;
    if (command == "hyper complete-report") {
        if (o.n < 0 || o.k < 0) throw UsageError("hyper complete-report needs --n and --k");
        return io::to_json(complete_hypergraph_report(o.n, o.k, cap_or(o, kCompleteVerifyCap)));
    }

    if (command == "matroid verify") {
        // A family document is verified directly.
        std::optional<json> doc;
        if (inline_input) {
            doc = *inline_input;
        } else if (!o.input.empty() && std::filesystem::exists(base / o.input)) {
            doc = io::read_json_file((base / o.input).string());
        }
        if (doc && doc->is_object() && doc->contains("members")) {
            ClosedSetFamily f = io::family_from_json(*doc);
            f.report = verify_matroid(f, cap_or(o, kMatroidVerifyCap));
            return family_with_hasse(f);
        }
    }

    const GeneratedObject obj = load_input(o, inline_input, base);
    if (command == "gen") return io::to_json(obj);
    if (command == "validate") {
        json out = std::visit([](const auto& x) { return structure_json(validate(x)); }, obj);
        if (auto* h = std::get_if<Hypergraph>(&obj)) {
            out["type"] = "hypergraph";
            out["n"] = h->order();
            out["m"] = h->size();
            if (auto cycle = find_hypercycle(*h)) out["cycle"] = {{"vertices", cycle->vertices}, {"edges", cycle->edges}};
        } else {
            const Graph& g = std::get<Graph>(obj);
            out["type"] = "graph";
            out["n"] = g.order();
            out["m"] = g.size();
        }
        return out;
    }

    if (command.rfind("hyper ", 0) == 0) {
        const Hypergraph h = as_hypergraph(obj);
        if (command == "hyper stalled") return {{"stalled", hyper_is_stalled(h, require_set(o, h.order()))}};
        if (command == "hyper derived") {
            const auto sets = hyper_szf_derived_sets(h, require_set(o, h.order()), cap_or(o, kHyperEnumerationCap));
            return {{"derived_sets", io::to_json_list(sets)}};
        }
        if (command == "hyper components") {
            json comps = json::array();
            for (const auto& d : minimal_stalled_covers(h, cap_or(o, kHyperEnumerationCap))) comps.push_back(io::to_json(d));
            return {{"components", comps}};
        }
        if (command == "hyper nullvector") {
            const VertexSet s = require_set(o, h.order());
            const RationalVector x = construct_nullvector(h, s);
            return {{"nullvector", io::to_json(x)}, {"zero_locus", io::to_json(zero_locus(x))}};
        }
    }

    const Graph g = as_graph(obj);
    const int n = g.order();
    if (command == "szf close") {
        const Closure c = szf_close(g, require_set(o, n));
        json out{{"closure", io::to_json(c.closure)}};
        if (o.trace) out["trace"] = io::to_json(c.trace.steps);
        return out;
    }
    if (command == "szf number") {
        const std::string m = o.method.empty() ? "all" : o.method;
        if (m != "all" && m != "greedy" && m != "exact") throw UsageError("--method must be greedy, exact or all");
        json out;
        if (m != "exact") {
            const GreedyResult r = szf_number_greedy(g);
            out["greedy"] = r.number;
            out["greedy_set"] = io::to_json(r.set);
        }
        if (m != "greedy") out["exact"] = szf_number_exact(g, cap_or(o, kForcingEnumerationCap));
        return out;
    }
    if (command == "szf closed-sets") return io::to_json(enumerate_szf_closed(g, cap_or(o, kForcingEnumerationCap)));
    if (command == "zf number") return {{"zf_number", zf_number_exact(g, cap_or(o, kForcingEnumerationCap))}};

    if (command == "kernel nullspace") {
        json out = io::to_json(nullspace(g));
        out["rank"] = rank(g);
        return out;
    }
    if (command == "kernel hat") return {{"hat", io::to_json(hat_closure(g, require_set(o, n)))}};
    if (command == "kernel realizable") {
        const VertexSet s = require_set(o, n);
        const VertexSet h = hat_closure(g, s);
        return {{"realizable", h == s}, {"hat", io::to_json(h)}};
    }
    if (command == "kernel witness") return {{"witness", io::to_json(witness_nullvector(g, require_set(o, n)))}};
    if (command == "kernel matroid") return family_with_hasse(kernel_matroid(g, cap_or(o, kKernelMatroidCap)));

    if (command == "tree thermal") {
        const ThermalDecomposition d = thermal_decomposition(g);
        const VertexSet gen = generating_set(g, GeneratingRoute::thermal);
        json out = io::to_json(d, g);
        out["generating_set"] = io::to_json(gen);
        if (!o.dot.empty()) {
            std::ofstream file(o.dot);
            if (!file) throw ValidationError("cannot write '" + o.dot + "'");
            file << io::thermal_dot(g, d, gen);
            out["dot"] = o.dot;
        }
        return out;
    }
    if (command == "tree dm") return io::to_json(dm_decomposition(g));
    if (command == "tree generating-set") {
        const std::string m = o.method.empty() ? "szf" : o.method;
        if (m == "all") {
            json routes = json::array();
            std::optional<VertexSet> first;
            bool agree = true;
            for (GeneratingRoute r : all_generating_routes()) {
                const VertexSet s = generating_set(g, r);
                if (first && *first != s) agree = false;
                if (!first) first = s;
                routes.push_back({{"method", to_string(r)}, {"set", io::to_json(s)}});
            }
            return {{"routes", routes}, {"agree", agree}};
        }
        const auto route = parse_generating_route(m);
        if (!route) throw UsageError("unknown --method '" + m + "'");
        return {{"set", io::to_json(generating_set(g, *route))}};
    }
    if (command == "tree rank-class") {
        if (!o.edge.empty()) {
            const Edge e = require_edge(o);
            return {{"edge", io::to_json(e)}, {"class", to_tag(edge_rank_class(g, e))}};
        }
        json edges = json::array();
        for (const Edge& e : g.edges()) edges.push_back({{"edge", io::to_json(e)}, {"class", to_tag(edge_rank_class(g, e))}});
        return {{"edges", edges}};
    }

    if (command == "matroid verify") {
        const std::string m = o.method.empty() ? "szf" : o.method;
        ClosedSetFamily f;
        if (m == "szf") {
            f = enumerate_szf_closed(g, cap_or(o, kMatroidVerifyCap));
        } else if (m == "kernel") {
            f = kernel_matroid(g, cap_or(o, kMatroidVerifyCap));
        } else {
            throw UsageError("--method must be szf or kernel");
        }
        f.report = verify_matroid(f, cap_or(o, kMatroidVerifyCap));
        json out = family_with_hasse(f);
        if (m == "szf") out["operator_report"] = io::to_json(verify_szf_operator(g, cap_or(o, kMatroidVerifyCap)));
        return out;
    }
    if (command == "matroid gammoid") {
        const GammoidReport r = gammoid_duality_check(g, cap_or(o, kMatroidVerifyCap));
        json out{{"hypothesis_holds", r.hypothesis_holds},
                 {"holds", r.holds},
                 {"minimal_forcing_sets", io::to_json_list(r.minimal_forcing_sets)},
                 {"matching_complements", io::to_json_list(r.matching_complements)},
                 {"counterexample", r.counterexample ? io::to_json(*r.counterexample) : json(nullptr)}};
        json pairs = json::array();
        for (const auto& [s, m] : r.bijection) pairs.push_back({{"set", io::to_json(s)}, {"matching", io::to_json(m.edges)}});
        out["bijection"] = pairs;
        if (r.alternating_cycle)
            out["alternating_cycle"] = json::array({io::to_json(r.alternating_cycle->first.edges), io::to_json(r.alternating_cycle->second.edges)});
        return out;
    }

    if (command == "complete check") return io::to_json(is_szf_complete(g, cap_or(o, kCompletenessCap)));
    if (command == "complete upm") {
        const UpmResult r = is_upm(g);
        return {{"is_upm", r.is_upm}, {"matching", r.matching ? io::to_json(r.matching->edges) : json(nullptr)}};
    }
    if (command == "complete gadget") return io::to_json(gadget_blowup(g));
    throw UsageError("unhandled command '" + command + "'");
}

inline json error_json(const char* kind, const std::string& message) {
    return {{"error", {{"kind", kind}, {"message", message}}}};
}

// Runs one command; domain errors become an error payload with exit 1.
// Usage errors propagate.
inline CommandResult execute(const std::string& command, const Options& o, const json* inline_input = nullptr,
                             const std::filesystem::path& base = {}) {
    CommandResult r{command, json(), kExitOk};
    try {
        r.payload = execute_payload(command, o, inline_input, base);
    } catch (const NotRealizableError& e) {
        r.payload = error_json(e.kind(), e.what());
        r.payload["error"]["hat"] = io::to_json(e.hat());
        r.exit_code = kExitDomain;
    } catch (const Error& e) {
        r.payload = error_json(e.kind(), e.what());
        r.exit_code = kExitDomain;
    } catch (const io::json::exception& e) {
        r.payload = error_json("validation", e.what());
        r.exit_code = kExitDomain;
    }
    return r;
}

// Every key of `expect` must be present in `actual` with a matching value;
// objects match recursively, everything else exactly.
inline bool subset_match(const json& expect, const json& actual) {
    if (expect.is_object()) {
        if (!actual.is_object()) return false;
        for (const auto& [key, value] : expect.items())
            if (!actual.contains(key) || !subset_match(value, actual.at(key))) return false;
        return true;
    }
    return expect == actual;
}

// Manifest: {"instances": [{"input": <spec, path or inline object>,
// "command": "complete check", "args": ["--set", "0"], "expect": {...},
// "expect_error": "kind"}]}. Relative paths resolve against the manifest.
inline json run_batch(const json& manifest, const std::filesystem::path& base, int jobs) {
    if (!manifest.is_object() || !manifest.contains("instances") || !manifest.at("instances").is_array())
        throw ValidationError("manifest must be an object with an \"instances\" array");
    const json& instances = manifest.at("instances");
    std::vector<json> results(instances.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next++; i < instances.size(); i = next++) {
            const json& inst = instances[i];
            json res{{"index", i}};
            try {
                if (!inst.is_object() || !inst.contains("command") || !inst.at("command").is_string())
                    throw ValidationError("instance needs a \"command\" string");
                std::vector<std::string> words;
                std::istringstream cmd(inst.at("command").get<std::string>());
                for (std::string w; cmd >> w;) words.push_back(w);
                const json* inline_input = nullptr;
                if (inst.contains("input")) {
                    if (inst.at("input").is_string()) {
                        words.push_back(inst.at("input").get<std::string>());
                    } else if (inst.at("input").is_object()) {
                        inline_input = &inst.at("input");
                    } else {
                        throw ValidationError("\"input\" must be a string or an object");
                    }
                }
                if (inst.contains("args")) {
                    for (const json& a : inst.at("args")) {
                        if (!a.is_string()) throw ValidationError("\"args\" entries must be strings");
                        words.push_back(a.get<std::string>());
                    }
                }
                if (!words.empty() && words[0] == "batch") throw ValidationError("nested batch is not allowed");
                const auto [command, opts] = parse_command_line(words);
                const CommandResult r = execute(command, opts, inline_input, base);
                res["command"] = command;
                bool pass = false;
                if (inst.contains("expect_error")) {
                    pass = r.exit_code == kExitDomain && r.payload["error"]["kind"] == inst.at("expect_error");
                } else {
                    pass = r.exit_code == kExitOk && (!inst.contains("expect") || subset_match(inst.at("expect"), r.payload));
                }
                res["pass"] = pass;
                res["payload"] = r.payload;
            } catch (const UsageError& e) {
                res["pass"] = false;
                res["payload"] = error_json("usage", e.what());
            } catch (const std::exception& e) {
                res["pass"] = false;
                res["payload"] = error_json("validation", e.what());
            }
            results[i] = std::move(res);
        }
    };
    const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(instances.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    int passed = 0;
    for (const json& r : results)
        if (r.at("pass").get<bool>()) ++passed;
    return {{"instances", results}, {"passed", passed}, {"failed", static_cast<int>(results.size()) - passed}};
}

// Entry point: one JSON document on `out`, diagnostics on `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (args.empty() || args[0] == "--help" || args[0] == "-h" || args[0] == "help") {
        (args.empty() ? err : out) << usage_text();
        return args.empty() ? kExitUsage : kExitOk;
    }
    try {
        const auto [command, opts] = parse_command_line(args);
        if (command == "batch") {
            if (opts.input.empty()) throw UsageError("batch needs a manifest file");
            json report;
            try {
                const std::filesystem::path path(opts.input);
                report = run_batch(io::read_json_file(path.string()), path.parent_path(), opts.jobs);
            } catch (const Error& e) {
                out << error_json(e.kind(), e.what()).dump() << "\n";
                err << "error: " << e.what() << "\n";
                return kExitDomain;
            }
            out << report.dump() << "\n";
            return report.at("failed").get<int>() == 0 ? kExitOk : kExitDomain;
        }
        const CommandResult r = execute(command, opts);
        out << r.payload.dump() << "\n";
        if (r.exit_code != kExitOk) err << "error: " << r.payload["error"]["message"].get<std::string>() << "\n";
        return r.exit_code;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n" << usage_text();
        return kExitUsage;
    }
}

} // namespace skewforce::cli

#endif // SKEWFORCE_CLI_COMMANDS_HPP
