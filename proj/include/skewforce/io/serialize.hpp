#ifndef SKEWFORCE_IO_SERIALIZE_HPP
#define SKEWFORCE_IO_SERIALIZE_HPP

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "skewforce/completeness.hpp"
#include "skewforce/errors.hpp"
#include "skewforce/exact/kernel.hpp"
#include "skewforce/family.hpp"
#include "skewforce/forcing.hpp"
#include "skewforce/generate.hpp"
#include "skewforce/graph.hpp"
#include "skewforce/hypergraph.hpp"
#include "skewforce/hypernull.hpp"
#include "skewforce/matching.hpp"
#include "skewforce/matroid.hpp"

namespace skewforce::io {

using json = nlohmann::json;

// Documents:
//   graph       {"type": "graph", "n": 4, "edges": [[0,1], [1,2]]}
//   hypergraph  {"type": "hypergraph", "n": 5, "edges": [[0,1,2], [0,3,4]]}
// "type" may be omitted; it then defaults to graph unless some edge has a
// size other than 2.

namespace detail {

inline const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing field '") + key + "'");
    return j.at(key);
}

inline int as_int(const json& j, const char* what) {
    if (!j.is_number_integer()) throw ValidationError(std::string(what) + " must be an integer");
    return j.get<int>();
}

inline std::vector<std::vector<int>> int_lists(const json& j, const char* what) {
    if (!j.is_array()) throw ValidationError(std::string(what) + " must be an array");
    std::vector<std::vector<int>> out;
    for (const json& row : j) {
        if (!row.is_array()) throw ValidationError(std::string(what) + " entries must be arrays");
        std::vector<int> r;
        for (const json& x : row) r.push_back(as_int(x, what));
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Core objects.

inline json to_json(const VertexSet& s) { return s.members(); }

inline VertexSet vertex_set_from_json(const json& j, int n) {
    if (!j.is_array()) throw ValidationError("vertex set must be an array");
    VertexSet s(n);
    for (const json& x : j) {
        const int v = detail::as_int(x, "vertex");
        if (v < 0 || v >= n) throw ValidationError("vertex " + std::to_string(v) + " is outside 0.." + std::to_string(n - 1));
        s.insert(v);
    }
    return s;
}

inline std::vector<json> to_json_list(const std::vector<VertexSet>& sets) {
    std::vector<json> out;
    for (const VertexSet& s : sets) out.push_back(to_json(s));
    return out;
}

inline json to_json(const Edge& e) { return json::array({e.u, e.v}); }

inline json to_json(const std::vector<Edge>& edges) {
    json out = json::array();
    for (const Edge& e : edges) out.push_back(to_json(e));
    return out;
}

inline std::vector<Edge> edges_from_json(const json& j) {
    std::vector<Edge> out;
    for (const auto& row : detail::int_lists(j, "edges")) {
        if (row.size() != 2) throw ValidationError("graph edges must have exactly two endpoints");
        out.emplace_back(row[0], row[1]);
    }
    return out;
}

inline json to_json(const Graph& g) {
    return json{{"type", "graph"}, {"n", g.order()}, {"edges", to_json(g.edges())}};
}

inline json to_json(const Hypergraph& h) {
    return json{{"type", "hypergraph"}, {"n", h.order()}, {"edges", h.edges()}};
}

inline json to_json(const GeneratedObject& o) {
    return std::visit([](const auto& x) { return to_json(x); }, o);
}

inline GeneratedObject object_from_json(const json& j) {
    const int n = detail::as_int(detail::field(j, "n"), "n");
    const auto lists = detail::int_lists(detail::field(j, "edges"), "edges");
    std::string type;
    if (j.contains("type")) {
        if (!j.at("type").is_string()) throw ValidationError("type must be a string");
        type = j.at("type").get<std::string>();
    } else {
        type = "graph";
        for (const auto& e : lists)
            if (e.size() != 2) type = "hypergraph";
    }
    if (type == "graph") return Graph(n, edges_from_json(j.at("edges")));
    if (type == "hypergraph") return Hypergraph(n, lists);
    throw ValidationError("unknown type '" + type + "'");
}

inline Graph graph_from_json(const json& j) {
    GeneratedObject o = object_from_json(j);
    if (auto* g = std::get_if<Graph>(&o)) return *g;
    throw ValidationError("expected a graph, got a hypergraph");
}

// Graphs are accepted as 2-uniform hypergraphs.
inline Hypergraph hypergraph_from_json(const json& j) {
    GeneratedObject o = object_from_json(j);
    if (auto* h = std::get_if<Hypergraph>(&o)) return *h;
    return Hypergraph::from_graph(std::get<Graph>(o));
}

inline json to_json(const RationalVector& x) {
    json out = json::array();
    for (const Rational& q : x) out.push_back(to_fraction_string(q));
    return out;
}

inline RationalVector rational_vector_from_json(const json& j) {
    if (!j.is_array()) throw ValidationError("rational vector must be an array");
    RationalVector out;
    for (const json& x : j) {
        if (x.is_string()) {
            out.push_back(parse_rational(x.get<std::string>()));
        } else if (x.is_number_integer()) {
            out.emplace_back(x.get<long>());
        } else {
            throw ValidationError("rational entries must be \"p/q\" strings or integers");
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Forcing.

inline json to_json(const std::vector<ForcingStep>& steps) {
    json out = json::array();
    for (const ForcingStep& s : steps) out.push_back({{"forcer", s.forcer}, {"forced", s.forced}});
    return out;
}

inline json to_json(const ForcingTrace& t) {
    return json{{"initial", to_json(t.initial)}, {"steps", to_json(t.steps)}, {"final", to_json(t.final)}};
}

inline ForcingTrace trace_from_json(const json& j, int n) {
    ForcingTrace t;
    t.initial = vertex_set_from_json(detail::field(j, "initial"), n);
    t.final = vertex_set_from_json(detail::field(j, "final"), n);
    for (const json& s : detail::field(j, "steps"))
        t.steps.push_back({detail::as_int(detail::field(s, "forcer"), "forcer"), detail::as_int(detail::field(s, "forced"), "forced")});
    return t;
}

// ---------------------------------------------------------------------------
// Matchings and decompositions.

inline json to_json(const Matching& m) { return json{{"edges", to_json(m.edges)}, {"size", m.size()}}; }

inline Matching matching_from_json(const json& j, int n) { return Matching::of(n, edges_from_json(detail::field(j, "edges"))); }

inline json to_json(const ThermalDecomposition& d, const Graph& t) {
    json edges = json::array();
    for (std::size_t i = 0; i < t.edges().size(); ++i)
        edges.push_back({{"edge", to_json(t.edges()[i])},
                         {"class", to_tag(d.edge_class[i])},
                         {"f_prime", d.forbidden_prime[i] != 0}});
    json comps = json::array();
    for (const ThermalComponent& c : d.components)
        comps.push_back({{"vertices", c.vertices}, {"edges", to_json(c.edges)}, {"class", to_string(c.kind)}});
    return json{{"edges", edges}, {"components", comps}};
}

inline EdgeClass edge_class_from_tag(const std::string& tag) {
    if (tag == "M") return EdgeClass::mandatory;
    if (tag == "O") return EdgeClass::optional;
    if (tag == "F") return EdgeClass::forbidden;
    throw ValidationError("unknown edge class '" + tag + "'");
}

inline ThermalDecomposition thermal_from_json(const json& j) {
    ThermalDecomposition d;
    for (const json& e : detail::field(j, "edges")) {
        const auto ends = detail::int_lists(json::array({detail::field(e, "edge")}), "edge").front();
        if (ends.size() != 2) throw ValidationError("edge must have two endpoints");
        const Edge edge(ends[0], ends[1]);
        const EdgeClass c = edge_class_from_tag(detail::field(e, "class").get<std::string>());
        const bool prime = detail::field(e, "f_prime").get<bool>();
        d.edge_class.push_back(c);
        d.forbidden_prime.push_back(prime ? 1 : 0);
        (c == EdgeClass::mandatory ? d.mandatory : c == EdgeClass::optional ? d.optional : d.forbidden).push_back(edge);
        if (prime) d.forbidden_prime_edges.push_back(edge);
    }
    for (const json& c : detail::field(j, "components")) {
        ThermalComponent comp;
        comp.vertices = c.at("vertices").get<std::vector<int>>();
        comp.edges = edges_from_json(c.at("edges"));
        const std::string kind = c.at("class").get<std::string>();
        if (kind == "perfect-matching") {
            comp.kind = ComponentClass::perfect_matching;
        } else if (kind == "bc-tree") {
            comp.kind = ComponentClass::bc_tree;
        } else {
            throw ValidationError("unknown component class '" + kind + "'");
        }
        d.components.push_back(std::move(comp));
    }
    return d;
}

inline json to_json(const DMDecomposition& d) {
    return json{{"even", to_json(d.even)},
                {"odd", to_json(d.odd)},
                {"unreachable", to_json(d.unreachable)},
                {"witness", to_json(d.witness.edges)}};
}

inline DMDecomposition dm_from_json(const json& j, int n) {
    DMDecomposition d;
    d.even = vertex_set_from_json(detail::field(j, "even"), n);
    d.odd = vertex_set_from_json(detail::field(j, "odd"), n);
    d.unreachable = vertex_set_from_json(detail::field(j, "unreachable"), n);
    d.witness = Matching::of(n, edges_from_json(detail::field(j, "witness")));
    return d;
}

// ---------------------------------------------------------------------------
// Families and matroid reports.

inline json to_json(const MatroidReport& r) {
    json out{{"contains_universe", r.contains_universe},
             {"intersection_closed", r.intersection_closed},
             {"is_closure_operator", r.is_closure_operator},
             {"is_matroid", r.is_matroid},
             {"rank", r.rank},
             {"bases", to_json_list(r.bases)},
             {"hyperplanes", to_json_list(r.hyperplanes)},
             {"exchange_counterexample", nullptr},
             {"intersection_violation", nullptr}};
    if (r.exchange_counterexample) {
        const auto& c = *r.exchange_counterexample;
        out["exchange_counterexample"] = {{"x", to_json(c.x)}, {"a", c.a}, {"b", c.b}};
    }
    if (r.intersection_violation)
        out["intersection_violation"] = json::array({to_json(r.intersection_violation->first), to_json(r.intersection_violation->second)});
    return out;
}

inline MatroidReport matroid_report_from_json(const json& j, int n) {
    MatroidReport r;
    r.contains_universe = detail::field(j, "contains_universe").get<bool>();
    r.intersection_closed = detail::field(j, "intersection_closed").get<bool>();
    r.is_closure_operator = detail::field(j, "is_closure_operator").get<bool>();
    r.is_matroid = detail::field(j, "is_matroid").get<bool>();
    r.rank = detail::as_int(detail::field(j, "rank"), "rank");
    for (const json& b : detail::field(j, "bases")) r.bases.push_back(vertex_set_from_json(b, n));
    for (const json& h : detail::field(j, "hyperplanes")) r.hyperplanes.push_back(vertex_set_from_json(h, n));
    if (j.contains("exchange_counterexample") && !j.at("exchange_counterexample").is_null()) {
        const json& c = j.at("exchange_counterexample");
        r.exchange_counterexample = ExchangeCounterexample{vertex_set_from_json(detail::field(c, "x"), n),
                                                           detail::as_int(detail::field(c, "a"), "a"),
                                                           detail::as_int(detail::field(c, "b"), "b")};
    }
    if (j.contains("intersection_violation") && !j.at("intersection_violation").is_null()) {
        const json& p = j.at("intersection_violation");
        r.intersection_violation = std::make_pair(vertex_set_from_json(p.at(0), n), vertex_set_from_json(p.at(1), n));
    }
    return r;
}

inline json to_json(const ClosedSetFamily& f) {
    json out{{"n", f.n}, {"provenance", to_string(f.provenance)}, {"members", to_json_list(f.members)}};
    out["report"] = f.report ? to_json(*f.report) : json(nullptr);
    return out;
}

inline Provenance provenance_from_string(const std::string& s) {
    if (s == "szf") return Provenance::szf;
    if (s == "kernel") return Provenance::kernel;
    if (s == "hyper-stalled") return Provenance::hyper_stalled;
    if (s == "other") return Provenance::other;
    throw ValidationError("unknown provenance '" + s + "'");
}

inline ClosedSetFamily family_from_json(const json& j) {
    ClosedSetFamily f;
    f.n = detail::as_int(detail::field(j, "n"), "n");
    f.provenance = j.contains("provenance") ? provenance_from_string(j.at("provenance").get<std::string>()) : Provenance::other;
    for (const json& m : detail::field(j, "members")) f.members.push_back(vertex_set_from_json(m, f.n));
    if (j.contains("report") && !j.at("report").is_null()) f.report = matroid_report_from_json(j.at("report"), f.n);
    return f;
}

// ---------------------------------------------------------------------------
// Kernel, completeness, hypergraph nullvariety.

inline std::string hex64(std::uint64_t x) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
    return buf;
}

inline json to_json(const NullspaceBasis& b) {
    json basis = json::array();
    for (const RationalVector& v : b.basis) basis.push_back(to_json(v));
    return json{{"n", b.n}, {"dimension", b.dimension}, {"basis", basis}, {"fingerprint", hex64(b.fingerprint)}};
}

inline NullspaceBasis nullspace_from_json(const json& j) {
    NullspaceBasis b;
    b.n = detail::as_int(detail::field(j, "n"), "n");
    b.dimension = detail::as_int(detail::field(j, "dimension"), "dimension");
    for (const json& v : detail::field(j, "basis")) b.basis.push_back(rational_vector_from_json(v));
    b.fingerprint = std::stoull(detail::field(j, "fingerprint").get<std::string>(), nullptr, 16);
    return b;
}

inline json to_json(const CompletenessReport& r) {
    return json{{"verdict", r.verdict},
                {"szf_closed_count", r.szf_closed_count},
                {"realizable_count", r.realizable_count},
                {"witnesses", to_json_list(r.witnesses)}};
}

inline CompletenessReport completeness_from_json(const json& j, int n) {
    CompletenessReport r;
    r.verdict = detail::field(j, "verdict").get<bool>();
    r.szf_closed_count = detail::as_int(detail::field(j, "szf_closed_count"), "szf_closed_count");
    r.realizable_count = detail::as_int(detail::field(j, "realizable_count"), "realizable_count");
    for (const json& w : detail::field(j, "witnesses")) r.witnesses.push_back(vertex_set_from_json(w, n));
    return r;
}

inline json to_json(const LinkPolynomial& f) {
    return json{{"vertex", f.vertex}, {"monomials", to_json_list(f.monomials)}};
}

inline json to_json(const ComponentDescriptor& d) {
    json surviving = json::array();
    for (const LinkPolynomial& f : d.surviving) surviving.push_back(to_json(f));
    return json{{"generating_set", to_json(d.generating_set)}, {"codimension", d.codimension}, {"surviving", surviving}};
}

inline ComponentDescriptor component_from_json(const json& j, int n) {
    ComponentDescriptor d;
    d.generating_set = vertex_set_from_json(detail::field(j, "generating_set"), n);
    d.codimension = detail::as_int(detail::field(j, "codimension"), "codimension");
    for (const json& f : detail::field(j, "surviving")) {
        LinkPolynomial p{detail::as_int(detail::field(f, "vertex"), "vertex"), {}};
        for (const json& m : detail::field(f, "monomials")) p.monomials.push_back(vertex_set_from_json(m, n));
        d.surviving.push_back(std::move(p));
    }
    return d;
}

inline json to_json(const CompleteHypergraphReport& r) {
    json out{{"n", r.n},
             {"k", r.k},
             {"components", r.components},
             {"component_size", r.component_size},
             {"stalled_excluded_sizes", r.stalled_excluded_sizes},
             {"kernel_closed_min_size", r.component_size},
             {"verification", nullptr}};
    if (r.verification) {
        const auto& v = *r.verification;
        out["verification"] = {{"subsets", v.subsets},
                               {"stalled_mismatches", v.stalled_mismatches},
                               {"kernel_closed_mismatches", v.kernel_closed_mismatches},
                               {"minimal_kernel_closed_size", v.minimal_kernel_closed_size},
                               {"minimal_kernel_closed_count", v.minimal_kernel_closed_count}};
    }
    return out;
}

inline CompleteHypergraphReport complete_report_from_json(const json& j) {
    CompleteHypergraphReport r;
    r.n = detail::as_int(detail::field(j, "n"), "n");
    r.k = detail::as_int(detail::field(j, "k"), "k");
    r.components = detail::field(j, "components").get<long long>();
    r.component_size = detail::as_int(detail::field(j, "component_size"), "component_size");
    r.stalled_excluded_sizes = detail::field(j, "stalled_excluded_sizes").get<std::vector<int>>();
    if (j.contains("verification") && !j.at("verification").is_null()) {
        const json& v = j.at("verification");
        CompleteHypergraphVerification ver;
        ver.subsets = v.at("subsets").get<int>();
        ver.stalled_mismatches = v.at("stalled_mismatches").get<int>();
        ver.kernel_closed_mismatches = v.at("kernel_closed_mismatches").get<int>();
        ver.minimal_kernel_closed_size = v.at("minimal_kernel_closed_size").get<int>();
        ver.minimal_kernel_closed_count = v.at("minimal_kernel_closed_count").get<long long>();
        r.verification = ver;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Files.

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError("'" + path + "' is not valid JSON: " + e.what());
    }
}

} // namespace skewforce::io

#endif // SKEWFORCE_IO_SERIALIZE_HPP
