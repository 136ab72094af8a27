#ifndef SKEWFORCE_IO_DOT_HPP
#define SKEWFORCE_IO_DOT_HPP

#include <sstream>
#include <string>

#include "skewforce/graph.hpp"
#include "skewforce/matching.hpp"
#include "skewforce/vertex_set.hpp"

namespace skewforce::io {

// solid = mandatory, dashed = optional, dotted = forbidden; generating-set
// vertices are filled.
inline const char* dot_style(EdgeClass c) {
    switch (c) {
        case EdgeClass::mandatory: return "solid";
        case EdgeClass::optional: return "dashed";
        case EdgeClass::forbidden: return "dotted";
    }
    return "dotted";
}

inline std::string thermal_dot(const Graph& t, const ThermalDecomposition& d, const VertexSet& filled) {
    std::ostringstream out;
    out << "graph thermal {\n";
    out << "  node [shape=circle];\n";
    for (int v = 0; v < t.order(); ++v) {
        out << "  " << v;
        if (filled.contains(v)) out << " [style=filled, fillcolor=gray]";
        out << ";\n";
    }
    for (std::size_t i = 0; i < t.edges().size(); ++i) {
        const Edge& e = t.edges()[i];
        out << "  " << e.u << " -- " << e.v << " [style=" << dot_style(d.edge_class[i]) << ", label=\""
            << to_tag(d.edge_class[i]) << (d.forbidden_prime[i] ? "'" : "") << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

inline std::string graph_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph g {\n";
    for (int v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
    for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace skewforce::io

#endif // SKEWFORCE_IO_DOT_HPP
