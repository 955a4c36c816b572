#ifndef OSPCHAR_REPORT_HPP
#define OSPCHAR_REPORT_HPP

// Text, JSON and DOT renderings of blocks, matrices and diagrams.

#include <json.hpp>

#include "charlib.hpp"
#include "oracle.hpp"

namespace ospchar {

// printable weight of a reduced-block member (the positive representative;
// odd members go through the signed model)
inline std::string member_weight_string(const AlgebraDescriptor& alg, const WeightDiagram& member) {
    if (alg.family == Family::OSP_ODD) {
        WeightDiagram s = decanonicalize_odd(member);
        std::string w = render_weight(weights_of(alg, s).front());
        return w;
    }
    return render_weight(weights_of(alg, member).front());
}

inline nlohmann::json matrix_json(const IntMatrix& M) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : M.e) rows.push_back(r);
    return rows;
}

inline IntMatrix matrix_from_json(const nlohmann::json& j) {
    IntMatrix M;
    for (const auto& r : j) M.e.push_back(r.get<std::vector<i64>>());
    return M;
}

inline nlohmann::json diagram_json(const WeightDiagram& f) {
    return nlohmann::json{{"family", family_name(f.family)}, {"text", render_diagram(f)}};
}

inline WeightDiagram diagram_from_json(const nlohmann::json& j) {
    std::string fam = j.at("family").get<std::string>();
    Family f = fam == "gl" ? Family::GL : fam == "osp_even" ? Family::OSP_EVEN : Family::OSP_ODD;
    return parse_diagram(f, j.at("text").get<std::string>());
}

struct EdgeRecord {
    int from, to;
    MoveEdge edge;
};

inline std::vector<EdgeRecord> block_edges(const BlockIndex& b) {
    std::vector<EdgeRecord> out;
    for (size_t i = 0; i < b.size(); ++i)
        for (const auto& [j, e] : b.adj[i]) out.push_back({(int)i, j, e});
    return out;
}

inline nlohmann::json block_report_json(const BlockIndex& b) {
    nlohmann::json j;
    j["algebra"] = b.alg.name();
    nlohmann::json order = nlohmann::json::array();
    for (const auto& m : b.members) order.push_back(member_weight_string(b.alg, m));
    j["order"] = order;
    nlohmann::json diagrams = nlohmann::json::array();
    for (const auto& m : b.members) diagrams.push_back(render_diagram(m));
    j["diagrams"] = diagrams;
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : block_edges(b))
        edges.push_back(nlohmann::json{{"from", member_weight_string(b.alg, b.members[e.from])},
                                       {"to", member_weight_string(b.alg, b.members[e.to])},
                                       {"label", e.edge.label()}});
    j["edges"] = edges;
    j["K"] = matrix_json(k_matrix(b));
    j["D"] = matrix_json(d_matrix(b));
    return j;
}

inline std::string block_report_text(const BlockIndex& b) {
    std::ostringstream os;
    os << "algebra: " << b.alg.name() << "\n";
    os << "members (" << b.size() << "):\n";
    for (size_t i = 0; i < b.size(); ++i)
        os << "  [" << i << "] " << member_weight_string(b.alg, b.members[i]) << "   "
           << render_diagram(b.members[i]) << "\n";
    os << "edges:\n";
    for (const auto& e : block_edges(b))
        os << "  " << member_weight_string(b.alg, b.members[e.from]) << " -> "
           << member_weight_string(b.alg, b.members[e.to]) << "  " << e.edge.label() << "\n";
    auto print_matrix = [&](const char* name, const IntMatrix& M) {
        os << name << ":\n";
        for (const auto& r : M.e) {
            os << "  [";
            for (size_t j = 0; j < r.size(); ++j) os << (j ? ", " : "") << r[j];
            os << "]\n";
        }
    };
    print_matrix("K", k_matrix(b));
    print_matrix("D", d_matrix(b));
    return os.str();
}

inline std::string block_dot(const BlockIndex& b) {
    std::ostringstream os;
    os << "digraph block {\n";
    os << "  rankdir=LR;\n";
    for (size_t i = 0; i < b.size(); ++i)
        os << "  n" << i << " [label=\"" << member_weight_string(b.alg, b.members[i]) << "\"];\n";
    for (const auto& e : block_edges(b))
        os << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.edge.label() << "\"];\n";
    os << "}\n";
    return os.str();
}

inline std::string matrix_text(const IntMatrix& M) {
    std::ostringstream os;
    for (const auto& r : M.e) {
        os << "[";
        for (size_t j = 0; j < r.size(); ++j) os << (j ? ", " : "") << r[j];
        os << "]\n";
    }
    return os.str();
}

} // namespace ospchar

#endif
