#include "dyckcat/io.hpp"

#include <sstream>

namespace dyckcat {

Json to_json(const ARQuiver& ar, const AdmissibleSubchain* chain) {
    Json j;
    j["n"] = ar.n;
    if (chain) {
        j["sinks"] = chain->sinks;
        j["sources"] = chain->sources;
    }
    Json verts = Json::array();
    for (const PeakPath& v : ar.vertices) verts.push_back({{"l", v.l}, {"r", v.r}});
    j["vertices"] = verts;
    Json arrows = Json::array();
    for (auto [s, t] : ar.arrows) arrows.push_back({s, t});
    j["arrows"] = arrows;
    Json tau = Json::array();
    for (auto [v, w] : ar.tau) tau.push_back({v, w});
    j["tau"] = tau;
    return j;
}

Json to_json(const SnakeGraph& g) {
    Json j;
    std::string s;
    for (Dirn d : g.steps()) s.push_back(static_cast<char>(d));
    Json steps = Json::array();
    for (char c : s) steps.push_back(std::string(1, c));
    j["steps"] = steps;
    j["tiles"] = g.tiles();
    return j;
}

Json to_json(const PerfectMatching& p) {
    Json j = Json::array();
    for (const GridEdge& e : p) j.push_back({{e.a.x, e.a.y}, {e.b.x, e.b.y}});
    return j;
}

Json to_json(const VerifyReport& r) {
    Json j;
    j["subchain"] = r.chain.spec_string();
    j["n"] = r.chain.n;
    j["dyck_count"] = r.dyck_count;
    j["mutation_count"] = r.mutation_count;
    j["equal"] = r.equal;
    j["missing"] = r.missing;
    j["extra"] = r.extra;
    return j;
}

Json to_json(const RepA& rep) {
    Json j;
    j["dims"] = rep.dims;
    Json arrows = Json::array();
    for (int s = 1; s <= rep.quiver.m - 1; ++s) {
        int from = rep.quiver.edge(s) == EdgeDir::Right ? s : s + 1;
        int to = rep.quiver.edge(s) == EdgeDir::Right ? s + 1 : s;
        const Mat& m = rep.maps[s - 1];
        Json rows = Json::array();
        for (int r = 0; r < m.rows(); ++r) {
            Json row = Json::array();
            for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).get_str());
            rows.push_back(row);
        }
        arrows.push_back({{"from", from}, {"to", to}, {"matrix", rows}});
    }
    j["arrows"] = arrows;
    return j;
}

std::string to_dot(const ARQuiver& ar) {
    std::ostringstream os;
    os << "digraph AR {\n  rankdir=LR;\n  node [shape=plaintext];\n";
    for (size_t i = 0; i < ar.vertices.size(); ++i)
        os << "  v" << i << " [label=\"[" << ar.vertices[i].l << ',' << ar.vertices[i].r << "]\"];\n";
    for (auto [s, t] : ar.arrows) os << "  v" << s << " -> v" << t << ";\n";
    for (auto [v, w] : ar.tau) os << "  v" << v << " -> v" << w << " [style=dashed, color=gray];\n";
    os << "}\n";
    return os.str();
}

}  // namespace dyckcat
