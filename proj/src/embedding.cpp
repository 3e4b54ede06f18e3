#include "conftc/embedding.hpp"

#include <fstream>
#include <sstream>

namespace conftc {

namespace {

bool is_terminal(const Polyline& p, const Point& q) { return q == p.front() || q == p.back(); }

// Classifies the contact between two sub-segments that are known to
// intersect. Returns false (violation) unless the contact is a single point
// that the caller accepts.
bool single_contact_point(const Point& a, const Point& b, const Point& c, const Point& d,
                          Point& out) {
    const int o1 = orient(a, b, c);
    const int o2 = orient(a, b, d);
    const int o3 = orient(c, d, a);
    const int o4 = orient(c, d, b);
    if (o1 * o2 < 0 && o3 * o4 < 0) return false;  // proper interior crossing
    if (o1 == 0 && o2 == 0) {
        // collinear: overlap of more than one point is a violation
        std::vector<Point> contacts;
        for (const Point* q : {&a, &b})
            if (point_on_segment(*q, c, d)) contacts.push_back(*q);
        for (const Point* q : {&c, &d})
            if (point_on_segment(*q, a, b)) contacts.push_back(*q);
        for (size_t i = 1; i < contacts.size(); ++i)
            if (contacts[i] != contacts[0]) return false;
        if (contacts.empty()) return false;
        out = contacts[0];
        return true;
    }
    // touching configuration: exactly one endpoint lies on the other segment
    if (o1 == 0 && point_on_segment(c, a, b)) { out = c; return true; }
    if (o2 == 0 && point_on_segment(d, a, b)) { out = d; return true; }
    if (o3 == 0 && point_on_segment(a, c, d)) { out = a; return true; }
    if (o4 == 0 && point_on_segment(b, c, d)) { out = b; return true; }
    return false;
}

}  // namespace

ValidationReport validate_embedding(const Graph& g, const PLEmbedding& emb) {
    ValidationReport rep;
    auto fail = [&rep](std::string msg) {
        rep.ok = false;
        rep.violation = std::move(msg);
        return rep;
    };

    if (static_cast<int>(emb.vertex_pos.size()) != g.vertex_count() ||
        static_cast<int>(emb.edge_poly.size()) != g.edge_count())
        return fail("embedding tables do not cover every vertex and edge");

    for (int v = 0; v < g.vertex_count(); ++v)
        for (int w = v + 1; w < g.vertex_count(); ++w)
            if (emb.pos(v) == emb.pos(w))
                return fail("vertices " + g.vertex_name(v) + " and " + g.vertex_name(w) +
                            " share a position");

    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        const Polyline& p = emb.poly(e);
        if (p.pts.size() < 2) return fail("edge " + ed.name + " has a degenerate polyline");
        if (ed.is_loop())
            return fail("edge " + ed.name + " is a loop; subdivide before embedding");
        if (p.front() != emb.pos(ed.u) || p.back() != emb.pos(ed.v))
            return fail("edge " + ed.name + " polyline does not match its endpoint positions");
        if (!p.is_simple()) return fail("edge " + ed.name + " polyline is not injective");
    }

    // vertex sitting on a non-incident edge image
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (int e = 0; e < g.edge_count(); ++e) {
            const auto& ed = g.edge(e);
            if (ed.u == v || ed.v == v) continue;
            const Polyline& p = emb.poly(e);
            for (size_t s = 0; s + 1 < p.pts.size(); ++s)
                if (point_on_segment(emb.pos(v), p.pts[s], p.pts[s + 1]))
                    return fail("vertex " + g.vertex_name(v) + " lies on edge " + ed.name);
        }
    }

    for (int e = 0; e < g.edge_count(); ++e) {
        for (int f = e + 1; f < g.edge_count(); ++f) {
            const auto& ee = g.edge(e);
            const auto& ef = g.edge(f);
            std::vector<Point> shared;
            for (int w : {ee.u, ee.v})
                if (w == ef.u || w == ef.v) shared.push_back(emb.pos(w));
            const Polyline& pe = emb.poly(e);
            const Polyline& pf = emb.poly(f);
            for (size_t i = 0; i + 1 < pe.pts.size(); ++i) {
                for (size_t j = 0; j + 1 < pf.pts.size(); ++j) {
                    if (!segments_intersect(pe.pts[i], pe.pts[i + 1], pf.pts[j], pf.pts[j + 1]))
                        continue;
                    Point contact;
                    if (!single_contact_point(pe.pts[i], pe.pts[i + 1], pf.pts[j], pf.pts[j + 1],
                                              contact))
                        return fail("edges " + ee.name + " and " + ef.name + " cross");
                    bool allowed = false;
                    for (const Point& s : shared)
                        if (contact == s) allowed = true;
                    if (!allowed || !is_terminal(pe, contact) || !is_terminal(pf, contact))
                        return fail("edges " + ee.name + " and " + ef.name +
                                    " meet away from a shared endpoint");
                }
            }
        }
    }
    return rep;
}

PLEmbedding subdivide_embedding(const Graph& original, const PLEmbedding& emb,
                                const Graph& subdivided, const SubdivisionMap& map) {
    PLEmbedding out;
    out.vertex_pos.resize(static_cast<size_t>(subdivided.vertex_count()));
    out.edge_poly.resize(static_cast<size_t>(subdivided.edge_count()));
    for (int v = 0; v < original.vertex_count(); ++v)
        out.vertex_pos[static_cast<size_t>(map.vertex_map[static_cast<size_t>(v)])] = emb.pos(v);
    for (int e = 0; e < original.edge_count(); ++e) {
        const EdgeChain& chain = map.chains[static_cast<size_t>(e)];
        const int parts = static_cast<int>(chain.edges.size());
        const Polyline& p = emb.poly(e);
        for (int i = 0; i < static_cast<int>(chain.inner_vertices.size()); ++i) {
            const Rat t = Rat(i + 1) / Rat(parts);
            out.vertex_pos[static_cast<size_t>(chain.inner_vertices[static_cast<size_t>(i)])] =
                p.at(t);
        }
        for (int s = 0; s < parts; ++s) {
            out.edge_poly[static_cast<size_t>(chain.edges[static_cast<size_t>(s)])] =
                p.slice(Rat(s) / Rat(parts), Rat(s + 1) / Rat(parts));
        }
    }
    return out;
}

PLEmbedding restrict_embedding(const PLEmbedding& emb, const std::vector<int>& vertices,
                               const std::vector<int>& edges) {
    PLEmbedding out;
    for (int v : vertices) out.vertex_pos.push_back(emb.pos(v));
    for (int e : edges) out.edge_poly.push_back(emb.poly(e));
    return out;
}

// ---------------------------------------------------------------------------
// text format
// ---------------------------------------------------------------------------

namespace {

HalfEdge parse_half_edge(const Graph& g, const std::string& token) {
    const auto colon = token.rfind(':');
    if (colon != std::string::npos) {
        const std::string name = token.substr(0, colon);
        const std::string endstr = token.substr(colon + 1);
        if ((endstr == "0" || endstr == "1") && g.find_edge(name))
            return {g.edge_index(name), endstr == "1" ? 1 : 0};
    }
    const int e = g.edge_index(token);
    return {e, 0};
}

std::string half_edge_token(const Graph& g, const HalfEdge& h) {
    const auto& ed = g.edge(h.edge);
    if (ed.is_loop()) return ed.name + ":" + std::to_string(h.end);
    return ed.name;
}

}  // namespace

GraphBundle parse_graph_text(const std::string& text) {
    GraphBundle bundle;
    std::vector<std::pair<int, std::vector<std::string>>> rot_lines;
    std::vector<std::pair<int, Point>> pos_lines;
    std::vector<std::pair<int, Polyline>> poly_lines;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind)) continue;
        try {
            if (kind == "v") {
                std::string id;
                ls >> id;
                bundle.graph.add_vertex(id);
            } else if (kind == "e") {
                std::string id, u, v;
                ls >> id >> u >> v;
                bundle.graph.add_edge(id, u, v);
            } else if (kind == "rot") {
                std::string v;
                ls >> v;
                std::vector<std::string> tokens;
                std::string t;
                while (ls >> t) tokens.push_back(t);
                rot_lines.emplace_back(bundle.graph.vertex_index(v), std::move(tokens));
            } else if (kind == "pos") {
                std::string v, x, y;
                ls >> v >> x >> y;
                pos_lines.emplace_back(bundle.graph.vertex_index(v),
                                       Point{rat_from_string(x), rat_from_string(y)});
            } else if (kind == "poly") {
                std::string e;
                ls >> e;
                Polyline p;
                std::string x, y;
                while (ls >> x >> y) p.pts.push_back({rat_from_string(x), rat_from_string(y)});
                poly_lines.emplace_back(bundle.graph.edge_index(e), std::move(p));
            } else {
                throw InvalidInputError("unknown record kind '" + kind + "'");
            }
        } catch (const std::exception& ex) {
            throw InvalidInputError("graph text line " + std::to_string(lineno) + ": " + ex.what());
        }
    }

    if (!pos_lines.empty()) {
        PLEmbedding emb;
        emb.vertex_pos.resize(static_cast<size_t>(bundle.graph.vertex_count()));
        std::vector<bool> have(emb.vertex_pos.size(), false);
        for (auto& [v, p] : pos_lines) {
            emb.vertex_pos[static_cast<size_t>(v)] = p;
            have[static_cast<size_t>(v)] = true;
        }
        for (size_t i = 0; i < have.size(); ++i)
            if (!have[i])
                throw InvalidInputError("pos missing for vertex " +
                                        bundle.graph.vertex_name(static_cast<int>(i)));
        emb.edge_poly.resize(static_cast<size_t>(bundle.graph.edge_count()));
        for (int e = 0; e < bundle.graph.edge_count(); ++e) {
            const auto& ed = bundle.graph.edge(e);
            emb.edge_poly[static_cast<size_t>(e)].pts = {emb.pos(ed.u), emb.pos(ed.v)};
        }
        for (auto& [e, p] : poly_lines) emb.edge_poly[static_cast<size_t>(e)] = std::move(p);
        bundle.embedding = std::move(emb);
    }

    if (!rot_lines.empty()) {
        std::vector<std::vector<HalfEdge>> order(
            static_cast<size_t>(bundle.graph.vertex_count()));
        for (auto& [v, tokens] : rot_lines) {
            for (const auto& t : tokens)
                order[static_cast<size_t>(v)].push_back(parse_half_edge(bundle.graph, t));
        }
        RotationSystem rot(std::move(order));
        if (!rot.is_valid_for(bundle.graph))
            throw InvalidInputError("rot lines do not list each incidence exactly once");
        bundle.rotation = std::move(rot);
    }
    return bundle;
}

GraphBundle load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInputError("cannot open graph file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_graph_text(ss.str());
}

std::string serialize_graph_text(const GraphBundle& bundle) {
    const Graph& g = bundle.graph;
    std::ostringstream out;
    for (int v = 0; v < g.vertex_count(); ++v) out << "v " << g.vertex_name(v) << "\n";
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        out << "e " << ed.name << " " << g.vertex_name(ed.u) << " " << g.vertex_name(ed.v) << "\n";
    }
    if (bundle.embedding) {
        const PLEmbedding& emb = *bundle.embedding;
        for (int v = 0; v < g.vertex_count(); ++v)
            out << "pos " << g.vertex_name(v) << " " << rat_to_string(emb.pos(v).x) << " "
                << rat_to_string(emb.pos(v).y) << "\n";
        for (int e = 0; e < g.edge_count(); ++e) {
            const Polyline& p = emb.poly(e);
            if (p.pts.size() <= 2) continue;  // straight edges are implied by pos
            out << "poly " << g.edge(e).name;
            for (const Point& q : p.pts)
                out << " " << rat_to_string(q.x) << " " << rat_to_string(q.y);
            out << "\n";
        }
    }
    if (bundle.rotation) {
        for (int v = 0; v < g.vertex_count(); ++v) {
            const auto& cyc = bundle.rotation->at(v);
            if (cyc.empty()) continue;
            out << "rot " << g.vertex_name(v);
            for (const HalfEdge& h : cyc) out << " " << half_edge_token(g, h);
            out << "\n";
        }
    }
    return out.str();
}

std::string graph_hash(const GraphBundle& bundle) {
    const std::string text = serialize_graph_text(bundle);
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace conftc
