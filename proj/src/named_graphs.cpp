#include "conftc/named_graphs.hpp"

#include <algorithm>

namespace conftc {

namespace {

Point pt(long x, long y) { return {Rat(x), Rat(y)}; }

void straight_edges(GraphBundle& b) {
    PLEmbedding& emb = *b.embedding;
    emb.edge_poly.resize(static_cast<size_t>(b.graph.edge_count()));
    for (int e = 0; e < b.graph.edge_count(); ++e) {
        if (!emb.edge_poly[static_cast<size_t>(e)].pts.empty()) continue;
        const auto& ed = b.graph.edge(e);
        emb.edge_poly[static_cast<size_t>(e)].pts = {emb.pos(ed.u), emb.pos(ed.v)};
    }
}

}  // namespace

GraphBundle star3() {
    GraphBundle b;
    b.graph.add_vertex("c");
    b.graph.add_vertex("l1");
    b.graph.add_vertex("l2");
    b.graph.add_vertex("l3");
    b.graph.add_edge("a1", "c", "l1");
    b.graph.add_edge("a2", "c", "l2");
    b.graph.add_edge("a3", "c", "l3");
    b.embedding = PLEmbedding{};
    b.embedding->vertex_pos = {pt(0, 0), pt(0, 2), pt(-2, -1), pt(2, -1)};
    straight_edges(b);
    b.rotation = rotation_from_embedding(b.graph, *b.embedding);
    return b;
}

GraphBundle theta() {
    GraphBundle b;
    b.graph.add_vertex("t");
    b.graph.add_vertex("b");
    b.graph.add_edge("left", "t", "b");
    b.graph.add_edge("mid", "t", "b");
    b.graph.add_edge("right", "t", "b");
    b.embedding = PLEmbedding{};
    b.embedding->vertex_pos = {pt(0, 2), pt(0, -2)};
    b.embedding->edge_poly.resize(3);
    b.embedding->edge_poly[0].pts = {pt(0, 2), pt(-2, 0), pt(0, -2)};
    b.embedding->edge_poly[1].pts = {pt(0, 2), pt(0, -2)};
    b.embedding->edge_poly[2].pts = {pt(0, 2), pt(2, 0), pt(0, -2)};
    b.rotation = rotation_from_embedding(b.graph, *b.embedding);
    return b;
}

GraphBundle lollipop() {
    GraphBundle b;
    b.graph.add_vertex("a");  // essential vertex on the cycle
    b.graph.add_vertex("c");  // far side of the cycle
    b.graph.add_vertex("leaf");
    b.graph.add_edge("cl", "a", "c");   // counterclockwise: a -> right arc is positive
    b.graph.add_edge("cr", "a", "c");
    b.graph.add_edge("pendant", "a", "leaf");
    b.embedding = PLEmbedding{};
    b.embedding->vertex_pos = {pt(0, 0), pt(0, 2), pt(0, -2)};
    b.embedding->edge_poly.resize(3);
    b.embedding->edge_poly[0].pts = {pt(0, 0), pt(-1, 1), pt(0, 2)};
    b.embedding->edge_poly[1].pts = {pt(0, 0), pt(1, 1), pt(0, 2)};
    b.embedding->edge_poly[2].pts = {pt(0, 0), pt(0, -2)};
    b.rotation = rotation_from_embedding(b.graph, *b.embedding);
    return b;
}

GraphBundle tree3() {
    GraphBundle b;
    for (const char* name : {"a", "b", "c", "a1", "a2", "b1", "b2", "c1", "c2"})
        b.graph.add_vertex(name);
    b.graph.add_edge("ab", "a", "b");
    b.graph.add_edge("bc", "b", "c");
    b.graph.add_edge("ea1", "a", "a1");
    b.graph.add_edge("ea2", "a", "a2");
    b.graph.add_edge("eb1", "b", "b1");
    b.graph.add_edge("eb2", "b", "b2");
    b.graph.add_edge("ec1", "c", "c1");
    b.graph.add_edge("ec2", "c", "c2");
    b.embedding = PLEmbedding{};
    b.embedding->vertex_pos = {pt(0, 0), pt(4, 0),  pt(8, 0),  pt(-2, 2), pt(-2, -2),
                               pt(3, 3), pt(5, 3), pt(10, 2), pt(10, -2)};
    straight_edges(b);
    b.rotation = rotation_from_embedding(b.graph, *b.embedding);
    return b;
}

GraphBundle complete_k5() {
    GraphBundle b;
    for (int i = 1; i <= 5; ++i) b.graph.add_vertex("v" + std::to_string(i));
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j)
            b.graph.add_edge("e" + std::to_string(i) + std::to_string(j), "v" + std::to_string(i),
                             "v" + std::to_string(j));
    // canonical rotation: incidences in edge order
    std::vector<std::vector<HalfEdge>> order;
    for (int v = 0; v < b.graph.vertex_count(); ++v) order.push_back(b.graph.incident(v));
    b.rotation = RotationSystem(std::move(order));
    return b;
}

GraphBundle complete_k33() {
    GraphBundle b;
    for (int i = 1; i <= 3; ++i) b.graph.add_vertex("a" + std::to_string(i));
    for (int i = 1; i <= 3; ++i) b.graph.add_vertex("b" + std::to_string(i));
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            b.graph.add_edge("e" + std::to_string(i) + std::to_string(j), "a" + std::to_string(i),
                             "b" + std::to_string(j));
    std::vector<std::vector<HalfEdge>> order;
    for (int v = 0; v < b.graph.vertex_count(); ++v) order.push_back(b.graph.incident(v));
    b.rotation = RotationSystem(std::move(order));
    return b;
}

GraphBundle path_graph(int n) {
    if (n < 1) throw InvalidInputError("path graph needs at least one vertex");
    GraphBundle b;
    for (int i = 0; i < n; ++i) b.graph.add_vertex("p" + std::to_string(i));
    for (int i = 0; i + 1 < n; ++i)
        b.graph.add_edge("e" + std::to_string(i), "p" + std::to_string(i), "p" + std::to_string(i + 1));
    b.embedding = PLEmbedding{};
    for (int i = 0; i < n; ++i) b.embedding->vertex_pos.push_back(pt(2 * i, 0));
    straight_edges(b);
    b.rotation = rotation_from_embedding(b.graph, *b.embedding);
    return b;
}

GraphBundle cycle_graph(int n) {
    if (n < 1) throw InvalidInputError("cycle graph needs at least one vertex");
    GraphBundle b;
    for (int i = 0; i < n; ++i) b.graph.add_vertex("c" + std::to_string(i));
    if (n == 1) {
        b.graph.add_edge("e0", "c0", "c0");  // a loop; no geometry
        return b;
    }
    for (int i = 0; i < n; ++i)
        b.graph.add_edge("e" + std::to_string(i), "c" + std::to_string(i),
                         "c" + std::to_string((i + 1) % n));
    if (n >= 3) {
        // convex position along a parabola keeps everything rational
        b.embedding = PLEmbedding{};
        for (int i = 0; i < n; ++i) b.embedding->vertex_pos.push_back(pt(i, static_cast<long>(i) * i));
        straight_edges(b);
        b.rotation = rotation_from_embedding(b.graph, *b.embedding);
    }
    return b;
}

std::optional<GraphBundle> named_graph(const std::string& name) {
    if (name == "s3" || name == "star3" || name == "star") return star3();
    if (name == "theta") return theta();
    if (name == "lollipop") return lollipop();
    if (name == "tree3") return tree3();
    if (name == "k5") return complete_k5();
    if (name == "k33") return complete_k33();
    const auto parse_n = [&](const std::string& prefix) -> std::optional<int> {
        if (name.rfind(prefix, 0) != 0) return std::nullopt;
        const std::string digits = name.substr(prefix.size());
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            return std::nullopt;
        return std::stoi(digits);
    };
    if (auto n = parse_n("path")) return path_graph(*n);
    if (auto n = parse_n("cycle")) return cycle_graph(*n);
    return std::nullopt;
}

RotationSystem rotation_from_embedding(const Graph& g, const PLEmbedding& emb) {
    std::vector<std::vector<HalfEdge>> order(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<std::pair<Point, HalfEdge>> dirs;
        for (const HalfEdge& h : g.incident(v)) {
            Polyline p = emb.poly(h.edge);
            if (h.end == 1) p = p.reversed();
            dirs.push_back({p.pts[1] - emb.pos(v), h});
        }
        // exact counterclockwise angle sort from the positive x-axis
        auto angle_key = [](const Point& d) {
            // 0: positive x-axis, 1: open upper half, 2: negative x-axis, 3: lower half
            if (d.y == 0) return d.x > 0 ? 0 : 2;
            return d.y > 0 ? 1 : 3;
        };
        std::stable_sort(dirs.begin(), dirs.end(), [&](const auto& a, const auto& b) {
            const int ka = angle_key(a.first), kb = angle_key(b.first);
            if (ka != kb) return ka < kb;
            const Rat cr = cross(a.first, b.first);
            if (cr != 0) return cr > 0;
            // equal directions: deterministic tie-break by edge id
            return a.second.edge * 2 + a.second.end < b.second.edge * 2 + b.second.end;
        });
        for (auto& [d, h] : dirs) order[static_cast<size_t>(v)].push_back(h);
    }
    return RotationSystem(std::move(order));
}

}  // namespace conftc
