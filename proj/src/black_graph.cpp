#include "dbcover/black_graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <queue>

#include <json.hpp>

namespace dbcover::graph {

BlackGraph make_graph(Index vertex_count, std::vector<Edge> edges) {
    if (vertex_count < 1) throw GraphError("graph needs at least one vertex");
    for (const Edge& e : edges) {
        if (e.tail < 0 || e.tail >= vertex_count || e.head < 0 || e.head >= vertex_count)
            throw GraphError("edge endpoint out of range");
        if (e.tail == e.head) throw GraphError("self-loops are not allowed");
    }
    // Connectivity.
    std::vector<char> seen(static_cast<std::size_t>(vertex_count), 0);
    std::deque<Index> queue{0};
    seen[0] = 1;
    Index reached = 1;
    while (!queue.empty()) {
        const Index v = queue.front();
        queue.pop_front();
        for (const Edge& e : edges) {
            Index other = -1;
            if (e.tail == v) other = e.head;
            else if (e.head == v) other = e.tail;
            if (other >= 0 && !seen[static_cast<std::size_t>(other)]) {
                seen[static_cast<std::size_t>(other)] = 1;
                ++reached;
                queue.push_back(other);
            }
        }
    }
    if (reached != vertex_count) throw GraphError("graph is not connected");
    return BlackGraph{vertex_count, std::move(edges)};
}

BlackGraph load_graph(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw GraphError(std::string("malformed graph file: ") + e.what());
    }
    if (!j.is_object()) throw GraphError("graph file must be a JSON object");
    for (const auto& item : j.items())
        if (item.key() != "vertices" && item.key() != "edges")
            throw GraphError("unknown field '" + item.key() + "' in graph file");
    if (!j.contains("vertices") || !j["vertices"].is_number_integer())
        throw GraphError("graph file needs an integer 'vertices' field");
    if (!j.contains("edges") || !j["edges"].is_array())
        throw GraphError("graph file needs an 'edges' array");
    std::vector<Edge> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw GraphError("each edge must be a [tail, head] integer pair");
        edges.push_back(Edge{e[0].get<Index>(), e[1].get<Index>()});
    }
    return make_graph(j["vertices"].get<Index>(), std::move(edges));
}

BlackGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GraphError("cannot open graph file '" + path + "'");
    return load_graph(in);
}

std::string graph_to_json(const BlackGraph& g) {
    nlohmann::json j;
    j["vertices"] = g.vertex_count;
    j["edges"] = nlohmann::json::array();
    for (const Edge& e : g.edges) j["edges"].push_back({e.tail, e.head});
    return j.dump();
}

BlackGraph wheel_graph(const std::vector<Int>& side_lengths) {
    const Index k = static_cast<Index>(side_lengths.size());
    if (k < 2) throw GraphError("wheel graph needs at least 2 sides");
    for (Int q : side_lengths)
        if (q < 1) throw GraphError("wheel side lengths must be positive");

    const Index hub = 0;
    auto corner = [](Index i) { return 1 + i; };
    Index next_vertex = 1 + k;
    std::vector<Edge> edges;
    for (Index i = 0; i < k; ++i) {
        // Path of side_lengths[i] edges from corner i to corner i+1.
        Index prev = corner(i);
        const Index last = corner((i + 1) % k);
        for (Int step = 0; step + 1 < side_lengths[static_cast<std::size_t>(i)]; ++step) {
            edges.push_back(Edge{prev, next_vertex});
            prev = next_vertex++;
        }
        edges.push_back(Edge{prev, last});
    }
    for (Index i = 0; i < k; ++i) edges.push_back(Edge{hub, corner(i)});
    return make_graph(next_vertex, std::move(edges));
}

std::vector<Int> wheel_sides_of_braid(const braid::BraidWord& w) {
    const braid::BraidWord reduced = braid::free_reduce(w);
    const auto& letters = reduced.letters;
    if (letters.empty()) throw GraphError("empty braid word is not of supported shape");
    for (std::int8_t l : letters)
        if (l != 1 && l != -2)
            throw GraphError("braid word not of supported alternating shape "
                             "(only sigma1 and sigma2^-1 letters allowed)");
    // Rotate so the word starts at its first sigma1 factor.
    std::size_t start = 0;
    while (start < letters.size() && letters[start] != 1) ++start;
    if (start == letters.size()) throw GraphError("braid word has no sigma1 letters");

    std::vector<Int> sides;
    const std::size_t n = letters.size();
    std::size_t i = 0;
    while (i < n) {
        if (letters[(start + i) % n] != 1)
            throw GraphError("braid word not of supported alternating shape");
        ++i;
        Int q = 0;
        while (i < n && letters[(start + i) % n] == -2) {
            ++q;
            ++i;
        }
        if (q == 0)
            throw GraphError("braid word not of supported alternating shape "
                             "(each sigma1 needs a following sigma2^-q run)");
        sides.push_back(q);
    }
    if (sides.size() < 2)
        throw GraphError("braid word not of supported alternating shape (needs k >= 2 factors)");
    return sides;
}

BlackGraph black_graph_of_braid(const braid::BraidWord& w) {
    return wheel_graph(wheel_sides_of_braid(w));
}

std::vector<Index> spanning_tree(const BlackGraph& g) {
    std::vector<std::vector<std::pair<Index, Index>>> adj(
        static_cast<std::size_t>(g.vertex_count));  // vertex -> (edge idx, other end)
    for (Index e = 0; e < static_cast<Index>(g.edges.size()); ++e) {
        adj[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(e)].tail)]
            .emplace_back(e, g.edges[static_cast<std::size_t>(e)].head);
        adj[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(e)].head)]
            .emplace_back(e, g.edges[static_cast<std::size_t>(e)].tail);
    }
    std::vector<char> visited(static_cast<std::size_t>(g.vertex_count), 0);
    std::vector<Index> tree;
    std::queue<Index> frontier;
    visited[0] = 1;
    frontier.push(0);
    while (!frontier.empty()) {
        const Index v = frontier.front();
        frontier.pop();
        for (const auto& [e, other] : adj[static_cast<std::size_t>(v)]) {
            if (!visited[static_cast<std::size_t>(other)]) {
                visited[static_cast<std::size_t>(other)] = 1;
                tree.push_back(e);
                frontier.push(other);
            }
        }
    }
    std::sort(tree.begin(), tree.end());
    return tree;
}

CircuitMatrix circuit_matrix(const BlackGraph& g, const std::vector<Index>& tree) {
    const Index m = static_cast<Index>(g.edges.size());
    std::vector<char> in_tree(static_cast<std::size_t>(m), 0);
    for (Index e : tree) in_tree[static_cast<std::size_t>(e)] = 1;
    if (static_cast<Index>(tree.size()) != g.vertex_count - 1)
        throw GraphError("edge set is not a spanning tree");

    // Tree adjacency for path walks.
    std::vector<std::vector<std::pair<Index, Index>>> adj(
        static_cast<std::size_t>(g.vertex_count));
    for (Index e : tree) {
        const Edge& ed = g.edges[static_cast<std::size_t>(e)];
        adj[static_cast<std::size_t>(ed.tail)].emplace_back(e, ed.head);
        adj[static_cast<std::size_t>(ed.head)].emplace_back(e, ed.tail);
    }

    CircuitMatrix out;
    for (Index e = 0; e < m; ++e)
        if (!in_tree[static_cast<std::size_t>(e)]) out.non_tree_edges.push_back(e);
    const Index b = static_cast<Index>(out.non_tree_edges.size());
    out.rows = IntMatrix::Zero(b, m);

    for (Index row = 0; row < b; ++row) {
        const Index ei = out.non_tree_edges[static_cast<std::size_t>(row)];
        const Edge& e = g.edges[static_cast<std::size_t>(ei)];
        out.rows(row, ei) = 1;  // circuit oriented coherently with e_i

        // BFS in the tree from head back to tail.
        std::vector<Index> parent_edge(static_cast<std::size_t>(g.vertex_count), -1);
        std::vector<Index> parent_vertex(static_cast<std::size_t>(g.vertex_count), -1);
        std::vector<char> seen(static_cast<std::size_t>(g.vertex_count), 0);
        std::queue<Index> q;
        seen[static_cast<std::size_t>(e.head)] = 1;
        q.push(e.head);
        while (!q.empty() && !seen[static_cast<std::size_t>(e.tail)]) {
            const Index v = q.front();
            q.pop();
            for (const auto& [te, other] : adj[static_cast<std::size_t>(v)]) {
                if (!seen[static_cast<std::size_t>(other)]) {
                    seen[static_cast<std::size_t>(other)] = 1;
                    parent_edge[static_cast<std::size_t>(other)] = te;
                    parent_vertex[static_cast<std::size_t>(other)] = v;
                    q.push(other);
                }
            }
        }
        // Walk tail -> head through parents; the circuit runs head -> tail,
        // so each step (pv -> v) is traversed in reverse.
        Index v = e.tail;
        while (v != e.head) {
            const Index te = parent_edge[static_cast<std::size_t>(v)];
            const Index pv = parent_vertex[static_cast<std::size_t>(v)];
            const Edge& t = g.edges[static_cast<std::size_t>(te)];
            // Circuit traverses te from pv to v.
            out.rows(row, te) = (t.tail == pv && t.head == v) ? 1 : -1;
            v = pv;
        }
    }
    return out;
}

}  // namespace dbcover::graph
