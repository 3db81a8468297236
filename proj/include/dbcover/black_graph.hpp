// Black graphs of alternating diagrams as connected oriented multigraphs,
// plus deterministic spanning trees and signed fundamental-circuit matrices.

#ifndef DBCOVER_BLACK_GRAPH_HPP
#define DBCOVER_BLACK_GRAPH_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "dbcover/braid.hpp"
#include "dbcover/exact_linalg.hpp"

namespace dbcover::graph {

struct Edge {
    Index tail;
    Index head;
    bool operator==(const Edge&) const = default;
};

// Connected multigraph without self-loops; edge orientations are recorded
// and fixed by input order.
struct BlackGraph {
    Index vertex_count = 0;
    std::vector<Edge> edges;

    Index betti() const {
        return static_cast<Index>(edges.size()) - vertex_count + 1;
    }
    bool operator==(const BlackGraph&) const = default;
};

struct GraphError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Validates connectivity, loop-freeness and index ranges.
BlackGraph make_graph(Index vertex_count, std::vector<Edge> edges);

// JSON object {"vertices": n, "edges": [[tail, head], ...]}; unknown fields
// are rejected.
BlackGraph load_graph(std::istream& in);
BlackGraph load_graph_file(const std::string& path);
std::string graph_to_json(const BlackGraph& g);

// Wheel of k >= 2 sides: hub 0, corner i at vertex 1+i, side i a path of
// side_lengths[i] edges from corner i to corner i+1 (cyclically), one spoke
// hub -> corner per corner. Rim edges are oriented along the cyclic walk and
// listed side by side before the spokes.
BlackGraph wheel_graph(const std::vector<Int>& side_lengths);

// Recognizes (up to cyclic rotation) products of k >= 2 factors
// sigma1 sigma2^{-q_i} with q_i >= 1 and returns wheel_graph(q_1..q_k).
BlackGraph black_graph_of_braid(const braid::BraidWord& w);

// Side lengths recovered by the recognizer above, in diagram order.
std::vector<Int> wheel_sides_of_braid(const braid::BraidWord& w);

// Deterministic maximal subtree: breadth-first from vertex 0, scanning edges
// in input order. Returns tree edge indices in increasing order.
std::vector<Index> spanning_tree(const BlackGraph& g);

// Signed incidences of the fundamental circuits with every edge. Row i
// corresponds to the i-th non-tree edge e_i (increasing edge index), carries
// +1 in the column of e_i, and traverses the tree path back to its tail.
struct CircuitMatrix {
    IntMatrix rows;                   // b x |edges|, entries in {-1,0,1}
    std::vector<Index> non_tree_edges;
};

CircuitMatrix circuit_matrix(const BlackGraph& g, const std::vector<Index>& tree);

}  // namespace dbcover::graph

#endif  // DBCOVER_BLACK_GRAPH_HPP
