#pragma once

#include <Eigen/Dense>
#include <map>
#include <utility>
#include <vector>

namespace hypergen {

// A hypergraph: num_nodes vertices, each hyperedge a non-empty sorted set of
// vertex indices. Duplicate hyperedges are allowed (they arise naturally
// before right-side merging during coarsening); duplicate vertices within a
// hyperedge are not.
struct Hypergraph {
    int num_nodes = 0;
    std::vector<std::vector<int>> hyperedges;

    int incidence_count() const {
        int total = 0;
        for (const auto& e : hyperedges) total += static_cast<int>(e.size());
        return total;
    }
};

// Star expansion: left nodes = hypergraph vertices, right nodes = hyperedges,
// edges sorted (left, right) and unique.
struct BipartiteGraph {
    int n_left = 0;
    int n_right = 0;
    std::vector<std::pair<int, int>> edges;

    bool operator==(const BipartiteGraph&) const = default;
};

// Weighted undirected graph without self-loops; keys are (u, v) with u < v,
// weights strictly positive.
struct WeightedGraph {
    int num_nodes = 0;
    std::map<std::pair<int, int>, double> weights;
};

// Throws std::invalid_argument on violated invariants.
void validate(const Hypergraph& h);
void validate(const BipartiteGraph& b);
void validate(const WeightedGraph& g);

// Edges sorted ascending inside, then the edge list sorted lexicographically.
Hypergraph canonicalized(const Hypergraph& h);
bool canonical_equal(const Hypergraph& a, const Hypergraph& b);

BipartiteGraph star_expansion(const Hypergraph& h);

// Pairwise weights sum(1/|e|) over hyperedges containing both endpoints.
WeightedGraph clique_expansion(const Hypergraph& h);

// Collapses right nodes into hyperedges. Isolated left nodes are dropped and
// the rest re-indexed densely in ascending order; right nodes without edges
// produce no hyperedge.
Hypergraph from_bipartite(const BipartiteGraph& b);

// D_V - H D_E^{-1} H^T. Requires no empty hyperedge.
Eigen::MatrixXd bolla_laplacian(const Hypergraph& h);

// I - D_V^{-1/2} H D_E^{-1} H^T D_V^{-1/2}. Requires no empty hyperedge and
// no isolated node.
Eigen::MatrixXd zhou_laplacian(const Hypergraph& h);

// Unnormalized Laplacian D - W of a weighted graph.
Eigen::MatrixXd weighted_laplacian(const WeightedGraph& g);

// I - D^{-1/2} A D^{-1/2} on the n_left+n_right node set, left block first.
// Rejects isolated nodes unless allow_isolated is set, in which case their
// rows/columns are zeroed (used only by the sampling loop, where degenerate
// intermediates can occur).
Eigen::MatrixXd bipartite_normalized_laplacian(const BipartiteGraph& b,
                                               bool allow_isolated = false);

// True iff the graph on n_left + n_right nodes is connected (vacuously true
// for <= 1 node).
bool is_connected(const BipartiteGraph& b);

std::vector<int> left_degrees(const BipartiteGraph& b);
std::vector<int> right_degrees(const BipartiteGraph& b);

}  // namespace hypergen
