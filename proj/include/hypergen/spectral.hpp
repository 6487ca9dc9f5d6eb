#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "hypergen/hypergraph.hpp"
#include "hypergen/rng.hpp"

namespace hypergen {

struct EigenFeatures {
    std::vector<double> eigenvalues;            // ascending, all > zero threshold
    std::vector<Eigen::VectorXd> eigenvectors;  // unit norm, sign-canonicalized
};

// The k smallest eigenpairs with eigenvalue above the zero threshold (1e-8),
// from a full symmetric eigendecomposition. Returns fewer pairs when the
// spectrum has fewer than k nonzero eigenvalues. Each eigenvector is flipped
// so that its largest-magnitude entry (lowest index on ties) is positive.
EigenFeatures k_smallest_nonzero(const Eigen::MatrixXd& l, int k);

// Sign canonicalization used throughout: largest |entry| positive, ties by
// lowest index. No-op on the zero vector.
void canonicalize_sign(Eigen::VectorXd& v);

// lambda in [0,1] (tolerance 1e-9) -> (1 - sqrt(1-lambda), 1 + sqrt(1-lambda)),
// the two bipartite normalized-Laplacian eigenvalues induced by a hypergraph
// normalized-Laplacian eigenvalue.
std::pair<double, double> spectral_map(double lambda_h);

// Per-node spectral features for an expanded bipartite graph: one width-k
// vector per copy, where all copies of the same parent share the parent's
// vector. Coordinate j is u_j[node] / sqrt(lambda_j + 1); missing eigenpairs
// are zero-padded. k = 0 falls back to width-1 standard-normal embeddings
// drawn from rng, one per parent node.
struct NodeEmbeddings {
    int width = 0;
    std::vector<std::vector<double>> left;   // size sum(v_l)
    std::vector<std::vector<double>> right;  // size sum(v_r)
};

NodeEmbeddings node_embeddings(const BipartiteGraph& b, const std::vector<int>& v_l,
                               const std::vector<int>& v_r, int k, Rng& rng,
                               bool allow_isolated = false);

}  // namespace hypergen
