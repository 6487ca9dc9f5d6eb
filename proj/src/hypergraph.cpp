#include "hypergen/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hypergen {

void validate(const Hypergraph& h) {
    if (h.num_nodes < 0) throw std::invalid_argument("hypergraph: negative node count");
    for (const auto& e : h.hyperedges) {
        if (e.empty()) throw std::invalid_argument("hypergraph: empty hyperedge");
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0 || e[i] >= h.num_nodes)
                throw std::invalid_argument("hypergraph: node index out of range");
            if (i > 0 && e[i] <= e[i - 1])
                throw std::invalid_argument("hypergraph: hyperedge not a sorted set");
        }
    }
}

void validate(const BipartiteGraph& b) {
    if (b.n_left < 0 || b.n_right < 0)
        throw std::invalid_argument("bipartite: negative side size");
    for (std::size_t i = 0; i < b.edges.size(); ++i) {
        const auto& [l, r] = b.edges[i];
        if (l < 0 || l >= b.n_left || r < 0 || r >= b.n_right)
            throw std::invalid_argument("bipartite: edge index out of range");
        if (i > 0 && b.edges[i] <= b.edges[i - 1])
            throw std::invalid_argument("bipartite: edges not sorted unique");
    }
}

void validate(const WeightedGraph& g) {
    for (const auto& [uv, w] : g.weights) {
        const auto& [u, v] = uv;
        if (u < 0 || v < 0 || u >= g.num_nodes || v >= g.num_nodes)
            throw std::invalid_argument("weighted graph: node index out of range");
        if (u >= v) throw std::invalid_argument("weighted graph: key must have u < v");
        if (!(w > 0.0)) throw std::invalid_argument("weighted graph: non-positive weight");
    }
}

Hypergraph canonicalized(const Hypergraph& h) {
    Hypergraph out = h;
    for (auto& e : out.hyperedges) std::sort(e.begin(), e.end());
    std::sort(out.hyperedges.begin(), out.hyperedges.end());
    return out;
}

bool canonical_equal(const Hypergraph& a, const Hypergraph& b) {
    if (a.num_nodes != b.num_nodes) return false;
    return canonicalized(a).hyperedges == canonicalized(b).hyperedges;
}

BipartiteGraph star_expansion(const Hypergraph& h) {
    BipartiteGraph b;
    b.n_left = h.num_nodes;
    b.n_right = static_cast<int>(h.hyperedges.size());
    for (int j = 0; j < b.n_right; ++j)
        for (int v : h.hyperedges[j]) b.edges.emplace_back(v, j);
    std::sort(b.edges.begin(), b.edges.end());
    return b;
}

WeightedGraph clique_expansion(const Hypergraph& h) {
    WeightedGraph g;
    g.num_nodes = h.num_nodes;
    for (const auto& e : h.hyperedges) {
        const double w = 1.0 / static_cast<double>(e.size());
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j)
                g.weights[{e[i], e[j]}] += w;
    }
    return g;
}

Hypergraph from_bipartite(const BipartiteGraph& b) {
    std::vector<char> seen(b.n_left, 0);
    for (const auto& [l, r] : b.edges) seen[l] = 1;

    std::vector<int> remap(b.n_left, -1);
    int next = 0;
    for (int v = 0; v < b.n_left; ++v)
        if (seen[v]) remap[v] = next++;

    Hypergraph h;
    h.num_nodes = next;
    std::vector<std::vector<int>> per_right(b.n_right);
    for (const auto& [l, r] : b.edges) per_right[r].push_back(remap[l]);
    for (auto& e : per_right) {
        if (e.empty()) continue;  // empty hyperedge discarded
        std::sort(e.begin(), e.end());
        h.hyperedges.push_back(std::move(e));
    }
    return h;
}

Eigen::MatrixXd bolla_laplacian(const Hypergraph& h) {
    const int n = h.num_nodes;
    Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
    for (const auto& e : h.hyperedges) {
        if (e.empty()) throw std::invalid_argument("bolla_laplacian: empty hyperedge");
        const double inv = 1.0 / static_cast<double>(e.size());
        for (int u : e) {
            l(u, u) += 1.0;
            for (int v : e) l(u, v) -= inv;
        }
    }
    return l;
}

Eigen::MatrixXd zhou_laplacian(const Hypergraph& h) {
    const int n = h.num_nodes;
    std::vector<int> deg(n, 0);
    for (const auto& e : h.hyperedges) {
        if (e.empty()) throw std::invalid_argument("zhou_laplacian: empty hyperedge");
        for (int v : e) ++deg[v];
    }
    for (int v = 0; v < n; ++v)
        if (deg[v] == 0) throw std::invalid_argument("zhou_laplacian: isolated node");

    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (const auto& e : h.hyperedges) {
        const double inv = 1.0 / static_cast<double>(e.size());
        for (int u : e)
            for (int v : e) m(u, v) += inv;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m(i, j) /= std::sqrt(static_cast<double>(deg[i]) * deg[j]);
    return Eigen::MatrixXd::Identity(n, n) - m;
}

Eigen::MatrixXd weighted_laplacian(const WeightedGraph& g) {
    Eigen::MatrixXd l = Eigen::MatrixXd::Zero(g.num_nodes, g.num_nodes);
    for (const auto& [uv, w] : g.weights) {
        const auto& [u, v] = uv;
        l(u, u) += w;
        l(v, v) += w;
        l(u, v) -= w;
        l(v, u) -= w;
    }
    return l;
}

Eigen::MatrixXd bipartite_normalized_laplacian(const BipartiteGraph& b, bool allow_isolated) {
    const int n = b.n_left + b.n_right;
    std::vector<int> deg(n, 0);
    for (const auto& [l, r] : b.edges) {
        ++deg[l];
        ++deg[b.n_left + r];
    }
    std::vector<double> dinv(n, 0.0);
    for (int i = 0; i < n; ++i) {
        if (deg[i] == 0) {
            if (!allow_isolated)
                throw std::invalid_argument("bipartite_normalized_laplacian: isolated node");
            continue;  // row/column stays zero
        }
        dinv[i] = 1.0 / std::sqrt(static_cast<double>(deg[i]));
    }
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = deg[i] > 0 ? 1.0 : 0.0;
    for (const auto& [l, r] : b.edges) {
        const int i = l;
        const int j = b.n_left + r;
        m(i, j) -= dinv[i] * dinv[j];
        m(j, i) -= dinv[i] * dinv[j];
    }
    return m;
}

bool is_connected(const BipartiteGraph& b) {
    const int n = b.n_left + b.n_right;
    if (n <= 1) return true;
    std::vector<std::vector<int>> adj(n);
    for (const auto& [l, r] : b.edges) {
        adj[l].push_back(b.n_left + r);
        adj[b.n_left + r].push_back(l);
    }
    std::vector<char> vis(n, 0);
    std::vector<int> stack{0};
    vis[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int v : adj[u])
            if (!vis[v]) {
                vis[v] = 1;
                ++count;
                stack.push_back(v);
            }
    }
    return count == n;
}

std::vector<int> left_degrees(const BipartiteGraph& b) {
    std::vector<int> deg(b.n_left, 0);
    for (const auto& [l, r] : b.edges) ++deg[l];
    return deg;
}

std::vector<int> right_degrees(const BipartiteGraph& b) {
    std::vector<int> deg(b.n_right, 0);
    for (const auto& [l, r] : b.edges) ++deg[r];
    return deg;
}

}  // namespace hypergen
