#ifndef PLCC_GRAPH_HPP
#define PLCC_GRAPH_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace plcc {

/// Immutable simple undirected graph. Vertices are dense ids 0..n-1.
/// Construction normalizes edges (u < v, sorted, deduplicated) and rejects
/// self-loops and out-of-range endpoints. Safe to share across threads.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

    const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<size_t>(v)); }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool has_edge(int u, int v) const;
    int min_degree() const;
    int max_degree() const;

    /// Subgraph induced on `keep` (any order, no duplicates). Vertex i of the
    /// result corresponds to keep[i] after keep is sorted ascending.
    Graph induced(std::vector<int> keep) const;

    bool operator==(const Graph& other) const noexcept {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Thrown by the file readers; line is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

// DIMACS-like format: header `p edge <n> <m>`, edge lines `e <u> <v>` with
// 1-based ids, comment lines start with `c`. The writer emits edges sorted
// lexicographically.
Graph read_dimacs(std::istream& in);
Graph read_dimacs_file(const std::string& path);
void write_dimacs(const Graph& g, std::ostream& out);
std::string to_dimacs(const Graph& g);

std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// True iff g is connected, has >= 3 vertices, and no cut vertex.
bool is_two_connected(const Graph& g);

}  // namespace plcc

#endif
