#pragma once

#include <string>
#include <utility>
#include <vector>

#include "quditcolor/types.hpp"

namespace qcolor {

enum class GraphFormat { EdgeList, AdjacencyJson, DimacsCol };

GraphFormat graph_format_from_name(const std::string& name);

/// Undirected, unweighted, simple graph. Vertices are 0-indexed internally;
/// all file formats use 1-indexed vertices.
class Graph {
public:
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int num_vertices() const { return n_; }
    /// Sorted unique pairs with first < second, 0-indexed.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    bool has_edge(int u, int v) const;

    std::vector<std::vector<int>> adjacency() const;

    static Graph complete(int n);
    static Graph path(int n);
    static Graph cycle(int n);

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
};

Graph parse_graph(const std::string& text, GraphFormat format);

/// Reads the file and picks the format from the extension (.col -> DIMACS,
/// .json -> adjacency JSON, anything else -> edge list) unless one is given.
Graph load_graph_file(const std::string& path, const std::string& format_name = "");

} // namespace qcolor
