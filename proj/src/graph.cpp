#include "quditcolor/graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace qcolor {

GraphFormat graph_format_from_name(const std::string& name) {
    if (name == "edge-list") return GraphFormat::EdgeList;
    if (name == "adjacency-json") return GraphFormat::AdjacencyJson;
    if (name == "dimacs-col") return GraphFormat::DimacsCol;
    throw ValidationError("unknown graph format '" + name +
                          "' (expected edge-list, adjacency-json, or dimacs-col)");
}

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 1) throw ValidationError("graph needs at least one vertex");
    std::set<std::pair<int, int>> unique;
    for (auto [u, v] : edges) {
        if (u == v)
            throw ValidationError("self-loop on vertex " + std::to_string(u + 1) + " is not allowed");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ValidationError("edge (" + std::to_string(u + 1) + "," + std::to_string(v + 1) +
                                  ") references a vertex outside 1.." + std::to_string(n));
        if (u > v) std::swap(u, v);
        unique.emplace(u, v);
    }
    edges_.assign(unique.begin(), unique.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> a(n_, std::vector<int>(n_, 0));
    for (auto [u, v] : edges_) a[u][v] = a[v][u] = 1;
    return a;
}

Graph Graph::complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

Graph Graph::path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

Graph Graph::cycle(int n) {
    if (n < 3) throw ValidationError("cycle graph needs at least three vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(edges));
}

namespace {

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        if (n < 0) {
            if (ls >> n) {
                if (n < 1) throw ParseError("vertex count must be >= 1", line_no);
                int extra = 0;
                if (ls >> extra) throw ParseError("first line must contain only the vertex count", line_no);
            }
            continue;
        }
        int u = 0, v = 0;
        if (!(ls >> u)) continue;
        if (!(ls >> v)) throw ParseError("edge line needs two vertex indices", line_no);
        if (u < 1 || u > n || v < 1 || v > n)
            throw ParseError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                 ") outside 1.." + std::to_string(n),
                             line_no);
        if (u == v) throw ParseError("self-loop on vertex " + std::to_string(u), line_no);
        edges.emplace_back(u - 1, v - 1);
    }
    if (n < 0) throw ValidationError("edge list is empty (no vertex count)");
    return Graph(n, std::move(edges));
}

Graph parse_adjacency_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string("bad adjacency JSON: ") + e.what());
    }
    if (!doc.contains("n") || !doc.contains("adj"))
        throw ValidationError("adjacency JSON needs fields 'n' and 'adj'");
    const int n = doc["n"].get<int>();
    const auto& adj = doc["adj"];
    if (!adj.is_array() || static_cast<int>(adj.size()) != n)
        throw ValidationError("'adj' must be an n x n matrix");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        if (!adj[i].is_array() || static_cast<int>(adj[i].size()) != n)
            throw ValidationError("'adj' row " + std::to_string(i + 1) + " is not length " +
                                  std::to_string(n));
        for (int j = 0; j < n; ++j) {
            const int v = adj[i][j].get<int>();
            if (v != 0 && v != 1)
                throw ValidationError("adj(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                      ") must be 0 or 1");
            if (i == j && v != 0)
                throw ValidationError("adj(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                      ")=1 is a self-loop");
            if (j < i) {
                const int mirror = adj[j][i].get<int>();
                if (mirror != v)
                    throw ValidationError("matrix is not symmetric at adj(" + std::to_string(i + 1) +
                                          "," + std::to_string(j + 1) + ")");
            }
            if (v == 1 && i < j) edges.emplace_back(i, j);
        }
    }
    return Graph(n, std::move(edges));
}

Graph parse_dimacs_col(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "p") {
            std::string kind;
            int declared_edges = 0;
            if (!(ls >> kind >> n >> declared_edges) || kind != "edge")
                throw ParseError("problem line must be 'p edge <n> <m>'", line_no);
            if (n < 1) throw ParseError("vertex count must be >= 1", line_no);
        } else if (head == "e") {
            if (n < 0) throw ParseError("'e' line before 'p edge' line", line_no);
            int u = 0, v = 0;
            if (!(ls >> u >> v)) throw ParseError("'e' line needs two vertex indices", line_no);
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                     ") outside 1.." + std::to_string(n),
                                 line_no);
            if (u == v) throw ParseError("self-loop on vertex " + std::to_string(u), line_no);
            edges.emplace_back(u - 1, v - 1);
        }
        // every other line kind (c, x, ...) is ignored
    }
    if (n < 0) throw ValidationError("DIMACS input has no 'p edge' line");
    return Graph(n, std::move(edges));
}

} // namespace

Graph parse_graph(const std::string& text, GraphFormat format) {
    if (text.empty()) throw ValidationError("graph input is empty");
    switch (format) {
    case GraphFormat::EdgeList: return parse_edge_list(text);
    case GraphFormat::AdjacencyJson: return parse_adjacency_json(text);
    case GraphFormat::DimacsCol: return parse_dimacs_col(text);
    }
    throw ValidationError("unknown graph format");
}

Graph load_graph_file(const std::string& path, const std::string& format_name) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open graph file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();

    GraphFormat format = GraphFormat::EdgeList;
    if (!format_name.empty()) {
        format = graph_format_from_name(format_name);
    } else if (path.size() > 4 && path.substr(path.size() - 4) == ".col") {
        format = GraphFormat::DimacsCol;
    } else if (path.size() > 5 && path.substr(path.size() - 5) == ".json") {
        format = GraphFormat::AdjacencyJson;
    }
    return parse_graph(buf.str(), format);
}

} // namespace qcolor
