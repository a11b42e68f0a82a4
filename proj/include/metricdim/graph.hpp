#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "metricdim/vertex_set.hpp"

namespace metricdim {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Parameters outside an operation's domain (family orders, ranges, ids).
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// Malformed serialized input (graph6, JSON).
class ParseError : public Error {
public:
  using Error::Error;
};

/// An operation needing finite distances was given a disconnected graph.
class DisconnectedGraph : public Error {
public:
  DisconnectedGraph() : Error("graph is disconnected") {}
};

inline constexpr std::size_t max_graph_order = 4096;

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
  Graph() : Graph(1, {}) {}

  Graph(int n, const std::vector<Edge>& edges) : n_(n) {
    check_order(n);
    adj_.assign(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n)));
    for (auto [a, b] : edges) {
      if (a < 0 || b < 0 || a >= n || b >= n)
        throw InvalidArgument("edge (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
      if (a == b) throw InvalidArgument("self-loop at vertex " + std::to_string(a));
      adj_[a].set(static_cast<std::size_t>(b));
      adj_[b].set(static_cast<std::size_t>(a));
    }
  }

  /// Adopts prebuilt adjacency rows; symmetry and loop-freeness are verified.
  static Graph from_adjacency(std::vector<VertexSet> adj, std::vector<std::string> labels = {}) {
    Graph g;
    g.n_ = static_cast<int>(adj.size());
    check_order(g.n_);
    for (int i = 0; i < g.n_; ++i) {
      if (adj[i].capacity() != adj.size()) throw InvalidArgument("adjacency row has wrong capacity");
      if (adj[i].test(static_cast<std::size_t>(i))) throw InvalidArgument("self-loop at vertex " + std::to_string(i));
      bool symmetric = true;
      adj[i].for_each([&](std::size_t j) { symmetric = symmetric && adj[j].test(static_cast<std::size_t>(i)); });
      if (!symmetric) throw InvalidArgument("adjacency is not symmetric at vertex " + std::to_string(i));
    }
    g.adj_ = std::move(adj);
    g.set_labels(std::move(labels));
    return g;
  }

  Graph with_labels(std::vector<std::string> labels) const {
    Graph g = *this;
    g.set_labels(std::move(labels));
    return g;
  }

  int order() const noexcept { return n_; }
  const VertexSet& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
  VertexSet closed_neighbors(int v) const {
    VertexSet s = neighbors(v);
    s.set(static_cast<std::size_t>(v));
    return s;
  }
  bool adjacent(int a, int b) const { return neighbors(a).test(static_cast<std::size_t>(b)); }
  int degree(int v) const { return static_cast<int>(neighbors(v).count()); }

  std::size_t edge_count() const noexcept {
    std::size_t total = 0;
    for (const auto& row : adj_) total += row.count();
    return total / 2;
  }

  /// Edges (a,b) with a<b in row-major order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int a = 0; a < n_; ++a)
      adj_[a].for_each([&](std::size_t b) {
        if (static_cast<int>(b) > a) out.emplace_back(a, static_cast<int>(b));
      });
    return out;
  }

  bool has_labels() const noexcept { return !labels_.empty(); }
  std::string label(int v) const {
    return labels_.empty() ? std::to_string(v) : labels_.at(static_cast<std::size_t>(v));
  }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Structural equality; labels are ignored.
  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
  static void check_order(int n) {
    if (n < 1) throw InvalidArgument("graph order must be at least 1");
    if (static_cast<std::size_t>(n) > max_graph_order)
      throw InvalidArgument("graph order " + std::to_string(n) + " exceeds limit " + std::to_string(max_graph_order));
  }
  void set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != static_cast<std::size_t>(n_))
      throw InvalidArgument("label count does not match graph order");
    labels_ = std::move(labels);
  }

  int n_ = 1;
  std::vector<VertexSet> adj_;
  std::vector<std::string> labels_;
};

}  // namespace metricdim
