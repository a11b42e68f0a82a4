#pragma once

#include <cctype>
#include <istream>
#include <iterator>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "metricdim/graph.hpp"

namespace metricdim {

// graph6: N(n) followed by the upper triangle, column by column
// (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed six bits per byte plus 63.

inline std::string graph6_write(const Graph& g) {
  const auto n = static_cast<unsigned long>(g.order());
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0, nbits = 0;
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

inline Graph graph6_read(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty input");
  for (char c : text)
    if (c < 63 || c > 126) throw ParseError("graph6: byte out of range");

  auto val = [&](std::size_t i) { return static_cast<unsigned long>(text[i] - 63); };
  unsigned long n = 0;
  std::size_t pos = 0;
  if (val(0) < 63) {
    n = val(0);
    pos = 1;
  } else if (text.size() >= 2 && val(1) < 63) {
    if (text.size() < 4) throw ParseError("graph6: truncated order field");
    n = (val(1) << 12) | (val(2) << 6) | val(3);
    pos = 4;
  } else {
    if (text.size() < 8) throw ParseError("graph6: truncated order field");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | val(i);
    pos = 8;
  }
  if (n == 0) throw ParseError("graph6: zero-vertex graphs are not supported");
  if (n > max_graph_order) throw ParseError("graph6: order " + std::to_string(n) + " exceeds limit");

  const unsigned long bits = n * (n - 1) / 2;
  const unsigned long bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes)
    throw ParseError("graph6: expected " + std::to_string(bytes) + " data bytes, found " +
                     std::to_string(text.size() - pos));

  std::vector<Edge> edges;
  unsigned long k = 0;
  for (unsigned long j = 1; j < n; ++j)
    for (unsigned long i = 0; i < j; ++i, ++k) {
      const auto byte = val(pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1U) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  if (k % 6 != 0 && (val(pos + k / 6) & ((1U << (6 - k % 6)) - 1)) != 0)
    throw ParseError("graph6: nonzero padding bits");
  return Graph(static_cast<int>(n), edges);
}

/// {"n": int, "edges": [[i,j], ...]}
inline Graph graph_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.value("edges", nlohmann::json::array())) {
      if (!e.is_array() || e.size() != 2) throw ParseError("json graph: each edge must be a pair");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph(n, edges);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("json graph: ") + ex.what());
  }
}

inline nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [a, b] : g.edges()) edges.push_back({a, b});
  return {{"n", g.order()}, {"edges", edges}};
}

/// Reads every graph in a stream: a JSON document (object or array of
/// objects) when the first non-blank byte is '{' or '[', else graph6 lines.
inline std::vector<Graph> read_graphs(std::istream& in) {
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto first = content.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParseError("no graph in input");
  std::vector<Graph> out;
  if (content[first] == '{' || content[first] == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(content);
    } catch (const nlohmann::json::exception& ex) {
      throw ParseError(std::string("json graph: ") + ex.what());
    }
    if (j.is_array())
      for (const auto& item : j) out.push_back(graph_from_json(item));
    else
      out.push_back(graph_from_json(j));
    return out;
  }
  std::size_t start = 0;
  while (start < content.size()) {
    auto end = content.find('\n', start);
    if (end == std::string::npos) end = content.size();
    std::string_view line(content.data() + start, end - start);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
    if (!line.empty()) out.push_back(graph6_read(line));
    start = end + 1;
  }
  return out;
}

}  // namespace metricdim
