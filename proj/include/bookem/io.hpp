#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bookem/book.hpp"
#include "bookem/expansion.hpp"
#include "bookem/graph.hpp"

// Flat text formats. Lines whose first non-blank character is '#' are
// comments everywhere. All readers throw std::runtime_error on malformed
// input; writers emit the canonical form that readers round-trip exactly.

namespace bookem {

namespace detail {

inline bool is_comment_or_blank(const std::string& line) {
  for (char ch : line) {
    if (ch == ' ' || ch == '\t' || ch == '\r') continue;
    return ch == '#';
  }
  return true;
}

inline std::vector<std::string> data_lines(std::istream& is) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(is, line)) {
    if (!is_comment_or_blank(line)) out.push_back(line);
  }
  return out;
}

inline long long parse_int(const std::string& tok, const char* what) {
  size_t used = 0;
  long long v;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::exception&) {
    throw std::runtime_error(std::string(what) + ": expected integer, got '" + tok + "'");
  }
  if (used != tok.size())
    throw std::runtime_error(std::string(what) + ": expected integer, got '" + tok + "'");
  return v;
}

inline std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> toks;
  std::string t;
  while (ss >> t) toks.push_back(t);
  return toks;
}

// token "u-v" -> edge endpoints
inline std::pair<int, int> parse_edge_token(const std::string& tok) {
  auto dash = tok.find('-');
  if (dash == std::string::npos || dash == 0 || dash + 1 == tok.size())
    throw std::runtime_error(".emb: bad edge token '" + tok + "'");
  int u = static_cast<int>(parse_int(tok.substr(0, dash), ".emb edge"));
  int v = static_cast<int>(parse_int(tok.substr(dash + 1), ".emb edge"));
  return {u, v};
}

}  // namespace detail

// ---- .edg: line "n m", then m lines "u v" ----

inline void write_edg(std::ostream& os, const Graph& g) {
  os << g.n << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges) os << u << ' ' << v << '\n';
}

inline Graph read_edg(std::istream& is) {
  std::vector<std::string> toks;
  for (const auto& line : detail::data_lines(is))
    for (auto& t : detail::split_ws(line)) toks.push_back(t);
  if (toks.size() < 2) throw std::runtime_error(".edg: missing 'n m' header");
  int n = static_cast<int>(detail::parse_int(toks[0], ".edg n"));
  long long m = detail::parse_int(toks[1], ".edg m");
  if (m < 0 || toks.size() != static_cast<size_t>(2 + 2 * m))
    throw std::runtime_error(".edg: expected " + std::to_string(2 * m) +
                             " endpoint tokens after the header");
  std::vector<std::pair<int, int>> edges;
  for (long long e = 0; e < m; ++e) {
    int u = static_cast<int>(detail::parse_int(toks[2 + 2 * e], ".edg endpoint"));
    int v = static_cast<int>(detail::parse_int(toks[3 + 2 * e], ".edg endpoint"));
    edges.emplace_back(u, v);
  }
  try {
    Graph g = make_graph(n, std::move(edges));
    return g;
  } catch (const std::invalid_argument& ex) {
    throw std::runtime_error(std::string(".edg: ") + ex.what());
  }
}

// ---- .emb: "spine: ..." then "page K: u-v u-v ..." ----

inline void write_emb(std::ostream& os, const Graph& g, const BookEmbedding& emb) {
  os << "spine:";
  for (int v : emb.spine) os << ' ' << v;
  os << '\n';
  std::map<int, std::vector<int>> by_page;
  for (int e = 0; e < g.m(); ++e) by_page[emb.page_of[e]].push_back(e);
  for (auto& [page, es] : by_page) {
    os << "page " << page << ':';
    for (int e : es) os << ' ' << g.edges[e].first << '-' << g.edges[e].second;
    os << '\n';
  }
}

inline BookEmbedding read_emb(std::istream& is, const Graph& g) {
  auto lines = detail::data_lines(is);
  if (lines.empty() || detail::split_ws(lines[0]).empty() ||
      detail::split_ws(lines[0])[0] != "spine:")
    throw std::runtime_error(".emb: first line must be 'spine: ...'");

  BookEmbedding emb;
  {
    auto toks = detail::split_ws(lines[0]);
    for (size_t i = 1; i < toks.size(); ++i)
      emb.spine.push_back(static_cast<int>(detail::parse_int(toks[i], ".emb spine")));
  }
  if (static_cast<int>(emb.spine.size()) != g.n)
    throw std::runtime_error(".emb: spine lists " + std::to_string(emb.spine.size()) +
                             " vertices, graph has " + std::to_string(g.n));

  emb.page_of.assign(g.m(), -1);
  for (size_t li = 1; li < lines.size(); ++li) {
    auto toks = detail::split_ws(lines[li]);
    if (toks.size() < 2 || toks[0] != "page" || toks[1].empty() || toks[1].back() != ':')
      throw std::runtime_error(".emb: expected 'page K: ...', got '" + lines[li] + "'");
    int page = static_cast<int>(
        detail::parse_int(toks[1].substr(0, toks[1].size() - 1), ".emb page index"));
    if (page < 0) throw std::runtime_error(".emb: negative page index");
    for (size_t i = 2; i < toks.size(); ++i) {
      auto [u, v] = detail::parse_edge_token(toks[i]);
      if (u < 0 || v < 0 || u >= g.n || v >= g.n)
        throw std::runtime_error(".emb: edge endpoint out of range in '" + toks[i] + "'");
      auto id = g.edge_id(u, v);
      if (!id) throw std::runtime_error(".emb: " + toks[i] + " is not an edge of the graph");
      if (emb.page_of[*id] != -1)
        throw std::runtime_error(".emb: edge " + toks[i] + " assigned twice");
      emb.page_of[*id] = page;
    }
  }
  for (int e = 0; e < g.m(); ++e)
    if (emb.page_of[e] == -1)
      throw std::runtime_error(".emb: edge " + std::to_string(g.edges[e].first) + "-" +
                               std::to_string(g.edges[e].second) + " has no page");
  return emb;
}

// ---- .exp: SOURCE header + EDGE list + CLIQUE/LINK provenance ----
// The expansion itself is canonical given the source, so the reader rebuilds
// it and verifies the recorded maps instead of trusting them.

inline void write_exp(std::ostream& os, const ExpansionGraph& x) {
  os << "SOURCE " << x.source.n << ' ' << x.source.m() << '\n';
  for (auto [u, v] : x.source.edges) os << "EDGE " << u << ' ' << v << '\n';
  for (int v = 0; v < x.source.n; ++v) {
    os << "CLIQUE " << v << ':';
    for (int xv : x.clique_of[v]) os << ' ' << xv;
    os << '\n';
  }
  for (int e = 0; e < x.source.m(); ++e) os << "LINK " << e << ": " << x.link_edge[e] << '\n';
}

inline ExpansionGraph read_exp(std::istream& is) {
  auto lines = detail::data_lines(is);
  size_t li = 0;
  auto next_toks = [&]() -> std::vector<std::string> {
    if (li >= lines.size()) throw std::runtime_error(".exp: unexpected end of file");
    return detail::split_ws(lines[li++]);
  };

  auto head = next_toks();
  if (head.size() != 3 || head[0] != "SOURCE")
    throw std::runtime_error(".exp: expected 'SOURCE n m' header");
  int n = static_cast<int>(detail::parse_int(head[1], ".exp n"));
  int m = static_cast<int>(detail::parse_int(head[2], ".exp m"));
  if (m < 0) throw std::runtime_error(".exp: negative edge count");

  std::vector<std::pair<int, int>> edges;
  for (int e = 0; e < m; ++e) {
    auto toks = next_toks();
    if (toks.size() != 3 || toks[0] != "EDGE")
      throw std::runtime_error(".exp: expected 'EDGE u v' line");
    edges.emplace_back(static_cast<int>(detail::parse_int(toks[1], ".exp endpoint")),
                       static_cast<int>(detail::parse_int(toks[2], ".exp endpoint")));
  }

  Graph source;
  try {
    source = make_graph(n, edges);
  } catch (const std::invalid_argument& ex) {
    throw std::runtime_error(std::string(".exp: ") + ex.what());
  }
  // EdgeIds in the file are positional, so the listing must be canonical
  if (source.edges != edges)
    throw std::runtime_error(".exp: source edges must be listed normalized and sorted");

  ExpansionGraph x = complete_expansion(source);

  for (int v = 0; v < n; ++v) {
    auto toks = next_toks();
    if (toks.size() < 2 || toks[0] != "CLIQUE" || toks[1] != std::to_string(v) + ":")
      throw std::runtime_error(".exp: expected 'CLIQUE " + std::to_string(v) + ": ...'");
    std::vector<int> members;
    for (size_t i = 2; i < toks.size(); ++i)
      members.push_back(static_cast<int>(detail::parse_int(toks[i], ".exp clique member")));
    if (members != x.clique_of[v])
      throw std::runtime_error(".exp: clique of " + std::to_string(v) +
                               " does not match the canonical expansion");
  }
  for (int e = 0; e < m; ++e) {
    auto toks = next_toks();
    if (toks.size() != 3 || toks[0] != "LINK" || toks[1] != std::to_string(e) + ":")
      throw std::runtime_error(".exp: expected 'LINK " + std::to_string(e) + ": ...'");
    if (static_cast<int>(detail::parse_int(toks[2], ".exp link")) != x.link_edge[e])
      throw std::runtime_error(".exp: link for source edge " + std::to_string(e) +
                               " does not match the canonical expansion");
  }
  if (li != lines.size()) throw std::runtime_error(".exp: trailing content");
  return x;
}

// ---- file helpers ----

inline std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  return f;
}

inline std::ifstream open_in(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read " + path);
  return f;
}

inline void save_edg(const std::string& path, const Graph& g) {
  auto f = open_out(path);
  write_edg(f, g);
}
inline Graph load_edg(const std::string& path) {
  auto f = open_in(path);
  return read_edg(f);
}
inline void save_emb(const std::string& path, const Graph& g, const BookEmbedding& emb) {
  auto f = open_out(path);
  write_emb(f, g, emb);
}
inline BookEmbedding load_emb(const std::string& path, const Graph& g) {
  auto f = open_in(path);
  return read_emb(f, g);
}
inline void save_exp(const std::string& path, const ExpansionGraph& x) {
  auto f = open_out(path);
  write_exp(f, x);
}
inline ExpansionGraph load_exp(const std::string& path) {
  auto f = open_in(path);
  return read_exp(f);
}

}  // namespace bookem
