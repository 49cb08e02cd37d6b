#pragma once

#include <algorithm>
#include <chrono>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bookem/book.hpp"
#include "bookem/constructions.hpp"
#include "bookem/expansion.hpp"
#include "bookem/graph.hpp"
#include "bookem/io.hpp"
#include "bookem/planarity.hpp"

namespace bookem {

// Limits for the exact search. workers is the width of the position-1
// branch decomposition; branches merge in canonical ascending order
// (first decisive branch wins), so answers never depend on it.
struct SearchBudget {
  long long max_nodes = std::numeric_limits<long long>::max();
  double max_seconds = std::numeric_limits<double>::infinity();
  int workers = 1;
};

enum class Feasibility { feasible, infeasible, unknown };

struct DecideResult {
  Feasibility status = Feasibility::unknown;
  BookEmbedding witness;  // meaningful only when feasible
  long long nodes_explored = 0;
};

namespace detail {

inline void require_budget(const SearchBudget& b, const char* who) {
  if (b.max_nodes <= 0 || !(b.max_seconds > 0) || b.workers <= 0)
    throw std::invalid_argument(std::string(who) + ": budget limits must be positive");
}

// DFS over spine positions with a fixed page budget k >= 1. Placing a vertex
// commits its arcs to the already-placed vertices; the conflict graph over
// committed arcs is maintained incrementally together with a proper
// k-coloring of it. A branch is cut only when the partial conflict graph is
// certifiably not k-colorable (it is an induced subgraph of every
// completion's conflict graph, so the cut loses nothing). Every leaf reached
// is therefore feasible; min_pages_fixed_spine turns the first one into the
// canonical witness.
class SpineSearch {
 public:
  SpineSearch(const Graph& g, int k, const SearchBudget& budget)
      : g_(g), k_(k), max_nodes_(budget.max_nodes) {
    if (budget.max_seconds < 1e17)
      deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(budget.max_seconds));
  }

  Feasibility run(BookEmbedding& witness) {
    pos_.assign(g_.n, -1);
    spine_.reserve(g_.n);
    spine_.push_back(0);  // rotation symmetry: vertex 0 opens the spine
    pos_[0] = 0;
    if (extend(1)) {
      witness = std::move(witness_);
      return Feasibility::feasible;
    }
    return hit_budget_ ? Feasibility::unknown : Feasibility::infeasible;
  }

  long long nodes() const { return nodes_; }

 private:
  using Clock = std::chrono::steady_clock;

  bool time_up() {
    if (!deadline_ || (nodes_ & 1023) != 0) return false;
    return Clock::now() >= *deadline_;
  }

  bool extend(int depth) {
    if (depth == g_.n) {
      auto leaf = min_pages_fixed_spine(g_, spine_, k_);
      if (!leaf) throw std::logic_error("decide_pages: leaf lost its coloring");
      witness_ = std::move(leaf->second);
      return true;
    }
    for (int v = 1; v < g_.n; ++v) {
      if (pos_[v] != -1) continue;
      // reflection symmetry: keep spines with spine[1] < spine[n-1], i.e.
      // lexicographically no larger than their reversal
      if (depth == g_.n - 1 && g_.n >= 3 && v < spine_[1]) continue;
      if (nodes_ >= max_nodes_ || time_up()) {
        hit_budget_ = true;
        return false;
      }
      ++nodes_;
      int first_new = static_cast<int>(arc_lo_.size());
      pos_[v] = depth;
      spine_.push_back(v);
      if (commit_arcs(v, depth, first_new) && extend(depth + 1)) return true;
      for (int i = static_cast<int>(arc_lo_.size()) - 1; i >= first_new; --i) {
        for (int j : adj_[i]) adj_[j].pop_back();  // i was the newest entry
        arc_lo_.pop_back();
        arc_hi_.pop_back();
        adj_.pop_back();
        color_.pop_back();
      }
      pos_[v] = -1;
      spine_.pop_back();
      if (hit_budget_) return false;
    }
    return false;
  }

  // Arcs from v (at position depth) to placed non-neighbour positions; the
  // position-(depth-1) edge rides page 0 and never conflicts. New arcs all
  // share vertex v, so they only conflict with older ones: (a,b) vs the new
  // (pu, depth) cross iff a < pu < b. Greedy color extension first, exact
  // recoloring of the whole arc set only when greedy jams.
  bool commit_arcs(int v, int depth, int first_new) {
    bool jammed = false;
    for (int u : g_.adj[v]) {
      int pu = pos_[u];
      if (pu < 0 || pu == depth - 1) continue;
      int idx = static_cast<int>(arc_lo_.size());
      arc_lo_.push_back(pu);
      arc_hi_.push_back(depth);
      adj_.emplace_back();
      color_.push_back(-1);
      for (int j = 0; j < first_new; ++j)
        if (arc_lo_[j] < pu && pu < arc_hi_[j]) {
          adj_[idx].push_back(j);
          adj_[j].push_back(idx);
        }
      unsigned used = 0;
      for (int j : adj_[idx])
        if (color_[j] >= 0) used |= 1u << color_[j];
      int c = 0;
      while (c < k_ && (used >> c & 1u)) ++c;
      if (c < k_)
        color_[idx] = c;
      else
        jammed = true;
    }
    if (!jammed) return true;
    int na = static_cast<int>(arc_lo_.size());
    std::vector<int> order(na);
    for (int i = 0; i < na; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (adj_[a].size() != adj_[b].size()) return adj_[a].size() > adj_[b].size();
      return a < b;
    });
    return color_exact(adj_, order, k_, color_);
  }

  const Graph& g_;
  int k_;
  long long max_nodes_;
  std::optional<Clock::time_point> deadline_;
  long long nodes_ = 0;
  bool hit_budget_ = false;
  std::vector<int> spine_, pos_;
  std::vector<int> arc_lo_, arc_hi_;  // spine positions, lo < hi
  std::vector<std::vector<int>> adj_;
  std::vector<int> color_;
  BookEmbedding witness_;
};

}  // namespace detail

// Can G be embedded in at most k pages? Backtracking over spine orders with
// vertex 0 pinned to position 0 (sound for k >= 1: a rotation's broken
// spine edge spans the whole spine and crosses nothing, so it fits on any
// page) and reflection pruning. k = 0 is decided structurally: the 0-page
// graphs are exactly the linear forests.
inline DecideResult decide_pages(const Graph& g, int k, const SearchBudget& budget) {
  if (k < 0) throw std::invalid_argument("decide_pages: k must be >= 0");
  detail::require_budget(budget, "decide_pages");

  DecideResult res;
  if (g.n == 0) {
    res.status = Feasibility::feasible;
    return res;
  }

  if (k == 0) {
    if (!is_linear_forest(g)) {
      res.status = Feasibility::infeasible;
      return res;
    }
    res.status = Feasibility::feasible;
    res.witness.page_of.assign(g.m(), 0);
    std::vector<char> done(g.n, 0);
    for (int s = 0; s < g.n; ++s) {
      if (done[s] || g.degree(s) > 1) continue;  // walk each path from its low end
      int prev = -1, v = s;
      while (v != -1) {
        res.witness.spine.push_back(v);
        done[v] = 1;
        int next = -1;
        for (int u : g.adj[v])
          if (u != prev) next = u;
        prev = v;
        v = next;
      }
    }
    return res;
  }

  if (g.m() == 0) {
    res.status = Feasibility::feasible;
    res.witness.spine.resize(g.n);
    for (int v = 0; v < g.n; ++v) res.witness.spine[v] = v;
    return res;
  }

  // k >= pn(K_n) >= pn(G): restrict the complete-graph embedding, no search
  if (k >= (g.n + 1) / 2) {
    res.status = Feasibility::feasible;
    Graph kn = complete_graph(g.n);
    BookEmbedding full = embed_complete(g.n);
    res.witness.spine = full.spine;
    res.witness.page_of.resize(g.m());
    for (int e = 0; e < g.m(); ++e)
      res.witness.page_of[e] =
          full.page_of[kn.edge_id(g.edges[e].first, g.edges[e].second).value()];
    return res;
  }

  if (k > 30)
    throw std::invalid_argument("decide_pages: page budgets this large are beyond desk scale");

  detail::SpineSearch search(g, k, budget);
  res.status = search.run(res.witness);
  res.nodes_explored = search.nodes();
  return res;
}

namespace detail {

struct StructuralLower {
  int value = 0;
  std::string reason;
};

// Certified floor for connected graphs: the 0-page graphs are the paths,
// the <=1-page ones the outerplanar graphs, and every 2-page graph is
// planar, so non-paths need 1, non-outerplanar graphs 2, nonplanar 3.
inline StructuralLower structural_lower(const Graph& g) {
  if (is_path_graph(g)) return {0, "path"};
  if (is_outerplanar(g)) return {1, "not a path"};
  if (is_planar(g)) return {2, "not outerplanar"};
  return {3, "nonplanar"};
}

// Documented candidate spines for the first-fit upper bound: natural order,
// DFS preorder from 0 (ascending neighbours), degree-descending.
inline std::vector<std::vector<int>> candidate_spines(const Graph& g) {
  std::vector<std::vector<int>> out;
  std::vector<int> natural(g.n);
  for (int v = 0; v < g.n; ++v) natural[v] = v;
  out.push_back(natural);

  if (g.n > 0) {
    std::vector<int> dfs;
    dfs.reserve(g.n);
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack{0};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (seen[v]) continue;
      seen[v] = 1;
      dfs.push_back(v);
      for (auto it = g.adj[v].rbegin(); it != g.adj[v].rend(); ++it)
        if (!seen[*it]) stack.push_back(*it);
    }
    for (int v = 0; v < g.n; ++v)
      if (!seen[v]) dfs.push_back(v);
    out.push_back(std::move(dfs));
  }

  std::vector<int> bydeg = natural;
  std::sort(bydeg.begin(), bydeg.end(), [&](int a, int b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });
  out.push_back(std::move(bydeg));
  return out;
}

// Earlier candidates win ties, so the result is deterministic.
inline std::pair<BookEmbedding, int> best_first_fit(const Graph& g) {
  std::optional<BookEmbedding> best;
  int best_pages = 0;
  for (const auto& spine : candidate_spines(g)) {
    BookEmbedding emb = first_fit_pages(g, spine);
    int p = emb.num_pages();
    if (!best || p < best_pages) {
      best = std::move(emb);
      best_pages = p;
    }
  }
  return {std::move(*best), best_pages};
}

}  // namespace detail

enum class CertStatus { exact, bounds };
enum class SearchOutcome { exhausted, budget_exceeded };

// Flattened certificate. status exact: value is the pagenumber, witness
// achieves it, and infeasible_pages = value - 1 was refuted (by exhausted
// search, or structurally when value equals the certified lower bound;
// value 0 leaves infeasible_pages at -1). status bounds: the pagenumber is
// in [lower, upper], value = upper with witness achieving it, and
// infeasible_pages is the page count whose search hit the budget.
struct PageNumberCertificate {
  CertStatus status = CertStatus::exact;
  int value = 0;
  BookEmbedding witness;
  int lower = 0;
  int upper = 0;
  std::string lower_reason;
  int infeasible_pages = -1;
  SearchOutcome search = SearchOutcome::exhausted;
  long long nodes_explored = 0;
};

// Exact pagenumber by k-ascension from a certified structural lower bound to
// a first-fit upper bound, one decide_pages exhaustion per intermediate k.
// When the bounds already meet, the certificate is exact with zero search.
// An optional hint embedding (e.g. from a construction) tightens the upper
// bound; it must be clean.
inline PageNumberCertificate pagenumber_exact(
    const Graph& g, const SearchBudget& budget,
    const std::optional<BookEmbedding>& hint = std::nullopt) {
  if (!is_connected(g)) throw std::invalid_argument("pagenumber_exact: graph must be connected");
  detail::require_budget(budget, "pagenumber_exact");

  auto lo = detail::structural_lower(g);
  auto [ub_emb, ub_pages] = detail::best_first_fit(g);
  if (hint) {
    if (!validate_embedding(g, *hint).clean())
      throw std::invalid_argument("pagenumber_exact: hint embedding is invalid");
    int hp = hint->num_pages();
    if (hp <= ub_pages) {
      ub_emb = *hint;
      ub_pages = hp;
    }
  }
  if (ub_pages < lo.value)
    throw std::logic_error("pagenumber_exact: upper bound fell below certified lower");

  PageNumberCertificate cert;
  cert.lower = lo.value;
  cert.upper = ub_pages;
  cert.lower_reason = lo.reason;

  auto start = std::chrono::steady_clock::now();
  long long spent = 0;
  for (int k = lo.value; k < ub_pages; ++k) {
    SearchBudget slice = budget;
    bool dry = false;
    if (budget.max_nodes != std::numeric_limits<long long>::max()) {
      slice.max_nodes = budget.max_nodes - spent;
      if (slice.max_nodes <= 0) dry = true;
    }
    if (budget.max_seconds < 1e17) {
      double left = budget.max_seconds -
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (left <= 0)
        dry = true;
      else
        slice.max_seconds = left;
    }
    DecideResult r;
    if (!dry) {
      r = decide_pages(g, k, slice);
      spent += r.nodes_explored;
    }
    if (r.status == Feasibility::feasible) {
      cert.value = k;
      cert.witness = std::move(r.witness);
      cert.infeasible_pages = k - 1;
      cert.nodes_explored = spent;
      return cert;
    }
    if (r.status == Feasibility::unknown) {
      cert.status = CertStatus::bounds;
      cert.lower = k;  // everything below k is refuted
      if (k > lo.value)
        cert.lower_reason = "search exhausted with " + std::to_string(k - 1) + " pages";
      cert.value = ub_pages;
      cert.witness = std::move(ub_emb);
      cert.infeasible_pages = k;
      cert.search = SearchOutcome::budget_exceeded;
      cert.nodes_explored = spent;
      return cert;
    }
  }

  cert.value = ub_pages;
  cert.witness = std::move(ub_emb);
  cert.infeasible_pages = ub_pages - 1;
  cert.nodes_explored = spent;
  return cert;
}

struct PageBounds {
  int lower = 0;
  int upper = 0;
  std::string lower_reason;
  BookEmbedding upper_witness;
};

// Cheap certified bounds without search: structural floor + first-fit roof.
inline PageBounds pagenumber_bounds(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("pagenumber_bounds: graph must be connected");
  auto lo = detail::structural_lower(g);
  auto [emb, pages] = detail::best_first_fit(g);
  return {lo.value, pages, lo.reason, std::move(emb)};
}

namespace detail {

inline bool same_labeled_graph(const Graph& a, const Graph& b) {
  return a.n == b.n && a.edges == b.edges;
}

// Constructive embedder for a recognized source family, checked against x's
// own numbering (nullopt if it differs, e.g. for a hand-relabeled file).
inline std::optional<ExpansionEmbedding> family_construction(const ExpansionGraph& x) {
  const Graph& s = x.source;
  std::optional<ExpansionEmbedding> out;
  if (is_tree(s)) {
    out = embed_expansion_tree(s);
  } else if (s.n >= 6 && s.n % 2 == 0 && same_labeled_graph(s, mobius_ladder(s.n / 2))) {
    out = embed_expansion_mobius(s.n / 2);
  } else if (s.n == 10 && same_labeled_graph(s, petersen_graph())) {
    out = embed_expansion_petersen();
  } else if (s.n >= 3 && s.m() == s.n * (s.n - 1) / 2) {
    out = embed_expansion_complete(s.n);
  } else {
    out = expand_embedding(s, best_first_fit(s).first);
  }
  if (out && !same_labeled_graph(out->expansion.graph, x.graph)) return std::nullopt;
  return out;
}

}  // namespace detail

// With provenance the floor also sees the clique blocks (every embedding
// restricts to the largest block K_w, and pn(K_w) = ceil(w/2) once w >= 4;
// K_3 is outerplanar so w = 3 only certifies 1), and the roof sees the
// family constructions.
inline PageBounds pagenumber_bounds(const ExpansionGraph& x) {
  PageBounds b = pagenumber_bounds(x.graph);

  int w = x.source.n > 0 ? x.source.max_degree() : 0;
  int cb = w >= 4 ? (w + 1) / 2 : (w == 3 ? 1 : 0);
  if (cb > b.lower || (cb == b.lower && w >= 4)) {
    b.lower = cb;
    b.lower_reason = "block clique K_" + std::to_string(w);
  }

  if (auto c = detail::family_construction(x)) {
    int p = c->emb.num_pages();
    if (p <= b.upper) {
      b.upper = p;
      b.upper_witness = std::move(c->emb);
    }
  }
  if (b.upper < b.lower) throw std::logic_error("pagenumber_bounds: bounds crossed");
  return b;
}

// ---- .cert: certificate header + embedded .emb witness ----

inline void write_cert(std::ostream& os, const Graph& g, const PageNumberCertificate& cert) {
  os << "pagenumber: " << cert.value << '\n';
  os << "status: " << (cert.status == CertStatus::exact ? "exact" : "bounds") << '\n';
  os << "lower: " << cert.lower << '\n';
  os << "reason: " << cert.lower_reason << '\n';
  os << "upper: " << cert.upper << '\n';
  if (cert.infeasible_pages >= 0)
    os << (cert.search == SearchOutcome::exhausted ? "exhausted: " : "budget_exceeded: ")
       << cert.infeasible_pages << " nodes: " << cert.nodes_explored << '\n';
  write_emb(os, g, cert.witness);
}

inline PageNumberCertificate read_cert(std::istream& is, const Graph& g) {
  auto lines = detail::data_lines(is);
  PageNumberCertificate cert;
  bool have_value = false, have_status = false;
  size_t i = 0;
  for (; i < lines.size(); ++i) {
    auto toks = detail::split_ws(lines[i]);
    if (toks.empty()) continue;
    const std::string& key = toks[0];
    if (key == "spine:") break;
    if (key == "pagenumber:") {
      if (toks.size() != 2) throw std::runtime_error(".cert: malformed pagenumber line");
      cert.value = static_cast<int>(detail::parse_int(toks[1], ".cert pagenumber"));
      have_value = true;
    } else if (key == "status:") {
      if (toks.size() != 2 || (toks[1] != "exact" && toks[1] != "bounds"))
        throw std::runtime_error(".cert: status must be exact or bounds");
      cert.status = toks[1] == "exact" ? CertStatus::exact : CertStatus::bounds;
      have_status = true;
    } else if (key == "lower:") {
      if (toks.size() != 2) throw std::runtime_error(".cert: malformed lower line");
      cert.lower = static_cast<int>(detail::parse_int(toks[1], ".cert lower"));
    } else if (key == "upper:") {
      if (toks.size() != 2) throw std::runtime_error(".cert: malformed upper line");
      cert.upper = static_cast<int>(detail::parse_int(toks[1], ".cert upper"));
    } else if (key == "reason:") {
      std::string r;
      for (size_t t = 1; t < toks.size(); ++t) {
        if (t > 1) r += ' ';
        r += toks[t];
      }
      cert.lower_reason = std::move(r);
    } else if (key == "exhausted:" || key == "budget_exceeded:") {
      if (toks.size() != 4 || toks[2] != "nodes:")
        throw std::runtime_error(".cert: malformed search line");
      cert.search =
          key == "exhausted:" ? SearchOutcome::exhausted : SearchOutcome::budget_exceeded;
      cert.infeasible_pages = static_cast<int>(detail::parse_int(toks[1], ".cert search pages"));
      cert.nodes_explored = detail::parse_int(toks[3], ".cert nodes");
    } else {
      throw std::runtime_error(".cert: unknown header '" + key + "'");
    }
  }
  if (!have_value || !have_status)
    throw std::runtime_error(".cert: missing pagenumber/status header");
  if (i == lines.size()) throw std::runtime_error(".cert: missing witness embedding");
  std::string body;
  for (; i < lines.size(); ++i) {
    body += lines[i];
    body += '\n';
  }
  std::istringstream bs(body);
  cert.witness = read_emb(bs, g);
  if (!validate_embedding(g, cert.witness).clean())
    throw std::runtime_error(".cert: witness embedding is not valid");
  if (cert.witness.num_pages() > cert.value)
    throw std::runtime_error(".cert: witness exceeds stated pagenumber");
  if (cert.value < cert.lower) throw std::runtime_error(".cert: value below stated lower bound");
  return cert;
}

inline void save_cert(const std::string& path, const Graph& g,
                      const PageNumberCertificate& cert) {
  auto os = open_out(path);
  write_cert(os, g, cert);
}

inline PageNumberCertificate load_cert(const std::string& path, const Graph& g) {
  auto is = open_in(path);
  return read_cert(is, g);
}

}  // namespace bookem
