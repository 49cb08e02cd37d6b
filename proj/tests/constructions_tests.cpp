#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "bookem/constructions.hpp"

using namespace bookem;

namespace {

Graph random_tree(std::mt19937& rng, int n) {
  std::vector<int> parents(n - 1);
  for (int i = 0; i + 1 < n; ++i) parents[i] = static_cast<int>(rng() % (i + 1));
  return tree_from_parents(parents);
}

// every link edge of a constructed expansion embedding must keep page `want`,
// or for expand_embedding, its source edge's page
int link_pages_match(const ExpansionEmbedding& xe, const std::vector<int>& source_pages) {
  for (int e = 0; e < xe.expansion.source.m(); ++e)
    if (xe.emb.page_of[xe.expansion.link_edge[e]] != source_pages[e]) return e;
  return -1;
}

}  // namespace

TEST_CASE("kn_zigzag_page matches the one-diagonal-per-page pattern") {
  // n = 4: pages {01,13,23}, {02,03,12}
  CHECK(kn_zigzag_page(0, 1, 4) == 0);
  CHECK(kn_zigzag_page(1, 3, 4) == 0);
  CHECK(kn_zigzag_page(2, 3, 4) == 0);
  CHECK(kn_zigzag_page(0, 2, 4) == 1);
  CHECK(kn_zigzag_page(0, 3, 4) == 1);
  CHECK(kn_zigzag_page(1, 2, 4) == 1);
  // n = 5: pages {01,24,34}, {02,03,12}, {13,04,14,23}
  CHECK(kn_zigzag_page(0, 1, 5) == 0);
  CHECK(kn_zigzag_page(2, 4, 5) == 0);
  CHECK(kn_zigzag_page(3, 4, 5) == 0);
  CHECK(kn_zigzag_page(0, 2, 5) == 1);
  CHECK(kn_zigzag_page(0, 3, 5) == 1);
  CHECK(kn_zigzag_page(1, 2, 5) == 1);
  CHECK(kn_zigzag_page(1, 3, 5) == 2);
  CHECK(kn_zigzag_page(0, 4, 5) == 2);
  CHECK(kn_zigzag_page(1, 4, 5) == 2);
  CHECK(kn_zigzag_page(2, 3, 5) == 2);
}

TEST_CASE("embed_complete lays out K_n on ceil(n/2) pages") {
  for (int n = 3; n <= 12; ++n) {
    Graph g = complete_graph(n);
    BookEmbedding emb = embed_complete(n);
    REQUIRE(validate_embedding(g, emb).clean());
    CHECK(emb.num_pages() == (n + 1) / 2);
    for (int v = 0; v < n; ++v) CHECK(emb.spine[v] == v);
    // spine edge (k-1, k) opens page k
    for (int k = 1; k <= (n + 1) / 2; ++k)
      CHECK(emb.page_of[g.edge_id(k - 1, k).value()] == k);
  }
}

TEST_CASE("embed_complete treats K_2 as a path") {
  BookEmbedding emb = embed_complete(2);
  REQUIRE(validate_embedding(complete_graph(2), emb).clean());
  CHECK(emb.num_pages() == 0);
  CHECK(emb.page_of == std::vector<int>{0});
}

TEST_CASE("embed_complete rejects n < 2") {
  CHECK_THROWS_AS(embed_complete(1), std::invalid_argument);
  CHECK_THROWS_AS(embed_complete(0), std::invalid_argument);
}

TEST_CASE("tree expansion of a path is again a path") {
  for (int n = 2; n <= 10; ++n) {
    ExpansionEmbedding xe = embed_expansion_tree(path_graph(n));
    REQUIRE(validate_embedding(xe.expansion.graph, xe.emb).clean());
    CHECK(xe.emb.num_pages() == 0);
    CHECK(xe.claimed_pages == 0);
    CHECK(xe.method == "tree");
  }
}

TEST_CASE("tree expansion of a single vertex is empty") {
  ExpansionEmbedding xe = embed_expansion_tree(make_graph(1, {}));
  CHECK(xe.expansion.graph.n == 0);
  CHECK(xe.emb.num_pages() == 0);
  CHECK(xe.claimed_pages == 0);
}

TEST_CASE("tree expansion uses exactly ceil(deg_max/2) pages once branching") {
  std::mt19937 rng(20260816);
  int checked = 0;
  while (checked < 40) {
    int n = 3 + static_cast<int>(rng() % 28);
    Graph t = random_tree(rng, n);
    int dmax = t.max_degree();
    if (dmax < 3) continue;
    ++checked;
    ExpansionEmbedding xe = embed_expansion_tree(t);
    REQUIRE(validate_embedding(xe.expansion.graph, xe.emb).clean());
    CHECK(xe.emb.num_pages() == (dmax + 1) / 2);
    CHECK(xe.claimed_pages == (dmax + 1) / 2);
    CHECK(link_pages_match(xe, std::vector<int>(t.m(), 0)) == -1);
  }
}

TEST_CASE("tree expansion handles a spider with high-degree center") {
  // center 0 with four legs of length two: deg_max = 4 -> 2 pages
  Graph t = tree_from_parents({0, 0, 0, 0, 1, 2, 3, 4});
  REQUIRE(t.max_degree() == 4);
  ExpansionEmbedding xe = embed_expansion_tree(t);
  REQUIRE(validate_embedding(xe.expansion.graph, xe.emb).clean());
  CHECK(xe.emb.num_pages() == 2);
}

TEST_CASE("tree expansion is deterministic") {
  Graph t = tree_from_parents({0, 0, 1, 1, 2, 4, 4});
  ExpansionEmbedding a = embed_expansion_tree(t);
  ExpansionEmbedding b = embed_expansion_tree(t);
  CHECK(a.emb.spine == b.emb.spine);
  CHECK(a.emb.page_of == b.emb.page_of);
}

TEST_CASE("tree expansion rejects non-trees") {
  CHECK_THROWS_AS(embed_expansion_tree(cycle_graph(5)), std::invalid_argument);
  CHECK_THROWS_AS(embed_expansion_tree(make_graph(4, {{0, 1}, {2, 3}})),
                  std::invalid_argument);
}

TEST_CASE("star expansion sizes and page counts") {
  for (int m = 3; m <= 12; ++m) {
    ExpansionEmbedding xe = embed_expansion_star(m);
    REQUIRE(validate_embedding(xe.expansion.graph, xe.emb).clean());
    CHECK(xe.expansion.graph.n == 2 * m);
    CHECK(xe.expansion.graph.m() == m + m * (m - 1) / 2);
    CHECK(xe.emb.num_pages() == (m + 1) / 2);
    CHECK(xe.claimed_pages == (m + 1) / 2);
    CHECK(xe.method == "star");
  }
  CHECK(embed_expansion_star(8).emb.num_pages() == 4);
}

TEST_CASE("star expansion of S_2 collapses to a path under its claim") {
  ExpansionEmbedding xe = embed_expansion_star(2);
  REQUIRE(validate_embedding(xe.expansion.graph, xe.emb).clean());
  CHECK(xe.claimed_pages == 1);
  CHECK(xe.emb.num_pages() == 0);
  CHECK_THROWS_AS(embed_expansion_star(1), std::invalid_argument);
}

TEST_CASE("mobius expansion uses exactly 3 pages for every rung count") {
  for (int h = 3; h <= 12; ++h) {
    ExpansionEmbedding xe = embed_expansion_mobius(h);
    REQUIRE(validate_embedding(xe.expansion.graph, xe.emb).clean());
    CHECK(xe.expansion.graph.n == 6 * h);
    CHECK(xe.expansion.graph.m() == 9 * h);
    CHECK(xe.emb.num_pages() == 3);
    CHECK(xe.claimed_pages == 3);
    CHECK(xe.method == "mobius");
    CHECK(xe.expansion.source.edges == mobius_ladder(h).edges);
  }
  CHECK_THROWS_AS(embed_expansion_mobius(2), std::invalid_argument);
}

TEST_CASE("petersen expansion ships a clean 3-page certificate") {
  ExpansionEmbedding xe = embed_expansion_petersen();
  REQUIRE(validate_embedding(xe.expansion.graph, xe.emb).clean());
  CHECK(xe.expansion.graph.n == 30);
  CHECK(xe.expansion.graph.m() == 45);
  CHECK(xe.emb.num_pages() == 3);
  CHECK(xe.claimed_pages == 3);
  CHECK(xe.method == "petersen");
  CHECK(xe.expansion.source.edges == petersen_graph().edges);
  // 3 is also a floor: the expansion is nonplanar, so the certificate is tight
  CHECK_FALSE(is_planar(xe.expansion.graph));
}

TEST_CASE("complete expansion page counts split by parity") {
  for (int n = 3; n <= 12; ++n) {
    ExpansionEmbedding xe = embed_expansion_complete(n);
    REQUIRE(validate_embedding(xe.expansion.graph, xe.emb).clean());
    CHECK(xe.expansion.graph.n == n * (n - 1));
    CHECK(xe.expansion.graph.m() == n * (n - 1) / 2 + n * (n - 1) * (n - 2) / 2);
    int want = n % 2 == 0 ? n / 2 : n / 2 + 1;
    CHECK(xe.emb.num_pages() == want);
    CHECK(xe.claimed_pages == want);
    CHECK(xe.method == "expansion-complete");
  }
  CHECK_THROWS_AS(embed_expansion_complete(2), std::invalid_argument);
}

TEST_CASE("expand_embedding preserves link pages and stays within its claim") {
  Graph c4 = cycle_graph(4);
  BookEmbedding src;
  src.spine = {0, 1, 2, 3};
  src.page_of.assign(4, 0);
  src.page_of[c4.edge_id(0, 3).value()] = 1;
  REQUIRE(validate_embedding(c4, src).clean());

  ExpansionEmbedding xe = expand_embedding(c4, src);
  REQUIRE(validate_embedding(xe.expansion.graph, xe.emb).clean());
  CHECK(xe.claimed_pages == 2);
  CHECK(xe.emb.num_pages() <= 2);
  CHECK(link_pages_match(xe, src.page_of) == -1);
  CHECK(xe.method == "general");
}

TEST_CASE("expand_embedding keeps zero-page sources on the spine") {
  Graph p = path_graph(6);
  BookEmbedding src;
  src.spine = {0, 1, 2, 3, 4, 5};
  src.page_of.assign(p.m(), 0);
  ExpansionEmbedding xe = expand_embedding(p, src);
  REQUIRE(validate_embedding(xe.expansion.graph, xe.emb).clean());
  CHECK(xe.emb.num_pages() == 0);
}

TEST_CASE("expand_embedding handles the complete-graph witness") {
  Graph k4 = complete_graph(4);
  ExpansionEmbedding xe = expand_embedding(k4, embed_complete(4));
  REQUIRE(validate_embedding(xe.expansion.graph, xe.emb).clean());
  CHECK(xe.claimed_pages == 4);
  CHECK(xe.emb.num_pages() <= 4);
}

TEST_CASE("expand_embedding stays within t + ceil(deg_max/2) on random graphs") {
  std::mt19937 rng(917);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 4 + static_cast<int>(rng() % 9);
    std::vector<int> parents(n - 1);
    for (int i = 0; i + 1 < n; ++i) parents[i] = static_cast<int>(rng() % (i + 1));
    Graph g = tree_from_parents(parents);
    std::vector<std::pair<int, int>> extra = g.edges;
    int adds = static_cast<int>(rng() % 4);
    for (int a = 0; a < adds; ++a) {
      int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
      if (u != v && !g.has_edge(u, v)) extra.emplace_back(u, v);
      g = make_graph(n, extra);
    }
    std::vector<int> spine(n);
    for (int i = 0; i < n; ++i) spine[i] = i;
    BookEmbedding src = first_fit_pages(g, spine);
    REQUIRE(validate_embedding(g, src).clean());

    ExpansionEmbedding xe = expand_embedding(g, src);
    REQUIRE(validate_embedding(xe.expansion.graph, xe.emb).clean());
    CHECK(xe.claimed_pages == src.num_pages() + (g.max_degree() + 1) / 2);
    CHECK(xe.emb.num_pages() <= xe.claimed_pages);
    CHECK(link_pages_match(xe, src.page_of) == -1);
  }
}

TEST_CASE("expand_embedding rejects invalid source embeddings") {
  Graph k3 = complete_graph(3);
  BookEmbedding bad;
  bad.spine = {0, 1, 2};
  bad.page_of.assign(3, 0);  // (0,2) is not spine-consecutive
  CHECK_THROWS_AS(expand_embedding(k3, bad), std::invalid_argument);
}

TEST_CASE("expansion_lower_bound picks the strongest certified reason") {
  auto lb = expansion_lower_bound(path_graph(9));
  CHECK(lb.bound == 0);
  CHECK(lb.reason == "path");

  lb = expansion_lower_bound(complete_graph(6));
  CHECK(lb.bound == 3);
  CHECK(lb.reason == "clique");

  lb = expansion_lower_bound(complete_graph(5));
  CHECK(lb.bound == 3);
  CHECK(lb.reason == "nonplanar");

  lb = expansion_lower_bound(petersen_graph());
  CHECK(lb.bound == 3);
  CHECK(lb.reason == "nonplanar");

  lb = expansion_lower_bound(star_graph(5));
  CHECK(lb.bound == 3);
  CHECK(lb.reason == "clique");

  lb = expansion_lower_bound(cycle_graph(7));
  CHECK(lb.bound == 1);
  CHECK(lb.reason == "clique");

  lb = expansion_lower_bound(tree_from_parents({0, 0, 0, 1, 2}));
  CHECK(lb.bound == 2);
  CHECK(lb.reason == "clique");

  CHECK_THROWS_AS(expansion_lower_bound(make_graph(4, {{0, 1}, {2, 3}})),
                  std::invalid_argument);
}
