#pragma once

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "bookem/book.hpp"
#include "bookem/graph.hpp"

namespace bookem {

struct RenderOptions {
  bool split_pages = false;  // one panel per arc page instead of one overlay
  bool labels = true;
};

// Fixed stroke palette; page k draws in svg_palette()[k % 12].
inline const std::array<const char*, 12>& svg_palette() {
  static const std::array<const char*, 12> pal = {
      "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948",
      "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac", "#d37295", "#86bcb6"};
  return pal;
}

namespace detail {

// One drawing surface: a subset of edges over the full spine.
struct SvgPanel {
  std::vector<int> edges;
  std::vector<int> legend_pages;
  int max_r = 24;  // floor keeps even arc-free panels breathable
};

}  // namespace detail

// Deterministic arc diagram: vertices on a horizontal spine in embedding
// order, page-0 edges as baseline segments, higher pages as semicircles
// above the line, one palette color per page, legend per panel. Crossing
// pairs (and page-0 edges that are not spine-consecutive) render dashed over
// a red underlay — invalid embeddings are drawn, not rejected, as long as
// the spine and page arrays are structurally usable.
inline std::string render_arc_diagram(const Graph& g, const BookEmbedding& emb,
                                      const RenderOptions& opt = {}) {
  if (static_cast<int>(emb.spine.size()) != g.n ||
      static_cast<int>(emb.page_of.size()) != g.m())
    throw std::invalid_argument("render_arc_diagram: embedding shape does not match graph");
  std::vector<int> pos(g.n, -1);
  for (size_t i = 0; i < emb.spine.size(); ++i) {
    int v = emb.spine[i];
    if (v < 0 || v >= g.n || pos[v] != -1)
      throw std::invalid_argument("render_arc_diagram: spine is not a permutation");
    pos[v] = static_cast<int>(i);
  }
  for (int p : emb.page_of)
    if (p < 0) throw std::invalid_argument("render_arc_diagram: negative page");

  // flagged edges get the highlight style: crossing pairs plus misplaced
  // page-0 arcs (the two diagnosable defects with a geometric face)
  std::vector<char> flagged(g.m(), 0);
  for (const Crossing& c : validate_embedding(g, emb).crossings)
    flagged[c.e1] = flagged[c.e2] = 1;

  auto span_of = [&](int e) {
    return std::abs(pos[g.edges[e].first] - pos[g.edges[e].second]);
  };
  auto is_arc = [&](int e) { return emb.page_of[e] >= 1 || span_of(e) != 1; };
  for (int e = 0; e < g.m(); ++e)
    if (emb.page_of[e] == 0 && span_of(e) != 1) flagged[e] = 1;

  std::set<int> pages_present(emb.page_of.begin(), emb.page_of.end());

  std::vector<detail::SvgPanel> panels;
  if (opt.split_pages) {
    for (int p : pages_present) {
      if (p == 0) continue;
      detail::SvgPanel panel;
      panel.legend_pages = pages_present.count(0) ? std::vector<int>{0, p} : std::vector<int>{p};
      for (int e = 0; e < g.m(); ++e)
        if (emb.page_of[e] == p || emb.page_of[e] == 0) panel.edges.push_back(e);
      panels.push_back(std::move(panel));
    }
  }
  if (panels.empty()) {  // overlay mode, or a split with nothing above page 0
    detail::SvgPanel panel;
    panel.legend_pages.assign(pages_present.begin(), pages_present.end());
    for (int e = 0; e < g.m(); ++e) panel.edges.push_back(e);
    panels.push_back(std::move(panel));
  }

  const int DX = 48, MX = 36;
  const int LEGEND_H = 22, LABEL_H = 28, PAD_TOP = 8, PAD_BOT = 6, GAP = 14;
  for (auto& panel : panels)
    for (int e : panel.edges)
      if (is_arc(e)) panel.max_r = std::max(panel.max_r, span_of(e) * DX / 2);

  int spine_w = 2 * MX + (g.n > 0 ? (g.n - 1) * DX : 0);
  int legend_w = 0;
  for (const auto& panel : panels)
    legend_w = std::max(legend_w, MX + static_cast<int>(panel.legend_pages.size()) * 74 + 10);
  int width = std::max(spine_w, legend_w);
  int height = 8;
  for (const auto& panel : panels)
    height += LEGEND_H + PAD_TOP + panel.max_r + 10 + LABEL_H + PAD_BOT + GAP;
  height += 8 - GAP;

  std::string out;
  auto num = [](int v) { return std::to_string(v); };
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" +
         num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
  out += "<rect class=\"bg\" x=\"0\" y=\"0\" width=\"" + num(width) + "\" height=\"" +
         num(height) + "\" fill=\"#ffffff\"/>\n";

  auto color_of = [](int page) { return std::string(svg_palette()[page % 12]); };
  int y0 = 8;
  for (const auto& panel : panels) {
    bool split_panel = opt.split_pages && !panel.legend_pages.empty() &&
                       panel.legend_pages.back() != 0;
    out += "<g class=\"panel\" data-page=\"" +
           (split_panel ? num(panel.legend_pages.back()) : std::string("overlay")) + "\">\n";

    int ly = y0 + 15;
    for (size_t i = 0; i < panel.legend_pages.size(); ++i) {
      int p = panel.legend_pages[i];
      int lx = MX + static_cast<int>(i) * 74;
      out += "<line class=\"legend-swatch\" x1=\"" + num(lx) + "\" y1=\"" + num(ly - 4) +
             "\" x2=\"" + num(lx + 18) + "\" y2=\"" + num(ly - 4) + "\" stroke=\"" +
             color_of(p) + "\" stroke-width=\"3\"/>\n";
      out += "<text class=\"legend-label\" x=\"" + num(lx + 24) + "\" y=\"" + num(ly) +
             "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#222222\">page " + num(p) +
             "</text>\n";
    }

    int yb = y0 + LEGEND_H + PAD_TOP + panel.max_r + 10;
    if (g.n > 0)
      out += "<line class=\"spine\" x1=\"" + num(MX) + "\" y1=\"" + num(yb) + "\" x2=\"" +
             num(MX + (g.n - 1) * DX) + "\" y2=\"" + num(yb) + "\" stroke=\"#9a9a9a\" stroke-width=\"1\"/>\n";

    auto arc_d = [&](int e) {
      int p1 = pos[g.edges[e].first], p2 = pos[g.edges[e].second];
      int x1 = MX + std::min(p1, p2) * DX, x2 = MX + std::max(p1, p2) * DX;
      int r = (x2 - x1) / 2;
      return "M " + num(x1) + " " + num(yb) + " A " + num(r) + " " + num(r) + " 0 0 1 " +
             num(x2) + " " + num(yb);
    };

    for (int e : panel.edges)  // underlays first so highlights sit below their arcs
      if (flagged[e] && is_arc(e))
        out += "<path class=\"crossing-underlay\" d=\"" + arc_d(e) +
               "\" fill=\"none\" stroke=\"#e31a1c\" stroke-width=\"5\" opacity=\"0.35\"/>\n";
    for (int e : panel.edges) {
      if (is_arc(e)) {
        out += "<path class=\"arc page" + num(emb.page_of[e]) + (flagged[e] ? " crossing" : "") +
               "\" d=\"" + arc_d(e) + "\" fill=\"none\" stroke=\"" + color_of(emb.page_of[e]) +
               "\" stroke-width=\"1.6\"" +
               (flagged[e] ? std::string(" stroke-dasharray=\"6 3\"") : std::string()) + "/>\n";
      } else {
        int p1 = pos[g.edges[e].first], p2 = pos[g.edges[e].second];
        int x1 = MX + std::min(p1, p2) * DX, x2 = MX + std::max(p1, p2) * DX;
        out += "<line class=\"edge page0\" x1=\"" + num(x1) + "\" y1=\"" + num(yb) + "\" x2=\"" +
               num(x2) + "\" y2=\"" + num(yb) + "\" stroke=\"" + color_of(0) +
               "\" stroke-width=\"3\"/>\n";
      }
    }

    for (int i = 0; i < g.n; ++i)
      out += "<circle class=\"vertex\" cx=\"" + num(MX + i * DX) + "\" cy=\"" + num(yb) +
             "\" r=\"3.5\" fill=\"#222222\"/>\n";
    if (opt.labels)
      for (int i = 0; i < g.n; ++i)
        out += "<text class=\"vlabel\" x=\"" + num(MX + i * DX) + "\" y=\"" + num(yb + 20) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#222222\">" +
               num(emb.spine[i]) + "</text>\n";

    out += "</g>\n";
    y0 = yb + 10 + LABEL_H + PAD_BOT + GAP;
  }

  out += "</svg>\n";
  return out;
}

}  // namespace bookem
