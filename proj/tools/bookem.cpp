// bookem: generate graph families, take complete expansions, construct and
// validate book embeddings, solve for pagenumbers, and render arc diagrams.
// Exit codes: 0 success, 1 validation failure, 2 usage or input error.
#include <CLI11.hpp>

#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bookem/constructions.hpp"
#include "bookem/expansion.hpp"
#include "bookem/graph.hpp"
#include "bookem/io.hpp"
#include "bookem/solver.hpp"
#include "bookem/svg.hpp"

using namespace bookem;

namespace {

std::vector<int> parse_parent_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("--parents: empty entry in list");
    out.push_back(static_cast<int>(detail::parse_int(tok, "--parents entry")));
  }
  if (out.empty()) throw std::invalid_argument("--parents: list is empty");
  return out;
}

struct GenArgs {
  std::string family, out, parents;
  int n = -1, m = -1, h = -1, a = -1, b = -1;
  CLI::App* cmd = nullptr;
};

int run_gen(const GenArgs& args) {
  // strict flag hygiene: exactly the family's own parameters, nothing else
  struct Knob {
    const char* flag;
    int value;
  };
  const Knob knobs[] = {{"--n", args.n}, {"--m", args.m}, {"--h", args.h},
                        {"--a", args.a}, {"--b", args.b}};
  auto allowed = [&](std::initializer_list<const char*> names) {
    for (const Knob& k : knobs) {
      bool given = args.cmd->count(k.flag) > 0;
      bool wanted = false;
      for (const char* name : names)
        if (std::string(name) == k.flag) wanted = true;
      if (given && !wanted)
        throw std::invalid_argument(std::string(k.flag) + " does not apply to family '" +
                                    args.family + "'");
      if (!given && wanted)
        throw std::invalid_argument("family '" + args.family + "' requires " + k.flag);
    }
    bool parents_wanted = args.family == "tree";
    if ((args.cmd->count("--parents") > 0) != parents_wanted)
      throw std::invalid_argument(parents_wanted ? "family 'tree' requires --parents"
                                                 : "--parents only applies to family 'tree'");
  };

  Graph g;
  if (args.family == "path" || args.family == "cycle" || args.family == "complete") {
    allowed({"--n"});
    g = family_graph(args.family, {args.n});
  } else if (args.family == "star") {
    allowed({"--m"});
    g = family_graph("star", {args.m});
  } else if (args.family == "mobius") {
    allowed({"--h"});
    g = family_graph("mobius_ladder", {args.h});
  } else if (args.family == "complete-bipartite") {
    allowed({"--a", "--b"});
    g = family_graph("complete_bipartite", {args.a, args.b});
  } else if (args.family == "petersen") {
    allowed({});
    g = petersen_graph();
  } else if (args.family == "tree") {
    allowed({});
    g = tree_from_parents(parse_parent_list(args.parents));
  } else {
    throw std::invalid_argument("unknown family '" + args.family + "'");
  }

  save_edg(args.out, g);
  std::cout << "vertices: " << g.n << "\nedges: " << g.m() << "\nout: " << args.out << '\n';
  return 0;
}

int run_expand(const std::string& in, const std::string& out, const std::string& prov_out) {
  Graph g = load_edg(in);
  ExpansionGraph x = complete_expansion(g);
  save_edg(out, x.graph);
  std::cout << "vertices: " << x.graph.n << "\nedges: " << x.graph.m() << "\nout: " << out
            << '\n';
  if (!prov_out.empty()) {
    save_exp(prov_out, x);
    std::cout << "provenance-out: " << prov_out << '\n';
  }
  return 0;
}

// Family shape gates for the explicit embed methods; auto detection without
// provenance is deliberately narrower (paths, cycles, stars, complete) so a
// mislabeled graph cannot silently pick up the wrong construction.
ExpansionEmbedding dispatch_embed(const Graph& g, const std::string& method,
                                  const std::string& emb_in, const std::string& provenance) {
  if (!provenance.empty() && method != "auto")
    throw std::invalid_argument("--provenance requires --method auto");

  if (method == "auto") {
    if (!provenance.empty()) {
      ExpansionGraph x = load_exp(provenance);
      if (!detail::same_labeled_graph(x.graph, g))
        throw std::invalid_argument("provenance does not describe the input graph");
      auto c = detail::family_construction(x);
      if (!c) throw std::invalid_argument("provenance expansion is not canonically numbered");
      return std::move(*c);
    }
    if (is_path_graph(g)) return embed_expansion_tree(g);
    if (g.n >= 3 && detail::same_labeled_graph(g, star_graph(g.n - 1)))
      return embed_expansion_star(g.n - 1);
    if (is_cycle_graph(g)) return expand_embedding(g, detail::best_first_fit(g).first);
    if (g.n >= 3 && g.m() == g.n * (g.n - 1) / 2) return embed_expansion_complete(g.n);
    throw std::invalid_argument(
        "cannot detect the family structurally; pass an explicit --method or --provenance");
  }
  if (method == "star") {
    if (g.n < 3 || !detail::same_labeled_graph(g, star_graph(g.n - 1)))
      throw std::invalid_argument("input is not the canonical star (center 0, leaves 1..m)");
    return embed_expansion_star(g.n - 1);
  }
  if (method == "tree") {
    if (!is_tree(g)) throw std::invalid_argument("input is not a tree");
    return embed_expansion_tree(g);
  }
  if (method == "mobius") {
    if (g.n < 6 || g.n % 2 != 0 || !detail::same_labeled_graph(g, mobius_ladder(g.n / 2)))
      throw std::invalid_argument("input is not the canonical Mobius ladder numbering");
    return embed_expansion_mobius(g.n / 2);
  }
  if (method == "petersen") {
    if (!detail::same_labeled_graph(g, petersen_graph()))
      throw std::invalid_argument("input is not the canonical Petersen numbering");
    return embed_expansion_petersen();
  }
  if (method == "expansion-complete") {
    if (g.n < 3 || g.m() != g.n * (g.n - 1) / 2)
      throw std::invalid_argument("input is not a complete graph");
    return embed_expansion_complete(g.n);
  }
  if (method == "general") {
    if (emb_in.empty()) throw std::invalid_argument("--method general requires --emb-in");
    BookEmbedding e = load_emb(emb_in, g);
    return expand_embedding(g, e);  // rejects dirty source embeddings itself
  }
  throw std::invalid_argument("unknown method '" + method + "'");
}

int run_embed(const std::string& in, const std::string& method, const std::string& emb_in,
              const std::string& provenance, const std::string& out) {
  Graph g = load_edg(in);

  if (method == "complete") {  // the one non-expansion method: K_n on its own spine
    if (g.n < 2 || g.m() != g.n * (g.n - 1) / 2)
      throw std::invalid_argument("input is not a complete graph");
    BookEmbedding emb = embed_complete(g.n);
    save_emb(out, g, emb);
    std::cout << "method: complete\npages: " << emb.num_pages() << "\nout: " << out << '\n';
    return 0;
  }

  ExpansionEmbedding xe = dispatch_embed(g, method, emb_in, provenance);
  save_emb(out, xe.expansion.graph, xe.emb);
  std::cout << "method: " << xe.method << '\n';
  if (xe.method == "general")
    std::cout << "pages: <=" << xe.claimed_pages << '\n';
  else
    std::cout << "pages: " << xe.emb.num_pages() << '\n';
  std::cout << "out: " << out << '\n';
  return 0;
}

int run_validate(const std::string& graph_path, const std::string& emb_path) {
  Graph g = load_edg(graph_path);
  auto f = open_in(emb_path);
  BookEmbedding emb;
  try {
    emb = read_emb(f, g);
  } catch (const std::runtime_error& e) {
    // a parseable file that does not fit the graph is a validation failure
    std::cout << "structural: " << e.what() << '\n';
    return 1;
  }

  ValidationReport rep = validate_embedding(g, emb);
  if (rep.clean()) {
    std::cout << "OK, pages: " << emb.num_pages() << '\n';
    return 0;
  }
  for (const std::string& s : rep.structural) std::cout << "structural: " << s << '\n';
  for (const Crossing& c : rep.crossings) {
    auto [a, b] = g.edges[c.e1];
    auto [u, v] = g.edges[c.e2];
    std::cout << "crossing on page " << c.page << ": (" << a << "," << b << ") x (" << u << ","
              << v << ")\n";
  }
  std::cout << "INVALID: " << rep.structural.size() << " structural, " << rep.crossings.size()
            << " crossings\n";
  return 1;
}

int run_solve(const std::string& in, long long nodes, double seconds, int workers,
              const std::string& provenance, const std::string& cert_out,
              const std::string& emb_out) {
  Graph g = load_edg(in);

  std::optional<PageBounds> pb;
  if (!provenance.empty()) {
    ExpansionGraph x = load_exp(provenance);
    if (!detail::same_labeled_graph(x.graph, g))
      throw std::invalid_argument("provenance does not describe the input graph");
    pb = pagenumber_bounds(x);
  }

  PageNumberCertificate cert;
  if (pb && pb->lower == pb->upper) {
    // provenance alone pins the value; no search needed
    cert.status = CertStatus::exact;
    cert.value = cert.lower = cert.upper = pb->lower;
    cert.lower_reason = pb->lower_reason;
    cert.witness = pb->upper_witness;
  } else {
    SearchBudget budget;
    budget.max_nodes = nodes;
    if (seconds > 0) budget.max_seconds = seconds;
    budget.workers = workers;
    std::optional<BookEmbedding> hint;
    if (pb) hint = pb->upper_witness;
    cert = pagenumber_exact(g, budget, hint);
    if (pb && cert.status == CertStatus::bounds && pb->lower > cert.lower) {
      cert.lower = pb->lower;
      cert.lower_reason = pb->lower_reason;
      if (cert.lower == cert.upper) {  // structural floor meets the witness roof
        cert.status = CertStatus::exact;
        cert.value = cert.upper;
        cert.infeasible_pages = -1;
      }
    }
  }

  if (cert.status == CertStatus::exact)
    std::cout << "pagenumber: " << cert.value << " (exact)\n";
  else
    std::cout << "bounds: [" << cert.lower << "," << cert.upper << "]\n";
  std::cout << "reason: " << cert.lower_reason << "\nnodes: " << cert.nodes_explored << '\n';
  if (!cert_out.empty()) {
    save_cert(cert_out, g, cert);
    std::cout << "out: " << cert_out << '\n';
  }
  if (!emb_out.empty()) {
    save_emb(emb_out, g, cert.witness);
    std::cout << "emb-out: " << emb_out << '\n';
  }
  return 0;
}

int run_info(const std::string& in, const std::string& provenance) {
  Graph g = load_edg(in);
  std::cout << "vertices: " << g.n << "\nedges: " << g.m()
            << "\nmax-degree: " << g.max_degree()
            << "\nconnected: " << (is_connected(g) ? "true" : "false")
            << "\nplanar: " << (is_planar(g) ? "true" : "false") << '\n';
  if (!is_connected(g)) {
    std::cout << "bounds: unavailable (graph is disconnected)\n";
    return 0;
  }

  PageBounds b;
  if (!provenance.empty()) {
    ExpansionGraph x = load_exp(provenance);
    if (!detail::same_labeled_graph(x.graph, g))
      throw std::invalid_argument("provenance does not describe the input graph");
    b = pagenumber_bounds(x);
  } else {
    b = pagenumber_bounds(g);
  }
  std::cout << "lower: " << b.lower << "\nlower-reason: " << b.lower_reason
            << "\nupper: " << b.upper << '\n';
  if (b.lower == b.upper)
    std::cout << "pagenumber: " << b.lower << " (exact)\n";
  else
    std::cout << "bounds: [" << b.lower << "," << b.upper << "]\n";
  return 0;
}

int run_render(const std::string& graph_path, const std::string& emb_path,
               const std::string& out, bool split, bool no_labels) {
  Graph g = load_edg(graph_path);
  BookEmbedding emb = load_emb(emb_path, g);
  RenderOptions opt;
  opt.split_pages = split;
  opt.labels = !no_labels;
  std::string svg = render_arc_diagram(g, emb, opt);
  auto f = open_out(out);
  f << svg;
  // rendering is diagnostic: an invalid embedding still renders (highlighted)
  std::cout << "crossings: " << validate_embedding(g, emb).crossings.size() << "\nout: " << out
            << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"book embeddings of graphs and their complete expansions"};
  app.require_subcommand(1);
  // --h is a family parameter of gen, so no -h shorthand anywhere
  app.set_help_flag("--help", "print help");

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "generate a family graph as .edg");
  gen->add_option("--family", gen_args.family,
                  "path|cycle|star|complete|complete-bipartite|mobius|petersen|tree")
      ->required();
  gen->add_option("--n", gen_args.n, "vertex count (path, cycle, complete)");
  gen->add_option("--m", gen_args.m, "leaf count (star)");
  gen->add_option("--h", gen_args.h, "rung count (mobius)");
  gen->add_option("--a", gen_args.a, "left side size (complete-bipartite)");
  gen->add_option("--b", gen_args.b, "right side size (complete-bipartite)");
  gen->add_option("--parents", gen_args.parents, "comma-separated parents of 1..n-1 (tree)");
  gen->add_option("--out", gen_args.out, "output .edg path")->required();
  gen_args.cmd = gen;

  std::string ex_in, ex_out, ex_prov;
  CLI::App* expand = app.add_subcommand("expand", "write the complete expansion of a graph");
  expand->add_option("--in", ex_in, "input .edg")->required();
  expand->add_option("--out", ex_out, "output .edg for the expansion")->required();
  expand->add_option("--provenance-out", ex_prov, "also write an .exp provenance file");

  std::string em_in, em_method = "auto", em_embin, em_prov, em_out;
  CLI::App* embed = app.add_subcommand(
      "embed", "construct a book embedding (of the input's expansion, or of K_n itself)");
  embed->add_option("--in", em_in, "input .edg (the source graph; with --provenance, the expansion)")
      ->required();
  embed->add_option("--method", em_method,
                    "auto|star|tree|mobius|petersen|complete|expansion-complete|general");
  embed->add_option("--emb-in", em_embin, "source embedding .emb (method general)");
  embed->add_option("--provenance", em_prov, ".exp file naming the input's source (method auto)");
  embed->add_option("--out", em_out, "output .emb path")->required();

  std::string va_graph, va_emb;
  CLI::App* validate = app.add_subcommand("validate", "check an embedding against its graph");
  validate->add_option("--graph", va_graph, "graph .edg")->required();
  validate->add_option("--emb", va_emb, "embedding .emb")->required();

  std::string so_in, so_prov, so_cert, so_emb;
  long long so_nodes = 500000;
  double so_seconds = 0;
  int so_workers = 1;
  CLI::App* solve = app.add_subcommand("solve", "certify the exact pagenumber or bounds");
  solve->add_option("--in", so_in, "input .edg (connected)")->required();
  solve->add_option("--budget-nodes", so_nodes, "search node budget (default 500000)");
  solve->add_option("--budget-seconds", so_seconds, "wall-clock budget, 0 = unlimited");
  solve->add_option("--workers", so_workers, "worker count (answers are worker-independent)");
  solve->add_option("--provenance", so_prov, ".exp provenance: tightens bounds, seeds the search");
  solve->add_option("--out", so_cert, "write a .cert certificate");
  solve->add_option("--emb-out", so_emb, "write the witness .emb");

  std::string in_in, in_prov;
  CLI::App* info = app.add_subcommand("info", "graph summary with pagenumber bounds");
  info->add_option("--in", in_in, "input .edg")->required();
  info->add_option("--provenance", in_prov, ".exp provenance for expansion-aware bounds");
  CLI::App* bounds = app.add_subcommand("bounds", "alias of info");
  bounds->add_option("--in", in_in, "input .edg")->required();
  bounds->add_option("--provenance", in_prov, ".exp provenance for expansion-aware bounds");

  std::string re_graph, re_emb, re_out;
  bool re_split = false, re_nolabels = false;
  CLI::App* render = app.add_subcommand("render", "draw an embedding as an SVG arc diagram");
  render->add_option("--graph", re_graph, "graph .edg")->required();
  render->add_option("--emb", re_emb, "embedding .emb")->required();
  render->add_option("--out", re_out, "output .svg path")->required();
  render->add_flag("--split-pages", re_split, "one panel per page instead of an overlay");
  render->add_flag("--no-labels", re_nolabels, "omit vertex labels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version are success; any parse error is usage
  }

  try {
    if (gen->parsed()) return run_gen(gen_args);
    if (expand->parsed()) return run_expand(ex_in, ex_out, ex_prov);
    if (embed->parsed()) return run_embed(em_in, em_method, em_embin, em_prov, em_out);
    if (validate->parsed()) return run_validate(va_graph, va_emb);
    if (solve->parsed())
      return run_solve(so_in, so_nodes, so_seconds, so_workers, so_prov, so_cert, so_emb);
    if (info->parsed() || bounds->parsed()) return run_info(in_in, in_prov);
    if (render->parsed()) return run_render(re_graph, re_emb, re_out, re_split, re_nolabels);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
