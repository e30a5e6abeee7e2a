#include "localchrom/acceptance.hpp"
#include "localchrom/localchrom.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace localchrom;
using nlohmann::json;

namespace {

enum ExitCode { kOk = 0, kNegative = 1, kUsage = 2, kTimeout = 3 };

struct Globals {
  std::string format = "text";
  double timeout = 0;

  bool json() const { return format == "json"; }
  Deadline deadline() const { return timeout > 0 ? Deadline::after_seconds(timeout) : Deadline(); }
};

/// A graph file, "-" for stdin, or "family:ID".
Graph load_graph(const std::string& source) {
  if (source.rfind("family:", 0) == 0) return generate(source.substr(7));
  if (source == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return parse_graph(text);
  }
  return parse_graph(read_text_file(source));
}

json set_json(const VertexSet& s) { return s.to_vector(); }

json rationals_json(const std::vector<Rational>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(format_rational(x));
  return out;
}

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

int cmd_families(const Globals& g, const std::string& id, bool dot) {
  if (id.empty()) {
    json out = json::array();
    for (const auto& f : list_families()) {
      Graph gr = generate(f);
      if (g.json())
        out.push_back({{"id", f.to_string()}, {"n", gr.order()}, {"m", gr.num_edges()}});
      else
        std::cout << f.to_string() << " n=" << gr.order() << " m=" << gr.num_edges() << "\n";
    }
    if (g.json()) std::cout << out.dump(2) << "\n";
    return kOk;
  }
  FamilyId f = parse_family_id(id);
  Graph gr = generate(f);
  if (dot) std::cout << to_dot(gr, localchrom::detail::tag_name(f.tag));
  else if (g.json()) std::cout << json{{"id", f.to_string()}, {"n", gr.order()}, {"edges", gr.edges()}}.dump(2) << "\n";
  else std::cout << emit_graph(gr);
  return kOk;
}

int cmd_check(const Globals& g, const std::string& file) {
  Graph gr = load_graph(file);
  auto lb = check_locally_bipartite(gr);
  bool twin_free = is_twin_free(gr);
  bool maximal = lb.locally_bipartite && is_edge_maximal_locally_bipartite(gr);
  if (g.json()) {
    json out{{"locally_bipartite", lb.locally_bipartite}, {"twin_free", twin_free}, {"edge_maximal", maximal}};
    if (lb.witness) out["witness"] = {{"centre", lb.witness->centre}, {"rim", lb.witness->rim}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "locally-bipartite: " << (lb.locally_bipartite ? "yes" : "no") << "\n"
              << "twin-free: " << (twin_free ? "yes" : "no") << "\n"
              << "edge-maximal: " << (maximal ? "yes" : "no") << "\n";
    if (lb.witness) std::cout << lb.witness->to_string() << "\n";
  }
  return lb.locally_bipartite ? kOk : kNegative;
}

int cmd_hom(const Globals& g, const std::string& from, const std::string& to, const std::string& mode) {
  Graph a = load_graph(from), b = load_graph(to);
  Deadline dl = g.deadline();
  std::optional<VertexMap> map;
  if (mode == "hom") map = find_homomorphism(a, b, dl);
  else map = find_subgraph(a, b, mode == "induced", dl);
  if (g.json()) {
    json out{{"mode", mode}, {"exists", map.has_value()}};
    if (map) out["map"] = *map;
    std::cout << out.dump(2) << "\n";
  } else if (map) {
    std::cout << mode << ": yes\nmap: " << join(*map) << "\n";
  } else {
    std::cout << mode << ": none\n";
  }
  return map ? kOk : kNegative;
}

int cmd_chi(const Globals& g, const std::string& file) {
  Graph gr = load_graph(file);
  ColouringOptions opts;
  opts.deadline = g.deadline();
  auto r = chromatic_number(gr, opts);
  if (g.json())
    std::cout << json{{"chi", r.chi}, {"colouring", r.colouring.colour}}.dump(2) << "\n";
  else
    std::cout << "chi: " << r.chi << "\ncolouring: " << r.colouring.to_string() << "\n";
  return kOk;
}

int cmd_colour(const Globals& g, const std::string& file, int k) {
  Graph gr = load_graph(file);
  ColouringOptions opts;
  opts.deadline = g.deadline();
  auto c = k_colourable(gr, k, opts);
  if (g.json()) {
    json out{{"k", k}, {"colourable", c.has_value()}};
    if (c) out["colouring"] = c->colour;
    std::cout << out.dump(2) << "\n";
  } else if (c) {
    std::cout << k << "-colouring: " << c->to_string() << "\n";
  } else {
    std::cout << "not " << k << "-colourable\n";
  }
  return c ? kOk : kNegative;
}

int cmd_weight(const Globals& g, const std::string& file, const std::string& verify_c) {
  Deadline dl = g.deadline();
  if (!verify_c.empty()) {
    WeightedGraph wg = parse_weighted_graph(read_text_file(file));
    Rational c = parse_rational(verify_c);
    bool beats = verify_weighting(wg.graph(), wg.weights(), c);
    Rational ratio = wg.min_weighted_degree() / wg.total_weight();
    if (g.json())
      std::cout << json{{"min_degree_ratio", format_rational(ratio)}, {"c", format_rational(c)}, {"beats", beats}}.dump(2)
                << "\n";
    else
      std::cout << "min weighted degree / total: " << format_rational(ratio) << "\nbeats " << format_rational(c) << ": "
                << (beats ? "yes" : "no") << "\n";
    return beats ? kOk : kNegative;
  }
  Graph gr = load_graph(file);
  auto w = optimal_weighting(gr, dl);
  if (g.json()) {
    std::cout << json{{"optimum", format_rational(w.optimum)},
                      {"weights", rationals_json(w.weights)},
                      {"dual", rationals_json(w.dual)},
                      {"support_full", w.support_full},
                      {"has_isolated", w.has_isolated}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "t*: " << format_rational(w.optimum) << "\n";
    for (int v = 0; v < gr.order(); ++v)
      std::cout << v << " " << format_rational(w.weights[v]) << " dual " << format_rational(w.dual[v]) << "\n";
    std::cout << "support-full: " << (w.support_full ? "yes" : "no") << "\n";
  }
  return kOk;
}

struct SearchArgs {
  int n = 7;
  std::string c = "1/2";
  std::string checkpoint, resume;
  std::size_t checkpoint_every = 100000;
};

int cmd_search(const Globals& g, const SearchArgs& a) {
  SearchOptions opts;
  opts.deadline = g.deadline();
  opts.threads = thread_budget();
  opts.checkpoint_path = a.checkpoint;
  opts.checkpoint_every = a.checkpoint_every;
  opts.resume_path = a.resume;
  auto r = enumerate_extremal(a.n, parse_rational(a.c), opts);
  if (g.json()) {
    json found = json::array();
    for (const auto& f : r.found)
      found.push_back({{"n", f.graph.order()}, {"edges", f.graph.edges()}, {"optimum", format_rational(f.optimum)},
                       {"chi", f.chi}});
    std::cout << json{{"n_max", r.n_max}, {"c", format_rational(r.c)}, {"exhausted", r.exhausted},
                      {"graphs_per_order", r.graphs_per_order}, {"found", found}}
                     .dump(2)
              << "\n";
  } else {
    for (const auto& f : r.found) std::cout << f.to_line() << "\n";
    std::cerr << "locally bipartite graphs per order:";
    for (std::size_t i = 1; i < r.graphs_per_order.size(); ++i) std::cerr << " " << r.graphs_per_order[i];
    std::cerr << "\n";
  }
  return kOk;
}

json certificate_json(const DecompositionCertificate& c) {
  json parts = json::object();
  for (int i = 0; i < 7; ++i) {
    parts["D" + std::to_string(i)] = set_json(c.D[i]);
    parts["R" + std::to_string(i)] = set_json(c.R_parts[i]);
    parts["T" + std::to_string(i)] = set_json(c.T[i]);
  }
  parts["R"] = set_json(c.R);
  if (c.kind == DecompositionCertificate::Kind::H2PLUS) {
    parts["R502"] = set_json(c.R502);
    parts["Dstar"] = set_json(c.D_star);
  }
  json out{{"kind", c.kind == DecompositionCertificate::Kind::C7BAR ? "C7BAR" : "H2PLUS"},
           {"outcome", to_string(c.outcome)},
           {"anchor", c.anchor},
           {"sets", parts},
           {"S", c.s_value},
           {"size_audit", {{"lhs", c.size_audit_lhs}, {"rhs", c.size_audit_rhs}}},
           {"max_anchor_neighbours", c.max_anchor_neighbours},
           {"anchors_tried", c.anchors_tried}};
  if (!c.reason.empty()) out["reason"] = c.reason;
  if (c.succeeded()) out["map"] = c.map;
  if (c.colouring) out["colouring"] = c.colouring->colour;
  return out;
}

void print_certificate(const DecompositionCertificate& c) {
  std::cout << "outcome: " << to_string(c.outcome) << "\n";
  if (!c.reason.empty()) std::cout << "reason: " << c.reason << "\n";
  if (c.anchor.empty()) return;
  std::cout << "anchor: " << join(c.anchor) << "\n";
  for (int i = 0; i < 7; ++i)
    std::cout << "T" << i << " = D" << i << " " << c.D[i].to_string() << " + R" << i << " " << c.R_parts[i].to_string()
              << "\n";
  if (c.kind == DecompositionCertificate::Kind::H2PLUS) std::cout << "R502 " << c.R502.to_string() << "\n";
  std::cout << "S: " << c.s_value << "\n"
            << "size audit: " << c.size_audit_lhs << " <= " << c.size_audit_rhs << "\n";
  if (c.succeeded()) std::cout << "map: " << join(c.map) << "\n";
  if (c.colouring) std::cout << "colouring: " << c.colouring->to_string() << "\n";
}

int cmd_decompose(const Globals& g, const std::string& file, const std::string& kind) {
  Graph gr = load_graph(file);
  Deadline dl = g.deadline();
  bool c7 = kind == "c7bar" ||
            (kind == "auto" && find_subgraph(generate({FamilyTag::C7BAR}), gr, false, dl).has_value());
  auto cert = c7 ? decompose_c7bar(gr, dl) : decompose_h2plus(gr, dl);
  if (g.json()) std::cout << certificate_json(cert).dump(2) << "\n";
  else print_certificate(cert);
  return cert.succeeded() ? kOk : kNegative;
}

int cmd_verify_profile(const Globals& g, const std::string& file) {
  Graph gr = load_graph(file);
  auto r = verify_profile(gr, g.deadline());
  if (g.json()) {
    json out{{"ratio", format_rational(r.ratio)},
             {"range", r.range},
             {"certificate", r.certificate_kind},
             {"hard_failure", r.hard_failure},
             {"detail", r.detail}};
    if (r.colouring) out["colouring"] = r.colouring->colour;
    if (r.decomposition) out["decomposition"] = certificate_json(*r.decomposition);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "delta/n: " << format_rational(r.ratio) << "\nrange: " << r.range
              << "\ncertificate: " << r.certificate_kind << "\n"
              << r.detail << "\n";
    if (r.colouring) std::cout << "colouring: " << r.colouring->to_string() << "\n";
  }
  if (r.hard_failure) std::cerr << "HARD FAILURE: a certificate promised for this degree ratio was not produced\n";
  return r.hard_failure ? kNegative : kOk;
}

int cmd_verify_paper(const Globals& g, const std::vector<std::string>& only) {
  acceptance::Context ctx;
  if (g.timeout > 0) ctx.timeout_seconds = g.timeout;
  auto report = acceptance::verify_paper(ctx, only);
  if (g.json()) {
    json out = json::array();
    for (const auto& e : report.entries)
      out.push_back({{"claim", e.claim_id},
                     {"criterion", e.criterion},
                     {"status", acceptance::to_string(e.status)},
                     {"detail", e.detail},
                     {"seconds", e.seconds}});
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& e : report.entries) {
      std::ostringstream t;
      t.precision(3);
      t << std::fixed << e.seconds;
      std::cout << acceptance::to_string(e.status) << " " << e.claim_id << " (" << t.str() << " s): " << e.detail
                << "\n";
    }
  }
  return report.ok() ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for locally bipartite graphs"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--timeout", g.timeout, "Time limit in seconds (per claim for verify-paper)");

  std::string file, file2, id, kind = "auto", mode = "hom", verify_c;
  bool dot = false;
  int k = 3;
  SearchArgs search;
  std::vector<std::string> only;
  std::function<int()> action;

  auto* families = app.add_subcommand("families", "List the built-in families or print one");
  families->add_option("id", id, "Family id such as H2PLUS or DELTA(3)");
  families->add_flag("--dot", dot, "Print as Graphviz DOT");
  families->callback([&] { action = [&] { return cmd_families(g, id, dot); }; });

  const char* graph_help = "Graph file, '-' for stdin, or family:ID";
  auto* check = app.add_subcommand("check", "Local bipartiteness, twins and edge-maximality");
  check->add_option("graph", file, graph_help)->required();
  check->callback([&] { action = [&] { return cmd_check(g, file); }; });

  auto* hom = app.add_subcommand("hom", "Homomorphism or (induced) subgraph search");
  hom->add_option("from", file, graph_help)->required();
  hom->add_option("to", file2, graph_help)->required();
  hom->add_option("--mode", mode, "hom, subgraph or induced")->check(CLI::IsMember({"hom", "subgraph", "induced"}));
  hom->callback([&] { action = [&] { return cmd_hom(g, file, file2, mode); }; });

  auto* chi = app.add_subcommand("chi", "Chromatic number with a colouring");
  chi->add_option("graph", file, graph_help)->required();
  chi->callback([&] { action = [&] { return cmd_chi(g, file); }; });

  auto* colour = app.add_subcommand("colour", "Decide k-colourability");
  colour->add_option("graph", file, graph_help)->required();
  colour->add_option("-k", k, "Number of colours")->check(CLI::PositiveNumber);
  colour->callback([&] { action = [&] { return cmd_colour(g, file, k); }; });

  auto* weight = app.add_subcommand("weight", "Optimal blow-up weighting, or check a given weighting");
  weight->add_option("graph", file, "Graph file (weighted-graph file with --verify)")->required();
  weight->add_option("--verify", verify_c, "Check the file's weighting beats this rational c");
  weight->callback([&] { action = [&] { return cmd_weight(g, file, verify_c); }; });

  auto* srch = app.add_subcommand("search", "Enumerate twin-free edge-maximal locally bipartite graphs beating c");
  srch->add_option("-n", search.n, "Maximum order")->check(CLI::Range(1, kSearchMaxOrder));
  srch->add_option("-c", search.c, "Threshold as p/q");
  srch->add_option("--checkpoint", search.checkpoint, "Checkpoint file");
  srch->add_option("--checkpoint-every", search.checkpoint_every, "Canonical forms between checkpoints");
  srch->add_option("--resume", search.resume, "Resume from a checkpoint file");
  srch->callback([&] { action = [&] { return cmd_search(g, search); }; });

  auto* dec = app.add_subcommand("decompose", "Homomorphism certificate into C7bar or H2+");
  dec->add_option("graph", file, graph_help)->required();
  dec->add_option("--kind", kind, "auto, c7bar or h2plus")->check(CLI::IsMember({"auto", "c7bar", "h2plus"}));
  dec->callback([&] { action = [&] { return cmd_decompose(g, file, kind); }; });

  auto* prof = app.add_subcommand("verify-profile", "Certificate promised by the minimum-degree ratio");
  prof->add_option("graph", file, graph_help)->required();
  prof->callback([&] { action = [&] { return cmd_verify_profile(g, file); }; });

  auto* paper = app.add_subcommand("verify-paper", "Run the acceptance checks");
  paper->add_option("--only", only, "Claim ids, groups or criterion numbers")->delimiter(',');
  paper->callback([&] { action = [&] { return cmd_verify_paper(g, only); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  try {
    return action();
  } catch (const TimeoutError&) {
    std::cout << "SKIP: timeout after " << g.timeout << " s\n";
    return kTimeout;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
