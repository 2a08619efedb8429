#include "cutpoly/commands.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cutpoly/grobner.hpp"
#include "cutpoly/lattice.hpp"

namespace cutpoly {

namespace {

constexpr const char* kRouteSemigroup = "semigroup";
constexpr const char* kRouteLp = "lp";
constexpr const char* kRouteClosedForm = "closed-form";
constexpr const char* kRouteGbFVector = "gb-f-vector";

nlohmann::ordered_json counts_value(const std::vector<std::uint64_t>& counts) {
  return nlohmann::ordered_json(counts);
}

nlohmann::ordered_json big_list(const std::vector<BigInt>& v) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& x : v) j.push_back(big_value(x));
  return j;
}

void add_hstar_checks(RunReport& r, const std::string& route, const IntPolynomial& h) {
  r.add_polynomial("hstar", route, h);
  r.add("hstar_at_1", route, big_value(h.evaluate(1)));
  r.add("palindromic", route, is_palindromic(h));
  r.add("hibi_inequality", route, satisfies_hibi_inequality(h));
}

std::string counted(std::size_t n, const char* noun) {
  return std::to_string(n) + " " + noun + (n == 1 ? "" : "s");
}

std::string graph_name(const Graph& g) {
  return std::to_string(g.vertex_count()) + " vertices, " + counted(g.edge_count(), "edge");
}

}  // namespace

Graph GraphSpec::build() const {
  switch (kind) {
    case Kind::cycle: return cycle(a);
    case Kind::path: return path(a);
    case Kind::kbipartite: return complete_bipartite(a, b);
    case Kind::edge_list: {
      std::ifstream in(file);
      if (!in) throw GraphParseError(0, "cannot open " + file);
      return read_edge_list(in);
    }
  }
  throw std::logic_error("GraphSpec: bad kind");
}

std::string GraphSpec::describe() const {
  switch (kind) {
    case Kind::cycle: return "cycle C_" + std::to_string(a);
    case Kind::path: return "path with " + counted(static_cast<std::size_t>(a), "edge");
    case Kind::kbipartite: return "complete bipartite K_{" + std::to_string(a) + "," + std::to_string(b) + "}";
    case Kind::edge_list: return "edge list " + file;
  }
  return "?";
}

RunReport cmd_vertices(const GraphSpec& spec) {
  const Graph g = spec.build();
  RunReport r("vertices", spec.describe() + " (" + graph_name(g) + ")");
  const auto verts = cut_polytope_vertices(g);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& v : verts) rows.push_back(v.coords);
  const CutConfiguration cfg(g);
  std::vector<IntVector> cfg_rows = transpose(cfg.columns(), cfg.rows());
  r.add("vertex_count", "enumeration", verts.size());
  r.add("vertices", "enumeration", std::move(rows));
  r.add("configuration", "enumeration", cfg_rows);
  return r;
}

CountSequence cmd_counts(const GraphSpec& spec, CountMethod method, std::optional<int> max_dilate) {
  const CutConfiguration cfg(spec.build());
  const int d = polytope_dimension(cfg);
  const int m = max_dilate.value_or(d + 1);
  if (m < 0) throw std::invalid_argument("--max-dilate must be >= 0");
  return count_sequence(cfg, m, method);
}

RunReport cmd_hstar(const GraphSpec& spec, HstarMethod method, std::optional<int> max_dilate) {
  const Graph g = spec.build();
  const CutConfiguration cfg(g);
  const int d = polytope_dimension(cfg);
  const int m = max_dilate.value_or(d + 1);
  if (m < d)
    throw CostGuardError("dilate budget " + std::to_string(m) + " is below the dimension; h* needs counts for m = 0.." +
                         std::to_string(d) + " (" + std::to_string(d + 1) + " dilates; default " +
                         std::to_string(d + 2) + " with the vanishing check)");

  RunReport r("hstar", spec.describe() + " (" + graph_name(g) + ")");
  r.add("dimension", "rational-rank", d);
  r.add("lattice_rank", "hnf", lattice_basis(cfg).rank());
  r.add("max_dilate", "budget", m);

  std::optional<CountSequence> semi, lp;
  if (method != HstarMethod::lp) {
    semi = count_sequence(cfg, m, CountMethod::semigroup);
    r.add("counts", kRouteSemigroup, counts_value(semi->counts));
    add_hstar_checks(r, kRouteSemigroup, hstar_from_counts(*semi));
  }
  if (method != HstarMethod::semigroup) {
    lp = count_sequence(cfg, m, CountMethod::lp);
    const std::string key_prefix = method == HstarMethod::both ? "lp_" : "";
    r.add(key_prefix + "counts", kRouteLp, counts_value(lp->counts));
    const IntPolynomial h = hstar_from_counts(*lp);
    if (method == HstarMethod::both) {
      r.add_polynomial("lp_hstar", kRouteLp, h);
    } else {
      add_hstar_checks(r, kRouteLp, h);
    }
  }
  if (semi && lp) {
    nlohmann::ordered_json disagreements = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < semi->counts.size(); ++i)
      if (semi->counts[i] != lp->counts[i]) disagreements.push_back(i);
    r.add("disagreeing_dilates", "semigroup=lp", disagreements);
    r.verdict("agreement", "semigroup=lp", disagreements.empty());
  }
  return r;
}

RunReport cmd_hstar_from_counts(const CountSequence& cs, const std::string& source) {
  RunReport r("hstar", "count sequence " + source);
  r.add("dimension", "input", cs.dimension);
  r.add("counts", "input", counts_value(cs.counts));
  add_hstar_checks(r, "counts", hstar_from_counts(cs));
  return r;
}

RunReport cmd_closed_form(int n) {
  if (n < 4) throw std::invalid_argument("closed-form needs n >= 4");
  RunReport r("closed-form", "K_{2," + std::to_string(n - 2) + "}, n = " + std::to_string(n));
  const IntPolynomial a = eulerian(static_cast<unsigned>(n - 2));
  const IntPolynomial h = hstar_closed_form_k2m(static_cast<unsigned>(n));
  const BigInt f = factorial(static_cast<unsigned>(n - 2));
  const BigInt expected_volume = 2 * f * f;
  r.add_polynomial("eulerian_factor", kRouteClosedForm, a);
  r.add_polynomial("hstar", kRouteClosedForm, h);
  r.add("degree", kRouteClosedForm, h.degree());
  r.add("palindromic", kRouteClosedForm, is_palindromic(h));
  r.add("normalized_volume", kRouteClosedForm, big_value(h.evaluate(1)));
  r.add("expected_volume_2((n-2)!)^2", "factorial", big_value(expected_volume));
  r.verdict("volume_check", "closed-form=factorial", h.evaluate(1) == expected_volume);
  return r;
}

RunReport cmd_gb(int n, GbAction action) {
  if (n < 4) throw std::invalid_argument("gb needs n >= 4");
  const std::string input = "cut ideal of K_{2," + std::to_string(n - 2) + "}, n = " + std::to_string(n);
  switch (action) {
    case GbAction::list: {
      if (n > 10) throw CostGuardError("gb list: n must be <= 10");
      const PartitionRing ring(n);
      const auto gb = generate_gb(ring);
      RunReport r("gb list", input);
      r.add("binomial_count", "generated", gb.size());
      r.add("basis", "generated", nlohmann::ordered_json::parse(gb_json(ring, gb)));
      nlohmann::ordered_json pretty = nlohmann::ordered_json::array();
      for (const auto& g : gb) pretty.push_back(nlohmann::ordered_json::array({g.family, to_string(ring, g)}));
      r.add("binomials", "generated", std::move(pretty));
      return r;
    }
    case GbAction::verify: {
      const auto cert = buchberger_check(n);
      RunReport r("gb verify", input);
      r.add("binomials", "buchberger", cert.binomials);
      r.add("pairs_total", "buchberger", cert.pairs_total);
      r.add("pairs_coprime_skipped", "buchberger", cert.pairs_coprime_skipped);
      r.add("pairs_reduced", "buchberger", cert.pairs_reduced);
      nlohmann::ordered_json fails = nlohmann::ordered_json::array();
      for (const auto& f : cert.failures) fails.push_back({f.first, f.second});
      r.add("failing_pairs", "buchberger", std::move(fails));
      r.verdict("groebner_basis", "buchberger", cert.passed());
      return r;
    }
    case GbAction::fvector: {
      const auto f = f_vector(n);
      RunReport r("gb fvector", input);
      r.add("f_vector", kRouteGbFVector, big_list(f));
      r.add_polynomial("h", kRouteGbFVector, f_to_h(f, static_cast<unsigned>(2 * n - 4)));
      return r;
    }
    case GbAction::compare: {
      if (n > 6) throw CostGuardError("gb compare: the Ehrhart route needs n <= 6");
      RunReport r("gb compare", input);
      const IntPolynomial h_gb = f_to_h(f_vector(n), static_cast<unsigned>(2 * n - 4));
      const IntPolynomial h_closed = hstar_closed_form_k2m(static_cast<unsigned>(n));
      const CutConfiguration cfg(complete_bipartite(2, n - 2));
      const int d = polytope_dimension(cfg);
      const IntPolynomial h_ehrhart = hstar_from_counts(count_sequence(cfg, d + 1, CountMethod::semigroup));
      r.add_polynomial("hstar_gb", kRouteGbFVector, h_gb);
      r.add_polynomial("hstar_closed_form", kRouteClosedForm, h_closed);
      r.add_polynomial("hstar_ehrhart", kRouteSemigroup, h_ehrhart);
      r.verdict("agreement", "gb-f-vector=closed-form=semigroup", h_gb == h_closed && h_closed == h_ehrhart);
      return r;
    }
  }
  throw std::logic_error("cmd_gb: bad action");
}

// ---------------------------------------------------------------------------

namespace {

struct OutputOptions {
  bool json = false;
  bool timing = false;
  std::string out_file;
};

void add_output_options(CLI::App* sub, OutputOptions& o) {
  sub->add_flag("--json", o.json, "Emit the report as JSON");
  sub->add_flag("--timing", o.timing, "Add wall-clock time to the report");
  sub->add_option("--out", o.out_file, "Write output to FILE instead of stdout");
}

struct GraphOptions {
  int cycle_n = 0;
  int path_n = 0;
  std::vector<int> kbip;
  std::string edge_list;
  CLI::Option* cycle_opt = nullptr;
  CLI::Option* path_opt = nullptr;
  CLI::Option* kbip_opt = nullptr;
  CLI::Option* edge_opt = nullptr;

  bool given() const { return *cycle_opt || *path_opt || *kbip_opt || *edge_opt; }

  GraphSpec spec() const {
    int count = !!*cycle_opt + !!*path_opt + !!*kbip_opt + !!*edge_opt;
    if (count != 1)
      throw CLI::ValidationError("graph", "give exactly one of --cycle, --path, --kbipartite, --edge-list");
    GraphSpec s;
    if (*cycle_opt) s = {GraphSpec::Kind::cycle, cycle_n, 0, {}};
    if (*path_opt) s = {GraphSpec::Kind::path, path_n, 0, {}};
    if (*kbip_opt) s = {GraphSpec::Kind::kbipartite, kbip[0], kbip[1], {}};
    if (*edge_opt) s = {GraphSpec::Kind::edge_list, 0, 0, edge_list};
    return s;
  }
};

void add_graph_options(CLI::App* sub, GraphOptions& g) {
  g.cycle_opt = sub->add_option("--cycle", g.cycle_n, "Cycle C_n");
  g.path_opt = sub->add_option("--path", g.path_n, "Path with n edges");
  g.kbip_opt = sub->add_option("--kbipartite", g.kbip, "Complete bipartite K_{p,q}")->expected(2);
  g.edge_opt = sub->add_option("--edge-list", g.edge_list, "Edge-list file (first line m, then 'u v' lines)");
}

void emit(const std::string& text, const OutputOptions& o, std::ostream& out) {
  if (o.out_file.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out_file, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + o.out_file);
  f << text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact h*-polynomials of cut polytopes", "cutpoly"};
  app.require_subcommand(1);

  OutputOptions output;
  GraphOptions vertices_graph, counts_graph, hstar_graph;
  bool csv = false;
  std::string method = "semigroup";
  std::optional<int> max_dilate;
  std::string counts_file;
  int n = 0;
  std::string action;

  auto* vertices = app.add_subcommand("vertices", "Cut-polytope vertices and the configuration matrix");
  add_graph_options(vertices, vertices_graph);
  add_output_options(vertices, output);
  vertices->add_flag("--csv", csv, "Emit the vertices as CSV");

  auto* counts = app.add_subcommand("counts", "Normalized Ehrhart counts as {dimension, counts} JSON");
  add_graph_options(counts, counts_graph);
  add_output_options(counts, output);
  counts->add_option("--method", method, "semigroup or lp")->check(CLI::IsMember({"semigroup", "lp"}));
  counts->add_option("--max-dilate", max_dilate, "Largest dilate (default d + 1)");

  auto* hstar = app.add_subcommand("hstar", "h*-polynomial by Ehrhart counting");
  add_graph_options(hstar, hstar_graph);
  add_output_options(hstar, output);
  hstar->add_option("--method", method, "semigroup, lp or both")
      ->check(CLI::IsMember({"semigroup", "lp", "both"}));
  hstar->add_option("--max-dilate", max_dilate, "Largest dilate (default d + 1)");
  hstar->add_option("--counts", counts_file, "Read a count-sequence JSON instead of counting");

  auto* closed = app.add_subcommand("closed-form", "(x+1) A_{n-2}(x)^2 for K_{2,n-2}");
  closed->add_option("n", n, "Vertex count of K_{2,n-2}")->required();
  add_output_options(closed, output);

  auto* gb = app.add_subcommand("gb", "Groebner basis of the cut ideal of K_{2,n-2}");
  gb->add_option("n", n, "Vertex count of K_{2,n-2}")->required();
  gb->add_option("action", action, "list, verify, fvector or compare")
      ->required()
      ->check(CLI::IsMember({"list", "verify", "fvector", "compare"}));
  add_output_options(gb, output);

  std::string echo = "cutpoly";
  for (const auto& a : args) echo += " " + a;

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);

    const auto start = std::chrono::steady_clock::now();
    auto finish = [&](RunReport r) {
      r.set_command(echo);
      if (output.timing)
        r.add("elapsed_seconds", "wall-clock",
              std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
      emit(output.json ? r.to_json() : r.to_text(), output, out);
      return r.exit_code();
    };

    if (*vertices) {
      const GraphSpec spec = vertices_graph.spec();
      if (csv) {
        std::ostringstream os;
        write_vectors_csv(os, cut_polytope_vertices(spec.build()));
        emit(os.str(), output, out);
        return kExitOk;
      }
      return finish(cmd_vertices(spec));
    }
    if (*counts) {
      const auto cs = cmd_counts(counts_graph.spec(), method == "lp" ? CountMethod::lp : CountMethod::semigroup, max_dilate);
      emit(cs.to_json() + "\n", output, out);
      return kExitOk;
    }
    if (*hstar) {
      if (!counts_file.empty()) {
        if (hstar_graph.given()) throw CLI::ValidationError("--counts", "cannot be combined with a graph option");
        std::ifstream in(counts_file);
        if (!in) throw GraphParseError(0, "cannot open " + counts_file);
        std::stringstream buf;
        buf << in.rdbuf();
        return finish(cmd_hstar_from_counts(CountSequence::from_json(buf.str()), counts_file));
      }
      const HstarMethod m = method == "lp" ? HstarMethod::lp : method == "both" ? HstarMethod::both : HstarMethod::semigroup;
      return finish(cmd_hstar(hstar_graph.spec(), m, max_dilate));
    }
    if (*closed) return finish(cmd_closed_form(n));
    if (*gb) {
      const GbAction a = action == "list"     ? GbAction::list
                         : action == "verify" ? GbAction::verify
                         : action == "fvector" ? GbAction::fvector
                                               : GbAction::compare;
      return finish(cmd_gb(n, a));
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  } catch (const GraphParseError& e) {
    err << "cutpoly: parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const nlohmann::json::exception& e) {
    err << "cutpoly: parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    err << "cutpoly: invalid input: " << e.what() << '\n';
    return kExitParse;
  } catch (const CostGuardError& e) {
    err << "cutpoly: refused: " << e.what() << '\n';
    return kExitCostGuard;
  } catch (const VerificationError& e) {
    err << "cutpoly: verification failed: " << e.what() << '\n';
    return kExitVerification;
  }
  return kExitOk;
}

}  // namespace cutpoly
