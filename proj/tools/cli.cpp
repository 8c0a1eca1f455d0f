#include "cli.hpp"

#include "mskkt/graph_io.hpp"
#include "mskkt/kkt.hpp"
#include "mskkt/replicator.hpp"
#include "mskkt/structure.hpp"
#include "mskkt/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

namespace mskkt::cli {

namespace {

using ojson = nlohmann::ordered_json;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fnv1a64(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "0x%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ojson json_labels(const VertexSet& s) {
  ojson arr = ojson::array();
  for (int v : s) arr.push_back(v + 1);
  return arr;
}

ojson json_rvec(const RatVec& v) {
  ojson arr = ojson::array();
  for (const Rat& r : v) arr.push_back(rational_string(r));
  return arr;
}

ojson json_point(const SimplexPoint& x) { return json_rvec(x.coords()); }

ojson json_fvec(const std::vector<double>& v) {
  ojson arr = ojson::array();
  for (double d : v) arr.push_back(fmt17(d));
  return arr;
}

struct LoadedGraph {
  Graph graph;
  std::string path;
  std::string format;
  std::string hash;
  std::size_t bytes = 0;
};

LoadedGraph load_graph(const std::string& path, const std::string& format_name) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const GraphFormat fmt = graph_format_from_name(format_name);
  Graph g = parse_graph_text(text, fmt, path);
  return LoadedGraph{std::move(g), path, format_name, fnv1a64(text), text.size()};
}

ojson graph_summary(const LoadedGraph& lg) {
  const Graph& g = lg.graph;
  ojson degrees = ojson::array();
  for (int d : g.degrees()) degrees.push_back(d);
  const auto cliques = maximal_cliques(g);
  std::size_t omega = 0;
  for (const auto& c : cliques) omega = std::max(omega, c.size());
  ojson j;
  j["path"] = lg.path;
  j["format"] = lg.format;
  j["bytes"] = lg.bytes;
  j["fnv1a64"] = lg.hash;
  j["n"] = g.vertex_count();
  j["edge_count"] = g.edge_count();
  j["degree_sequence"] = degrees;
  j["clique_number"] = omega;
  j["maximal_clique_count"] = cliques.size();
  return j;
}

ojson report_skeleton(const LoadedGraph& lg, const std::string& command) {
  ojson report;
  report["schema"] = kReportSchema;
  report["tool"] = ojson{{"name", "mskkt"}, {"version", kVersion}};
  report["command"] = command;
  report["input"] = graph_summary(lg);
  return report;
}

void emit(const ojson& report, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << report.dump(2) << "\n";
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw input_error("cannot open output file '" + out_path + "'");
  f << report.dump(2) << "\n";
}

SimplexPoint parse_point_arg(const std::string& text, int n) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  RatVec coords;
  coords.reserve(parts.size());
  for (const std::string& p : parts) coords.push_back(parse_rational(p));
  if (static_cast<int>(coords.size()) != n) {
    throw input_error("point has " + std::to_string(coords.size()) + " coordinates, graph has " +
                      std::to_string(n) + " vertices");
  }
  try {
    return SimplexPoint(std::move(coords));
  } catch (const std::invalid_argument& e) {
    throw input_error(std::string("point is not on the simplex: ") + e.what());
  }
}

VertexFamily parse_family_arg(const std::string& text, int n) {
  std::vector<VertexSet> classes;
  VertexSet cur;
  auto push_label = [&](const std::string& tok) {
    if (tok.empty()) throw input_error("malformed family spec '" + text + "'");
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw input_error("malformed family spec: bad label '" + tok + "'");
    }
    if (pos != tok.size()) throw input_error("malformed family spec: bad label '" + tok + "'");
    if (v < 1 || v > n) throw input_error("family label " + std::to_string(v) + " out of range");
    cur.push_back(v - 1);
  };
  std::string tok;
  for (char ch : text) {
    if (ch == ',' || ch == '|') {
      push_label(tok);
      tok.clear();
      if (ch == '|') {
        classes.push_back(normalized_vertex_set(cur));
        cur.clear();
      }
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      tok += ch;
    }
  }
  push_label(tok);
  classes.push_back(normalized_vertex_set(cur));
  try {
    return VertexFamily(std::move(classes));
  } catch (const std::invalid_argument& e) {
    throw input_error(std::string("malformed family spec: ") + e.what());
  }
}

// ---- classify ----

int cmd_classify(const LoadedGraph& lg, const std::string& c_text, const std::string& point_text,
                 const std::string& out_path, std::ostream& out) {
  const Rat c = parse_rational(c_text);
  const SimplexPoint x = parse_point_arg(point_text, lg.graph.vertex_count());
  const KktCertificate cert = classify({lg.graph, c}, x);

  ojson report = report_skeleton(lg, "classify");
  ojson res;
  res["c"] = rational_string(c);
  res["point"] = json_point(x);
  res["support"] = json_labels(x.support());
  res["verdict"] = verdict_name(cert.verdict);
  res["lambda"] = rational_string(cert.lambda);
  res["mu"] = json_rvec(cert.mu);
  res["witness"] = cert.witness ? ojson(*cert.witness + 1) : ojson(nullptr);
  report["result"] = std::move(res);
  emit(report, out_path, out);
  return 0;
}

// ---- scan ----

int scan_cap() {
  if (const char* env = std::getenv("MSKKT_MAX_N")) {
    try {
      std::size_t pos = 0;
      const int v = std::stoi(env, &pos);
      if (pos == std::string(env).size() && v >= 1) return v;
    } catch (const std::exception&) {
    }
    throw input_error("MSKKT_MAX_N must be a positive integer");
  }
  return 12;
}

// Size-ordered enumeration so small supports print first.
void enumerate_supports(int n, int max_size, const std::function<void(const VertexSet&)>& fn) {
  VertexSet current;
  for (int size = 1; size <= std::min(n, max_size); ++size) {
    std::function<void(int, int)> fill = [&](int next, int want) {
      if (want == 0) {
        fn(current);
        return;
      }
      for (int v = next; v <= n - want; ++v) {
        current.push_back(v);
        fill(v + 1, want - 1);
        current.pop_back();
      }
    };
    fill(0, size);
  }
}

int cmd_scan(const LoadedGraph& lg, const std::string& c_text, int max_support,
             const std::string& out_path, std::ostream& out) {
  const Rat c = parse_rational(c_text);
  const Graph& g = lg.graph;
  const int n = g.vertex_count();
  if (max_support == 0 && n > scan_cap()) {
    throw input_error("graph has " + std::to_string(n) +
                      " vertices, above the exhaustive scan cap of " + std::to_string(scan_cap()) +
                      "; pass --max-support to bound the enumerated support size");
  }
  const int size_cap = max_support > 0 ? max_support : n;

  ojson realized = ojson::array();
  ojson absent = ojson::array();
  long scanned = 0;
  const ParametricProgram prog{g, c};

  enumerate_supports(n, size_cap, [&](const VertexSet& s) {
    ++scanned;
    const SupportSolveResult res = solve_on_support(prog, s);
    if (res.realizes_support()) {
      ojson entry;
      entry["support"] = json_labels(s);
      entry["status"] = res.status == SolveStatus::Unique ? "UNIQUE" : "NON_UNIQUE";
      entry["lambda"] = rational_string(res.lambda);
      ojson pts = ojson::array();
      for (const SimplexPoint& x : res.points) {
        ojson p;
        p["coords"] = json_point(x);
        p["verdict"] = verdict_name(classify(prog, x).verdict);
        pts.push_back(std::move(p));
      }
      entry["points"] = std::move(pts);
      if (res.status == SolveStatus::NonUnique) {
        ojson fam;
        fam["dimension"] = res.family_generators.size();
        fam["basis"] = json_rvec(res.family_basis);
        ojson gens = ojson::array();
        for (const RatVec& v : res.family_generators) gens.push_back(json_rvec(v));
        fam["generators"] = std::move(gens);
        ojson verts = ojson::array();
        for (const SimplexPoint& v : res.family_vertices) verts.push_back(json_point(v));
        fam["vertices"] = std::move(verts);
        entry["family"] = std::move(fam);
      }
      realized.push_back(std::move(entry));
    } else {
      ojson entry;
      entry["support"] = json_labels(s);
      entry["obstruction"] = nullptr;
      std::optional<Obstruction> obs;
      if (c == 0) obs = find_obstruction(g, s, ObstructionCase::BlocksCZero);
      if (c == 1) obs = find_obstruction(g, s, ObstructionCase::BlocksCOne);
      if (obs) {
        ojson o;
        o["case"] = obs->kind == ObstructionCase::BlocksCOne ? "a" : "b";
        o["blocks_c"] = obs->kind == ObstructionCase::BlocksCOne ? "1" : "0";
        o["witness"] = ojson::array({obs->witness[0] + 1, obs->witness[1] + 1, obs->witness[2] + 1});
        entry["obstruction"] = std::move(o);
      }
      absent.push_back(std::move(entry));
    }
  });

  ojson report = report_skeleton(lg, "scan");
  ojson res;
  res["c"] = rational_string(c);
  res["max_support"] = max_support > 0 ? ojson(max_support) : ojson(nullptr);
  res["supports_scanned"] = scanned;
  res["realized_count"] = realized.size();
  res["realized"] = std::move(realized);
  res["absent"] = std::move(absent);
  report["result"] = std::move(res);
  emit(report, out_path, out);
  return 0;
}

// ---- replicator ----

// 53-bit uniform in [0, 1); hand-rolled so reports are stable across stdlibs.
double canonical_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
}

std::vector<double> random_interior_point(std::mt19937_64& rng, int n) {
  std::vector<double> x(n);
  double sum = 0.0;
  for (double& v : x) {
    double u;
    do {
      u = canonical_uniform(rng);
    } while (u <= 0.0);
    v = -std::log(u);
    sum += v;
  }
  for (double& v : x) v /= sum;
  return x;
}

int cmd_replicator(const LoadedGraph& lg, double c, int starts, std::uint64_t seed, double t_end,
                   double dt, const std::string& trace_path, const std::string& out_path,
                   std::ostream& out) {
  if (starts < 0) throw input_error("--starts must be nonnegative");
  if (dt <= 0.0) throw input_error("--dt must be positive");
  if (t_end <= 0.0) throw input_error("--t-end must be positive");

  const Graph& g = lg.graph;
  std::mt19937_64 rng(seed);
  IntegrateOptions options;
  options.t_end = t_end;
  options.dt = dt;
  options.record_stride =
      static_cast<int>(std::max<long>(1, static_cast<long>(std::ceil(t_end / dt)) / 1000));

  std::ofstream trace;
  if (!trace_path.empty()) {
    trace.open(trace_path, std::ios::binary);
    if (!trace) throw input_error("cannot open trace file '" + trace_path + "'");
  }

  ojson runs = ojson::array();
  for (int k = 0; k < starts; ++k) {
    std::vector<double> x0 = random_interior_point(rng, g.vertex_count());
    const Trajectory t = integrate(g, c, x0, options);
    const double residual = kkt_residual(g, c, t.terminal());
    const ApproxCertificate cert = classify_approx(g, c, t.terminal());

    ojson run;
    run["start_index"] = k;
    run["start"] = json_fvec(x0);
    run["terminal"] = json_fvec(t.terminal());
    run["steps"] = t.steps;
    run["converged_early"] = t.converged;
    run["residual"] = fmt17(residual);
    run["objective_first"] = fmt17(t.objectives.front());
    run["objective_last"] = fmt17(t.objectives.back());
    run["lyapunov_violations"] = t.lyapunov_violations;
    switch (cert.verdict) {
      case ApproxVerdict::Kkt: run["verdict"] = "APPROX_KKT"; break;
      case ApproxVerdict::GeneralizedOnly: run["verdict"] = "APPROX_GENERALIZED_ONLY"; break;
      case ApproxVerdict::NotStationary: run["verdict"] = "APPROX_NOT_STATIONARY"; break;
    }
    runs.push_back(std::move(run));

    if (trace.is_open()) {
      trace << "# start " << k << "\n";
      write_trajectory_records(trace, t);
    }
  }

  ojson report = report_skeleton(lg, "replicator");
  ojson res;
  res["c"] = fmt17(c);
  res["starts"] = starts;
  res["seed"] = seed;
  res["t_end"] = fmt17(t_end);
  res["dt"] = fmt17(dt);
  res["runs"] = std::move(runs);
  report["result"] = std::move(res);
  emit(report, out_path, out);
  return 0;
}

// ---- structure ----

ojson json_density(const DensityMatrix& dm) {
  ojson rows = ojson::array();
  for (const RatVec& row : dm.d) rows.push_back(json_rvec(row));
  return rows;
}

std::vector<VertexSet> periphery_components(const Graph& g, const VertexSet& periphery) {
  std::vector<VertexSet> comps;
  std::vector<bool> seen(g.vertex_count(), false);
  for (int root : periphery) {
    if (seen[root]) continue;
    VertexSet comp;
    std::vector<int> stack{root};
    seen[root] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int u : periphery) {
        if (!seen[u] && g.adjacent(v, u)) {
          seen[u] = true;
          stack.push_back(u);
        }
      }
    }
    comps.push_back(normalized_vertex_set(comp));
  }
  return comps;
}

int cmd_structure(const LoadedGraph& lg, const std::string& c_text, const std::string& family_text,
                  const std::string& out_path, std::ostream& out) {
  const Rat c = parse_rational(c_text);
  const Graph& g = lg.graph;
  const VertexFamily fam = parse_family_arg(family_text, g.vertex_count());
  const ParametricProgram prog{g, c};

  ojson report = report_skeleton(lg, "structure");
  ojson res;
  res["c"] = rational_string(c);
  ojson classes = ojson::array();
  for (const VertexSet& cls : fam.classes()) classes.push_back(json_labels(cls));
  res["family"] = std::move(classes);

  const bool highly = is_highly_regular(g, fam);
  res["highly_regular"] = highly;

  const ReducedProgram rp = reduce(g, c, fam);
  res["density_matrix"] = json_density(rp.dm);
  ojson sizes = ojson::array();
  for (int s : rp.dm.class_sizes) sizes.push_back(s);
  res["class_sizes"] = std::move(sizes);

  // Interior solutions of the reduced condition, lifted and re-certified
  // exactly against the full program.
  {
    const StationaryFamily sol = solve_reduced(rp);
    ojson block;
    if (!sol.consistent) {
      block["status"] = "EMPTY";
      block["solutions"] = ojson::array();
    } else {
      block["status"] = sol.dimension() == 0 ? "UNIQUE" : "NON_UNIQUE";
      ojson list = ojson::array();
      if (sol.interior) {
        ojson one;
        one["y"] = json_rvec(*sol.interior);
        const SimplexPoint lifted = lift_from_family(g.vertex_count(), fam, *sol.interior);
        one["reduced_kkt"] = reduced_kkt_check(rp, *sol.interior);
        one["lift"] = json_point(lifted);
        one["lift_verdict"] = verdict_name(classify(prog, lifted).verdict);
        list.push_back(std::move(one));
      }
      block["solutions"] = std::move(list);
    }
    res["reduced_interior"] = std::move(block);
  }

  if (fam.size() == 2 && highly) {
    const TwoBlockReport tb = two_block_analysis(g, fam.cls(0), fam.cls(1));
    ojson j;
    j["alpha"] = rational_string(tb.alpha);
    j["beta"] = rational_string(tb.beta);
    j["regular_case"] = tb.regular_case;
    if (tb.regular_case) {
      j["c_star"] = rational_string(tb.c_star);
    } else {
      j["interval"] = ojson::array({rational_string(tb.a), rational_string(tb.b)});
    }
    switch (tb.segment_membership(c)) {
      case TwoBlockReport::Segment::WholeSegment: j["segment"] = "WHOLE_SEGMENT"; break;
      case TwoBlockReport::Segment::ThreePoints: j["segment"] = "ENDPOINTS_AND_UNION_VECTOR"; break;
      case TwoBlockReport::Segment::EndpointsOnly: j["segment"] = "ENDPOINTS_ONLY"; break;
      case TwoBlockReport::Segment::EndpointsWithInterior:
        j["segment"] = "ENDPOINTS_AND_INTERIOR_POINT";
        break;
    }
    const std::optional<SimplexPoint> xc = tb.interior_point(c);
    j["x_c"] = xc ? json_point(*xc) : ojson(nullptr);
    res["two_block"] = std::move(j);
  } else if (fam.size() == 2) {
    res["two_block"] = nullptr;
  }

  // Star and shared-core analyses when the family shape admits them.
  res["generalized_star"] = nullptr;
  res["shared_core"] = nullptr;
  if (fam.size() == 2) {
    for (int orientation = 0; orientation < 2; ++orientation) {
      const VertexSet& core = fam.cls(orientation == 0 ? 1 : 0);
      const VertexSet& periphery = fam.cls(orientation == 0 ? 0 : 1);
      const std::optional<GeneralizedStar> star = detect_generalized_star(g, core, periphery);
      if (!star) continue;
      ojson j;
      j["core"] = json_labels(star->core);
      j["periphery"] = json_labels(star->periphery);
      j["periphery_degree"] = star->periphery_degree;
      j["b"] = star->b;
      if (c < 1 || c > Rat(star->b)) {
        const SimplexPoint x = genstar_kkt_point(g, *star, c);
        j["point"] = json_point(x);
        j["point_verdict"] = verdict_name(classify(prog, x).verdict);
      } else {
        j["point"] = nullptr;
        j["note"] = "no closed-form point for c in [1, b]";
      }
      res["generalized_star"] = std::move(j);

      // Shared-core configuration: petals = components of the periphery that
      // extend the core to cliques.
      const std::vector<VertexSet> comps = periphery_components(g, star->periphery);
      if (comps.size() >= 2) {
        std::vector<VertexSet> cliques;
        bool all_cliques = true;
        for (const VertexSet& comp : comps) {
          VertexSet cl = set_union(star->core, comp);
          if (!is_clique(g, cl)) {
            all_cliques = false;
            break;
          }
          cliques.push_back(std::move(cl));
        }
        if (all_cliques) {
          ojson sc;
          ojson cl_json = ojson::array();
          for (const VertexSet& cl : cliques) cl_json.push_back(json_labels(cl));
          sc["cliques"] = std::move(cl_json);
          try {
            const SharedCoreReport rep = shared_core_analysis(g, cliques, c);
            sc["c0"] = rational_string(rep.c0);
            sc["b"] = rep.b;
            sc["point"] = json_point(rep.point);
            sc["outside_hull"] = rep.outside_hull;
          } catch (const std::invalid_argument& e) {
            sc["note"] = e.what();
          }
          res["shared_core"] = std::move(sc);
        }
      }
      break;
    }
  }

  report["result"] = std::move(res);
  emit(report, out_path, out);
  return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"KKT analysis of the parametric clique program on the simplex"};
  app.require_subcommand(1);

  std::string graph_path, format = "auto", out_path;
  std::string c_text, point_text, family_text;
  int max_support = 0;
  int starts = 1;
  std::uint64_t seed = 0;
  double c_float = 0.5, t_end = 500.0, dt = 0.01;
  std::string trace_path;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("graph", graph_path, "graph file (dimacs | edgelist | json)")->required();
    sub->add_option("--format", format, "input format (default: auto-detect)");
    sub->add_option("--out", out_path, "write the JSON report to a file instead of stdout");
  };

  CLI::App* classify_cmd = app.add_subcommand("classify", "exact KKT classification of a point");
  add_common(classify_cmd);
  classify_cmd->add_option("--c", c_text, "parameter c as a rational 'a/b' or integer")->required();
  classify_cmd->add_option("--point", point_text, "comma-separated rational coordinates")->required();

  CLI::App* scan_cmd = app.add_subcommand("scan", "enumerate supports carrying generalized KKT points");
  add_common(scan_cmd);
  scan_cmd->add_option("--c", c_text, "parameter c as a rational 'a/b' or integer")->required();
  scan_cmd->add_option("--max-support", max_support, "bound the enumerated support size");

  CLI::App* repl_cmd = app.add_subcommand("replicator", "integrate the replicator dynamics");
  add_common(repl_cmd);
  repl_cmd->add_option("--c", c_float, "parameter c (float)")->required();
  repl_cmd->add_option("--starts", starts, "number of random interior starting points");
  repl_cmd->add_option("--seed", seed, "RNG seed");
  repl_cmd->add_option("--t-end", t_end, "integration horizon");
  repl_cmd->add_option("--dt", dt, "integration step");
  repl_cmd->add_option("--trace", trace_path, "write line-oriented trajectory records to a file");

  CLI::App* struct_cmd = app.add_subcommand("structure", "density matrices, reductions, stars");
  add_common(struct_cmd);
  struct_cmd->add_option("--c", c_text, "parameter c as a rational 'a/b' or integer")->required();
  struct_cmd->add_option("--family", family_text, "vertex family, e.g. \"1,2|3\"")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    const LoadedGraph lg = load_graph(graph_path, format);
    if (classify_cmd->parsed()) return cmd_classify(lg, c_text, point_text, out_path, out);
    if (scan_cmd->parsed()) return cmd_scan(lg, c_text, max_support, out_path, out);
    if (repl_cmd->parsed())
      return cmd_replicator(lg, c_float, starts, seed, t_end, dt, trace_path, out_path, out);
    if (struct_cmd->parsed()) return cmd_structure(lg, c_text, family_text, out_path, out);
    err << "error: no subcommand\n";
    return 2;
  } catch (const input_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_command(args, std::cout, std::cerr);
}

}  // namespace mskkt::cli
