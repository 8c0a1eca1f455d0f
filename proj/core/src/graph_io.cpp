#include "mskkt/graph_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace mskkt {

namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& origin, long line, const std::string& message) {
  throw input_error(origin + ":" + std::to_string(line) + ": " + message);
}

int parse_label(const std::string& origin, long line, const std::string& token, int n) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(token, &pos);
  } catch (const std::exception&) {
    fail(origin, line, "expected a vertex label, got '" + token + "'");
  }
  if (pos != token.size()) fail(origin, line, "expected a vertex label, got '" + token + "'");
  if (v < 1 || (n > 0 && v > n)) {
    fail(origin, line, "vertex label " + std::to_string(v) + " out of range");
  }
  return v - 1;
}

Graph parse_dimacs(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  long lineno = 0;
  int n = 0;
  bool saw_problem = false;
  std::vector<std::pair<int, int>> edges;

  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;  // blank
    if (head == "c") continue;
    if (head == "p") {
      if (saw_problem) fail(origin, lineno, "duplicate problem line");
      std::string kind;
      long m = 0;
      if (!(ls >> kind >> n >> m) || kind != "edge" || n < 1) {
        fail(origin, lineno, "malformed problem line (expected 'p edge <n> <m>')");
      }
      saw_problem = true;
      continue;
    }
    if (head == "e") {
      if (!saw_problem) fail(origin, lineno, "edge before the problem line");
      std::string a, b, extra;
      if (!(ls >> a >> b) || (ls >> extra)) fail(origin, lineno, "malformed edge line");
      const int i = parse_label(origin, lineno, a, n);
      const int j = parse_label(origin, lineno, b, n);
      if (i == j) fail(origin, lineno, "loops not allowed");
      edges.emplace_back(i, j);
      continue;
    }
    fail(origin, lineno, "unrecognized line");
  }
  if (!saw_problem) fail(origin, lineno ? lineno : 1, "missing problem line");
  return Graph(n, edges);
}

Graph parse_edgelist(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  long lineno = 0;
  int n = 0;  // 0: take the max label seen
  std::vector<std::pair<int, int>> edges;

  bool first_content = true;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a)) continue;
    if (a[0] == '#') continue;
    if (first_content && a == "n") {
      first_content = false;
      if (!(ls >> b) || (ls >> extra)) {
        fail(origin, lineno, "malformed header (expected 'n <count>')");
      }
      try {
        std::size_t pos = 0;
        n = std::stoi(b, &pos);
        if (pos != b.size() || n < 1) throw std::invalid_argument(b);
      } catch (const std::exception&) {
        fail(origin, lineno, "vertex count must be a positive integer, got '" + b + "'");
      }
      continue;
    }
    first_content = false;
    if (!(ls >> b) || (ls >> extra)) fail(origin, lineno, "malformed edge line (expected 'i j')");
    const int i = parse_label(origin, lineno, a, n);
    const int j = parse_label(origin, lineno, b, n);
    if (i == j) fail(origin, lineno, "loops not allowed");
    edges.emplace_back(i, j);
  }
  int max_label = n;
  for (auto& [i, j] : edges) max_label = std::max({max_label, i + 1, j + 1});
  if (max_label < 1) throw input_error(origin + ": no vertices");
  return Graph(max_label, edges);
}

Graph parse_json_graph(const std::string& text, const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw input_error(origin + ": invalid JSON: " + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw input_error(origin + ": expected an object with \"n\" and \"edges\"");
  }
  if (!j["n"].is_number_integer() || j["n"].get<long>() < 1) {
    throw input_error(origin + ": \"n\" must be a positive integer");
  }
  const int n = j["n"].get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw input_error(origin + ": edges must be pairs [i, j]");
    }
    const long a = e[0].get<long>(), b = e[1].get<long>();
    if (a < 1 || a > n || b < 1 || b > n) {
      throw input_error(origin + ": edge [" + std::to_string(a) + "," + std::to_string(b) +
                        "] out of range");
    }
    if (a == b) throw input_error(origin + ": loops not allowed");
    edges.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
  }
  return Graph(n, edges);
}

GraphFormat sniff(const std::string& path, const std::string& text) {
  auto ends_with = [&](const std::string& suffix) {
    return path.size() >= suffix.size() &&
           path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (ends_with(".json")) return GraphFormat::Json;
  if (ends_with(".col") || ends_with(".dimacs") || ends_with(".clq")) return GraphFormat::Dimacs;
  for (char ch : text) {
    if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') continue;
    if (ch == '{') return GraphFormat::Json;
    if (ch == 'c' || ch == 'p' || ch == 'e') return GraphFormat::Dimacs;
    break;
  }
  return GraphFormat::EdgeList;
}

}  // namespace

GraphFormat graph_format_from_name(const std::string& name) {
  if (name == "dimacs") return GraphFormat::Dimacs;
  if (name == "edgelist") return GraphFormat::EdgeList;
  if (name == "json") return GraphFormat::Json;
  if (name == "auto") return GraphFormat::Auto;
  throw input_error("unknown graph format '" + name + "' (dimacs|edgelist|json)");
}

std::string graph_format_name(GraphFormat fmt) {
  switch (fmt) {
    case GraphFormat::Auto: return "auto";
    case GraphFormat::Dimacs: return "dimacs";
    case GraphFormat::EdgeList: return "edgelist";
    case GraphFormat::Json: return "json";
  }
  return "?";
}

Graph parse_graph_text(const std::string& text, GraphFormat fmt, const std::string& origin) {
  if (fmt == GraphFormat::Auto) fmt = sniff(origin, text);
  try {
    switch (fmt) {
      case GraphFormat::Dimacs: return parse_dimacs(text, origin);
      case GraphFormat::EdgeList: return parse_edgelist(text, origin);
      case GraphFormat::Json: return parse_json_graph(text, origin);
      default: throw input_error("unresolved graph format");
    }
  } catch (const std::invalid_argument& e) {
    throw input_error(origin + ": " + e.what());
  }
}

Graph parse_graph(const std::string& path, GraphFormat fmt) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph_text(buf.str(), fmt, path);
}

}  // namespace mskkt
