#include "minconn/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace minconn {

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string strip(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::string to_graph6(const Graph& g) {
  if (g.n() > 62) {
    throw std::invalid_argument("graph6 writer limited to n <= 62, got n = " +
                                std::to_string(g.n()));
  }
  std::string out;
  out.push_back(static_cast<char>(g.n() + 63));
  // Upper triangle column by column: for j = 1..n-1 the bits (i, j), i < j.
  int bit = 5;
  char cur = 0;
  for (int j = 1; j < g.n(); ++j) {
    for (int i = 0; i < j; ++i) {
      if (g.has_edge(i, j)) cur |= static_cast<char>(1 << bit);
      if (--bit < 0) {
        out.push_back(static_cast<char>(cur + 63));
        bit = 5;
        cur = 0;
      }
    }
  }
  if (bit != 5) out.push_back(static_cast<char>(cur + 63));
  return out;
}

Graph from_graph6(const std::string& line) {
  std::string s = strip(line);
  if (s.empty()) throw ParseError("graph6: empty input");
  if (s[0] == '>') throw ParseError("graph6: header lines not supported");
  int n = s[0] - 63;
  if (n < 0 || n > 62) {
    throw ParseError("graph6: unsupported length byte (only n <= 62 handled)");
  }
  long long bits_needed = static_cast<long long>(n) * (n - 1) / 2;
  long long chars_needed = (bits_needed + 5) / 6;
  if (static_cast<long long>(s.size()) != 1 + chars_needed) {
    throw ParseError("graph6: expected " + std::to_string(1 + chars_needed) +
                     " bytes for n = " + std::to_string(n) + ", got " +
                     std::to_string(s.size()));
  }
  Graph g(n);
  long long index = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++index) {
      char c = s[1 + index / 6];
      if (c < 63 || c > 126) throw ParseError("graph6: byte out of range");
      int bit = (c - 63) >> (5 - index % 6) & 1;
      if (bit) g.add_edge(i, j);
    }
  }
  // Trailing pad bits must be zero.
  for (long long pad = bits_needed; pad < chars_needed * 6; ++pad) {
    char c = s[1 + pad / 6];
    if ((c - 63) >> (5 - pad % 6) & 1) {
      throw ParseError("graph6: nonzero padding bits");
    }
  }
  return g;
}

std::string to_dimacs(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.n() << " " << g.m() << "\n";
  for (const auto& [u, v] : g.edges()) {
    out << "e " << u + 1 << " " << v + 1 << "\n";
  }
  return out.str();
}

Graph from_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  long long m = -1;
  long long seen = 0;
  Graph g;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = strip(line);
    if (t.empty() || t[0] == 'c') continue;
    std::istringstream ls(t);
    std::string tag;
    ls >> tag;
    if (tag == "p") {
      if (n != -1) throw ParseError("dimacs: repeated problem line");
      std::string kind;
      if (!(ls >> kind >> n >> m) || (kind != "edge" && kind != "col")) {
        throw ParseError("dimacs: bad problem line at line " +
                         std::to_string(lineno));
      }
      if (n < 0 || m < 0) throw ParseError("dimacs: negative sizes");
      g = Graph(n);
    } else if (tag == "e") {
      if (n == -1) throw ParseError("dimacs: edge before problem line");
      int u, v;
      if (!(ls >> u >> v)) {
        throw ParseError("dimacs: bad edge line at line " +
                         std::to_string(lineno));
      }
      if (u < 1 || u > n || v < 1 || v > n) {
        throw ParseError("dimacs: endpoint out of range at line " +
                         std::to_string(lineno));
      }
      try {
        g.add_edge(u - 1, v - 1);
      } catch (const GraphError& err) {
        throw ParseError("dimacs: " + std::string(err.what()) + " at line " +
                         std::to_string(lineno));
      }
      ++seen;
    } else {
      throw ParseError("dimacs: unknown line tag '" + tag + "' at line " +
                       std::to_string(lineno));
    }
  }
  if (n == -1) throw ParseError("dimacs: missing problem line");
  if (seen != m) {
    throw ParseError("dimacs: problem line declares " + std::to_string(m) +
                     " edges, found " + std::to_string(seen));
  }
  return g;
}

std::string to_json_text(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.n();
  j["edges"] = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) {
    j["edges"].push_back({u, v});
  }
  return j.dump();
}

Graph from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& err) {
    throw ParseError("json: " + std::string(err.what()));
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges") ||
      !j["n"].is_number_integer() || !j["edges"].is_array()) {
    throw ParseError("json: expected {\"n\": int, \"edges\": [[u, v], ...]}");
  }
  int n = j["n"].get<int>();
  if (n < 0) throw ParseError("json: negative n");
  Graph g(n);
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw ParseError("json: each edge must be a pair of integers");
    }
    int u = e[0].get<int>();
    int v = e[1].get<int>();
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw ParseError("json: endpoint out of range");
    }
    try {
      g.add_edge(u, v);
    } catch (const GraphError& err) {
      throw ParseError("json: " + std::string(err.what()));
    }
  }
  return g;
}

std::string write_graph(const Graph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::graph6:
      return to_graph6(g) + "\n";
    case GraphFormat::dimacs:
      return to_dimacs(g);
    case GraphFormat::json:
      return to_json_text(g) + "\n";
  }
  throw ParseError("unknown graph format");
}

Graph read_graph(const std::string& text, GraphFormat format) {
  switch (format) {
    case GraphFormat::graph6:
      return from_graph6(text);
    case GraphFormat::dimacs:
      return from_dimacs(text);
    case GraphFormat::json:
      return from_json_text(text);
  }
  throw ParseError("unknown graph format");
}

GraphFormat detect_format(const std::string& path, const std::string& text) {
  if (ends_with(path, ".g6")) return GraphFormat::graph6;
  if (ends_with(path, ".dimacs") || ends_with(path, ".col")) {
    return GraphFormat::dimacs;
  }
  if (ends_with(path, ".json")) return GraphFormat::json;
  std::string t = strip(text);
  if (!t.empty() && t[0] == '{') return GraphFormat::json;
  if (!t.empty() && (t[0] == 'p' || t[0] == 'c')) return GraphFormat::dimacs;
  return GraphFormat::graph6;
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  return read_graph(text, detect_format(path, text));
}

void save_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open file for writing: " + path);
  out << write_graph(g, detect_format(path, ""));
}

}  // namespace minconn
