#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qteich/coords.hpp"
#include "qteich/fatgraph.hpp"

namespace qteich {

class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Text graph format, one graph per file:
//   V <vertex-id>: <h1> <h2> <h3>     counterclockwise order at the vertex
//   E <label>: <hA> <hB>              the two half-edges of an edge
// '#' starts a comment; blank lines are ignored. save_graph emits the
// canonical form, which round-trips byte-exactly through load_graph.
inline FatGraph parse_graph_text(std::istream& in) {
  std::vector<std::pair<std::string, std::vector<std::string>>> cycles;
  std::vector<std::pair<std::string, std::string>> pairing;
  std::vector<std::string> labels;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    std::string name;
    if (!(ls >> name) || name.back() != ':')
      throw parse_error("expected '<id>:' after '" + tag + "'", lineno);
    name.pop_back();
    std::vector<std::string> rest;
    for (std::string tok; ls >> tok;) rest.push_back(tok);
    if (tag == "V") {
      if (rest.size() != 3)
        throw parse_error("vertex '" + name + "' must list exactly 3 half-edges", lineno);
      cycles.emplace_back(name, rest);
    } else if (tag == "E") {
      if (rest.size() != 2)
        throw parse_error("edge '" + name + "' must list exactly 2 half-edges", lineno);
      pairing.emplace_back(rest[0], rest[1]);
      labels.push_back(name);
    } else {
      throw parse_error("unknown line tag '" + tag + "'", lineno);
    }
  }
  return FatGraph::from_spec(cycles, pairing, labels);
}

inline std::string graph_text(const FatGraph& g) {
  std::ostringstream out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "V " << g.vertices()[v].name << ":";
    for (int h : g.vertex_cycle(v)) out << " " << g.half_name(h);
    out << "\n";
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [h1, h2] = g.edge_halves(e);
    out << "E " << g.edge_label(e) << ": " << g.half_name(h1) << " " << g.half_name(h2) << "\n";
  }
  return out.str();
}

inline FatGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
  return parse_graph_text(in);
}

inline void save_graph(const FatGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write graph file '" + path + "'");
  out << graph_text(g);
}

// Coordinate files: one `Z <edge-label> <decimal>` line per edge, written
// with 17 significant digits so values round-trip exactly.
inline EdgeCoordinates parse_coords_text(std::istream& in) {
  EdgeCoordinates c;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag != "Z") throw parse_error("unknown line tag '" + tag + "'", lineno);
    std::string label;
    double value;
    if (!(ls >> label >> value)) throw parse_error("expected 'Z <label> <value>'", lineno);
    if (c.count(label)) throw parse_error("duplicate coordinate for edge '" + label + "'", lineno);
    c[label] = value;
  }
  return c;
}

inline std::string coords_text(const EdgeCoordinates& c) {
  std::ostringstream out;
  char buf[64];
  for (const auto& [label, value] : c) {
    std::snprintf(buf, sizeof buf, "%.17g", value);
    out << "Z " << label << " " << buf << "\n";
  }
  return out.str();
}

inline EdgeCoordinates load_coords(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open coordinate file '" + path + "'");
  return parse_coords_text(in);
}

inline void save_coords(const EdgeCoordinates& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write coordinate file '" + path + "'");
  out << coords_text(c);
}

}  // namespace qteich
