#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gaingraph/gain_graph.hpp"

namespace gaingraph {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// On-disk form of a graph. Kept separate from GainGraph so files round-trip
// bit-for-bit: theta_pi is stored exactly as written until to_graph()
// normalizes it.
struct GraphRecord {
  int u = 0;
  int v = 0;
  double theta_pi = 0.0;
};

struct GraphDocument {
  int n = 0;
  std::vector<GraphRecord> edges;
  std::string name;  // optional; empty means absent

  static GraphDocument from_graph(const GainGraph& g, const std::string& name = "");
  GainGraph to_graph() const;
};

enum class GraphFormat {
  kAuto,      // .json extension or a leading '{' selects JSON
  kJson,      // {"n": ..., "edges": [{"u","v","theta_pi"}, ...], "name"?}
  kEdgeList,  // one "u v theta_pi" per line, '#' comments, optional "n=<k>"
};

GraphDocument parse_document(const std::string& text, GraphFormat format,
                             const std::string& origin = "<string>");
GraphDocument load_document(const std::string& path, GraphFormat format = GraphFormat::kAuto);

std::string serialize_document(const GraphDocument& doc, GraphFormat format = GraphFormat::kJson);
void save_document(const GraphDocument& doc, const std::string& path,
                   GraphFormat format = GraphFormat::kJson);

GainGraph load_graph(const std::string& path, GraphFormat format = GraphFormat::kAuto);

}  // namespace gaingraph
