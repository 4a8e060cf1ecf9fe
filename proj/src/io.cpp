#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "gaingraph/io.hpp"

namespace gaingraph {

namespace {

std::string format_theta(double theta_pi) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", theta_pi);
  return buf;
}

GraphFormat sniff(const std::string& text, const std::string& origin) {
  if (origin.size() >= 5 && origin.compare(origin.size() - 5, 5, ".json") == 0)
    return GraphFormat::kJson;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? GraphFormat::kJson : GraphFormat::kEdgeList;
  }
  return GraphFormat::kEdgeList;
}

GraphDocument parse_json(const std::string& text, const std::string& origin) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
  if (!j.is_object()) throw ParseError(origin + ": top level must be an object");

  GraphDocument doc;
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw ParseError(origin + ": missing or non-integer field 'n'");
  doc.n = j["n"].get<int>();
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError(origin + ": field 'name' must be a string");
    doc.name = j["name"].get<std::string>();
  }
  if (!j.contains("edges") || !j["edges"].is_array())
    throw ParseError(origin + ": missing or non-array field 'edges'");
  size_t index = 0;
  for (const auto& item : j["edges"]) {
    std::string where = origin + ": edges[" + std::to_string(index) + "]";
    if (!item.is_object()) throw ParseError(where + " must be an object");
    GraphRecord rec;
    if (!item.contains("u") || !item["u"].is_number_integer())
      throw ParseError(where + ": missing or non-integer field 'u'");
    if (!item.contains("v") || !item["v"].is_number_integer())
      throw ParseError(where + ": missing or non-integer field 'v'");
    if (!item.contains("theta_pi") || !item["theta_pi"].is_number())
      throw ParseError(where + ": missing or non-numeric field 'theta_pi'");
    rec.u = item["u"].get<int>();
    rec.v = item["v"].get<int>();
    rec.theta_pi = item["theta_pi"].get<double>();
    doc.edges.push_back(rec);
    ++index;
  }
  return doc;
}

GraphDocument parse_edge_list(const std::string& text, const std::string& origin) {
  GraphDocument doc;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int max_vertex = -1;
  bool have_n = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;  // blank or comment-only

    std::string where = origin + ":" + std::to_string(line_no);
    if (first.rfind("n=", 0) == 0) {
      try {
        doc.n = std::stoi(first.substr(2));
      } catch (const std::exception&) {
        throw ParseError(where + ": malformed vertex-count header '" + first + "'");
      }
      have_n = true;
      std::string extra;
      if (fields >> extra) throw ParseError(where + ": trailing content after header");
      continue;
    }

    GraphRecord rec;
    std::string v_text, theta_text, extra;
    if (!(fields >> v_text >> theta_text))
      throw ParseError(where + ": expected 'u v theta_pi'");
    if (fields >> extra) throw ParseError(where + ": trailing content '" + extra + "'");
    try {
      size_t used = 0;
      rec.u = std::stoi(first, &used);
      if (used != first.size()) throw std::invalid_argument(first);
      rec.v = std::stoi(v_text, &used);
      if (used != v_text.size()) throw std::invalid_argument(v_text);
      rec.theta_pi = std::stod(theta_text, &used);
      if (used != theta_text.size()) throw std::invalid_argument(theta_text);
    } catch (const std::exception&) {
      throw ParseError(where + ": malformed edge line '" + line + "'");
    }
    max_vertex = std::max({max_vertex, rec.u, rec.v});
    doc.edges.push_back(rec);
  }
  if (!have_n) doc.n = max_vertex + 1;
  return doc;
}

}  // namespace

GraphDocument GraphDocument::from_graph(const GainGraph& g, const std::string& graph_name) {
  GraphDocument doc;
  doc.n = g.vertex_count();
  doc.name = graph_name;
  for (const GainEdge& e : g.edges()) doc.edges.push_back({e.u, e.v, e.gain.theta_pi()});
  return doc;
}

GainGraph GraphDocument::to_graph() const {
  std::vector<GainEdge> edges;
  edges.reserve(this->edges.size());
  for (const GraphRecord& rec : this->edges)
    edges.push_back({rec.u, rec.v, UnitGain(rec.theta_pi)});
  return GainGraph(n, std::move(edges));
}

GraphDocument parse_document(const std::string& text, GraphFormat format,
                             const std::string& origin) {
  if (format == GraphFormat::kAuto) format = sniff(text, origin);
  return format == GraphFormat::kJson ? parse_json(text, origin) : parse_edge_list(text, origin);
}

GraphDocument load_document(const std::string& path, GraphFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream content;
  content << in.rdbuf();
  return parse_document(content.str(), format, path);
}

std::string serialize_document(const GraphDocument& doc, GraphFormat format) {
  if (format == GraphFormat::kAuto) format = GraphFormat::kJson;
  if (format == GraphFormat::kJson) {
    nlohmann::json j;
    j["n"] = doc.n;
    if (!doc.name.empty()) j["name"] = doc.name;
    j["edges"] = nlohmann::json::array();
    for (const GraphRecord& rec : doc.edges)
      j["edges"].push_back({{"u", rec.u}, {"v", rec.v}, {"theta_pi", rec.theta_pi}});
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  if (!doc.name.empty()) out << "# " << doc.name << "\n";
  out << "n=" << doc.n << "\n";
  for (const GraphRecord& rec : doc.edges)
    out << rec.u << " " << rec.v << " " << format_theta(rec.theta_pi) << "\n";
  return out.str();
}

void save_document(const GraphDocument& doc, const std::string& path, GraphFormat format) {
  if (format == GraphFormat::kAuto) {
    format = (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0)
                 ? GraphFormat::kJson
                 : GraphFormat::kEdgeList;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(path + ": cannot open file for writing");
  out << serialize_document(doc, format);
  if (!out) throw ParseError(path + ": write failed");
}

GainGraph load_graph(const std::string& path, GraphFormat format) {
  return load_document(path, format).to_graph();
}

}  // namespace gaingraph
