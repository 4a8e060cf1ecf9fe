#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <optional>
#include <tuple>
#include <vector>

#include "gaingraph/analysis.hpp"
#include "gaingraph/bounds.hpp"
#include "gaingraph/coefficients.hpp"
#include "gaingraph/generate.hpp"
#include "gaingraph/io.hpp"
#include "gaingraph/linalg.hpp"

namespace py = pybind11;
using namespace gaingraph;

namespace {

using EdgeTuple = std::tuple<int, int, double>;

GainGraph make_graph(int n, const std::vector<EdgeTuple>& edges) {
  std::vector<GainEdge> out;
  out.reserve(edges.size());
  for (const auto& [u, v, theta_pi] : edges) out.push_back({u, v, UnitGain(theta_pi)});
  return GainGraph(n, std::move(out));
}

std::vector<EdgeTuple> edge_tuples(const GainGraph& g) {
  std::vector<EdgeTuple> out;
  out.reserve(static_cast<size_t>(g.edge_count()));
  for (const GainEdge& e : g.edges()) out.emplace_back(e.u, e.v, e.gain.theta_pi());
  return out;
}

SwitchingFunction to_switching(const std::vector<double>& zeta) {
  SwitchingFunction out;
  out.reserve(zeta.size());
  for (double t : zeta) out.push_back(UnitGain(t));
  return out;
}

std::optional<std::vector<double>> to_angles(const std::optional<SwitchingFunction>& zeta) {
  if (!zeta) return std::nullopt;
  std::vector<double> out;
  out.reserve(zeta->size());
  for (UnitGain z : *zeta) out.push_back(z.theta_pi());
  return out;
}

Family family_from(const std::string& name) {
  if (name == "gnp") return Family::kGnp;
  if (name == "tree") return Family::kTree;
  if (name == "cycle") return Family::kCycle;
  if (name == "complete") return Family::kComplete;
  if (name == "complete-bipartite") return Family::kCompleteBipartite;
  if (name == "star-of-triangles") return Family::kStarOfTriangles;
  throw std::invalid_argument("unknown family '" + name + "'");
}

GainMode gain_mode_from(const std::string& name) {
  if (name == "uniform") return GainMode::kUniform;
  if (name == "fourth-roots") return GainMode::kFourthRoots;
  if (name == "constant") return GainMode::kConstant;
  throw std::invalid_argument("unknown gain mode '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(gainpy, m) {
  m.doc() = "Spectral analysis of complex unit gain graphs";

  py::class_<GainGraph>(m, "GainGraph",
                        "Undirected graph with a unit complex gain per edge, given as the "
                        "angle in units of pi")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &GainGraph::vertex_count)
      .def_property_readonly("m", &GainGraph::edge_count)
      .def("edges", &edge_tuples)
      .def("degree", &GainGraph::degree)
      .def("adjacent", &GainGraph::adjacent)
      .def("__repr__", [](const GainGraph& g) {
        return "GainGraph(n=" + std::to_string(g.vertex_count()) +
               ", m=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("eigenvalues",
        [](const GainGraph& g) { return eigenvalues(adjacency_matrix(g)).values(); },
        py::arg("graph"), "Real spectrum of the Hermitian gain adjacency matrix, descending");

  m.def("adjacency",
        [](const GainGraph& g) {
          ComplexMatrix a = adjacency_matrix(g);
          std::vector<std::vector<std::complex<double>>> rows(
              static_cast<size_t>(a.order()),
              std::vector<std::complex<double>>(static_cast<size_t>(a.order())));
          for (int i = 0; i < a.order(); ++i)
            for (int j = 0; j < a.order(); ++j)
              rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = a(i, j);
          return rows;
        },
        py::arg("graph"));

  m.def("char_poly",
        [](const GainGraph& g, bool combinatorial) {
          return (combinatorial ? char_coeffs_combinatorial(g) : char_poly_numeric(g))
              .coefficients();
        },
        py::arg("graph"), py::arg("combinatorial") = true,
        "Monic characteristic polynomial coefficients, highest degree first");

  m.def("perm_poly",
        [](const GainGraph& g, bool combinatorial) {
          return (combinatorial ? perm_coeffs_combinatorial(g) : perm_poly_numeric(g))
              .coefficients();
        },
        py::arg("graph"), py::arg("combinatorial") = true,
        "Monic permanental polynomial coefficients, highest degree first");

  m.def("permanent", [](const GainGraph& g) { return permanent(adjacency_matrix(g)); },
        py::arg("graph"));

  m.def("is_balanced", [](const GainGraph& g) { return is_balanced(g); }, py::arg("graph"));
  m.def("is_bipartite", [](const GainGraph& g) { return is_bipartite(g); }, py::arg("graph"));
  m.def("balance_potential",
        [](const GainGraph& g) { return to_angles(balance_potential(g)); }, py::arg("graph"),
        "Per-vertex angles certifying balance, or None");
  m.def("switching_equivalent",
        [](const GainGraph& a, const GainGraph& b) {
          return to_angles(switching_equivalent(a, b));
        },
        py::arg("first"), py::arg("second"),
        "Witness switching function as angles, or None");
  m.def("switched",
        [](const GainGraph& g, const std::vector<double>& zeta) {
          return switched(g, to_switching(zeta));
        },
        py::arg("graph"), py::arg("zeta"));
  m.def("negated", [](const GainGraph& g) { return negated(g); }, py::arg("graph"));
  m.def("underlying", [](const GainGraph& g) { return underlying(g); }, py::arg("graph"));

  m.def("bounds",
        [](const GainGraph& g) {
          BoundsReport r = bounds_report(g);
          py::dict d;
          d["lambda_1"] = r.lambda_1;
          d["lambda_n"] = r.lambda_n;
          d["sigma"] = r.sigma;
          d["lambda_1_interval"] = py::make_tuple(r.lambda_1_interval.lo, r.lambda_1_interval.hi);
          d["lambda_n_interval"] = py::make_tuple(r.lambda_n_interval.lo, r.lambda_n_interval.hi);
          d["triangle_lower_bound"] = r.triangle_lower_bound;
          d["degree_pair_lower_bound"] = r.degree_pair_lower_bound;
          d["all_satisfied"] = r.all_satisfied;
          return d;
        },
        py::arg("graph"));

  m.def("balance_report",
        [](const GainGraph& g) {
          BalanceReport r = rho_comparison(g);
          py::dict d;
          d["balanced"] = r.balanced;
          d["antibalanced"] = r.antibalanced;
          d["rho"] = r.rho_phi;
          d["rho_underlying"] = r.rho_g;
          d["radius_equal"] = r.radius_equal;
          d["cospectral_with_underlying"] = r.cospectral_with_underlying;
          return d;
        },
        py::arg("graph"), "Spectral radius comparison against the underlying graph");

  m.def("load", [](const std::string& path) { return load_graph(path); }, py::arg("path"));
  m.def("save",
        [](const GainGraph& g, const std::string& path) {
          save_document(GraphDocument::from_graph(g), path, GraphFormat::kAuto);
        },
        py::arg("graph"), py::arg("path"));

  m.def("generate",
        [](const std::string& family, int n, int q, double edge_prob, const std::string& gains,
           double theta_pi, std::uint64_t seed) {
          return generate_graph(
              {family_from(family), n, q, edge_prob, gain_mode_from(gains), theta_pi, seed});
        },
        py::arg("family"), py::arg("n"), py::arg("q") = 0, py::arg("edge_prob") = 0.5,
        py::arg("gains") = "uniform", py::arg("theta_pi") = 0.0, py::arg("seed") = 0,
        "Random graph families: gnp, tree, cycle, complete, complete-bipartite, "
        "star-of-triangles");
}
